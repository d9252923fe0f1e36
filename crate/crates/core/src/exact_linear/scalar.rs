use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient field: `GF(p)` for a prime `p`, or the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldDescriptor(Kind);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Kind {
    Prime(u64),
    Rationals,
}

/// Largest supported modulus; keeps every product of residues inside `u64`.
const MAX_PRIME: u64 = u32::MAX as u64;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldDescriptor {
    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(FieldDescriptor(Kind::Prime(p)))
    }

    pub fn rationals() -> Self {
        FieldDescriptor(Kind::Rationals)
    }

    /// `Some(p)` for `GF(p)`, `None` for the rationals.
    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            Kind::Prime(p) => Some(p),
            Kind::Rationals => None,
        }
    }

    /// The characteristic, `0` for the rationals.
    pub fn characteristic(&self) -> u64 {
        self.modulus().unwrap_or(0)
    }

    pub fn is_prime_field(&self) -> bool {
        self.modulus().is_some()
    }

    /// Errors with [`Error::UnsupportedField`] unless this is a prime field;
    /// returns the modulus otherwise.
    pub fn require_prime(&self) -> Result<u64> {
        self.modulus()
            .ok_or_else(|| Error::UnsupportedField(self.to_string()))
    }

    pub fn zero(&self) -> Scalar {
        match self.0 {
            Kind::Prime(p) => Scalar(Repr::Mod { value: 0, p }),
            Kind::Rationals => Scalar(Repr::Rat(BigRational::zero())),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self.0 {
            Kind::Prime(p) => Scalar(Repr::Mod {
                value: n.rem_euclid(p as i64) as u64,
                p,
            }),
            Kind::Rationals => Scalar(Repr::Rat(BigRational::from_integer(BigInt::from(n)))),
        }
    }

    /// The residue `n mod p`; for the rationals, the integer `n`.
    pub fn from_u64(&self, n: u64) -> Scalar {
        match self.0 {
            Kind::Prime(p) => Scalar(Repr::Mod { value: n % p, p }),
            Kind::Rationals => Scalar(Repr::Rat(BigRational::from_integer(BigInt::from(n)))),
        }
    }

    /// `num / den` as a field element; `None` when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Scalar> {
        match self.0 {
            Kind::Prime(p) => {
                let modulus = BigInt::from(p);
                let n = residue(num, &modulus);
                let d = residue(den, &modulus);
                let d = Scalar(Repr::Mod { value: d, p }).inv()?;
                Some(&Scalar(Repr::Mod { value: n, p }) * &d)
            }
            Kind::Rationals => {
                if den.is_zero() {
                    None
                } else {
                    Some(Scalar(Repr::Rat(BigRational::new(num.clone(), den.clone()))))
                }
            }
        }
    }

    /// Parses a decimal integer or fraction such as `"2"`, `"-1/3"`.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let bad = || Error::InvalidParameter(format!("invalid scalar {text:?}"));
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        self.from_ratio(&num, &den).ok_or_else(bad)
    }

    /// All elements `0, 1, …, p − 1` of a prime field.
    pub fn elements(&self) -> Result<impl Iterator<Item = Scalar> + Clone> {
        let p = self.require_prime()?;
        Ok((0..p).map(move |value| Scalar(Repr::Mod { value, p })))
    }
}

fn residue(n: &BigInt, modulus: &BigInt) -> u64 {
    let r = n.mod_floor(modulus);
    r.iter_u64_digits().next().unwrap_or(0)
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Prime(p) => write!(f, "GF({p})"),
            Kind::Rationals => write!(f, "Q"),
        }
    }
}

/// An exact field element.
///
/// Residues are kept in `[0, p)`; rationals are always in lowest terms with a
/// positive denominator (maintained by [`BigRational`]). Mixing elements of
/// different fields in one operation is a programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Mod { value: u64, p: u64 },
    Rat(BigRational),
}

impl Scalar {
    pub fn field(&self) -> FieldDescriptor {
        match self.0 {
            Repr::Mod { p, .. } => FieldDescriptor(Kind::Prime(p)),
            Repr::Rat(_) => FieldDescriptor(Kind::Rationals),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Mod { value, .. } => *value == 0,
            Repr::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Mod { value, .. } => *value == 1,
            Repr::Rat(r) => r.is_one(),
        }
    }

    /// The residue in `[0, p)` for prime-field elements.
    pub fn residue(&self) -> Option<u64> {
        match self.0 {
            Repr::Mod { value, .. } => Some(value),
            Repr::Rat(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rat(r) => Some(r),
            Repr::Mod { .. } => None,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match &self.0 {
            Repr::Mod { value, p } => Some(Scalar(Repr::Mod {
                value: pow_mod(*value, *p - 2, *p),
                p: *p,
            })),
            Repr::Rat(r) => Some(Scalar(Repr::Rat(r.recip()))),
        }
    }

    /// Division; `None` when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inv().map(|r| self * &r)
    }

    fn binop(
        &self,
        rhs: &Scalar,
        modular: impl Fn(u64, u64, u64) -> u64,
        rational: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Mod { value: a, p }, Repr::Mod { value: b, p: q }) if p == q => {
                Scalar(Repr::Mod { value: modular(*a, *b, *p), p: *p })
            }
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(rational(a, b))),
            _ => panic!("scalar field mismatch: {} vs {}", self.field(), rhs.field()),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Mod { value, .. } => write!(f, "{value}"),
            Repr::Rat(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Rat(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

/// Residues compare by value, rationals numerically. Elements of different
/// fields compare by field, which never happens inside one subspace.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Mod { value: a, p }, Repr::Mod { value: b, p: q }) => (p, a).cmp(&(q, b)),
            (Repr::Rat(a), Repr::Rat(b)) => a.cmp(b),
            (Repr::Mod { .. }, Repr::Rat(_)) => Ordering::Less,
            (Repr::Rat(_), Repr::Mod { .. }) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b, p| (a + b) % p, |a, b| a + b)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b, p| (a + p - b) % p, |a, b| a - b)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b, p| a * b % p, |a, b| a * b)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Mod { value, p } => Scalar(Repr::Mod { value: (p - value) % p, p: *p }),
            Repr::Rat(r) => Scalar(Repr::Rat(-r)),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Scalar {
    /// Sign of a rational element; residues are never negative.
    pub fn is_negative(&self) -> bool {
        matches!(&self.0, Repr::Rat(r) if r.is_negative())
    }
}
