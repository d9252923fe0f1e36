//! The JSON algebra format.

use serde::{Deserialize, Serialize};

use solvlie_core::{Error, FieldDescriptor, LieAlgebra, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldSpec {
    Fp { p: u64 },
    Q,
}

impl FieldSpec {
    pub fn descriptor(&self) -> Result<FieldDescriptor, Error> {
        match *self {
            FieldSpec::Fp { p } => FieldDescriptor::prime(p),
            FieldSpec::Q => Ok(FieldDescriptor::rationals()),
        }
    }

    pub fn of(field: FieldDescriptor) -> Self {
        match field.modulus() {
            Some(p) => FieldSpec::Fp { p },
            None => FieldSpec::Q,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub value: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub field: FieldSpec,
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub brackets: Vec<Bracket>,
}

/// Why a document could not be turned into an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParseError {
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
}

impl ParseError {
    fn at_path(path: String, message: String) -> Self {
        ParseError { message, line: None, column: None, path: Some(path) }
    }
}

/// Failure of [`AlgebraDocument::build`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuildError {
    Parse(ParseError),
    Structure(Error),
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        serde_json::from_str(text).map_err(|e| ParseError {
            message: e.to_string(),
            line: Some(e.line()),
            column: Some(e.column()),
            path: None,
        })
    }

    pub fn from_algebra(l: &LieAlgebra) -> Self {
        AlgebraDocument {
            field: FieldSpec::of(l.field()),
            dim: l.dim(),
            basis_names: l.basis_names().to_vec(),
            brackets: l
                .structure_constants()
                .map(|(i, j, v)| Bracket { i, j, value: v.iter().map(Scalar::to_string).collect() })
                .collect(),
        }
    }

    /// Parses scalars and builds the algebra, which validates the table and
    /// the Jacobi identity.
    pub fn build(&self) -> Result<LieAlgebra, BuildError> {
        let field = self
            .field
            .descriptor()
            .map_err(|e| BuildError::Parse(ParseError::at_path("field".into(), e.to_string())))?;
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for (n, b) in self.brackets.iter().enumerate() {
            let value = b
                .value
                .iter()
                .enumerate()
                .map(|(m, s)| {
                    field.parse_scalar(s).map_err(|e| {
                        BuildError::Parse(ParseError::at_path(format!("brackets[{n}].value[{m}]"), e.to_string()))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            brackets.push((b.i, b.j, value));
        }
        LieAlgebra::new(field, self.dim, brackets, self.basis_names.clone()).map_err(BuildError::Structure)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }
}

/// Parses a field flag: `gf3`, `GF(3)`, `fp3`, `q` or `Q`.
pub fn parse_field(text: &str) -> Result<FieldDescriptor, Error> {
    let t = text.trim().to_ascii_lowercase();
    if t == "q" || t == "rationals" {
        return Ok(FieldDescriptor::rationals());
    }
    let digits = t
        .strip_prefix("gf(")
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| t.strip_prefix("gf"))
        .or_else(|| t.strip_prefix("fp"))
        .ok_or_else(|| Error::InvalidParameter(format!("unknown field {text:?}")))?;
    let p = digits
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("unknown field {text:?}")))?;
    FieldDescriptor::prime(p)
}

/// Parses `"0,1,0;1,0,2"` into coordinate rows; the empty string is the
/// zero subspace.
pub fn parse_rows(field: FieldDescriptor, dim: usize, text: &str) -> Result<Vec<Vec<Scalar>>, Error> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(';')
        .map(|row| {
            let v = row
                .split(',')
                .map(|s| field.parse_scalar(s.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            if v.len() != dim {
                return Err(Error::BadDimensions(format!("row {row:?} has {} entries, expected {dim}", v.len())));
            }
            Ok(v)
        })
        .collect()
}
