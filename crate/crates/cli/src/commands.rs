use std::path::Path;

use serde_json::json;

use solvlie_core::catalog::{self, FixtureId};
use solvlie_core::inner_auto::{are_conjugate_bruteforce, eligible_generators};
use solvlie_core::theorem_lab::{conjugate_by_core_test, Verdict};
use solvlie_core::{Error, LieAlgebra, Subspace};

use crate::args::{
    Command, ConjugacyArgs, FixtureArgs, MethodArg, QueryArgs, QueryKind, RandomArgs, TheoremsArgs, ValidateArgs,
};
use crate::document::{parse_field, parse_rows, AlgebraDocument, BuildError};
use crate::report::{Check, Digest, Report};
use crate::sweep::{self, CatalogSpec, Instance, SweepConfig};

/// What a command prints and the process exit code.
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn report(r: &Report) -> Self {
        Output { text: r.to_json(), code: r.exit_code() }
    }
}

pub fn run(command: &Command, timing: bool) -> Output {
    let start = std::time::Instant::now();
    let mut report = Report::new(command);
    match command {
        Command::Validate(a) => validate(a, &mut report),
        Command::Query(a) => query(a, &mut report),
        Command::Conjugacy(a) => conjugacy(a, &mut report),
        Command::Theorems(a) => theorems(a, &mut report),
        Command::Fixture(a) => match fixture(a) {
            Ok(l) => return document(&l),
            Err(e) => report.push(Check::from_error("fixture", &e)),
        },
        Command::Random(a) => match random(a) {
            Ok(l) => return document(&l),
            Err(e) => report.push(Check::from_error("random", &e)),
        },
    }
    if timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    Output::report(&report)
}

fn document(l: &LieAlgebra) -> Output {
    Output { text: AlgebraDocument::from_algebra(l).to_json(), code: 0 }
}

/// Reads and builds the algebra, recording a failed `parse` or `jacobi`
/// check on error.
fn load(path: &Path, report: &mut Report) -> Option<LieAlgebra> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            report.push(Check::fail("parse").reason(format!("cannot read {}: {e}", path.display())));
            return None;
        }
    };
    let doc = match AlgebraDocument::parse(&text) {
        Ok(d) => d,
        Err(e) => {
            report.push(Check::fail("parse").reason("parse_error").witness(e));
            return None;
        }
    };
    match doc.build() {
        Ok(l) => {
            report.push(Check::pass("parse"));
            report.push(Check::pass("jacobi"));
            report.algebras.push(Digest::of(path.display().to_string(), &l));
            Some(l)
        }
        Err(BuildError::Parse(e)) => {
            report.push(Check::fail("parse").reason("parse_error").witness(e));
            None
        }
        Err(BuildError::Structure(e @ Error::JacobiViolation { i, j, k })) => {
            report.push(Check::pass("parse"));
            report.push(Check::from_error("jacobi", &e).witness(json!({"triple": [i, j, k]})));
            None
        }
        Err(BuildError::Structure(e)) => {
            report.push(Check::from_error("parse", &e));
            None
        }
    }
}

fn validate(a: &ValidateArgs, report: &mut Report) {
    let Some(l) = load(&a.file, report) else { return };
    let check = if l.is_solvable() {
        Check::pass("solvable")
    } else {
        Check::fail("solvable").reason("derived series does not reach 0")
    };
    report.push(check.witness(json!({"derived_series": l.derived_series()})));
}

fn subspace(l: &LieAlgebra, text: &str) -> Result<Subspace, Error> {
    Ok(l.span(parse_rows(l.field(), l.dim(), text)?))
}

fn query(a: &QueryArgs, report: &mut Report) {
    let Some(l) = load(&a.file, report) else { return };
    let lim = a.caps.limits();
    let name = match a.what {
        QueryKind::Core => "core",
        QueryKind::Centralizer => "centralizer",
        QueryKind::ChiefSeries => "chief_series",
        QueryKind::Maximals => "maximals",
        QueryKind::MinimalIdeals => "minimal_ideals",
    };
    let result = (|| -> Result<Check, Error> {
        Ok(match a.what {
            QueryKind::Core | QueryKind::Centralizer => {
                let text = a
                    .subspace
                    .as_deref()
                    .ok_or_else(|| Error::InvalidParameter(format!("{name} needs --subspace")))?;
                let u = subspace(&l, text)?;
                let value = if a.what == QueryKind::Core { l.core(&u)? } else { l.centralizer(&u) };
                Check::pass(name).witness(json!({"subspace": u, name: value}))
            }
            QueryKind::ChiefSeries => {
                let s = l.chief_series(&lim)?;
                Check::pass(name).instances(s.length()).witness(json!({"terms": s.terms()}))
            }
            QueryKind::Maximals => {
                let m: Vec<Subspace> = l.maximal_subalgebras(&lim)?.into_iter().map(|s| s.into_space()).collect();
                Check::pass(name).instances(m.len()).witness(json!({"maximal_subalgebras": m}))
            }
            QueryKind::MinimalIdeals => {
                let m = l.minimal_ideals(&lim)?;
                Check::pass(name).instances(m.len()).witness(json!({"minimal_ideals": m}))
            }
        })
    })();
    report.push(result.unwrap_or_else(|e| Check::from_error(name, &e)));
}

fn conjugacy(a: &ConjugacyArgs, report: &mut Report) {
    let Some(l) = load(&a.file, report) else { return };
    let lim = a.caps.limits();
    let inputs = (|| -> Result<(Subspace, Subspace), Error> {
        let (m, k) = (subspace(&l, &a.m)?, subspace(&l, &a.k)?);
        for s in [&m, &k] {
            if !l.is_subalgebra(s) || !l.is_maximal_subalgebra(s, &lim)? {
                return Err(Error::NotMaximal);
            }
        }
        Ok((m, k))
    })();
    let (m, k) = match inputs {
        Ok(v) => v,
        Err(e) => return report.push(Check::from_error("input", &e)),
    };
    let mut core_verdict = None;
    if a.method != MethodArg::Brute {
        report.push(match conjugate_by_core_test(&l, &m, &k, &lim) {
            Ok(v) if v.verdict == Verdict::HypothesisNotMet => {
                Check::skipped("core_test", "hypothesis_not_met").witness(v)
            }
            Ok(v) => {
                core_verdict = Some(v.verdict == Verdict::Conjugate);
                Check::pass("core_test").witness(v)
            }
            Err(e) => Check::from_error("core_test", &e),
        });
    }
    if a.method == MethodArg::Core {
        return;
    }
    let brute = eligible_generators(&l, &l.full_space(), &lim).and_then(|g| {
        are_conjugate_bruteforce(&l, &m, &k, &l.full_space(), &lim).map(|v| {
            (
                v,
                json!({"enumerated": g.enumerated, "eligible": g.eligible, "eligible_in_derived": g.eligible_in_derived}),
            )
        })
    });
    let brute_verdict = match brute {
        Ok((v, gens)) => {
            let conj = v.conjugate;
            report.push(Check::pass("brute_force").witness(json!({
                "verdict": if conj { "conjugate" } else { "not_conjugate" },
                "search": v,
                "generators": gens,
            })));
            Some(conj)
        }
        Err(e) => {
            report.push(Check::from_error("brute_force", &e));
            None
        }
    };
    if a.method == MethodArg::Both {
        report.push(match (core_verdict, brute_verdict) {
            (Some(c), Some(b)) if c == b => Check::pass("agreement"),
            (Some(c), Some(b)) => Check::fail("agreement").witness(json!({"core_test": c, "brute_force": b})),
            _ => Check::skipped("agreement", "one method did not decide"),
        });
    }
}

fn theorems(a: &TheoremsArgs, report: &mut Report) {
    let cfg = SweepConfig {
        suites: a.suite.expand(),
        limits: a.caps.limits(),
        seed: a.seed,
        samples: a.samples,
    };
    let instances = if let Some(path) = &a.file {
        let Some(l) = load(path, report) else { return };
        report.algebras.clear();
        let id = path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
        vec![Instance::new(id, l)]
    } else {
        let text = a.catalog.as_deref().unwrap_or_default();
        let spec = match CatalogSpec::parse(text) {
            Ok(s) => s,
            Err(e) => return report.push(Check::from_error("catalog", &e)),
        };
        let mut instances = match sweep::catalog_instances(&spec) {
            Ok(v) => v,
            Err(e) => return report.push(Check::from_error("catalog", &e)),
        };
        if a.count > 0 {
            let (pool, stats) = sweep::random_pool(&spec, a.seed, a.count);
            report.push(sweep::pool_check(&stats));
            instances.extend(pool);
        }
        instances
    };
    let out = sweep::run(&instances, &cfg);
    report.algebras.extend(out.digests);
    for c in out.checks {
        report.push(c);
    }
}

fn fixture(a: &FixtureArgs) -> Result<LieAlgebra, Error> {
    let kind = a.name.parse()?;
    let field = parse_field(&a.field)?;
    catalog::fixture(&FixtureId { kind, field })
}

fn random(a: &RandomArgs) -> Result<LieAlgebra, Error> {
    catalog::random_solvable(a.seed, a.dim, parse_field(&a.field)?, a.ambient)
}
