//! Command-line front end: parse a document, dispatch, render a report.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::classify::{classify_point, gap_remark, gap_witness_lemma, maximal_points};
use crate::ell::EllTable;
use crate::error::{Error, Result};
use crate::lattice::{LatticeBox, LatticePoint};
use crate::oracle::{
    attains, ell_from_algebra, value_vectors_exhaustive, AlgebraDoc, AlgebraOracle, MembershipMethod,
};
use crate::report::{
    emit, ClassifyReport, EllReport, EllRow, Mismatch, OracleReport, Report, ValidateReport, ZetaReport,
};
use crate::semigroup::{SemigroupDoc, ValueSemigroup};
use crate::zeta::{bound_audit, epsilon_from_table, zeta_truncated};

#[derive(Debug, Parser)]
#[command(name = "curve-zeta", version, about = "Value semigroups and zeta coefficients of curve singularities")]
pub struct RunConfig {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the semigroup axioms.
    Validate { input: PathBuf },
    /// Membership, maximality, kind and Δ witnesses for every point of a box.
    Classify {
        input: PathBuf,
        /// Upper corner of the box; defaults to the conductor plus one.
        #[arg(long = "box", num_args = 1.., value_name = "N")]
        upper: Option<Vec<u32>>,
    },
    /// Table of the codimension function.
    Ell {
        input: PathBuf,
        #[arg(long, num_args = 1.., required = true, value_name = "N")]
        max: Vec<u32>,
    },
    /// Truncated zeta series.
    Zeta {
        input: PathBuf,
        #[arg(long)]
        degree: u32,
        /// Evaluate the coefficients at this field size.
        #[arg(long, conflicts_with = "symbolic")]
        q: Option<i64>,
        /// Print coefficients as polynomials in q (the default).
        #[arg(long)]
        symbolic: bool,
    },
    /// Compare zeta coefficients with the general upper bounds.
    BoundsAudit {
        input: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
        q: Vec<i64>,
        #[arg(long = "box", num_args = 1.., value_name = "N")]
        upper: Option<Vec<u32>>,
    },
    /// Recompute a quantity by brute force in an algebra and compare.
    Oracle {
        input: PathBuf,
        #[arg(long, value_enum)]
        check: Check,
        /// Highest codimension for `--check zeta`; defaults to twice the conductor norm.
        #[arg(long)]
        degree: Option<u32>,
        /// Semigroup document to compare against instead of the one read off the algebra.
        #[arg(long)]
        against: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Semigroup,
    Ell,
    Epsilon,
    Zeta,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::Semigroup => "semigroup",
            Check::Ell => "ell",
            Check::Epsilon => "epsilon",
            Check::Zeta => "zeta",
        }
    }
}

/// Exit status and the two output streams of one run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

pub enum Input {
    Semigroup(ValueSemigroup),
    Algebra(Box<AlgebraOracle>),
}

fn read_json(path: &Path) -> Result<serde_json::Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::MalformedInput(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::MalformedInput(format!("{}: {e}", path.display())))
}

fn parse<T: serde::de::DeserializeOwned>(path: &Path, value: serde_json::Value) -> Result<T> {
    serde_json::from_value(value).map_err(|e| Error::MalformedInput(format!("{}: {e}", path.display())))
}

/// Reads a semigroup document, or an algebra document when it has `generators`.
/// Caveats about an algebra are pushed to `warnings` before it is built.
pub fn load(path: &Path, warnings: &mut Vec<String>) -> Result<Input> {
    let value = read_json(path)?;
    if value.get("generators").is_some() {
        let doc: AlgebraDoc = parse(path, value)?;
        warnings.extend(doc.warnings());
        Ok(Input::Algebra(Box::new(AlgebraOracle::from_doc(&doc)?)))
    } else {
        let doc: SemigroupDoc = parse(path, value)?;
        Ok(Input::Semigroup(ValueSemigroup::from_doc(&doc)?))
    }
}

fn load_semigroup(path: &Path, warnings: &mut Vec<String>) -> Result<ValueSemigroup> {
    match load(path, warnings)? {
        Input::Semigroup(s) => Ok(s),
        Input::Algebra(o) => Ok(o.semigroup().clone()),
    }
}

fn upper_corner(s: &ValueSemigroup, upper: Option<Vec<u32>>) -> Result<LatticePoint> {
    let upper = upper.map_or_else(|| s.conductor().shift(1), LatticePoint::new);
    upper.check_dim(s.branches())?;
    Ok(upper)
}

pub fn run(config: RunConfig) -> Outcome {
    let mut warnings = Vec::new();
    let result = dispatch(&config.command, config.json, &mut warnings);
    let mut stderr: String = warnings.iter().map(|w| format!("warning: {w}\n")).collect();
    match result {
        Ok((code, stdout)) => Outcome { code, stdout, stderr },
        Err(e) => {
            stderr.push_str(&format!("error: {e}\n"));
            Outcome { code: e.exit_code(), stdout: String::new(), stderr }
        }
    }
}

fn ok<R: Report>(report: &R, json: bool) -> Result<(u8, String)> {
    Ok((0, emit(report, json)))
}

fn dispatch(command: &Command, json: bool, warnings: &mut Vec<String>) -> Result<(u8, String)> {
    match command {
        Command::Validate { input } => {
            let s = match load_semigroup(input, warnings) {
                Err(Error::AxiomViolation(report)) => {
                    let value = read_json(input)?;
                    let branches = value.get("branches").and_then(|b| b.as_u64()).unwrap_or(0) as usize;
                    let doc = parse::<SemigroupDoc>(input, value).ok();
                    let r = ValidateReport {
                        branches,
                        conductor: doc.map(|d| LatticePoint::new(d.conductor)),
                        passed: false,
                        violations: report.violations,
                        maximal_points: vec![],
                    };
                    return Ok((1, emit(&r, json)));
                }
                other => other?,
            };
            let r = ValidateReport {
                branches: s.branches(),
                conductor: Some(s.conductor().clone()),
                passed: true,
                violations: vec![],
                maximal_points: maximal_points(&s).to_vec(),
            };
            ok(&r, json)
        }
        Command::Classify { input, upper } => {
            let s = load_semigroup(input, warnings)?;
            let upper = upper_corner(&s, upper.clone())?;
            let mut rows = Vec::new();
            for n in LatticeBox::up_to(upper).iter() {
                if !s.contains(&n) {
                    gap_witness_lemma(&s, &n)?;
                    gap_remark(&s, &n)?;
                }
                rows.push(classify_point(&s, &n)?);
            }
            ok(&ClassifyReport { rows }, json)
        }
        Command::Ell { input, max } => {
            let s = load_semigroup(input, warnings)?;
            let max = LatticePoint::new(max.clone());
            let table = EllTable::build(&s, &max)?;
            let rows = table
                .iter()
                .map(|(point, ell)| EllRow { increments: table.increments(&point), point, ell })
                .collect();
            ok(&EllReport { rows }, json)
        }
        Command::Zeta { input, degree, q, .. } => {
            let s = load_semigroup(input, warnings)?;
            ok(&ZetaReport::new(zeta_truncated(&s, *degree)?, *q), json)
        }
        Command::BoundsAudit { input, q, upper } => {
            let s = load_semigroup(input, warnings)?;
            let upper = upper_corner(&s, upper.clone())?;
            ok(&bound_audit(&s, &LatticeBox::up_to(upper), q)?, json)
        }
        Command::Oracle { input, check, degree, against } => {
            let oracle = match load(input, warnings)? {
                Input::Algebra(o) => o,
                Input::Semigroup(_) => {
                    return Err(Error::MalformedInput(format!("{}: oracle checks need an algebra document", input.display())))
                }
            };
            let core = match against {
                Some(path) => load_semigroup(path, warnings)?,
                None => oracle.semigroup().clone(),
            };
            let report = oracle_check(&oracle, &core, *check, *degree)?;
            let code = if report.agree() { 0 } else { 1 };
            Ok((code, emit(&report, json)))
        }
    }
}

/// Compares `core` with brute-force counts in the oracle's algebra.
pub fn oracle_check(oracle: &AlgebraOracle, core: &ValueSemigroup, check: Check, degree: Option<u32>) -> Result<OracleReport> {
    core.conductor().check_dim(oracle.algebra().branches())?;
    let p = oracle.algebra().p();
    let delta = oracle.conductor().clone().sup(core.conductor());
    let window = LatticeBox::up_to(delta.shift(1));
    let mut mismatches = Vec::new();
    let mut points = 0;
    let mut record = |point: String, c: String, o: String| {
        if c != o {
            mismatches.push(Mismatch { point, core: c, oracle: o });
        }
    };
    match check {
        Check::Semigroup => {
            let a = oracle.algebra();
            let exhaustive = value_vectors_exhaustive(a, oracle.work_limit()).ok();
            for n in window.iter() {
                let found = match &exhaustive {
                    Some(values) => values.contains(&n),
                    None => attains(a, &n, MembershipMethod::Exhaustive)?,
                };
                record(n.to_string(), core.contains(&n).to_string(), found.to_string());
                points += 1;
            }
        }
        Check::Ell => {
            let table = EllTable::build(core, window.hi())?;
            let a = oracle.algebra().with_truncation(window.hi().sup(oracle.algebra().truncation()))?;
            for (n, ell) in table.iter() {
                record(n.to_string(), ell.to_string(), ell_from_algebra(&a, &n)?.to_string());
                points += 1;
            }
        }
        Check::Epsilon => {
            let table = EllTable::build(core, &window.hi().shift(1))?;
            for n in window.iter() {
                let eps = epsilon_from_table(&table, &n)?.eval(p as i64);
                record(n.to_string(), eps.to_string(), oracle.epsilon(&n)?.to_string());
                points += 1;
            }
        }
        Check::Zeta => {
            let degree = degree.unwrap_or(2 * delta.norm() as u32);
            let series = zeta_truncated(core, degree)?;
            let counts = oracle.principal_ideals_by_codim(degree)?;
            for (nu, value) in series.eval(p as i64).into_iter().enumerate() {
                let nu = nu as u32;
                record(format!("t^{nu}"), value.to_string(), counts[&nu].to_string());
                points += 1;
            }
        }
    }
    Ok(OracleReport {
        check: check.name().to_string(),
        p,
        truncation: oracle.algebra().truncation().clone(),
        conductor: oracle.conductor().clone(),
        points,
        mismatches,
        warnings: oracle.warnings(),
    })
}
