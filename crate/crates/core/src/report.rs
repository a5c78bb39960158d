//! Text and JSON renderings of command results.
//!
//! Text output lists points in lexicographic order and prints polynomials in
//! canonical form, so identical inputs give byte-identical reports.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classify::PointClassification;
use crate::lattice::LatticePoint;
use crate::semigroup::Violation;
use crate::zeta::{BoundAudit, ZetaSeries};

pub trait Report: Serialize {
    fn text(&self) -> String;
}

/// Renders `report` as text or pretty JSON, always newline-terminated.
pub fn emit<R: Report>(report: &R, json: bool) -> String {
    if json {
        let mut out = serde_json::to_string_pretty(report).expect("reports serialize");
        out.push('\n');
        out
    } else {
        report.text()
    }
}

fn point_list(points: &[LatticePoint]) -> String {
    let parts: Vec<String> = points.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidateReport {
    pub branches: usize,
    /// Absent when an algebra's value set fails the axioms.
    pub conductor: Option<LatticePoint>,
    pub passed: bool,
    pub violations: Vec<Violation>,
    pub maximal_points: Vec<LatticePoint>,
}

impl Report for ValidateReport {
    fn text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "branches: {}", self.branches).unwrap();
        match &self.conductor {
            Some(c) => writeln!(out, "conductor: {c}").unwrap(),
            None => writeln!(out, "conductor: unknown").unwrap(),
        }
        if self.passed {
            writeln!(out, "axioms: ok").unwrap();
            writeln!(out, "maximal points: {}", point_list(&self.maximal_points)).unwrap();
        } else {
            writeln!(out, "axioms: violated").unwrap();
            for v in &self.violations {
                writeln!(out, "  {}: {} ({})", v.axiom, point_list(&v.witnesses), v.note).unwrap();
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub rows: Vec<PointClassification>,
}

impl Report for ClassifyReport {
    fn text(&self) -> String {
        let mut out = String::from("point\tmember\tmaximal\tkind\twitnesses\n");
        let flag = |b: bool| if b { "yes" } else { "no" };
        for row in &self.rows {
            let kind = row.kind.as_ref().map_or_else(|| "-".to_string(), ToString::to_string);
            let witnesses: Vec<String> = row
                .witnesses
                .iter()
                .map(|w| format!("{}:{}", w.set, w.witness.as_ref().map_or_else(|| "-".to_string(), ToString::to_string)))
                .collect();
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                row.point,
                flag(row.member),
                flag(row.maximal),
                kind,
                witnesses.join(" ")
            )
            .unwrap();
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllRow {
    pub point: LatticePoint,
    pub ell: u32,
    /// `ℓ(n + e_i) - ℓ(n)`, absent at the table edge.
    pub increments: Vec<Option<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllReport {
    pub rows: Vec<EllRow>,
}

impl Report for EllReport {
    fn text(&self) -> String {
        let mut out = String::from("point\tell\tincrements\n");
        for row in &self.rows {
            let inc: Vec<String> = row.increments.iter().map(|d| d.map_or_else(|| "-".into(), |d| d.to_string())).collect();
            writeln!(out, "{}\t{}\t{}", row.point, row.ell, inc.join(" ")).unwrap();
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaReport {
    pub series: ZetaSeries,
    /// Coefficients at an integer `q`, as exact rationals.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<String>>,
}

impl ZetaReport {
    pub fn new(series: ZetaSeries, q: Option<i64>) -> Self {
        let values = q.map(|q| series.eval(q).iter().map(ToString::to_string).collect());
        ZetaReport { series, q, values }
    }
}

impl Report for ZetaReport {
    fn text(&self) -> String {
        match self.q {
            Some(q) => format!("{}\n", self.series.display_at(q)),
            None => format!("{}\n", self.series),
        }
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(String::new, ToString::to_string)
}

impl Report for BoundAudit {
    fn text(&self) -> String {
        let mut out = String::from(
            "point,norm,q,epsilon,epsilon_q,stated_bound,stated_bound_q,holds_max_bound,max_bound_negative,holds_nonmax_bound,load_lhs,load_rhs,load_holds\n",
        );
        for r in &self.rows {
            writeln!(
                out,
                "\"{}\",{},{},\"{}\",{},\"{}\",{},{},{},{},{},{},{}",
                r.point,
                r.norm,
                r.q,
                r.epsilon,
                r.epsilon_value,
                opt(&r.stated_bound),
                opt(&r.stated_bound_value),
                opt(&r.holds_max_bound),
                opt(&r.max_bound_negative),
                opt(&r.holds_nonmax_bound),
                r.load_lhs,
                r.load_rhs,
                r.load_holds
            )
            .unwrap();
        }
        let anomalies = self.maximal_bound_anomalies().count();
        let failing_load = self.rows.iter().filter(|r| !r.load_holds).count();
        writeln!(out, "# rows: {}", self.rows.len()).unwrap();
        writeln!(out, "# load-bearing inequality failures: {failing_load}").unwrap();
        writeln!(out, "# non-maximal bound holds everywhere: {}", self.nonmaximal_bound_holds()).unwrap();
        writeln!(out, "# maximal bound anomalies (epsilon above the printed bound): {anomalies}").unwrap();
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub point: String,
    pub core: String,
    pub oracle: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub check: String,
    pub p: u32,
    pub truncation: LatticePoint,
    pub conductor: LatticePoint,
    pub points: usize,
    pub mismatches: Vec<Mismatch>,
    pub warnings: Vec<String>,
}

impl OracleReport {
    pub fn agree(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn mentions_q(&self) -> bool {
        self.check == "epsilon" || self.check == "zeta"
    }
}

impl Report for OracleReport {
    fn text(&self) -> String {
        let mut out = String::new();
        let q = if self.mentions_q() { format!(" (q={})", self.p) } else { String::new() };
        if self.agree() {
            writeln!(out, "all points agree{q}").unwrap();
        } else {
            writeln!(out, "{} of {} points disagree{q}", self.mismatches.len(), self.points).unwrap();
            for m in &self.mismatches {
                writeln!(out, "  {}: core {} oracle {}", m.point, m.core, m.oracle).unwrap();
            }
        }
        writeln!(out, "check: {}, points: {}, truncation: {}, conductor: {}", self.check, self.points, self.truncation, self.conductor)
            .unwrap();
        out
    }
}
