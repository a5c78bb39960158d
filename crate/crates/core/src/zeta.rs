//! Zeta coefficients `ε_n` as exact Laurent polynomials in `q`, the truncated
//! series `Z(O, O, t) = Σ_{n ∈ S} ε_n t^{|n|}`, the one- and two-branch closed
//! forms, and an audit of the general upper bounds.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::classify::{is_maximal, kind_of, m_count, Domination, Kind};
use crate::ell::EllTable;
use crate::error::{Error, Result};
use crate::lattice::{IndexSet, LatticeBox, LatticePoint};
use crate::laurent::LaurentPoly;
use crate::semigroup::ValueSemigroup;

/// `ε_n = q/(q-1) Σ_{i ∈ {0,1}^r} (-1)^{|i|} q^{|n| - ℓ(n+i)}`.
pub fn epsilon(s: &ValueSemigroup, n: &LatticePoint) -> Result<LaurentPoly> {
    n.check_dim(s.branches())?;
    let table = EllTable::build(s, &n.shift(1))?;
    epsilon_from_table(&table, n)
}

/// As [`epsilon`], reading `ℓ` from a prebuilt table covering `n + (1,…,1)`.
pub fn epsilon_from_table(table: &EllTable, n: &LatticePoint) -> Result<LaurentPoly> {
    let r = n.dim();
    let norm = n.norm() as i64;
    let mut inner = LaurentPoly::zero();
    for mask in 0..(1u32 << r) {
        let set = IndexSet::from_mask(mask);
        let ell = table.at(&n.plus_set(set))? as i64;
        let sign = if set.len().is_multiple_of(2) { 1 } else { -1 };
        inner.add_term(sign, (norm - ell) as i32);
    }
    inner
        .shift(1)
        .div_q_minus_one()
        .map_err(|remainder| Error::InexactDivision { point: n.clone(), remainder })
}

/// Coefficients of `Z(O, O, t)` up to a fixed degree in `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaSeries {
    pub max_degree: u32,
    pub coefficients: BTreeMap<u32, LaurentPoly>,
}

impl ZetaSeries {
    pub fn coefficient(&self, degree: u32) -> LaurentPoly {
        self.coefficients.get(&degree).cloned().unwrap_or_default()
    }

    pub fn eval(&self, q: i64) -> Vec<Ratio<i128>> {
        (0..=self.max_degree).map(|d| self.coefficient(d).eval(q)).collect()
    }

    /// Renders the series with coefficients evaluated at `q`.
    pub fn display_at(&self, q: i64) -> String {
        let terms: Vec<(u32, String, bool)> = self
            .eval(q)
            .into_iter()
            .enumerate()
            .filter(|(_, v)| *v != Ratio::from_integer(0))
            .map(|(d, v)| (d as u32, (if v < Ratio::from_integer(0) { -v } else { v }).to_string(), v < Ratio::from_integer(0)))
            .collect();
        render_series(terms.into_iter().map(|(d, c, neg)| (d, c, neg, false)))
    }

    /// Whether the order-`order` finite differences of the coefficients vanish
    /// for every degree window starting at or after `from`.
    pub fn tail_is_polynomial(&self, order: usize, from: u32) -> bool {
        let binom = |k: usize| -> i64 {
            (0..k).fold(1i64, |acc, j| acc * (order - j) as i64 / (j + 1) as i64)
        };
        let start = from as usize + order;
        (start..=self.max_degree as usize).all(|nu| {
            let mut diff = LaurentPoly::zero();
            for k in 0..=order {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                diff = &diff + &(&self.coefficient((nu - k) as u32) * &LaurentPoly::constant(sign * binom(k)));
            }
            diff.is_zero()
        })
    }
}

fn render_series(terms: impl Iterator<Item = (u32, String, bool, bool)>) -> String {
    let mut out = String::new();
    for (k, (degree, coeff, negative, compound)) in terms.enumerate() {
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let coeff = if compound { format!("({coeff})") } else { coeff };
        let t = match degree {
            0 => String::new(),
            1 => "t".to_string(),
            d => format!("t^{d}"),
        };
        match (degree, coeff.as_str()) {
            (0, c) => out.push_str(c),
            (_, "1") => out.push_str(&t),
            (_, c) => out.push_str(&format!("{c} {t}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical rendering, e.g. `1 + (q - 1) t^2`.
impl fmt::Display for ZetaSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coefficients.iter().filter(|(_, c)| !c.is_zero()).map(|(&d, c)| {
            let mut terms = c.terms();
            match (terms.next(), terms.next()) {
                (Some((e, coeff)), None) => {
                    let text = LaurentPoly::monomial(coeff.abs(), e).to_string();
                    (d, text, coeff < 0, false)
                }
                _ => (d, c.to_string(), false, true),
            }
        });
        write!(f, "{}", render_series(terms))
    }
}

pub fn zeta_truncated(s: &ValueSemigroup, max_degree: u32) -> Result<ZetaSeries> {
    let r = s.branches();
    let table = EllTable::build(s, &LatticePoint::new(vec![max_degree + 1; r]))?;
    let mut coefficients = BTreeMap::new();
    for n in LatticeBox::up_to(LatticePoint::new(vec![max_degree; r])).iter() {
        if n.norm() > max_degree as u64 || !s.contains(&n) {
            continue;
        }
        let eps = epsilon_from_table(&table, &n)?;
        let entry = coefficients.entry(n.norm() as u32).or_insert_with(LaurentPoly::zero);
        *entry = &*entry + &eps;
    }
    coefficients.retain(|_, c: &mut LaurentPoly| !c.is_zero());
    Ok(ZetaSeries { max_degree, coefficients })
}

fn check_arity(s: &ValueSemigroup, expected: usize) -> Result<()> {
    if s.branches() == expected {
        Ok(())
    } else {
        Err(Error::WrongArity { expected, found: s.branches() })
    }
}

/// Coefficient recipe for one branch: `q^{s(i)}` where a run of members
/// starts, `-q^{s(i)}` where a run of gaps starts, 0 otherwise (`-1 ∉ S`).
pub fn corollary_one_branch(s: &ValueSemigroup, i: u32) -> Result<LaurentPoly> {
    check_arity(s, 1)?;
    let here = s.contains(&LatticePoint::new(vec![i]));
    let before = i > 0 && s.contains(&LatticePoint::new(vec![i - 1]));
    let sign = match (here, before) {
        (true, false) => 1,
        (false, true) => -1,
        _ => return Ok(LaurentPoly::zero()),
    };
    Ok(LaurentPoly::monomial(sign, s.gap_count(0, i)? as i32))
}

/// Closed form for two branches: `q^{s_1+s_2+m}` at maximal points and
/// `q^{s_1+s_2+m}(q-1)/q` at the other members, `m` counting strictly
/// dominated maximal points.
pub fn corollary_two_branches(s: &ValueSemigroup, n: &LatticePoint) -> Result<LaurentPoly> {
    check_arity(s, 2)?;
    n.check_dim(2)?;
    if !s.contains(n) {
        return Err(Error::NotMember(n.clone()));
    }
    let exp = (s.total_gap_count(n) as usize + m_count(s, n, Domination::Strict)) as i32;
    if is_maximal(s, n) {
        Ok(LaurentPoly::monomial(1, exp))
    } else {
        Ok(LaurentPoly::monomial(1, exp) - LaurentPoly::monomial(1, exp - 1))
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, j| acc * (n - j) as i64 / (j + 1) as i64)
}

/// `q^{exp} / (1 - q^{-1}) · (1 + q^{-weight} Σ_{h=1}^r (-1)^h C(r,h) q^{r-h-1})`.
pub fn maximal_bound_expression(r: usize, exp: i32, weight: u32) -> LaurentPoly {
    let mut sum = LaurentPoly::zero();
    for h in 1..=r {
        let sign = if h % 2 == 0 { 1 } else { -1 };
        sum.add_term(sign * binomial(r, h), r as i32 - h as i32 - 1);
    }
    let factor = LaurentPoly::one() + sum.shift(-(weight as i32));
    (factor.shift(exp + 1))
        .div_q_minus_one()
        .expect("the bracket vanishes at q = 1")
}

/// `q^{exp} / (1 - q^{-1}) · (1 + Σ_{h=1}^r (-1)^h C(r,h) q^h)`.
pub fn nonmaximal_bound_expression(r: usize, exp: i32) -> LaurentPoly {
    let mut factor = LaurentPoly::one();
    for h in 1..=r {
        let sign = if h % 2 == 0 { 1 } else { -1 };
        factor.add_term(sign * binomial(r, h), h as i32);
    }
    factor
        .shift(exp + 1)
        .div_q_minus_one()
        .expect("(1 - q)^r vanishes at q = 1")
}

/// The printed bound for a maximal point, with `m` counting weakly dominated
/// maximal points.
pub fn stated_bound_maximal(s: &ValueSemigroup, n: &LatticePoint, kind: &Kind) -> Result<LaurentPoly> {
    n.check_dim(s.branches())?;
    if !is_maximal(s, n) {
        return Err(Error::NotMaximal(n.clone()));
    }
    let weight = kind.weight().ok_or_else(|| Error::MixedKind(n.clone()))?;
    let exp = s.total_gap_count(n) as usize + m_count(s, n, Domination::Weak);
    Ok(maximal_bound_expression(s.branches(), exp as i32, weight))
}

/// The printed bound for a non-maximal member.
pub fn stated_bound_nonmaximal(s: &ValueSemigroup, n: &LatticePoint) -> Result<LaurentPoly> {
    n.check_dim(s.branches())?;
    if !s.contains(n) {
        return Err(Error::NotMember(n.clone()));
    }
    if is_maximal(s, n) {
        return Err(Error::InvalidCombo(format!("{n} is maximal")));
    }
    let exp = s.total_gap_count(n) as usize + m_count(s, n, Domination::Weak);
    Ok(nonmaximal_bound_expression(s.branches(), exp as i32))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRow {
    pub point: LatticePoint,
    pub norm: u64,
    pub q: i64,
    pub maximal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<Kind>,
    pub epsilon: LaurentPoly,
    pub epsilon_value: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stated_bound: Option<LaurentPoly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stated_bound_value: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub holds_max_bound: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_bound_negative: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub holds_nonmax_bound: Option<bool>,
    /// `|n| - ℓ(n)`.
    pub load_lhs: i64,
    /// `Σ s_i(n_i) + m_strict(n)`.
    pub load_rhs: i64,
    pub load_holds: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundAudit {
    pub rows: Vec<AuditRow>,
}

impl BoundAudit {
    pub fn load_bearing_holds(&self) -> bool {
        self.rows.iter().all(|r| r.load_holds)
    }

    pub fn nonmaximal_bound_holds(&self) -> bool {
        self.rows.iter().filter_map(|r| r.holds_nonmax_bound).all(|h| h)
    }

    /// Rows where the printed maximal-point bound fails.
    pub fn maximal_bound_anomalies(&self) -> impl Iterator<Item = &AuditRow> {
        self.rows.iter().filter(|r| r.holds_max_bound == Some(false))
    }
}

/// Compares `ε_n(q)` with the printed bounds at every member of `region`.
pub fn bound_audit(s: &ValueSemigroup, region: &LatticeBox, qs: &[i64]) -> Result<BoundAudit> {
    if region.is_empty() {
        return Ok(BoundAudit::default());
    }
    region.hi().check_dim(s.branches())?;
    let table = EllTable::build(s, &region.hi().shift(1))?;
    let mut rows = Vec::new();
    for n in region.iter().filter(|n| s.contains(n)) {
        let eps = epsilon_from_table(&table, &n)?;
        let maximal = is_maximal(s, &n);
        let kind = if maximal { Some(kind_of(s, &n)?) } else { None };
        let bound = match &kind {
            Some(k) if k.weight().is_some() => Some(stated_bound_maximal(s, &n, k)?),
            Some(_) => None,
            None => Some(stated_bound_nonmaximal(s, &n)?),
        };
        let load_lhs = n.norm() as i64 - table.at(&n)? as i64;
        let load_rhs = s.total_gap_count(&n) as i64 + m_count(s, &n, Domination::Strict) as i64;
        for &q in qs {
            let value = eps.eval(q);
            let bound_value = bound.as_ref().map(|b| b.eval(q));
            let holds = bound_value.map(|b| value <= b);
            rows.push(AuditRow {
                point: n.clone(),
                norm: n.norm(),
                q,
                maximal,
                kind: kind.clone(),
                epsilon: eps.clone(),
                epsilon_value: value.to_string(),
                stated_bound: bound.clone(),
                stated_bound_value: bound_value.map(|b| b.to_string()),
                holds_max_bound: if maximal { holds } else { None },
                max_bound_negative: if maximal { bound_value.map(|b| b < Ratio::from_integer(0)) } else { None },
                holds_nonmax_bound: if maximal { None } else { holds },
                load_lhs,
                load_rhs,
                load_holds: load_lhs <= load_rhs,
            });
        }
    }
    Ok(BoundAudit { rows })
}
