//! The codimension function `ℓ(n) = dim O / (O ∩ m^n)`, computed from the
//! semigroup alone.
//!
//! `ℓ(0) = 0`, and `ℓ(n + e_i) = ℓ(n) + 1` exactly when some member `β` has
//! `β_i = n_i` and `β >= n`; otherwise the step is 0.

use serde::{Deserialize, Serialize};

use crate::classify::{self, is_maximal, kind_of, m_count, Domination, Kind};
use crate::error::{Error, Result};
use crate::lattice::{Grid, IndexSet, LatticePoint};
use crate::semigroup::ValueSemigroup;

/// Dense table of `ℓ` on `[0, bounds]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllTable {
    grid: Grid,
    values: Vec<u32>,
}

impl EllTable {
    /// Fills the table, checking that every predecessor `n - e_i` predicts the
    /// same value.
    pub fn build(s: &ValueSemigroup, bounds: &LatticePoint) -> Result<Self> {
        bounds.check_dim(s.branches())?;
        let grid = Grid::new(bounds.clone());
        let mut values = vec![0u32; grid.len()];
        for idx in 1..grid.len() {
            let n = grid.point(idx);
            let mut value = None;
            for i in (0..n.dim()).filter(|&i| n[i] > 0) {
                let prev = n.minus_unit(i).expect("positive coordinate");
                let step = classify::upper_witness_all(s, &prev, i).is_some() as u32;
                let candidate = values[grid.index(&prev)] + step;
                match value {
                    None => value = Some(candidate),
                    Some(v) if v != candidate => return Err(Error::PathDependence(n)),
                    Some(_) => {}
                }
            }
            values[idx] = value.expect("nonzero point has a predecessor");
        }
        Ok(EllTable { grid, values })
    }

    pub fn bounds(&self) -> &LatticePoint {
        self.grid.upper()
    }

    pub fn get(&self, n: &LatticePoint) -> Option<u32> {
        (n.dim() == self.grid.upper().dim() && self.grid.contains(n)).then(|| self.values[self.grid.index(n)])
    }

    pub(crate) fn at(&self, n: &LatticePoint) -> Result<u32> {
        self.get(n).ok_or_else(|| {
            Error::MalformedInput(format!("{n} lies outside the ℓ table [0, {}]", self.grid.upper()))
        })
    }

    /// `ℓ(n + e_i) - ℓ(n)` for every `i` whose successor is inside the table.
    pub fn increments(&self, n: &LatticePoint) -> Vec<Option<u32>> {
        let base = self.get(n);
        (0..n.dim())
            .map(|i| Some(self.get(&n.plus_unit(i))? - base?))
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (LatticePoint, u32)> + '_ {
        self.values.iter().enumerate().map(|(idx, &v)| (self.grid.point(idx), v))
    }
}

pub fn ell(s: &ValueSemigroup, n: &LatticePoint) -> Result<u32> {
    EllTable::build(s, n)?.at(n)
}

/// `d^h(n) = ℓ(n + e_J) - ℓ(n)` for the index set `combo`.
pub fn d_h(table: &EllTable, n: &LatticePoint, combo: IndexSet) -> Result<u32> {
    if combo.is_empty() {
        return Err(Error::InvalidCombo("empty index set".into()));
    }
    combo
        .check_within(n.dim())
        .map_err(|_| Error::InvalidCombo(format!("{combo} exceeds {} branches", n.dim())))?;
    Ok(table.at(&n.plus_set(combo))? - table.at(n)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComboCheck {
    pub combo: String,
    pub size: usize,
    pub observed: u32,
    /// Expected value (maximal points) or upper bound (non-maximal points).
    pub expected: u32,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropReport {
    pub point: LatticePoint,
    pub kind: Option<Kind>,
    pub checks: Vec<ComboCheck>,
    /// Whether `d^h` depends on the chosen combination for some `h`.
    pub combo_dependent: bool,
    pub passed: bool,
}

impl PropReport {
    pub fn deviations(&self) -> impl Iterator<Item = &ComboCheck> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

fn combo_checks(
    table: &EllTable,
    n: &LatticePoint,
    expected: impl Fn(usize) -> u32,
    ok: impl Fn(u32, u32) -> bool,
) -> Result<(Vec<ComboCheck>, bool)> {
    let r = n.dim();
    let mut checks = Vec::new();
    let mut dependent = false;
    for h in 1..=r {
        let mut seen = None;
        for combo in IndexSet::subsets_of_size(r, h) {
            let observed = d_h(table, n, combo)?;
            let e = expected(h);
            if seen.is_some_and(|v| v != observed) {
                dependent = true;
            }
            seen = Some(observed);
            checks.push(ComboCheck { combo: combo.to_string(), size: h, observed, expected: e, ok: ok(observed, e) });
        }
    }
    Ok((checks, dependent))
}

/// Compares `d^h` at a maximal point with `min(h, Σx_j + 1)` for every combination.
pub fn check_prop_maximal(s: &ValueSemigroup, n: &LatticePoint) -> Result<PropReport> {
    let kind = kind_of(s, n)?;
    let table = EllTable::build(s, &n.shift(1))?;
    let Some(weight) = kind.weight() else {
        // mixed kinds have no prediction; record the observed increments only
        let (checks, dependent) = combo_checks(&table, n, |h| h as u32, |_, _| true)?;
        return Ok(PropReport { point: n.clone(), kind: Some(kind), checks, combo_dependent: dependent, passed: false });
    };
    let (checks, dependent) = combo_checks(&table, n, |h| (h as u32).min(weight + 1), |o, e| o == e)?;
    let passed = checks.iter().all(|c| c.ok);
    Ok(PropReport { point: n.clone(), kind: Some(kind), checks, combo_dependent: dependent, passed })
}

/// Checks `d^h(n) <= h` at a non-maximal member.
pub fn check_prop_nonmaximal(s: &ValueSemigroup, n: &LatticePoint) -> Result<PropReport> {
    n.check_dim(s.branches())?;
    if !s.contains(n) {
        return Err(Error::NotMember(n.clone()));
    }
    if is_maximal(s, n) {
        return Err(Error::InvalidCombo(format!("{n} is maximal")));
    }
    let table = EllTable::build(s, &n.shift(1))?;
    let (checks, dependent) = combo_checks(&table, n, |h| h as u32, |o, e| o <= e)?;
    let passed = checks.iter().all(|c| c.ok);
    Ok(PropReport { point: n.clone(), kind: None, checks, combo_dependent: dependent, passed })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBoundReport {
    pub point: LatticePoint,
    pub ell: u32,
    /// `Σ_i ℓ(n_i e_i)`.
    pub axis_sum: u32,
    pub maximal_below: usize,
    pub holds: bool,
}

/// `ℓ(n) >= Σ_i ℓ(n_i e_i) - m(n)` with strictly dominated maximal points.
pub fn check_lower_bound_lemma(s: &ValueSemigroup, n: &LatticePoint) -> Result<LowerBoundReport> {
    let table = EllTable::build(s, n)?;
    lower_bound_from_table(s, &table, n)
}

pub(crate) fn lower_bound_from_table(s: &ValueSemigroup, table: &EllTable, n: &LatticePoint) -> Result<LowerBoundReport> {
    let r = n.dim();
    let ell = table.at(n)?;
    let mut axis_sum = 0;
    for i in 0..r {
        let mut axis = LatticePoint::zeros(r).into_coords();
        axis[i] = n[i];
        axis_sum += table.at(&LatticePoint::new(axis))?;
    }
    let m = m_count(s, n, Domination::Strict);
    let holds = ell as i64 >= axis_sum as i64 - m as i64;
    Ok(LowerBoundReport { point: n.clone(), ell, axis_sum, maximal_below: m, holds })
}
