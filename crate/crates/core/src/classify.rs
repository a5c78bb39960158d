//! Δ-sets, maximal points and their kinds.
//!
//! `Δ_J(n)` is the set of members `β` with `β_i = n_i` on `J` and `β_t > n_t`
//! off `J`. A member is maximal when `Δ_i(n)` is empty for every branch `i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{IndexSet, LatticePoint};
use crate::semigroup::{Constraint, ValueSemigroup};

/// Kind `(x_2, …, x_{r-1})` of a maximal point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    /// One or two branches: the tuple is empty.
    Trivial,
    /// `values[j - 2]` is 0 when every `Δ_J` with `|J| = j` is empty and 1 when all are nonempty.
    Uniform(Vec<u8>),
    /// Some cardinality has both empty and nonempty `Δ_J`.
    Mixed,
}

impl Kind {
    /// `Σ x_j`, or `None` for mixed kinds.
    pub fn weight(&self) -> Option<u32> {
        match self {
            Kind::Trivial => Some(0),
            Kind::Uniform(v) => Some(v.iter().map(|&x| x as u32).sum()),
            Kind::Mixed => None,
        }
    }

    pub fn is_absolute(&self) -> bool {
        match self {
            Kind::Trivial => true,
            Kind::Uniform(v) => v.iter().all(|&x| x == 0),
            Kind::Mixed => false,
        }
    }

    pub fn is_relative(&self) -> bool {
        match self {
            Kind::Trivial => true,
            Kind::Uniform(v) => v.iter().all(|&x| x == 1),
            Kind::Mixed => false,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Trivial => write!(f, "trivial"),
            Kind::Mixed => write!(f, "mixed"),
            Kind::Uniform(v) => {
                let parts: Vec<String> = v.iter().map(u8::to_string).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Domination {
    /// `γ_i < n_i` for every `i`.
    Strict,
    /// `γ_i <= n_i` for every `i`.
    Weak,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaWitness {
    pub set: String,
    pub witness: Option<LatticePoint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointClassification {
    pub point: LatticePoint,
    pub member: bool,
    pub maximal: bool,
    pub kind: Option<Kind>,
    pub witnesses: Vec<DeltaWitness>,
}

/// Why a point is a gap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GapCause {
    /// `S_branch` has a gap at most `n_branch`.
    ProjectionGap { branch: usize },
    /// A maximal point lies componentwise below the gap.
    DominatingMaximal(LatticePoint),
}

fn check_set(s: &ValueSemigroup, set: IndexSet) -> Result<()> {
    if set.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    set.check_within(s.branches())
}

/// A witness of `Δ_J(n) ≠ ∅`, if any.
pub fn delta_nonempty(s: &ValueSemigroup, n: &LatticePoint, set: IndexSet) -> Result<Option<LatticePoint>> {
    n.check_dim(s.branches())?;
    check_set(s, set)?;
    Ok(s.find_witness(&delta_constraints(n, set)))
}

pub(crate) fn delta_constraints(n: &LatticePoint, set: IndexSet) -> Vec<Constraint> {
    (0..n.dim())
        .map(|i| if set.contains(i) { Constraint::Eq(n[i]) } else { Constraint::Gt(n[i]) })
        .collect()
}

/// A witness of `Δ_J^k(n) ≠ ∅`: equal on `J`, `>=` off `J` up to index `k`, `>` beyond.
pub fn delta_upper_nonempty(
    s: &ValueSemigroup,
    n: &LatticePoint,
    set: IndexSet,
    k: usize,
) -> Result<Option<LatticePoint>> {
    n.check_dim(s.branches())?;
    check_set(s, set)?;
    if k >= s.branches() {
        return Err(Error::IndexOutOfRange { index: k, branches: s.branches() });
    }
    if set.contains(k) {
        return Err(Error::InvalidK(k));
    }
    let constraints: Vec<Constraint> = (0..n.dim())
        .map(|d| {
            if set.contains(d) {
                Constraint::Eq(n[d])
            } else if d <= k {
                Constraint::Ge(n[d])
            } else {
                Constraint::Gt(n[d])
            }
        })
        .collect();
    Ok(s.find_witness(&constraints))
}

/// Members `β` with `β_i = n_i` and `β >= n` elsewhere.
pub(crate) fn upper_witness_all(s: &ValueSemigroup, n: &LatticePoint, i: usize) -> Option<LatticePoint> {
    let constraints: Vec<Constraint> = (0..n.dim())
        .map(|d| if d == i { Constraint::Eq(n[d]) } else { Constraint::Ge(n[d]) })
        .collect();
    s.find_witness(&constraints)
}

pub fn is_maximal(s: &ValueSemigroup, n: &LatticePoint) -> bool {
    s.contains(n)
        && (0..s.branches()).all(|i| s.find_witness(&delta_constraints(n, IndexSet::singleton(i))).is_none())
}

/// All maximal points, in lexicographic order. They all lie in `[0, δ]`.
pub fn maximal_points(s: &ValueSemigroup) -> &[LatticePoint] {
    s.maximal_cache()
        .get_or_init(|| s.box_members().filter(|n| is_maximal(s, n)).collect())
}

pub fn kind_of(s: &ValueSemigroup, n: &LatticePoint) -> Result<Kind> {
    n.check_dim(s.branches())?;
    if !is_maximal(s, n) {
        return Err(Error::NotMaximal(n.clone()));
    }
    let r = s.branches();
    if r <= 2 {
        return Ok(Kind::Trivial);
    }
    let mut values = Vec::with_capacity(r - 2);
    for j in 2..r {
        let mut empty = 0;
        let mut nonempty = 0;
        for set in IndexSet::subsets_of_size(r, j) {
            if s.find_witness(&delta_constraints(n, set)).is_some() {
                nonempty += 1;
            } else {
                empty += 1;
            }
        }
        match (empty, nonempty) {
            (_, 0) => values.push(0),
            (0, _) => values.push(1),
            _ => return Ok(Kind::Mixed),
        }
    }
    Ok(Kind::Uniform(values))
}

/// Number of maximal points dominated by `n`.
pub fn m_count(s: &ValueSemigroup, n: &LatticePoint, mode: Domination) -> usize {
    maximal_points(s)
        .iter()
        .filter(|g| match mode {
            Domination::Strict => g.lt_all(n),
            Domination::Weak => g.leq(n),
        })
        .count()
}

/// For a gap `n`, a branch `i` with `Δ_i^r(n) = ∅`.
pub fn gap_witness_lemma(s: &ValueSemigroup, n: &LatticePoint) -> Result<usize> {
    n.check_dim(s.branches())?;
    if s.contains(n) {
        return Err(Error::InvalidCombo(format!("{n} is a member, not a gap")));
    }
    (0..s.branches())
        .find(|&i| upper_witness_all(s, n, i).is_none())
        .ok_or_else(|| Error::LemmaViolated(format!("every Δ_i^r({n}) is nonempty although {n} is a gap")))
}

fn is_relative_maximal(s: &ValueSemigroup, n: &LatticePoint) -> bool {
    let r = s.branches();
    is_maximal(s, n)
        && IndexSet::proper_nonempty(r)
            .filter(|j| j.len() >= 2)
            .all(|j| s.find_witness(&delta_constraints(n, j)).is_some())
}

/// If some `Δ_i(n)` is empty while every `Δ_{ij}(n)` is not, `n` must be a
/// relative maximal point. Returns whether the hypothesis held.
pub fn relative_maximal_lemma_check(s: &ValueSemigroup, n: &LatticePoint) -> Result<bool> {
    n.check_dim(s.branches())?;
    let r = s.branches();
    // Δ sets are indexed by proper subsets, so a single branch has none.
    let hypothesis = r >= 2 && (0..r).any(|i| {
        s.find_witness(&delta_constraints(n, IndexSet::singleton(i))).is_none()
            && (0..r)
                .filter(|&j| j != i)
                .all(|j| s.find_witness(&delta_constraints(n, IndexSet::from_indices([i, j]))).is_some())
    });
    if hypothesis && !is_relative_maximal(s, n) {
        return Err(Error::LemmaViolated(format!(
            "{n} satisfies the hypothesis but is not a relative maximal point"
        )));
    }
    Ok(hypothesis)
}

/// Explains a gap by a projection gap or a dominated maximal point.
pub fn gap_remark(s: &ValueSemigroup, n: &LatticePoint) -> Result<GapCause> {
    n.check_dim(s.branches())?;
    if let Some(branch) = (0..s.branches()).find(|&i| s.gap_count(i, n[i]).unwrap_or(0) > 0) {
        return Ok(GapCause::ProjectionGap { branch });
    }
    maximal_points(s)
        .iter()
        .find(|g| g.leq(n))
        .map(|g| GapCause::DominatingMaximal(g.clone()))
        .ok_or_else(|| Error::LemmaViolated(format!("gap {n} has neither a projection gap nor a maximal point below")))
}

pub fn classify_point(s: &ValueSemigroup, n: &LatticePoint) -> Result<PointClassification> {
    n.check_dim(s.branches())?;
    let member = s.contains(n);
    let maximal = is_maximal(s, n);
    let kind = if maximal { Some(kind_of(s, n)?) } else { None };
    let witnesses = IndexSet::proper_nonempty(s.branches())
        .map(|set| DeltaWitness {
            set: set.to_string(),
            witness: s.find_witness(&delta_constraints(n, set)),
        })
        .collect();
    Ok(PointClassification { point: n.clone(), member, maximal, kind, witnesses })
}
