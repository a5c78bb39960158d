//! Brute-force counterparts of the combinatorial computations, read off a
//! concrete truncated algebra over a prime field.
//!
//! Membership of `n` asks whether `A ∩ m^n` has an element whose
//! coefficient at `t^{n_i}` is nonzero on every branch. Only those `r`
//! coefficients matter, so the search enumerates the image of `A ∩ m^n` in
//! `F_p^r` rather than all of `A`. Zeta coefficients count orbits of the unit
//! group on elements of value `n`; two such elements lie in one orbit exactly
//! when they generate the same principal ideal, which is what the counter uses.

pub mod algebra;
pub mod field;

use std::collections::{BTreeMap, BTreeSet};

pub use algebra::{AlgebraDoc, BranchAlgebra, ValueVector};
use field::{all_coordinates, coordinate_index, Subspace};

use crate::error::{Error, Result};
use crate::lattice::{Grid, LatticeBox, LatticePoint};
use crate::semigroup::ValueSemigroup;

pub const WORK_LIMIT_ENV: &str = "CURVE_ZETA_WORK_LIMIT";
pub const DEFAULT_WORK_LIMIT: u128 = 1 << 24;

/// Rounds of raising the truncation before giving up on the conductor.
const MAX_RAISES: usize = 4;

/// The enumeration budget, overridable through `CURVE_ZETA_WORK_LIMIT`.
pub fn work_limit() -> u128 {
    std::env::var(WORK_LIMIT_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_WORK_LIMIT)
}

fn space_size(p: u32, dim: usize, limit: u128) -> Result<u128> {
    let size = (p as u128).checked_pow(dim as u32).unwrap_or(u128::MAX);
    if size > limit {
        Err(Error::WorkLimitExceeded { size, limit })
    } else {
        Ok(size)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MembershipMethod {
    /// Enumerates the leading-coefficient image of `A ∩ m^n`.
    #[default]
    Exhaustive,
    /// Checks that no branch's leading coefficient vanishes identically.
    /// Equivalent to the exhaustive test when `p >= r`, since a space over
    /// `F_p` is never a union of `p` or fewer proper subspaces.
    Linear,
}

/// Whether `A` has an element of value exactly `n`; needs `n < N`.
pub fn attains(a: &BranchAlgebra, n: &LatticePoint, method: MembershipMethod) -> Result<bool> {
    n.check_dim(a.branches())?;
    let r = a.branches();
    if !n.lt_all(a.truncation()) {
        return Err(Error::TruncationUnsafe(n.clone()));
    }
    let (sub, cols) = a.split_at(n);
    let leading: Vec<Vec<u32>> = sub
        .rows_avoiding(&cols)
        .iter()
        .map(|row| (0..r).map(|i| row[a.column(i, n[i])]).collect())
        .collect();
    let image = Subspace::spanned_by(a.field(), r, &(0..r).collect::<Vec<_>>(), &leading);
    match method {
        MembershipMethod::Exhaustive => Ok(all_coordinates(a.p(), image.dim())
            .any(|c| image.combine(&c).iter().all(|&x| x != 0))),
        MembershipMethod::Linear => {
            if (a.p() as usize) < r {
                return Err(Error::MalformedInput(format!(
                    "the linear membership test needs p >= r, got p = {} and r = {r}",
                    a.p()
                )));
            }
            Ok((0..r).all(|i| image.rows().iter().any(|row| row[i] != 0)))
        }
    }
}

/// `ℓ(n) = dim A / (A ∩ m^n)`; needs `n <= N`.
pub fn ell_from_algebra(a: &BranchAlgebra, n: &LatticePoint) -> Result<u32> {
    n.check_dim(a.branches())?;
    if !n.leq(a.truncation()) {
        return Err(Error::TruncationUnsafe(n.clone()));
    }
    let (sub, cols) = a.split_at(n);
    Ok(sub.pivots().iter().filter(|&&pv| cols[pv]).count() as u32)
}

/// Value vectors of every regular element, by listing all `p^dim` elements.
pub fn value_vectors_exhaustive(a: &BranchAlgebra, limit: u128) -> Result<BTreeSet<LatticePoint>> {
    space_size(a.p(), a.dim(), limit)?;
    let mut out = BTreeSet::new();
    for c in all_coordinates(a.p(), a.dim()) {
        if let ValueVector::Regular(v) = a.value_vector(&a.basis().combine(&c)) {
            out.insert(v);
        }
    }
    Ok(out)
}

fn check_orbit_margin(a: &BranchAlgebra, conductor: &LatticePoint, n: &LatticePoint) -> Result<()> {
    n.check_dim(a.branches())?;
    conductor.check_dim(a.branches())?;
    if n.add(conductor).lt_all(a.truncation()) {
        Ok(())
    } else {
        Err(Error::TruncationUnsafe(n.clone()))
    }
}

fn has_value(a: &BranchAlgebra, z: &[u32], n: &LatticePoint) -> bool {
    (0..a.branches()).all(|i| z[a.column(i, n[i])] != 0)
}

/// Number of unit orbits on elements of value `n`. Needs `n + δ < N`.
pub fn epsilon_from_algebra(a: &BranchAlgebra, conductor: &LatticePoint, n: &LatticePoint, limit: u128) -> Result<u128> {
    check_orbit_margin(a, conductor, n)?;
    let upper = a.ideal_at_least(n)?;
    let size = space_size(a.p(), upper.dim(), limit)?;
    let mut visited = vec![false; size as usize];
    let (mut orbits, mut work) = (0u128, size);
    for (idx, c) in all_coordinates(a.p(), upper.dim()).enumerate() {
        if visited[idx] {
            continue;
        }
        let z = upper.combine(&c);
        if !has_value(a, &z, n) {
            continue;
        }
        orbits += 1;
        let products: Vec<Vec<u32>> = a.basis().rows().iter().map(|b| a.mul(&z, b)).collect();
        let ideal = Subspace::spanned_by(a.field(), a.ambient_len(), &(0..a.ambient_len()).collect::<Vec<_>>(), &products);
        work += space_size(a.p(), ideal.dim(), limit)?;
        if work > limit {
            return Err(Error::WorkLimitExceeded { size: work, limit });
        }
        for d in all_coordinates(a.p(), ideal.dim()) {
            let w = ideal.combine(&d);
            if has_value(a, &w, n) {
                visited[coordinate_index(a.p(), &upper.coordinates(&w))] = true;
            }
        }
    }
    Ok(orbits)
}

/// Slow reference count: units are found by solving `u·w = 1` inside `A`,
/// and orbits are the literal sets `{u·z}`.
pub fn epsilon_by_unit_action(a: &BranchAlgebra, conductor: &LatticePoint, n: &LatticePoint, limit: u128) -> Result<u128> {
    check_orbit_margin(a, conductor, n)?;
    let size = space_size(a.p(), a.dim(), limit)?;
    let natural: Vec<usize> = (0..a.ambient_len()).collect();
    let one = a.one();
    let elements: Vec<Vec<u32>> = all_coordinates(a.p(), a.dim()).map(|c| a.basis().combine(&c)).collect();
    let units: Vec<&Vec<u32>> = elements
        .iter()
        .filter(|u| {
            let multiples: Vec<Vec<u32>> = a.basis().rows().iter().map(|b| a.mul(u, b)).collect();
            Subspace::spanned_by(a.field(), a.ambient_len(), &natural, &multiples).contains(&one)
        })
        .collect();
    let targets: BTreeSet<&Vec<u32>> = elements
        .iter()
        .filter(|z| a.value_vector(z) == ValueVector::Regular(n.clone()))
        .collect();
    if size.saturating_mul(units.len() as u128) > limit {
        return Err(Error::WorkLimitExceeded { size: size * units.len() as u128, limit });
    }
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut orbits = 0;
    for z in targets {
        if seen.contains(z) {
            continue;
        }
        orbits += 1;
        for u in &units {
            seen.insert(a.mul(u, z));
        }
    }
    Ok(orbits)
}

fn membership_window(a: &BranchAlgebra, method: MembershipMethod) -> Result<(Grid, Vec<bool>)> {
    let grid = Grid::new(LatticePoint::new(a.truncation().coords().iter().map(|&c| c - 1).collect()));
    let mut members = Vec::with_capacity(grid.len());
    for n in grid.iter() {
        members.push(attains(a, &n, method)?);
    }
    Ok((grid, members))
}

/// Least `c` in the window with `[c, N - 1]` inside the value set.
fn window_conductor(grid: &Grid, members: &[bool]) -> Option<LatticePoint> {
    let upper = grid.upper();
    let mut good = vec![false; grid.len()];
    for idx in (0..grid.len()).rev() {
        let n = grid.point(idx);
        good[idx] = members[idx]
            && (0..n.dim()).all(|i| n[i] == upper[i] || good[grid.index(&n.plus_unit(i))]);
    }
    let c = (0..grid.len())
        .filter(|&k| good[k])
        .map(|k| grid.point(k))
        .reduce(|a, b| a.inf(&b))?;
    good[grid.index(&c)].then_some(c)
}

fn field_warnings(p: u32, r: usize) -> Vec<String> {
    if (p as usize) < r {
        vec![format!("field size p = {p} is below the branch count r = {r}; the value set may be misrepresented")]
    } else {
        Vec::new()
    }
}

impl AlgebraDoc {
    /// Caveats that apply before the algebra is even built.
    pub fn warnings(&self) -> Vec<String> {
        field_warnings(self.p, self.branches)
    }
}

/// A certified value semigroup together with the algebra it came from.
#[derive(Clone, Debug)]
pub struct AlgebraOracle {
    algebra: BranchAlgebra,
    semigroup: ValueSemigroup,
    method: MembershipMethod,
    limit: u128,
}

impl AlgebraOracle {
    pub fn from_doc(doc: &AlgebraDoc) -> Result<Self> {
        AlgebraOracle::new(BranchAlgebra::from_doc(doc)?, MembershipMethod::default())
    }

    /// Reads the value semigroup off `a`, raising the truncation until the
    /// conductor `δ` satisfies `N >= 2δ + 2` and the membership pattern on
    /// `[0, δ + 1]` survives raising `N` by one.
    pub fn new(a: BranchAlgebra, method: MembershipMethod) -> Result<Self> {
        let mut a = a;
        let mut last = String::from("no conductor found in the truncation window");
        for _ in 0..MAX_RAISES {
            let (grid, members) = membership_window(&a, method)?;
            let Some(c) = window_conductor(&grid, &members) else {
                last = format!("no conductor found below {}", a.truncation());
                a = a.with_truncation(a.truncation().add(a.truncation()))?;
                continue;
            };
            let needed = c.add(&c).shift(2);
            if !needed.leq(a.truncation()) {
                last = format!("conductor candidate {c} needs truncation {needed}");
                a = a.with_truncation(needed.sup(&a.truncation().shift(1)))?;
                continue;
            }
            let raised = a.with_truncation(a.truncation().shift(1))?;
            let (raised_grid, raised_members) = membership_window(&raised, method)?;
            let stable = window_conductor(&raised_grid, &raised_members).as_ref() == Some(&c)
                && LatticeBox::up_to(c.shift(1))
                    .iter()
                    .all(|n| members[grid.index(&n)] == raised_members[raised_grid.index(&n)]);
            if !stable {
                last = format!("membership near {c} changed when raising the truncation");
                a = raised;
                continue;
            }
            let points = LatticeBox::up_to(c.clone()).iter().filter(|n| members[grid.index(n)]);
            let semigroup = ValueSemigroup::from_points(c, points)?;
            return Ok(AlgebraOracle { algebra: a, semigroup, method, limit: work_limit() });
        }
        Err(Error::ConductorNotCertified(last))
    }

    pub fn with_work_limit(mut self, limit: u128) -> Self {
        self.limit = limit;
        self
    }

    pub fn algebra(&self) -> &BranchAlgebra {
        &self.algebra
    }

    pub fn semigroup(&self) -> &ValueSemigroup {
        &self.semigroup
    }

    pub fn conductor(&self) -> &LatticePoint {
        self.semigroup.conductor()
    }

    pub fn method(&self) -> MembershipMethod {
        self.method
    }

    pub fn work_limit(&self) -> u128 {
        self.limit
    }

    /// Caveats about the input, such as a field smaller than the branch count.
    pub fn warnings(&self) -> Vec<String> {
        field_warnings(self.algebra.p(), self.algebra.branches())
    }

    fn algebra_covering(&self, t: &LatticePoint) -> Result<BranchAlgebra> {
        if t.leq(self.algebra.truncation()) {
            self.algebra.truncate(t)
        } else {
            self.algebra.with_truncation(t.clone())
        }
    }

    pub fn ell(&self, n: &LatticePoint) -> Result<u32> {
        n.check_dim(self.algebra.branches())?;
        let t = n.sup(self.algebra.truncation());
        ell_from_algebra(&self.algebra_covering(&t)?, n)
    }

    /// `ε_n` at `q = p`, counted in the truncation `n + δ + 1`.
    pub fn epsilon(&self, n: &LatticePoint) -> Result<u128> {
        self.epsilon_with_extra(n, 0)
    }

    fn epsilon_with_extra(&self, n: &LatticePoint, extra: u32) -> Result<u128> {
        n.check_dim(self.algebra.branches())?;
        let t = n.add(self.conductor()).shift(1 + extra);
        epsilon_from_algebra(&self.algebra_covering(&t)?, self.conductor(), n, self.limit)
    }

    /// Number of principal ideals of each codimension `ν <= max_codim`.
    pub fn principal_ideals_by_codim(&self, max_codim: u32) -> Result<BTreeMap<u32, u128>> {
        let r = self.algebra.branches();
        let top = LatticePoint::new(vec![max_codim; r]);
        let big = self.algebra_covering(&top.add(self.conductor()).shift(1).sup(self.algebra.truncation()))?;
        let mut out: BTreeMap<u32, u128> = (0..=max_codim).map(|nu| (nu, 0)).collect();
        for n in LatticeBox::up_to(top).iter() {
            if n.norm() > max_codim as u64 || !self.semigroup.contains(&n) {
                continue;
            }
            let a = big.truncate(&n.add(self.conductor()).shift(1))?;
            *out.get_mut(&(n.norm() as u32)).unwrap() += epsilon_from_algebra(&a, self.conductor(), &n, self.limit)?;
        }
        Ok(out)
    }

    /// Recomputes everything with every `N_i` raised by one.
    pub fn truncation_stability(&self) -> Result<StabilityReport> {
        let raised = AlgebraOracle::new(self.algebra.with_truncation(self.algebra.truncation().shift(1))?, self.method)?;
        let delta = self.conductor().clone();
        let semigroup_stable = raised.semigroup == self.semigroup;
        let ell_box = LatticeBox::up_to(delta.shift(1));
        let mut ell_stable = true;
        for n in ell_box.iter() {
            ell_stable &= ell_from_algebra(&self.algebra, &n)? == ell_from_algebra(&raised.algebra, &n)?;
        }
        let (mut epsilon_stable, mut epsilon_points, mut epsilon_skipped) = (true, 0, 0);
        for n in LatticeBox::up_to(delta.clone()).iter().filter(|n| self.semigroup.contains(n)) {
            match (self.epsilon_with_extra(&n, 0), raised.epsilon_with_extra(&n, 1)) {
                (Ok(a), Ok(b)) => {
                    epsilon_stable &= a == b;
                    epsilon_points += 1;
                }
                (Err(Error::WorkLimitExceeded { .. }), _) | (_, Err(Error::WorkLimitExceeded { .. })) => epsilon_skipped += 1,
                (Err(e), _) | (_, Err(e)) => return Err(e),
            }
        }
        Ok(StabilityReport {
            semigroup_stable,
            ell_stable,
            epsilon_stable,
            ell_points: ell_box.len(),
            epsilon_points,
            epsilon_skipped,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub semigroup_stable: bool,
    pub ell_stable: bool,
    pub epsilon_stable: bool,
    pub ell_points: usize,
    pub epsilon_points: usize,
    /// Points whose orbit count exceeds the work limit.
    pub epsilon_skipped: usize,
}

impl StabilityReport {
    pub fn stable(&self) -> bool {
        self.semigroup_stable && self.ell_stable && self.epsilon_stable
    }
}
