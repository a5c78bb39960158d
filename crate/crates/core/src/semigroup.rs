//! Value semigroups `S ⊂ Z_+^r` stored as a dense membership table on the
//! conductor box `[0, δ]`.
//!
//! Membership outside the box follows `n ∈ S ⇔ inf(n, δ) ∈ S`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Grid, IndexSet, LatticeBox, LatticePoint};

/// Input document listing `S ∩ [0, δ]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupDoc {
    pub branches: usize,
    pub conductor: Vec<u32>,
    pub points: Vec<Vec<u32>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axiom {
    S1,
    S2,
    S3,
    S4,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witnesses: Vec<LatticePoint>,
    pub note: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    fn push(&mut self, axiom: Axiom, witnesses: Vec<LatticePoint>, note: impl Into<String>) {
        self.violations.push(Violation { axiom, witnesses, note: note.into() });
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return writeln!(f, "all axioms hold");
        }
        for v in &self.violations {
            write!(f, "{}:", v.axiom)?;
            for w in &v.witnesses {
                write!(f, " {w}")?;
            }
            writeln!(f, " ({})", v.note)?;
        }
        Ok(())
    }
}

/// Condition on one coordinate of a witness `β` relative to a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    Eq(u32),
    Ge(u32),
    Gt(u32),
}

// Violations per axiom kept in a report.
const MAX_REPORTED: usize = 16;

#[derive(Debug)]
pub struct ValueSemigroup {
    delta: LatticePoint,
    grid: Grid,
    members: Vec<bool>,
    // membership of each single-branch projection on [0, δ_i]
    branch_members: Vec<Vec<bool>>,
    maximal: OnceLock<Vec<LatticePoint>>,
}

impl Clone for ValueSemigroup {
    fn clone(&self) -> Self {
        ValueSemigroup::from_table(self.delta.clone(), self.members.clone())
    }
}

impl PartialEq for ValueSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.delta == other.delta && self.members == other.members
    }
}

impl Eq for ValueSemigroup {}

impl ValueSemigroup {
    fn from_table(delta: LatticePoint, members: Vec<bool>) -> Self {
        let grid = Grid::new(delta.clone());
        let r = delta.dim();
        let mut branch_members: Vec<Vec<bool>> =
            (0..r).map(|i| vec![false; delta[i] as usize + 1]).collect();
        for (idx, _) in members.iter().enumerate().filter(|(_, m)| **m) {
            let p = grid.point(idx);
            for (i, row) in branch_members.iter_mut().enumerate() {
                row[p[i] as usize] = true;
            }
        }
        ValueSemigroup { delta, grid, members, branch_members, maximal: OnceLock::new() }
    }

    /// Builds and validates a semigroup from its points in the conductor box.
    pub fn from_points<I>(delta: LatticePoint, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = LatticePoint>,
    {
        let r = delta.dim();
        if r == 0 {
            return Err(Error::MalformedInput("a semigroup needs at least one branch".into()));
        }
        if r > IndexSet::MAX_BRANCHES {
            return Err(Error::MalformedInput(format!("at most 32 branches supported, got {r}")));
        }
        let grid = Grid::new(delta.clone());
        if grid.len() > 50_000_000 {
            return Err(Error::MalformedInput(format!("conductor box of {} cells is too large", grid.len())));
        }
        let mut members = vec![false; grid.len()];
        for p in points {
            p.check_dim(r)?;
            if !grid.contains(&p) {
                return Err(Error::MalformedInput(format!("point {p} lies outside the box [0, {delta}]")));
            }
            members[grid.index(&p)] = true;
        }
        let s = ValueSemigroup::from_table(delta, members);
        let report = s.validate_axioms();
        if report.passed() {
            Ok(s)
        } else {
            Err(Error::AxiomViolation(report))
        }
    }

    pub fn from_doc(doc: &SemigroupDoc) -> Result<Self> {
        if doc.conductor.len() != doc.branches {
            return Err(Error::MalformedInput(format!(
                "conductor has {} coordinates but branches = {}",
                doc.conductor.len(),
                doc.branches
            )));
        }
        ValueSemigroup::from_points(
            LatticePoint::new(doc.conductor.clone()),
            doc.points.iter().map(|p| LatticePoint::new(p.clone())),
        )
    }

    pub fn to_doc(&self) -> SemigroupDoc {
        SemigroupDoc {
            branches: self.branches(),
            conductor: self.delta.coords().to_vec(),
            points: self.box_members().map(LatticePoint::into_coords).collect(),
        }
    }

    /// Numerical semigroup (one branch) generated by `generators`.
    pub fn numerical(generators: &[u32]) -> Result<Self> {
        let gens: Vec<u32> = generators.iter().copied().filter(|&g| g > 0).collect();
        if gens.is_empty() {
            return ValueSemigroup::from_points(LatticePoint::from([0]), [LatticePoint::from([0])]);
        }
        let g = gens.iter().fold(0, |a, &b| gcd(a, b));
        if g != 1 {
            return Err(Error::MalformedInput(format!("generators have gcd {g}, no conductor exists")));
        }
        let lo = *gens.iter().min().unwrap() as usize;
        let hi = *gens.iter().max().unwrap() as usize;
        // Frobenius number < lo * hi
        let limit = lo * hi + hi;
        let mut member = vec![false; limit + 1];
        member[0] = true;
        for v in 1..=limit {
            member[v] = gens.iter().any(|&a| v >= a as usize && member[v - a as usize]);
        }
        let conductor = member.iter().rposition(|m| !m).map_or(0, |gap| gap + 1);
        let points = (0..=conductor)
            .filter(|&v| member[v])
            .map(|v| LatticePoint::new(vec![v as u32]));
        ValueSemigroup::from_points(LatticePoint::new(vec![conductor as u32]), points)
    }

    pub fn branches(&self) -> usize {
        self.delta.dim()
    }

    pub fn conductor(&self) -> &LatticePoint {
        &self.delta
    }

    pub fn conductor_box(&self) -> LatticeBox {
        LatticeBox::up_to(self.delta.clone())
    }

    /// Membership test. Panics if `n` has the wrong number of coordinates.
    pub fn contains(&self, n: &LatticePoint) -> bool {
        assert_eq!(n.dim(), self.branches(), "point {n} has the wrong dimension");
        if self.grid.contains(n) {
            self.members[self.grid.index(n)]
        } else {
            self.members[self.grid.index(&n.inf(&self.delta))]
        }
    }

    pub fn try_contains(&self, n: &LatticePoint) -> Result<bool> {
        n.check_dim(self.branches())?;
        Ok(self.contains(n))
    }

    /// Members of `S ∩ [0, δ]` in lexicographic order.
    pub fn box_members(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, m)| **m)
            .map(|(idx, _)| self.grid.point(idx))
    }

    /// Searches for a member `β` satisfying one constraint per coordinate.
    ///
    /// Coordinates are searched up to `max(value (+1 for Gt), δ_i)`: if any
    /// witness exists, its infimum with that cap is again a witness.
    pub fn find_witness(&self, constraints: &[Constraint]) -> Option<LatticePoint> {
        self.find_witness_with_slack(constraints, 0)
    }

    /// As [`find_witness`](Self::find_witness) but searching `slack` further in
    /// every free coordinate.
    pub fn find_witness_with_slack(&self, constraints: &[Constraint], slack: u32) -> Option<LatticePoint> {
        assert_eq!(constraints.len(), self.branches());
        let (lo, hi): (Vec<u32>, Vec<u32>) = constraints
            .iter()
            .zip(self.delta.coords())
            .map(|(c, &d)| match *c {
                Constraint::Eq(v) => (v, v),
                Constraint::Ge(v) => (v, v.max(d) + slack),
                Constraint::Gt(v) => (v + 1, (v + 1).max(d) + slack),
            })
            .unzip();
        let region = LatticeBox::new(LatticePoint::new(lo), LatticePoint::new(hi)).ok()?;
        region.iter().find(|b| self.contains(b))
    }

    pub fn validate_axioms(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        let r = self.branches();
        let zero = LatticePoint::zeros(r);

        // S1
        if !self.contains(&zero) {
            report.push(Axiom::S1, vec![zero.clone()], "0 is not a member");
        } else {
            let outer = LatticeBox::up_to(self.delta.shift(1));
            let min = outer
                .iter()
                .filter(|n| *n != zero && self.contains(n))
                .reduce(|a, b| a.inf(&b));
            if let Some(m) = min {
                if !self.contains(&m) {
                    report.push(Axiom::S1, vec![m], "minimum of S \\ {0} is not a member");
                }
            }
        }

        let members: Vec<LatticePoint> = self.box_members().collect();

        // S2
        let mut count = 0;
        'outer: for (a, m) in members.iter().enumerate() {
            for n in &members[a + 1..] {
                let inf = m.inf(n);
                if !self.contains(&inf) {
                    report.push(Axiom::S2, vec![m.clone(), n.clone(), inf], "infimum is a gap");
                    count += 1;
                    if count >= MAX_REPORTED {
                        break 'outer;
                    }
                }
            }
        }

        // S3
        if !self.contains(&self.delta) {
            report.push(Axiom::S3, vec![self.delta.clone()], "conductor is not a member");
        }
        for i in 0..r {
            if let Some(below) = self.delta.minus_unit(i) {
                if self.contains(&below) {
                    report.push(
                        Axiom::S3,
                        vec![self.delta.clone(), below],
                        format!("conductor is not minimal in direction {}", i + 1),
                    );
                }
            }
        }

        // S4
        let mut count = 0;
        'pivot: for (a, m) in members.iter().enumerate() {
            for n in &members[a + 1..] {
                for i0 in (0..r).filter(|&i| m[i] == n[i]) {
                    let constraints: Vec<Constraint> = (0..r)
                        .map(|k| {
                            if k == i0 {
                                Constraint::Gt(m[k])
                            } else if m[k] != n[k] {
                                Constraint::Eq(m[k].min(n[k]))
                            } else {
                                Constraint::Ge(m[k])
                            }
                        })
                        .collect();
                    if self.find_witness(&constraints).is_none() {
                        report.push(
                            Axiom::S4,
                            vec![m.clone(), n.clone()],
                            format!("no pivot above coordinate {}", i0 + 1),
                        );
                        count += 1;
                        if count >= MAX_REPORTED {
                            break 'pivot;
                        }
                    }
                }
            }
        }
        report
    }

    /// The projection `pr_J(S)` on the branches in `set`, with its own conductor.
    pub fn project(&self, set: IndexSet) -> Result<ValueSemigroup> {
        if set.is_empty() {
            return Err(Error::EmptyIndexSet);
        }
        set.check_within(self.branches())?;
        let upper = self.delta.project(set);
        let grid = Grid::new(upper.clone());
        let mut table = vec![false; grid.len()];
        for m in self.box_members() {
            table[grid.index(&m.project(set))] = true;
        }
        let conductor = minimal_conductor(&grid, &table).ok_or_else(|| {
            Error::MalformedInput(format!("projection on {set} has no unique conductor"))
        })?;
        // the conductor extension rule must reproduce the table
        for idx in 0..grid.len() {
            let p = grid.point(idx);
            if table[idx] != table[grid.index(&p.inf(&conductor))] {
                return Err(Error::MalformedInput(format!(
                    "projection on {set} is inconsistent with its conductor at {p}"
                )));
            }
        }
        let points: Vec<LatticePoint> = LatticeBox::up_to(conductor.clone())
            .iter()
            .filter(|p| table[grid.index(p)])
            .collect();
        ValueSemigroup::from_points(conductor, points)
    }

    /// Whether `v` lies in the single-branch projection `S_i`.
    pub fn branch_contains(&self, i: usize, v: u32) -> bool {
        let row = &self.branch_members[i];
        row[(v as usize).min(row.len() - 1)]
    }

    /// `s_i(n_i)`: number of gaps of `S_i` that are at most `n_i`.
    pub fn gap_count(&self, i: usize, n_i: u32) -> Result<u32> {
        if i >= self.branches() {
            return Err(Error::IndexOutOfRange { index: i, branches: self.branches() });
        }
        let row = &self.branch_members[i];
        let upto = (n_i as usize).min(row.len() - 1);
        Ok(row[..=upto].iter().filter(|m| !**m).count() as u32)
    }

    /// Σ_i s_i(n_i).
    pub fn total_gap_count(&self, n: &LatticePoint) -> u32 {
        (0..self.branches())
            .map(|i| self.gap_count(i, n[i]).expect("index in range"))
            .sum()
    }

    pub(crate) fn maximal_cache(&self) -> &OnceLock<Vec<LatticePoint>> {
        &self.maximal
    }
}

/// The unique minimal `c` with `[c, upper] ⊂ table`, if it exists.
fn minimal_conductor(grid: &Grid, table: &[bool]) -> Option<LatticePoint> {
    let upper = grid.upper().clone();
    let mut good = vec![false; grid.len()];
    for idx in (0..grid.len()).rev() {
        let p = grid.point(idx);
        good[idx] = table[idx]
            && (0..p.dim())
                .filter(|&i| p[i] < upper[i])
                .all(|i| good[grid.index(&p.plus_unit(i))]);
    }
    let candidates: BTreeSet<usize> = (0..grid.len()).filter(|&i| good[i]).collect();
    let c = candidates.iter().map(|&i| grid.point(i)).reduce(|a, b| a.inf(&b))?;
    good[grid.index(&c)].then_some(c)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
