//! Points of `Z_+^r`, index sets of branches and rectangular boxes of points.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vector of nonnegative branch valuations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(Vec<u32>);

impl LatticePoint {
    pub fn new(coords: Vec<u32>) -> Self {
        LatticePoint(coords)
    }

    pub fn zeros(r: usize) -> Self {
        LatticePoint(vec![0; r])
    }

    /// The point with 1 at every index of `set` and 0 elsewhere.
    pub fn indicator(r: usize, set: IndexSet) -> Self {
        LatticePoint((0..r).map(|i| set.contains(i) as u32).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.0
    }

    /// Sum of the coordinates.
    pub fn norm(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    pub fn inf(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn sup(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Componentwise `self <= other`.
    pub fn leq(&self, other: &LatticePoint) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise `self < other` in every coordinate.
    pub fn lt_all(&self, other: &LatticePoint) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a < b)
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Adds `amount` to every coordinate.
    pub fn shift(&self, amount: u32) -> LatticePoint {
        LatticePoint(self.0.iter().map(|a| a + amount).collect())
    }

    pub fn plus_unit(&self, i: usize) -> LatticePoint {
        let mut c = self.0.clone();
        c[i] += 1;
        LatticePoint(c)
    }

    pub fn minus_unit(&self, i: usize) -> Option<LatticePoint> {
        let mut c = self.0.clone();
        c[i] = c[i].checked_sub(1)?;
        Some(LatticePoint(c))
    }

    pub fn plus_set(&self, set: IndexSet) -> LatticePoint {
        LatticePoint(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &c)| c + set.contains(i) as u32)
                .collect(),
        )
    }

    /// Coordinates restricted to `set`, in increasing index order.
    pub fn project(&self, set: IndexSet) -> LatticePoint {
        LatticePoint(set.iter().map(|i| self.0[i]).collect())
    }

    pub(crate) fn check_dim(&self, r: usize) -> Result<()> {
        if self.dim() == r {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: r, found: self.dim() })
        }
    }
}

impl std::ops::Index<usize> for LatticePoint {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for LatticePoint {
    fn from(v: Vec<u32>) -> Self {
        LatticePoint(v)
    }
}

impl<const N: usize> From<[u32; N]> for LatticePoint {
    fn from(v: [u32; N]) -> Self {
        LatticePoint(v.to_vec())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A subset of the branch indices `{0, .., r-1}`, stored as a bit mask.
///
/// Indices are 0-based in the API; `Display` prints them 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndexSet(u32);

impl IndexSet {
    pub const MAX_BRANCHES: usize = 32;

    pub fn empty() -> Self {
        IndexSet(0)
    }

    pub fn singleton(i: usize) -> Self {
        IndexSet(1 << i)
    }

    pub fn full(r: usize) -> Self {
        if r >= 32 {
            IndexSet(u32::MAX)
        } else {
            IndexSet((1u32 << r) - 1)
        }
    }

    pub fn from_mask(mask: u32) -> Self {
        IndexSet(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        IndexSet(indices.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn insert(self, i: usize) -> Self {
        IndexSet(self.0 | (1 << i))
    }

    pub fn complement(self, r: usize) -> Self {
        IndexSet(!self.0 & IndexSet::full(r).0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.0 & (1 << i) != 0)
    }

    /// Largest index in the set.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    pub(crate) fn check_within(self, r: usize) -> Result<()> {
        match self.max() {
            Some(m) if m >= r => Err(Error::IndexOutOfRange { index: m, branches: r }),
            _ => Ok(()),
        }
    }

    /// All subsets of `{0, .., r-1}` with exactly `h` elements, in increasing mask order.
    pub fn subsets_of_size(r: usize, h: usize) -> impl Iterator<Item = IndexSet> {
        (0..=IndexSet::full(r).0)
            .filter(move |m| m.count_ones() as usize == h)
            .map(IndexSet)
    }

    /// All nonempty subsets other than the full set.
    pub fn proper_nonempty(r: usize) -> impl Iterator<Item = IndexSet> {
        let full = IndexSet::full(r).0;
        (1..full).map(IndexSet)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// The closed box `[lo, hi]` of lattice points. Empty when some `lo_i > hi_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBox {
    lo: LatticePoint,
    hi: LatticePoint,
}

impl LatticeBox {
    pub fn new(lo: LatticePoint, hi: LatticePoint) -> Result<Self> {
        hi.check_dim(lo.dim())?;
        Ok(LatticeBox { lo, hi })
    }

    /// The box `[0, hi]`.
    pub fn up_to(hi: LatticePoint) -> Self {
        LatticeBox { lo: LatticePoint::zeros(hi.dim()), hi }
    }

    pub fn lo(&self) -> &LatticePoint {
        &self.lo
    }

    pub fn hi(&self) -> &LatticePoint {
        &self.hi
    }

    pub fn dim(&self) -> usize {
        self.lo.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.lo.coords().iter().zip(self.hi.coords()).any(|(l, h)| l > h)
    }

    pub fn contains(&self, n: &LatticePoint) -> bool {
        self.lo.leq(n) && n.leq(&self.hi)
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        self.lo
            .coords()
            .iter()
            .zip(self.hi.coords())
            .map(|(l, h)| (h - l + 1) as usize)
            .product()
    }

    /// Points in lexicographic order (last coordinate varies fastest).
    pub fn iter(&self) -> BoxIter {
        BoxIter {
            lo: self.lo.coords().to_vec(),
            hi: self.hi.coords().to_vec(),
            next: (!self.is_empty()).then(|| self.lo.coords().to_vec()),
        }
    }
}

pub struct BoxIter {
    lo: Vec<u32>,
    hi: Vec<u32>,
    next: Option<Vec<u32>>,
}

impl Iterator for BoxIter {
    type Item = LatticePoint;

    fn next(&mut self) -> Option<LatticePoint> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut k = succ.len();
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            if succ[k] < self.hi[k] {
                succ[k] += 1;
                self.next = Some(succ);
                break;
            }
            succ[k] = self.lo[k];
        }
        Some(LatticePoint(current))
    }
}

/// Dense row-major indexing of the box `[0, upper]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Grid {
    upper: LatticePoint,
    strides: Vec<usize>,
    len: usize,
}

impl Grid {
    pub fn new(upper: LatticePoint) -> Self {
        let r = upper.dim();
        let mut strides = vec![1usize; r];
        let mut len = 1usize;
        for i in (0..r).rev() {
            strides[i] = len;
            len *= upper[i] as usize + 1;
        }
        Grid { upper, strides, len }
    }

    pub fn upper(&self) -> &LatticePoint {
        &self.upper
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn contains(&self, n: &LatticePoint) -> bool {
        n.leq(&self.upper)
    }

    pub fn index(&self, n: &LatticePoint) -> usize {
        n.coords()
            .iter()
            .zip(&self.strides)
            .map(|(&c, &s)| c as usize * s)
            .sum()
    }

    pub fn point(&self, mut idx: usize) -> LatticePoint {
        let coords = self
            .strides
            .iter()
            .map(|&s| {
                let c = idx / s;
                idx %= s;
                c as u32
            })
            .collect();
        LatticePoint(coords)
    }

    pub fn iter(&self) -> BoxIter {
        LatticeBox::up_to(self.upper.clone()).iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_iteration_is_lexicographic_and_matches_grid() {
        let g = Grid::new(LatticePoint::from([1, 2]));
        let pts: Vec<_> = g.iter().collect();
        assert_eq!(pts.len(), 6);
        assert_eq!(pts[1], LatticePoint::from([0, 1]));
        for (k, p) in pts.iter().enumerate() {
            assert_eq!(g.index(p), k);
            assert_eq!(&g.point(k), p);
        }
    }

    #[test]
    fn empty_box() {
        let b = LatticeBox::new(LatticePoint::from([2, 0]), LatticePoint::from([1, 3])).unwrap();
        assert!(b.is_empty());
        assert_eq!(b.iter().count(), 0);
        assert_eq!(b.len(), 0);
    }

    #[test]
    fn index_sets() {
        let j = IndexSet::from_indices([0, 2]);
        assert_eq!(j.to_string(), "{1,3}");
        assert_eq!(j.complement(3), IndexSet::singleton(1));
        assert_eq!(IndexSet::subsets_of_size(4, 2).count(), 6);
        assert_eq!(IndexSet::proper_nonempty(3).count(), 6);
        assert_eq!(j.max(), Some(2));
        assert!(j.check_within(2).is_err());
    }

    #[test]
    fn point_ops() {
        let a = LatticePoint::from([1, 4]);
        let b = LatticePoint::from([3, 2]);
        assert_eq!(a.inf(&b), LatticePoint::from([1, 2]));
        assert_eq!(a.sup(&b), LatticePoint::from([3, 4]));
        assert_eq!(a.plus_set(IndexSet::singleton(1)), LatticePoint::from([1, 5]));
        assert_eq!(a.to_string(), "(1,4)");
        assert_eq!(LatticePoint::zeros(2).minus_unit(0), None);
    }
}
