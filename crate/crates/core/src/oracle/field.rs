//! Prime-field arithmetic and subspaces of `F_p^L` in reduced echelon form.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    p: u32,
}

impl Fp {
    pub fn new(p: u32) -> Result<Self> {
        let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if prime {
            Ok(Fp { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn p(self) -> u32 {
        self.p
    }

    pub fn reduce(self, c: i64) -> u32 {
        c.rem_euclid(self.p as i64) as u32
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        let (mut base, mut exp, mut acc) = (a as u64 % self.p as u64, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p as u64;
            }
            base = base * base % self.p as u64;
            exp >>= 1;
        }
        acc as u32
    }

    /// `y += c·x`.
    pub fn axpy(self, y: &mut [u32], c: u32, x: &[u32]) {
        if c == 0 {
            return;
        }
        for (a, &b) in y.iter_mut().zip(x) {
            *a = self.add(*a, self.mul(c, b));
        }
    }
}

/// A subspace kept in reduced echelon form with respect to a column order:
/// every row is zero on the columns ordered before its pivot and on every
/// other pivot column.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: Fp,
    len: usize,
    rank_of_col: Vec<usize>,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(field: Fp, len: usize) -> Self {
        Subspace::with_order(field, len, &(0..len).collect::<Vec<_>>())
    }

    /// `order` lists every column once; earlier columns are preferred as pivots.
    pub fn with_order(field: Fp, len: usize, order: &[usize]) -> Self {
        assert_eq!(order.len(), len);
        let mut rank_of_col = vec![usize::MAX; len];
        for (rank, &c) in order.iter().enumerate() {
            rank_of_col[c] = rank;
        }
        assert!(rank_of_col.iter().all(|&r| r != usize::MAX), "order must be a permutation");
        Subspace { field, len, rank_of_col, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn spanned_by<'a, I>(field: Fp, len: usize, order: &[usize], vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a Vec<u32>>,
    {
        let mut s = Subspace::with_order(field, len, order);
        for v in vectors {
            s.insert(v.clone());
        }
        s
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the subspace; the result vanishes on every pivot.
    pub fn reduce(&self, mut v: Vec<u32>) -> Vec<u32> {
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c != 0 {
                self.field.axpy(&mut v, self.field.p() - c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&c| c == 0)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<u32>) -> bool {
        assert_eq!(v.len(), self.len);
        let mut v = self.reduce(v);
        let Some(lead) = (0..self.len).filter(|&c| v[c] != 0).min_by_key(|&c| self.rank_of_col[c]) else {
            return false;
        };
        let inv = self.field.inv(v[lead]);
        for c in v.iter_mut() {
            *c = self.field.mul(*c, inv);
        }
        for row in &mut self.rows {
            let c = row[lead];
            if c != 0 {
                self.field.axpy(row, self.field.p() - c, &v);
            }
        }
        let at = self.pivots.iter().position(|&pv| self.rank_of_col[pv] > self.rank_of_col[lead]);
        let at = at.unwrap_or(self.rows.len());
        self.rows.insert(at, v);
        self.pivots.insert(at, lead);
        true
    }

    /// Rows whose pivot is not among `cols`; when `cols` come first in the
    /// column order these span the vectors vanishing on `cols`.
    pub fn rows_avoiding(&self, cols: &[bool]) -> Vec<Vec<u32>> {
        self.rows
            .iter()
            .zip(&self.pivots)
            .filter(|(_, &pv)| !cols[pv])
            .map(|(row, _)| row.clone())
            .collect()
    }

    /// Coordinates of a member in terms of the rows (the entries at the pivots).
    pub fn coordinates(&self, v: &[u32]) -> Vec<u32> {
        self.pivots.iter().map(|&pv| v[pv]).collect()
    }

    /// The member with the given coordinates.
    pub fn combine(&self, coords: &[u32]) -> Vec<u32> {
        let mut v = vec![0; self.len];
        for (row, &c) in self.rows.iter().zip(coords) {
            self.field.axpy(&mut v, c, row);
        }
        v
    }
}

/// All vectors of `F_p^d`, the first coordinate varying fastest.
pub fn all_coordinates(p: u32, d: usize) -> impl Iterator<Item = Vec<u32>> {
    let total = (p as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    let mut current = vec![0u32; d];
    let mut emitted = 0u128;
    std::iter::from_fn(move || {
        if emitted == total {
            return None;
        }
        let out = current.clone();
        emitted += 1;
        for c in current.iter_mut() {
            *c += 1;
            if *c < p {
                break;
            }
            *c = 0;
        }
        Some(out)
    })
}

/// Index of a coordinate vector in [`all_coordinates`] order.
pub fn coordinate_index(p: u32, coords: &[u32]) -> usize {
    coords.iter().rev().fold(0usize, |acc, &c| acc * p as usize + c as usize)
}
