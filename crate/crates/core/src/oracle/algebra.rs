//! Finite models `O / t^N Ō` of a reduced curve singularity: subalgebras of
//! `∏_i F_p[t]/(t^{N_i})` given by generators, one truncated series per branch.

use serde::{Deserialize, Serialize};

use super::field::{Fp, Subspace};
use crate::error::{Error, Result};
use crate::lattice::LatticePoint;

/// On-disk description of an algebra: each generator lists one coefficient
/// vector `[c_0, c_1, …]` per branch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub p: u32,
    pub branches: usize,
    pub truncation: Vec<u32>,
    pub generators: Vec<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValueVector {
    Regular(LatticePoint),
    /// Some component vanishes modulo the truncation.
    NonRegular,
}

#[derive(Clone, Debug)]
pub struct BranchAlgebra {
    field: Fp,
    truncation: LatticePoint,
    offsets: Vec<usize>,
    generators: Vec<Vec<Vec<i64>>>,
    basis: Subspace,
}

impl BranchAlgebra {
    pub fn from_doc(doc: &AlgebraDoc) -> Result<Self> {
        if doc.truncation.len() != doc.branches {
            return Err(Error::DimensionMismatch { expected: doc.branches, found: doc.truncation.len() });
        }
        BranchAlgebra::new(doc.p, LatticePoint::new(doc.truncation.clone()), doc.generators.clone())
    }

    pub fn to_doc(&self) -> AlgebraDoc {
        AlgebraDoc {
            p: self.field.p(),
            branches: self.branches(),
            truncation: self.truncation.coords().to_vec(),
            generators: self.generators.clone(),
        }
    }

    /// Span closure of the generators under multiplication.
    pub fn new(p: u32, truncation: LatticePoint, generators: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        let field = Fp::new(p)?;
        let r = truncation.dim();
        if r == 0 || r > crate::lattice::IndexSet::MAX_BRANCHES {
            return Err(Error::MalformedInput(format!("unsupported branch count {r}")));
        }
        if truncation.coords().contains(&0) {
            return Err(Error::MalformedInput("every truncation order must be positive".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.len() != r) {
            return Err(Error::DimensionMismatch { expected: r, found: g.len() });
        }
        let mut offsets = Vec::with_capacity(r + 1);
        offsets.push(0);
        for &n in truncation.coords() {
            offsets.push(offsets.last().unwrap() + n as usize);
        }
        let len = offsets[r];
        let mut algebra = BranchAlgebra { field, truncation, offsets, generators, basis: Subspace::new(field, len) };
        let gens: Vec<Vec<u32>> = algebra.generators.iter().map(|g| algebra.element(g)).collect();
        for g in &gens {
            algebra.basis.insert(g.clone());
        }
        let cap = len + 1;
        let mut closed = false;
        for _ in 0..cap {
            let mut grew = false;
            let rows = algebra.basis.rows().to_vec();
            for b in &rows {
                for g in &gens {
                    grew |= algebra.basis.insert(algebra.mul(b, g));
                }
            }
            if !grew {
                closed = true;
                break;
            }
        }
        if !closed {
            return Err(Error::NotClosed(cap));
        }
        if !algebra.basis.contains(&algebra.one()) {
            return Err(Error::NonUnital);
        }
        let constants: Vec<Vec<u32>> = algebra
            .basis
            .rows()
            .iter()
            .map(|row| (0..r).map(|i| row[algebra.offsets[i]]).collect())
            .collect();
        let residue = Subspace::spanned_by(field, r, &(0..r).collect::<Vec<_>>(), &constants).dim();
        if residue != 1 {
            return Err(Error::NonLocal(residue));
        }
        Ok(algebra)
    }

    /// The same generators at another truncation.
    pub fn with_truncation(&self, truncation: LatticePoint) -> Result<Self> {
        truncation.check_dim(self.branches())?;
        BranchAlgebra::new(self.field.p(), truncation, self.generators.clone())
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn branches(&self) -> usize {
        self.truncation.dim()
    }

    pub fn truncation(&self) -> &LatticePoint {
        &self.truncation
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn basis(&self) -> &Subspace {
        &self.basis
    }

    pub fn generators(&self) -> &[Vec<Vec<i64>>] {
        &self.generators
    }

    /// Length of the flattened coefficient vectors.
    pub fn ambient_len(&self) -> usize {
        self.offsets[self.branches()]
    }

    pub(crate) fn column(&self, branch: usize, k: u32) -> usize {
        self.offsets[branch] + k as usize
    }

    /// Flattens per-branch coefficients, dropping terms beyond the truncation.
    pub fn element(&self, series: &[Vec<i64>]) -> Vec<u32> {
        let mut v = vec![0; self.ambient_len()];
        for (i, coeffs) in series.iter().enumerate() {
            for (k, &c) in coeffs.iter().enumerate().take(self.truncation[i] as usize) {
                v[self.offsets[i] + k] = self.field.reduce(c);
            }
        }
        v
    }

    pub fn one(&self) -> Vec<u32> {
        let mut v = vec![0; self.ambient_len()];
        for i in 0..self.branches() {
            v[self.offsets[i]] = 1;
        }
        v
    }

    pub fn contains(&self, z: &[u32]) -> bool {
        z.len() == self.ambient_len() && self.basis.contains(z)
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut out = vec![0; self.ambient_len()];
        for i in 0..self.branches() {
            let (lo, n) = (self.offsets[i], self.truncation[i] as usize);
            for j in 0..n {
                if a[lo + j] == 0 {
                    continue;
                }
                for k in 0..n - j {
                    out[lo + j + k] = self.field.add(out[lo + j + k], self.field.mul(a[lo + j], b[lo + k]));
                }
            }
        }
        out
    }

    /// Branch orders, `None` where a component vanishes.
    pub fn orders(&self, z: &[u32]) -> Vec<Option<u32>> {
        (0..self.branches())
            .map(|i| {
                let lo = self.offsets[i];
                (0..self.truncation[i]).find(|&k| z[lo + k as usize] != 0)
            })
            .collect()
    }

    pub fn value_vector(&self, z: &[u32]) -> ValueVector {
        match self.orders(z).into_iter().collect::<Option<Vec<u32>>>() {
            Some(v) => ValueVector::Regular(LatticePoint::new(v)),
            None => ValueVector::NonRegular,
        }
    }

    /// As [`value_vector`](Self::value_vector), refusing orders within
    /// `margin` of the truncation.
    pub fn value_vector_with_margin(&self, z: &[u32], margin: &LatticePoint) -> Result<ValueVector> {
        margin.check_dim(self.branches())?;
        let value = self.value_vector(z);
        if let ValueVector::Regular(v) = &value {
            if (0..self.branches()).any(|i| v[i] + margin[i] >= self.truncation[i]) {
                return Err(Error::TruncationUnsafe(v.clone()));
            }
        }
        Ok(value)
    }

    /// Columns `(i, k)` with `k < n_i`.
    pub(crate) fn columns_below(&self, n: &LatticePoint) -> Vec<bool> {
        let mut cols = vec![false; self.ambient_len()];
        for i in 0..self.branches() {
            for k in 0..n[i].min(self.truncation[i]) {
                cols[self.column(i, k)] = true;
            }
        }
        cols
    }

    /// The algebra re-echelonized with the columns below `n` as first pivots.
    pub(crate) fn split_at(&self, n: &LatticePoint) -> (Subspace, Vec<bool>) {
        let cols = self.columns_below(n);
        let order: Vec<usize> =
            (0..self.ambient_len()).filter(|&c| cols[c]).chain((0..self.ambient_len()).filter(|&c| !cols[c])).collect();
        let sub = Subspace::spanned_by(self.field, self.ambient_len(), &order, self.basis.rows());
        (sub, cols)
    }

    /// `A ∩ m^n`: elements whose order on every branch is at least `n_i`.
    pub fn ideal_at_least(&self, n: &LatticePoint) -> Result<Subspace> {
        n.check_dim(self.branches())?;
        let (sub, cols) = self.split_at(n);
        let rows = sub.rows_avoiding(&cols);
        Ok(Subspace::spanned_by(self.field, self.ambient_len(), &(0..self.ambient_len()).collect::<Vec<_>>(), &rows))
    }

    /// Image in the smaller truncation `t` (componentwise `<= N`).
    pub fn truncate(&self, t: &LatticePoint) -> Result<BranchAlgebra> {
        t.check_dim(self.branches())?;
        if !t.leq(&self.truncation) || t.coords().contains(&0) {
            return Err(Error::TruncationUnsafe(t.clone()));
        }
        let mut offsets = vec![0];
        for &n in t.coords() {
            offsets.push(offsets.last().unwrap() + n as usize);
        }
        let len = *offsets.last().unwrap();
        let mut basis = Subspace::new(self.field, len);
        for row in self.basis.rows() {
            let mut v = vec![0; len];
            for i in 0..self.branches() {
                for k in 0..t[i] as usize {
                    v[offsets[i] + k] = row[self.offsets[i] + k];
                }
            }
            basis.insert(v);
        }
        Ok(BranchAlgebra {
            field: self.field,
            truncation: t.clone(),
            offsets,
            generators: self.generators.clone(),
            basis,
        })
    }
}
