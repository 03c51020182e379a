//! Sparse complex matrices on the truncated Fock space.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Compressed-sparse-row complex matrix of dimension 2^M × 2^M.
///
/// Ladder operators touch one entry per occupied basis state, so everything
/// downstream (Hamiltonians, charge, bilinears) stays sparse; densification
/// is explicit and guarded.
#[derive(Debug, Clone, PartialEq)]
pub struct FockOperator {
    dim: usize,
    row_ptr: Vec<usize>,
    cols: Vec<u32>,
    vals: Vec<Complex64>,
}

impl FockOperator {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, row_ptr: vec![0; dim + 1], cols: Vec::new(), vals: Vec::new() }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            dim,
            row_ptr: (0..=dim).collect(),
            cols: (0..dim as u32).collect(),
            vals: vec![Complex64::ONE; dim],
        }
    }

    pub fn from_triplets(dim: usize, mut triplets: Vec<(u32, u32, Complex64)>) -> Self {
        triplets.sort_by_key(|t| (t.0, t.1));
        let mut merged: Vec<(u32, u32, Complex64)> = Vec::with_capacity(triplets.len());
        for t in triplets {
            if let Some(last) = merged.last_mut() {
                if last.0 == t.0 && last.1 == t.1 {
                    last.2 += t.2;
                    continue;
                }
            }
            merged.push(t);
        }
        merged.retain(|t| t.2 != Complex64::ZERO);
        let mut row_ptr = vec![0usize; dim + 1];
        let mut cols = Vec::with_capacity(merged.len());
        let mut vals = Vec::with_capacity(merged.len());
        for (r, c, v) in merged {
            row_ptr[r as usize + 1] += 1;
            cols.push(c);
            vals.push(v);
        }
        for r in 0..dim {
            row_ptr[r + 1] += row_ptr[r];
        }
        Self { dim, row_ptr, cols, vals }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        for k in self.row_ptr[row]..self.row_ptr[row + 1] {
            if self.cols[k] as usize == col {
                return self.vals[k];
            }
        }
        Complex64::ZERO
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, Complex64)> + '_ {
        (0..self.dim).flat_map(move |r| {
            (self.row_ptr[r]..self.row_ptr[r + 1])
                .map(move |k| (r as u32, self.cols[k], self.vals[k]))
        })
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let triplets = self.entries().map(|(r, c, v)| (r, c, v * factor)).collect();
        Self::from_triplets(self.dim, triplets)
    }

    /// self + factor · other.
    pub fn add_scaled(&self, other: &Self, factor: Complex64) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut triplets: Vec<_> = self.entries().collect();
        triplets.extend(other.entries().map(|(r, c, v)| (r, c, v * factor)));
        Self::from_triplets(self.dim, triplets)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, Complex64::ONE)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, -Complex64::ONE)
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let dim = self.dim;
        let mut acc = vec![Complex64::ZERO; dim];
        let mut touched: Vec<u32> = Vec::new();
        let mut triplets = Vec::new();
        for r in 0..dim {
            touched.clear();
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                let a = self.vals[k];
                let mid = self.cols[k] as usize;
                for k2 in other.row_ptr[mid]..other.row_ptr[mid + 1] {
                    let c = other.cols[k2];
                    if acc[c as usize] == Complex64::ZERO {
                        touched.push(c);
                    }
                    acc[c as usize] += a * other.vals[k2];
                }
            }
            touched.sort_unstable();
            for &c in &touched {
                let v = acc[c as usize];
                if v != Complex64::ZERO {
                    triplets.push((r as u32, c, v));
                }
                acc[c as usize] = Complex64::ZERO;
            }
        }
        Self::from_triplets(dim, triplets)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let triplets = self.entries().map(|(r, c, v)| (c, r, v.conj())).collect();
        Self::from_triplets(self.dim, triplets)
    }

    /// {A, B} = AB + BA.
    pub fn anticommutator(&self, other: &Self) -> Self {
        self.matmul(other).add(&other.matmul(self))
    }

    /// [A, B] = AB - BA.
    pub fn commutator(&self, other: &Self) -> Self {
        self.matmul(other).sub(&other.matmul(self))
    }

    pub fn apply(&self, v: &DVector<Complex64>) -> DVector<Complex64> {
        assert_eq!(v.len(), self.dim);
        let mut out = DVector::from_element(self.dim, Complex64::ZERO);
        for (r, c, val) in self.entries() {
            out[r as usize] += val * v[c as usize];
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.vals.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// max_{ij} |A_ij - B_ij|.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.sub(other).max_abs()
    }

    pub fn to_dense(&self) -> Result<DMatrix<Complex64>> {
        if self.dim > 4096 {
            return Err(Error::Domain(format!("refusing to densify a {0} x {0} matrix", self.dim)));
        }
        let mut m = DMatrix::from_element(self.dim, self.dim, Complex64::ZERO);
        for (r, c, v) in self.entries() {
            m[(r as usize, c as usize)] = v;
        }
        Ok(m)
    }

    /// Sorted real eigenvalues of a Hermitian operator (dense solve).
    pub fn hermitian_eigenvalues(&self) -> Result<Vec<f64>> {
        let dense = self.to_dense()?;
        let herm_dev = (&dense - dense.adjoint()).iter().map(|c| c.norm()).fold(0.0, f64::max);
        if herm_dev > 1e-10 * self.max_abs().max(1.0) {
            return Err(Error::Domain(format!(
                "matrix is not Hermitian (max deviation {herm_dev:.3e})"
            )));
        }
        let mut eig: Vec<f64> = dense.symmetric_eigen().eigenvalues.iter().copied().collect();
        eig.sort_by(f64::total_cmp);
        Ok(eig)
    }
}
