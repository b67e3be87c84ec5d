//! Numerical dimension of the space of interface data of C¹ functions.
//!
//! The unknowns are the first two coefficient rows of both patches. The
//! equations are continuity of the trace and the G¹ condition
//! `α^(R) ∂_u g^(L) − α^(L) ∂_u g^(R) + β ∂_v g₀ = 0`, sampled on every
//! element.

use nalgebra::DMatrix;

use super::linalg::numerical_nullity;
use crate::c1_basis::{dimension_for, lambda};
use crate::error::Result;
use crate::gluing::GluingData;
use crate::spline_core::KnotVector;

/// Singular values below this fraction of the largest count as zero.
pub const KERNEL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct KernelReport {
    pub unknowns: usize,
    pub equations: usize,
    /// Numerical kernel dimension.
    pub nullity: usize,
    /// `dim V¹₂` from the dimension formula.
    pub expected: usize,
}

impl KernelReport {
    pub fn matches(&self) -> bool {
        self.nullity == self.expected
    }
}

/// Constraint matrix on the unknowns `(c₀^(L), c₁^(L), c₀^(R), c₁^(R))`.
pub fn constraint_matrix(space: &KnotVector, gluing: &GluingData) -> Result<DMatrix<f64>> {
    let n = space.dim();
    let p = space.degree();
    let inv_lam = 1.0 / lambda(space);
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for j in 0..n {
        let mut row = vec![0.0; 4 * n];
        row[j] = 1.0;
        row[2 * n + j] = -1.0;
        rows.push(row);
    }
    let per_element = p + 3;
    for (a, b) in space.elements() {
        for s in 0..per_element {
            let v = a + (b - a) * (s as f64 + 0.5) / per_element as f64;
            let vals = space.eval_basis(v)?;
            let ders = space.eval_derivative_basis(v, 1)?;
            let (al, ar, beta) = (gluing.alpha_l.eval(v), gluing.alpha_r.eval(v), gluing.beta.eval(v));
            let mut row = vec![0.0; 4 * n];
            for &(j, nj) in &vals {
                row[j] -= ar * inv_lam * nj;
                row[n + j] += ar * inv_lam * nj;
                row[2 * n + j] += al * inv_lam * nj;
                row[3 * n + j] -= al * inv_lam * nj;
            }
            for &(j, dj) in &ders {
                row[j] += beta * dj;
            }
            rows.push(row);
        }
    }
    Ok(DMatrix::from_fn(rows.len(), 4 * n, |i, j| rows[i][j]))
}

/// Compares the numerical kernel dimension of the constraint matrix with
/// `dim V¹₂` from the dimension formula.
pub fn kernel_rank_oracle(space: &KnotVector, gluing: &GluingData) -> Result<KernelReport> {
    let m = constraint_matrix(space, gluing)?;
    let expected = dimension_for(space, gluing)?.dim_v1_2;
    Ok(KernelReport { unknowns: m.ncols(), equations: m.nrows(), nullity: numerical_nullity(&m, KERNEL_TOL), expected })
}
