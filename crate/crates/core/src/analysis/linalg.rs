//! Small dense kernels: constrained least squares and symmetric eigenvalues.

use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::error::{Error, Result};

/// Matrices above this size use nalgebra's symmetric QR iteration instead
/// of cyclic Jacobi.
pub const JACOBI_MAX_DIM: usize = 200;

const JACOBI_THRESHOLD: f64 = 1e-13;

/// Minimizer of `‖A x − b‖₂`, optionally subject to `C x = d`.
///
/// The constrained problem is solved through its KKT system
/// `[[AᵀA, Cᵀ], [C, 0]] (x, μ) = (Aᵀb, d)`; afterwards the constraint residual
/// and the stationarity residual are checked.
pub fn solve_least_squares(
    a: &DMatrix<f64>,
    b: &DVector<f64>,
    constraints: Option<(&DMatrix<f64>, &DVector<f64>)>,
) -> Result<DVector<f64>> {
    let n = a.ncols();
    if a.nrows() != b.len() {
        return Err(Error::InvalidParameters("least squares: row count mismatch".into()));
    }
    let Some((c, d)) = constraints else {
        let svd = a.clone().svd(true, true);
        let smax = svd.singular_values.max();
        let rank = svd.singular_values.iter().filter(|&&s| s > 1e-12 * smax).count();
        if rank < n {
            return Err(Error::RankDeficient { rank, columns: n });
        }
        return svd.solve(b, 1e-12 * smax).map_err(|e| Error::Singular(e.to_string()));
    };
    if c.ncols() != n || c.nrows() != d.len() {
        return Err(Error::InvalidParameters("least squares: constraint shape mismatch".into()));
    }
    let m = c.nrows();
    let ata = a.transpose() * a;
    let atb = a.transpose() * b;
    let mut kkt = DMatrix::zeros(n + m, n + m);
    kkt.view_mut((0, 0), (n, n)).copy_from(&ata);
    kkt.view_mut((0, n), (n, m)).copy_from(&c.transpose());
    kkt.view_mut((n, 0), (m, n)).copy_from(c);
    let mut rhs = DVector::zeros(n + m);
    rhs.rows_mut(0, n).copy_from(&atb);
    rhs.rows_mut(n, m).copy_from(d);
    let svd = kkt.clone().svd(true, true);
    let smax = svd.singular_values.max();
    let sol = svd.solve(&rhs, 1e-12 * smax).map_err(|e| Error::Singular(e.to_string()))?;
    let x = sol.rows(0, n).into_owned();
    let scale = 1.0f64.max(d.amax()).max(c.amax() * x.amax());
    let cres = (c * &x - d).amax();
    if cres > 1e-9 * scale {
        return Err(Error::InconsistentConstraints(cres));
    }
    let stationarity = (&kkt * &sol - &rhs).rows(0, n).amax();
    if stationarity > 1e-8 * 1.0f64.max(atb.amax()).max(ata.amax() * x.amax()) {
        return Err(Error::Singular(format!("least squares stationarity residual {stationarity:e}")));
    }
    Ok(x)
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
pub fn jacobi_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let n = m.nrows();
    let mut a = m.clone();
    let total = a.norm();
    if total == 0.0 {
        return vec![0.0; n];
    }
    for _sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += a[(p, q)] * a[(p, q)];
            }
        }
        if off.sqrt() <= JACOBI_THRESHOLD * total {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Eigenvalues of a symmetric matrix, ascending.
pub fn symmetric_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    if m.nrows() <= JACOBI_MAX_DIM {
        return jacobi_eigenvalues(m);
    }
    let mut ev: Vec<f64> = SymmetricEigen::new(m.clone()).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Eigenvalues, ascending, of `D^{-1/2} M D^{-1/2}` with `D = diag(M)`.
pub fn diag_scaled_eigenvalues(m: &DMatrix<f64>) -> Result<Vec<f64>> {
    let n = m.nrows();
    let mut scale = Vec::with_capacity(n);
    for i in 0..n {
        let d = m[(i, i)];
        if d <= 0.0 || !d.is_finite() {
            return Err(Error::Singular(format!("non-positive diagonal entry {d} at {i}")));
        }
        scale.push(1.0 / d.sqrt());
    }
    let scaled = DMatrix::from_fn(n, n, |i, j| 0.5 * (m[(i, j)] + m[(j, i)]) * scale[i] * scale[j]);
    Ok(symmetric_eigenvalues(&scaled))
}

/// Spectral condition number of `D^{-1/2} M D^{-1/2}` with `D = diag(M)`.
pub fn condition_diag_scaled(m: &DMatrix<f64>) -> Result<f64> {
    let ev = diag_scaled_eigenvalues(m)?;
    condition_from_eigenvalues(&ev)
}

/// `λ_max / λ_min` of ascending eigenvalues of a positive definite matrix.
pub fn condition_from_eigenvalues(ev: &[f64]) -> Result<f64> {
    let (lo, hi) = (ev[0], ev[ev.len() - 1]);
    if lo <= 0.0 {
        return Err(Error::Singular(format!("matrix is not positive definite (min eigenvalue {lo:e})")));
    }
    Ok(hi / lo)
}

/// Number of singular values below `rel_tol · σ_max` plus the column
/// deficit of a wide matrix.
pub fn numerical_nullity(m: &DMatrix<f64>, rel_tol: f64) -> usize {
    let n = m.ncols();
    if m.nrows() == 0 {
        return n;
    }
    let sv = m.clone().svd(false, false).singular_values;
    let smax = sv.max();
    let rank = sv.iter().filter(|&&s| s > rel_tol * smax).count();
    n - rank
}
