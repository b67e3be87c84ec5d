//! Coefficient matrices of the trace and transversal functions.
//!
//! On patch `S` the first two coefficient rows of the trace functions `φ₀,ᵢ`
//! are the rows of `A₁` and `A₂^(S)`; those of the transversal functions
//! `φ₁,ⱼ` are `0` and the rows of `A₃^(S)`.

use nalgebra::{DMatrix, DVector};

use crate::analysis::linalg::solve_least_squares;
use crate::blossom::{derivative_coeffs, knot_insertion_coeffs, represent_in, Product};
use crate::c1_basis::{build_basis, lambda, smoother, transversal_space, Basis, BasisKind};
use crate::error::{Error, Result};
use crate::gluing::{GluingData, Side};
use crate::spline_core::{KnotVector, Polynomial, SplineFunction1D};

/// Entries below this fraction of the largest entry of their row are
/// treated as round-off and dropped.
pub const DROP_TOL: f64 = 1e-13;

/// Row-major sparse matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, f64)>>,
}

impl SparseMatrix {
    pub fn identity(n: usize) -> Self {
        Self { nrows: n, ncols: n, rows: (0..n).map(|i| vec![(i, 1.0)]).collect() }
    }

    /// Matrix from dense rows, dropping round-off entries.
    pub fn from_dense_rows(ncols: usize, dense: &[Vec<f64>]) -> Self {
        let rows = dense
            .iter()
            .map(|row| {
                let max = row.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                row.iter().copied().enumerate().filter(|(_, v)| v.abs() > DROP_TOL * max).collect()
            })
            .collect();
        Self { nrows: dense.len(), ncols, rows }
    }

    pub fn from_triplets(nrows: usize, ncols: usize, triplets: &[(usize, usize, f64)]) -> Result<Self> {
        let mut rows = vec![Vec::new(); nrows];
        for &(i, j, v) in triplets {
            if i >= nrows || j >= ncols {
                return Err(Error::InvalidParameters(format!("triplet ({i}, {j}) outside {nrows}x{ncols}")));
            }
            rows[i].push((j, v));
        }
        for row in &mut rows {
            row.sort_by_key(|e| e.0);
        }
        Ok(Self { nrows, ncols, rows })
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &[(usize, f64)] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.rows[i].iter().find(|e| e.0 == j).map_or(0.0, |e| e.1)
    }

    pub fn dense_row(&self, i: usize) -> Vec<f64> {
        let mut out = vec![0.0; self.ncols];
        for &(j, v) in &self.rows[i] {
            out[j] = v;
        }
        out
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.nrows, self.ncols);
        for (i, row) in self.rows.iter().enumerate() {
            for &(j, v) in row {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| row.iter().map(move |&(j, v)| (i, j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn scaled(&self, w: f64) -> Self {
        Self {
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self.rows.iter().map(|r| r.iter().map(|&(j, v)| (j, w * v)).collect()).collect(),
        }
    }

    /// `self · other`.
    pub fn matmul(&self, other: &SparseMatrix) -> Result<Self> {
        if self.ncols != other.nrows {
            return Err(Error::IncompatibleSpaces("matrix product shape mismatch".into()));
        }
        let dense: Vec<Vec<f64>> = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = vec![0.0; other.ncols];
                for &(k, a) in row {
                    for &(j, b) in &other.rows[k] {
                        acc[j] += a * b;
                    }
                }
                acc
            })
            .collect();
        Ok(Self::from_dense_rows(other.ncols, &dense))
    }

    pub fn add(&self, other: &SparseMatrix) -> Result<Self> {
        if self.nrows != other.nrows || self.ncols != other.ncols {
            return Err(Error::IncompatibleSpaces("matrix sum shape mismatch".into()));
        }
        let dense: Vec<Vec<f64>> = (0..self.nrows)
            .map(|i| {
                let mut row = self.dense_row(i);
                for &(j, v) in &other.rows[i] {
                    row[j] += v;
                }
                row
            })
            .collect();
        Ok(Self::from_dense_rows(self.ncols, &dense))
    }

    /// Largest entry-wise difference.
    pub fn max_abs_diff(&self, other: &SparseMatrix) -> f64 {
        if self.nrows != other.nrows || self.ncols != other.ncols {
            return f64::INFINITY;
        }
        (&self.to_dense() - &other.to_dense()).amax()
    }
}

/// Rows: coefficients of the B-splines of `t_tilde` in `S(t)` (knot insertion).
pub fn matrix_abar(t_tilde: &KnotVector, t: &KnotVector) -> Result<SparseMatrix> {
    if !t.is_refinement_of(t_tilde) {
        return Err(Error::IncompatibleSpaces("T̃ must be coarser than T".into()));
    }
    let rows = (0..t_tilde.dim())
        .map(|i| Ok(knot_insertion_coeffs(&SplineFunction1D::bspline(t_tilde, i), t)?.coefficients().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    Ok(SparseMatrix::from_dense_rows(t.dim(), &rows))
}

/// Rows: coefficients of the derivatives of the B-splines of `t_tilde` in
/// `S(T^{p−1,r})`, the space `t` with degree and multiplicities lowered by one.
pub fn matrix_atilde(t_tilde: &KnotVector, t: &KnotVector) -> Result<SparseMatrix> {
    if !t.is_refinement_of(t_tilde) {
        return Err(Error::IncompatibleSpaces("T̃ must be coarser than T".into()));
    }
    let target = t.lowered()?;
    let rows = (0..t_tilde.dim())
        .map(|i| {
            let d = derivative_coeffs(&SplineFunction1D::bspline(t_tilde, i))?;
            Ok(knot_insertion_coeffs(&d, &target)?.coefficients().to_vec())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SparseMatrix::from_dense_rows(target.dim(), &rows))
}

/// Rows: coefficients of `w · Mᵢ` in `S(t)`, with `Mᵢ` the B-splines of
/// `source` (degree `p − 1`) and `w` linear.
pub fn matrix_ahat(w: &Polynomial, source: &KnotVector, t: &KnotVector) -> Result<SparseMatrix> {
    if w.degree().unwrap_or(0) > 1 {
        return Err(Error::InvalidParameters(format!("w must be linear, got {w}")));
    }
    if source.degree() + 1 != t.degree() || !source.same_breakpoints(t) {
        return Err(Error::IncompatibleSpaces("source must be of degree p − 1 on the breakpoints of T".into()));
    }
    let rows = (0..source.dim())
        .map(|i| {
            let m = SplineFunction1D::bspline(source, i);
            Ok(represent_in(&Product { left: w, right: &m }, t)?.coefficients().to_vec())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SparseMatrix::from_dense_rows(t.dim(), &rows))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockCase {
    BetaZero,
    ZBetaZero,
    /// Read off from the coefficient grids of an assembled basis.
    FromBasis,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientMatrices {
    pub a1: SparseMatrix,
    pub a2_l: SparseMatrix,
    pub a2_r: SparseMatrix,
    pub a3_l: SparseMatrix,
    pub a3_r: SparseMatrix,
    pub case: BlockCase,
    pub degree: usize,
    pub breakpoints: Vec<f64>,
}

impl CoefficientMatrices {
    pub fn a2(&self, side: Side) -> &SparseMatrix {
        match side {
            Side::L => &self.a2_l,
            Side::R => &self.a2_r,
        }
    }

    pub fn a3(&self, side: Side) -> &SparseMatrix {
        match side {
            Side::L => &self.a3_l,
            Side::R => &self.a3_r,
        }
    }
}

fn transversal_block(gluing: &GluingData, side: Side, t: &KnotVector, lam: f64) -> Result<SparseMatrix> {
    let alpha = gluing.alpha(side);
    if gluing.d_alpha == 0 {
        Ok(SparseMatrix::identity(t.dim()).scaled(lam * alpha.coefficient(0)))
    } else {
        Ok(matrix_ahat(alpha, &t.lowered()?, t)?.scaled(lam))
    }
}

/// Blocks in closed form for `β ≡ 0` and `z_β = 0`; other cases are read off
/// an assembled basis.
pub fn assemble_blocks(gluing: &GluingData, t: &KnotVector) -> Result<CoefficientMatrices> {
    let lam = lambda(t);
    let (a1, a2_l, a2_r, case) = if gluing.beta_is_zero {
        let id = SparseMatrix::identity(t.dim());
        (id.clone(), id.clone(), id, BlockCase::BetaZero)
    } else if gluing.z_beta == 0 {
        let tt = smoother(t)?;
        let abar = matrix_abar(&tt, t)?;
        let atilde = matrix_atilde(&tt, t)?;
        let source = t.lowered()?;
        let a2 = |side: Side| -> Result<SparseMatrix> {
            let ahat = matrix_ahat(gluing.beta_side(side), &source, t)?;
            abar.add(&atilde.matmul(&ahat)?.scaled(lam))
        };
        (abar.clone(), a2(Side::L)?, a2(Side::R)?, BlockCase::ZBetaZero)
    } else {
        return from_basis(&build_basis(t, gluing)?);
    };
    Ok(CoefficientMatrices {
        a1,
        a2_l,
        a2_r,
        a3_l: transversal_block(gluing, Side::L, t, lam)?,
        a3_r: transversal_block(gluing, Side::R, t, lam)?,
        case,
        degree: t.degree(),
        breakpoints: t.breakpoints().to_vec(),
    })
}

/// Blocks read off the first two coefficient rows of an assembled basis.
pub fn from_basis(basis: &Basis) -> Result<CoefficientMatrices> {
    let n = basis.space.dim();
    let traces: Vec<_> = basis.functions.iter().filter(|f| matches!(f.kind, BasisKind::Trace(_))).collect();
    let trans: Vec<_> = basis.functions.iter().filter(|f| matches!(f.kind, BasisKind::Transversal(_))).collect();
    for f in &trans {
        if f.coeff_l.row(0).iter().chain(f.coeff_r.row(0)).any(|&c| c != 0.0) {
            return Err(Error::InvalidParameters("transversal function with non-zero trace".into()));
        }
    }
    let rows = |fs: &[&crate::c1_basis::BasisFunction], side: Side, i: usize| {
        let dense: Vec<Vec<f64>> = fs.iter().map(|f| f.grid(side).row(i).to_vec()).collect();
        SparseMatrix::from_dense_rows(n, &dense)
    };
    Ok(CoefficientMatrices {
        a1: rows(&traces, Side::L, 0),
        a2_l: rows(&traces, Side::L, 1),
        a2_r: rows(&traces, Side::R, 1),
        a3_l: rows(&trans, Side::L, 1),
        a3_r: rows(&trans, Side::R, 1),
        case: BlockCase::FromBasis,
        degree: basis.space.degree(),
        breakpoints: basis.space.breakpoints().to_vec(),
    })
}

/// Coefficients in `S(t)` of the spline interpolating `target` at the
/// Greville abscissae.
pub fn fit_rows_greville(target: impl Fn(f64) -> Result<f64>, t: &KnotVector) -> Result<Vec<f64>> {
    let xi = t.greville();
    let n = t.dim();
    let mut a = DMatrix::zeros(n, n);
    for (l, &x) in xi.iter().enumerate() {
        for (j, v) in t.eval_basis(x)? {
            a[(l, j)] = v;
        }
    }
    let b = DVector::from_iterator(n, xi.iter().map(|&x| target(x)).collect::<Result<Vec<_>>>()?);
    let x = solve_least_squares(&a, &b, None).map_err(|e| match e {
        Error::RankDeficient { rank, columns } => {
            Error::Singular(format!("Greville collocation matrix has rank {rank} < {columns}"))
        }
        other => other,
    })?;
    Ok(x.iter().copied().collect())
}

/// Rows 0 and 1 of a trace or transversal function on patch `side` by
/// fitting `g₀` and `g₀ + λ ∂_u g^(S)(0, ·)` at the Greville abscissae.
pub fn fit_function_rows(
    g0: &SplineFunction1D,
    g1: &SplineFunction1D,
    gluing: &GluingData,
    side: Side,
    t: &KnotVector,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let lam = lambda(t);
    let (alpha, beta_s) = (gluing.alpha(side), gluing.beta_side(side));
    let row0 = fit_rows_greville(|v| g0.eval(v), t)?;
    let row1 = fit_rows_greville(
        |v| Ok(g0.eval(v)? + lam * (alpha.eval(v) * g1.eval(v)? + beta_s.eval(v) * g0.eval_derivative(v, 1)?)),
        t,
    )?;
    Ok((row0, row1))
}

/// Dimension of the transversal space for the given gluing data.
pub fn n_bar(t: &KnotVector, gluing: &GluingData) -> Result<usize> {
    Ok(transversal_space(t, gluing.d_alpha)?.dim())
}
