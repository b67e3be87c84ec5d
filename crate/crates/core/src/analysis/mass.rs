//! Mass matrices over the two-patch domain.

use nalgebra::DMatrix;

use super::linalg::{condition_from_eigenvalues, diag_scaled_eigenvalues};
use super::quadrature::gauss_rule_on;
use crate::c1_basis::Basis;
use crate::error::{Error, Result};
use crate::gluing::{Side, TwoPatchGeometry};
use crate::spline_core::KnotVector;

/// Condition data of a diagonally scaled mass matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct MassMatrixReport {
    pub dim: usize,
    /// Spectral condition number of `D^{-1/2} M D^{-1/2}`.
    pub kappa: f64,
    pub label: String,
    /// Gauss points per direction and element.
    pub order: usize,
    pub min_eigenvalue: f64,
    pub max_eigenvalue: f64,
}

struct QuadLine {
    points: Vec<f64>,
    weights: Vec<f64>,
    /// `(first index, values, first derivatives)` of the active B-splines.
    basis: Vec<(usize, Vec<f64>, Vec<f64>)>,
}

fn quad_line(space: &KnotVector, order: usize) -> Result<QuadLine> {
    let (mut points, mut weights, mut basis) = (Vec::new(), Vec::new(), Vec::new());
    for (a, b) in space.elements() {
        let (x, w) = gauss_rule_on(order, a, b)?;
        for (&t, &wt) in x.iter().zip(&w) {
            let vals = space.eval_basis(t)?;
            let ders = space.eval_derivative_basis(t, 1)?;
            basis.push((vals[0].0, vals.iter().map(|e| e.1).collect(), ders.iter().map(|e| e.1).collect()));
            points.push(t);
            weights.push(wt);
        }
    }
    Ok(QuadLine { points, weights, basis })
}

/// Tensor mass matrix `∫∫ N_a N_b |det J^(S)| du dv` over the `n²` tensor
/// B-splines of one patch, indexed `i·n + j`.
pub fn patch_mass(geometry: &TwoPatchGeometry, side: Side, order: usize) -> Result<DMatrix<f64>> {
    let space = geometry.space();
    let n = space.dim();
    let q = quad_line(space, order)?;
    let patch = geometry.patch(side);
    let mut m = DMatrix::zeros(n * n, n * n);
    let mut sign = 0.0f64;
    let mut idx = Vec::new();
    let mut val = Vec::new();
    for (qa, (fu, nu, du)) in q.basis.iter().enumerate() {
        for (qb, (fv, nv, dv)) in q.basis.iter().enumerate() {
            let (mut xu, mut xv) = (nalgebra::Vector2::zeros(), nalgebra::Vector2::zeros());
            idx.clear();
            val.clear();
            for (a, (&na, &da)) in nu.iter().zip(du).enumerate() {
                for (b, (&nb, &db)) in nv.iter().zip(dv).enumerate() {
                    let c = patch.get(fu + a, fv + b);
                    xu += c * (da * nb);
                    xv += c * (na * db);
                    idx.push((fu + a) * n + fv + b);
                    val.push(na * nb);
                }
            }
            let det = xu.x * xv.y - xu.y * xv.x;
            if sign == 0.0 {
                sign = det.signum();
            }
            if det == 0.0 || det.signum() != sign || !det.is_finite() {
                return Err(Error::SingularJacobian { patch: side.label(), u: q.points[qa], v: q.points[qb] });
            }
            let w = q.weights[qa] * q.weights[qb] * det.abs();
            for (s, &i) in idx.iter().enumerate() {
                for (t, &j) in idx.iter().enumerate() {
                    m[(i, j)] += w * val[s] * val[t];
                }
            }
        }
    }
    Ok(m)
}

/// Mass matrix `m_{i,j} = Σ_S ∫∫ gᵢ^(S) gⱼ^(S) |det J^(S)| du dv` of a basis,
/// with `order` Gauss points per direction and element.
pub fn assemble_mass(geometry: &TwoPatchGeometry, basis: &Basis, order: usize) -> Result<DMatrix<f64>> {
    let n = geometry.space().dim();
    if basis.space != *geometry.space() {
        return Err(Error::IncompatibleSpaces("basis and geometry live on different spaces".into()));
    }
    let m = basis.len();
    let mut total = DMatrix::zeros(m, m);
    for side in Side::BOTH {
        let ms = patch_mass(geometry, side, order)?;
        let c = DMatrix::from_fn(n * n, m, |a, f| basis.functions[f].grid(side).data()[a]);
        total += c.transpose() * (&ms * &c);
    }
    Ok(DMatrix::from_fn(m, m, |i, j| 0.5 * (total[(i, j)] + total[(j, i)])))
}

/// Mass matrix of `basis` and the condition number of its diagonal scaling.
pub fn mass_report(geometry: &TwoPatchGeometry, basis: &Basis, label: &str, order: usize) -> Result<MassMatrixReport> {
    let m = assemble_mass(geometry, basis, order)?;
    let ev = diag_scaled_eigenvalues(&m)?;
    Ok(MassMatrixReport {
        dim: m.nrows(),
        kappa: condition_from_eigenvalues(&ev)?,
        label: label.to_string(),
        order,
        min_eigenvalue: ev[0],
        max_eigenvalue: ev[ev.len() - 1],
    })
}

/// Default quadrature order `2p`, exact for polynomial geometries: the
/// integrand has degree `4p − 1` per direction.
pub fn default_order(geometry: &TwoPatchGeometry) -> usize {
    2 * geometry.degree()
}
