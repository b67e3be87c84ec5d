//! Gradient jumps of isogeometric functions across the interface.

use nalgebra::Vector2;

use crate::c1_basis::{lambda, Basis, BasisFunction};
use crate::error::{Error, Result};
use crate::gluing::{Side, TwoPatchGeometry};

/// Number of interface samples used by [`c1_residual`].
pub const C1_SAMPLES: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct C1Report {
    /// Largest relative gradient jump over all functions.
    pub max_jump: f64,
    /// Index of the function attaining it.
    pub worst_function: Option<usize>,
    /// Relative jump of each function.
    pub per_function: Vec<f64>,
}

/// Physical gradient of a function on patch `side` at `(0, v)`.
fn interface_gradient(geometry: &TwoPatchGeometry, f: &BasisFunction, side: Side, v: f64) -> Result<Vector2<f64>> {
    let space = geometry.space();
    let grid = f.grid(side);
    let vals = space.eval_basis(v)?;
    let ders = space.eval_derivative_basis(v, 1)?;
    let inv_lam = 1.0 / lambda(space);
    let gu: f64 = vals.iter().map(|&(j, b)| inv_lam * (grid.get(1, j) - grid.get(0, j)) * b).sum();
    let gv: f64 = ders.iter().map(|&(j, b)| grid.get(0, j) * b).sum();
    let jac = geometry.jacobian(side, 0.0, v)?;
    let inv_t = jac
        .try_inverse()
        .filter(|_| jac.determinant().abs() > 1e-14)
        .ok_or(Error::SingularJacobian { patch: side.label(), u: 0.0, v })?
        .transpose();
    Ok(inv_t * Vector2::new(gu, gv))
}

/// Relative gradient jump of one function: the largest `|∇φ|_L − ∇φ|_R|`
/// over `samples` interface points, divided by the largest gradient norm.
pub fn function_jump(geometry: &TwoPatchGeometry, f: &BasisFunction, samples: usize) -> Result<f64> {
    let (mut jump, mut scale) = (0.0f64, 0.0f64);
    for s in 0..samples {
        let v = s as f64 / (samples.max(2) - 1) as f64;
        let gl = interface_gradient(geometry, f, Side::L, v)?;
        let gr = interface_gradient(geometry, f, Side::R, v)?;
        jump = jump.max((gl - gr).norm());
        scale = scale.max(gl.norm()).max(gr.norm());
    }
    Ok(if scale == 0.0 { 0.0 } else { jump / scale })
}

/// Largest relative gradient jump over the functions of `basis`.
pub fn c1_residual(geometry: &TwoPatchGeometry, basis: &Basis) -> Result<C1Report> {
    let per_function =
        basis.functions.iter().map(|f| function_jump(geometry, f, C1_SAMPLES)).collect::<Result<Vec<_>>>()?;
    let worst = per_function.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1));
    Ok(C1Report {
        max_jump: worst.map_or(0.0, |w| *w.1),
        worst_function: worst.map(|w| w.0),
        per_function,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c1_basis::{build_full_basis, BasisKind};
    use crate::fixtures::bicubic_example;

    #[test]
    fn example_basis_is_c1_and_perturbation_is_detected() {
        let ex = bicubic_example().unwrap();
        let (g, gluing) = ex.refined(Some(1)).unwrap();
        let mut basis = build_full_basis(&g, &gluing).unwrap();
        let report = c1_residual(&g, &basis).unwrap();
        assert!(report.max_jump < 1e-8, "{report:?}");
        for (f, r) in basis.functions.iter().zip(&report.per_function) {
            if matches!(f.kind, BasisKind::InteriorL { .. } | BasisKind::InteriorR { .. }) {
                assert_eq!(*r, 0.0);
            }
        }
        let idx = basis.functions.iter().position(|f| matches!(f.kind, BasisKind::Trace(2))).unwrap();
        let f = &mut basis.functions[idx];
        let c = f.coeff_l.get(0, 2);
        f.coeff_l.set(0, 2, c + 1e-3);
        assert!(function_jump(&g, f, C1_SAMPLES).unwrap() > 1e-4);
    }
}
