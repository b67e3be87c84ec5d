//! Univariate and tensor-product B-spline spaces on `[0, 1]` and `[0, 1]²`.

mod function;
mod knots;
mod polynomial;
mod tensor;

pub use function::SplineFunction1D;
pub use knots::{make_uniform_regular_knots, uniform_breakpoints, KnotVector, BREAKPOINT_TOL};
pub use polynomial::Polynomial;
pub(crate) use polynomial::{binomial, linear_resultant};
pub use tensor::{ControlValue, Point2, TensorSplineFunction};

/// Free-function form of [`KnotVector::eval_basis`].
pub fn eval_basis(knots: &KnotVector, t: f64) -> crate::Result<Vec<(usize, f64)>> {
    knots.eval_basis(t)
}

/// Free-function form of [`KnotVector::eval_derivative_basis`].
pub fn eval_derivative_basis(
    knots: &KnotVector,
    t: f64,
    order: usize,
) -> crate::Result<Vec<(usize, f64)>> {
    knots.eval_derivative_basis(t, order)
}

/// Free-function form of [`KnotVector::greville`].
pub fn greville_abscissae(knots: &KnotVector) -> Vec<f64> {
    knots.greville()
}

/// Free-function form of [`TensorSplineFunction::eval`].
pub fn eval_tensor<V: ControlValue>(
    f: &TensorSplineFunction<V>,
    u: f64,
    v: f64,
    du: usize,
    dv: usize,
) -> crate::Result<V> {
    f.eval(u, v, du, dv)
}
