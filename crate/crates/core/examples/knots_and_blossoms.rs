//! Knot vectors, B-spline evaluation and the blossom-based operations
//! (knot insertion, differentiation, products).
//!
//! `cargo run --example knots_and_blossoms`

use asg1::blossom::{blossom_eval, derivative_coeffs, knot_insertion_coeffs, product_coeffs};
use asg1::spline_core::{make_uniform_regular_knots, KnotVector, SplineFunction1D};

fn main() -> asg1::Result<()> {
    let t = make_uniform_regular_knots(3, 1, 2, None)?;
    println!("T^(3,1)_2 knots: {:?}", t.knots());
    println!("dimension n = {}", t.dim());
    println!("Greville abscissae: {:?}", t.greville());

    let active = t.eval_basis(0.4)?;
    let sum: f64 = active.iter().map(|e| e.1).sum();
    println!("active B-splines at 0.4: {active:?} (sum {sum})");

    let f = SplineFunction1D::new(t.clone(), vec![0.0, 1.0, -0.5, 2.0, 0.3, 1.1, -1.0, 0.5])?;
    println!("f(0.4) = {:.6}", f.eval(0.4)?);
    let diag = blossom_eval(&f, &[0.4, 0.4, 0.4])?;
    println!("blossom on the diagonal h(0.4, 0.4, 0.4) = {diag:.6}");

    let fine = KnotVector::with_regularity(3, 1, vec![1.0 / 6.0, 1.0 / 3.0, 0.5, 2.0 / 3.0, 5.0 / 6.0])?;
    let g = knot_insertion_coeffs(&f, &fine)?;
    println!("after knot insertion: {} coefficients, g(0.4) = {:.6}", g.coefficients().len(), g.eval(0.4)?);

    let df = derivative_coeffs(&f)?;
    println!("f'(0.4) = {:.6} (direct {:.6})", df.eval(0.4)?, f.eval_derivative(0.4, 1)?);

    let sq = product_coeffs(&f, &f)?;
    println!("f^2 lives in degree {} with {} coefficients; f^2(0.4) = {:.6}", sq.degree(), sq.coefficients().len(), sq.eval(0.4)?);
    Ok(())
}
