//! Coefficient blocks of the trace and transversal functions for cubic
//! splines of regularity one.
//!
//! `cargo run --example coefficient_matrices`

use asg1::c1_basis::smoother;
use asg1::coeff_matrices::{assemble_blocks, matrix_abar, matrix_ahat, matrix_atilde, SparseMatrix};
use asg1::fixtures::bicubic_example;
use asg1::gluing::Side;
use asg1::spline_core::{make_uniform_regular_knots, Polynomial};

fn print(name: &str, m: &SparseMatrix) {
    println!("{name} ({} x {}):", m.nrows(), m.ncols());
    for i in 0..m.nrows() {
        let row: Vec<String> = m.dense_row(i).iter().map(|v| format!("{v:7.3}")).collect();
        println!("  {}", row.join(" "));
    }
}

fn main() -> asg1::Result<()> {
    let k = 3;
    let t = make_uniform_regular_knots(3, 1, k, None)?;
    let tt = smoother(&t)?;
    print("A_bar", &matrix_abar(&tt, &t)?);
    print("A_tilde", &matrix_atilde(&tt, &t)?);
    print("A_hat(w = 1 - t)", &matrix_ahat(&Polynomial::from_bezier_linear(1.0, 0.0), &t.lowered()?, &t)?);

    let (g, gluing) = bicubic_example()?.refined(Some(2))?;
    let blocks = assemble_blocks(&gluing, g.space())?;
    println!("\nbicubic example, k = 2 ({:?}):", blocks.case);
    print("A1", &blocks.a1);
    print("A2_L", blocks.a2(Side::L));
    print("A3_R", blocks.a3(Side::R));
    Ok(())
}
