//! Gluing data of the bundled bicubic two-patch geometry: computed from the
//! control points and compared with the supplied normalization.
//!
//! `cargo run --example gluing_data`

use asg1::fixtures::bicubic_example;
use asg1::gluing::{compute_alphabar_betabar, compute_gluing, Side};

fn main() -> asg1::Result<()> {
    let ex = bicubic_example()?;
    let g = &ex.geometry;
    let reg = g.verify_regularity(4)?;
    println!("regular: {} (Jacobian signs L {}, R {})", !reg.flagged, reg.sign_l, reg.sign_r);

    let bars = compute_alphabar_betabar(g)?;
    println!("alpha_bar_L has degree {} in S(T)", bars.alpha_bar_l.degree());

    let computed = compute_gluing(g)?;
    println!("computed: alpha_L = {}, alpha_R = {}", computed.alpha_l, computed.alpha_r);
    println!("          beta = {}", computed.beta);

    let supplied = ex.gluing.expect("bundled file carries gluing data");
    println!("supplied: alpha_L = {}, alpha_R = {}", supplied.alpha_l, supplied.alpha_r);
    println!("          beta = {}", supplied.beta);
    let c = supplied.alpha_r.coefficient(0) / computed.alpha_r.coefficient(0);
    println!("ratio supplied / computed = {c:.12}");

    for side in Side::BOTH {
        println!("beta_{} = {}", side.label(), supplied.beta_side(side));
    }
    println!("d_alpha = {}, z_beta = {}", supplied.d_alpha, supplied.z_beta);
    println!("roots of beta: {:?}", supplied.beta.real_roots());
    println!("G1 residual = {:e}", supplied.residual(g, 200)?);
    Ok(())
}
