//! Condition numbers of the diagonally scaled mass matrices of the C¹ and
//! C⁰ spaces on the bundled geometry.
//!
//! `cargo run --release --example mass_conditioning [max_k]` (default 5)

use asg1::analysis::mass::{default_order, mass_report};
use asg1::c1_basis::{build_full_basis, standard_c0_basis};
use asg1::fixtures::bicubic_example;

fn main() -> asg1::Result<()> {
    let max_k: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let ex = bicubic_example()?;
    println!("{:>3} {:>6} {:>10} {:>6} {:>10}", "k", "dim V1", "kappa V1", "dim V0", "kappa V0");
    for k in [0, 2, 5, 10].into_iter().filter(|&k| k <= max_k) {
        let (g, gluing) = ex.refined(Some(k))?;
        let order = default_order(&g);
        let v1 = mass_report(&g, &build_full_basis(&g, &gluing)?, "V1", order)?;
        let v0 = mass_report(&g, &standard_c0_basis(g.space()), "V0", order)?;
        println!("{:>3} {:>6} {:>10.2} {:>6} {:>10.2}", k, v1.dim, v1.kappa, v0.dim, v0.kappa);
    }
    Ok(())
}
