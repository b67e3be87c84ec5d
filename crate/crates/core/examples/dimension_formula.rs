//! Dimension of the C¹ space for growing `k` and each `β` case.
//!
//! `cargo run --example dimension_formula`

use asg1::analysis::kernel_rank_oracle;
use asg1::c1_basis::dimension;
use asg1::fixtures::{asg1_fixture, bicubic_example, BetaCase, TEST_DEGREES};

fn main() -> asg1::Result<()> {
    let ex = bicubic_example()?;
    println!("bicubic example, r = 1:");
    println!("{:>3} {:>6} {:>6} {:>6} {:>8}", "k", "V1_1", "Gamma0", "Gamma1", "dim V1");
    for k in 0..=5 {
        let (g, gluing) = ex.refined(Some(k))?;
        let d = asg1::c1_basis::dimension_for(g.space(), &gluing)?;
        println!("{:>3} {:>6} {:>6} {:>6} {:>8}", k, d.dim_v1_1, d.dim_gamma0, d.dim_gamma1, d.dim_v1);
    }

    println!("\nformula against the numerical kernel dimension (k = 2):");
    for (p, r) in TEST_DEGREES {
        for case in BetaCase::ALL {
            let fx = asg1_fixture(p, r, 2, case, false)?;
            let d = dimension(p, r, 2, fx.gluing.d_alpha, fx.gluing.z_beta, fx.gluing.beta_is_zero)?;
            let kernel = kernel_rank_oracle(fx.geometry.space(), &fx.gluing)?;
            println!(
                "p={p} r={r} {:<9} dim V1 = {:>4}, dim V1_2 = {:>3}, kernel = {:>3}",
                case.label(),
                d.dim_v1,
                d.dim_v1_2,
                kernel.nullity
            );
        }
    }
    Ok(())
}
