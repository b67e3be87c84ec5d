//! Geometries with prescribed zeros of `β` at breakpoints, and the C¹
//! basis on each.
//!
//! `cargo run --example z_beta_fixtures`

use asg1::analysis::{c1_residual, kernel_rank_oracle};
use asg1::c1_basis::{build_full_basis, build_tilde_space};
use asg1::fixtures::{asg1_fixture, fixture_summary, BetaCase};

fn main() -> asg1::Result<()> {
    for case in BetaCase::ALL {
        let fx = asg1_fixture(4, 1, 2, case, false)?;
        let space = fx.geometry.space();
        let tilde = build_tilde_space(space, &fx.gluing)?;
        let basis = build_full_basis(&fx.geometry, &fx.gluing)?;
        let c1 = c1_residual(&fx.geometry, &basis)?;
        let kernel = kernel_rank_oracle(space, &fx.gluing)?;
        println!("{}", fixture_summary(&fx));
        println!("  beta = {}, roots at breakpoints {:?}", fx.gluing.beta, fx.gluing.root_indices);
        println!("  trace space: {} functions, {} appended", tilde.functions.len(), tilde.appended.len());
        println!("  basis size {}, kernel {} = formula {}", basis.len(), kernel.nullity, kernel.expected);
        println!("  max gradient jump {:e}", c1.max_jump);
    }
    Ok(())
}
