//! Explicit C¹ basis on the bundled geometry: function kinds, interface
//! smoothness and plot data of one trace function.
//!
//! `cargo run --example c1_basis`

use std::collections::BTreeMap;

use asg1::analysis::c1_residual;
use asg1::c1_basis::{build_full_basis, BasisKind};
use asg1::fixtures::bicubic_example;
use asg1::io::sample_function;

fn main() -> asg1::Result<()> {
    let (g, gluing) = bicubic_example()?.refined(Some(2))?;
    let basis = build_full_basis(&g, &gluing)?;
    let mut counts = BTreeMap::new();
    for f in &basis.functions {
        let kind = match f.kind {
            BasisKind::InteriorL { .. } => "interior L",
            BasisKind::InteriorR { .. } => "interior R",
            BasisKind::Trace(_) => "trace",
            BasisKind::Transversal(_) => "transversal",
            _ => "other",
        };
        *counts.entry(kind).or_insert(0) += 1;
    }
    println!("{} basis functions: {counts:?}", basis.len());

    let report = c1_residual(&g, &basis)?;
    println!("max relative gradient jump: {:e}", report.max_jump);

    let (idx, f) = basis.functions.iter().enumerate().find(|(_, f)| f.kind == BasisKind::Trace(2)).unwrap();
    println!("function {idx} ({}): rows 0 and 1 on L", f.kind.label());
    println!("  {:?}", f.coeff_l.row(0));
    println!("  {:?}", f.coeff_l.row(1));
    let rows = sample_function(&g, f, 5)?;
    for r in rows.iter().filter(|r| r.u == 0.0) {
        println!("  {} v={:.2} x=({:.3}, {:.3}) value={:.6}", r.patch.label(), r.v, r.x, r.y, r.value);
    }
    Ok(())
}
