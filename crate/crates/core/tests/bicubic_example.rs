mod common;

use asg1::c1_basis::dimension_for;
use asg1::fixtures::bicubic_example;
use asg1::gluing::{compute_alphabar_betabar, compute_gluing, Side};
use asg1::spline_core::Polynomial;
use common::{example_gamma, fit_polynomial};

#[test]
fn dimension_formula_for_growing_k() {
    let ex = bicubic_example().unwrap();
    for k in 0..=5 {
        let (g, gluing) = ex.refined(Some(k)).unwrap();
        assert_eq!(dimension_for(g.space(), &gluing).unwrap().dim_v1, 23 + 26 * k + 8 * k * k);
    }
}

#[test]
fn gamma_times_bars_gives_the_supplied_gluing() {
    let ex = bicubic_example().unwrap();
    let bars = compute_alphabar_betabar(&ex.geometry).unwrap();
    let targets = [
        (&bars.alpha_bar_l, vec![-13.5, -1.5]),
        (&bars.alpha_bar_r, vec![10.5, -1.5]),
        (&bars.beta_bar, vec![15.0 / 12.0, -32.0 / 12.0, 1.0 / 12.0]),
    ];
    for (bar, expected) in targets {
        let (c, dev) = fit_polynomial(|v| example_gamma(v) * bar.eval(v).unwrap(), expected.len() - 1);
        assert!(dev < 1e-9, "not a polynomial of the expected degree: {dev:e}");
        for (a, b) in c.iter().zip(&expected) {
            assert!((a - b).abs() < 1e-9, "{c:?} vs {expected:?}");
        }
    }
}

#[test]
fn computed_gluing_is_proportional_to_the_supplied_one() {
    let ex = bicubic_example().unwrap();
    let computed = compute_gluing(&ex.geometry).unwrap();
    let supplied = ex.gluing.unwrap();
    let c = supplied.alpha_r.coefficient(0) / computed.alpha_r.coefficient(0);
    for side in Side::BOTH {
        let d = &computed.alpha(side).scaled(c) - supplied.alpha(side);
        assert!(d.max_abs_coefficient() < 1e-9);
        let d = computed.beta_side(side) - supplied.beta_side(side);
        assert!(d.max_abs_coefficient() < 1e-10, "beta pair is scale invariant");
    }
    assert!((&computed.beta.scaled(c) - &supplied.beta).max_abs_coefficient() < 1e-9);
}

#[test]
fn minimal_beta_pair() {
    let g = bicubic_example().unwrap().gluing.unwrap();
    let bl = Polynomial::linear(-83.0 / 1194.0, 503.0 / 3582.0);
    let br = Polynomial::linear(-23.0 / 597.0, 152.0 / 1791.0);
    assert!((&g.beta_l - &bl).max_abs_coefficient() < 1e-10, "{}", g.beta_l);
    assert!((&g.beta_r - &br).max_abs_coefficient() < 1e-10, "{}", g.beta_r);
}
