//! Closed-form coefficient matrices for cubic splines of regularity one on
//! uniform breakpoints, used as independent oracles.
#![allow(dead_code)]

/// Rows of `Ā`: B-splines of `T^{3,2}_k` in `S(T^{3,1}_k)`.
pub fn golden_abar(k: usize) -> Vec<Vec<f64>> {
    let n = 2 * k + 4;
    let mut rows = vec![vec![0.0; n]; k + 4];
    let put = |rows: &mut Vec<Vec<f64>>, i: usize, start: usize, vals: &[f64]| {
        for (o, v) in vals.iter().enumerate() {
            rows[i][start + o] = *v;
        }
    };
    put(&mut rows, 0, 0, &[1.0]);
    put(&mut rows, 1, 1, &[1.0, 0.5]);
    put(&mut rows, 2, 2, &[0.5, 2.0 / 3.0, 1.0 / 3.0]);
    for i in 3..=k {
        put(&mut rows, i, 2 * i - 3, &[1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0]);
    }
    put(&mut rows, k + 1, 2 * k - 1, &[1.0 / 3.0, 2.0 / 3.0, 0.5]);
    put(&mut rows, k + 2, 2 * k + 1, &[0.5, 1.0]);
    put(&mut rows, k + 3, 2 * k + 3, &[1.0]);
    rows
}

/// Rows of `Ã`: derivatives of the B-splines of `T^{3,2}_k` in `S(T^{2,1}_k)`.
pub fn golden_atilde(k: usize) -> Vec<Vec<f64>> {
    let c = (k + 1) as f64;
    let mut rows = vec![vec![0.0; k + 3]; k + 4];
    rows[0][0] = -3.0 * c;
    rows[1][0] = 3.0 * c;
    rows[1][1] = -1.5 * c;
    rows[2][1] = 1.5 * c;
    rows[2][2] = -c;
    for i in 3..=k {
        rows[i][i - 1] = c;
        rows[i][i] = -c;
    }
    rows[k + 1][k] = c;
    rows[k + 1][k + 1] = -1.5 * c;
    rows[k + 2][k + 1] = 1.5 * c;
    rows[k + 2][k + 2] = -3.0 * c;
    rows[k + 3][k + 2] = 3.0 * c;
    rows
}

/// Rows of `Â(w)` for `w = w₀(1 − t) + w₁ t`: `w·Mᵢ` with `Mᵢ` the B-splines
/// of `T^{2,1}_k`, in `S(T^{3,1}_k)`.
pub fn golden_ahat(k: usize, w0: f64, w1: f64) -> Vec<Vec<f64>> {
    let kf = k as f64;
    let s = 1.0 / (6.0 * (kf + 1.0));
    let mut rows = vec![vec![0.0; 2 * k + 4]; k + 3];
    let mut put = |i: usize, start: usize, vals: &[f64]| {
        for (o, v) in vals.iter().enumerate() {
            rows[i][start + o] = s * v;
        }
    };
    put(0, 0, &[6.0 * (kf + 1.0) * w0, 2.0 * kf * w0 + 2.0 * w1]);
    put(1, 1, &[4.0 * (kf + 1.0) * w0, (1.0 + 5.0 * kf) * w0 + 4.0 * w1, (kf - 1.0) * w0 + 2.0 * w1]);
    for i in 2..=k {
        let fi = i as f64;
        put(
            i,
            2 * (i - 1),
            &[
                (kf + 3.0 - fi) * w0 + (fi - 2.0) * w1,
                (9.0 + 5.0 * (kf - fi)) * w0 + (6.0 + 5.0 * (fi - 2.0)) * w1,
                (6.0 + 5.0 * (kf - fi)) * w0 + (9.0 + 5.0 * (fi - 2.0)) * w1,
                (kf - fi) * w0 + (fi + 1.0) * w1,
            ],
        );
    }
    put(k + 1, 2 * k, &[2.0 * w0 + (kf - 1.0) * w1, 4.0 * w0 + (1.0 + 5.0 * kf) * w1, 4.0 * (kf + 1.0) * w1]);
    put(k + 2, 2 * k + 2, &[2.0 * w0 + 2.0 * kf * w1, 6.0 * (kf + 1.0) * w1]);
    rows
}

pub fn max_diff(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    assert_eq!(a.len(), b.len(), "row count");
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            assert_eq!(x.len(), y.len(), "column count");
            x.iter().zip(y).map(|(u, v)| (u - v).abs()).fold(0.0, f64::max)
        })
        .fold(0.0, f64::max)
}

pub fn same_pattern(a: &[Vec<f64>], b: &[Vec<f64>]) -> bool {
    a.iter().zip(b).all(|(x, y)| x.iter().zip(y).all(|(u, v)| (*u == 0.0) == (*v == 0.0)))
}

use asg1::spline_core::{KnotVector, SplineFunction1D};
use rand::rngs::StdRng;
use rand::Rng;

/// Random knot vector of degree `p` with 0..=4 random breakpoints and
/// multiplicities in `1..=p`.
pub fn random_space(rng: &mut StdRng, p: usize) -> KnotVector {
    let k = rng.random_range(0..=4);
    let mut bps: Vec<f64> = (0..k).map(|_| rng.random_range(0.05..0.95)).collect();
    bps.sort_by(f64::total_cmp);
    bps.dedup_by(|a, b| (*a - *b).abs() < 0.02);
    let mults = bps.iter().map(|_| rng.random_range(1..=p)).collect();
    KnotVector::new(p, bps, mults).expect("valid random space")
}

/// Random refinement: extra breakpoints and raised multiplicities.
pub fn random_refinement(rng: &mut StdRng, coarse: &KnotVector) -> KnotVector {
    let p = coarse.degree();
    let mut pairs: Vec<(f64, usize)> = coarse
        .breakpoints()
        .iter()
        .zip(coarse.multiplicities())
        .map(|(&b, &m)| (b, rng.random_range(m..=p)))
        .collect();
    for _ in 0..rng.random_range(1..=3) {
        let t = rng.random_range(0.05..0.95);
        if pairs.iter().all(|(b, _)| (b - t).abs() > 0.02) {
            pairs.push((t, rng.random_range(1..=p)));
        }
    }
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    KnotVector::new(p, pairs.iter().map(|x| x.0).collect(), pairs.iter().map(|x| x.1).collect()).expect("valid refinement")
}

pub fn random_spline(rng: &mut StdRng, space: &KnotVector) -> SplineFunction1D {
    let c = (0..space.dim()).map(|_| rng.random_range(-1.0..1.0)).collect();
    SplineFunction1D::new(space.clone(), c).expect("coefficient count")
}

/// `n` equispaced points in `[0, 1]`.
pub fn samples(n: usize) -> Vec<f64> {
    (0..n).map(|s| s as f64 / (n - 1) as f64).collect()
}

/// Largest deviation of `approx` from `exact` over `pts`.
pub fn max_dev(pts: &[f64], exact: impl Fn(f64) -> f64, approx: impl Fn(f64) -> f64) -> f64 {
    pts.iter().map(|&t| (exact(t) - approx(t)).abs()).fold(0.0, f64::max)
}

/// First derivative, right limit at breakpoints (left limit at 1).
pub fn derivative_at(f: &SplineFunction1D, t: f64) -> f64 {
    f.eval_derivative(t, 1).expect("in domain")
}

use asg1::blossom::{derivative_coeffs, knot_insertion_coeffs, product_coeffs};
use rand::SeedableRng;

/// Maximum sampling deviation at 500 points of knot insertion, derivative
/// and product coefficients over `count` random splines.
pub fn blossom_oracle_errors(count: usize, seed: u64) -> [f64; 3] {
    let mut rng = StdRng::seed_from_u64(seed);
    let pts = samples(500);
    let mut worst = [0.0f64; 3];
    for _ in 0..count {
        let p = rng.random_range(1..=5);
        let space = random_space(&mut rng, p);
        let f = random_spline(&mut rng, &space);

        let fine = random_refinement(&mut rng, &space);
        let g = knot_insertion_coeffs(&f, &fine).expect("refinement");
        worst[0] = worst[0].max(max_dev(&pts, |t| f.eval(t).unwrap(), |t| g.eval(t).unwrap()));

        let df = derivative_coeffs(&f).expect("degree >= 1");
        let inner: Vec<f64> = pts.iter().copied().filter(|t| space.breakpoint_index(*t).is_none()).collect();
        worst[1] = worst[1].max(max_dev(&inner, |t| derivative_at(&f, t), |t| df.eval(t).unwrap()));

        let q = rng.random_range(1..=4);
        let other_space =
            KnotVector::new(q, space.breakpoints().to_vec(), space.multiplicities().iter().map(|&m| m.min(q)).collect())
                .expect("same breakpoints");
        let h = random_spline(&mut rng, &other_space);
        let fh = product_coeffs(&f, &h).expect("product");
        worst[2] = worst[2].max(max_dev(&pts, |t| f.eval(t).unwrap() * h.eval(t).unwrap(), |t| fh.eval(t).unwrap()));
    }
    worst
}

use asg1::c1_basis::{assemble_pair, build_tilde_space, build_g1_companions, smoother};
use asg1::coeff_matrices::{fit_function_rows, fit_rows_greville, matrix_abar, matrix_ahat};
use asg1::fixtures::{asg1_fixture, BetaCase, TEST_DEGREES};
use asg1::gluing::Side;
use asg1::spline_core::Polynomial;

fn row_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Largest difference between Greville-fitted and blossoming rows of `Ā`,
/// `Â(w)` and of the trace functions over the test matrix.
pub fn fitting_oracle_error() -> f64 {
    let mut worst = 0.0f64;
    let w = Polynomial::from_bezier_linear(0.8, -1.7);
    for (p, r) in TEST_DEGREES {
        for k in 0..=2 {
            let t = KnotVector::with_regularity(p, r as isize, asg1::spline_core::uniform_breakpoints(k)).unwrap();
            let tt = smoother(&t).unwrap();
            let abar = matrix_abar(&tt, &t).unwrap();
            for i in 0..tt.dim() {
                let f = SplineFunction1D::bspline(&tt, i);
                let fit = fit_rows_greville(|v| f.eval(v), &t).unwrap();
                worst = worst.max(row_diff(&fit, &abar.dense_row(i)));
            }
            let src = t.lowered().unwrap();
            let ahat = matrix_ahat(&w, &src, &t).unwrap();
            for i in 0..src.dim() {
                let m = SplineFunction1D::bspline(&src, i);
                let fit = fit_rows_greville(|v| Ok(w.eval(v) * m.eval(v)?), &t).unwrap();
                worst = worst.max(row_diff(&fit, &ahat.dense_row(i)));
            }
            for case in BetaCase::ALL.into_iter().filter(|c| c.available(k)) {
                let fx = asg1_fixture(p, r, k, case, false).unwrap();
                let tilde = build_tilde_space(&t, &fx.gluing).unwrap();
                let comps = build_g1_companions(&tilde, &fx.gluing, &t).unwrap();
                for (g0, g1) in tilde.functions.iter().zip(&comps) {
                    let (gl, gr) = assemble_pair(g0, g1, &fx.gluing, &t).unwrap();
                    for (side, grid) in [(Side::L, &gl), (Side::R, &gr)] {
                        let (r0, r1) = fit_function_rows(g0, g1, &fx.gluing, side, &t).unwrap();
                        worst = worst.max(row_diff(&r0, grid.row(0))).max(row_diff(&r1, grid.row(1)));
                    }
                }
            }
        }
    }
    worst
}

use asg1::analysis::{c1_residual, kernel_rank_oracle};
use asg1::c1_basis::{build_full_basis, dimension_for};
use asg1::fixtures::{fixture_summary, test_matrix};

/// `(configuration, max relative gradient jump, basis size matches formula)`
/// for every fixture of the test matrix.
pub fn c1_suite() -> Vec<(String, f64, bool)> {
    test_matrix()
        .unwrap()
        .iter()
        .map(|fx| {
            let basis = build_full_basis(&fx.geometry, &fx.gluing).unwrap();
            let jump = c1_residual(&fx.geometry, &basis).unwrap().max_jump;
            let dim = dimension_for(fx.geometry.space(), &fx.gluing).unwrap().dim_v1;
            (fixture_summary(fx), jump, basis.len() == dim)
        })
        .collect()
}

/// `(configuration, numerical kernel dimension, formula)` for the test
/// matrix, fixtures with constant `α`, and the bundled example for
/// `k ≤ 3`.
pub fn kernel_suite() -> Vec<(String, usize, usize)> {
    let mut fixtures = test_matrix().unwrap();
    for k in 0..=2 {
        for case in [BetaCase::Zero, BetaCase::NoRoot, BetaCase::OneRoot] {
            if case.available(k) {
                fixtures.push(asg1_fixture(4, 2, k, case, true).unwrap());
            }
        }
    }
    let mut out: Vec<_> = fixtures
        .iter()
        .map(|fx| {
            let rep = kernel_rank_oracle(fx.geometry.space(), &fx.gluing).unwrap();
            (fixture_summary(fx), rep.nullity, rep.expected)
        })
        .collect();
    let ex = asg1::fixtures::bicubic_example().unwrap();
    for k in 0..=3 {
        let (g, gluing) = ex.refined(Some(k)).unwrap();
        let rep = kernel_rank_oracle(g.space(), &gluing).unwrap();
        out.push((format!("bicubic example k={k}"), rep.nullity, rep.expected));
    }
    out
}

/// `γ(v)` of the bundled example's normalization.
pub fn example_gamma(v: f64) -> f64 {
    10000.0 / (8167.0 + 60.0 * v - 407.0 * v * v + 516.0 * v.powi(3) + 407.0 * v.powi(4))
}

/// Monomial coefficients of the polynomial of degree `deg` interpolating
/// `f` at `deg + 1` Chebyshev points, together with the largest deviation
/// from `f` at 50 samples.
pub fn fit_polynomial(f: impl Fn(f64) -> f64, deg: usize) -> (Vec<f64>, f64) {
    let m = deg + 1;
    let nodes: Vec<f64> =
        (0..m).map(|i| 0.5 - 0.5 * ((2 * i + 1) as f64 * std::f64::consts::PI / (2 * m) as f64).cos()).collect();
    let a = nalgebra::DMatrix::from_fn(m, m, |i, j| nodes[i].powi(j as i32));
    let b = nalgebra::DVector::from_iterator(m, nodes.iter().map(|&t| f(t)));
    let c = a.lu().solve(&b).expect("Vandermonde");
    let poly = Polynomial::new(c.iter().copied().collect());
    let dev = samples(50).iter().map(|&t| (poly.eval(t) - f(t)).abs()).fold(0.0, f64::max);
    (c.iter().copied().collect(), dev)
}
