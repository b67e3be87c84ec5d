//! Test geometries: the bundled bicubic two-patch example and AS-G¹
//! geometries with prescribed gluing data.
//!
//! A prescribed geometry has the interface `F₀(v) = (0.15 v (1 − v), v)` and
//! patches `F^(S)(u, v) = F₀(v) + u (α^(S)(v) d + β^(S)(v) F₀′(v))` with
//! `d = (1, 0)`, so that its gluing data are exactly the prescribed ones.

use crate::blossom::represent_in;
use crate::error::{Error, Result};
use crate::gluing::{compute_gluing, minimize_beta_pair, GluingData, Side, TwoPatchGeometry};
use crate::io::{parse_geometry_str, GeometryInput};
use crate::spline_core::{uniform_breakpoints, KnotVector, Point2, Polynomial, TensorSplineFunction};

/// Geometry document of the bundled bicubic example with its gluing data.
pub const BICUBIC_EXAMPLE_JSON: &str = include_str!("../data/bicubic_example.json");

/// The bundled bicubic example (`p = 3`, `r = 1`, no inner breakpoints).
pub fn bicubic_example() -> Result<GeometryInput> {
    parse_geometry_str(BICUBIC_EXAMPLE_JSON)
}

/// Which zeros `β` has at the breakpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BetaCase {
    /// `β ≡ 0`.
    Zero,
    /// `β ≢ 0` without zeros at breakpoints.
    NoRoot,
    /// A single zero at the first breakpoint; needs `k ≥ 1`.
    OneRoot,
    /// Zeros at the first two breakpoints; needs `k ≥ 2`.
    TwoRoots,
}

impl BetaCase {
    pub const ALL: [BetaCase; 4] = [BetaCase::Zero, BetaCase::NoRoot, BetaCase::OneRoot, BetaCase::TwoRoots];

    pub fn z_beta(self, k: usize) -> usize {
        match self {
            BetaCase::Zero => k,
            BetaCase::NoRoot => 0,
            BetaCase::OneRoot => 1,
            BetaCase::TwoRoots => 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            BetaCase::Zero => "beta=0",
            BetaCase::NoRoot => "z_beta=0",
            BetaCase::OneRoot => "z_beta=1",
            BetaCase::TwoRoots => "z_beta=2",
        }
    }

    /// Whether a fixture exists for `k` inner breakpoints.
    pub fn available(self, k: usize) -> bool {
        match self {
            BetaCase::OneRoot => k >= 1,
            BetaCase::TwoRoots => k >= 2,
            _ => true,
        }
    }
}

/// A geometry with prescribed gluing data.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub geometry: TwoPatchGeometry,
    /// Gluing data computed from the geometry.
    pub gluing: GluingData,
    pub case: BetaCase,
    pub regularity: usize,
}

fn polynomial_patch(space: &KnotVector, f0: [&Polynomial; 2], du: [&Polynomial; 2]) -> Result<TensorSplineFunction<Point2>> {
    let rep = |p: &Polynomial| -> Result<Vec<f64>> { Ok(represent_in(p, space)?.coefficients().to_vec()) };
    let (fx, fy, dx, dy) = (rep(f0[0])?, rep(f0[1])?, rep(du[0])?, rep(du[1])?);
    let xi = space.greville();
    Ok(TensorSplineFunction::from_fn(space.clone(), space.clone(), |i, j| {
        Point2::new(fx[j] + xi[i] * dx[j], fy[j] + xi[i] * dy[j])
    }))
}

/// Two-patch geometry in `S(T^{p,r}_k)` whose transversal derivatives
/// satisfy `∂_u F^(S) = α^(S) d + β^(S) F₀′`.
pub fn prescribed_geometry(
    space: &KnotVector,
    alpha_l: &Polynomial,
    alpha_r: &Polynomial,
    beta_l: &Polynomial,
    beta_r: &Polynomial,
) -> Result<TwoPatchGeometry> {
    let f0x = Polynomial::new(vec![0.0, 0.15, -0.15]);
    let f0y = Polynomial::linear(0.0, 1.0);
    let (dfx, dfy) = (f0x.derivative(), f0y.derivative());
    let patch = |alpha: &Polynomial, beta: &Polynomial| {
        let dx = alpha + &(beta * &dfx);
        let dy = beta * &dfy;
        polynomial_patch(space, [&f0x, &f0y], [&dx, &dy])
    };
    TwoPatchGeometry::new(patch(alpha_l, beta_l)?, patch(alpha_r, beta_r)?)
}

fn alphas(constant: bool) -> (Polynomial, Polynomial) {
    if constant {
        (Polynomial::constant(-1.0), Polynomial::constant(1.2))
    } else {
        (Polynomial::linear(-1.0, -0.5), Polynomial::linear(1.0, -0.3))
    }
}

fn prescribed_beta(case: BetaCase, bps: &[f64], constant_alpha: bool) -> Result<Polynomial> {
    let root = |i: usize| {
        bps.get(i).copied().ok_or_else(|| Error::UnsupportedCase(format!("{} needs more breakpoints", case.label())))
    };
    Ok(match case {
        BetaCase::Zero => Polynomial::zero(),
        BetaCase::NoRoot => Polynomial::linear(0.25, 0.1),
        BetaCase::OneRoot => Polynomial::linear(-0.3 * root(0)?, 0.3),
        BetaCase::TwoRoots => {
            if constant_alpha {
                return Err(Error::UnsupportedCase("two zeros of β need linear α".into()));
            }
            let (a, b) = (root(0)?, root(1)?);
            Polynomial::new(vec![0.2 * a * b, -0.2 * (a + b), 0.2])
        }
    })
}

/// AS-G¹ geometry in `S(T^{p,r}_k)` (uniform breakpoints) for a `β` case;
/// `constant_alpha` selects `d_α = 0`.
pub fn asg1_fixture(p: usize, r: usize, k: usize, case: BetaCase, constant_alpha: bool) -> Result<Fixture> {
    if !case.available(k) {
        return Err(Error::UnsupportedCase(format!("{} needs k >= {}", case.label(), case.z_beta(k))));
    }
    let space = KnotVector::with_regularity(p, r as isize, uniform_breakpoints(k))?;
    let (al, ar) = alphas(constant_alpha);
    let beta = prescribed_beta(case, space.breakpoints(), constant_alpha)?;
    let (bl, br) = if beta.is_zero() {
        (Polynomial::zero(), Polynomial::zero())
    } else {
        minimize_beta_pair(&al, &ar, &beta)?
    };
    let geometry = prescribed_geometry(&space, &al, &ar, &bl, &br)?;
    let gluing = compute_gluing(&geometry)?;
    Ok(Fixture { geometry, gluing, case, regularity: r })
}

/// `(p, r)` pairs of the test matrix.
pub const TEST_DEGREES: [(usize, usize); 4] = [(3, 1), (4, 1), (4, 2), (5, 2)];

/// All fixtures of the test matrix: every `(p, r)`, `k ∈ {0, 1, 2}` and
/// available `β` case, with linear `α`.
pub fn test_matrix() -> Result<Vec<Fixture>> {
    let mut out = Vec::new();
    for (p, r) in TEST_DEGREES {
        for k in 0..=2 {
            for case in BetaCase::ALL {
                if case.available(k) {
                    out.push(asg1_fixture(p, r, k, case, false)?);
                }
            }
        }
    }
    Ok(out)
}

/// One-line description of a fixture.
pub fn fixture_summary(f: &Fixture) -> String {
    let s = f.geometry.space();
    format!(
        "p={} r={} k={} {} (d_alpha={}, z_beta={}, {}x{} control points)",
        s.degree(),
        f.regularity,
        s.num_breakpoints(),
        f.case.label(),
        f.gluing.d_alpha,
        f.gluing.z_beta,
        f.geometry.patch(Side::L).n_u(),
        f.geometry.patch(Side::L).n_v()
    )
}
