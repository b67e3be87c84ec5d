//! Two-patch geometries and their G¹ gluing data.
//!
//! Both patches are glued along their edge `u = 0`. With
//! `ᾱ^(S) = det(∂_u F^(S), F₀′)` and `β̄ = det(∂_u F^(L), ∂_u F^(R))` the
//! geometry is AS-G¹ when linear `α^(S)` and quadratic `β` exist with
//! `α^(S) = γ ᾱ^(S)`, `β = γ β̄` for a common `γ`. Equivalently
//!
//! `α^(R) ∂_u F^(L) − α^(L) ∂_u F^(R) + β F₀′ = 0` on the interface.

use nalgebra::{DMatrix, DVector, Matrix2, SVD};

use crate::analysis::linalg::solve_least_squares;
use crate::analysis::quadrature::gauss_rule_on;
use crate::blossom::{derivative_coeffs, product_coeffs, refine_tensor, represent_in, Product};
use crate::error::{Error, Result};
use crate::spline_core::{linear_resultant, KnotVector, Point2, Polynomial, SplineFunction1D, TensorSplineFunction};

/// Interface column mismatch tolerance.
pub const INTERFACE_TOL: f64 = 1e-12;
/// Relative tolerance of the spline-coefficient identities.
pub const ASG1_TOL: f64 = 1e-8;
/// Singular-value ratio below which a direction counts as a null direction.
pub const RANK_TOL: f64 = 1e-10;
/// Absolute tolerance for matching a root of `β` with a breakpoint.
pub const ROOT_TOL: f64 = 1e-10;
/// Minimum admissible `|det J|` in [`TwoPatchGeometry::verify_regularity`].
pub const DET_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    L,
    R,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::L, Side::R];

    pub fn label(self) -> char {
        match self {
            Side::L => 'L',
            Side::R => 'R',
        }
    }
}

/// Two planar patches `F^(L)`, `F^(R)` on a common space `S(T)²` sharing
/// their first control-point column.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoPatchGeometry {
    patch_l: TensorSplineFunction<Point2>,
    patch_r: TensorSplineFunction<Point2>,
}

/// Minimum Jacobian determinants found on a sample grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularityReport {
    pub min_abs_det_l: f64,
    pub min_abs_det_r: f64,
    /// Orientation sign of each patch, 0 when the sign changes.
    pub sign_l: i8,
    pub sign_r: i8,
    pub flagged: bool,
}

impl TwoPatchGeometry {
    pub fn new(patch_l: TensorSplineFunction<Point2>, patch_r: TensorSplineFunction<Point2>) -> Result<Self> {
        let space = patch_l.space_u();
        if patch_l.space_v() != space || patch_r.space_u() != space || patch_r.space_v() != space {
            return Err(Error::IncompatibleSpaces("both patches must use one space in both directions".into()));
        }
        for j in 0..patch_l.n_v() {
            let distance = (patch_l.get(0, j) - patch_r.get(0, j)).norm();
            if distance > INTERFACE_TOL {
                return Err(Error::InterfaceMismatch { column: j, distance });
            }
        }
        Ok(Self { patch_l, patch_r })
    }

    pub fn patch(&self, side: Side) -> &TensorSplineFunction<Point2> {
        match side {
            Side::L => &self.patch_l,
            Side::R => &self.patch_r,
        }
    }

    pub fn space(&self) -> &KnotVector {
        self.patch_l.space_u()
    }

    pub fn degree(&self) -> usize {
        self.space().degree()
    }

    /// Both patches after knot insertion into `target` in both directions.
    pub fn refine(&self, target: &KnotVector) -> Result<Self> {
        Ok(Self {
            patch_l: refine_tensor(&self.patch_l, target, target)?,
            patch_r: refine_tensor(&self.patch_r, target, target)?,
        })
    }

    /// Coordinate splines `(x₀, y₀)` of the interface curve `F₀(v) = F(0, v)`.
    pub fn interface_curve(&self) -> [SplineFunction1D; 2] {
        [self.patch_l.row_component(0, 0), self.patch_l.row_component(0, 1)]
    }

    /// Coordinate splines of `∂_u F^(S)(0, v)`.
    pub fn transversal_derivative(&self, side: Side) -> [SplineFunction1D; 2] {
        let f = self.patch(side);
        let t = self.space().knots();
        let p = self.degree();
        let factor = p as f64 / (t[p + 1] - t[1]);
        [0, 1].map(|axis| {
            let r0 = f.row_component(0, axis);
            let r1 = f.row_component(1, axis);
            let c = r1.coefficients().iter().zip(r0.coefficients()).map(|(a, b)| factor * (a - b)).collect();
            SplineFunction1D::new(self.space().clone(), c).expect("row lengths match")
        })
    }

    /// Jacobian `[∂_u F, ∂_v F]` of one patch at `(u, v)`.
    pub fn jacobian(&self, side: Side, u: f64, v: f64) -> Result<Matrix2<f64>> {
        let f = self.patch(side);
        let du = f.eval(u, v, 1, 0)?;
        let dv = f.eval(u, v, 0, 1)?;
        Ok(Matrix2::from_columns(&[du, dv]))
    }

    /// Minimum `|det J|` on a tensor Gauss grid with `samples_per_element`
    /// points per direction and Bézier element.
    pub fn verify_regularity(&self, samples_per_element: usize) -> Result<RegularityReport> {
        if samples_per_element < 2 {
            return Err(Error::InvalidParameters("need at least 2 samples per element".into()));
        }
        let mut pts = Vec::new();
        for (a, b) in self.space().elements() {
            pts.push(a);
            pts.extend(gauss_rule_on(samples_per_element, a, b)?.0);
        }
        pts.push(1.0);
        let mut result = [(f64::INFINITY, 0i8); 2];
        for (slot, side) in Side::BOTH.into_iter().enumerate() {
            let (mut pos, mut neg) = (false, false);
            for &u in &pts {
                for &v in &pts {
                    let det = self.jacobian(side, u, v)?.determinant();
                    result[slot].0 = result[slot].0.min(det.abs());
                    pos |= det > 0.0;
                    neg |= det < 0.0;
                }
            }
            result[slot].1 = match (pos, neg) {
                (true, false) => 1,
                (false, true) => -1,
                _ => 0,
            };
        }
        let flagged = result.iter().any(|&(m, s)| m < DET_TOL || s == 0);
        Ok(RegularityReport {
            min_abs_det_l: result[0].0,
            min_abs_det_r: result[1].0,
            sign_l: result[0].1,
            sign_r: result[1].1,
            flagged,
        })
    }
}

/// The spline functions `ᾱ^(L)`, `ᾱ^(R)` and `β̄` of a geometry.
#[derive(Debug, Clone, PartialEq)]
pub struct GluingBars {
    pub alpha_bar_l: SplineFunction1D,
    pub alpha_bar_r: SplineFunction1D,
    pub beta_bar: SplineFunction1D,
}

fn det_spline(a: &[SplineFunction1D; 2], b: &[SplineFunction1D; 2]) -> Result<SplineFunction1D> {
    let first = product_coeffs(&a[0], &b[1])?;
    let second = product_coeffs(&a[1], &b[0])?;
    SplineFunction1D::linear_combination(&[(1.0, &first), (-1.0, &second)])
}

/// Exact spline representations of `ᾱ^(L)`, `ᾱ^(R)` and `β̄`.
pub fn compute_alphabar_betabar(geometry: &TwoPatchGeometry) -> Result<GluingBars> {
    let f0 = geometry.interface_curve();
    let df0 = [derivative_coeffs(&f0[0])?, derivative_coeffs(&f0[1])?];
    let du_l = geometry.transversal_derivative(Side::L);
    let du_r = geometry.transversal_derivative(Side::R);
    Ok(GluingBars {
        alpha_bar_l: det_spline(&du_l, &df0)?,
        alpha_bar_r: det_spline(&du_r, &df0)?,
        beta_bar: det_spline(&du_l, &du_r)?,
    })
}

/// Gluing data of an AS-G¹ two-patch geometry.
#[derive(Debug, Clone, PartialEq)]
pub struct GluingData {
    pub alpha_l: Polynomial,
    pub alpha_r: Polynomial,
    pub beta: Polynomial,
    pub beta_l: Polynomial,
    pub beta_r: Polynomial,
    /// `max(deg α^(L), deg α^(R))`.
    pub d_alpha: usize,
    /// Number of breakpoints where `β` vanishes; equals `k` when `β ≡ 0`.
    pub z_beta: usize,
    /// 1-based indices `ℓ` of the breakpoints `τ_ℓ` with `β(τ_ℓ) = 0`.
    pub root_indices: Vec<usize>,
    pub beta_is_zero: bool,
}

impl GluingData {
    /// Validates `α^(L)`, `α^(R)`, `β`, computes the minimal pair
    /// `β^(L)`, `β^(R)` and classifies `β` on `breakpoints`.
    pub fn from_polynomials(
        alpha_l: Polynomial,
        alpha_r: Polynomial,
        beta: Polynomial,
        breakpoints: &[f64],
    ) -> Result<Self> {
        let (beta_l, beta_r) = minimize_beta_pair(&alpha_l, &alpha_r, &beta)?;
        Self::with_beta_pair(alpha_l, alpha_r, beta, beta_l, beta_r, breakpoints)
    }

    /// As [`GluingData::from_polynomials`] with a caller-supplied pair
    /// `β^(L)`, `β^(R)`, which must satisfy `α^(L)β^(R) − α^(R)β^(L) = β`.
    pub fn with_beta_pair(
        alpha_l: Polynomial,
        alpha_r: Polynomial,
        beta: Polynomial,
        beta_l: Polynomial,
        beta_r: Polynomial,
        breakpoints: &[f64],
    ) -> Result<Self> {
        check_degrees(&alpha_l, &alpha_r, &beta)?;
        for b in [&beta_l, &beta_r] {
            if b.degree().unwrap_or(0) > 1 {
                return Err(Error::NotAsG1("β^(L), β^(R) must be linear".into()));
            }
        }
        check_alpha_sign(&alpha_l, &alpha_r)?;
        check_coprime(&alpha_l, &alpha_r)?;
        let split = &(&(&alpha_l * &beta_r) - &(&alpha_r * &beta_l)) - &beta;
        let scale = 1.0f64.max(beta.max_abs_coefficient());
        if split.max_abs_coefficient() > 1e-10 * scale {
            return Err(Error::GluingResidual(split.max_abs_coefficient()));
        }
        let d_alpha = alpha_l.degree().unwrap_or(0).max(alpha_r.degree().unwrap_or(0));
        let (z_beta, root_indices, beta_is_zero) = classify_beta(&beta, breakpoints);
        Ok(Self { alpha_l, alpha_r, beta, beta_l, beta_r, d_alpha, z_beta, root_indices, beta_is_zero })
    }

    /// Recompute `z_β` and the root indices for other breakpoints.
    pub fn reclassify(&self, breakpoints: &[f64]) -> Self {
        let (z_beta, root_indices, beta_is_zero) = classify_beta(&self.beta, breakpoints);
        Self { z_beta, root_indices, beta_is_zero, ..self.clone() }
    }

    pub fn alpha(&self, side: Side) -> &Polynomial {
        match side {
            Side::L => &self.alpha_l,
            Side::R => &self.alpha_r,
        }
    }

    pub fn beta_side(&self, side: Side) -> &Polynomial {
        match side {
            Side::L => &self.beta_l,
            Side::R => &self.beta_r,
        }
    }

    /// Gluing data for the normalization constant multiplied by `c`.
    pub fn scaled(&self, c: f64, breakpoints: &[f64]) -> Result<Self> {
        Self::from_polynomials(self.alpha_l.scaled(c), self.alpha_r.scaled(c), self.beta.scaled(c), breakpoints)
    }

    /// Relative residual of `α^(R) ∂_u F^(L) − α^(L) ∂_u F^(R) + β F₀′` on
    /// the interface, sampled at `samples` points.
    pub fn residual(&self, geometry: &TwoPatchGeometry, samples: usize) -> Result<f64> {
        let (fl, fr) = (geometry.patch(Side::L), geometry.patch(Side::R));
        let (mut worst, mut scale) = (0.0f64, 0.0f64);
        for s in 0..samples {
            let v = s as f64 / (samples.max(2) - 1) as f64;
            let a = fl.eval(0.0, v, 1, 0)? * self.alpha_r.eval(v);
            let b = fr.eval(0.0, v, 1, 0)? * self.alpha_l.eval(v);
            let c = fl.eval(0.0, v, 0, 1)? * self.beta.eval(v);
            worst = worst.max((a - b + c).norm());
            scale = scale.max(a.norm()).max(b.norm()).max(c.norm());
        }
        Ok(if scale == 0.0 { worst } else { worst / scale })
    }

    /// Checks the G¹ identity against a geometry.
    pub fn validate(&self, geometry: &TwoPatchGeometry) -> Result<()> {
        let r = self.residual(geometry, 200)?;
        if r > ASG1_TOL {
            return Err(Error::GluingResidual(r));
        }
        Ok(())
    }
}

fn check_degrees(alpha_l: &Polynomial, alpha_r: &Polynomial, beta: &Polynomial) -> Result<()> {
    if alpha_l.degree().unwrap_or(0) > 1 || alpha_r.degree().unwrap_or(0) > 1 {
        return Err(Error::NotAsG1("α^(L), α^(R) must be linear".into()));
    }
    if beta.degree().unwrap_or(0) > 2 {
        return Err(Error::NotAsG1("β must be at most quadratic".into()));
    }
    Ok(())
}

/// `α^(L) α^(R) < 0` on `[0, 1]`, checked at both ends and at the vertex.
fn check_alpha_sign(alpha_l: &Polynomial, alpha_r: &Polynomial) -> Result<()> {
    let prod = alpha_l * alpha_r;
    let mut pts = vec![0.0, 1.0];
    let (b, a) = (prod.coefficient(1), prod.coefficient(2));
    if a != 0.0 {
        let vertex = -b / (2.0 * a);
        if (0.0..=1.0).contains(&vertex) {
            pts.push(vertex);
        }
    }
    if pts.iter().any(|&v| prod.eval(v) >= 0.0) {
        return Err(Error::NotAsG1("α^(L)·α^(R) must be negative on [0, 1]".into()));
    }
    Ok(())
}

fn linear_coprime_scale(alpha_l: &Polynomial, alpha_r: &Polynomial) -> f64 {
    alpha_l.norm() * alpha_r.norm()
}

fn check_coprime(alpha_l: &Polynomial, alpha_r: &Polynomial) -> Result<()> {
    if alpha_l.degree() == Some(1) && alpha_r.degree() == Some(1) {
        let res = linear_resultant(alpha_l, alpha_r);
        if res.abs() <= RANK_TOL * linear_coprime_scale(alpha_l, alpha_r) {
            return Err(Error::NotAsG1("α^(L) and α^(R) share a root".into()));
        }
    }
    Ok(())
}

/// `z_β`, the 1-based root indices, and whether `β ≡ 0`.
///
/// A breakpoint counts as a root when a root of `β` lies within
/// [`ROOT_TOL`] of it or when `|β(τ)| ≤ 10⁻¹⁰ ‖β‖`.
pub fn classify_beta(beta: &Polynomial, breakpoints: &[f64]) -> (usize, Vec<usize>, bool) {
    if beta.is_zero() {
        return (breakpoints.len(), (1..=breakpoints.len()).collect(), true);
    }
    let roots = beta.real_roots();
    let scale = beta.max_abs_coefficient();
    let indices: Vec<usize> = breakpoints
        .iter()
        .enumerate()
        .filter(|(_, &tau)| {
            roots.iter().any(|r| (r - tau).abs() <= ROOT_TOL) || beta.eval(tau).abs() <= 1e-10 * scale
        })
        .map(|(i, _)| i + 1)
        .collect();
    (indices.len(), indices, false)
}

/// The linear pair `β^(L)`, `β^(R)` with `α^(L)β^(R) − α^(R)β^(L) = β` that
/// minimizes `‖β^(L)‖²_{L²} + ‖β^(R)‖²_{L²}`.
pub fn minimize_beta_pair(
    alpha_l: &Polynomial,
    alpha_r: &Polynomial,
    beta: &Polynomial,
) -> Result<(Polynomial, Polynomial)> {
    check_degrees(alpha_l, alpha_r, beta)?;
    if beta.is_zero() {
        return Ok((Polynomial::zero(), Polynomial::zero()));
    }
    let (l0, l1) = (alpha_l.coefficient(0), alpha_l.coefficient(1));
    let (r0, r1) = (alpha_r.coefficient(0), alpha_r.coefficient(1));
    // unknowns (βL0, βL1, βR0, βR1)
    #[rustfmt::skip]
    let c = DMatrix::from_row_slice(3, 4, &[
        -r0, 0.0, l0, 0.0,
        -r1, -r0, l1, l0,
        0.0, -r1, 0.0, l1,
    ]);
    let d = DVector::from_vec(vec![beta.coefficient(0), beta.coefficient(1), beta.coefficient(2)]);
    // ∫(b0 + b1 v)² = ‖Lᵀ (b0, b1)‖² with G = [[1, 1/2], [1/2, 1/3]] = L Lᵀ
    let lt = [[1.0, 0.5], [0.0, 0.5 / 3f64.sqrt()]];
    let mut a = DMatrix::zeros(4, 4);
    for block in 0..2 {
        for i in 0..2 {
            for j in 0..2 {
                a[(2 * block + i, 2 * block + j)] = lt[i][j];
            }
        }
    }
    let b = DVector::zeros(4);
    let x = match solve_least_squares(&a, &b, Some((&c, &d))) {
        Ok(x) => x,
        Err(Error::InconsistentConstraints(r)) => return Err(Error::InfeasibleBetaSplit(r)),
        Err(e) => return Err(e),
    };
    Ok((Polynomial::linear(x[0], x[1]), Polynomial::linear(x[2], x[3])))
}

fn times_monomial(f: &SplineFunction1D, power: usize, target: &KnotVector) -> Result<Vec<f64>> {
    let mut c = vec![0.0; power + 1];
    c[power] = 1.0;
    let m = Polynomial::new(c);
    Ok(represent_in(&Product { left: f, right: &m }, target)?.coefficients().to_vec())
}

fn snap(p: &Polynomial, scale: f64) -> Polynomial {
    Polynomial::new(p.coefficients().iter().map(|&c| if c.abs() <= RANK_TOL * scale { 0.0 } else { c }).collect())
}

/// Linear `α^(L)`, `α^(R)` and quadratic `β` from the spline functions
/// `ᾱ^(L)`, `ᾱ^(R)`, `β̄`, normalized so that `(α^(L)₀, α^(L)₁, α^(R)₀, α^(R)₁)`
/// has unit length and `α^(R)(0) > 0`.
pub fn solve_asg1_gluing(bars: &GluingBars) -> Result<GluingData> {
    let (al, ar) = (&bars.alpha_bar_l, &bars.alpha_bar_r);
    if al.space() != ar.space() {
        return Err(Error::IncompatibleSpaces("ᾱ^(L) and ᾱ^(R) live in different spaces".into()));
    }
    let breakpoints = al.space().breakpoints().to_vec();

    // ᾱ^(L) α^(R) − ᾱ^(R) α^(L) ≡ 0 in the unknowns (αL0, αL1, αR0, αR1)
    let target = al.space().elevated(1);
    let cols = [
        times_monomial(ar, 0, &target)?,
        times_monomial(ar, 1, &target)?,
        times_monomial(al, 0, &target)?,
        times_monomial(al, 1, &target)?,
    ];
    let m = target.dim();
    let sys = DMatrix::from_fn(m, 4, |i, j| if j < 2 { -cols[j][i] } else { cols[j][i] });
    let svd = SVD::new(sys, true, true);
    let v_t = svd.v_t.as_ref().expect("v_t requested");
    let smax = svd.singular_values.max();
    if smax == 0.0 {
        return Err(Error::NotAsG1("ᾱ^(L) and ᾱ^(R) vanish".into()));
    }
    let null: Vec<usize> = (0..4).filter(|&i| svd.singular_values[i] <= RANK_TOL * smax).collect();
    let mut x = match null.len() {
        1 => v_t.row(null[0]).transpose().into_owned(),
        2 => {
            // constant pair in the 2D null space: kill both slopes
            let n0 = v_t.row(null[0]).transpose();
            let n1 = v_t.row(null[1]).transpose();
            let slopes = DMatrix::from_row_slice(2, 2, &[n0[1], n1[1], n0[3], n1[3]]);
            let s = SVD::new(slopes, false, true);
            let vt = s.v_t.expect("v_t requested");
            let smallest = if s.singular_values[0] <= s.singular_values[1] { 0 } else { 1 };
            let y = vt.row(smallest);
            n0 * y[0] + n1 * y[1]
        }
        n => {
            return Err(Error::NotAsG1(format!(
                "homogeneous α system has nullity {n}, expected 1 or 2"
            )))
        }
    };
    x /= x.norm();
    let mut alpha_l = Polynomial::linear(x[0], x[1]);
    let mut alpha_r = Polynomial::linear(x[2], x[3]);
    alpha_l = snap(&alpha_l, 1.0);
    alpha_r = snap(&alpha_r, 1.0);

    let mut beta = solve_beta(bars, &alpha_l, &alpha_r)?;

    // common linear factor of α^(L), α^(R) and β
    if alpha_l.degree() == Some(1) && alpha_r.degree() == Some(1) {
        let res = linear_resultant(&alpha_l, &alpha_r);
        if res.abs() <= RANK_TOL * linear_coprime_scale(&alpha_l, &alpha_r) {
            let lead = if alpha_l.coefficient(1).abs() >= alpha_r.coefficient(1).abs() { &alpha_l } else { &alpha_r };
            let root = -lead.coefficient(0) / lead.coefficient(1);
            let (ql, _) = alpha_l.divide_by_root(root);
            let (qr, _) = alpha_r.divide_by_root(root);
            let (qb, rem) = beta.divide_by_root(root);
            if rem.abs() > ASG1_TOL * 1.0f64.max(beta.max_abs_coefficient()) {
                return Err(Error::NotAsG1("common factor of α^(L), α^(R) does not divide β".into()));
            }
            alpha_l = ql;
            alpha_r = qr;
            beta = qb;
            let n = (alpha_l.norm().powi(2) + alpha_r.norm().powi(2)).sqrt();
            alpha_l = alpha_l.scaled(1.0 / n);
            alpha_r = alpha_r.scaled(1.0 / n);
            beta = beta.scaled(1.0 / n);
        }
    }
    if alpha_r.eval(0.0) < 0.0 {
        alpha_l = alpha_l.scaled(-1.0);
        alpha_r = alpha_r.scaled(-1.0);
        beta = beta.scaled(-1.0);
    }
    let scale = alpha_l.max_abs_coefficient().max(alpha_r.max_abs_coefficient());
    let beta = snap(&beta, scale);
    GluingData::from_polynomials(alpha_l, alpha_r, beta, &breakpoints)
}

/// Least-squares `β` from `β ᾱ^(S) = β̄ α^(S)` for both sides.
fn solve_beta(bars: &GluingBars, alpha_l: &Polynomial, alpha_r: &Polynomial) -> Result<Polynomial> {
    let abar_space = bars.alpha_bar_l.space();
    // degree 2p + 1, regularity r − 1
    let target = abar_space.elevated(2);
    let (m, n) = (target.dim(), 3);
    let mut a = DMatrix::zeros(2 * m, n);
    let mut rhs = DVector::zeros(2 * m);
    for (block, (abar, alpha)) in [(&bars.alpha_bar_l, alpha_l), (&bars.alpha_bar_r, alpha_r)].into_iter().enumerate() {
        for power in 0..3 {
            let col = times_monomial(abar, power, &target)?;
            for i in 0..m {
                a[(block * m + i, power)] = col[i];
            }
        }
        let prod = represent_in(&Product { left: &bars.beta_bar, right: alpha }, &target)?;
        for i in 0..m {
            rhs[block * m + i] = prod.coefficients()[i];
        }
    }
    let x = solve_least_squares(&a, &rhs, None).map_err(|e| Error::NotAsG1(format!("β system: {e}")))?;
    let residual = (&a * &x - &rhs).norm();
    let alpha_norm = (alpha_l.norm().powi(2) + alpha_r.norm().powi(2)).sqrt();
    let scale = rhs.norm().max(a.column(0).norm() * alpha_norm);
    let rel = if scale == 0.0 { residual } else { residual / scale };
    if rel > ASG1_TOL {
        return Err(Error::NotAsG1(format!("β identity residual {rel:e}")));
    }
    Ok(Polynomial::new(x.iter().copied().collect()))
}

/// Gluing data of a geometry computed from its control points.
pub fn compute_gluing(geometry: &TwoPatchGeometry) -> Result<GluingData> {
    solve_asg1_gluing(&compute_alphabar_betabar(geometry)?)
}

/// Relative residual of `ᾱ^(L) α^(R) − ᾱ^(R) α^(L)` in coefficient form.
pub fn alpha_identity_residual(bars: &GluingBars, gluing: &GluingData) -> Result<f64> {
    let target = bars.alpha_bar_l.space().elevated(1);
    let a = represent_in(&Product { left: &bars.alpha_bar_l, right: &gluing.alpha_r }, &target)?;
    let b = represent_in(&Product { left: &bars.alpha_bar_r, right: &gluing.alpha_l }, &target)?;
    let diff = SplineFunction1D::linear_combination(&[(1.0, &a), (-1.0, &b)])?;
    let scale = a.max_abs_coefficient().max(b.max_abs_coefficient());
    Ok(if scale == 0.0 { 0.0 } else { diff.max_abs_coefficient() / scale })
}
