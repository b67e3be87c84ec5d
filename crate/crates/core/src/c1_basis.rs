//! Dimension of the C¹ space and its explicit basis.
//!
//! A function near the interface is determined by its trace `g₀` and a
//! transversal datum `g₁`. On patch `S` its first two coefficient rows are
//!
//! `g^(S) = g₀ (N₀ + N₁) + λ (α^(S) g₁ + β^(S) g₀′) N₁`,  `λ = τ₁ / p`,
//!
//! and all further rows vanish.

use crate::blossom::{derivative_coeffs, represent_in, Blossom, Derivative, LinearCombination, Product};
use crate::error::{Error, Result};
use crate::gluing::{GluingData, Side, TwoPatchGeometry};
use crate::spline_core::{KnotVector, SplineFunction1D, TensorSplineFunction};

/// Relative tolerance of the membership checks in [`assemble_pair`].
pub const MEMBERSHIP_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisKind {
    InteriorL { i: usize, j: usize },
    InteriorR { i: usize, j: usize },
    /// `φ₀,ᵢ`, built from the trace `Ñᵢ`.
    Trace(usize),
    /// `φ₁,ⱼ`, built from the transversal datum `N̄ⱼ`.
    Transversal(usize),
    /// Shared interface function `N_{0,j}` of the C⁰ space.
    Interface(usize),
    /// Interior function `N_{i,j}`, `i ≥ 1`, of the C⁰ space on one patch.
    C0Interior { side: Side, i: usize, j: usize },
}

impl BasisKind {
    pub fn label(&self) -> String {
        match *self {
            BasisKind::InteriorL { i, j } => format!("interior_L({i},{j})"),
            BasisKind::InteriorR { i, j } => format!("interior_R({i},{j})"),
            BasisKind::Trace(i) => format!("trace({i})"),
            BasisKind::Transversal(j) => format!("transversal({j})"),
            BasisKind::Interface(j) => format!("interface({j})"),
            BasisKind::C0Interior { side, i, j } => format!("c0_interior_{}({i},{j})", side.label()),
        }
    }
}

/// Square grid `d_{i,j}` of tensor coefficients, row-major in `i` (the `u`
/// index).
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientGrid {
    n: usize,
    data: Vec<f64>,
}

impl CoefficientGrid {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0.0; n * n] }
    }

    pub fn from_data(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::CoefficientCount { expected: n * n, got: data.len() });
        }
        Ok(Self { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&c| c == 0.0)
    }

    /// `(flat index, value)` of all non-zero entries.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.data.iter().copied().enumerate().filter(|(_, c)| *c != 0.0)
    }
}

/// One basis function as a pair of coefficient grids.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisFunction {
    pub kind: BasisKind,
    pub coeff_l: CoefficientGrid,
    pub coeff_r: CoefficientGrid,
    /// `(g₀, g₁)` for trace and transversal functions.
    pub trace_data: Option<(SplineFunction1D, SplineFunction1D)>,
}

impl BasisFunction {
    pub fn grid(&self, side: Side) -> &CoefficientGrid {
        match side {
            Side::L => &self.coeff_l,
            Side::R => &self.coeff_r,
        }
    }

    /// The function on patch `side` as a tensor spline over `space × space`.
    pub fn patch_function(&self, side: Side, space: &KnotVector) -> Result<TensorSplineFunction<f64>> {
        TensorSplineFunction::new(space.clone(), space.clone(), self.grid(side).data().to_vec())
    }

    pub fn grid_mut(&mut self, side: Side) -> &mut CoefficientGrid {
        match side {
            Side::L => &mut self.coeff_l,
            Side::R => &mut self.coeff_r,
        }
    }
}

/// Ordered basis over the tensor space `S(T)²` of both patches.
#[derive(Debug, Clone, PartialEq)]
pub struct Basis {
    pub space: KnotVector,
    pub functions: Vec<BasisFunction>,
}

impl Basis {
    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionReport {
    pub p: usize,
    pub r: usize,
    pub k: usize,
    pub d_alpha: usize,
    pub z_beta: usize,
    pub beta_is_zero: bool,
    /// `n = dim S(T^{p,r}_k)`.
    pub n: usize,
    /// `ñ = dim S(T̃)`.
    pub n_tilde: usize,
    /// `n̄ = dim S(T^{p−d_α,r}_k)`.
    pub n_bar: usize,
    pub dim_v1: usize,
    pub dim_v1_1: usize,
    pub dim_v1_2: usize,
    pub dim_gamma0: usize,
    pub dim_gamma1: usize,
}

/// Dimensions of `V¹`, `V¹₁`, `V¹₂`, `Γ₀` and `Γ₁`.
pub fn dimension(
    p: usize,
    r: usize,
    k: usize,
    d_alpha: usize,
    z_beta: usize,
    beta_is_zero: bool,
) -> Result<DimensionReport> {
    if p < 3 || r < 1 || r + 2 > p {
        return Err(Error::InvalidParameters(format!("need p >= 3 and 1 <= r <= p - 2, got p={p}, r={r}")));
    }
    if d_alpha > 1 {
        return Err(Error::InvalidParameters(format!("d_alpha must be 0 or 1, got {d_alpha}")));
    }
    if !beta_is_zero && (z_beta > 2 || z_beta > k) {
        return Err(Error::InvalidParameters(format!("z_beta = {z_beta} impossible for k = {k}")));
    }
    let n = p + 1 + k * (p - r);
    let dim_v1_1 = 2 * (n - 2) * n;
    let dim_gamma0 = if beta_is_zero { n } else { p + k * (p - r - 1) + 1 + z_beta };
    let dim_gamma1 = p + k * (p - r - 1) + (1 - d_alpha) * (k + 1);
    let n_bar = p - d_alpha + 1 + k * (p - d_alpha - r);
    debug_assert_eq!(n_bar, dim_gamma1);
    let dim_v1_2 = dim_gamma0 + dim_gamma1;
    Ok(DimensionReport {
        p,
        r,
        k,
        d_alpha,
        z_beta: if beta_is_zero { k } else { z_beta },
        beta_is_zero,
        n,
        n_tilde: dim_gamma0,
        n_bar,
        dim_v1: dim_v1_1 + dim_v1_2,
        dim_v1_1,
        dim_v1_2,
        dim_gamma0,
        dim_gamma1,
    })
}

/// Dimension report for a space and gluing data.
pub fn dimension_for(space: &KnotVector, gluing: &GluingData) -> Result<DimensionReport> {
    let r = space
        .uniform_regularity()
        .or_else(|| (space.num_breakpoints() == 0).then_some(1))
        .ok_or_else(|| Error::UnsupportedCase("non-uniform regularity".into()))?;
    dimension(space.degree(), r.max(0) as usize, space.num_breakpoints(), gluing.d_alpha, gluing.z_beta, gluing.beta_is_zero)
}

/// The space `S(T̃)` of traces: its base knot vector and the functions `Ñᵢ`,
/// all expressed in the fine space `S(T)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TildeSpace {
    /// `T` itself for `β ≡ 0`, else `T` with every inner multiplicity lowered
    /// by one.
    pub base: KnotVector,
    pub functions: Vec<SplineFunction1D>,
    /// For each appended function: its index in `functions` and the root `τ_ℓ`.
    pub appended: Vec<(usize, f64)>,
}

/// Knot vector with one regularity more at every breakpoint.
pub fn smoother(space: &KnotVector) -> Result<KnotVector> {
    let mult: Vec<usize> = space.multiplicities().iter().map(|&m| m.saturating_sub(1)).collect();
    if mult.contains(&0) {
        return Err(Error::IncompatibleSpaces("cannot raise regularity at a simple knot".into()));
    }
    KnotVector::new(space.degree(), space.breakpoints().to_vec(), mult)
}

/// Transversal space `S(T^{p−d_α,r})`.
pub fn transversal_space(space: &KnotVector, d_alpha: usize) -> Result<KnotVector> {
    match d_alpha {
        0 => Ok(space.clone()),
        _ => space.lowered(),
    }
}

/// Index of the B-spline of `inserted` whose inner knot window contains all
/// copies of breakpoint `ell` (1-based), lowest index first.
fn appended_index(inserted: &KnotVector, ell: usize) -> usize {
    let tau = inserted.breakpoints()[ell - 1];
    let copies = inserted.multiplicities()[ell - 1];
    let first = inserted.knots().iter().position(|&t| t == tau).expect("breakpoint present");
    first + copies - inserted.degree() - 1
}

/// The functions `Ñᵢ` spanning the trace space.
pub fn build_tilde_space(space: &KnotVector, gluing: &GluingData) -> Result<TildeSpace> {
    if gluing.beta_is_zero {
        let functions = (0..space.dim()).map(|i| SplineFunction1D::bspline(space, i)).collect();
        return Ok(TildeSpace { base: space.clone(), functions, appended: Vec::new() });
    }
    if gluing.root_indices.len() != gluing.z_beta || gluing.z_beta > 2 {
        return Err(Error::InvalidParameters(format!(
            "inconsistent classification: z_beta = {} with roots {:?}",
            gluing.z_beta, gluing.root_indices
        )));
    }
    let base = smoother(space)?;
    let mut functions = (0..base.dim())
        .map(|i| represent_in(&SplineFunction1D::bspline(&base, i), space))
        .collect::<Result<Vec<_>>>()?;
    let mut appended = Vec::new();
    for &ell in &gluing.root_indices {
        if ell == 0 || ell > space.num_breakpoints() {
            return Err(Error::BreakpointIndex { index: ell, count: space.num_breakpoints() });
        }
        let inserted = base.insert_breakpoint(ell)?;
        let idx = appended_index(&inserted, ell);
        let f = represent_in(&SplineFunction1D::bspline(&inserted, idx), space)?;
        appended.push((functions.len(), space.breakpoints()[ell - 1]));
        functions.push(f);
    }
    Ok(TildeSpace { base, functions, appended })
}

/// Companions `g̃₁,ᵢ`: zero except for appended functions, where
/// `g̃₁ = −(β^(L)(τ_ℓ) / α^(L)(τ_ℓ)) Ñ′`. All live in the derivative space of `T`.
pub fn build_g1_companions(tilde: &TildeSpace, gluing: &GluingData, space: &KnotVector) -> Result<Vec<SplineFunction1D>> {
    let dspace = space.derivative_space()?;
    let mut out = vec![SplineFunction1D::zero(dspace); tilde.functions.len()];
    for &(idx, tau) in &tilde.appended {
        let a = gluing.alpha_l.eval(tau);
        if a == 0.0 {
            return Err(Error::NotAsG1(format!("α^(L) vanishes at {tau}")));
        }
        let factor = -gluing.beta_l.eval(tau) / a;
        out[idx] = derivative_coeffs(&tilde.functions[idx])?.scaled(factor);
    }
    Ok(out)
}

/// `λ = (t_{p+1} − t_1) / p`, the reciprocal of `N₁′(0)`.
pub fn lambda(space: &KnotVector) -> f64 {
    let t = space.knots();
    let p = space.degree();
    (t[p + 1] - t[1]) / p as f64
}

fn sample_points(space: &KnotVector) -> Vec<f64> {
    let mut pts = Vec::new();
    for (a, b) in space.elements() {
        for s in 0..=8 {
            pts.push(a + (b - a) * s as f64 / 8.0);
        }
    }
    pts
}

/// Coefficients of `f` in `target`, after checking by sampling that `f`
/// belongs to `S(target)`. Deviations are measured relative to the sampled
/// magnitude of `f`, but never relative to less than `floor`.
fn represent_checked(
    f: &dyn Blossom,
    target: &KnotVector,
    floor: f64,
    eval: impl Fn(f64) -> Result<f64>,
) -> Result<SplineFunction1D> {
    let rep = represent_in(f, target)?;
    let mut worst = 0.0f64;
    let mut scale = floor;
    for t in sample_points(target) {
        let exact = eval(t)?;
        worst = worst.max((rep.eval(t)? - exact).abs());
        scale = scale.max(exact.abs());
    }
    if worst > MEMBERSHIP_TOL * scale && worst > 0.0 {
        return Err(Error::MembershipViolation(if scale > 0.0 { worst / scale } else { worst }));
    }
    Ok(rep)
}

/// Coefficient grids of the function with trace `g0` and transversal datum
/// `g1` on both patches.
pub fn assemble_pair(
    g0: &SplineFunction1D,
    g1: &SplineFunction1D,
    gluing: &GluingData,
    space: &KnotVector,
) -> Result<(CoefficientGrid, CoefficientGrid)> {
    let n = space.dim();
    let lam = lambda(space);
    let row0 = represent_checked(g0, space, g0.max_abs_coefficient(), |t| g0.eval(t))?;
    let h = space.elements().iter().fold(1.0f64, |m, (a, b)| m.min(b - a));
    let slope = g0.max_abs_coefficient() * space.degree() as f64 / h;
    let dg0 = Derivative { inner: g0 };
    let mut grids = [CoefficientGrid::zeros(n), CoefficientGrid::zeros(n)];
    for (grid, side) in grids.iter_mut().zip(Side::BOTH) {
        let (alpha, beta_s) = (gluing.alpha(side), gluing.beta_side(side));
        let first = Product { left: alpha, right: g1 };
        let second = Product { left: beta_s, right: &dg0 };
        let f = LinearCombination { terms: vec![(1.0, &first), (1.0, &second)] };
        let eval = |t: f64| -> Result<f64> {
            Ok(alpha.eval(t) * g1.eval(t)? + beta_s.eval(t) * g0.eval_derivative(t, 1)?)
        };
        let floor = alpha.max_abs_coefficient() * g1.max_abs_coefficient() + beta_s.max_abs_coefficient() * slope;
        let frep = represent_checked(&f, space, floor, eval)?;
        for j in 0..n {
            let c0 = row0.coefficients()[j];
            grid.set(0, j, c0);
            grid.set(1, j, c0 + lam * frep.coefficients()[j]);
        }
    }
    let [l, r] = grids;
    Ok((l, r))
}

fn interior_functions(n: usize, side: Side) -> impl Iterator<Item = BasisFunction> {
    (2..n).flat_map(move |i| {
        (0..n).map(move |j| {
            let mut grid = CoefficientGrid::zeros(n);
            grid.set(i, j, 1.0);
            let (coeff_l, coeff_r, kind) = match side {
                Side::L => (grid, CoefficientGrid::zeros(n), BasisKind::InteriorL { i, j }),
                Side::R => (CoefficientGrid::zeros(n), grid, BasisKind::InteriorR { i, j }),
            };
            BasisFunction { kind, coeff_l, coeff_r, trace_data: None }
        })
    })
}

/// The full C¹ basis on the space `T` for the given gluing data: interior
/// functions of `L`, then of `R`, then the trace functions `φ₀,ᵢ`, then the
/// transversal functions `φ₁,ⱼ`.
pub fn build_basis(space: &KnotVector, gluing: &GluingData) -> Result<Basis> {
    let n = space.dim();
    let mut functions: Vec<BasisFunction> = interior_functions(n, Side::L).chain(interior_functions(n, Side::R)).collect();

    let tilde = build_tilde_space(space, gluing)?;
    let companions = build_g1_companions(&tilde, gluing, space)?;
    for (i, (g0, g1)) in tilde.functions.iter().zip(companions).enumerate() {
        let (coeff_l, coeff_r) = assemble_pair(g0, &g1, gluing, space)?;
        functions.push(BasisFunction { kind: BasisKind::Trace(i), coeff_l, coeff_r, trace_data: Some((g0.clone(), g1)) });
    }

    let bar = transversal_space(space, gluing.d_alpha)?;
    let zero = SplineFunction1D::zero(space.clone());
    for j in 0..bar.dim() {
        let g1 = SplineFunction1D::bspline(&bar, j);
        let (coeff_l, coeff_r) = assemble_pair(&zero, &g1, gluing, space)?;
        functions.push(BasisFunction {
            kind: BasisKind::Transversal(j),
            coeff_l,
            coeff_r,
            trace_data: Some((zero.clone(), g1)),
        });
    }
    Ok(Basis { space: space.clone(), functions })
}

/// [`build_basis`] on the space of a geometry.
pub fn build_full_basis(geometry: &TwoPatchGeometry, gluing: &GluingData) -> Result<Basis> {
    build_basis(geometry.space(), gluing)
}

/// Standard basis of the C⁰ space: shared interface functions `N_{0,j}`,
/// then the functions `N_{i,j}`, `i ≥ 1`, of `L` and then of `R`.
pub fn standard_c0_basis(space: &KnotVector) -> Basis {
    let n = space.dim();
    let mut functions = Vec::with_capacity(n * (2 * n - 1));
    for j in 0..n {
        let mut grid = CoefficientGrid::zeros(n);
        grid.set(0, j, 1.0);
        functions.push(BasisFunction { kind: BasisKind::Interface(j), coeff_l: grid.clone(), coeff_r: grid, trace_data: None });
    }
    for side in Side::BOTH {
        for i in 1..n {
            for j in 0..n {
                let mut grid = CoefficientGrid::zeros(n);
                grid.set(i, j, 1.0);
                let (coeff_l, coeff_r) = match side {
                    Side::L => (grid, CoefficientGrid::zeros(n)),
                    Side::R => (CoefficientGrid::zeros(n), grid),
                };
                functions.push(BasisFunction { kind: BasisKind::C0Interior { side, i, j }, coeff_l, coeff_r, trace_data: None });
            }
        }
    }
    Basis { space: space.clone(), functions }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spline_core::{make_uniform_regular_knots, Polynomial};
    use approx::assert_abs_diff_eq;

    fn example_gluing(k: usize) -> GluingData {
        let bp: Vec<f64> = crate::spline_core::uniform_breakpoints(k);
        GluingData::from_polynomials(
            Polynomial::linear(-13.5, -1.5),
            Polynomial::linear(10.5, -1.5),
            Polynomial::new(vec![1.25, -8.0 / 3.0, 1.0 / 12.0]),
            &bp,
        )
        .unwrap()
    }

    #[test]
    fn example_dimensions() {
        for k in 0..=10 {
            let d = dimension(3, 1, k, 1, 0, false).unwrap();
            assert_eq!(d.dim_v1, 23 + 26 * k + 8 * k * k);
            assert_eq!(d.dim_v1, 2 * (2 + 2 * k) * (4 + 2 * k) + 7 + 2 * k);
            assert_eq!(d.dim_v1, d.dim_v1_1 + d.dim_v1_2);
            assert_eq!(d.dim_v1_2, d.dim_gamma0 + d.dim_gamma1);
        }
        let d = dimension(3, 1, 2, 1, 0, false).unwrap();
        assert_eq!((d.dim_v1, d.dim_v1_1, d.dim_gamma0, d.dim_gamma1), (107, 96, 6, 5));
        assert_eq!(dimension(3, 1, 0, 1, 0, false).unwrap().dim_v1_1, 16);
        let zero = dimension(3, 1, 3, 1, 0, true).unwrap();
        assert_eq!((zero.dim_gamma0, zero.z_beta), (10, 3));
        assert!(dimension(3, 2, 1, 1, 0, false).is_err());
        assert!(dimension(4, 1, 1, 1, 2, false).is_err());
    }

    #[test]
    fn index_set_count_for_bezier() {
        // brute-force count of (i, j) with i >= 2 on both patches
        let n = 4;
        let count = (0..2).map(|_| (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, _)| *i >= 2).count()).sum::<usize>();
        assert_eq!(count, 16);
    }

    #[test]
    fn tilde_space_counts() {
        let t = make_uniform_regular_knots(3, 1, 2, None).unwrap();
        let tilde = build_tilde_space(&t, &example_gluing(2)).unwrap();
        assert_eq!(tilde.functions.len(), 6);
        assert_eq!(tilde.base.multiplicities(), &[1, 1]);

        let t1 = make_uniform_regular_knots(3, 1, 1, None).unwrap();
        let zero = GluingData::from_polynomials(
            Polynomial::constant(-1.0),
            Polynomial::constant(1.0),
            Polynomial::zero(),
            t1.breakpoints(),
        )
        .unwrap();
        assert_eq!(build_tilde_space(&t1, &zero).unwrap().functions.len(), 6);
    }

    #[test]
    fn appended_function_is_less_smooth() {
        let t = make_uniform_regular_knots(4, 1, 3, None).unwrap();
        let tau = t.breakpoints()[1];
        let glue = GluingData::from_polynomials(
            Polynomial::linear(-2.0, 0.5),
            Polynomial::linear(1.0, 0.3),
            &Polynomial::linear(-tau, 1.0) * &Polynomial::linear(0.7, 0.2),
            t.breakpoints(),
        )
        .unwrap();
        assert_eq!((glue.z_beta, glue.root_indices.clone()), (1, vec![2]));
        let tilde = build_tilde_space(&t, &glue).unwrap();
        assert_eq!(tilde.functions.len(), dimension_for(&t, &glue).unwrap().dim_gamma0);
        let (idx, _) = tilde.appended[0];
        let h = 1e-10;
        let jump = |f: &SplineFunction1D, order: usize| {
            (f.eval_derivative(tau + h, order).unwrap() - f.eval_derivative(tau - h, order).unwrap()).abs()
        };
        assert!(tilde.functions[idx].eval(tau).unwrap() > 0.0);
        assert!(jump(&tilde.functions[idx], 2) > 1e-2);
        for f in &tilde.functions[..idx] {
            assert!(jump(f, 2) < 1e-4);
        }
        // companion makes α g̃₁ + β^(S) Ñ′ one order smoother at τ
        let companions = build_g1_companions(&tilde, &glue, &t).unwrap();
        let dn = derivative_coeffs(&tilde.functions[idx]).unwrap();
        for side in Side::BOTH {
            let f = |x: f64| {
                glue.alpha(side).eval(x) * companions[idx].eval_derivative(x, 1).unwrap()
                    + glue.alpha(side).derivative().eval(x) * companions[idx].eval(x).unwrap()
                    + glue.beta_side(side).eval(x) * dn.eval_derivative(x, 1).unwrap()
                    + glue.beta_side(side).derivative().eval(x) * dn.eval(x).unwrap()
            };
            assert!((f(tau + 1e-9) - f(tau - 1e-9)).abs() < 1e-6);
        }
        for (i, c) in companions.iter().enumerate() {
            assert_eq!(c.is_zero(), i != idx);
        }
    }

    #[test]
    fn constant_trace_gives_constant_rows() {
        let t = make_uniform_regular_knots(3, 1, 2, None).unwrap();
        let glue = example_gluing(2);
        let one = SplineFunction1D::new(t.clone(), vec![1.0; t.dim()]).unwrap();
        let zero = SplineFunction1D::zero(t.derivative_space().unwrap());
        let (l, r) = assemble_pair(&one, &zero, &glue, &t).unwrap();
        for grid in [&l, &r] {
            for j in 0..t.dim() {
                assert_abs_diff_eq!(grid.get(0, j), 1.0, epsilon = 1e-14);
                assert_abs_diff_eq!(grid.get(1, j), 1.0, epsilon = 1e-13);
                assert_eq!(grid.get(2, j), 0.0);
            }
        }
    }

    #[test]
    fn membership_violation_detected() {
        let t = make_uniform_regular_knots(3, 1, 2, None).unwrap();
        let glue = example_gluing(2);
        // a trace in S(T) that is only C¹ makes β^(S) g₀′ leave S(T)
        let g0 = SplineFunction1D::bspline(&t, 2);
        let zero = SplineFunction1D::zero(t.derivative_space().unwrap());
        assert!(matches!(assemble_pair(&g0, &zero, &glue, &t), Err(Error::MembershipViolation(_))));
    }

    #[test]
    fn example_basis_count() {
        for k in [0, 2] {
            let t = make_uniform_regular_knots(3, 1, k, None).unwrap();
            let basis = build_basis(&t, &example_gluing(k)).unwrap();
            assert_eq!(basis.len(), 23 + 26 * k + 8 * k * k);
            let traces = basis.functions.iter().filter(|f| matches!(f.kind, BasisKind::Trace(_))).count();
            let trans = basis.functions.iter().filter(|f| matches!(f.kind, BasisKind::Transversal(_))).count();
            assert_eq!((traces, trans), (4 + k, 3 + k));
            for f in &basis.functions {
                if matches!(f.kind, BasisKind::Trace(_) | BasisKind::Transversal(_)) {
                    for side in Side::BOTH {
                        assert!((2..t.dim()).all(|i| f.grid(side).row(i).iter().all(|&c| c == 0.0)));
                    }
                }
            }
        }
        assert_eq!(standard_c0_basis(&make_uniform_regular_knots(3, 1, 2, None).unwrap()).len(), 8 * 15);
    }
}
