//! Blossoms of univariate splines and the coefficient transformations built on
//! them: knot insertion, differentiation, multiplication and degree elevation.
//!
//! Every transformation goes through [`represent_in`], which evaluates the
//! blossom of a (composite) function at the knot windows of a target space.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::spline_core::{binomial, ControlValue, KnotVector, Polynomial, SplineFunction1D, TensorSplineFunction};

/// A piecewise polynomial that can evaluate the blossom of the polynomial
/// piece active at a given parameter.
pub trait Blossom {
    fn degree(&self) -> usize;

    /// Blossom of the piece containing `at`, with `args.len() == degree()`.
    fn blossom_at(&self, at: f64, args: &[f64]) -> f64;

    /// Interval of the polynomial piece containing `at`.
    fn piece(&self, _at: f64) -> (f64, f64) {
        (0.0, 1.0)
    }
}

impl Blossom for SplineFunction1D {
    fn degree(&self) -> usize {
        SplineFunction1D::degree(self)
    }

    fn blossom_at(&self, at: f64, args: &[f64]) -> f64 {
        let space = self.space();
        let p = space.degree();
        debug_assert_eq!(args.len(), p);
        let t = space.knots();
        let mu = space.span(at);
        let mut d: Vec<f64> = self.coefficients()[mu - p..=mu].to_vec();
        // d[j] holds the coefficient with global index mu - p + j
        for (m, &x) in args.iter().enumerate().map(|(m, x)| (m + 1, x)) {
            for j in (m..=p).rev() {
                let i = mu - p + j;
                let w = (x - t[i]) / (t[i + p + 1 - m] - t[i]);
                d[j] = (1.0 - w) * d[j - 1] + w * d[j];
            }
        }
        d[p]
    }

    fn piece(&self, at: f64) -> (f64, f64) {
        let mu = self.space().span(at);
        let t = self.space().knots();
        (t[mu], t[mu + 1])
    }
}

impl Blossom for Polynomial {
    fn degree(&self) -> usize {
        Polynomial::degree(self).unwrap_or(0)
    }

    fn blossom_at(&self, _at: f64, args: &[f64]) -> f64 {
        self.blossom(args)
    }
}

/// Calls `f` with every `size`-subset of `0..n`, given as a bitmask.
fn for_each_subset(n: usize, size: usize, mut f: impl FnMut(u32)) {
    assert!(n < 32);
    if size > n {
        return;
    }
    let mut mask: u32 = if size == 0 { 0 } else { (1u32 << size) - 1 };
    loop {
        f(mask);
        if size == 0 {
            return;
        }
        // Gosper's hack
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
        if mask >= 1u32 << n {
            return;
        }
    }
}

fn split_args(args: &[f64], mask: u32, inside: &mut Vec<f64>, outside: &mut Vec<f64>) {
    inside.clear();
    outside.clear();
    for (i, &x) in args.iter().enumerate() {
        if mask & (1 << i) != 0 {
            inside.push(x);
        } else {
            outside.push(x);
        }
    }
}

/// `inner` regarded as a function of higher degree.
pub struct Elevated<'a> {
    pub inner: &'a dyn Blossom,
    pub degree: usize,
}

impl Blossom for Elevated<'_> {
    fn degree(&self) -> usize {
        self.degree
    }

    fn blossom_at(&self, at: f64, args: &[f64]) -> f64 {
        let p = self.inner.degree();
        let q = args.len();
        if p == q {
            return self.inner.blossom_at(at, args);
        }
        let (mut inside, mut outside) = (Vec::with_capacity(p), Vec::with_capacity(q));
        let mut sum = 0.0;
        for_each_subset(q, p, |mask| {
            split_args(args, mask, &mut inside, &mut outside);
            sum += self.inner.blossom_at(at, &inside);
        });
        sum / binomial(q, p)
    }

    fn piece(&self, at: f64) -> (f64, f64) {
        self.inner.piece(at)
    }
}

fn intersect(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0.max(b.0), a.1.min(b.1))
}

/// Pointwise product of two functions.
pub struct Product<'a> {
    pub left: &'a dyn Blossom,
    pub right: &'a dyn Blossom,
}

impl Blossom for Product<'_> {
    fn degree(&self) -> usize {
        self.left.degree() + self.right.degree()
    }

    fn blossom_at(&self, at: f64, args: &[f64]) -> f64 {
        let (p, q) = (self.left.degree(), args.len());
        let (mut inside, mut outside) = (Vec::with_capacity(p), Vec::with_capacity(q));
        let mut sum = 0.0;
        for_each_subset(q, p, |mask| {
            split_args(args, mask, &mut inside, &mut outside);
            sum += self.left.blossom_at(at, &inside) * self.right.blossom_at(at, &outside);
        });
        sum / binomial(q, p)
    }

    fn piece(&self, at: f64) -> (f64, f64) {
        intersect(self.left.piece(at), self.right.piece(at))
    }
}

/// First derivative of a function of degree at least one.
pub struct Derivative<'a> {
    pub inner: &'a dyn Blossom,
}

impl Blossom for Derivative<'_> {
    fn degree(&self) -> usize {
        self.inner.degree().saturating_sub(1)
    }

    fn blossom_at(&self, at: f64, args: &[f64]) -> f64 {
        let p = self.inner.degree();
        if p == 0 {
            return 0.0;
        }
        let (a, b) = self.inner.piece(at);
        let mut full = Vec::with_capacity(p);
        full.extend_from_slice(args);
        full.push(b);
        let hb = self.inner.blossom_at(at, &full);
        full[p - 1] = a;
        let ha = self.inner.blossom_at(at, &full);
        p as f64 * (hb - ha) / (b - a)
    }

    fn piece(&self, at: f64) -> (f64, f64) {
        self.inner.piece(at)
    }
}

/// `Σ w_k f_k`, with every term elevated to the largest degree.
pub struct LinearCombination<'a> {
    pub terms: Vec<(f64, &'a dyn Blossom)>,
}

impl Blossom for LinearCombination<'_> {
    fn degree(&self) -> usize {
        self.terms.iter().map(|(_, f)| f.degree()).max().unwrap_or(0)
    }

    fn blossom_at(&self, at: f64, args: &[f64]) -> f64 {
        let q = args.len();
        self.terms
            .iter()
            .map(|&(w, f)| w * Elevated { inner: f, degree: q }.blossom_at(at, args))
            .sum()
    }

    fn piece(&self, at: f64) -> (f64, f64) {
        self.terms.iter().fold((0.0, 1.0), |acc, (_, f)| intersect(acc, f.piece(at)))
    }
}

/// Coefficients of `f` in `target` through the dual functionals
/// `d_i = F(t_{i+1}, …, t_{i+p})`.
///
/// Exact whenever `f` belongs to `S(target)`; otherwise the result is the
/// quasi-interpolant defined by the same functionals.
pub fn represent_in(f: &dyn Blossom, target: &KnotVector) -> Result<SplineFunction1D> {
    let p = target.degree();
    if f.degree() > p {
        return Err(Error::IncompatibleSpaces(format!(
            "cannot represent a degree {} function in a degree {p} space",
            f.degree()
        )));
    }
    let elevated = Elevated { inner: f, degree: p };
    let t = target.knots();
    let coefficients = (0..target.dim())
        .map(|i| elevated.blossom_at(target.support_point(i), &t[i + 1..=i + p]))
        .collect();
    SplineFunction1D::new(target.clone(), coefficients)
}

/// Blossom `H(args)` of `h`, evaluated on the piece of the smallest argument.
pub fn blossom_eval(h: &SplineFunction1D, args: &[f64]) -> Result<f64> {
    let p = h.degree();
    if args.len() != p {
        return Err(Error::Arity { expected: p, got: args.len() });
    }
    if let Some(&x) = args.iter().find(|x| !(0.0..=1.0).contains(*x)) {
        return Err(Error::OutOfDomain(x));
    }
    let mut sorted = args.to_vec();
    sorted.sort_by(f64::total_cmp);
    let at = sorted.first().copied().unwrap_or(0.0);
    Ok(h.blossom_at(at, &sorted))
}

/// Coefficients of `h` in the refined space `target`.
pub fn knot_insertion_coeffs(h: &SplineFunction1D, target: &KnotVector) -> Result<SplineFunction1D> {
    if !target.is_refinement_of(h.space()) {
        return Err(Error::NotRefinement);
    }
    represent_in(h, target)
}

/// Coefficients of `h′` in the derivative space of `h` (degree `p - 1`).
pub fn derivative_coeffs(h: &SplineFunction1D) -> Result<SplineFunction1D> {
    let target = h.space().derivative_space()?;
    represent_in(&Derivative { inner: h }, &target)
}

/// Space containing the product of functions from `a` and `b`, which must
/// share their breakpoints.
pub fn product_space(a: &KnotVector, b: &KnotVector) -> Result<KnotVector> {
    if !a.same_breakpoints(b) {
        return Err(Error::MismatchedBreakpoints);
    }
    let degree = a.degree() + b.degree();
    let mult = (0..a.num_breakpoints())
        .map(|i| {
            let rho = a.regularity_at(i).min(b.regularity_at(i));
            (degree as isize - rho) as usize
        })
        .collect();
    KnotVector::new(degree, a.breakpoints().to_vec(), mult)
}

/// Coefficients of the product `h·h₁` in the space of [`product_space`].
///
/// The two factors are put in a canonical order first, so the result does
/// not depend on the argument order.
pub fn product_coeffs(h: &SplineFunction1D, h1: &SplineFunction1D) -> Result<SplineFunction1D> {
    let target = product_space(h.space(), h1.space())?;
    let key = |f: &SplineFunction1D| (f.degree(), f.coefficients().to_vec());
    let (a, b) = if key(h).partial_cmp(&key(h1)) == Some(std::cmp::Ordering::Greater) { (h1, h) } else { (h, h1) };
    represent_in(&Product { left: a, right: b }, &target)
}

/// Matrix `M` with `M[(i, j)]` the coefficient of source B-spline `j` with
/// respect to target B-spline `i`. Requires `target` to refine `source`.
pub fn insertion_matrix(source: &KnotVector, target: &KnotVector) -> Result<DMatrix<f64>> {
    if !target.is_refinement_of(source) {
        return Err(Error::NotRefinement);
    }
    let mut m = DMatrix::zeros(target.dim(), source.dim());
    for j in 0..source.dim() {
        let g = represent_in(&SplineFunction1D::bspline(source, j), target)?;
        for (i, &c) in g.coefficients().iter().enumerate() {
            m[(i, j)] = c;
        }
    }
    Ok(m)
}

/// Knot insertion in both directions of a tensor-product spline.
pub fn refine_tensor<V: ControlValue>(
    f: &TensorSplineFunction<V>,
    target_u: &KnotVector,
    target_v: &KnotVector,
) -> Result<TensorSplineFunction<V>> {
    let mu = insertion_matrix(f.space_u(), target_u)?;
    let mv = insertion_matrix(f.space_v(), target_v)?;
    let (nu, nv) = (f.n_u(), f.n_v());
    // first along v, then along u
    let mut partial = vec![V::zero(); nu * target_v.dim()];
    for i in 0..nu {
        for b in 0..target_v.dim() {
            let mut acc = V::zero();
            for j in 0..nv {
                let w = mv[(b, j)];
                if w != 0.0 {
                    acc = acc + f.get(i, j) * w;
                }
            }
            partial[i * target_v.dim() + b] = acc;
        }
    }
    let nvt = target_v.dim();
    Ok(TensorSplineFunction::from_fn(target_u.clone(), target_v.clone(), |a, b| {
        let mut acc = V::zero();
        for i in 0..nu {
            let w = mu[(a, i)];
            if w != 0.0 {
                acc = acc + partial[i * nvt + b] * w;
            }
        }
        acc
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spline_core::make_uniform_regular_knots;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    fn random_spline(space: &KnotVector, rng: &mut StdRng) -> SplineFunction1D {
        let c = (0..space.dim()).map(|_| rng.random_range(-1.0..1.0)).collect();
        SplineFunction1D::new(space.clone(), c).unwrap()
    }

    fn test_spaces() -> Vec<KnotVector> {
        let mut v = vec![KnotVector::bezier(1), KnotVector::bezier(3)];
        for (p, r, k) in [(3, 1, 2), (3, 1, 3), (4, 2, 2), (5, 3, 4), (4, 1, 1)] {
            v.push(make_uniform_regular_knots(p, r, k, None).unwrap());
        }
        v.push(KnotVector::with_regularity(3, 2, vec![0.2, 0.45, 0.9]).unwrap());
        v.push(KnotVector::new(4, vec![0.3, 0.6], vec![1, 3]).unwrap());
        v
    }

    #[test]
    fn dual_property_on_all_spaces() {
        let mut rng = StdRng::seed_from_u64(11);
        for space in test_spaces() {
            let h = random_spline(&space, &mut rng);
            let p = space.degree();
            for i in 0..space.dim() {
                let window = &space.knots()[i + 1..=i + p];
                assert_abs_diff_eq!(blossom_eval(&h, window).unwrap(), h.coefficients()[i], epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn diagonal_reproduces_values() {
        let mut rng = StdRng::seed_from_u64(3);
        let space = make_uniform_regular_knots(4, 2, 3, None).unwrap();
        let h = random_spline(&space, &mut rng);
        for _ in 0..100 {
            let t: f64 = rng.random_range(0.0..=1.0);
            let args = vec![t; 4];
            assert_abs_diff_eq!(blossom_eval(&h, &args).unwrap(), h.eval(t).unwrap(), epsilon = 1e-13);
        }
    }

    #[test]
    fn arity_and_domain_errors() {
        let h = SplineFunction1D::zero(KnotVector::bezier(3));
        assert_eq!(blossom_eval(&h, &[0.1, 0.2]), Err(Error::Arity { expected: 3, got: 2 }));
        assert!(matches!(blossom_eval(&h, &[0.1, 0.2, 1.5]), Err(Error::OutOfDomain(_))));
    }

    #[test]
    fn shuffled_arguments_agree() {
        let mut rng = StdRng::seed_from_u64(5);
        let space = make_uniform_regular_knots(3, 1, 2, None).unwrap();
        let h = random_spline(&space, &mut rng);
        let args = [0.4, 0.1, 0.55];
        let base = blossom_eval(&h, &args).unwrap();
        for perm in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let shuffled: Vec<f64> = perm.iter().map(|&i| args[i]).collect();
            assert_eq!(blossom_eval(&h, &shuffled).unwrap(), base);
        }
        // symmetry of the raw recursion, without the sort
        let raw = h.blossom_at(0.1, &[0.55, 0.1, 0.4]);
        assert_abs_diff_eq!(raw, h.blossom_at(0.1, &[0.1, 0.4, 0.55]), epsilon = 1e-14);
    }

    #[test]
    fn knot_insertion_preserves_values() {
        let mut rng = StdRng::seed_from_u64(8);
        let coarse = KnotVector::with_regularity(3, 2, vec![0.5]).unwrap();
        let fine = KnotVector::with_regularity(3, 1, coarse.breakpoints().to_vec()).unwrap();
        let h = random_spline(&coarse, &mut rng);
        let g = knot_insertion_coeffs(&h, &fine).unwrap();
        assert_eq!(g.coefficients().len(), h.coefficients().len() + 1);
        for s in 0..=200 {
            let t = s as f64 / 200.0;
            assert_abs_diff_eq!(g.eval(t).unwrap(), h.eval(t).unwrap(), epsilon = 1e-12);
        }
        let same = knot_insertion_coeffs(&h, &coarse).unwrap();
        for (a, b) in same.coefficients().iter().zip(h.coefficients()) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-14);
        }
        let t = make_uniform_regular_knots(4, 2, 3, None).unwrap();
        let t1 = t.insert_breakpoint(2).unwrap();
        let h = random_spline(&t, &mut rng);
        let g = knot_insertion_coeffs(&h, &t1).unwrap();
        for _ in 0..200 {
            let x: f64 = rng.random_range(0.0..=1.0);
            assert_abs_diff_eq!(g.eval(x).unwrap(), h.eval(x).unwrap(), epsilon = 1e-12);
        }
        assert_eq!(knot_insertion_coeffs(&h, &coarse), Err(Error::NotRefinement));
    }

    #[test]
    fn derivative_examples() {
        let lin = SplineFunction1D::new(KnotVector::bezier(1), vec![0.0, 1.0]).unwrap();
        let d = derivative_coeffs(&lin).unwrap();
        assert_eq!(d.degree(), 0);
        assert_abs_diff_eq!(d.coefficients()[0], 1.0, epsilon = 1e-15);

        for k in [0usize, 2, 3] {
            let t = make_uniform_regular_knots(3, 1, k, None).unwrap();
            let d = derivative_coeffs(&SplineFunction1D::bspline(&t, 1)).unwrap();
            assert_abs_diff_eq!(d.eval(0.0).unwrap(), 3.0 * (k + 1) as f64, epsilon = 1e-12);
        }

        let mut rng = StdRng::seed_from_u64(4);
        let t = make_uniform_regular_knots(4, 2, 2, None).unwrap();
        let h = random_spline(&t, &mut rng);
        let d = derivative_coeffs(&h).unwrap();
        // composite Simpson on each element
        let mut integral = 0.0;
        for (a, b) in t.elements() {
            let m = 64;
            let hstep = (b - a) / m as f64;
            for s in 0..=m {
                let w = if s == 0 || s == m { 1.0 } else if s % 2 == 1 { 4.0 } else { 2.0 };
                let x: f64 = a + s as f64 * hstep;
                integral += w * hstep / 3.0 * d.eval(x.min(b - 1e-15).max(a)).unwrap();
            }
        }
        assert_abs_diff_eq!(integral, h.eval(1.0).unwrap() - h.eval(0.0).unwrap(), epsilon = 1e-9);
        assert_eq!(derivative_coeffs(&SplineFunction1D::zero(KnotVector::bezier(0))), Err(Error::DegreeZero));
    }

    #[test]
    fn product_examples() {
        let a = SplineFunction1D::new(KnotVector::bezier(1), vec![1.0, 0.0]).unwrap();
        let b = SplineFunction1D::new(KnotVector::bezier(1), vec![0.0, 1.0]).unwrap();
        let c = product_coeffs(&a, &b).unwrap();
        assert_eq!(c.degree(), 2);
        for (x, y) in c.coefficients().iter().zip([0.0, 0.5, 0.0]) {
            assert_abs_diff_eq!(*x, y, epsilon = 1e-15);
        }
        for s in 0..=20 {
            let t = s as f64 / 20.0;
            assert_abs_diff_eq!(c.eval(t).unwrap(), t - t * t, epsilon = 1e-15);
        }

        let mut rng = StdRng::seed_from_u64(9);
        let s3 = make_uniform_regular_knots(3, 1, 2, None).unwrap();
        let s2 = KnotVector::with_regularity(2, 0, s3.breakpoints().to_vec()).unwrap();
        let h = random_spline(&s3, &mut rng);
        let h1 = random_spline(&s2, &mut rng);
        let prod = product_coeffs(&h, &h1).unwrap();
        assert_eq!(prod.degree(), 5);
        assert_eq!(prod.space().regularity_at(0), 0);
        for _ in 0..500 {
            let t: f64 = rng.random_range(0.0..=1.0);
            assert_abs_diff_eq!(prod.eval(t).unwrap(), h.eval(t).unwrap() * h1.eval(t).unwrap(), epsilon = 1e-10);
        }
        assert_eq!(product_coeffs(&h1, &h).unwrap(), prod);

        // multiplication by one is degree elevation
        let one = SplineFunction1D::new(s2.clone(), vec![1.0; s2.dim()]).unwrap();
        let elevated = product_coeffs(&h, &one).unwrap();
        let direct = represent_in(&Elevated { inner: &h, degree: 5 }, elevated.space()).unwrap();
        for (x, y) in elevated.coefficients().iter().zip(direct.coefficients()) {
            assert_abs_diff_eq!(*x, *y, epsilon = 1e-13);
        }

        let other = SplineFunction1D::zero(make_uniform_regular_knots(3, 1, 3, None).unwrap());
        assert_eq!(product_coeffs(&h, &other), Err(Error::MismatchedBreakpoints));
    }

    #[test]
    fn tensor_refinement_preserves_surface() {
        let mut rng = StdRng::seed_from_u64(12);
        let coarse = KnotVector::bezier(3);
        let fine = make_uniform_regular_knots(3, 1, 2, None).unwrap();
        let f = TensorSplineFunction::from_fn(coarse.clone(), coarse.clone(), |_, _| rng.random_range(-1.0..1.0));
        let g = refine_tensor(&f, &fine, &fine).unwrap();
        for _ in 0..50 {
            let (u, v): (f64, f64) = (rng.random_range(0.0..=1.0), rng.random_range(0.0..=1.0));
            assert_abs_diff_eq!(g.eval(u, v, 0, 0).unwrap(), f.eval(u, v, 0, 0).unwrap(), epsilon = 1e-12);
        }
    }

    fn arb_space() -> impl Strategy<Value = KnotVector> {
        (3usize..=5, 0usize..=3).prop_flat_map(|(p, k)| {
            (1isize..=(p as isize - 2)).prop_map(move |r| make_uniform_regular_knots(p, r, k, None).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn multi_affine(space in arb_space(), seed in 0u64..1000, lam in 0.0f64..1.0, slot in 0usize..5) {
            let mut rng = StdRng::seed_from_u64(seed);
            let h = random_spline(&space, &mut rng);
            let p = space.degree();
            let slot = slot % p;
            let (lo, hi) = space.elements()[rng.random_range(0..space.elements().len())];
            let at = 0.5 * (lo + hi);
            let mut args: Vec<f64> = (0..p).map(|_| rng.random_range(0.0..=1.0)).collect();
            let (a, b): (f64, f64) = (rng.random_range(-0.5..1.5), rng.random_range(-0.5..1.5));
            args[slot] = lam * a + (1.0 - lam) * b;
            let mixed = h.blossom_at(at, &args);
            args[slot] = a;
            let ha = h.blossom_at(at, &args);
            args[slot] = b;
            let hb = h.blossom_at(at, &args);
            prop_assert!((mixed - (lam * ha + (1.0 - lam) * hb)).abs() < 1e-10);
        }

        #[test]
        fn product_is_symmetric(a in arb_space(), seed in 0u64..1000) {
            let mut rng = StdRng::seed_from_u64(seed);
            let b = KnotVector::with_regularity(2, 0, a.breakpoints().to_vec()).unwrap();
            let (f, g) = (random_spline(&a, &mut rng), random_spline(&b, &mut rng));
            prop_assert_eq!(product_coeffs(&f, &g).unwrap(), product_coeffs(&g, &f).unwrap());
        }

        #[test]
        fn derivative_commutes_with_insertion(space in arb_space(), seed in 0u64..1000) {
            prop_assume!(space.num_breakpoints() > 0);
            let mut rng = StdRng::seed_from_u64(seed);
            let h = random_spline(&space, &mut rng);
            let ell = rng.random_range(1..=space.num_breakpoints());
            let fine = space.insert_breakpoint(ell).unwrap();
            let a = derivative_coeffs(&knot_insertion_coeffs(&h, &fine).unwrap()).unwrap();
            let b = knot_insertion_coeffs(&derivative_coeffs(&h).unwrap(), &fine.derivative_space().unwrap()).unwrap();
            for s in 0..=50 {
                let t = s as f64 / 50.0;
                prop_assert!((a.eval(t).unwrap() - b.eval(t).unwrap()).abs() < 1e-10);
                prop_assert!((a.eval(t).unwrap() - h.eval_derivative(t, 1).unwrap()).abs() < 1e-10);
            }
        }
    }
}
