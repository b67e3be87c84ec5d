use crate::error::{Error, Result};

/// Tolerance used when matching breakpoints of two knot vectors.
pub const BREAKPOINT_TOL: f64 = 1e-13;

/// Open knot vector on `[0, 1]`.
///
/// Stored as (breakpoints, multiplicities); the boundary knots 0 and 1 always
/// carry multiplicity `degree + 1`. The flat knot sequence is derived once at
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct KnotVector {
    degree: usize,
    breakpoints: Vec<f64>,
    multiplicities: Vec<usize>,
    knots: Vec<f64>,
}

/// Uniform inner breakpoints `τ_i = i / (k + 1)`, `i = 1..=k`.
pub fn uniform_breakpoints(k: usize) -> Vec<f64> {
    (1..=k).map(|i| i as f64 / (k + 1) as f64).collect()
}

/// Knot vector of `S(T^{p,r}_k)`: all inner multiplicities equal `p - r`.
///
/// Only the regularities `1 <= r <= p - 2` used by the C¹ construction are
/// accepted; see [`KnotVector::with_regularity`] for the general case.
pub fn make_uniform_regular_knots(
    degree: usize,
    regularity: isize,
    k: usize,
    breakpoints: Option<&[f64]>,
) -> Result<KnotVector> {
    if regularity < 1 || regularity > degree as isize - 2 {
        return Err(Error::InvalidRegularity { degree, regularity });
    }
    let breakpoints = match breakpoints {
        Some(b) => {
            if b.len() != k {
                return Err(Error::InvalidBreakpoints(format!(
                    "expected {k} breakpoints, got {}",
                    b.len()
                )));
            }
            b.to_vec()
        }
        None => uniform_breakpoints(k),
    };
    KnotVector::with_regularity(degree, regularity, breakpoints)
}

impl KnotVector {
    pub fn new(degree: usize, breakpoints: Vec<f64>, multiplicities: Vec<usize>) -> Result<Self> {
        if breakpoints.len() != multiplicities.len() {
            return Err(Error::InvalidBreakpoints(format!(
                "{} breakpoints but {} multiplicities",
                breakpoints.len(),
                multiplicities.len()
            )));
        }
        let mut prev = 0.0;
        for &b in &breakpoints {
            if !b.is_finite() || b <= prev || b >= 1.0 {
                return Err(Error::InvalidBreakpoints(format!(
                    "breakpoints must be strictly increasing in (0, 1), found {b} after {prev}"
                )));
            }
            prev = b;
        }
        for &m in &multiplicities {
            if m == 0 || m > degree + 1 {
                return Err(Error::InvalidMultiplicity { multiplicity: m, degree });
            }
        }
        let mut knots = vec![0.0; degree + 1];
        for (&b, &m) in breakpoints.iter().zip(&multiplicities) {
            knots.extend(std::iter::repeat_n(b, m));
        }
        knots.extend(std::iter::repeat_n(1.0, degree + 1));
        Ok(Self { degree, breakpoints, multiplicities, knots })
    }

    /// Knot vector with every inner multiplicity equal to `degree - regularity`.
    /// Accepts `-1 <= regularity < degree`.
    pub fn with_regularity(degree: usize, regularity: isize, breakpoints: Vec<f64>) -> Result<Self> {
        let m = degree as isize - regularity;
        if m < 1 || m > degree as isize + 1 {
            return Err(Error::InvalidMultiplicity {
                multiplicity: m.max(0) as usize,
                degree,
            });
        }
        let mult = vec![m as usize; breakpoints.len()];
        Self::new(degree, breakpoints, mult)
    }

    /// Bézier knot vector of degree `p` (no inner knots).
    pub fn bezier(degree: usize) -> Self {
        Self::new(degree, Vec::new(), Vec::new()).expect("bezier knots are valid")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Flat knot sequence `t_0, …, t_{n+p}`.
    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    /// Number of inner breakpoints `k`.
    pub fn num_breakpoints(&self) -> usize {
        self.breakpoints.len()
    }

    /// Dimension `n` of the spline space.
    pub fn dim(&self) -> usize {
        self.knots.len() - self.degree - 1
    }

    /// Regularity `p - m` at breakpoint `index` (0-based).
    pub fn regularity_at(&self, index: usize) -> isize {
        self.degree as isize - self.multiplicities[index] as isize
    }

    /// Common regularity when all inner multiplicities agree.
    pub fn uniform_regularity(&self) -> Option<isize> {
        let first = self.multiplicities.first()?;
        self.multiplicities
            .iter()
            .all(|m| m == first)
            .then(|| self.degree as isize - *first as isize)
    }

    /// Raise the multiplicity of breakpoint `ell` (1-based, as `τ_ℓ`) by one.
    pub fn insert_breakpoint(&self, ell: usize) -> Result<Self> {
        let count = self.breakpoints.len();
        if ell == 0 || ell > count {
            return Err(Error::BreakpointIndex { index: ell, count });
        }
        let mut mult = self.multiplicities.clone();
        mult[ell - 1] += 1;
        if mult[ell - 1] > self.degree {
            return Err(Error::MultiplicityOverflow {
                index: ell,
                multiplicity: mult[ell - 1],
                degree: self.degree,
            });
        }
        Self::new(self.degree, self.breakpoints.clone(), mult)
    }

    /// Knot vector of the derivative space: degree `p - 1`, same multiplicities.
    pub fn derivative_space(&self) -> Result<Self> {
        if self.degree == 0 {
            return Err(Error::DegreeZero);
        }
        Self::new(self.degree - 1, self.breakpoints.clone(), self.multiplicities.clone())
    }

    /// Degree and all inner multiplicities raised by `by`; regularity is kept.
    pub fn elevated(&self, by: usize) -> Self {
        let mult = self.multiplicities.iter().map(|m| m + by).collect();
        Self::new(self.degree + by, self.breakpoints.clone(), mult).expect("elevation keeps validity")
    }

    /// Degree and all inner multiplicities lowered by one; regularity is kept.
    pub fn lowered(&self) -> Result<Self> {
        if self.degree == 0 {
            return Err(Error::DegreeZero);
        }
        if self.multiplicities.iter().any(|&m| m < 2) {
            return Err(Error::IncompatibleSpaces(
                "cannot lower a space with simple inner knots".into(),
            ));
        }
        let mult = self.multiplicities.iter().map(|m| m - 1).collect();
        Self::new(self.degree - 1, self.breakpoints.clone(), mult)
    }

    pub fn same_breakpoints(&self, other: &KnotVector) -> bool {
        self.breakpoints.len() == other.breakpoints.len()
            && self
                .breakpoints
                .iter()
                .zip(&other.breakpoints)
                .all(|(a, b)| (a - b).abs() <= BREAKPOINT_TOL)
    }

    /// Index of `value` among the breakpoints, if present.
    pub fn breakpoint_index(&self, value: f64) -> Option<usize> {
        self.breakpoints.iter().position(|b| (b - value).abs() <= BREAKPOINT_TOL)
    }

    /// Whether `self` is obtained from `coarse` by knot insertion only.
    pub fn is_refinement_of(&self, coarse: &KnotVector) -> bool {
        if self.degree != coarse.degree {
            return false;
        }
        coarse
            .breakpoints
            .iter()
            .zip(&coarse.multiplicities)
            .all(|(&b, &m)| match self.breakpoint_index(b) {
                Some(i) => self.multiplicities[i] >= m,
                None => false,
            })
    }

    /// Smallest common refinement of two knot vectors of equal degree.
    pub fn union(&self, other: &KnotVector) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::IncompatibleSpaces("degrees differ".into()));
        }
        let mut pairs: Vec<(f64, usize)> =
            self.breakpoints.iter().copied().zip(self.multiplicities.iter().copied()).collect();
        for (&b, &m) in other.breakpoints.iter().zip(&other.multiplicities) {
            match pairs.iter_mut().find(|(x, _)| (x - b).abs() <= BREAKPOINT_TOL) {
                Some(entry) => entry.1 = entry.1.max(m),
                None => pairs.push((b, m)),
            }
        }
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let (b, m) = pairs.into_iter().unzip();
        Self::new(self.degree, b, m)
    }

    /// Knot span index `μ` with `t_μ <= t < t_{μ+1}`; at `t = 1` the last
    /// non-empty span is returned (left limit).
    pub fn span(&self, t: f64) -> usize {
        let p = self.degree;
        let n = self.dim();
        if t >= self.knots[n] {
            return n - 1;
        }
        if t <= self.knots[p] {
            return p;
        }
        // upper bound: first index with knot > t, minus one
        let idx = self.knots[..=n].partition_point(|&k| k <= t);
        idx - 1
    }

    /// Non-empty knot intervals (Bézier elements).
    pub fn elements(&self) -> Vec<(f64, f64)> {
        let mut pts = vec![0.0];
        pts.extend_from_slice(&self.breakpoints);
        pts.push(1.0);
        pts.windows(2).map(|w| (w[0], w[1])).collect()
    }

    /// A point inside the first non-empty interval of the support of `N_i`.
    pub fn support_point(&self, i: usize) -> f64 {
        let p = self.degree;
        let t = &self.knots;
        for mu in i..=i + p {
            if t[mu + 1] > t[mu] {
                return 0.5 * (t[mu] + t[mu + 1]);
            }
        }
        unreachable!("every B-spline of an open knot vector has non-empty support")
    }

    /// Greville abscissae `ξ_i = (t_{i+1} + … + t_{i+p}) / p`.
    pub fn greville(&self) -> Vec<f64> {
        let p = self.degree;
        let t = &self.knots;
        (0..self.dim())
            .map(|i| {
                if p == 0 {
                    0.5 * (t[i] + t[i + 1])
                } else {
                    t[i + 1..=i + p].iter().sum::<f64>() / p as f64
                }
            })
            .collect()
    }

    fn check_domain(t: f64) -> Result<()> {
        if (0.0..=1.0).contains(&t) {
            Ok(())
        } else {
            Err(Error::OutOfDomain(t))
        }
    }

    /// Non-zero B-spline values at `t` as `(index, value)` pairs.
    pub fn eval_basis(&self, t: f64) -> Result<Vec<(usize, f64)>> {
        Self::check_domain(t)?;
        let span = self.span(t);
        let values = self.basis_funs(span, t);
        let first = span - self.degree;
        Ok(values.into_iter().enumerate().map(|(i, v)| (first + i, v)).collect())
    }

    /// Derivatives of the given order of all B-splines active at `t`.
    pub fn eval_derivative_basis(&self, t: f64, order: usize) -> Result<Vec<(usize, f64)>> {
        Self::check_domain(t)?;
        if order == 0 {
            return Err(Error::InvalidParameters("derivative order must be >= 1".into()));
        }
        let span = self.span(t);
        let ders = self.ders_basis_funs(span, t, order);
        let first = span - self.degree;
        Ok(ders[order].iter().enumerate().map(|(i, &v)| (first + i, v)).collect())
    }

    /// Values of `N_{span-p}, …, N_{span}` at `t` (Cox–de Boor triangle).
    pub(crate) fn basis_funs(&self, span: usize, t: f64) -> Vec<f64> {
        let p = self.degree;
        let u = &self.knots;
        let mut n = vec![0.0; p + 1];
        let mut left = vec![0.0; p + 1];
        let mut right = vec![0.0; p + 1];
        n[0] = 1.0;
        for j in 1..=p {
            left[j] = t - u[span + 1 - j];
            right[j] = u[span + j] - t;
            let mut saved = 0.0;
            for r in 0..j {
                let temp = n[r] / (right[r + 1] + left[j - r]);
                n[r] = saved + right[r + 1] * temp;
                saved = left[j - r] * temp;
            }
            n[j] = saved;
        }
        n
    }

    /// Rows `0..=order` of derivatives of `N_{span-p}, …, N_{span}` at `t`.
    pub(crate) fn ders_basis_funs(&self, span: usize, t: f64, order: usize) -> Vec<Vec<f64>> {
        let p = self.degree;
        let u = &self.knots;
        let mut ders = vec![vec![0.0; p + 1]; order + 1];
        let mut ndu = vec![vec![0.0; p + 1]; p + 1];
        let mut left = vec![0.0; p + 1];
        let mut right = vec![0.0; p + 1];
        ndu[0][0] = 1.0;
        for j in 1..=p {
            left[j] = t - u[span + 1 - j];
            right[j] = u[span + j] - t;
            let mut saved = 0.0;
            for r in 0..j {
                ndu[j][r] = right[r + 1] + left[j - r];
                let temp = ndu[r][j - 1] / ndu[j][r];
                ndu[r][j] = saved + right[r + 1] * temp;
                saved = left[j - r] * temp;
            }
            ndu[j][j] = saved;
        }
        for j in 0..=p {
            ders[0][j] = ndu[j][p];
        }
        let top = order.min(p);
        let mut a = vec![vec![0.0; p + 1]; 2];
        for r in 0..=p {
            let (mut s1, mut s2) = (0usize, 1usize);
            a[0][0] = 1.0;
            for k in 1..=top {
                let mut d = 0.0;
                let rk = r as isize - k as isize;
                let pk = p as isize - k as isize;
                if rk >= 0 {
                    a[s2][0] = a[s1][0] / ndu[(pk + 1) as usize][rk as usize];
                    d = a[s2][0] * ndu[rk as usize][pk as usize];
                }
                let j1 = if rk >= -1 { 1 } else { (-rk) as usize };
                let j2 = if r as isize - 1 <= pk { k - 1 } else { p - r };
                for j in j1..=j2 {
                    let idx = (rk + j as isize) as usize;
                    a[s2][j] = (a[s1][j] - a[s1][j - 1]) / ndu[(pk + 1) as usize][idx];
                    d += a[s2][j] * ndu[idx][pk as usize];
                }
                if r as isize <= pk {
                    a[s2][k] = -a[s1][k - 1] / ndu[(pk + 1) as usize][r];
                    d += a[s2][k] * ndu[r][pk as usize];
                }
                ders[k][r] = d;
                std::mem::swap(&mut s1, &mut s2);
            }
        }
        let mut factor = p as f64;
        for (k, row) in ders.iter_mut().enumerate().take(top + 1).skip(1) {
            for v in row.iter_mut() {
                *v *= factor;
            }
            factor *= (p - k) as f64;
        }
        ders
    }
}
