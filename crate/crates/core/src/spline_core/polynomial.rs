use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Polynomial in the monomial basis, `c_0 + c_1 t + c_2 t² + …`.
///
/// Trailing zero coefficients are trimmed, so the stored length is
/// `degree + 1`; the zero polynomial stores no coefficients.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polynomial {
    coefficients: Vec<f64>,
}

impl Polynomial {
    pub fn new(mut coefficients: Vec<f64>) -> Self {
        while coefficients.last() == Some(&0.0) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    pub fn linear(c0: f64, c1: f64) -> Self {
        Self::new(vec![c0, c1])
    }

    /// Linear polynomial from its Bézier form `w_0 (1 - t) + w_1 t`.
    pub fn from_bezier_linear(w0: f64, w1: f64) -> Self {
        Self::linear(w0, w1 - w0)
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> f64 {
        self.coefficients.get(i).copied().unwrap_or(0.0)
    }

    /// Actual degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Zero every coefficient below `rel_tol` times the largest one.
    pub fn trimmed(&self, rel_tol: f64) -> Self {
        let scale = self.max_abs_coefficient();
        Self::new(
            self.coefficients
                .iter()
                .map(|&c| if c.abs() <= rel_tol * scale { 0.0 } else { c })
                .collect(),
        )
    }

    pub fn max_abs_coefficient(&self) -> f64 {
        self.coefficients.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn norm(&self) -> f64 {
        self.coefficients.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.coefficients.iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coefficients
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| i as f64 * c)
                .collect(),
        )
    }

    pub fn scaled(&self, w: f64) -> Self {
        Self::new(self.coefficients.iter().map(|c| w * c).collect())
    }

    /// Bézier coefficients `(p(0), p(1))` of a polynomial of degree at most one.
    pub fn bezier_linear(&self) -> Option<(f64, f64)> {
        (self.coefficients.len() <= 2).then(|| (self.eval(0.0), self.eval(1.0)))
    }

    /// Synthetic division by `(t - root)`: returns `(quotient, remainder)`.
    pub fn divide_by_root(&self, root: f64) -> (Self, f64) {
        if self.coefficients.is_empty() {
            return (Self::zero(), 0.0);
        }
        let n = self.coefficients.len();
        let mut quotient = vec![0.0; n - 1];
        let mut carry = 0.0;
        for i in (0..n).rev() {
            let value = self.coefficients[i] + carry * root;
            if i == 0 {
                return (Self::new(quotient), value);
            }
            quotient[i - 1] = value;
            carry = value;
        }
        unreachable!()
    }

    /// Real roots of a polynomial of degree at most two, ascending.
    pub fn real_roots(&self) -> Vec<f64> {
        match self.coefficients.len() {
            0 | 1 => Vec::new(),
            2 => vec![-self.coefficients[0] / self.coefficients[1]],
            3 => {
                let (c, b, a) = (self.coefficients[0], self.coefficients[1], self.coefficients[2]);
                let disc = b * b - 4.0 * a * c;
                if disc < 0.0 {
                    return Vec::new();
                }
                let sign = if b >= 0.0 { 1.0 } else { -1.0 };
                let q = -0.5 * (b + sign * disc.sqrt());
                let mut roots = if q == 0.0 { vec![0.0, 0.0] } else { vec![q / a, c / q] };
                roots.sort_by(f64::total_cmp);
                roots
            }
            _ => panic!("real_roots supports degree <= 2"),
        }
    }

    /// `∫_0^1 p(t)² dt`.
    pub fn l2_norm_squared(&self) -> f64 {
        let c = &self.coefficients;
        let mut s = 0.0;
        for (i, a) in c.iter().enumerate() {
            for (j, b) in c.iter().enumerate() {
                s += a * b / (i + j + 1) as f64;
            }
        }
        s
    }

    /// Blossom of the polynomial regarded as degree `args.len()`:
    /// `Σ_j c_j e_j(args) / C(q, j)` with `e_j` the elementary symmetric sums.
    pub fn blossom(&self, args: &[f64]) -> f64 {
        let q = args.len();
        assert!(self.coefficients.len() <= q + 1, "blossom arity below polynomial degree");
        // e[j] = elementary symmetric polynomial of degree j
        let mut e = vec![0.0; q + 1];
        e[0] = 1.0;
        for (m, &x) in args.iter().enumerate() {
            for j in (1..=m + 1).rev() {
                e[j] += x * e[j - 1];
            }
        }
        self.coefficients
            .iter()
            .enumerate()
            .map(|(j, c)| c * e[j] / binomial(q, j))
            .sum()
    }
}

/// Resultant of two polynomials of degree at most one.
pub(crate) fn linear_resultant(a: &Polynomial, b: &Polynomial) -> f64 {
    a.coefficient(0) * b.coefficient(1) - a.coefficient(1) * b.coefficient(0)
}

pub(crate) fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coefficients.len().max(rhs.coefficients.len());
        Polynomial::new((0..n).map(|i| self.coefficient(i) + rhs.coefficient(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coefficients.len().max(rhs.coefficients.len());
        Polynomial::new((0..n).map(|i| self.coefficient(i) - rhs.coefficient(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut c = vec![0.0; self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Polynomial::new(c)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, c) in self.coefficients.iter().enumerate() {
            if i == 0 {
                write!(f, "{c}")?;
            } else {
                let sign = if *c < 0.0 { '-' } else { '+' };
                let power = if i == 1 { "v".to_string() } else { format!("v^{i}") };
                write!(f, " {sign} {}*{power}", c.abs())?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn trimming_and_degree() {
        assert_eq!(Polynomial::new(vec![1.0, 0.0, 0.0]).degree(), Some(0));
        assert_eq!(Polynomial::new(vec![0.0, 0.0]).degree(), None);
        assert!(Polynomial::zero().is_zero());
        assert_eq!(Polynomial::new(vec![1.0, 1e-20]).trimmed(1e-12).degree(), Some(0));
    }

    #[test]
    fn roots_of_example_beta() {
        let beta = Polynomial::new(vec![15.0 / 12.0, -32.0 / 12.0, 1.0 / 12.0]);
        let r = beta.real_roots();
        assert_abs_diff_eq!(r[0], 16.0 - 241f64.sqrt(), epsilon = 1e-13);
        assert_abs_diff_eq!(r[1], 16.0 + 241f64.sqrt(), epsilon = 1e-12);
        assert_eq!(Polynomial::linear(-0.5, 1.0).real_roots(), vec![0.5]);
        assert!(Polynomial::new(vec![1.0, 0.0, 1.0]).real_roots().is_empty());
        let r = Polynomial::new(vec![2.0 / 9.0, -1.0, 1.0]).real_roots();
        assert_abs_diff_eq!(r[0], 1.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r[1], 2.0 / 3.0, epsilon = 1e-15);
    }

    #[test]
    fn synthetic_division() {
        let p = &Polynomial::linear(-0.25, 1.0) * &Polynomial::linear(3.0, 2.0);
        let (q, rem) = p.divide_by_root(0.25);
        assert_abs_diff_eq!(rem, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(q.coefficient(0), 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(q.coefficient(1), 2.0, epsilon = 1e-15);
    }

    #[test]
    fn blossom_diagonal_and_symmetry() {
        let p = Polynomial::new(vec![0.3, -1.2, 2.5]);
        for t in [0.0, 0.3, 0.9] {
            assert_abs_diff_eq!(p.blossom(&[t, t]), p.eval(t), epsilon = 1e-14);
            assert_abs_diff_eq!(p.blossom(&[t, t, t, t]), p.eval(t), epsilon = 1e-14);
        }
        assert_abs_diff_eq!(p.blossom(&[0.2, 0.7, 0.1]), p.blossom(&[0.1, 0.2, 0.7]), epsilon = 1e-15);
    }

    #[test]
    fn l2_norm() {
        assert_abs_diff_eq!(Polynomial::linear(0.0, 1.0).l2_norm_squared(), 1.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(Polynomial::linear(1.0, -1.0).l2_norm_squared(), 1.0 / 3.0, epsilon = 1e-15);
    }
}
