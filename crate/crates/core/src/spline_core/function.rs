use crate::error::{Error, Result};

use super::KnotVector;

/// Univariate spline `h(t) = Σ d_i N_i(t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SplineFunction1D {
    space: KnotVector,
    coefficients: Vec<f64>,
}

impl SplineFunction1D {
    pub fn new(space: KnotVector, coefficients: Vec<f64>) -> Result<Self> {
        if coefficients.len() != space.dim() {
            return Err(Error::CoefficientCount { expected: space.dim(), got: coefficients.len() });
        }
        Ok(Self { space, coefficients })
    }

    pub fn zero(space: KnotVector) -> Self {
        let n = space.dim();
        Self { space, coefficients: vec![0.0; n] }
    }

    /// The B-spline `N_i` of `space`.
    pub fn bspline(space: &KnotVector, i: usize) -> Self {
        let mut coefficients = vec![0.0; space.dim()];
        coefficients[i] = 1.0;
        Self { space: space.clone(), coefficients }
    }

    pub fn space(&self) -> &KnotVector {
        &self.space
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.space.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0.0)
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        Ok(self
            .space
            .eval_basis(t)?
            .into_iter()
            .map(|(i, b)| self.coefficients[i] * b)
            .sum())
    }

    pub fn eval_derivative(&self, t: f64, order: usize) -> Result<f64> {
        if order == 0 {
            return self.eval(t);
        }
        Ok(self
            .space
            .eval_derivative_basis(t, order)?
            .into_iter()
            .map(|(i, b)| self.coefficients[i] * b)
            .sum())
    }

    /// `Σ w_k f_k` for functions on one common space.
    pub fn linear_combination(terms: &[(f64, &SplineFunction1D)]) -> Result<Self> {
        let (_, first) = terms
            .first()
            .ok_or_else(|| Error::InvalidParameters("empty linear combination".into()))?;
        let space = first.space.clone();
        let mut coefficients = vec![0.0; space.dim()];
        for (w, f) in terms {
            if f.space != space {
                return Err(Error::IncompatibleSpaces("linear combination over different spaces".into()));
            }
            for (c, d) in coefficients.iter_mut().zip(&f.coefficients) {
                *c += w * d;
            }
        }
        Ok(Self { space, coefficients })
    }

    pub fn scaled(&self, w: f64) -> Self {
        Self {
            space: self.space.clone(),
            coefficients: self.coefficients.iter().map(|c| w * c).collect(),
        }
    }

    pub fn max_abs_coefficient(&self) -> f64 {
        self.coefficients.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spline_core::make_uniform_regular_knots;
    use approx::assert_abs_diff_eq;

    #[test]
    fn coefficient_count_checked() {
        let t = make_uniform_regular_knots(3, 1, 1, None).unwrap();
        assert!(matches!(
            SplineFunction1D::new(t.clone(), vec![0.0; 3]),
            Err(Error::CoefficientCount { expected: 6, got: 3 })
        ));
        assert!(SplineFunction1D::new(t, vec![0.0; 6]).is_ok());
    }

    #[test]
    fn constant_reproduction() {
        let t = make_uniform_regular_knots(4, 2, 3, None).unwrap();
        let one = SplineFunction1D::new(t.clone(), vec![1.0; t.dim()]).unwrap();
        for s in [0.0, 0.12, 0.5, 0.77, 1.0] {
            assert_abs_diff_eq!(one.eval(s).unwrap(), 1.0, epsilon = 1e-14);
            assert_abs_diff_eq!(one.eval_derivative(s, 1).unwrap(), 0.0, epsilon = 1e-11);
        }
    }

    #[test]
    fn greville_reproduces_identity() {
        // Σ ξ_i N_i(t) = t
        let t = make_uniform_regular_knots(3, 1, 3, None).unwrap();
        let f = SplineFunction1D::new(t.clone(), t.greville()).unwrap();
        for s in [0.0, 0.3, 0.61, 1.0] {
            assert_abs_diff_eq!(f.eval(s).unwrap(), s, epsilon = 1e-14);
            assert_abs_diff_eq!(f.eval_derivative(s, 1).unwrap(), 1.0, epsilon = 1e-12);
        }
    }
}
