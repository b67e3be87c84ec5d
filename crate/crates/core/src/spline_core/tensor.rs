use std::fmt::Debug;
use std::ops::{Add, Mul, Sub};

use nalgebra::Vector2;

use crate::error::{Error, Result};

use super::{KnotVector, SplineFunction1D};

pub type Point2 = Vector2<f64>;

/// Values that can serve as spline control coefficients.
pub trait ControlValue:
    Copy + Debug + PartialEq + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self>
{
    fn zero() -> Self;
}

impl ControlValue for f64 {
    fn zero() -> Self {
        0.0
    }
}

impl ControlValue for Point2 {
    fn zero() -> Self {
        Point2::zeros()
    }
}

/// Tensor-product spline `z(u, v) = Σ d_{i,j} N_i(u) N_j(v)`.
///
/// Coefficients are stored row-major in `(i, j)`, `i` being the `u` index.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorSplineFunction<V = f64> {
    space_u: KnotVector,
    space_v: KnotVector,
    coefficients: Vec<V>,
}

impl<V: ControlValue> TensorSplineFunction<V> {
    pub fn new(space_u: KnotVector, space_v: KnotVector, coefficients: Vec<V>) -> Result<Self> {
        let expected = space_u.dim() * space_v.dim();
        if coefficients.len() != expected {
            return Err(Error::CoefficientCount { expected, got: coefficients.len() });
        }
        Ok(Self { space_u, space_v, coefficients })
    }

    pub fn from_fn(space_u: KnotVector, space_v: KnotVector, mut f: impl FnMut(usize, usize) -> V) -> Self {
        let (nu, nv) = (space_u.dim(), space_v.dim());
        let mut coefficients = Vec::with_capacity(nu * nv);
        for i in 0..nu {
            for j in 0..nv {
                coefficients.push(f(i, j));
            }
        }
        Self { space_u, space_v, coefficients }
    }

    pub fn space_u(&self) -> &KnotVector {
        &self.space_u
    }

    pub fn space_v(&self) -> &KnotVector {
        &self.space_v
    }

    pub fn n_u(&self) -> usize {
        self.space_u.dim()
    }

    pub fn n_v(&self) -> usize {
        self.space_v.dim()
    }

    pub fn coefficients(&self) -> &[V] {
        &self.coefficients
    }

    pub fn get(&self, i: usize, j: usize) -> V {
        self.coefficients[i * self.n_v() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: V) {
        let nv = self.n_v();
        self.coefficients[i * nv + j] = value;
    }

    pub fn map<W: ControlValue>(&self, f: impl Fn(V) -> W) -> TensorSplineFunction<W> {
        TensorSplineFunction {
            space_u: self.space_u.clone(),
            space_v: self.space_v.clone(),
            coefficients: self.coefficients.iter().map(|&c| f(c)).collect(),
        }
    }

    /// `∂^{du}_u ∂^{dv}_v z(u, v)`.
    pub fn eval(&self, u: f64, v: f64, du: usize, dv: usize) -> Result<V> {
        for t in [u, v] {
            if !(0.0..=1.0).contains(&t) {
                return Err(Error::OutOfDomain(t));
            }
        }
        let bu = basis_row(&self.space_u, u, du);
        let bv = basis_row(&self.space_v, v, dv);
        Ok(self.eval_with(&bu, &bv))
    }

    /// Evaluate with precomputed `(first_index, values)` rows in `u` and `v`.
    pub(crate) fn eval_with(&self, bu: &(usize, Vec<f64>), bv: &(usize, Vec<f64>)) -> V {
        let nv = self.n_v();
        let mut acc = V::zero();
        for (a, &wu) in bu.1.iter().enumerate() {
            if wu == 0.0 {
                continue;
            }
            let row = (bu.0 + a) * nv;
            for (b, &wv) in bv.1.iter().enumerate() {
                acc = acc + self.coefficients[row + bv.0 + b] * (wu * wv);
            }
        }
        acc
    }

    /// Univariate spline in `v` obtained from row `i` of the coefficients.
    pub fn row(&self, i: usize) -> Vec<V> {
        let nv = self.n_v();
        self.coefficients[i * nv..(i + 1) * nv].to_vec()
    }
}

impl TensorSplineFunction<Point2> {
    pub fn component(&self, axis: usize) -> TensorSplineFunction<f64> {
        self.map(|p| p[axis])
    }

    /// Row `i` of one coordinate as a univariate spline in `v`.
    pub fn row_component(&self, i: usize, axis: usize) -> SplineFunction1D {
        let coeffs = self.row(i).into_iter().map(|p| p[axis]).collect();
        SplineFunction1D::new(self.space_v.clone(), coeffs).expect("row length matches space")
    }
}

/// Derivative of the given order of the active B-splines at `t`.
pub(crate) fn basis_row(space: &KnotVector, t: f64, order: usize) -> (usize, Vec<f64>) {
    let span = space.span(t);
    let first = span - space.degree();
    if order == 0 {
        (first, space.basis_funs(span, t))
    } else {
        let mut ders = space.ders_basis_funs(span, t, order);
        (first, ders.swap_remove(order))
    }
}
