//! C¹-smooth isogeometric spaces over analysis-suitable G¹ two-patch
//! B-spline geometries.
//!
//! The crate computes, for a planar two-patch geometry of bidegree `(p, p)`
//! glued along the edge `u = 0` of both patches:
//!
//! * the gluing data `α^(L)`, `α^(R)`, `β`, `β^(L)`, `β^(R)` ([`gluing`]),
//! * the dimension of the C¹ space ([`c1_basis::dimension`]),
//! * an explicit basis with its B-spline coefficients ([`c1_basis`],
//!   [`coeff_matrices`]), computed through blossoming ([`blossom`]),
//! * validation analytics: mass-matrix conditioning and interface gradient
//!   jumps ([`analysis`]).
//!
//! File formats and the command line front end live in [`io`] and [`cli`].

pub mod analysis;
pub mod blossom;
pub mod c1_basis;
pub mod cli;
pub mod coeff_matrices;
pub mod error;
pub mod fixtures;
pub mod gluing;
pub mod io;
pub mod spline_core;

pub use error::{Error, Result};
