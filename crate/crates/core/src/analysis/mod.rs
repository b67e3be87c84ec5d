//! Numerical validation: quadrature, mass matrices and conditioning, the
//! interface gradient-jump check and the kernel-rank oracle.

pub mod c1_check;
pub mod kernel;
pub mod linalg;
pub mod mass;
pub mod quadrature;

pub use c1_check::{c1_residual, C1Report};
pub use kernel::{kernel_rank_oracle, KernelReport};
pub use linalg::{condition_diag_scaled, jacobi_eigenvalues, solve_least_squares, symmetric_eigenvalues};
pub use mass::{assemble_mass, mass_report, MassMatrixReport};
pub use quadrature::gauss_rule;
