//! Numerical checks of every closed-form claim made by [`crate::models`].

pub mod fd;
pub mod limits;
pub mod ortho;
pub mod report;
pub mod residual;
pub mod suites;
pub mod tridiag;

pub use fd::{fd_oracle_spectrum, richardson, TridiagonalOperator};
pub use limits::{
    closed_form_energy_gap, factor_limit_check, jacobi_laguerre_limit_check, limit_energy_study,
    max_successive_ratio, weight_limit_check, EnergyLimitRow,
};
pub use ortho::orthonormality_matrix;
pub use report::{CheckRecord, VerificationReport};
pub use residual::{chebyshev_points, ode_residual, ode_residual_with_energy};
pub use suites::{run_suite, Suite};
pub use tridiag::SymTridiagonal;
