//! Two exactly solvable position-dependent-mass (PDM) oscillator wells.
//!
//! The *semiconfined* well has one infinitely high wall at `x = a`; the
//! *confined* well has walls at `x = a` and `x = b`. Both use the
//! BenDaniel-Duke kinetic operator `-(hbar^2/2) d/dx (1/M(x)) d/dx` with an
//! oscillator-shaped potential `V(x) = M(x) omega^2 x^2 / 2`, and both are
//! solved in closed form by Laguerre and Jacobi polynomials respectively.
//!
//! Modules:
//! - [`special_fns`]: log-gamma, Pochhammer symbols, Jacobi and Laguerre
//!   polynomials with exact derivatives, plus finite-sum oracles.
//! - [`quadrature`]: Gauss-Legendre rules and finite / semi-infinite drivers.
//! - [`models`]: mass and potential profiles, spectra, normalized wavefunctions.
//! - [`verify`]: orthonormality, ODE residuals, a finite-difference spectrum
//!   oracle and the `b -> infinity` limit studies.

// `!(x < y)` is used deliberately so NaN inputs are rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod models;
pub mod quadrature;
pub mod special_fns;
pub mod verify;

pub use error::{Error, Result};
pub use models::{DensitySample, ModelKind, NormConstant, PhysParams, SpectrumLevel, WellModel};
pub use quadrature::QuadratureRule;
pub use special_fns::{JacobiParams, LaguerreParams};
