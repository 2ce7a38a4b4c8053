//! Special functions used by the well models.
//!
//! Production evaluation of both polynomial families goes through the
//! three-term recurrences; derivatives come from the exact degree-lowering
//! identities. The finite hypergeometric sums in [`series`] are kept as an
//! independent evaluation route for cross-checking.

mod gamma;
mod jacobi;
mod laguerre;
pub mod series;

pub use gamma::{ln_factorial, log_gamma, pochhammer_log};
pub use jacobi::{jacobi_deriv, jacobi_eval, jacobi_symmetry_check, JacobiParams};
pub use laguerre::{laguerre_deriv, laguerre_eval, LaguerreParams};
pub use series::{jacobi_series, laguerre_series};

pub(crate) use gamma::ln_gamma_positive;

/// Number of strict sign changes in a sampled sequence, skipping exact zeros.
pub fn sign_changes(values: impl IntoIterator<Item = f64>) -> usize {
    let mut last = 0.0f64;
    let mut count = 0;
    for v in values {
        if v == 0.0 || v.is_nan() {
            continue;
        }
        if last != 0.0 && (v > 0.0) != (last > 0.0) {
            count += 1;
        }
        last = v;
    }
    count
}
