//! Studies of the confined model as the right wall `b` moves to infinity.
//!
//! The confined spectrum, polynomial part, weight factor and normalization
//! all tend to their semiconfined counterparts. Each function below takes a
//! sequence of `b` values and reports a deviation per `b`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::models::{PhysParams, WellModel};
use crate::special_fns::{ln_gamma_positive, JacobiParams, LaguerreParams};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyLimitRow {
    pub b: f64,
    pub energy_confined: f64,
    pub energy_semi: f64,
    /// `|E_n(a, b) - E_n(a)|` from the two spectra.
    pub error: f64,
    /// The same gap from its expanded closed form.
    pub closed_form_error: f64,
}

fn check_b_sequence(a: f64, b_sequence: &[f64]) -> Result<()> {
    if b_sequence.is_empty() {
        return Err(Error::InvalidArgument("empty b sequence".into()));
    }
    for w in b_sequence.windows(2) {
        if !(w[1] > w[0]) {
            return Err(Error::InvalidArgument(format!(
                "b sequence must be strictly increasing ({} then {})",
                w[0], w[1]
            )));
        }
    }
    if !(b_sequence[0] > a) {
        return Err(Error::domain("b", b_sequence[0], "every b > a"));
    }
    Ok(())
}

fn check_grid(a: f64, b_min: f64, x_grid: &[f64]) -> Result<()> {
    for &x in x_grid {
        if !(x > a && x < b_min) {
            return Err(Error::domain("x", x, "grid points inside (a, min b)"));
        }
    }
    Ok(())
}

/// `E_n(a,b) - E_n(a) = (2a/(b-a)) ħω(n+½) + ħ² n(n+1)/(2 m0 a b) + 2 m0 ω² a² (b²/(b-a)² - 1)`.
pub fn closed_form_energy_gap(phys: &PhysParams, a: f64, b: f64, n: usize) -> f64 {
    let PhysParams { m0, omega, hbar } = *phys;
    let nf = n as f64;
    let width = b - a;
    2.0 * a / width * hbar * omega * (nf + 0.5)
        + hbar * hbar * nf * (nf + 1.0) / (2.0 * m0 * a * b)
        + 2.0 * m0 * omega * omega * a * a * (b * b / (width * width) - 1.0)
}

pub fn limit_energy_study(
    phys: &PhysParams,
    a: f64,
    n: usize,
    b_sequence: &[f64],
) -> Result<Vec<EnergyLimitRow>> {
    check_b_sequence(a, b_sequence)?;
    let semi = WellModel::semiconfined(*phys, a)?;
    let energy_semi = semi.energy_level(n);
    b_sequence
        .iter()
        .map(|&b| {
            let energy_confined = WellModel::confined(*phys, a, b)?.energy_level(n);
            Ok(EnergyLimitRow {
                b,
                energy_confined,
                energy_semi,
                error: (energy_confined - energy_semi).abs(),
                closed_form_error: closed_form_energy_gap(phys, a, b, n),
            })
        })
        .collect()
}

/// Max over `x_grid` of `|P_n^{(α, bα/a)}(1 - 2(x-a)/(b-a)) - L_n^{(α)}(αx/a - α)|`
/// for each `b`.
pub fn jacobi_laguerre_limit_check(
    n: usize,
    a: f64,
    alpha: f64,
    b_sequence: &[f64],
    x_grid: &[f64],
) -> Result<Vec<f64>> {
    if !(alpha > 0.0) {
        return Err(Error::domain("alpha", alpha, "alpha > 0"));
    }
    if !(a > 0.0) {
        return Err(Error::domain("a", a, "a > 0"));
    }
    check_b_sequence(a, b_sequence)?;
    check_grid(a, b_sequence[0], x_grid)?;
    let laguerre = LaguerreParams::new(n, alpha)?;
    b_sequence
        .iter()
        .map(|&b| {
            let jacobi = JacobiParams::new(n, alpha, b * alpha / a)?;
            Ok(x_grid
                .iter()
                .map(|&x| {
                    let pj = jacobi.eval(1.0 - 2.0 * (x - a) / (b - a));
                    let pl = laguerre.eval(alpha * x / a - alpha);
                    (pj - pl).abs()
                })
                .fold(0.0, f64::max))
        })
        .collect()
}

/// Max over `x_grid` of `|ψ_n^{confined}(x; a, b) - (-1)^n ψ_n^{semi}(x; a)|`
/// for each `b`.
///
/// With both normalization constants carrying `(-1)^n`, the confined state
/// tends to `(-1)^n` times the semiconfined one: the Jacobi argument
/// `(2x-a-b)/(b-a)` tends to `-1` rather than `+1`, and the reflection
/// `P_n^{(α,β)}(-z) = (-1)^n P_n^{(β,α)}(z)` contributes the extra sign.
pub fn weight_limit_check(
    phys: &PhysParams,
    n: usize,
    a: f64,
    b_sequence: &[f64],
    x_grid: &[f64],
) -> Result<Vec<f64>> {
    check_b_sequence(a, b_sequence)?;
    check_grid(a, b_sequence[0], x_grid)?;
    let semi = WellModel::semiconfined(*phys, a)?;
    let parity = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let target: Vec<f64> = x_grid
        .iter()
        .map(|&x| semi.wavefunction_at(n, x).map(|v| parity * v))
        .collect::<Result<_>>()?;
    b_sequence
        .iter()
        .map(|&b| {
            let conf = WellModel::confined(*phys, a, b)?;
            x_grid.iter().zip(&target).try_fold(0.0f64, |acc, (&x, &t)| {
                Ok(acc.max((conf.wavefunction_at(n, x)? - t).abs()))
            })
        })
        .collect()
}

/// Deviations of the four factor-wise limits that carry the confined weight
/// and normalization over to the semiconfined ones, for one `b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FactorLimitDeviations {
    pub b: f64,
    /// `max_x |(x-a)^{λ0² a² b/(b-a)} - (x-a)^{λ0² a²}|`.
    pub left_power: f64,
    /// `|ln Γ(n + 2λ0² a² b/(b-a) + 1) - ln Γ(n + 2λ0² a² + 1)|`.
    pub log_gamma_left: f64,
    /// `|sqrt((2n + 2λ0² a b + 1)/(b-a)) - sqrt(2λ0² a)|`.
    pub sqrt_ratio: f64,
    /// Relative deviation of the Stirling-type limit of the right-wall factor
    /// and remaining normalization, maximized over the grid.
    pub right_factor: f64,
}

pub fn factor_limit_check(
    phys: &PhysParams,
    n: usize,
    a: f64,
    b_sequence: &[f64],
    x_grid: &[f64],
) -> Result<Vec<FactorLimitDeviations>> {
    check_b_sequence(a, b_sequence)?;
    check_grid(a, b_sequence[0], x_grid)?;
    let lsq = phys.lambda0_sq();
    let nf = n as f64;
    let p_inf = lsq * a * a;
    b_sequence
        .iter()
        .map(|&b| {
            let width = b - a;
            let p = lsq * a * a * b / width;
            let q = lsq * a * b * b / width;
            let s = 2.0 * lsq * a * b * (b + a) / width;
            let left_power = x_grid
                .iter()
                .map(|&x| ((x - a).powf(p) - (x - a).powf(p_inf)).abs())
                .fold(0.0, f64::max);
            let log_gamma_left =
                (ln_gamma_positive(nf + 2.0 * p + 1.0) - ln_gamma_positive(nf + 2.0 * p_inf + 1.0)).abs();
            let sqrt_ratio =
                (((2.0 * nf + 2.0 * lsq * a * b + 1.0) / width).sqrt() - (2.0 * lsq * a).sqrt()).abs();
            let right_factor = x_grid
                .iter()
                .map(|&x| {
                    let lhs = -0.5 * s * width.ln()
                        + 0.5 * (ln_gamma_positive(nf + s + 1.0) - ln_gamma_positive(nf + 2.0 * q + 1.0))
                        + q * (b - x).ln();
                    let rhs = p_inf * (2.0 * lsq * a).ln() - lsq * a * (x - a);
                    (lhs - rhs).exp_m1().abs()
                })
                .fold(0.0, f64::max);
            Ok(FactorLimitDeviations {
                b,
                left_power,
                log_gamma_left,
                sqrt_ratio,
                right_factor,
            })
        })
        .collect()
}

/// Largest ratio `d[i+1] / d[i]` over a sequence of deviations; below one
/// means strictly decreasing. Returns `NaN` for fewer than two entries.
pub fn max_successive_ratio(deviations: &[f64]) -> f64 {
    deviations
        .windows(2)
        .map(|w| w[1] / w[0])
        .fold(f64::NAN, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn energy_gap_at_b_two() {
        let rows = limit_energy_study(&PhysParams::default(), 1.0, 0, &[2.0]).unwrap();
        assert_eq!(rows[0].error, 7.0);
        assert_relative_eq!(rows[0].closed_form_error, 7.0, max_relative = 1e-15);
    }

    #[test]
    fn bad_b_sequences() {
        let p = PhysParams::default();
        assert!(limit_energy_study(&p, 1.0, 0, &[]).is_err());
        assert!(limit_energy_study(&p, 1.0, 0, &[4.0, 3.0]).is_err());
        assert!(limit_energy_study(&p, 1.0, 0, &[1.0, 3.0]).is_err());
        assert!(jacobi_laguerre_limit_check(1, 1.0, 2.0, &[10.0], &[11.0]).is_err());
        assert!(jacobi_laguerre_limit_check(1, 1.0, 0.0, &[10.0], &[2.0]).is_err());
    }

    #[test]
    fn degree_zero_limit_is_exact() {
        let d = jacobi_laguerre_limit_check(0, 1.0, 2.0, &[10.0, 100.0], &[1.5, 3.0]).unwrap();
        assert_eq!(d, vec![0.0, 0.0]);
    }

    #[test]
    fn degree_one_deviation_scales_like_one_over_b() {
        // exact: 2(α+1)(x-a)/(b-a)
        let d = jacobi_laguerre_limit_check(1, 1.0, 2.0, &[100.0, 1000.0], &[1.5]).unwrap();
        assert_relative_eq!(d[0], 3.0 / 99.0, max_relative = 1e-12);
        assert_relative_eq!(d[0] / d[1], 999.0 / 99.0, max_relative = 1e-10);
    }

    #[test]
    fn successive_ratio() {
        assert!(max_successive_ratio(&[4.0, 2.0, 1.0]) == 0.5);
        assert!(max_successive_ratio(&[1.0]).is_nan());
    }
}
