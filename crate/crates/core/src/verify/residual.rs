//! Residuals of the reduced Schrödinger equations for the closed-form states.
//!
//! Semiconfined:
//! `ψ'' + ψ'/(x-a) - (λ0⁴a²x² - c0 x + a c0)/(x-a)² ψ = 0`.
//!
//! Confined:
//! `ψ'' - (2x-a-b)/((x-a)(b-x)) ψ' - (c2 x² - (a+b) c1 x + a b c1)/((x-a)²(b-x)²) ψ = 0`.
//!
//! `ψ = C w(x) y(x)` is differentiated exactly: `w'/w` and its derivative are
//! closed-form, `y', y''` come from the polynomial degree-lowering identities.
//! The constant `C w(x)` is divided out, which leaves the relative residual
//! unchanged.

use crate::error::Result;
use crate::models::{ModelKind, WellModel};

/// The three terms of the reduced equation at one point, divided by `C w(x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeTerms {
    pub second: f64,
    pub first: f64,
    pub zeroth: f64,
}

impl OdeTerms {
    pub fn sum(&self) -> f64 {
        self.second + self.first + self.zeroth
    }

    /// `|sum| / max |term|`; zero when every term vanishes.
    pub fn relative_residual(&self) -> f64 {
        let scale = self.second.abs().max(self.first.abs()).max(self.zeroth.abs());
        if scale == 0.0 {
            0.0
        } else {
            self.sum().abs() / scale
        }
    }
}

/// ODE terms of state `n` at `x`, with `energy` supplying `c0` (or `c1, c2`).
pub fn ode_terms(model: &WellModel, n: usize, energy: f64, x: f64) -> Result<OdeTerms> {
    // validates that x is strictly interior
    model.mass_at(x)?;
    let lsq = model.lambda0_sq();
    let (y, dy, d2y) = model.poly_with_derivs(n, x);
    let w = model.weight_exponents();
    let a = model.a();
    let (g, dg) = match *model.kind() {
        ModelKind::Semiconfined { .. } => {
            let u = x - a;
            (w.left / u - lsq * a, -w.left / (u * u))
        }
        ModelKind::Confined { b, .. } => {
            let (u, v) = (x - a, b - x);
            let right = w.right.unwrap_or_default();
            (w.left / u - right / v, -w.left / (u * u) - right / (v * v))
        }
    };
    let psi = y;
    let dpsi = g * y + dy;
    let d2psi = (dg + g * g) * y + 2.0 * g * dy + d2y;

    let terms = match *model.kind() {
        ModelKind::Semiconfined { .. } => {
            let u = x - a;
            let c0 = model.c0(energy);
            OdeTerms {
                second: d2psi,
                first: dpsi / u,
                zeroth: -(lsq * lsq * a * a * x * x - c0 * x + a * c0) / (u * u) * psi,
            }
        }
        ModelKind::Confined { b, .. } => {
            let (u, v) = (x - a, b - x);
            let c1 = model.c1(energy).unwrap_or_default();
            let c2 = model.c2(energy).unwrap_or_default();
            OdeTerms {
                second: d2psi,
                first: -(2.0 * x - (a + b)) / (u * v) * dpsi,
                zeroth: -(c2 * x * x - (a + b) * c1 * x + a * b * c1) / (u * u * v * v) * psi,
            }
        }
    };
    Ok(terms)
}

/// Relative residuals of state `n` at the closed-form energy.
pub fn ode_residual(model: &WellModel, n: usize, sample_xs: &[f64]) -> Result<Vec<f64>> {
    ode_residual_with_energy(model, n, model.energy_level(n), sample_xs)
}

/// Relative residuals with an explicit (possibly perturbed) energy.
pub fn ode_residual_with_energy(
    model: &WellModel,
    n: usize,
    energy: f64,
    sample_xs: &[f64],
) -> Result<Vec<f64>> {
    sample_xs
        .iter()
        .map(|&x| ode_terms(model, n, energy, x).map(|t| t.relative_residual()))
        .collect()
}

/// `count` Chebyshev points strictly inside `(lo, hi)`.
pub fn chebyshev_points(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let mid = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let mut xs: Vec<f64> = (0..count)
        .map(|j| {
            let t = std::f64::consts::PI * (j as f64 + 0.5) / count as f64;
            mid - half * t.cos()
        })
        .collect();
    xs.sort_by(f64::total_cmp);
    xs
}

/// Interior sample window for residual checks: `(a, b)` or `(a, x_max)`.
pub fn residual_window(model: &WellModel, n: usize) -> Result<(f64, f64)> {
    let hi = model.sampling_extent(n, super::fd::SEMI_TAIL_REL)?;
    Ok((model.a(), hi))
}
