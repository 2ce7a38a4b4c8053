//! The two closed-form PDM oscillator wells.
//!
//! Both models share `V(x) = M(x) ω² x² / 2` and differ in the mass profile:
//!
//! | model        | domain          | `M(x)`                       | polynomial part |
//! |--------------|-----------------|------------------------------|-----------------|
//! | semiconfined | `a < x`         | `a m0 / (x - a)`             | Laguerre        |
//! | confined     | `a < x < b`     | `a b m0 / ((x - a)(b - x))`  | Jacobi          |
//!
//! Each wavefunction is `C_n · w(x) · poly_n(x)` where the weight `w` is
//! `(x - a)^L e^{-λ0² a x}` (semiconfined) or `(x - a)^L (b - x)^R`
//! (confined). The module stores the weight exponents as a `(left, right)`
//! pair, left meaning the `x = a` wall, and derives the polynomial parameters
//! from them. Normalization constants and weights are combined in log space.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadrature::{truncation_point, SemiInfiniteOptions};
use crate::special_fns::{ln_factorial, ln_gamma_positive, JacobiParams, LaguerreParams};

/// Constant mass, angular frequency and reduced Planck constant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhysParams {
    pub m0: f64,
    pub omega: f64,
    pub hbar: f64,
}

impl Default for PhysParams {
    fn default() -> Self {
        Self {
            m0: 1.0,
            omega: 1.0,
            hbar: 1.0,
        }
    }
}

impl PhysParams {
    pub fn new(m0: f64, omega: f64, hbar: f64) -> Result<Self> {
        for (name, value) in [("m0", m0), ("omega", omega), ("hbar", hbar)] {
            if !(value > 0.0) || !value.is_finite() {
                return Err(Error::domain(name, value, "must be finite and > 0"));
            }
        }
        Ok(Self { m0, omega, hbar })
    }

    /// `λ0² = m0 ω / ħ`.
    pub fn lambda0_sq(&self) -> f64 {
        self.m0 * self.omega / self.hbar
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ModelKind {
    Semiconfined { a: f64 },
    Confined { a: f64, b: f64 },
}

/// Energy, normalization and sign of one stationary state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumLevel {
    pub n: usize,
    pub energy: f64,
    /// `ln |C_n|`.
    pub log_norm: f64,
    pub sign: i8,
}

/// `C_n = sign · exp(log_abs)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormConstant {
    pub log_abs: f64,
    pub sign: i8,
}

impl NormConstant {
    pub fn value(&self) -> f64 {
        f64::from(self.sign) * self.log_abs.exp()
    }
}

/// Exponents of the weight factor at the left (`x = a`) and right (`x = b`)
/// walls. The semiconfined model has no right wall.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightExponents {
    pub left: f64,
    pub right: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellModel {
    phys: PhysParams,
    kind: ModelKind,
    exponents: WeightExponents,
}

impl WellModel {
    pub fn semiconfined(phys: PhysParams, a: f64) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::domain("a", a, "wall position a > 0"));
        }
        let lsq = phys.lambda0_sq();
        Ok(Self {
            phys,
            kind: ModelKind::Semiconfined { a },
            exponents: WeightExponents {
                left: lsq * a * a,
                right: None,
            },
        })
    }

    pub fn confined(phys: PhysParams, a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::domain("a", a, "wall position a > 0"));
        }
        if !(b > a) || !b.is_finite() {
            return Err(Error::domain("b", b, "wall position b > a"));
        }
        let lsq = phys.lambda0_sq();
        let width = b - a;
        Ok(Self {
            phys,
            kind: ModelKind::Confined { a, b },
            exponents: WeightExponents {
                left: lsq * a * a * b / width,
                right: Some(lsq * a * b * b / width),
            },
        })
    }

    pub fn phys(&self) -> &PhysParams {
        &self.phys
    }

    pub fn kind(&self) -> &ModelKind {
        &self.kind
    }

    pub fn a(&self) -> f64 {
        match self.kind {
            ModelKind::Semiconfined { a } | ModelKind::Confined { a, .. } => a,
        }
    }

    /// Right wall, if any.
    pub fn b(&self) -> Option<f64> {
        match self.kind {
            ModelKind::Semiconfined { .. } => None,
            ModelKind::Confined { b, .. } => Some(b),
        }
    }

    pub fn lambda0_sq(&self) -> f64 {
        self.phys.lambda0_sq()
    }

    pub fn weight_exponents(&self) -> WeightExponents {
        self.exponents
    }

    /// `c0 = 2 m0 a E / ħ²`.
    pub fn c0(&self, energy: f64) -> f64 {
        2.0 * self.phys.m0 * self.a() * energy / (self.phys.hbar * self.phys.hbar)
    }

    /// `c1 = b c0`; semiconfined models have no `b` and return `None`.
    pub fn c1(&self, energy: f64) -> Option<f64> {
        self.b().map(|b| b * self.c0(energy))
    }

    /// `c2 = c1 + λ0⁴ a² b²`.
    pub fn c2(&self, energy: f64) -> Option<f64> {
        let lsq = self.lambda0_sq();
        let a = self.a();
        self.b()
            .map(|b| b * self.c0(energy) + lsq * lsq * a * a * b * b)
    }

    /// Laguerre parameters of the semiconfined state `n`: order `2 λ0² a²`.
    pub fn laguerre_params(&self, n: usize) -> Option<LaguerreParams> {
        match self.kind {
            ModelKind::Semiconfined { .. } => {
                LaguerreParams::new(n, 2.0 * self.exponents.left).ok()
            }
            ModelKind::Confined { .. } => None,
        }
    }

    /// Jacobi parameters of the confined state `n`, in the `P_n^{(α,β)}`
    /// ordering: `α` is twice the right-wall (`b`) exponent and `β` twice the
    /// left-wall (`a`) exponent, matching the argument `(2x - a - b)/(b - a)`.
    pub fn jacobi_params(&self, n: usize) -> Option<JacobiParams> {
        let right = self.exponents.right?;
        JacobiParams::new(n, 2.0 * right, 2.0 * self.exponents.left).ok()
    }

    fn check_open(&self, x: f64) -> Result<()> {
        let a = self.a();
        let inside = match self.kind {
            ModelKind::Semiconfined { .. } => x > a && x.is_finite(),
            ModelKind::Confined { b, .. } => x > a && x < b,
        };
        if inside {
            Ok(())
        } else {
            Err(Error::domain("x", x, "strictly inside the walls"))
        }
    }

    fn check_closed(&self, x: f64) -> Result<()> {
        let a = self.a();
        let inside = match self.kind {
            ModelKind::Semiconfined { .. } => x >= a && x.is_finite(),
            ModelKind::Confined { b, .. } => x >= a && x <= b,
        };
        if inside {
            Ok(())
        } else {
            Err(Error::domain("x", x, "within the closed well domain"))
        }
    }

    /// Position-dependent mass; diverges at the walls.
    pub fn mass_at(&self, x: f64) -> Result<f64> {
        self.check_open(x)?;
        let m0 = self.phys.m0;
        Ok(match self.kind {
            ModelKind::Semiconfined { a } => a * m0 / (x - a),
            ModelKind::Confined { a, b } => a * b * m0 / ((x - a) * (b - x)),
        })
    }

    /// `1 / M(x)`, continuous up to and including the walls where it vanishes.
    pub fn inverse_mass(&self, x: f64) -> f64 {
        let m0 = self.phys.m0;
        match self.kind {
            ModelKind::Semiconfined { a } => (x - a) / (a * m0),
            ModelKind::Confined { a, b } => (x - a) * (b - x) / (a * b * m0),
        }
    }

    /// `V(x) = M(x) ω² x² / 2`.
    pub fn potential_at(&self, x: f64) -> Result<f64> {
        let mass = self.mass_at(x)?;
        let w = self.phys.omega;
        Ok(0.5 * mass * w * w * x * x)
    }

    /// Closed-form energy of level `n`.
    pub fn energy_level(&self, n: usize) -> f64 {
        let PhysParams { m0, omega, hbar } = self.phys;
        let nf = n as f64;
        match self.kind {
            ModelKind::Semiconfined { a } => {
                hbar * omega * (nf + 0.5) + 2.0 * m0 * omega * omega * a * a
            }
            ModelKind::Confined { a, b } => {
                let width = b - a;
                (b + a) / width * hbar * omega * (nf + 0.5)
                    + hbar * hbar / (2.0 * m0 * a * b) * nf * (nf + 1.0)
                    + 2.0 * m0 * omega * omega * a * a * b * b / (width * width)
            }
        }
    }

    /// Orthonormalization constant `C_n` in log form, sign `(-1)^n`.
    pub fn norm_constant(&self, n: usize) -> NormConstant {
        let nf = n as f64;
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        let log_abs = match self.kind {
            ModelKind::Semiconfined { a } => {
                let lsq = self.lambda0_sq();
                let p = self.exponents.left;
                p + (p + 0.5) * (2.0 * lsq * a).ln()
                    + 0.5 * (ln_factorial(n) - ln_gamma_positive(nf + 2.0 * p + 1.0))
            }
            ModelKind::Confined { a, b } => {
                let left = 2.0 * self.exponents.left;
                let right = 2.0 * self.exponents.right.unwrap_or_default();
                let s = left + right;
                -(0.5 * s + 0.5) * (b - a).ln()
                    + 0.5
                        * ((2.0 * nf + s + 1.0).ln()
                            + ln_gamma_positive(nf + s + 1.0)
                            + ln_factorial(n)
                            - ln_gamma_positive(nf + left + 1.0)
                            - ln_gamma_positive(nf + right + 1.0))
            }
        };
        NormConstant { log_abs, sign }
    }

    pub fn level(&self, n: usize) -> SpectrumLevel {
        let norm = self.norm_constant(n);
        SpectrumLevel {
            n,
            energy: self.energy_level(n),
            log_norm: norm.log_abs,
            sign: norm.sign,
        }
    }

    pub fn spectrum_table(&self, n_max: usize) -> Vec<SpectrumLevel> {
        (0..=n_max).map(|n| self.level(n)).collect()
    }

    /// `ln w(x)` of the weight factor (without `C_n`) for `x` strictly inside.
    pub(crate) fn log_weight(&self, x: f64) -> f64 {
        let left = self.exponents.left;
        match self.kind {
            ModelKind::Semiconfined { a } => left * (x - a).ln() - self.lambda0_sq() * a * x,
            ModelKind::Confined { a, b } => {
                left * (x - a).ln() + self.exponents.right.unwrap_or_default() * (b - x).ln()
            }
        }
    }

    /// Polynomial argument and its derivative with respect to `x`.
    pub(crate) fn poly_argument(&self, x: f64) -> (f64, f64) {
        match self.kind {
            ModelKind::Semiconfined { a } => {
                let s = 2.0 * self.lambda0_sq() * a;
                (s * (x - a), s)
            }
            ModelKind::Confined { a, b } => ((2.0 * x - a - b) / (b - a), 2.0 / (b - a)),
        }
    }

    /// Polynomial value and its first two derivatives with respect to `x`.
    pub(crate) fn poly_with_derivs(&self, n: usize, x: f64) -> (f64, f64, f64) {
        let (z, dz) = self.poly_argument(x);
        match self.kind {
            ModelKind::Semiconfined { .. } => {
                let p = LaguerreParams::new(n, 2.0 * self.exponents.left)
                    .expect("Laguerre order is positive by construction");
                (p.eval(z), dz * p.deriv(z), dz * dz * p.second_deriv(z))
            }
            ModelKind::Confined { .. } => {
                let p = self
                    .jacobi_params(n)
                    .expect("Jacobi parameters are positive by construction");
                (p.eval(z), dz * p.deriv(z), dz * dz * p.second_deriv(z))
            }
        }
    }

    fn poly_value(&self, n: usize, x: f64) -> f64 {
        let (z, _) = self.poly_argument(x);
        match self.kind {
            ModelKind::Semiconfined { .. } => crate::special_fns::laguerre_eval(
                &LaguerreParams::new(n, 2.0 * self.exponents.left)
                    .expect("Laguerre order is positive by construction"),
                z,
            ),
            ModelKind::Confined { .. } => self
                .jacobi_params(n)
                .expect("Jacobi parameters are positive by construction")
                .eval(z),
        }
    }

    fn is_wall(&self, x: f64) -> bool {
        x == self.a() || Some(x) == self.b()
    }

    /// `ψ_n(x)`; exactly zero on the walls.
    pub fn wavefunction_at(&self, n: usize, x: f64) -> Result<f64> {
        self.check_closed(x)?;
        if self.is_wall(x) {
            return Ok(0.0);
        }
        let norm = self.norm_constant(n);
        let magnitude = (norm.log_abs + self.log_weight(x)).exp();
        Ok(f64::from(norm.sign) * magnitude * self.poly_value(n, x))
    }

    /// `|ψ_n(x)|²`.
    pub fn density_at(&self, n: usize, x: f64) -> Result<f64> {
        let psi = self.wavefunction_at(n, x)?;
        Ok(psi * psi)
    }

    /// Upper end of the sampling window: the right wall for the confined
    /// model; for the semiconfined model the point beyond which
    /// `|ψ_n| < rel_tol · max |ψ_n|`, located from the closed form.
    pub fn sampling_extent(&self, n: usize, rel_tol: f64) -> Result<f64> {
        if let Some(b) = self.b() {
            return Ok(b);
        }
        if !(rel_tol > 0.0 && rel_tol < 1.0) {
            return Err(Error::domain("rel_tol", rel_tol, "0 < rel_tol < 1"));
        }
        let a = self.a();
        // |ψ_n| ~ t^{p+n} e^{-λ0² a t}; scan well past the envelope cutoff
        let opts = SemiInfiniteOptions::new(self.lambda0_sq() * a, rel_tol * 1e-3)
            .poly_degree(self.exponents.left + n as f64);
        let far = truncation_point(a, &opts)?;
        const SCAN: usize = 20_000;
        let step = (far - a) / SCAN as f64;
        let values: Vec<f64> = (1..=SCAN)
            .map(|i| {
                let x = a + step * i as f64;
                self.wavefunction_at(n, x).map(f64::abs)
            })
            .collect::<Result<_>>()?;
        let peak = values.iter().copied().fold(0.0, f64::max);
        let last = values
            .iter()
            .rposition(|&v| v >= rel_tol * peak)
            .unwrap_or(0);
        Ok(a + step * (last + 2) as f64)
    }
}

/// Relative wavefunction cutoff that ends the semiconfined sampling window.
pub const SAMPLING_TAIL_REL: f64 = 1e-12;

/// One row of a sampled density table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensitySample {
    pub x: f64,
    pub n: usize,
    pub psi: f64,
    pub density: f64,
}

impl WellModel {
    /// Uniform grid of `samples` points over `[a, b]`, or over `[a, x_max]`
    /// for the semiconfined model with `x_max` the [`SAMPLING_TAIL_REL`]
    /// extent of the highest state `n_max`.
    pub fn sampling_grid(&self, n_max: usize, samples: usize) -> Result<Vec<f64>> {
        if samples < 2 {
            return Err(Error::domain("samples", samples as f64, "samples >= 2"));
        }
        let a = self.a();
        let x_max = self.sampling_extent(n_max, SAMPLING_TAIL_REL)?;
        let step = (x_max - a) / (samples - 1) as f64;
        Ok((0..samples)
            .map(|i| if i == samples - 1 { x_max } else { a + step * i as f64 })
            .collect())
    }

    /// `ψ_n` and `|ψ_n|²` on [`Self::sampling_grid`], grouped by `n`.
    pub fn density_table(&self, n_max: usize, samples: usize) -> Result<Vec<DensitySample>> {
        let grid = self.sampling_grid(n_max, samples)?;
        let mut rows = Vec::with_capacity(grid.len() * (n_max + 1));
        for n in 0..=n_max {
            for &x in &grid {
                let psi = self.wavefunction_at(n, x)?;
                rows.push(DensitySample {
                    x,
                    n,
                    psi,
                    density: psi * psi,
                });
            }
        }
        Ok(rows)
    }
}
