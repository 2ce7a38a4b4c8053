//! Verification suites assembled into [`VerificationReport`]s.
//!
//! Every bound below is fixed; none is tuned per run.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::models::{ModelKind, WellModel};

use super::fd::{fd_oracle_spectrum, oracle_extent, richardson, TridiagonalOperator};
use super::limits::{
    factor_limit_check, jacobi_laguerre_limit_check, limit_energy_study, max_successive_ratio,
    weight_limit_check,
};
use super::ortho::{max_difference, max_identity_deviation, orthonormality_matrix};
use super::report::{params, Relation, VerificationReport};
use super::residual::{chebyshev_points, ode_residual, ode_residual_with_energy, residual_window};

pub const GRAM_TOL: f64 = 1e-8;
pub const GRAM_STABILITY_TOL: f64 = 1e-9;
/// Gauss-Legendre order on `[a, b]` for the confined overlaps.
pub const CONFINED_QUAD_ORDER: usize = 200;
/// Per-panel order for the semiconfined overlaps.
pub const SEMI_PANEL_ORDER: usize = 40;

pub const RESIDUAL_TOL: f64 = 1e-9;
pub const RESIDUAL_SAMPLES: usize = 100;
/// Relative energy perturbation used as the detection-power control.
pub const RESIDUAL_PERTURBATION: f64 = 1e-2;
pub const RESIDUAL_INFLATION_MIN: f64 = 1e4;

pub const FD_GRIDS: [usize; 4] = [500, 1000, 2000, 4000];
pub const FD_LEVELS: usize = 4;
pub const FD_RICHARDSON_TOL: f64 = 1e-3;

pub const ENERGY_GAP_TOL: f64 = 1e-12;
pub const ENERGY_RATIO_RANGE: (f64, f64) = (1.7, 2.3);
pub const LIMIT_MAX_N: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Ortho,
    Residual,
    Oracle,
    Limits,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Ortho => "ortho",
            Suite::Residual => "residual",
            Suite::Oracle => "oracle",
            Suite::Limits => "limits",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "ortho" => Ok(Suite::Ortho),
            "residual" => Ok(Suite::Residual),
            "oracle" => Ok(Suite::Oracle),
            "limits" => Ok(Suite::Limits),
            other => Err(Error::InvalidArgument(format!(
                "unknown suite '{other}' (expected all|ortho|residual|oracle|limits)"
            ))),
        }
    }
}

fn model_parameters(model: &WellModel, n_max: usize) -> std::collections::BTreeMap<String, Value> {
    let phys = model.phys();
    let mut p = params([
        ("a", json!(model.a())),
        ("m0", json!(phys.m0)),
        ("omega", json!(phys.omega)),
        ("hbar", json!(phys.hbar)),
        ("n_max", json!(n_max)),
    ]);
    match model.kind() {
        ModelKind::Semiconfined { .. } => {
            p.insert("model".into(), json!("semi"));
        }
        ModelKind::Confined { b, .. } => {
            p.insert("model".into(), json!("confined"));
            p.insert("b".into(), json!(b));
        }
    }
    p
}

pub fn run_suite(suite: Suite, model: &WellModel, n_max: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(suite.name(), model_parameters(model, n_max));
    match suite {
        Suite::All => {
            report.extend(ortho_suite(model, n_max)?);
            report.extend(residual_suite(model, n_max)?);
            report.extend(oracle_suite(model, n_max)?);
            report.extend(limits_suite(model, n_max)?);
        }
        Suite::Ortho => report.extend(ortho_suite(model, n_max)?),
        Suite::Residual => report.extend(residual_suite(model, n_max)?),
        Suite::Oracle => report.extend(oracle_suite(model, n_max)?),
        Suite::Limits => report.extend(limits_suite(model, n_max)?),
    }
    Ok(report)
}

fn base_order(model: &WellModel) -> usize {
    if model.b().is_some() {
        CONFINED_QUAD_ORDER
    } else {
        SEMI_PANEL_ORDER
    }
}

pub fn ortho_suite(model: &WellModel, n_max: usize) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("ortho", Default::default());
    let order = base_order(model);
    let gram = orthonormality_matrix(model, n_max, order)?;
    let doubled = orthonormality_matrix(model, n_max, 2 * order)?;
    r.record(
        "ortho.gram_identity_deviation",
        params([("n_max", json!(n_max)), ("quad_order", json!(order))]),
        max_identity_deviation(&gram),
        Relation::AtMost,
        GRAM_TOL,
    );
    r.record(
        "ortho.order_doubling_change",
        params([("n_max", json!(n_max)), ("quad_order", json!(order)), ("doubled", json!(2 * order))]),
        max_difference(&gram, &doubled),
        Relation::AtMost,
        GRAM_STABILITY_TOL,
    );
    Ok(r)
}

pub fn residual_suite(model: &WellModel, n_max: usize) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("residual", Default::default());
    for n in 0..=n_max {
        let (lo, hi) = residual_window(model, n)?;
        let xs = chebyshev_points(lo, hi, RESIDUAL_SAMPLES);
        let energy = model.energy_level(n);
        let exact = ode_residual(model, n, &xs)?.into_iter().fold(0.0, f64::max);
        let perturbed = ode_residual_with_energy(model, n, energy * (1.0 + RESIDUAL_PERTURBATION), &xs)?
            .into_iter()
            .fold(0.0, f64::max);
        let p = params([("n", json!(n)), ("samples", json!(RESIDUAL_SAMPLES)), ("x_hi", json!(hi))]);
        r.record("residual.max_relative", p.clone(), exact, Relation::AtMost, RESIDUAL_TOL);
        let inflation = if exact == 0.0 { f64::INFINITY } else { perturbed / exact };
        let mut p = p;
        p.insert("energy_perturbation".into(), json!(RESIDUAL_PERTURBATION));
        r.record(
            "residual.perturbation_inflation",
            p,
            inflation,
            Relation::AtLeast,
            RESIDUAL_INFLATION_MIN,
        );
    }
    Ok(r)
}

/// FD eigenvalues for every grid in [`FD_GRIDS`]; rows follow the grids.
pub fn fd_convergence_table(model: &WellModel, k: usize) -> Result<Vec<Vec<f64>>> {
    FD_GRIDS
        .iter()
        .map(|&g| fd_oracle_spectrum(model, g, k))
        .collect()
}

pub fn oracle_suite(model: &WellModel, n_max: usize) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("oracle", Default::default());
    let k = (n_max + 1).min(FD_LEVELS);
    let table = fd_convergence_table(model, k)?;
    let last = table.len() - 1;
    for j in 0..k {
        let exact = model.energy_level(j);
        let errors: Vec<f64> = table.iter().map(|row| (row[j] - exact).abs()).collect();
        r.record(
            "oracle.monotone_convergence_ratio",
            params([("level", json!(j)), ("grids", json!(FD_GRIDS)), ("errors", json!(errors))]),
            max_successive_ratio(&errors),
            Relation::Below,
            1.0,
        );
        let (extrapolated, order) =
            richardson(table[last - 2][j], table[last - 1][j], table[last][j], 2.0);
        r.record(
            "oracle.richardson_relative_error",
            params([
                ("level", json!(j)),
                ("exact", json!(exact)),
                ("extrapolated", json!(extrapolated)),
                ("observed_order", json!(order)),
            ]),
            (extrapolated - exact).abs() / exact.abs(),
            Relation::AtMost,
            FD_RICHARDSON_TOL,
        );
    }

    // sanity on the finest operator: eigenvalues above min V, Sturm counts
    // consistent with the computed eigenvalues
    let grid = FD_GRIDS[last];
    let op = TridiagonalOperator::build(model, oracle_extent(model, k)?, grid)?;
    let finest = &table[last];
    let min_v = op.min_potential(model);
    r.record(
        "oracle.lowest_minus_min_potential",
        params([("grid", json!(grid))]),
        finest[0] - min_v,
        Relation::Above,
        0.0,
    );
    let delta = 1e-9 * op.matrix.norm_inf();
    let mismatches = finest
        .iter()
        .enumerate()
        .filter(|&(j, &ev)| op.matrix.sturm_count(ev - delta) != j || op.matrix.sturm_count(ev + delta) != j + 1)
        .count();
    r.record(
        "oracle.sturm_count_mismatches",
        params([("grid", json!(grid)), ("delta", json!(delta))]),
        mismatches as f64,
        Relation::AtMost,
        0.0,
    );
    Ok(r)
}

/// The b-values `b_start · factor^i`, `i < steps`.
pub fn geometric_sequence(b_start: f64, factor: f64, steps: usize) -> Vec<f64> {
    (0..steps).map(|i| b_start * factor.powi(i as i32)).collect()
}

pub fn limits_suite(model: &WellModel, n_max: usize) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("limits", Default::default());
    let phys = *model.phys();
    let a = model.a();
    let top = n_max.min(LIMIT_MAX_N);

    for n in 0..=top {
        // energies: first-order 1/b convergence
        let bs = geometric_sequence(64.0 * a, 2.0, 5);
        let rows = limit_energy_study(&phys, a, n, &bs)?;
        let errors: Vec<f64> = rows.iter().map(|row| row.error).collect();
        let ratios: Vec<f64> = errors.windows(2).map(|w| w[0] / w[1]).collect();
        let p = params([("n", json!(n)), ("b", json!(bs)), ("ratios", json!(ratios))]);
        r.record(
            "limits.energy_ratio_min",
            p.clone(),
            ratios.iter().copied().fold(f64::INFINITY, f64::min),
            Relation::AtLeast,
            ENERGY_RATIO_RANGE.0,
        );
        r.record(
            "limits.energy_ratio_max",
            p.clone(),
            ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            Relation::AtMost,
            ENERGY_RATIO_RANGE.1,
        );
        r.record(
            "limits.energy_error_successive_ratio",
            p,
            max_successive_ratio(&errors),
            Relation::Below,
            1.0,
        );
        let wide = geometric_sequence(2.0 * a, 2.0, 10);
        let gap = limit_energy_study(&phys, a, n, &wide)?
            .iter()
            .map(|row| (row.error - row.closed_form_error).abs())
            .fold(0.0, f64::max);
        r.record(
            "limits.energy_gap_closed_form",
            params([("n", json!(n)), ("b", json!(wide))]),
            gap,
            Relation::AtMost,
            ENERGY_GAP_TOL,
        );

        // polynomial part
        let alpha = model.laguerre_params(0).map(|p| p.alpha()).unwrap_or(2.0 * phys.lambda0_sq() * a * a);
        let bs = geometric_sequence(10.0 * a, 10.0, 4);
        let grid: Vec<f64> = (1..=50).map(|i| a + 3.0 * a * i as f64 / 50.0).collect();
        let dev = jacobi_laguerre_limit_check(n, a, alpha, &bs, &grid)?;
        let p = params([("n", json!(n)), ("alpha", json!(alpha)), ("b", json!(bs)), ("deviations", json!(dev))]);
        if n == 0 {
            r.record(
                "limits.jacobi_laguerre_degree_zero",
                p.clone(),
                dev.iter().copied().fold(0.0, f64::max),
                Relation::AtMost,
                0.0,
            );
        } else {
            r.record("limits.jacobi_laguerre_successive_ratio", p, max_successive_ratio(&dev), Relation::Below, 1.0);
        }

        // full wavefunction and its factors
        let bs = geometric_sequence(8.0 * a, 2.0, 7);
        let grid: Vec<f64> = (1..=30).map(|i| a + 3.0 * a * i as f64 / 31.0).collect();
        let dev = weight_limit_check(&phys, n, a, &bs, &grid)?;
        r.record(
            "limits.wavefunction_successive_ratio",
            params([("n", json!(n)), ("b", json!(bs)), ("deviations", json!(dev))]),
            max_successive_ratio(&dev),
            Relation::Below,
            1.0,
        );
        let factors = factor_limit_check(&phys, n, a, &bs, &grid)?;
        for (name, pick) in [
            ("left_power", (|f: &super::limits::FactorLimitDeviations| f.left_power) as fn(&_) -> f64),
            ("log_gamma_left", |f| f.log_gamma_left),
            ("sqrt_ratio", |f| f.sqrt_ratio),
            ("right_factor", |f| f.right_factor),
        ] {
            let dev: Vec<f64> = factors.iter().map(pick).collect();
            r.record(
                format!("limits.factor_{name}_successive_ratio"),
                params([("n", json!(n)), ("b", json!(bs)), ("deviations", json!(dev))]),
                max_successive_ratio(&dev),
                Relation::Below,
                1.0,
            );
        }
    }
    Ok(r)
}
