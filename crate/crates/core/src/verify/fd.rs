//! Finite-difference oracle for the PDM Hamiltonian.
//!
//! The operator `-(ħ²/2) d/dx (1/M) d/dx + V` is discretized in flux form on
//! a uniform grid with Dirichlet walls. `1/M` is only sampled at half-grid
//! points, where it stays finite and vanishes continuously at the walls, and
//! `V` only at interior nodes.

use crate::error::{Error, Result};
use crate::models::WellModel;

use super::tridiag::SymTridiagonal;

/// Relative cutoff used to truncate the semiconfined domain.
pub const SEMI_TAIL_REL: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct TridiagonalOperator {
    pub matrix: SymTridiagonal,
    /// Interior grid nodes.
    pub grid: Vec<f64>,
    pub spacing: f64,
}

impl TridiagonalOperator {
    /// Discretizes `model` on `[a, x_max]` with `cells` cells, i.e.
    /// `cells - 1` interior unknowns.
    pub fn build(model: &WellModel, x_max: f64, cells: usize) -> Result<Self> {
        let a = model.a();
        if cells < 2 {
            return Err(Error::domain("cells", cells as f64, "at least 2 grid cells"));
        }
        if !(x_max > a) {
            return Err(Error::domain("x_max", x_max, "x_max > a"));
        }
        if let Some(b) = model.b() {
            if x_max > b {
                return Err(Error::domain("x_max", x_max, "x_max <= b"));
            }
        }
        let h = (x_max - a) / cells as f64;
        let hbar = model.phys().hbar;
        let kinetic = hbar * hbar / (2.0 * h * h);
        let flux: Vec<f64> = (0..cells)
            .map(|i| model.inverse_mass(a + h * (i as f64 + 0.5)))
            .collect();
        let grid: Vec<f64> = (1..cells).map(|i| a + h * i as f64).collect();
        let diag = grid
            .iter()
            .enumerate()
            .map(|(j, &x)| Ok(kinetic * (flux[j] + flux[j + 1]) + model.potential_at(x)?))
            .collect::<Result<Vec<f64>>>()?;
        let offdiag = (1..cells - 1).map(|j| -kinetic * flux[j]).collect();
        Ok(Self {
            matrix: SymTridiagonal::new(diag, offdiag)?,
            grid,
            spacing: h,
        })
    }

    /// Smallest potential value on the interior grid.
    pub fn min_potential(&self, model: &WellModel) -> f64 {
        self.grid
            .iter()
            .filter_map(|&x| model.potential_at(x).ok())
            .fold(f64::INFINITY, f64::min)
    }
}

/// Right end of the grid: `b`, or for the semiconfined model the point where
/// the `(k-1)`-th closed-form eigenfunction has decayed below
/// [`SEMI_TAIL_REL`] of its maximum.
pub fn oracle_extent(model: &WellModel, k: usize) -> Result<f64> {
    model.sampling_extent(k.saturating_sub(1), SEMI_TAIL_REL)
}

/// The `k` lowest eigenvalues of the finite-difference operator on a grid of
/// `grid_n` cells.
pub fn fd_oracle_spectrum(model: &WellModel, grid_n: usize, k: usize) -> Result<Vec<f64>> {
    if grid_n < 100 {
        return Err(Error::domain("grid_n", grid_n as f64, "grid_n >= 100"));
    }
    if k == 0 || k > grid_n - 1 {
        return Err(Error::InvalidArgument(format!(
            "k = {k} must lie in 1..={}",
            grid_n - 1
        )));
    }
    let x_max = oracle_extent(model, k)?;
    let op = TridiagonalOperator::build(model, x_max, grid_n)?;
    op.matrix.lowest_eigenvalues(k)
}

/// Richardson extrapolation from three successive grids with a fixed
/// refinement ratio. Returns `(extrapolated value, observed order)`.
///
/// The order is estimated from the data; when the differences do not shrink
/// (no asymptotic regime yet) the finest value is returned with order `NaN`.
pub fn richardson(coarse: f64, mid: f64, fine: f64, ratio: f64) -> (f64, f64) {
    let d1 = coarse - mid;
    let d2 = mid - fine;
    if d2 == 0.0 {
        return (fine, f64::INFINITY);
    }
    let q = d1 / d2;
    if !(q > 1.0) {
        return (fine, f64::NAN);
    }
    let order = q.ln() / ratio.ln();
    (fine - d2 / (q - 1.0), order)
}
