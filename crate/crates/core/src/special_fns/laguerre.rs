use crate::error::{Error, Result};

/// Degree and order parameter of a generalized Laguerre polynomial `L_n^{(α)}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaguerreParams {
    n: usize,
    alpha: f64,
}

impl LaguerreParams {
    pub fn new(n: usize, alpha: f64) -> Result<Self> {
        if !(alpha > -1.0) || !alpha.is_finite() {
            return Err(Error::domain("alpha", alpha, "Laguerre alpha > -1"));
        }
        Ok(Self { n, alpha })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn eval(&self, z: f64) -> f64 {
        laguerre_recurrence(self.n, self.alpha, z)
    }

    /// `d/dz L_n^{(α)} = -L_{n-1}^{(α+1)}`.
    pub fn deriv(&self, z: f64) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            -laguerre_recurrence(self.n - 1, self.alpha + 1.0, z)
        }
    }

    pub fn second_deriv(&self, z: f64) -> f64 {
        if self.n < 2 {
            0.0
        } else {
            laguerre_recurrence(self.n - 2, self.alpha + 2.0, z)
        }
    }
}

pub fn laguerre_eval(p: &LaguerreParams, z: f64) -> f64 {
    p.eval(z)
}

pub fn laguerre_deriv(p: &LaguerreParams, z: f64) -> f64 {
    p.deriv(z)
}

pub(crate) fn laguerre_recurrence(n: usize, alpha: f64, z: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = alpha + 1.0 - z;
    for k in 2..=n {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0 + alpha - z) * cur - (kf - 1.0 + alpha) * prev) / kf;
        prev = cur;
        cur = next;
    }
    cur
}
