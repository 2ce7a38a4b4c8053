use crate::error::{Error, Result};

/// Degree and exponent parameters of a Jacobi polynomial `P_n^{(α,β)}`.
///
/// `α` belongs to the `(1 - z)` side of the orthogonality weight and `β` to
/// the `(1 + z)` side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    n: usize,
    alpha: f64,
    beta: f64,
}

impl JacobiParams {
    pub fn new(n: usize, alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > -1.0) || !alpha.is_finite() {
            return Err(Error::domain("alpha", alpha, "Jacobi alpha > -1"));
        }
        if !(beta > -1.0) || !beta.is_finite() {
            return Err(Error::domain("beta", beta, "Jacobi beta > -1"));
        }
        Ok(Self { n, alpha, beta })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `P_n^{(α,β)}(z)` by the three-term recurrence in the degree.
    pub fn eval(&self, z: f64) -> f64 {
        jacobi_recurrence(self.n, self.alpha, self.beta, z)
    }

    /// First derivative, `((n+α+β+1)/2) P_{n-1}^{(α+1,β+1)}(z)`.
    pub fn deriv(&self, z: f64) -> f64 {
        if self.n == 0 {
            return 0.0;
        }
        let s = self.alpha + self.beta;
        0.5 * (self.n as f64 + s + 1.0)
            * jacobi_recurrence(self.n - 1, self.alpha + 1.0, self.beta + 1.0, z)
    }

    /// Second derivative from applying the degree-lowering identity twice.
    pub fn second_deriv(&self, z: f64) -> f64 {
        if self.n < 2 {
            return 0.0;
        }
        let nf = self.n as f64;
        let s = self.alpha + self.beta;
        0.25 * (nf + s + 1.0)
            * (nf + s + 2.0)
            * jacobi_recurrence(self.n - 2, self.alpha + 2.0, self.beta + 2.0, z)
    }

    /// The two sides of `P_n^{(α,β)}(-z) = (-1)^n P_n^{(β,α)}(z)`.
    pub fn symmetry_check(&self, z: f64) -> (f64, f64) {
        let lhs = self.eval(-z);
        let swapped = jacobi_recurrence(self.n, self.beta, self.alpha, z);
        let rhs = if self.n.is_multiple_of(2) { swapped } else { -swapped };
        (lhs, rhs)
    }
}

/// Free-function form of [`JacobiParams::eval`].
pub fn jacobi_eval(p: &JacobiParams, z: f64) -> f64 {
    p.eval(z)
}

/// Free-function form of [`JacobiParams::deriv`].
pub fn jacobi_deriv(p: &JacobiParams, z: f64) -> f64 {
    p.deriv(z)
}

/// Free-function form of [`JacobiParams::symmetry_check`].
pub fn jacobi_symmetry_check(p: &JacobiParams, z: f64) -> (f64, f64) {
    p.symmetry_check(z)
}

pub(crate) fn jacobi_recurrence(n: usize, alpha: f64, beta: f64, z: f64) -> f64 {
    let p1 = (alpha + 1.0) + 0.5 * (alpha + beta + 2.0) * (z - 1.0);
    if n == 0 {
        return 1.0;
    }
    if n == 1 {
        return p1;
    }
    let ab = alpha + beta;
    let a2b2 = (alpha - beta) * ab;
    let mut prev = 1.0;
    let mut cur = p1;
    for k in 2..=n {
        let kf = k as f64;
        let c = 2.0 * kf + ab;
        // c - 2 > 0 for k >= 2 because α + β > -2
        let a1 = 2.0 * kf * (kf + ab) * (c - 2.0);
        let a2 = (c - 1.0) * a2b2;
        let a3 = (c - 2.0) * (c - 1.0) * c;
        let a4 = 2.0 * (kf + alpha - 1.0) * (kf + beta - 1.0) * c;
        let next = ((a2 + a3 * z) * cur - a4 * prev) / a1;
        prev = cur;
        cur = next;
    }
    cur
}
