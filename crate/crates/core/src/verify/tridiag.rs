//! Symmetric tridiagonal matrices and Sturm-sequence bisection.

use crate::error::{Error, Result};

const BISECTION_MAX_ITER: usize = 400;

#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl SymTridiagonal {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::InvalidArgument("empty tridiagonal matrix".into()));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::InvalidArgument(format!(
                "off-diagonal length {} does not match dimension {}",
                offdiag.len(),
                diag.len()
            )));
        }
        Ok(Self { diag, offdiag })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// Gershgorin interval containing every eigenvalue.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.dim();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.offdiag[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.offdiag[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// Max-row-sum norm.
    pub fn norm_inf(&self) -> f64 {
        let (lo, hi) = self.gershgorin();
        lo.abs().max(hi.abs())
    }

    /// Number of eigenvalues strictly below `lambda`: the count of negative
    /// pivots in the `LDLᵀ` factorization of `T - λI`.
    pub fn sturm_count(&self, lambda: f64) -> usize {
        let guard = f64::MIN_POSITIVE.sqrt() * self.norm_inf().max(1.0);
        let mut count = 0;
        let mut q = self.diag[0] - lambda;
        for i in 0..self.dim() {
            if i > 0 {
                let e = self.offdiag[i - 1];
                q = (self.diag[i] - lambda) - e * e / q;
            }
            if q == 0.0 {
                q = -guard;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `k` smallest eigenvalues in increasing order, each bracketed to an
    /// absolute width of `1e-15 · ‖T‖` (or to adjacent floats, whichever is wider).
    pub fn lowest_eigenvalues(&self, k: usize) -> Result<Vec<f64>> {
        if k > self.dim() {
            return Err(Error::InvalidArgument(format!(
                "requested {k} eigenvalues of a {}-dimensional matrix",
                self.dim()
            )));
        }
        let tol = 1e-15 * self.norm_inf().max(f64::MIN_POSITIVE);
        let (lo0, hi0) = self.gershgorin();
        let pad = tol + f64::EPSILON * lo0.abs().max(hi0.abs());
        let (lo0, hi0) = (lo0 - pad, hi0 + pad);
        let mut out = Vec::with_capacity(k);
        let mut lo = lo0;
        for index in 0..k {
            // eigenvalue `index` is the smallest λ with count(λ) > index
            let mut a = lo;
            let mut b = hi0;
            let mut converged = false;
            for _ in 0..BISECTION_MAX_ITER {
                let mid = 0.5 * (a + b);
                let floor = 4.0 * f64::EPSILON * a.abs().max(b.abs());
                if b - a <= tol.max(floor) || mid <= a || mid >= b {
                    converged = true;
                    break;
                }
                if self.sturm_count(mid) > index {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            if !converged {
                return Err(Error::NoConvergence {
                    what: "Sturm bisection",
                    iterations: BISECTION_MAX_ITER,
                });
            }
            let value = 0.5 * (a + b);
            out.push(value);
            lo = a;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn discrete_laplacian_eigenvalues() {
        // tridiag(-1, 2, -1) has eigenvalues 2 - 2cos(kπ/(n+1))
        let n = 50;
        let t = SymTridiagonal::new(vec![2.0; n], vec![-1.0; n - 1]).unwrap();
        let ev = t.lowest_eigenvalues(5).unwrap();
        for (j, v) in ev.iter().enumerate() {
            let exact = 2.0 - 2.0 * ((j + 1) as f64 * PI / (n + 1) as f64).cos();
            assert_relative_eq!(*v, exact, epsilon = 1e-9);
        }
    }

    #[test]
    fn sturm_counts_bracket_the_spectrum() {
        let t = SymTridiagonal::new(vec![1.0, 2.0, 3.0], vec![0.5, 0.5]).unwrap();
        let (lo, hi) = t.gershgorin();
        assert_eq!(t.sturm_count(lo - 1.0), 0);
        assert_eq!(t.sturm_count(hi + 1.0), 3);
    }

    #[test]
    fn one_by_one() {
        let t = SymTridiagonal::new(vec![4.25], vec![]).unwrap();
        let ev = t.lowest_eigenvalues(1).unwrap();
        assert!((ev[0] - 4.25).abs() < 1e-9);
    }

    #[test]
    fn too_many_eigenvalues_requested() {
        let t = SymTridiagonal::new(vec![1.0, 2.0], vec![0.1]).unwrap();
        assert!(t.lowest_eigenvalues(3).is_err());
        assert!(SymTridiagonal::new(vec![1.0, 2.0], vec![]).is_err());
        assert!(SymTridiagonal::new(vec![], vec![]).is_err());
    }
}
