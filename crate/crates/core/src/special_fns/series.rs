//! Terminating hypergeometric sums for the Jacobi and Laguerre polynomials.
//!
//! These are cross-check oracles for the recurrences in [`super::jacobi`] and
//! [`super::laguerre`]. The alternating sums cancel badly in floating point
//! (about two digits lost per degree at large parameters), so they are
//! evaluated in exact rational arithmetic and rounded once at the end. Every
//! finite `f64` is a dyadic rational, so the only error is that final
//! rounding. Slow; not used on any production path.

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{JacobiParams, LaguerreParams};

fn exact(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite parameters")
}

fn int(k: usize) -> BigRational {
    BigRational::from_integer(k.into())
}

fn round(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `P_n^{(α,β)}(z) = ((α+1)_n / n!) Σ_k (-n)_k (n+α+β+1)_k / ((α+1)_k 2^k k!) (1-z)^k`.
pub fn jacobi_series(p: &JacobiParams, z: f64) -> f64 {
    let n = p.n();
    let alpha = exact(p.alpha());
    let s = &alpha + exact(p.beta());
    let w = BigRational::one() - exact(z);
    let mut prefactor = BigRational::one();
    for j in 1..=n {
        prefactor = prefactor * (&alpha + int(j)) / int(j);
    }
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    for k in 1..=n {
        let kf = int(k);
        term = term * (int(k - 1) - int(n)) * (int(n) + &s + &kf) * &w
            / ((&alpha + &kf) * int(2) * &kf);
        sum += &term;
    }
    round(&(prefactor * sum))
}

/// `L_n^{(α)}(z) = (1/n!) Σ_k ((-n)_k / k!) (α+k+1)_{n-k} z^k`.
pub fn laguerre_series(p: &LaguerreParams, z: f64) -> f64 {
    let n = p.n();
    let alpha = exact(p.alpha());
    let z = exact(z);
    let mut sum = BigRational::zero();
    let mut z_pow = BigRational::one();
    for k in 0..=n {
        // (-n)_k / (n! k!) = (-1)^k / ((n-k)! k!)
        let mut term = z_pow.clone();
        for j in (1..=n - k).chain(1..=k) {
            term /= int(j);
        }
        for j in 0..n - k {
            term *= &alpha + int(k + 1 + j);
        }
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        z_pow *= &z;
    }
    round(&sum)
}
