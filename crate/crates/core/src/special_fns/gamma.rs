//! Log-gamma and log-Pochhammer on the positive real axis.
//!
//! `ln Γ(x)` is split into three regimes so that the result keeps full
//! relative accuracy everywhere on `(0, ∞)`, including next to its zeros at
//! `x = 1` and `x = 2`:
//!
//! - `x >= 15`: Stirling series with nine Bernoulli terms.
//! - `1.5 <= x <= 2.5` (or `0.5 <= x < 1.5` via `Γ(1+z) = Γ(2+z)/(1+z)`): the
//!   power series of `ln Γ(2+z)` in `z`, whose coefficients are `ζ(k) - 1`.
//! - everything else: the recurrence `Γ(x+1) = x Γ(x)` into one of the
//!   regimes above.

#![allow(clippy::excessive_precision)]

use std::f64::consts::PI;

use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_6;

/// `ζ(k) - 1` for `k = 2, 3, ..., 40`.
const ZETA_MINUS_ONE: [f64; 39] = [
    6.449_340_668_482_264e-1,
    2.020_569_031_595_942_9e-1,
    8.232_323_371_113_818_6e-2,
    3.692_775_514_336_992_7e-2,
    1.734_306_198_444_914e-2,
    8.349_277_381_922_827e-3,
    4.077_356_197_944_339_6e-3,
    2.008_392_826_082_214_3e-3,
    9.945_751_278_180_852_6e-4,
    4.941_886_041_194_645_3e-4,
    2.460_865_533_080_483_2e-4,
    1.227_133_475_784_891_5e-4,
    6.124_813_505_870_482_8e-5,
    3.058_823_630_702_049_3e-5,
    1.528_225_940_865_187_1e-5,
    7.637_197_637_899_762_6e-6,
    3.817_293_264_999_840_2e-6,
    1.908_212_716_553_939e-6,
    9.539_620_338_727_962e-7,
    4.769_329_867_878_064_5e-7,
    2.384_505_027_277_33e-7,
    1.192_199_259_653_110_6e-7,
    5.960_818_905_125_948e-8,
    2.980_350_351_465_228e-8,
    1.490_155_482_836_504_3e-8,
    7.450_711_789_835_43e-9,
    3.725_334_024_788_457_3e-9,
    1.862_659_723_513_049_1e-9,
    9.313_274_324_196_682e-10,
    4.656_629_065_033_784e-10,
    2.328_311_833_676_505_3e-10,
    1.164_155_017_270_051_9e-10,
    5.820_772_087_902_701e-11,
    2.910_385_044_497_1e-11,
    1.455_192_189_104_198_5e-11,
    7.275_959_835_057_482e-12,
    3.637_979_547_378_651e-12,
    1.818_989_650_307_066e-12,
    9.094_947_840_263_888e-13,
];

/// `B_{2k} / (2k (2k - 1))` for `k = 1..=9`.
const STIRLING: [f64; 9] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43867.0 / 244_188.0,
];

const STIRLING_MIN: f64 = 15.0;

/// `ln Γ(2 + z)` for `|z| <= 0.5`.
fn ln_gamma_two_plus(z: f64) -> f64 {
    // ln Γ(2+z) = (1-γ) z + Σ_{k>=2} (-1)^k (ζ(k)-1) z^k / k
    let mut sum = 0.0;
    let mut power = z * z;
    for (i, c) in ZETA_MINUS_ONE.iter().enumerate() {
        let k = (i + 2) as f64;
        let term = c * power / k;
        sum += if i % 2 == 0 { term } else { -term };
        power *= z;
    }
    (1.0 - EULER_GAMMA) * z + sum
}

fn ln_gamma_stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut power = inv;
    for c in STIRLING {
        series += c * power;
        power *= inv2;
    }
    (x - 0.5) * x.ln() - x + 0.5 * (2.0 * PI).ln() + series
}

/// Natural logarithm of the gamma function for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("x", x, "log_gamma requires finite x > 0"));
    }
    Ok(ln_gamma_positive(x))
}

pub(crate) fn ln_gamma_positive(x: f64) -> f64 {
    if x >= STIRLING_MIN {
        ln_gamma_stirling(x)
    } else if x < 0.5 {
        // Γ(x) = Γ(x+1) / x, with x + 1 in [1, 1.5)
        ln_gamma_positive(x + 1.0) - x.ln()
    } else if x < 1.5 {
        let z = x - 1.0;
        ln_gamma_two_plus(z) - z.ln_1p()
    } else if x <= 2.5 {
        ln_gamma_two_plus(x - 2.0)
    } else {
        // shift down into [1.5, 2.5]
        let mut y = x;
        let mut product = 1.0;
        while y > 2.5 {
            y -= 1.0;
            product *= y;
        }
        ln_gamma_two_plus(y - 2.0) + product.ln()
    }
}

/// `ln n!`.
pub fn ln_factorial(n: usize) -> f64 {
    if n < 2 {
        0.0
    } else {
        ln_gamma_positive(n as f64 + 1.0)
    }
}

/// Logarithm of the rising factorial `(x)_k = x (x+1) ... (x+k-1)` for `x > 0`.
pub fn pochhammer_log(x: f64, k: usize) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(
            "x",
            x,
            "pochhammer_log requires finite x > 0",
        ));
    }
    if k <= 32 {
        Ok((0..k).map(|j| (x + j as f64).ln()).sum())
    } else {
        Ok(ln_gamma_positive(x + k as f64) - ln_gamma_positive(x))
    }
}
