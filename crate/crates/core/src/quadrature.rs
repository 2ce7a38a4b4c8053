//! Gauss-Legendre rules and the integration drivers used by the verifier.
//!
//! Finite intervals are handled by a single affine-mapped rule. Semi-infinite
//! integrals `∫_a^∞ f` are truncated where an envelope `t^d e^{-r t}` has
//! dropped below the requested tolerance, and the remaining interval is
//! covered by composite panels. The first panel is graded geometrically
//! towards `a`, where the integrands in this crate carry a fractional power
//! `(x - a)^p`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const NEWTON_TOL: f64 = 1e-15;
const NEWTON_MAX_ITER: usize = 100;

/// Nodes and weights of an `order`-point Gauss-Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Nodes in strictly increasing order.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Nodes and weights mapped onto `[a, b]`.
    pub fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&z, &w)| (mid + half * z, half * w))
    }

    /// `∫_a^b f` with this rule; no check on the interval orientation.
    pub fn integrate<F: Fn(f64) -> f64>(&self, a: f64, b: f64, f: F) -> f64 {
        self.mapped(a, b).map(|(x, w)| w * f(x)).sum()
    }
}

/// Legendre `P_n(z)` and `P_{n-1}(z)`.
fn legendre_pair(n: usize, z: f64) -> (f64, f64) {
    let mut prev = 1.0;
    let mut cur = z;
    for k in 2..=n {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0) * z * cur - (kf - 1.0) * prev) / kf;
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

/// Builds the Gauss-Legendre rule of the given order.
///
/// Roots are found by Newton iteration from the Chebyshev-like guesses
/// `cos(π (i - 1/4) / (n + 1/2))`; the positive half is computed and mirrored.
pub fn gauss_legendre_rule(order: usize) -> Result<QuadratureRule> {
    if order == 0 {
        return Err(Error::domain("order", 0.0, "quadrature order >= 1"));
    }
    let n = order;
    let nf = n as f64;
    let half = n / 2;
    let mut upper = Vec::with_capacity(half);
    for i in 1..=half {
        let mut z = (PI * (i as f64 - 0.25) / (nf + 0.5)).cos();
        let mut converged = false;
        let mut dp = 0.0;
        for _ in 0..NEWTON_MAX_ITER {
            let (p, p_prev) = legendre_pair(n, z);
            dp = nf * (z * p - p_prev) / (z * z - 1.0);
            let dz = p / dp;
            z -= dz;
            if dz.abs() < NEWTON_TOL {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence {
                what: "Legendre root Newton iteration",
                iterations: NEWTON_MAX_ITER,
            });
        }
        let (p, p_prev) = legendre_pair(n, z);
        if p != 0.0 {
            dp = nf * (z * p - p_prev) / (z * z - 1.0);
        }
        upper.push((z, 2.0 / ((1.0 - z * z) * dp * dp)));
    }

    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for &(z, w) in &upper {
        nodes.push(-z);
        weights.push(w);
    }
    if n % 2 == 1 {
        let (_, p_prev) = legendre_pair(n, 0.0);
        // P_n'(0) = n P_{n-1}(0) for odd n
        let dp = nf * p_prev;
        nodes.push(0.0);
        weights.push(2.0 / (dp * dp));
    }
    for &(z, w) in upper.iter().rev() {
        nodes.push(z);
        weights.push(w);
    }
    Ok(QuadratureRule { nodes, weights })
}

/// Affine-mapped Gauss-Legendre estimate of `∫_a^b f`.
pub fn integrate_finite<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, order: usize) -> Result<f64> {
    if !(a < b) {
        return Err(Error::InvalidArgument(format!(
            "integration interval requires a < b, got a = {a}, b = {b}"
        )));
    }
    Ok(gauss_legendre_rule(order)?.integrate(a, b, f))
}

/// Controls for [`integrate_semi_infinite_with`].
#[derive(Debug, Clone, PartialEq)]
pub struct SemiInfiniteOptions {
    /// Exponential decay rate `r` of the integrand envelope.
    pub decay_rate: f64,
    /// Target truncation error, relative to the envelope peak.
    pub tail_tol: f64,
    /// Power `d` in the envelope `(x - a)^d e^{-r (x - a)}`; need not be an integer.
    pub poly_degree: f64,
    /// Gauss-Legendre order used on each panel.
    pub panel_order: usize,
    /// Number of uniform panels; `None` picks one panel per two decay lengths.
    pub panels: Option<usize>,
}

impl SemiInfiniteOptions {
    pub fn new(decay_rate: f64, tail_tol: f64) -> Self {
        Self {
            decay_rate,
            tail_tol,
            poly_degree: 0.0,
            panel_order: 40,
            panels: None,
        }
    }

    pub fn poly_degree(mut self, degree: f64) -> Self {
        self.poly_degree = degree;
        self
    }

    pub fn panel_order(mut self, order: usize) -> Self {
        self.panel_order = order;
        self
    }

    pub fn panels(mut self, panels: usize) -> Self {
        self.panels = Some(panels);
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.decay_rate > 0.0) || !self.decay_rate.is_finite() {
            return Err(Error::domain("decay_rate", self.decay_rate, "decay_rate > 0"));
        }
        if !(self.tail_tol > 0.0) || !(self.tail_tol < 1.0) {
            return Err(Error::domain("tail_tol", self.tail_tol, "0 < tail_tol < 1"));
        }
        if !(self.poly_degree >= 0.0) {
            return Err(Error::domain("poly_degree", self.poly_degree, "poly_degree >= 0"));
        }
        if self.panels == Some(0) {
            return Err(Error::domain("panels", 0.0, "panels >= 1"));
        }
        Ok(())
    }
}

/// Smallest `t >= d` with `t^d e^{-t} <= tol * d^d e^{-d}`, i.e. the point
/// where the envelope has fallen to `tol` of its peak (in decay lengths).
fn envelope_cutoff(degree: f64, tol: f64) -> f64 {
    let target = tol.ln();
    if degree == 0.0 {
        return -target;
    }
    // g(t) = d ln(t/d) - (t - d) is decreasing for t > d
    let g = |t: f64| degree * (t / degree).ln() - (t - degree);
    let mut lo = degree;
    let mut hi = degree - target + 1.0;
    while g(hi) > target {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-12 * hi {
            break;
        }
    }
    hi
}

/// Truncation point for `∫_a^∞`: the envelope cutoff plus ten decay lengths.
pub fn truncation_point(a: f64, opts: &SemiInfiniteOptions) -> Result<f64> {
    opts.validate()?;
    let t = envelope_cutoff(opts.poly_degree, opts.tail_tol) + 10.0;
    Ok(a + t / opts.decay_rate)
}

/// Composite nodes and weights covering `[a, x_max]`.
#[derive(Debug, Clone)]
pub struct CompositeRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl CompositeRule {
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

const GRADING_RATIO: f64 = 0.15;
const GRADING_LEVELS: usize = 10;

/// Builds the composite rule used by [`integrate_semi_infinite_with`].
pub fn semi_infinite_rule(a: f64, opts: &SemiInfiniteOptions) -> Result<CompositeRule> {
    let x_max = truncation_point(a, opts)?;
    let rule = gauss_legendre_rule(opts.panel_order)?;
    let span = x_max - a;
    let panels = opts
        .panels
        .unwrap_or_else(|| ((span * opts.decay_rate / 2.0).ceil() as usize).max(8));
    let width = span / panels as f64;

    let mut edges = Vec::with_capacity(panels + GRADING_LEVELS + 1);
    edges.push(a);
    for level in (1..=GRADING_LEVELS).rev() {
        edges.push(a + width * GRADING_RATIO.powi(level as i32));
    }
    for i in 1..=panels {
        edges.push(a + width * i as f64);
    }

    let mut nodes = Vec::with_capacity(rule.order() * (edges.len() - 1));
    let mut weights = Vec::with_capacity(nodes.capacity());
    for pair in edges.windows(2) {
        for (x, w) in rule.mapped(pair[0], pair[1]) {
            nodes.push(x);
            weights.push(w);
        }
    }
    Ok(CompositeRule { nodes, weights })
}

/// `∫_a^∞ f` for integrands decaying like `e^{-decay_rate (x - a)}`.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    decay_rate: f64,
    tail_tol: f64,
) -> Result<f64> {
    integrate_semi_infinite_with(f, a, &SemiInfiniteOptions::new(decay_rate, tail_tol))
}

pub fn integrate_semi_infinite_with<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    opts: &SemiInfiniteOptions,
) -> Result<f64> {
    Ok(semi_infinite_rule(a, opts)?.integrate(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn order_one_and_two() {
        let r = gauss_legendre_rule(1).unwrap();
        assert_eq!(r.nodes(), &[0.0]);
        assert_relative_eq!(r.weights()[0], 2.0, max_relative = 1e-15);

        let r = gauss_legendre_rule(2).unwrap();
        let s = 1.0 / 3f64.sqrt();
        assert_relative_eq!(r.nodes()[0], -s, max_relative = 1e-15);
        assert_relative_eq!(r.nodes()[1], s, max_relative = 1e-15);
        assert_relative_eq!(r.weights()[0], 1.0, max_relative = 1e-14);
        assert_relative_eq!(r.weights()[1], 1.0, max_relative = 1e-14);
    }

    #[test]
    fn quartic_with_three_points() {
        let v = integrate_finite(|z| z.powi(4), -1.0, 1.0, 3).unwrap();
        assert_relative_eq!(v, 0.4, max_relative = 1e-14);
    }

    #[test]
    fn order_zero_is_an_error() {
        assert!(matches!(gauss_legendre_rule(0), Err(Error::Domain { .. })));
    }

    #[test]
    fn finite_examples() {
        for order in [1, 4, 9] {
            assert_relative_eq!(integrate_finite(|_| 1.0, 1.0, 2.0, order).unwrap(), 1.0, max_relative = 1e-14);
            assert_relative_eq!(integrate_finite(|x| x, 0.0, 2.0, order).unwrap(), 2.0, max_relative = 1e-14);
        }
        let beta = integrate_finite(|x| (x - 1.0).powi(2) * (2.0 - x).powi(3), 1.0, 2.0, 3).unwrap();
        assert_relative_eq!(beta, 1.0 / 60.0, max_relative = 1e-13);
    }

    #[test]
    fn finite_rejects_empty_interval() {
        assert!(integrate_finite(|x| x, 2.0, 2.0, 5).is_err());
        assert!(integrate_finite(|x| x, 3.0, 2.0, 5).is_err());
    }

    #[test]
    fn semi_infinite_examples() {
        let a = 1.3;
        let v = integrate_semi_infinite(|x| (-(x - a)).exp(), a, 1.0, 1e-14).unwrap();
        assert_relative_eq!(v, 1.0, max_relative = 1e-13);
        let opts = SemiInfiniteOptions::new(2.0, 1e-14).poly_degree(1.0);
        let v = integrate_semi_infinite_with(|x| (x - a) * (-2.0 * (x - a)).exp(), a, &opts).unwrap();
        assert_relative_eq!(v, 0.25, max_relative = 1e-13);
    }

    #[test]
    fn semi_infinite_fractional_power_at_left_end() {
        // ∫_0^∞ t^{1/2} e^{-t} dt = Γ(3/2) = √π / 2
        let opts = SemiInfiniteOptions::new(1.0, 1e-15).poly_degree(0.5);
        let v = integrate_semi_infinite_with(|x| x.sqrt() * (-x).exp(), 0.0, &opts).unwrap();
        assert_relative_eq!(v, 0.5 * PI.sqrt(), max_relative = 1e-11);
    }

    #[test]
    fn semi_infinite_rejects_bad_controls() {
        assert!(integrate_semi_infinite(|x| x, 0.0, 0.0, 1e-10).is_err());
        assert!(integrate_semi_infinite(|x| x, 0.0, 1.0, 0.0).is_err());
        assert!(integrate_semi_infinite(|x| x, 0.0, -1.0, 1e-10).is_err());
    }

    #[test]
    fn envelope_cutoff_reaches_tolerance() {
        for &d in &[0.0, 1.0, 4.5, 22.0] {
            let t = envelope_cutoff(d, 1e-12);
            let log_ratio = if d == 0.0 { -t } else { d * (t / d).ln() - (t - d) };
            assert!(log_ratio <= 1e-12f64.ln() + 1e-9, "d = {d}");
            assert!(log_ratio > 1e-12f64.ln() - 1e-6, "d = {d} cutoff not tight");
        }
    }
}
