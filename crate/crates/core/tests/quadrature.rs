use approx::assert_relative_eq;
use pdmwell_core::quadrature::{
    gauss_legendre_rule, integrate_finite, integrate_semi_infinite, integrate_semi_infinite_with,
    truncation_point, SemiInfiniteOptions,
};
use proptest::prelude::*;

#[test]
fn monomials_are_exact_up_to_degree_two_m_minus_one() {
    for m in 1..=60 {
        let rule = gauss_legendre_rule(m).unwrap();
        for k in 0..2 * m {
            let got = rule.integrate(-1.0, 1.0, |z| z.powi(k as i32));
            let want = if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 };
            assert!((got - want).abs() <= 1e-12, "order {m}, z^{k}: {got} vs {want}");
        }
    }
}

#[test]
fn rules_are_symmetric_sorted_and_sum_to_two() {
    for m in [1, 2, 3, 7, 40, 64, 200, 400] {
        let rule = gauss_legendre_rule(m).unwrap();
        let (x, w) = (rule.nodes(), rule.weights());
        assert_eq!(x.len(), m);
        assert_eq!(w.len(), m);
        assert!(x.windows(2).all(|p| p[0] < p[1]));
        assert!(x.iter().all(|&z| z > -1.0 && z < 1.0));
        assert!(w.iter().all(|&v| v > 0.0));
        assert!((w.iter().sum::<f64>() - 2.0).abs() <= 1e-13);
        for i in 0..m {
            assert_eq!(x[i], -x[m - 1 - i]);
            assert_eq!(w[i], w[m - 1 - i]);
        }
    }
    assert!(gauss_legendre_rule(0).is_err());
}

#[test]
fn finite_examples() {
    for order in [1, 3, 9] {
        assert_relative_eq!(integrate_finite(|_| 1.0, 1.0, 2.0, order).unwrap(), 1.0, max_relative = 1e-13);
        assert_relative_eq!(integrate_finite(|x| x, 0.0, 2.0, order).unwrap(), 2.0, max_relative = 1e-13);
    }
    let beta = integrate_finite(|x| (x - 1.0).powi(2) * (2.0 - x).powi(3), 1.0, 2.0, 3).unwrap();
    assert_relative_eq!(beta, 1.0 / 60.0, max_relative = 1e-14);
    assert!(integrate_finite(|x| x, 2.0, 2.0, 4).is_err());
    assert!(integrate_finite(|x| x, 3.0, 2.0, 4).is_err());
}

#[test]
fn endpoint_singular_weight_converges_under_doubling() {
    // ∫_0^1 x^{1/2} (1-x)^{3/2} = B(3/2, 5/2) = π/16
    let f = |x: f64| x.sqrt() * (1.0 - x).powf(1.5);
    let coarse = integrate_finite(f, 0.0, 1.0, 200).unwrap();
    let fine = integrate_finite(f, 0.0, 1.0, 400).unwrap();
    let exact = std::f64::consts::PI / 16.0;
    assert!((fine - exact).abs() < (coarse - exact).abs());
    assert!((fine - exact).abs() < 1e-7);
}

#[test]
fn semi_infinite_examples() {
    let a = 1.5;
    let v = integrate_semi_infinite(|x| (-(x - a)).exp(), a, 1.0, 1e-14).unwrap();
    assert_relative_eq!(v, 1.0, max_relative = 1e-13);
    let v = integrate_semi_infinite(|x| (x - a) * (-2.0 * (x - a)).exp(), a, 2.0, 1e-14).unwrap();
    assert_relative_eq!(v, 0.25, max_relative = 1e-13);
    assert!(integrate_semi_infinite(|x| x, 0.0, 0.0, 1e-10).is_err());
    assert!(integrate_semi_infinite(|x| x, 0.0, -1.0, 1e-10).is_err());
    assert!(integrate_semi_infinite(|x| x, 0.0, 1.0, 0.0).is_err());
}

#[test]
fn gamma_moments_with_polynomial_growth() {
    // ∫_0^∞ t^k e^{-t} dt = k!
    let mut factorial = 1.0;
    for k in 0..=30 {
        if k > 0 {
            factorial *= k as f64;
        }
        let opts = SemiInfiniteOptions::new(1.0, 1e-15).poly_degree(k as f64);
        let v = integrate_semi_infinite_with(|t| t.powi(k) * (-t).exp(), 0.0, &opts).unwrap();
        assert_relative_eq!(v, factorial, max_relative = 1e-12);
    }
}

#[test]
fn truncation_reduces_to_ten_plus_log_for_pure_exponentials() {
    let opts = SemiInfiniteOptions::new(2.0, 1e-12);
    let x = truncation_point(3.0, &opts).unwrap();
    assert_relative_eq!(x, 3.0 + (1e12f64.ln() + 10.0) / 2.0, max_relative = 1e-14);
    // polynomial growth pushes the cutoff out
    let later = truncation_point(3.0, &opts.clone().poly_degree(20.0)).unwrap();
    assert!(later > x + 10.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn panel_doubling_is_stable(rate in 0.2f64..5.0, degree in 0.0f64..25.0, a in 0.0f64..3.0) {
        let tol = 1e-12;
        let f = |x: f64| (x - a).powf(degree) * (-rate * (x - a)).exp();
        let base = SemiInfiniteOptions::new(rate, tol).poly_degree(degree);
        let auto = integrate_semi_infinite_with(f, a, &base).unwrap();
        let panels = (((truncation_point(a, &base).unwrap() - a) * rate / 2.0).ceil() as usize).max(8);
        let doubled = integrate_semi_infinite_with(f, a, &base.clone().panels(2 * panels)).unwrap();
        prop_assert!((auto - doubled).abs() <= tol * auto.abs(), "{auto} vs {doubled}");
    }

    #[test]
    fn affine_mapping_preserves_polynomial_exactness(lo in -5.0f64..5.0, width in 0.01f64..10.0, c in -3.0f64..3.0) {
        let hi = lo + width;
        let f = |x: f64| c * x.powi(5) - x.powi(2) + 1.0;
        let antideriv = |x: f64| c * x.powi(6) / 6.0 - x.powi(3) / 3.0 + x;
        let got = integrate_finite(f, lo, hi, 3).unwrap();
        let want = antideriv(hi) - antideriv(lo);
        prop_assert!((got - want).abs() <= 1e-12 * (1.0 + want.abs() + c.abs() * hi.abs().max(lo.abs()).powi(6)));
    }
}
