use approx::assert_relative_eq;
use pdmwell_core::quadrature::integrate_finite;
use pdmwell_core::special_fns::sign_changes;
use pdmwell_core::{PhysParams, WellModel};
use proptest::prelude::*;

fn semi(a: f64) -> WellModel {
    WellModel::semiconfined(PhysParams::default(), a).unwrap()
}

fn conf(a: f64, b: f64) -> WellModel {
    WellModel::confined(PhysParams::default(), a, b).unwrap()
}

#[test]
fn reference_energies() {
    let c = conf(1.0, 2.0);
    for (n, e) in [(0, 9.5), (1, 13.0), (2, 17.0), (3, 21.5)] {
        assert_relative_eq!(c.energy_level(n), e, max_relative = 1e-15);
    }
    let s = semi(1.0);
    assert_relative_eq!(s.energy_level(0), 2.5, max_relative = 1e-15);
    assert_relative_eq!(s.energy_level(1), 3.5, max_relative = 1e-15);
}

#[test]
fn semiconfined_spectrum_is_equidistant() {
    for a in [0.5, 1.0, 1.5] {
        let t = semi(a).spectrum_table(21);
        for w in t.windows(2) {
            assert!((w[1].energy - w[0].energy - 1.0).abs() <= 1e-12);
        }
    }
}

#[test]
fn confined_second_difference_is_constant() {
    for (a, b) in [(1.0, 2.0), (1.5, 2.5), (0.5, 4.0)] {
        let t = conf(a, b).spectrum_table(22);
        for w in t.windows(3) {
            let d2 = w[2].energy - 2.0 * w[1].energy + w[0].energy;
            assert!((d2 - 1.0 / (a * b)).abs() <= 1e-12, "({a},{b}) n={}: {d2}", w[0].n);
        }
    }
}

#[test]
fn units_enter_through_hbar_omega() {
    let p = PhysParams::new(2.0, 3.0, 0.5).unwrap();
    let s = WellModel::semiconfined(p, 1.0).unwrap();
    assert_relative_eq!(s.energy_level(1) - s.energy_level(0), 1.5, max_relative = 1e-14);
    let c = WellModel::confined(p, 1.0, 2.0).unwrap();
    let d2 = c.energy_level(2) - 2.0 * c.energy_level(1) + c.energy_level(0);
    assert_relative_eq!(d2, 0.25 / (2.0 * 2.0), max_relative = 1e-12);
}

#[test]
fn confined_normalization_by_direct_quadrature() {
    // independent of the module's own Gram-matrix machinery
    for (a, b) in [(1.0, 2.0), (1.5, 2.5), (0.5, 4.0)] {
        let m = conf(a, b);
        for n in 0..=6 {
            // x = a + (b-a) sin²θ smooths the (x-a)^{2p} (b-x)^{2q} endpoint behavior
            let h = b - a;
            let f = |t: f64| {
                let (s, c) = t.sin_cos();
                m.density_at(n, a + h * s * s).unwrap() * 2.0 * h * s * c
            };
            let norm = integrate_finite(f, 0.0, std::f64::consts::FRAC_PI_2, 300).unwrap();
            assert!((norm - 1.0).abs() < 1e-8, "({a},{b}) n={n}: {norm}");
        }
    }
}

#[test]
fn wavefunctions_vanish_at_walls_and_reject_outside_points() {
    let c = conf(1.0, 2.0);
    let s = semi(1.5);
    for n in 0..5 {
        assert_eq!(c.wavefunction_at(n, 1.0).unwrap(), 0.0);
        assert_eq!(c.wavefunction_at(n, 2.0).unwrap(), 0.0);
        assert_eq!(s.wavefunction_at(n, 1.5).unwrap(), 0.0);
        assert!(c.wavefunction_at(n, 0.99).is_err());
        assert!(c.wavefunction_at(n, 2.01).is_err());
        assert!(s.wavefunction_at(n, 1.4).is_err());
    }
}

#[test]
fn node_counts() {
    for m in [conf(1.0, 2.0), conf(1.5, 2.5), semi(1.0), semi(1.5)] {
        for n in 0..=10 {
            let grid = m.sampling_grid(10, 20_000).unwrap();
            let psi = grid.iter().map(|&x| m.wavefunction_at(n, x).unwrap());
            assert_eq!(sign_changes(psi), n, "{:?} n={n}", m.kind());
        }
    }
}

#[test]
fn density_table_layout() {
    let m = conf(1.0, 2.0);
    let rows = m.density_table(2, 5).unwrap();
    assert_eq!(rows.len(), 15);
    let xs: Vec<f64> = rows[..5].iter().map(|r| r.x).collect();
    assert_eq!(xs, vec![1.0, 1.25, 1.5, 1.75, 2.0]);
    for block in rows.chunks(5) {
        let n = block[0].n;
        assert!(block.iter().all(|r| r.n == n));
        assert_eq!(block[0].density, 0.0);
        assert_eq!(block[4].density, 0.0);
    }
    assert!(m.density_table(2, 1).is_err());
    let s = semi(1.0);
    let rows = s.density_table(3, 400).unwrap();
    let last = rows.last().unwrap();
    assert!(last.density < 1e-20);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn density_is_nonnegative_and_finite(a in 0.3f64..3.0, width in 0.3f64..4.0, n in 0usize..12, t in 0.0f64..=1.0) {
        let c = conf(a, a + width);
        let x = a + t * width;
        let d = c.density_at(n, x).unwrap();
        prop_assert!(d.is_finite() && d >= 0.0);
        let s = semi(a);
        let d = s.density_at(n, a + 20.0 * t).unwrap();
        prop_assert!(d.is_finite() && d >= 0.0);
    }

    #[test]
    fn ground_state_has_no_nodes(a in 0.3f64..3.0, width in 0.3f64..4.0) {
        let c = conf(a, a + width);
        let grid = c.sampling_grid(0, 500).unwrap();
        prop_assert!(grid[1..499].iter().all(|&x| c.wavefunction_at(0, x).unwrap() != 0.0));
        prop_assert_eq!(sign_changes(grid.iter().map(|&x| c.wavefunction_at(0, x).unwrap())), 0);
    }
}
