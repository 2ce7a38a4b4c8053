use nalgebra::DMatrix;
use pdmwell_core::verify::fd::{fd_oracle_spectrum, oracle_extent, TridiagonalOperator};
use pdmwell_core::verify::limits::{
    jacobi_laguerre_limit_check, limit_energy_study, max_successive_ratio, weight_limit_check,
};
use pdmwell_core::verify::residual::{chebyshev_points, ode_residual, ode_residual_with_energy};
use pdmwell_core::verify::suites::{run_suite, Suite};
use pdmwell_core::verify::SymTridiagonal;
use pdmwell_core::{PhysParams, WellModel};
use proptest::prelude::*;

fn semi(a: f64) -> WellModel {
    WellModel::semiconfined(PhysParams::default(), a).unwrap()
}

fn conf(a: f64, b: f64) -> WellModel {
    WellModel::confined(PhysParams::default(), a, b).unwrap()
}

fn dense_eigenvalues(t: &SymTridiagonal) -> Vec<f64> {
    let n = t.dim();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = t.diag()[i];
        if i + 1 < n {
            m[(i, i + 1)] = t.offdiag()[i];
            m[(i + 1, i)] = t.offdiag()[i];
        }
    }
    let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

#[test]
fn bisection_matches_dense_solver_on_fd_operators() {
    for m in [conf(1.0, 2.0), semi(1.0)] {
        let op = TridiagonalOperator::build(&m, oracle_extent(&m, 4).unwrap(), 300).unwrap();
        let ours = op.matrix.lowest_eigenvalues(6).unwrap();
        let dense = dense_eigenvalues(&op.matrix);
        let scale = op.matrix.norm_inf();
        for (x, y) in ours.iter().zip(&dense) {
            assert!((x - y).abs() <= 1e-11 * scale, "{x} vs {y}");
        }
    }
}

#[test]
fn fd_errors_shrink_quadratically() {
    for m in [conf(1.0, 2.0), semi(1.0)] {
        let grids = [500, 1000, 2000, 4000];
        let table: Vec<Vec<f64>> = grids.iter().map(|&g| fd_oracle_spectrum(&m, g, 4).unwrap()).collect();
        for j in 0..4 {
            let exact = m.energy_level(j);
            let errs: Vec<f64> = table.iter().map(|row| (row[j] - exact).abs()).collect();
            for w in errs.windows(2) {
                let ratio = w[0] / w[1];
                assert!((3.5..4.5).contains(&ratio), "{:?} level {j}: {errs:?}", m.kind());
            }
        }
    }
}

#[test]
fn residuals_are_small_and_detect_energy_errors() {
    for m in [conf(1.0, 2.0), conf(1.5, 2.5), semi(1.0), semi(1.5)] {
        for n in 0..=8 {
            let hi = m.sampling_extent(n, 1e-12).unwrap();
            let xs = chebyshev_points(m.a(), hi, 100);
            let exact = ode_residual(&m, n, &xs).unwrap().into_iter().fold(0.0, f64::max);
            assert!(exact <= 1e-9, "{:?} n={n}: {exact:e}", m.kind());
            let e = m.energy_level(n) * 1.01;
            let off = ode_residual_with_energy(&m, n, e, &xs).unwrap().into_iter().fold(0.0, f64::max);
            assert!(off >= 1e4 * exact, "{:?} n={n}: {off:e} vs {exact:e}", m.kind());
        }
    }
}

#[test]
fn energy_limit_examples() {
    let p = PhysParams::default();
    let rows = limit_energy_study(&p, 1.0, 0, &[64.0, 128.0, 256.0]).unwrap();
    for w in rows.windows(2) {
        let r = w[0].error / w[1].error;
        assert!((1.7..=2.3).contains(&r), "{r}");
    }
    assert!(rows.iter().all(|r| r.energy_semi == 2.5));
}

#[test]
fn jacobi_laguerre_limit_examples() {
    let d = jacobi_laguerre_limit_check(1, 1.0, 2.0, &[100.0, 1000.0], &[1.5]).unwrap();
    let shrink = d[0] / d[1];
    assert!((9.0..11.0).contains(&shrink), "{shrink}");
    let grid: Vec<f64> = (1..=50).map(|i| 1.0 + 3.0 * i as f64 / 50.0).collect();
    let d = jacobi_laguerre_limit_check(3, 1.0, 2.0, &[10.0, 100.0, 1000.0, 10000.0], &grid).unwrap();
    assert!(max_successive_ratio(&d) < 1.0, "{d:?}");
    let d = jacobi_laguerre_limit_check(0, 1.0, 2.0, &[10.0, 100.0, 1000.0, 10000.0], &grid).unwrap();
    assert!(d.iter().all(|&v| v == 0.0));
}

#[test]
fn wavefunction_limit_examples() {
    let p = PhysParams::default();
    let bs: Vec<f64> = (0..7).map(|i| 8.0 * 2f64.powi(i)).collect();
    let d = weight_limit_check(&p, 0, 1.0, &bs, &[2.0]).unwrap();
    assert!(max_successive_ratio(&d) < 1.0, "{d:?}");
    let grid: Vec<f64> = (1..=30).map(|i| 1.0 + 3.0 * i as f64 / 31.0).collect();
    let d = weight_limit_check(&p, 2, 1.0, &[100.0, 1000.0], &grid).unwrap();
    assert!(d[1] < d[0], "{d:?}");
}

#[test]
fn every_suite_passes_at_reference_parameters() {
    for (m, n_max) in [(conf(1.0, 2.0), 10), (semi(1.0), 10), (conf(1.5, 2.5), 7), (semi(1.5), 3)] {
        let report = run_suite(Suite::All, &m, n_max).unwrap();
        let failures: Vec<_> = report.failures().map(|c| &c.id).collect();
        assert!(report.overall_pass, "{:?}: {failures:?}", m.kind());
        assert!(report.checks.len() > 10);
    }
}

#[test]
fn report_json_shape() {
    let report = run_suite(Suite::Ortho, &conf(1.0, 2.0), 3).unwrap();
    let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(v["suite"], "ortho");
    assert_eq!(v["overall_pass"], true);
    assert_eq!(v["parameters"]["model"], "confined");
    for c in v["checks"].as_array().unwrap() {
        for key in ["id", "observed", "bound", "pass"] {
            assert!(c.get(key).is_some(), "{key}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bisection_agrees_with_dense_solver_on_random_matrices(
        diag in proptest::collection::vec(-10.0f64..10.0, 2..40),
        seed in proptest::collection::vec(-3.0f64..3.0, 39),
    ) {
        let off = seed[..diag.len() - 1].to_vec();
        let t = SymTridiagonal::new(diag.clone(), off).unwrap();
        let k = diag.len().min(5);
        let ours = t.lowest_eigenvalues(k).unwrap();
        let dense = dense_eigenvalues(&t);
        for (x, y) in ours.iter().zip(&dense) {
            prop_assert!((x - y).abs() <= 1e-11 * t.norm_inf().max(1.0), "{} vs {}", x, y);
        }
        // Sturm counts bracket every eigenvalue
        for (j, &ev) in dense.iter().enumerate().take(k) {
            prop_assert!(t.sturm_count(ev - 1e-8) <= j);
            prop_assert!(t.sturm_count(ev + 1e-8) > j);
        }
    }
}
