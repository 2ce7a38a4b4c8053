use crate::error::Result;
use crate::models::WellModel;
use crate::quadrature::{gauss_legendre_rule, semi_infinite_rule, SemiInfiniteOptions};

/// Truncation tolerance for semi-infinite overlap integrals.
pub const SEMI_TAIL_TOL: f64 = 1e-15;

/// Quadrature nodes and weights covering the model domain.
///
/// Confined models use one Gauss-Legendre rule of order `quad_order` in
/// `θ ∈ [0, π/2]` with `x = a + (b - a) sin²θ`, which turns the
/// `(x - a)^{2p} (b - x)^{2q}` endpoint behavior into odd powers of `sin θ`
/// and `cos θ` that the rule resolves far better. Semiconfined models use graded composite panels of order
/// `quad_order` each, truncated for states up to `n_max`.
pub fn domain_rule(model: &WellModel, n_max: usize, quad_order: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let a = model.a();
    match model.b() {
        Some(b) => {
            let rule = gauss_legendre_rule(quad_order)?;
            let h = b - a;
            Ok(rule
                .mapped(0.0, std::f64::consts::FRAC_PI_2)
                .map(|(t, w)| {
                    let (s, c) = t.sin_cos();
                    (a + h * s * s, w * 2.0 * h * s * c)
                })
                .unzip())
        }
        None => {
            // ψ_m ψ_n ~ (x-a)^{2p + m + n} e^{-2 λ0² a (x-a)}
            let w = model.weight_exponents();
            let opts = SemiInfiniteOptions::new(2.0 * model.lambda0_sq() * a, SEMI_TAIL_TOL)
                .poly_degree(2.0 * w.left + 2.0 * n_max as f64)
                .panel_order(quad_order);
            let rule = semi_infinite_rule(a, &opts)?;
            Ok((rule.nodes, rule.weights))
        }
    }
}

/// Gram matrix `G[m][n] = ∫ ψ_m ψ_n` for `m, n <= n_max`.
pub fn orthonormality_matrix(model: &WellModel, n_max: usize, quad_order: usize) -> Result<Vec<Vec<f64>>> {
    let (nodes, weights) = domain_rule(model, n_max, quad_order)?;
    let states: Vec<Vec<f64>> = (0..=n_max)
        .map(|n| {
            nodes
                .iter()
                .map(|&x| model.wavefunction_at(n, x))
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<_>>()?;
    let mut gram = vec![vec![0.0; n_max + 1]; n_max + 1];
    for m in 0..=n_max {
        for n in m..=n_max {
            let v: f64 = weights
                .iter()
                .zip(states[m].iter().zip(&states[n]))
                .map(|(w, (pm, pn))| w * pm * pn)
                .sum();
            gram[m][n] = v;
            gram[n][m] = v;
        }
    }
    Ok(gram)
}

/// `max |G - I|`.
pub fn max_identity_deviation(gram: &[Vec<f64>]) -> f64 {
    gram.iter()
        .enumerate()
        .flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, &g)| (g - if i == j { 1.0 } else { 0.0 }).abs())
        })
        .fold(0.0, f64::max)
}

/// `max |G1 - G2|` entrywise.
pub fn max_difference(g1: &[Vec<f64>], g2: &[Vec<f64>]) -> f64 {
    g1.iter()
        .zip(g2)
        .flat_map(|(r1, r2)| r1.iter().zip(r2).map(|(x, y)| (x - y).abs()))
        .fold(0.0, f64::max)
}
