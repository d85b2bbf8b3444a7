//! Weyl-integration quadrature: Schur orthogonality checks and the nested
//! commutator densities on SU(2).

use num_complex::Complex64;
use serde::Serialize;

use super::root_system::{character_at, weyl_numerator, PointData, RootKind, RootSystemData, TorusPoint};
use super::series::{choose_cutoff, TermBound};
use crate::error::{invalid, Error, Result};

/// Midpoint nodes on `[0, π]` with weights for `(2/π) sin²θ dθ`.
pub fn weyl_nodes(points: usize) -> (Vec<f64>, Vec<f64>) {
    let h = std::f64::consts::PI / points as f64;
    let theta: Vec<f64> = (0..points).map(|k| (k as f64 + 0.5) * h).collect();
    let w = theta.iter().map(|t| 2.0 / points as f64 * t.sin().powi(2)).collect();
    (theta, w)
}

/// `(2/π) ∫₀^π χ_n χ_m sin²θ dθ` by the midpoint rule.
pub fn schur_inner_a1(n: u32, m: u32, points: usize) -> f64 {
    let (theta, w) = weyl_nodes(points);
    theta
        .iter()
        .zip(&w)
        .map(|(&t, &wk)| {
            let (s, sn, sm) = (t.sin(), ((n + 1) as f64 * t).sin(), ((m + 1) as f64 * t).sin());
            wk * sn * sm / (s * s)
        })
        .sum()
}

/// `∫_G χ_λ conj(χ_μ)` by the Weyl integration formula on an `points × …` torus grid.
/// The integrand is `N_λ conj(N_μ)/|W|` with `N` the Weyl numerator, a trigonometric
/// polynomial, so no division by the denominator occurs.
pub fn schur_inner(rs: &RootSystemData, lambda: &[u32], mu: &[u32], points: usize) -> Complex64 {
    let h = 2.0 * std::f64::consts::PI / points as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    let grid: Vec<Vec<f64>> = match rs.kind {
        RootKind::A1 => (0..points).map(|i| vec![i as f64 * h]).collect(),
        RootKind::A2 => (0..points)
            .flat_map(|i| (0..points).map(move |j| vec![i as f64 * h, j as f64 * h]))
            .collect(),
    };
    for angles in &grid {
        let x = TorusPoint { kind: rs.kind, angles: angles.clone() };
        let ph = x.phases();
        acc += weyl_numerator(rs, lambda, &ph) * weyl_numerator(rs, mu, &ph).conj();
    }
    acc / (grid.len() as f64 * rs.weyl_order() as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadratureResult {
    /// Value at `2·points` nodes.
    pub value: f64,
    /// Value at `points` nodes.
    pub coarse: f64,
    pub points: usize,
    pub cutoff: f64,
}

/// Density `Q_n(w)` of `[[x_1, x_2], …, x_n]` on SU(2) against normalized Haar
/// measure, by the recursion `Q_n(w) = Σ_λ e^{−tp} χ_λ(w⁻¹)/d_λ ∫ |χ_λ|² Q_{n−1}`
/// with `Q_1 ≡ 1`. The result is accepted when doubling the node count changes it
/// by at most `tol·max(1, |Q|)`.
pub fn lie_n_commutator_density(
    rs: &RootSystemData,
    n: usize,
    w: &TorusPoint,
    t: f64,
    points: usize,
    tol: f64,
) -> Result<QuadratureResult> {
    if rs.kind != RootKind::A1 {
        return Err(invalid("nested commutator densities are implemented for A1 only"));
    }
    if !(2..=3).contains(&n) {
        return Err(invalid(format!("n must be 2 or 3, got {n}")));
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(invalid(format!("t must be positive, got {t}")));
    }
    if points < 200 {
        return Err(invalid(format!("need at least 200 quadrature points, got {points}")));
    }
    if !(tol > 0.0) {
        return Err(invalid(format!("tolerance must be positive, got {tol}")));
    }
    let target = PointData::new(rs, &w.inverse())?;
    let (coarse, _) = q_level(rs, n, &target, t, points, tol)?;
    let (value, cutoff) = q_level(rs, n, &target, t, 2 * points, tol)?;
    if (value - coarse).abs() > tol * value.abs().max(1.0) {
        return Err(Error::Resource(format!(
            "quadrature unresolved: {coarse} at {points} nodes vs {value} at {} nodes",
            2 * points
        )));
    }
    Ok(QuadratureResult { value, coarse, points, cutoff })
}

fn q_level(rs: &RootSystemData, n: usize, target: &PointData, t: f64, points: usize, tol: f64) -> Result<(f64, f64)> {
    let (theta, w) = weyl_nodes(points);
    let sines: Vec<f64> = theta.iter().map(|x| x.sin()).collect();
    let mut q: Vec<f64> = vec![1.0; points];
    let mut value = 0.0;
    let mut cutoff = 0.0;
    for level in 2..=n {
        // |χ(w)/d| ≤ 1 and ∫|χ|² Q ≤ sup |Q|
        let sup = q.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
        cutoff = choose_cutoff(rs, TermBound { k: sup, exponent: 0.0 }, t, tol * 1e-3)?;
        let weights: Vec<(u32, u64, f64)> = {
            let mut v = Vec::new();
            rs.for_each_weight(cutoff, |c, d, p| v.push((c[0], d, p)))?;
            v
        };
        let mut coeff = Vec::with_capacity(weights.len());
        for &(_, d, p) in &weights {
            let mut c = 0.0;
            for k in 0..points {
                let chi = (d as f64 * theta[k]).sin() / sines[k];
                c += w[k] * chi * chi * q[k];
            }
            coeff.push((-t * p).exp() * c / d as f64);
        }
        value = 0.0;
        for (&(l, d, _), &c) in weights.iter().zip(&coeff) {
            value += c * character_at(rs, &[l], d, target)?.re;
        }
        if level < n {
            q = (0..points)
                .map(|k| weights.iter().zip(&coeff).map(|(&(_, d, _), &c)| c * (d as f64 * theta[k]).sin() / sines[k]).sum())
                .collect();
        }
    }
    Ok((value, cutoff))
}
