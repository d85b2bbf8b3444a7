//! Monte-Carlo histograms of SU(2) torus angles and their exact bin probabilities.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use super::root_system::{RootKind, RootSystemData};
use super::series::{choose_cutoff, tail_bound, TermBound};
use crate::error::{invalid, Error, Result};

const SHARD: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SampleMap {
    /// Angle of `[x, y]` for Haar-random `x, y`.
    Commutator,
    /// Angle of a Haar-random `x`.
    Identity,
}

/// Counts of sampled angles over equal bins of `[0, π]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Histogram {
    pub seed: u64,
    pub samples: u64,
    pub map: SampleMap,
    pub counts: Vec<u64>,
}

impl Histogram {
    pub fn frequencies(&self) -> Vec<f64> {
        self.counts.iter().map(|&c| c as f64 / self.samples as f64).collect()
    }
}

type Quat = [f64; 4];

fn haar_quaternion(rng: &mut ChaCha8Rng) -> Quat {
    loop {
        let q: Quat = [rng.sample(StandardNormal), rng.sample(StandardNormal), rng.sample(StandardNormal), rng.sample(StandardNormal)];
        let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-12 {
            return q.map(|x| x / n);
        }
    }
}

fn qmul(a: Quat, b: Quat) -> Quat {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn conj(a: Quat) -> Quat {
    [a[0], -a[1], -a[2], -a[3]]
}

/// Eigenvalues `e^{±iθ}` of a unit quaternion: `θ = acos(Re q)`.
fn angle(q: Quat) -> f64 {
    q[0].clamp(-1.0, 1.0).acos()
}

/// Histogram of commutator angles `θ([x, y]) ∈ [0, π]`.
pub fn mc_commutator_histogram(seed: u64, samples: u64, bins: usize) -> Result<Histogram> {
    mc_angle_histogram(seed, samples, bins, SampleMap::Commutator)
}

/// Histogram of torus angles under `map`. Samples are drawn in shards of
/// 2^16, shard `i` using stream `i` of the ChaCha8 generator seeded by `seed`,
/// so the result does not depend on the thread count.
pub fn mc_angle_histogram(seed: u64, samples: u64, bins: usize, map: SampleMap) -> Result<Histogram> {
    if samples < 10_000 {
        return Err(invalid(format!("need at least 10000 samples, got {samples}")));
    }
    if bins == 0 {
        return Err(invalid("need at least one bin"));
    }
    let shards = samples.div_ceil(SHARD);
    let partial: Vec<Vec<u64>> = (0..shards)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i);
            let n = SHARD.min(samples - i * SHARD);
            let mut counts = vec![0u64; bins];
            for _ in 0..n {
                let x = haar_quaternion(&mut rng);
                let q = match map {
                    SampleMap::Identity => x,
                    SampleMap::Commutator => {
                        let y = haar_quaternion(&mut rng);
                        qmul(qmul(x, y), qmul(conj(x), conj(y)))
                    }
                };
                let b = ((angle(q) / PI * bins as f64) as usize).min(bins - 1);
                counts[b] += 1;
            }
            counts
        })
        .collect();
    let mut counts = vec![0u64; bins];
    for p in &partial {
        for (c, v) in counts.iter_mut().zip(p) {
            *c += v;
        }
    }
    Ok(Histogram { seed, samples, map, counts })
}

/// Haar probabilities of the angle bins: `∫ (2/π) sin²θ = (θ − sinθ cosθ)/π`.
pub fn weyl_bin_probabilities(bins: usize) -> Vec<f64> {
    let cdf = |x: f64| (x - x.sin() * x.cos()) / PI;
    (0..bins)
        .map(|i| cdf((i + 1) as f64 * PI / bins as f64) - cdf(i as f64 * PI / bins as f64))
        .collect()
}

/// Bin probabilities with their common truncation bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BinProbabilities {
    pub probabilities: Vec<f64>,
    pub tail_bound: f64,
    pub terms_used: u64,
}

/// Probabilities of the angle bins under the genus-`g` commutator density
/// `Σ_m e^{−t(m²−1)/2} χ_m(θ)/m^{2g−1}` times Haar measure, integrated exactly
/// term by term: `(2/π) sin(mθ) sinθ = (cos((m−1)θ) − cos((m+1)θ))/π`.
pub fn commutator_bin_probabilities(genus: usize, t: f64, bins: usize, tol: f64) -> Result<BinProbabilities> {
    if genus == 0 || bins == 0 {
        return Err(invalid("need genus ≥ 1 and at least one bin"));
    }
    if !(t >= 0.0) || !(tol > 0.0) {
        return Err(invalid("need t ≥ 0 and a positive tolerance"));
    }
    let rs = RootSystemData::new(RootKind::A1);
    // per bin |term_m| ≤ (8/π) m^{−2g} e^{−tp}
    let bound = TermBound { k: 8.0 / PI, exponent: -2.0 * genus as f64 };
    let cutoff = choose_cutoff(&rs, bound, t, tol / 2.0)?;
    let m_max = rs.count_weights(cutoff);
    let edges: Vec<f64> = (0..=bins).map(|i| i as f64 * PI / bins as f64).collect();
    let cos_integral = |j: u64, a: f64, b: f64| {
        if j == 0 {
            b - a
        } else {
            let j = j as f64;
            ((j * b).sin() - (j * a).sin()) / j
        }
    };
    let probabilities: Vec<f64> = edges
        .windows(2)
        .map(|e| {
            let mut acc = 0.0;
            for m in (1..=m_max).rev() {
                let mf = m as f64;
                let weight = (-t * (mf * mf - 1.0) / 2.0).exp() / mf.powi(2 * genus as i32 - 1);
                acc += weight * (cos_integral(m - 1, e[0], e[1]) - cos_integral(m + 1, e[0], e[1])) / PI;
            }
            acc
        })
        .collect();
    let tail = tail_bound(&rs, cutoff, bound, t) + 1e-14 * m_max as f64;
    if !(tail < tol) {
        return Err(Error::Resource(format!("bin tail bound {tail:e} above tolerance {tol:e}")));
    }
    Ok(BinProbabilities { probabilities, tail_bound: tail, terms_used: m_max })
}

/// `½ Σ |p_i − q_i|`
pub fn total_variation(p: &[f64], q: &[f64]) -> Result<f64> {
    if p.len() != q.len() {
        return Err(invalid(format!("distributions have {} and {} bins", p.len(), q.len())));
    }
    Ok(0.5 * p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum::<f64>())
}
