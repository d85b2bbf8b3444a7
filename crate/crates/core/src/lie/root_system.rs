//! Root data, dominant weights, torus points and Weyl-formula characters for
//! A1 (SU(2)) and A2 (SU(3)).
//!
//! Weights are written in the fundamental-weight basis. The torus of SU(r+1)
//! is parametrized by phases `φ_1, …, φ_{r+1}` summing to zero, and a weight
//! `μ = Σ μ_i ω_i` pairs with it as `⟨μ, C⟩ = Σ_i μ_i (φ_1 + … + φ_i)`.
//! The inner product is normalized so that roots have squared length 2.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{invalid, parse_err, Error, Result};

/// `|Weyl denominator|` at or below this marks a point as singular.
pub const REGULAR_TOL: f64 = 1e-12;
/// Distance within which a point is treated as central (including the identity).
pub const CENTRAL_TOL: f64 = 1e-8;
/// Most dominant weights any enumeration may produce.
pub const MAX_WEIGHTS: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RootKind {
    A1,
    A2,
}

impl RootKind {
    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "A1" | "a1" => Ok(RootKind::A1),
            "A2" | "a2" => Ok(RootKind::A2),
            other => Err(parse_err(format!("unknown root system `{other}` (expected A1 or A2)"))),
        }
    }
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootKind::A1 => write!(f, "A1"),
            RootKind::A2 => write!(f, "A2"),
        }
    }
}

/// Root system of SU(r+1) for r = 1, 2.
#[derive(Debug, Clone, Serialize)]
pub struct RootSystemData {
    pub kind: RootKind,
    pub rank: usize,
    /// Positive roots in simple-root coordinates.
    pub positive_roots: Vec<Vec<i64>>,
    /// Positive roots as `(i, j)`, meaning `e_i − e_j`.
    pub root_pairs: Vec<(usize, usize)>,
    /// Weyl vector in ε-coordinates.
    pub rho: Vec<f64>,
    /// Weyl group as permutations of the ε-coordinates with their signs.
    pub weyl: Vec<(Vec<usize>, i32)>,
    /// Gram matrix of the fundamental weights (inverse Cartan matrix).
    pub gram: Vec<Vec<f64>>,
    /// `p(λ)·casimir_denominator` is always an integer.
    pub casimir_denominator: i64,
}

impl RootSystemData {
    pub fn new(kind: RootKind) -> Self {
        let rank = match kind {
            RootKind::A1 => 1,
            RootKind::A2 => 2,
        };
        let n = rank + 1;
        let mut root_pairs = Vec::new();
        let mut positive_roots = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                root_pairs.push((i, j));
                // e_i − e_j = α_i + … + α_{j−1}
                positive_roots.push((0..rank).map(|k| i64::from(k >= i && k < j)).collect());
            }
        }
        let mut rho = vec![0.0; n];
        for &(i, j) in &root_pairs {
            rho[i] += 0.5;
            rho[j] -= 0.5;
        }
        let weyl = permutations(n);
        let (gram, casimir_denominator) = match kind {
            RootKind::A1 => (vec![vec![0.5]], 2),
            RootKind::A2 => (vec![vec![2.0 / 3.0, 1.0 / 3.0], vec![1.0 / 3.0, 2.0 / 3.0]], 3),
        };
        RootSystemData { kind, rank, positive_roots, root_pairs, rho, weyl, gram, casimir_denominator }
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl.len()
    }

    pub fn dim_group(&self) -> usize {
        self.rank + 2 * self.positive_roots.len()
    }

    pub fn center_order(&self) -> usize {
        self.rank + 1
    }

    /// Riemannian volume of SU(r+1) for the metric `−tr(XY)`.
    pub fn group_volume(&self) -> f64 {
        match self.kind {
            RootKind::A1 => 4.0 * 2f64.sqrt() * PI * PI,
            RootKind::A2 => 16.0 * 3f64.sqrt() * PI.powi(5),
        }
    }

    /// Volume of the maximal torus for the same metric.
    pub fn torus_volume(&self) -> f64 {
        match self.kind {
            RootKind::A1 => 2.0 * PI * 2f64.sqrt(),
            RootKind::A2 => 4.0 * PI * PI * 3f64.sqrt(),
        }
    }

    /// `⟨x, y⟩` for weights in the fundamental basis.
    pub fn inner(&self, x: &[f64], y: &[f64]) -> f64 {
        let mut s = 0.0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += x[i] * self.gram[i][j] * y[j];
            }
        }
        s
    }

    fn check_coords(&self, coords: &[u32]) -> Result<()> {
        if coords.len() != self.rank {
            return Err(invalid(format!("{} weights have {} coordinates, got {}", self.kind, self.rank, coords.len())));
        }
        Ok(())
    }

    /// `p(λ)·casimir_denominator`, exact.
    pub fn casimir_scaled(&self, coords: &[u32]) -> i64 {
        match self.kind {
            RootKind::A1 => {
                let m = coords[0] as i64 + 1;
                m * m - 1
            }
            RootKind::A2 => {
                let (u, v) = (coords[0] as i64 + 1, coords[1] as i64 + 1);
                2 * (u * u + u * v + v * v) - 6
            }
        }
    }

    /// `p(λ) = |λ+ρ|² − |ρ|²`
    pub fn casimir(&self, coords: &[u32]) -> Result<f64> {
        self.check_coords(coords)?;
        let lr: Vec<f64> = coords.iter().map(|&c| c as f64 + 1.0).collect();
        let ones = vec![1.0; self.rank];
        Ok(self.inner(&lr, &lr) - self.inner(&ones, &ones))
    }

    pub fn weight(&self, coords: &[u32]) -> Result<DominantWeight> {
        let dim = weyl_dimension(self, coords)?;
        let casimir = self.casimir(coords)?;
        Ok(DominantWeight { coords: coords.to_vec(), dim, casimir })
    }

    /// Number of dominant weights with `p(λ) ≤ cutoff`.
    pub fn count_weights(&self, cutoff: f64) -> u64 {
        let limit = self.scaled_limit(cutoff);
        if limit < 0 {
            return 0;
        }
        match self.kind {
            RootKind::A1 => {
                // m² − 1 ≤ limit
                isqrt(limit as u64 + 1)
            }
            RootKind::A2 => {
                // 2(u² + uv + v²) − 6 ≤ limit, u, v ≥ 1
                let q_max = (limit + 6) / 2;
                let mut total = 0u64;
                let mut u = 1i64;
                while u * u + u + 1 <= q_max {
                    total += max_v(u, q_max) as u64;
                    u += 1;
                }
                total
            }
        }
    }

    fn scaled_limit(&self, cutoff: f64) -> i64 {
        if cutoff < 0.0 {
            return -1;
        }
        (cutoff * self.casimir_denominator as f64 + 1e-9).floor() as i64
    }

    /// Calls `f(coords, d, p)` for every dominant weight with `p ≤ cutoff`,
    /// in a fixed order (first coordinate outermost).
    pub fn for_each_weight(&self, cutoff: f64, mut f: impl FnMut(&[u32], u64, f64)) -> Result<u64> {
        let n = self.count_weights(cutoff);
        if n > MAX_WEIGHTS {
            return Err(Error::Resource(format!("{n} dominant weights below cutoff {cutoff} exceeds {MAX_WEIGHTS}")));
        }
        let limit = self.scaled_limit(cutoff);
        if limit < 0 {
            return Ok(0);
        }
        let den = self.casimir_denominator as f64;
        match self.kind {
            RootKind::A1 => {
                let mut m = 1i64;
                while m * m - 1 <= limit {
                    f(&[(m - 1) as u32], m as u64, (m * m - 1) as f64 / den);
                    m += 1;
                }
            }
            RootKind::A2 => {
                let q_max = (limit + 6) / 2;
                let mut u = 1i64;
                while u * u + u + 1 <= q_max {
                    for v in 1..=max_v(u, q_max) {
                        let d = (u * v * (u + v) / 2) as u64;
                        let p = (2 * (u * u + u * v + v * v) - 6) as f64 / den;
                        f(&[(u - 1) as u32, (v - 1) as u32], d, p);
                    }
                    u += 1;
                }
            }
        }
        Ok(n)
    }
}

fn isqrt(x: u64) -> u64 {
    let mut r = (x as f64).sqrt() as u64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Largest `v ≥ 0` with `u² + uv + v² ≤ q_max`.
fn max_v(u: i64, q_max: i64) -> i64 {
    let mut v = ((-(u as f64) + ((4 * q_max - 3 * u * u) as f64).max(0.0).sqrt()) / 2.0) as i64;
    v = v.max(0);
    while v > 0 && u * u + u * v + v * v > q_max {
        v -= 1;
    }
    while u * u + u * (v + 1) + (v + 1) * (v + 1) <= q_max {
        v += 1;
    }
    v
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i32)>) {
        let n = used.len();
        if prefix.len() == n {
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if prefix[i] > prefix[j] {
                        inv += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for k in 0..n {
            if !used[k] {
                used[k] = true;
                prefix.push(k);
                rec(prefix, used, out);
                prefix.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// A dominant weight with its dimension and Casimir value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DominantWeight {
    pub coords: Vec<u32>,
    pub dim: u64,
    pub casimir: f64,
}

/// All dominant weights with `p(λ) ≤ cutoff`.
pub fn dominant_weights(rs: &RootSystemData, cutoff: f64) -> Result<Vec<DominantWeight>> {
    if !cutoff.is_finite() || cutoff < 0.0 {
        return Err(invalid(format!("Casimir cutoff must be finite and nonnegative, got {cutoff}")));
    }
    let mut out = Vec::new();
    rs.for_each_weight(cutoff, |c, d, p| out.push(DominantWeight { coords: c.to_vec(), dim: d, casimir: p }))?;
    Ok(out)
}

/// `∏_{α>0} ⟨λ+ρ, α⟩/⟨ρ, α⟩`, computed exactly and cross-checked in floating point.
pub fn weyl_dimension(rs: &RootSystemData, coords: &[u32]) -> Result<u64> {
    rs.check_coords(coords)?;
    let (d, residue) = weyl_dimension_with_residue(rs, coords)?;
    if residue > 1e-9 {
        return Err(Error::Consistency(format!("dimension residue {residue} for {coords:?}")));
    }
    Ok(d)
}

/// Exact dimension together with the floating-point product's distance from it,
/// relative to `max(1, d)`.
pub fn weyl_dimension_with_residue(rs: &RootSystemData, coords: &[u32]) -> Result<(u64, f64)> {
    rs.check_coords(coords)?;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    let mut float = 1.0f64;
    for alpha in &rs.positive_roots {
        let a: u128 = alpha.iter().zip(coords).map(|(&c, &l)| c as u128 * (l as u128 + 1)).sum();
        let h: u128 = alpha.iter().map(|&c| c as u128).sum();
        num *= a;
        den *= h;
        float *= a as f64 / h as f64;
    }
    if num % den != 0 {
        return Err(Error::Consistency(format!("Weyl dimension of {coords:?} is not an integer")));
    }
    let d = u64::try_from(num / den).map_err(|_| Error::Resource("dimension overflows u64".into()))?;
    Ok((d, (float - d as f64).abs() / (d as f64).max(1.0)))
}

/// A point `exp(C)` of the maximal torus.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TorusPoint {
    pub kind: RootKind,
    /// `θ` for A1; `(t1, t2)` for A2.
    pub angles: Vec<f64>,
}

impl TorusPoint {
    pub fn a1(theta: f64) -> Self {
        TorusPoint { kind: RootKind::A1, angles: vec![theta] }
    }

    pub fn a2(t1: f64, t2: f64) -> Self {
        TorusPoint { kind: RootKind::A2, angles: vec![t1, t2] }
    }

    pub fn identity(kind: RootKind) -> Self {
        match kind {
            RootKind::A1 => Self::a1(0.0),
            RootKind::A2 => Self::a2(0.0, 0.0),
        }
    }

    /// Parses `A1:theta=<r>` or `A2:t1=<r>,t2=<r>`.
    pub fn parse(text: &str) -> Result<Self> {
        let (head, rest) = text
            .trim()
            .split_once(':')
            .ok_or_else(|| parse_err(format!("torus point `{text}` needs `<root>:` prefix")))?;
        let kind = RootKind::parse(head)?;
        let mut values: HashMap<&str, f64> = HashMap::new();
        for part in rest.split(',') {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| parse_err(format!("expected `name=value` in `{text}`")))?;
            let v: f64 = v.trim().parse().map_err(|_| parse_err(format!("bad angle `{}`", v.trim())))?;
            if !v.is_finite() {
                return Err(parse_err("angles must be finite"));
            }
            if values.insert(k.trim(), v).is_some() {
                return Err(parse_err(format!("angle `{}` given twice", k.trim())));
            }
        }
        let take = |name: &str, values: &mut HashMap<&str, f64>| {
            values.remove(name).ok_or_else(|| parse_err(format!("missing `{name}=` in `{text}`")))
        };
        let point = match kind {
            RootKind::A1 => Self::a1(take("theta", &mut values)?),
            RootKind::A2 => {
                let t1 = take("t1", &mut values)?;
                Self::a2(t1, take("t2", &mut values)?)
            }
        };
        if let Some(k) = values.keys().next() {
            return Err(parse_err(format!("unexpected angle `{k}` for {kind}")));
        }
        Ok(point)
    }

    /// Phases `φ_1, …, φ_{r+1}` with zero sum.
    pub fn phases(&self) -> Vec<f64> {
        match self.kind {
            RootKind::A1 => vec![self.angles[0], -self.angles[0]],
            RootKind::A2 => vec![self.angles[0], self.angles[1], -self.angles[0] - self.angles[1]],
        }
    }

    pub fn inverse(&self) -> Self {
        TorusPoint { kind: self.kind, angles: self.angles.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RootKind::A1 => write!(f, "A1:theta={}", self.angles[0]),
            RootKind::A2 => write!(f, "A2:t1={},t2={}", self.angles[0], self.angles[1]),
        }
    }
}

/// Distance from `x` to the nearest multiple of `2π`.
fn dist_2pi(x: f64) -> f64 {
    let r = x.rem_euclid(2.0 * PI);
    r.min(2.0 * PI - r)
}

/// Character bound used by tail estimates: `|χ_λ(x)| ≤ k·d_λ^e`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacterBound {
    pub k: f64,
    pub exponent: f64,
}

/// Precomputed data of a torus point for repeated character evaluation.
#[derive(Debug, Clone)]
pub struct PointData {
    pub kind: RootKind,
    pub phases: Vec<f64>,
    /// `α(C)` for each positive root.
    pub root_values: Vec<f64>,
    pub central: bool,
    /// `|Σ_w det(w) e^{i⟨wρ, C⟩}| = ∏_{α>0} |2 sin(α(C)/2)|`
    pub denominator_abs: f64,
    denominator: Complex64,
}

impl PointData {
    pub fn new(rs: &RootSystemData, x: &TorusPoint) -> Result<Self> {
        if x.kind != rs.kind {
            return Err(invalid(format!("torus point is for {}, root system is {}", x.kind, rs.kind)));
        }
        let phases = x.phases();
        let root_values: Vec<f64> = rs.root_pairs.iter().map(|&(i, j)| phases[i] - phases[j]).collect();
        let central = root_values.iter().all(|&a| dist_2pi(a) <= CENTRAL_TOL);
        let denominator_abs = root_values.iter().map(|&a| (2.0 * (a / 2.0).sin()).abs()).product();
        let rho_fund = vec![1u32; rs.rank];
        let denominator = alternating_sum(rs, &rho_fund, &phases);
        Ok(PointData { kind: x.kind, phases, root_values, central, denominator_abs, denominator })
    }

    pub fn is_regular(&self) -> bool {
        self.denominator_abs > REGULAR_TOL
    }

    /// `|χ_λ(x)| ≤ |W|/|Δ(x)|` at regular points, `≤ d_λ` everywhere.
    pub fn character_bound(&self, rs: &RootSystemData) -> CharacterBound {
        if self.central || !self.is_regular() {
            CharacterBound { k: 1.0, exponent: 1.0 }
        } else {
            CharacterBound { k: rs.weyl_order() as f64 / self.denominator_abs, exponent: 0.0 }
        }
    }

    /// `|j(c)| = ∏ 2|sin(α(C)/2)|` over positive roots not vanishing on `C`.
    pub fn j_factor(&self) -> f64 {
        self.root_values
            .iter()
            .filter(|&&a| dist_2pi(a) > CENTRAL_TOL)
            .map(|&a| (2.0 * (a / 2.0).sin()).abs())
            .product()
    }

    /// Number of positive roots not vanishing on `C`.
    pub fn moving_roots(&self) -> usize {
        self.root_values.iter().filter(|&&a| dist_2pi(a) > CENTRAL_TOL).count()
    }
}

/// `Σ_{w∈W} det(w) exp(i⟨w μ, C⟩)` for `μ` in the fundamental basis.
fn alternating_sum(rs: &RootSystemData, coords: &[u32], phases: &[f64]) -> Complex64 {
    let mut s = Complex64::new(0.0, 0.0);
    for (perm, sign) in &rs.weyl {
        let mut partial = 0.0;
        let mut angle = 0.0;
        for i in 0..rs.rank {
            partial += phases[perm[i]];
            angle += coords[i] as f64 * partial;
        }
        s += Complex64::from_polar(*sign as f64, angle);
    }
    s
}

/// Weyl numerator `Σ_w det(w) e^{i⟨w(λ+ρ), C⟩}` at the given phases.
pub fn weyl_numerator(rs: &RootSystemData, coords: &[u32], phases: &[f64]) -> Complex64 {
    let shifted: Vec<u32> = coords.iter().map(|&c| c + 1).collect();
    alternating_sum(rs, &shifted, phases)
}

/// `χ_λ(x)` by the Weyl character formula. At (or within 1e-8 of) a central
/// point the limit `d_λ·e^{i⟨λ, C⟩}` is used; other singular points are refused.
pub fn weyl_character(rs: &RootSystemData, coords: &[u32], x: &TorusPoint) -> Result<Complex64> {
    let p = PointData::new(rs, x)?;
    let d = weyl_dimension(rs, coords)?;
    character_at(rs, coords, d, &p)
}

/// Character evaluation against precomputed point data.
pub fn character_at(rs: &RootSystemData, coords: &[u32], dim: u64, p: &PointData) -> Result<Complex64> {
    if p.central {
        let mut partial = 0.0;
        let mut angle = 0.0;
        for i in 0..rs.rank {
            partial += p.phases[i];
            angle += coords[i] as f64 * partial;
        }
        return Ok(Complex64::from_polar(dim as f64, angle));
    }
    if !p.is_regular() {
        return Err(Error::SingularPoint(format!(
            "Weyl denominator {:e} at a non-central point",
            p.denominator_abs
        )));
    }
    if rs.kind == RootKind::A1 {
        let theta = p.phases[0];
        return Ok(Complex64::new(((coords[0] as f64 + 1.0) * theta).sin() / theta.sin(), 0.0));
    }
    let shifted: Vec<u32> = coords.iter().map(|&c| c + 1).collect();
    Ok(alternating_sum(rs, &shifted, &p.phases) / p.denominator)
}

/// All weight multiplicities of `V(λ)` by Freudenthal's recursion, keyed by
/// fundamental-basis coordinates.
pub fn weight_multiplicities(rs: &RootSystemData, coords: &[u32]) -> Result<HashMap<Vec<i64>, u64>> {
    rs.check_coords(coords)?;
    let r = rs.rank;
    let lambda: Vec<i64> = coords.iter().map(|&c| c as i64).collect();
    // simple roots in the fundamental basis are the rows of the Cartan matrix
    let simple: Vec<Vec<i64>> = match rs.kind {
        RootKind::A1 => vec![vec![2]],
        RootKind::A2 => vec![vec![2, -1], vec![-1, 2]],
    };
    let pos_fund: Vec<Vec<i64>> = rs
        .positive_roots
        .iter()
        .map(|a| (0..r).map(|j| (0..r).map(|i| a[i] * simple[i][j]).sum()).collect())
        .collect();
    // λ − w₀λ in simple-root coordinates bounds every descent
    let depth: i64 = match rs.kind {
        RootKind::A1 => lambda[0],
        RootKind::A2 => lambda[0] + lambda[1],
    };
    let to_f = |v: &[i64]| v.iter().map(|&x| x as f64).collect::<Vec<f64>>();
    let shift = |v: &[i64]| v.iter().map(|&x| x as f64 + 1.0).collect::<Vec<f64>>();
    let top = rs.inner(&shift(&lambda), &shift(&lambda));
    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    mult.insert(lambda.clone(), 1);
    let levels: Vec<Vec<i64>> = match rs.kind {
        RootKind::A1 => (0..=depth).map(|k| vec![k]).collect(),
        RootKind::A2 => {
            let mut v = Vec::new();
            for level in 0..=2 * depth {
                for k1 in 0..=level.min(depth) {
                    let k2 = level - k1;
                    if k2 <= depth {
                        v.push(vec![k1, k2]);
                    }
                }
            }
            v
        }
    };
    for ks in levels.iter().skip(1) {
        let mu: Vec<i64> = (0..r).map(|j| lambda[j] - (0..r).map(|i| ks[i] * simple[i][j]).sum::<i64>()).collect();
        let denom = top - rs.inner(&shift(&mu), &shift(&mu));
        if denom <= 1e-9 {
            continue;
        }
        let mut rhs = 0.0;
        for alpha in &pos_fund {
            let mut k = 1;
            loop {
                let nu: Vec<i64> = (0..r).map(|j| mu[j] + k * alpha[j]).collect();
                match mult.get(&nu) {
                    Some(&m) => rhs += 2.0 * m as f64 * rs.inner(&to_f(&nu), &to_f(alpha)),
                    None if k > 2 * depth + 2 => break,
                    None => {}
                }
                k += 1;
                if k > 2 * depth + 2 {
                    break;
                }
            }
        }
        let m = rhs / denom;
        let rounded = m.round();
        if (m - rounded).abs() > 1e-6 || rounded < 0.0 {
            return Err(Error::Consistency(format!("Freudenthal multiplicity {m} at {mu:?} is not a nonnegative integer")));
        }
        if rounded > 0.0 {
            mult.insert(mu, rounded as u64);
        }
    }
    let total: u64 = mult.values().sum();
    let d = weyl_dimension(rs, coords)?;
    if total != d {
        return Err(Error::Consistency(format!("weight multiplicities sum to {total}, dimension is {d}")));
    }
    Ok(mult)
}

/// Dimension of the zero-weight space by weight-system enumeration.
pub fn zero_weight_multiplicity_enumerated(rs: &RootSystemData, coords: &[u32]) -> Result<u64> {
    let m = weight_multiplicities(rs, coords)?;
    Ok(m.get(&vec![0i64; rs.rank]).copied().unwrap_or(0))
}

/// Dimension of the zero-weight space in closed form: for A1, 1 if `n` is even;
/// for A2, `min(a, b) + 1` if `a ≡ b (mod 3)`.
pub fn zero_weight_multiplicity(rs: &RootSystemData, coords: &[u32]) -> Result<u64> {
    rs.check_coords(coords)?;
    Ok(match rs.kind {
        RootKind::A1 => u64::from(coords[0] % 2 == 0),
        RootKind::A2 => {
            let (a, b) = (coords[0] as u64, coords[1] as u64);
            if (a + 2 * b) % 3 == 0 {
                a.min(b) + 1
            } else {
                0
            }
        }
    })
}
