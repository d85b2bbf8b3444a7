//! Truncated λ-series over dominant weights with rigorous tail bounds.
//!
//! Every series here has terms bounded by `k · d_λ^a · e^{−t p(λ)}`; the tail
//! beyond a Casimir cutoff is bounded by integral comparison in the largest
//! shifted coordinate `m` (A1: `m = n+1 = d`; A2: `m = max(a+1, b+1)`).

use num_complex::Complex64;
use serde::Serialize;

use super::root_system::{character_at, zero_weight_multiplicity, PointData, RootKind, RootSystemData, TorusPoint, MAX_WEIGHTS};
use crate::error::{invalid, Error, Result};

const EPS: f64 = f64::EPSILON;
const MAX_CUTOFF: f64 = 1e12;

/// A truncated series with its certified truncation error.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesResult {
    pub value: f64,
    pub terms_used: u64,
    pub tail_bound: f64,
    /// Largest Casimir value included.
    pub cutoff: f64,
    pub conditionally_convergent: bool,
}

/// `|term_λ| ≤ k · d_λ^exponent · e^{−t p(λ)}`
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TermBound {
    pub k: f64,
    pub exponent: f64,
}

/// `Σ_{m > m0} m^b e^{−c m²} ≤ ∫_{m0}^∞`, valid once the summand decreases past `m0`.
fn gaussian_tail(m0: f64, b: f64, c: f64) -> f64 {
    if c <= 0.0 || m0 < 1.0 || 2.0 * c * m0 * m0 <= b.max(0.0) {
        return f64::INFINITY;
    }
    let rate = 2.0 * c * m0 - b.max(0.0) / m0;
    (b * m0.ln() - c * m0 * m0).exp() / rate
}

/// `Σ_{m > m0} m^b ≤ m0^{b+1}/(−b−1)` for `b < −1`.
fn power_tail(m0: f64, b: f64) -> f64 {
    if b >= -1.0 || m0 < 1.0 {
        return f64::INFINITY;
    }
    m0.powf(b + 1.0) / (-b - 1.0)
}

/// Whether `Σ k d^a e^{−tp}` converges absolutely.
pub fn converges(exponent: f64, t: f64) -> bool {
    t > 0.0 || exponent < -1.0
}

/// Bound on the sum of `k d^a e^{−tp}` over dominant weights with `p > cutoff`.
pub fn tail_bound(rs: &RootSystemData, cutoff: f64, bound: TermBound, t: f64) -> f64 {
    let TermBound { k, exponent: a } = bound;
    if k == 0.0 {
        return 0.0;
    }
    match rs.kind {
        RootKind::A1 => {
            // included m = 1..=M
            let m0 = rs.count_weights(cutoff) as f64;
            let mut best = k * power_tail(m0, a);
            if t > 0.0 {
                best = best.min(k * (t / 2.0).exp() * gaussian_tail(m0, a, t / 2.0));
            }
            best
        }
        RootKind::A2 => {
            // every weight with max(u, v) ≤ m0 is included
            let limit = (cutoff * rs.casimir_denominator as f64 + 1e-9).floor();
            let q_max = ((limit + 6.0) / 2.0).floor();
            let m0 = (q_max / 3.0).sqrt().floor();
            let c = 2.0 * t / 3.0;
            let heat = (2.0 * t).exp();
            if a >= 0.0 {
                // at most 2m weights with max = m, d ≤ m³, p ≥ 2m²/3 − 2
                if t > 0.0 {
                    2.0 * k * heat * gaussian_tail(m0, 3.0 * a + 1.0, c)
                } else {
                    f64::INFINITY
                }
            } else {
                // d ≥ m²w/2 where w is the smaller shifted coordinate
                let s = -a;
                let (per_m_const, b) = if s > 1.0 {
                    (2f64.powf(s + 1.0) * s / (s - 1.0), -2.0 * s)
                } else {
                    (2f64.powf(s + 1.0), 1.0 - 2.0 * s)
                };
                let mut best = k * per_m_const * power_tail(m0, b);
                if t > 0.0 {
                    best = best.min(k * per_m_const * heat * gaussian_tail(m0, b, c));
                }
                best
            }
        }
    }
}

/// Compensated summation.
#[derive(Default, Clone, Copy)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Smallest doubling of the Casimir cutoff whose tail bound is below `target`.
pub(crate) fn choose_cutoff(rs: &RootSystemData, bound: TermBound, t: f64, target: f64) -> Result<f64> {
    let mut cutoff = 8.0;
    loop {
        if tail_bound(rs, cutoff, bound, t) <= target {
            return Ok(cutoff);
        }
        cutoff *= 2.0;
        if cutoff > MAX_CUTOFF || rs.count_weights(cutoff) > MAX_WEIGHTS {
            return Err(Error::Resource(format!(
                "tolerance {target:e} needs more than {MAX_WEIGHTS} dominant weights"
            )));
        }
    }
}

/// Sums `term(coords, d, p)` over all dominant weights with `p ≤ cutoff`.
fn sum_to_cutoff(
    rs: &RootSystemData,
    cutoff: f64,
    mut term: impl FnMut(&[u32], u64, f64) -> Result<Complex64>,
) -> Result<(Complex64, f64, u64)> {
    let mut re = Neumaier::default();
    let mut im = Neumaier::default();
    let mut abs = 0.0;
    let mut failure = None;
    let n = rs.for_each_weight(cutoff, |c, d, p| {
        if failure.is_some() {
            return;
        }
        match term(c, d, p) {
            Ok(z) => {
                re.add(z.re);
                im.add(z.im);
                abs += z.norm();
            }
            Err(e) => failure = Some(e),
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok((Complex64::new(re.value(), im.value()), abs, n))
}

/// Sums a real-valued λ-series to within `tol`, or fails.
pub fn sum_series(
    rs: &RootSystemData,
    t: f64,
    bound: TermBound,
    tol: f64,
    term: impl FnMut(&[u32], u64, f64) -> Result<Complex64>,
) -> Result<SeriesResult> {
    if !(tol > 0.0) {
        return Err(invalid(format!("tolerance must be positive, got {tol}")));
    }
    if !(t >= 0.0) || !t.is_finite() {
        return Err(invalid(format!("t must be finite and nonnegative, got {t}")));
    }
    if !converges(bound.exponent, t) {
        return Err(Error::Divergence(format!(
            "terms of size d^{} do not decay absolutely at t = 0; use t > 0",
            bound.exponent
        )));
    }
    let cutoff = choose_cutoff(rs, bound, t, tol / 4.0)?;
    sum_at_cutoff(rs, t, bound, cutoff, Some(tol), term)
}

/// Sums a real-valued λ-series up to a fixed Casimir cutoff.
pub fn sum_at_cutoff(
    rs: &RootSystemData,
    t: f64,
    bound: TermBound,
    cutoff: f64,
    tol: Option<f64>,
    term: impl FnMut(&[u32], u64, f64) -> Result<Complex64>,
) -> Result<SeriesResult> {
    if !(0.0..=MAX_CUTOFF).contains(&cutoff) {
        return Err(invalid(format!("cutoff must lie in [0, {MAX_CUTOFF:e}], got {cutoff}")));
    }
    let (sum, abs, n) = sum_to_cutoff(rs, cutoff, term)?;
    let tail = tail_bound(rs, cutoff, bound, t) + 64.0 * EPS * abs;
    if sum.im.abs() > tail + 1e-12 * (1.0 + abs) {
        return Err(Error::Consistency(format!("series has imaginary part {:e}", sum.im)));
    }
    if let Some(tol) = tol {
        if !(tail < tol) {
            return Err(Error::Resource(format!("tail bound {tail:e} does not reach tolerance {tol:e}")));
        }
    }
    Ok(SeriesResult { value: sum.re, terms_used: n, tail_bound: tail, cutoff, conditionally_convergent: false })
}

fn check_s(rs: &RootSystemData, s: f64) -> Result<()> {
    let (abscissa, margin) = match rs.kind {
        RootKind::A1 => (1.0, 2.0),
        RootKind::A2 => (2.0 / 3.0, 1.2),
    };
    if !s.is_finite() || s <= abscissa {
        return Err(Error::Divergence(format!("{} zeta diverges for s = {s} ≤ {abscissa:.4}", rs.kind)));
    }
    if s < margin {
        return Err(invalid(format!("{} zeta is supported for s ≥ {margin}, got {s}", rs.kind)));
    }
    Ok(())
}

/// `Σ_λ d_λ^{−s}` to within `tol`. A1 uses an Euler–Maclaurin tail correction.
pub fn witten_zeta_partial(rs: &RootSystemData, s: f64, tol: f64) -> Result<SeriesResult> {
    check_s(rs, s)?;
    if !(tol > 0.0) {
        return Err(invalid(format!("tolerance must be positive, got {tol}")));
    }
    match rs.kind {
        RootKind::A1 => {
            // remainder after the B2 correction is at most |f'''(N)|/360
            let rem = |n: f64| s * (s + 1.0) * (s + 2.0) * n.powf(-s - 3.0) / 360.0;
            let mut n = 16u64;
            while rem(n as f64) > tol / 4.0 {
                n *= 2;
                if n > MAX_WEIGHTS {
                    return Err(Error::Resource(format!("tolerance {tol:e} needs more than {MAX_WEIGHTS} terms")));
                }
            }
            let raw = a1_zeta_raw(n, s);
            let nf = n as f64;
            let value = raw + nf.powf(1.0 - s) / (s - 1.0) - nf.powf(-s) / 2.0 + s * nf.powf(-s - 1.0) / 12.0;
            let tail = rem(nf) + 16.0 * EPS * value;
            if !(tail < tol) {
                return Err(Error::Resource(format!("tail bound {tail:e} does not reach tolerance {tol:e}")));
            }
            Ok(SeriesResult {
                value,
                terms_used: n,
                tail_bound: tail,
                cutoff: (nf * nf - 1.0) / 2.0,
                conditionally_convergent: false,
            })
        }
        RootKind::A2 => {
            sum_series(rs, 0.0, TermBound { k: 1.0, exponent: -s }, tol, |_, d, _| {
                Ok(Complex64::new((d as f64).powf(-s), 0.0))
            })
        }
    }
}

fn a1_zeta_raw(n: u64, s: f64) -> f64 {
    let mut acc = Neumaier::default();
    for k in (1..=n).rev() {
        acc.add((k as f64).powf(-s));
    }
    acc.value()
}

/// Raw partial sum `Σ_{p(λ) ≤ cutoff} d_λ^{−s}` with its integral-comparison tail bound.
pub fn witten_zeta_at_cutoff(rs: &RootSystemData, s: f64, cutoff: f64) -> Result<SeriesResult> {
    check_s(rs, s)?;
    sum_at_cutoff(rs, 0.0, TermBound { k: 1.0, exponent: -s }, cutoff, None, |_, d, _| {
        Ok(Complex64::new((d as f64).powf(-s), 0.0))
    })
}

/// The λ-series of the symplectic-volume formula together with its prefactor.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VolumeResult {
    pub series: SeriesResult,
    /// `|Z(G)| |G|^{2g+n−2} |j(c)| / ((2π)^{2N_c} ∏ |Z_{c_j}|)`
    pub prefactor: f64,
    pub volume: f64,
    pub j_factor: f64,
    /// Complex dimension of the moduli space.
    pub complex_dimension: usize,
    pub warnings: Vec<String>,
}

/// `Σ_λ ∏_j χ_λ(c_j) / d_λ^{2g+n−2} · e^{−t p(λ)}` and the volume prefactor.
pub fn moduli_volume_series(
    rs: &RootSystemData,
    genus: usize,
    points: &[TorusPoint],
    t: f64,
    tol: f64,
) -> Result<VolumeResult> {
    if genus < 2 {
        return Err(invalid(format!("volume series needs genus ≥ 2, got {genus}")));
    }
    let data: Vec<PointData> = points.iter().map(|x| PointData::new(rs, x)).collect::<Result<_>>()?;
    let power = (2 * genus + points.len() - 2) as i32;
    let mut bound = TermBound { k: 1.0, exponent: -(power as f64) };
    let mut warnings = Vec::new();
    let mut z_product = 1.0;
    let mut moving = 0;
    for (j, p) in data.iter().enumerate() {
        if !p.central && !p.is_regular() {
            return Err(Error::SingularPoint(format!("marked point {} is neither regular nor central", points[j])));
        }
        let cb = p.character_bound(rs);
        bound.k *= cb.k;
        bound.exponent += cb.exponent;
        if p.central {
            warnings.push(format!("marked point {} is central: j(c) vanishes in the limit", points[j]));
            z_product *= rs.group_volume();
        } else {
            z_product *= rs.torus_volume();
        }
        moving += p.moving_roots();
    }
    let series = sum_series(rs, t, bound, tol, |c, d, p| {
        let mut prod = Complex64::new(1.0, 0.0);
        for pd in &data {
            prod *= character_at(rs, c, d, pd)?;
        }
        Ok(prod * (-t * p).exp() / (d as f64).powi(power))
    })?;
    let complex_dimension = rs.dim_group() * (genus - 1) + moving;
    let j_factor: f64 = data.iter().map(PointData::j_factor).product();
    let prefactor = rs.center_order() as f64 * rs.group_volume().powi(power) * j_factor
        / ((2.0 * std::f64::consts::PI).powi(2 * complex_dimension as i32) * z_product);
    Ok(VolumeResult { volume: prefactor * series.value, series, prefactor, j_factor, complex_dimension, warnings })
}

/// Density of `x ↦ ∏[x_i, y_i]` against normalized Haar measure:
/// `Σ_λ χ_λ(x⁻¹)/d_λ^{2g−1} · e^{−t p(λ)}`.
pub fn commutator_density(rs: &RootSystemData, x: &TorusPoint, genus: usize, t: f64, tol: f64) -> Result<SeriesResult> {
    if genus == 0 {
        return Err(invalid("commutator density needs genus ≥ 1"));
    }
    if genus == 1 && t == 0.0 {
        return Err(Error::Divergence("genus-1 density is only conditionally convergent at t = 0; use t > 0".into()));
    }
    let p = PointData::new(rs, &x.inverse())?;
    let cb = p.character_bound(rs);
    let power = (2 * genus - 1) as i32;
    let bound = TermBound { k: cb.k, exponent: cb.exponent - power as f64 };
    sum_series(rs, t, bound, tol, |c, d, cas| {
        Ok(character_at(rs, c, d, &p)? * (-t * cas).exp() / (d as f64).powi(power))
    })
}

/// Subgroup attached to one slot of a conjugate-product map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SubgroupSlot {
    Torus,
    Full,
    Trivial,
}

impl SubgroupSlot {
    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "torus" => Ok(SubgroupSlot::Torus),
            "full" | "full-group" => Ok(SubgroupSlot::Full),
            "trivial" => Ok(SubgroupSlot::Trivial),
            other => Err(crate::error::parse_err(format!("unknown subgroup slot `{other}` (torus, full, trivial)"))),
        }
    }

    /// `∫_H χ_λ` against normalized Haar measure on `H`.
    pub fn integral(self, rs: &RootSystemData, coords: &[u32], dim: u64) -> Result<f64> {
        Ok(match self {
            SubgroupSlot::Torus => zero_weight_multiplicity(rs, coords)? as f64,
            SubgroupSlot::Full => f64::from(u8::from(coords.iter().all(|&c| c == 0))),
            SubgroupSlot::Trivial => dim as f64,
        })
    }
}

/// Density of `∏ x_j u_j x_j⁻¹` (`u_j ∈ H_j`) against normalized Haar measure:
/// `Σ_λ ∏_j ∫_{H_j} χ_λ · χ_λ(x⁻¹)/d_λ^{n−1} · e^{−t p(λ)}`.
pub fn subgroup_pushforward_density(
    rs: &RootSystemData,
    slots: &[SubgroupSlot],
    x: &TorusPoint,
    t: f64,
    tol: f64,
) -> Result<SeriesResult> {
    if slots.is_empty() {
        return Err(invalid("need at least one subgroup slot"));
    }
    let p = PointData::new(rs, &x.inverse())?;
    if slots.contains(&SubgroupSlot::Full) {
        // only the trivial representation survives
        return Ok(SeriesResult { value: 1.0, terms_used: 1, tail_bound: 0.0, cutoff: 0.0, conditionally_convergent: false });
    }
    let cb = p.character_bound(rs);
    let mut bound = TermBound { k: cb.k, exponent: cb.exponent - (slots.len() as f64 - 1.0) };
    for slot in slots {
        match (slot, rs.kind) {
            (SubgroupSlot::Trivial, _) => bound.exponent += 1.0,
            (SubgroupSlot::Torus, RootKind::A1) => {}
            // zero-weight multiplicity ≤ min(a, b) + 1 ≤ m ≤ √(2d)
            (SubgroupSlot::Torus, RootKind::A2) => {
                bound.k *= 2f64.sqrt();
                bound.exponent += 0.5;
            }
            (SubgroupSlot::Full, _) => unreachable!(),
        }
    }
    let power = slots.len() as i32 - 1;
    sum_series(rs, t, bound, tol, |c, d, cas| {
        let mut prod = 1.0;
        for slot in slots {
            prod *= slot.integral(rs, c, d)?;
        }
        if prod == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        Ok(character_at(rs, c, d, &p)? * prod * (-t * cas).exp() / (d as f64).powi(power))
    })
}

/// Heat kernel `H(t, x, e) = Σ_λ d_λ χ_λ(x) e^{−t p(λ)}` for normalized Haar measure.
pub fn lie_heat_kernel(rs: &RootSystemData, x: &TorusPoint, t: f64, tol: f64) -> Result<SeriesResult> {
    if !(t > 0.0) {
        return Err(invalid(format!("heat kernel needs t > 0, got {t}")));
    }
    let p = PointData::new(rs, x)?;
    let cb = p.character_bound(rs);
    let bound = TermBound { k: cb.k, exponent: cb.exponent + 1.0 };
    sum_series(rs, t, bound, tol, |c, d, cas| Ok(character_at(rs, c, d, &p)? * (d as f64) * (-t * cas).exp()))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VanishingResult {
    pub point: TorusPoint,
    pub central: bool,
    pub values: Vec<(f64, SeriesResult)>,
    /// Magnitudes strictly decrease along the sequence and the point is not central.
    pub vanishing: bool,
}

/// Heat-kernel values `H(t, c, e)` along a decreasing sequence of `t`.
pub fn vanishing_limit(rs: &RootSystemData, c: &TorusPoint, ts: &[f64], tol: f64) -> Result<VanishingResult> {
    if ts.is_empty() {
        return Err(invalid("need at least one t"));
    }
    if ts.windows(2).any(|w| w[1] >= w[0]) {
        return Err(invalid("t-sequence must be strictly decreasing"));
    }
    let pd = PointData::new(rs, c)?;
    let values: Vec<(f64, SeriesResult)> =
        ts.iter().map(|&t| lie_heat_kernel(rs, c, t, tol).map(|r| (t, r))).collect::<Result<_>>()?;
    let decreasing = values.windows(2).all(|w| {
        // strict decrease must survive the truncation error
        w[1].1.value.abs() + w[1].1.tail_bound < w[0].1.value.abs() - w[0].1.tail_bound
    });
    Ok(VanishingResult { point: c.clone(), central: pd.central, vanishing: decreasing && !pd.central, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn a1() -> RootSystemData {
        RootSystemData::new(RootKind::A1)
    }

    fn a2() -> RootSystemData {
        RootSystemData::new(RootKind::A2)
    }

    #[test]
    fn zeta_values() {
        let r = witten_zeta_partial(&a1(), 2.0, 1e-6).unwrap();
        assert!((r.value - PI * PI / 6.0).abs() <= r.tail_bound);
        assert!(r.tail_bound <= 1e-6 && r.terms_used <= 10_000);
        let r = witten_zeta_partial(&a1(), 4.0, 1e-10).unwrap();
        assert!((r.value - PI.powi(4) / 90.0).abs() <= r.tail_bound);
        assert!(matches!(witten_zeta_partial(&a1(), 1.0, 1e-6), Err(Error::Divergence(_))));
        assert!(matches!(witten_zeta_partial(&a2(), 0.6, 1e-6), Err(Error::Divergence(_))));
        assert!(matches!(witten_zeta_partial(&a1(), 1.5, 1e-6), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn a1_raw_tail_contains_truth() {
        let z2 = PI * PI / 6.0;
        for cutoff in [4.0, 40.0, 400.0] {
            let r = witten_zeta_at_cutoff(&a1(), 2.0, cutoff).unwrap();
            assert!(r.value <= z2 && z2 <= r.value + r.tail_bound, "cutoff {cutoff}");
        }
    }

    #[test]
    fn a2_zeta_two_cutoffs_agree() {
        let coarse = witten_zeta_at_cutoff(&a2(), 2.0, 200.0).unwrap();
        let fine = witten_zeta_at_cutoff(&a2(), 2.0, 20_000.0).unwrap();
        assert!(fine.value >= coarse.value);
        assert!(fine.value <= coarse.value + coarse.tail_bound);
        let tol = witten_zeta_partial(&a2(), 2.0, 1e-6).unwrap();
        assert!((tol.value - fine.value).abs() <= tol.tail_bound + fine.tail_bound);
    }

    #[test]
    fn volume_series_reductions() {
        let v = moduli_volume_series(&a1(), 2, &[], 0.0, 1e-5).unwrap();
        assert!((v.series.value - PI * PI / 6.0).abs() <= v.series.tail_bound + 1e-12);
        assert_eq!(v.complex_dimension, 3);
        let v = moduli_volume_series(&a1(), 2, &[TorusPoint::a1(PI / 2.0)], 0.0, 1e-9).unwrap();
        assert!((v.series.value - PI.powi(3) / 32.0).abs() <= v.series.tail_bound + 1e-12);
        assert_eq!(v.complex_dimension, 4);
        assert!(v.warnings.is_empty());
        let v = moduli_volume_series(&a1(), 2, &[TorusPoint::a1(0.0)], 0.0, 1e-5).unwrap();
        assert_eq!(v.warnings.len(), 1);
        let near = moduli_volume_series(&a1(), 2, &[TorusPoint::a1(1e-3)], 0.0, 1e-3).unwrap();
        assert!(near.j_factor < 3e-3);
    }

    #[test]
    fn genus_one_density_closed_form() {
        // Σ sin(mθ)/(m sin θ) = (π − θ)/(2 sin θ); t → 0 approaches it
        for theta in [0.7, PI / 2.0, 2.3] {
            let r = commutator_density(&a1(), &TorusPoint::a1(theta), 1, 1e-5, 1e-9).unwrap();
            let exact = (PI - theta) / (2.0 * theta.sin());
            assert!((r.value - exact).abs() < 5e-3, "{theta}: {} vs {exact}", r.value);
        }
        assert!(matches!(commutator_density(&a1(), &TorusPoint::a1(1.0), 1, 0.0, 1e-6), Err(Error::Divergence(_))));
        let at_e = commutator_density(&a1(), &TorusPoint::a1(0.0), 2, 0.0, 1e-5).unwrap();
        assert!((at_e.value - PI * PI / 6.0).abs() <= at_e.tail_bound + 1e-12);
    }

    #[test]
    fn density_is_stable_in_t_and_symmetric() {
        let x = TorusPoint::a1(PI / 2.0);
        let a = commutator_density(&a1(), &x, 1, 0.005, 1e-9).unwrap().value;
        let b = commutator_density(&a1(), &x, 1, 0.002, 1e-9).unwrap().value;
        assert!((a - b).abs() < 0.01 * b.abs());
        let y = TorusPoint::a2(0.3, 1.1);
        let f = commutator_density(&a2(), &y, 2, 0.0, 1e-6).unwrap();
        let g = commutator_density(&a2(), &y.inverse(), 2, 0.0, 1e-6).unwrap();
        assert!((f.value - g.value).abs() <= f.tail_bound + g.tail_bound);
    }

    #[test]
    fn pushforward_slots() {
        let x = TorusPoint::a1(0.9);
        let full = subgroup_pushforward_density(&a1(), &[SubgroupSlot::Full, SubgroupSlot::Torus], &x, 0.0, 1e-6).unwrap();
        assert_eq!(full.value, 1.0);
        // one trivial slot is the delta at e: the heat kernel
        let triv = subgroup_pushforward_density(&a1(), &[SubgroupSlot::Trivial], &x, 0.1, 1e-9).unwrap();
        let heat = lie_heat_kernel(&a1(), &x.inverse(), 0.1, 1e-9).unwrap();
        assert!((triv.value - heat.value).abs() < 1e-8);
        assert!(matches!(
            subgroup_pushforward_density(&a1(), &[SubgroupSlot::Torus], &x, 0.0, 1e-6),
            Err(Error::Divergence(_))
        ));
        let tor = subgroup_pushforward_density(&a2(), &[SubgroupSlot::Torus, SubgroupSlot::Torus], &TorusPoint::a2(0.4, 1.3), 0.05, 1e-7);
        assert!(tor.unwrap().value.is_finite());
    }

    #[test]
    fn vanishing_sequence() {
        let r = vanishing_limit(&a1(), &TorusPoint::a1(1.0), &[0.5, 0.1, 0.02], 1e-10).unwrap();
        assert!(r.vanishing);
        assert!(r.values.last().unwrap().1.value.abs() < 1e-3);
        let e = vanishing_limit(&a1(), &TorusPoint::a1(0.0), &[0.5, 0.1, 0.02], 1e-8).unwrap();
        assert!(!e.vanishing && e.central);
        assert!(e.values.windows(2).all(|w| w[1].1.value > w[0].1.value));
        let big = lie_heat_kernel(&a2(), &TorusPoint::a2(0.5, 1.7), 30.0, 1e-12).unwrap();
        assert!((big.value - 1.0).abs() < 1e-9);
    }

    #[test]
    fn tail_bounds_hold_under_doubling() {
        let rs = a2();
        let x = TorusPoint::a2(0.9, -0.4);
        let p = PointData::new(&rs, &x).unwrap();
        let cb = p.character_bound(&rs);
        let bound = TermBound { k: cb.k, exponent: cb.exponent - 3.0 };
        let term = |c: &[u32], d: u64, _p: f64| Ok(character_at(&rs, c, d, &p)? / (d as f64).powi(3));
        for cutoff in [10.0, 50.0, 300.0] {
            let lo = sum_at_cutoff(&rs, 0.0, bound, cutoff, None, term).unwrap();
            let hi = sum_at_cutoff(&rs, 0.0, bound, 64.0 * cutoff, None, term).unwrap();
            assert!((hi.value - lo.value).abs() <= lo.tail_bound);
        }
    }
}
