//! Heat kernels on finite groups and the heat-regularized counts `I(t)`.
//!
//! `H(t, x, y) = (1/|G|) Σ_λ d_λ χ_λ(xy⁻¹) e^{−t p(λ)}` for a spectral weight
//! `p`. At `t = 0` it is the delta function, so the damped counting sums
//! `I(t)` recover the exact counts.

use num_complex::Complex64;
use serde::Serialize;

use crate::characters::CharacterTable;
use crate::counting::{
    n_commutator_sum, subgroup_product_sum, surface_sum, CountResult, SpectralSum,
};
use crate::error::{invalid, Error, Result};
use crate::group::{Elem, Subgroup};

/// Largest tolerated imaginary part of a heat-kernel value.
pub const IMAG_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WeightSource {
    /// Random-walk Laplacian of the Cayley graph for this symmetric generating set.
    CayleyLaplacian { generators: Vec<Elem> },
    UserSupplied,
}

/// One nonnegative eigenvalue `p(λ)` per irreducible character.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralWeight {
    pub values: Vec<f64>,
    pub source: WeightSource,
}

impl SpectralWeight {
    /// Smallest `p(λ)` over nontrivial λ, or infinity for the trivial group.
    pub fn gap(&self) -> f64 {
        self.values.iter().skip(1).copied().fold(f64::INFINITY, f64::min)
    }
}

/// `p(λ) = |S| − Re Σ_{s∈S} χ_λ(s)/d_λ`, the eigenvalue of the Cayley-graph
/// Laplacian on the λ-isotypic component.
pub fn cayley_weight(table: &CharacterTable<'_>, generators: &[Elem]) -> Result<SpectralWeight> {
    let group = table.group();
    for &s in generators {
        group.check_elem(s)?;
        if !generators.contains(&group.inverse(s)) {
            return Err(invalid(format!("generating set is not symmetric: inverse of {s} missing")));
        }
    }
    if !group.generates(generators)? {
        return Err(invalid("set does not generate the group"));
    }
    let size = generators.len() as f64;
    let mut values = Vec::with_capacity(table.num_irreps());
    for l in 0..table.num_irreps() {
        if l == table.trivial() {
            values.push(0.0);
            continue;
        }
        let s: f64 = generators.iter().map(|&g| table.chi_at(l, g).re).sum();
        let p = size - s / table.dim(l) as f64;
        if p <= 1e-9 {
            return Err(Error::Consistency(format!(
                "nontrivial character {} has zero Laplacian eigenvalue although the set generates",
                table.irreps()[l].label
            )));
        }
        values.push(p);
    }
    Ok(SpectralWeight { values, source: WeightSource::CayleyLaplacian { generators: generators.to_vec() } })
}

/// Cayley weight on the group's canonical walk set.
pub fn default_weight(table: &CharacterTable<'_>) -> Result<SpectralWeight> {
    cayley_weight(table, table.group().walk_set())
}

pub fn user_weight(table: &CharacterTable<'_>, values: Vec<f64>) -> Result<SpectralWeight> {
    if values.len() != table.num_irreps() {
        return Err(invalid(format!("expected {} weights, got {}", table.num_irreps(), values.len())));
    }
    if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
        return Err(invalid("spectral weights must be finite and nonnegative"));
    }
    Ok(SpectralWeight { values, source: WeightSource::UserSupplied })
}

fn check_weight(table: &CharacterTable<'_>, weight: &SpectralWeight) -> Result<()> {
    if weight.values.len() != table.num_irreps() {
        return Err(invalid("spectral weight does not match the character table"));
    }
    Ok(())
}

fn check_time(t: f64) -> Result<()> {
    if !t.is_finite() || t < 0.0 {
        return Err(invalid(format!("time must be finite and nonnegative, got {t}")));
    }
    Ok(())
}

/// `H(t, ·, e)` on the class `c`. At `t = 0` the column-orthogonality sum is
/// rounded to the exact delta.
pub fn heat_kernel_class(table: &CharacterTable<'_>, weight: &SpectralWeight, t: f64, c: usize) -> Result<f64> {
    check_weight(table, weight)?;
    check_time(t)?;
    let group = table.group();
    if c >= group.num_classes() {
        return Err(invalid(format!("class index {c} out of range")));
    }
    let n = group.order() as f64;
    let v: Complex64 = (0..table.num_irreps())
        .map(|l| table.chi(l, c) * (table.dim(l) as f64 * (-t * weight.values[l]).exp()))
        .sum::<Complex64>()
        / n;
    if v.im.abs() > IMAG_TOL {
        return Err(Error::Consistency(format!("heat kernel has imaginary part {}", v.im)));
    }
    if t == 0.0 {
        let delta = if c == 0 { 1.0 } else { 0.0 };
        if (v.re - delta).abs() > IMAG_TOL {
            return Err(Error::Consistency(format!("t = 0 kernel {} is not the delta", v.re)));
        }
        return Ok(delta);
    }
    Ok(v.re)
}

/// `H(t, x, y)`
pub fn heat_kernel(table: &CharacterTable<'_>, weight: &SpectralWeight, t: f64, x: Elem, y: Elem) -> Result<f64> {
    let group = table.group();
    group.check_elem(x)?;
    group.check_elem(y)?;
    heat_kernel_class(table, weight, t, group.class_of(group.mul(x, group.inverse(y))))
}

/// Heat kernel at a fixed time, one value per class of `xy⁻¹`.
#[derive(Debug, Clone, Serialize)]
pub struct HeatKernelValue {
    pub t: f64,
    pub values: Vec<f64>,
}

pub fn heat_kernel_values(table: &CharacterTable<'_>, weight: &SpectralWeight, t: f64) -> Result<HeatKernelValue> {
    let values = (0..table.group().num_classes())
        .map(|c| heat_kernel_class(table, weight, t, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(HeatKernelValue { t, values })
}

/// Equation families whose counts have a heat-regularized form.
#[derive(Debug, Clone)]
pub enum HeatFamily {
    Surface { genus: usize, classes: Vec<usize>, target: Elem },
    NCommutator { n: usize, target: Elem },
    SubgroupProduct { subgroups: Vec<Subgroup> },
}

impl HeatFamily {
    pub fn spectral_sum(&self, table: &CharacterTable<'_>) -> Result<SpectralSum> {
        match self {
            HeatFamily::Surface { genus, classes, target } => {
                if 2 * genus + classes.len() == 0 {
                    return Err(invalid("need 2g + n ≥ 1"));
                }
                table.group().check_elem(*target)?;
                surface_sum(table, *genus, classes, table.group().class_of(*target))
            }
            HeatFamily::NCommutator { n, target } => n_commutator_sum(table, *n, *target),
            HeatFamily::SubgroupProduct { subgroups } => subgroup_product_sum(table, subgroups),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HeatPoint {
    pub t: f64,
    /// `I(t)`
    pub value: f64,
    /// `|I(t) − count|`
    pub error: f64,
    /// `Σ_{λ≠triv} |term_λ|·(1 − e^{−t p(λ)})`, a rigorous bound on `error`.
    pub error_bound: f64,
    /// `|I(t) − I(∞)|`, bounded by `decay_constant · e^{−t·gap}`.
    pub distance_to_infinity: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct HeatLimit {
    pub exact: CountResult,
    /// `I(∞)`, the trivial-character term.
    pub limit_at_infinity: f64,
    /// Smallest weight over nontrivial characters with a nonzero term.
    pub gap: f64,
    /// `Σ_{λ≠triv} |term_λ|`
    pub decay_constant: f64,
    pub points: Vec<HeatPoint>,
}

/// `I(t) = Σ_λ e^{−t p(λ)} term_λ` for each `t` in a nonincreasing sequence,
/// with the exact count it converges to as `t → 0`.
pub fn heat_count_limit(
    table: &CharacterTable<'_>,
    weight: &SpectralWeight,
    family: &HeatFamily,
    ts: &[f64],
) -> Result<HeatLimit> {
    check_weight(table, weight)?;
    for &t in ts {
        check_time(t)?;
    }
    if ts.windows(2).any(|w| w[1] > w[0]) {
        return Err(invalid("time sequence must be nonincreasing"));
    }
    let sum = family.spectral_sum(table)?;
    let exact = sum.certify()?;
    let triv = table.trivial();
    let scaled = |c: Complex64| c.norm() * sum.prefactor.abs();
    let limit_at_infinity = (sum.terms[triv] * sum.prefactor).re;
    let nontrivial = || (0..sum.terms.len()).filter(move |&l| l != triv);
    let decay_constant: f64 = nontrivial().map(|l| scaled(sum.terms[l])).sum();
    let gap = nontrivial()
        .filter(|&l| scaled(sum.terms[l]) > 0.0)
        .map(|l| weight.values[l])
        .fold(f64::INFINITY, f64::min);
    let points = ts
        .iter()
        .map(|&t| {
            let value = if t == 0.0 { exact.count as f64 } else { sum.damped(&weight.values, t).re };
            let error_bound = nontrivial()
                .map(|l| scaled(sum.terms[l]) * -(-t * weight.values[l]).exp_m1())
                .sum();
            HeatPoint {
                t,
                value,
                error: (value - exact.count as f64).abs(),
                error_bound,
                distance_to_infinity: (value - limit_at_infinity).abs(),
            }
        })
        .collect();
    Ok(HeatLimit { exact, limit_at_infinity, gap, decay_constant, points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_spec::build_group;

    #[test]
    fn cyclic2_weight_and_kernel() {
        let g = build_group("cyclic:2").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        let w = cayley_weight(&t, &[1]).unwrap();
        assert_eq!(w.values, vec![0.0, 2.0]);
        for time in [0.1, 1.0, 3.0] {
            let h = heat_kernel(&t, &w, time, 0, 0).unwrap();
            assert!((h - (1.0 + (-2.0 * time).exp()) / 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn delta_at_time_zero() {
        let g = build_group("symmetric:3").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        let w = default_weight(&t).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(heat_kernel(&t, &w, 0.0, x, y).unwrap(), if x == y { 1.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn large_time_is_uniform() {
        let g = build_group("symmetric:3").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        let w = default_weight(&t).unwrap();
        assert!(w.values[0] == 0.0 && w.values[1..].iter().all(|&p| p > 0.0));
        for x in 0..6 {
            assert!((heat_kernel(&t, &w, 10.0, x, 0).unwrap() - 1.0 / 6.0).abs() < 1e-8);
        }
    }

    #[test]
    fn complement_of_identity_gives_flat_spectrum() {
        let g = build_group("alternating:4").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        let all: Vec<Elem> = (1..12).collect();
        let w = cayley_weight(&t, &all).unwrap();
        for &p in &w.values[1..] {
            assert!((p - 12.0).abs() < 1e-9);
        }
    }

    #[test]
    fn rejects_bad_generating_sets() {
        let g = build_group("symmetric:3").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        let three = (0..6).find(|&x| g.element_order(x) == 3).unwrap();
        assert!(cayley_weight(&t, &[three]).is_err());
        assert!(cayley_weight(&t, &[three, g.inverse(three)]).is_err());
        assert!(user_weight(&t, vec![0.0, -1.0, 2.0]).is_err());
        assert!(heat_kernel(&t, &default_weight(&t).unwrap(), -1.0, 0, 0).is_err());
    }

    #[test]
    fn surface_limit_on_s3() {
        let g = build_group("symmetric:3").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        let w = default_weight(&t).unwrap();
        let fam = HeatFamily::Surface { genus: 1, classes: vec![], target: 0 };
        let lim = heat_count_limit(&t, &w, &fam, &[2.0, 1.0, 0.1, 0.01, 0.0]).unwrap();
        assert_eq!(lim.exact.count, 18);
        assert_eq!(lim.points.last().unwrap().value, 18.0);
        assert!((lim.limit_at_infinity - 6.0).abs() < 1e-9);
        let mut prev = 0.0;
        for p in &lim.points {
            assert!(p.value >= prev);
            assert!(p.error <= p.error_bound + 1e-9);
            assert!(p.distance_to_infinity <= lim.decay_constant * (-p.t * lim.gap).exp() + 1e-9);
            prev = p.value;
        }
        assert!(heat_count_limit(&t, &w, &fam, &[0.1, 1.0]).is_err());
    }

    #[test]
    fn abelian_surface_limit() {
        let g = build_group("cyclic:5").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        let w = default_weight(&t).unwrap();
        let fam = HeatFamily::Surface { genus: 1, classes: vec![], target: 0 };
        let lim = heat_count_limit(&t, &w, &fam, &[0.5]).unwrap();
        let expect: f64 = w.values.iter().map(|p| (-0.5 * p).exp() * 5.0).sum();
        assert!((lim.points[0].value - expect).abs() < 1e-9);
        assert_eq!(lim.exact.count, 25);
    }
}
