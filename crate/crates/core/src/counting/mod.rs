//! Solution counts of word equations over finite groups via character sums.
//!
//! Every count is assembled as a [`SpectralSum`]: a real prefactor times a
//! sum of one complex term per irreducible character. Rounding the real part
//! to an integer is certified by a residue test whose tolerance scales with
//! the floating-point size of the sum.

pub mod oracle;
pub mod word;

use num_complex::Complex64;
use serde::Serialize;

use crate::characters::{CharacterTable, ClassFunction, Irrep, ROUND_TOL};
use crate::error::{invalid, Error, Result};
use crate::group::{Elem, Subgroup};

pub use oracle::{brute_force_count, brute_force_count_with_cap, brute_force_sum, DEFAULT_ORACLE_CAP};
pub use word::{Domain, Letter, Variable, WordEquation};

/// A certified integer count.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CountResult {
    pub count: u64,
    /// Real part of the character sum before rounding.
    pub raw_value: f64,
    /// `|raw_value − count|`
    pub residue: f64,
}

/// `prefactor · Σ_λ terms[λ]`, optionally damped by `e^{−t p(λ)}`.
#[derive(Debug, Clone)]
pub struct SpectralSum {
    pub prefactor: f64,
    pub terms: Vec<Complex64>,
}

impl SpectralSum {
    pub fn value(&self) -> Complex64 {
        self.terms.iter().sum::<Complex64>() * self.prefactor
    }

    /// `prefactor · Σ_λ e^{−t p(λ)} terms[λ]`
    pub fn damped(&self, weights: &[f64], t: f64) -> Complex64 {
        self.terms
            .iter()
            .zip(weights)
            .map(|(c, p)| c * (-t * p).exp())
            .sum::<Complex64>()
            * self.prefactor
    }

    /// `prefactor · Σ_λ |terms[λ]|`, the scale that bounds rounding error.
    pub fn magnitude(&self) -> f64 {
        self.terms.iter().map(|c| c.norm()).sum::<f64>() * self.prefactor.abs()
    }

    /// Rounds the value to a nonnegative integer with a certified residue.
    pub fn certify(&self) -> Result<CountResult> {
        certify_count(self.value(), self.magnitude())
    }
}

/// Residue tolerance for a sum whose terms have total size `magnitude`.
pub fn residue_tolerance(magnitude: f64) -> f64 {
    ROUND_TOL.max(64.0 * f64::EPSILON * magnitude)
}

/// Rounds `value` to a nonnegative integer, failing when the imaginary part
/// or the rounding residue is larger than floating-point error allows.
pub fn certify_count(value: Complex64, magnitude: f64) -> Result<CountResult> {
    let tol = residue_tolerance(magnitude);
    if tol >= 0.25 {
        return Err(Error::Resource(format!(
            "count of size ~{magnitude:e} exceeds double precision; integer rounding is not certifiable"
        )));
    }
    let raw = value.re;
    let rounded = raw.round();
    let residue = (raw - rounded).abs();
    if residue > tol || value.im.abs() > tol || !raw.is_finite() {
        return Err(Error::Consistency(format!(
            "character sum {value} is not within {tol:e} of an integer; the table is defective"
        )));
    }
    if rounded < 0.0 {
        return Err(Error::Consistency(format!("character sum rounds to negative count {rounded}")));
    }
    Ok(CountResult { count: rounded as u64, raw_value: raw, residue })
}

fn check_classes(table: &CharacterTable<'_>, classes: &[usize]) -> Result<()> {
    let k = table.group().num_classes();
    for &c in classes {
        if c >= k {
            return Err(invalid(format!("class index {c} out of range 0..{k}")));
        }
    }
    Ok(())
}

/// Terms of `#{∏[x_j,y_j]·∏z_j = x}` with `z_j ∈ classes[j]` and `x` in `target_class`:
/// `|G|^{2g+n−1}/∏|Z_{c_j}| · Σ_λ ∏χ_λ(c_j)·χ_λ(x⁻¹)/d_λ^{2g+n−1}`.
///
/// Valid for every `2g + n ≥ 0`; with no letters at all it is the delta at `e`.
pub fn surface_sum(table: &CharacterTable<'_>, genus: usize, classes: &[usize], target_class: usize) -> Result<SpectralSum> {
    check_classes(table, classes)?;
    check_classes(table, &[target_class])?;
    let group = table.group();
    let n = group.order() as f64;
    let cls = group.conjugacy_classes();
    let exp = (2 * genus + classes.len()) as i32 - 1;
    let mut prefactor = n.powi(exp);
    for &c in classes {
        prefactor /= cls[c].centralizer_order as f64;
    }
    let inv_target = group.inverse_class(target_class);
    let terms = (0..table.num_irreps())
        .map(|l| {
            let d = table.dim(l) as f64;
            let mut term = table.chi(l, inv_target) / d.powi(exp);
            for &c in classes {
                term *= table.chi(l, c);
            }
            term
        })
        .collect();
    Ok(SpectralSum { prefactor, terms })
}

/// Number of `(x₁,y₁,…,x_g,y_g; z₁,…,z_n)` with `∏[x_j,y_j]∏z_j = target`, `z_j ∈ classes[j]`.
pub fn count_surface(table: &CharacterTable<'_>, genus: usize, classes: &[usize], target: Elem) -> Result<CountResult> {
    if 2 * genus + classes.len() == 0 {
        return Err(invalid("need 2g + n ≥ 1"));
    }
    table.group().check_elem(target)?;
    surface_sum(table, genus, classes, table.group().class_of(target))?.certify()
}

/// Push-forward of counting measure under the surface word, one count per class.
#[derive(Debug, Clone, Serialize)]
pub struct Pushforward {
    pub counts: Vec<CountResult>,
}

impl Pushforward {
    pub fn class_function(&self) -> ClassFunction {
        ClassFunction::from_real(self.counts.iter().map(|c| c.count as f64))
    }

    pub fn at_class(&self, c: usize) -> u64 {
        self.counts[c].count
    }
}

/// `N(x) = #{∏[x_j,y_j]∏z_j = x}` for `x` in each class, checked against the
/// total mass `Σ_x N(x) = |G|^{2g} ∏|O_{c_j}|`.
pub fn pushforward_class_function(table: &CharacterTable<'_>, genus: usize, classes: &[usize]) -> Result<Pushforward> {
    let group = table.group();
    let counts = (0..group.num_classes())
        .map(|c| surface_sum(table, genus, classes, c)?.certify())
        .collect::<Result<Vec<_>>>()?;
    let cls = group.conjugacy_classes();
    let mass: u128 = counts.iter().zip(cls).map(|(r, c)| r.count as u128 * c.size as u128).sum();
    let mut expect: u128 = (group.order() as u128).pow(2 * genus as u32);
    for &c in classes {
        expect *= cls[c].size as u128;
    }
    if mass != expect {
        return Err(Error::Consistency(format!("push-forward mass {mass} differs from domain size {expect}")));
    }
    Ok(Pushforward { counts })
}

/// `|G| Σ_λ χ_λ(w⁻¹)/d_λ`, the number of pairs with `[x,y] = w`.
pub fn frobenius_commutator_count(table: &CharacterTable<'_>, w: Elem) -> Result<CountResult> {
    table.group().check_elem(w)?;
    let group = table.group();
    let wi = group.class_of(group.inverse(w));
    let terms = (0..table.num_irreps()).map(|l| table.chi(l, wi) / table.dim(l) as f64).collect();
    SpectralSum { prefactor: group.order() as f64, terms }.certify()
}

/// `Q_n` on every class, `Q_n(w) = #{[x₁,[x₂,[…,x_n]]] = w}`, starting from
/// `Q₁ ≡ 1` and applying
/// `Q_n(w) = Σ_λ Σ_C |C|·|χ_λ(C)|²·Q_{n−1}(C) · χ_λ(w⁻¹)/d_λ`
/// with every level rounded and certified.
pub fn n_commutator_class_function(table: &CharacterTable<'_>, n: usize) -> Result<Vec<CountResult>> {
    if n == 0 {
        return Err(invalid("n-fold commutator needs n ≥ 1"));
    }
    let k = table.group().num_classes();
    let mut q: Vec<CountResult> = vec![CountResult { count: 1, raw_value: 1.0, residue: 0.0 }; k];
    for _ in 2..=n {
        q = (0..k)
            .map(|w| n_commutator_step(table, &q, w).certify())
            .collect::<Result<Vec<_>>>()?;
    }
    Ok(q)
}

/// One level of the recursion at class `w`, given `Q_{n−1}` on every class.
pub fn n_commutator_step(table: &CharacterTable<'_>, prev: &[CountResult], w: usize) -> SpectralSum {
    let group = table.group();
    let cls = group.conjugacy_classes();
    let wi = group.inverse_class(w);
    let terms = (0..table.num_irreps())
        .map(|l| {
            let a: f64 = cls
                .iter()
                .enumerate()
                .map(|(c, cc)| cc.size as f64 * table.chi(l, c).norm_sqr() * prev[c].count as f64)
                .sum();
            table.chi(l, wi) * (a / table.dim(l) as f64)
        })
        .collect();
    SpectralSum { prefactor: 1.0, terms }
}

/// Spectral terms of `Q_n(w)`; at `n = 1` the terms are those of the constant 1.
pub fn n_commutator_sum(table: &CharacterTable<'_>, n: usize, w: Elem) -> Result<SpectralSum> {
    table.group().check_elem(w)?;
    if n == 0 {
        return Err(invalid("n-fold commutator needs n ≥ 1"));
    }
    let w = table.group().class_of(w);
    if n == 1 {
        let mut terms = vec![Complex64::new(0.0, 0.0); table.num_irreps()];
        terms[table.trivial()] = Complex64::new(1.0, 0.0);
        return Ok(SpectralSum { prefactor: 1.0, terms });
    }
    let prev = n_commutator_class_function(table, n - 1)?;
    Ok(n_commutator_step(table, &prev, w))
}

pub fn count_n_commutator(table: &CharacterTable<'_>, n: usize, w: Elem) -> Result<CountResult> {
    n_commutator_sum(table, n, w)?.certify()
}

/// Terms of `R_n = |G|^{n−1} Σ_λ ∏_j (Σ_{z∈H_j} χ_λ(z)) / d_λ^{n−2}`.
pub fn subgroup_product_sum(table: &CharacterTable<'_>, subgroups: &[Subgroup]) -> Result<SpectralSum> {
    if subgroups.is_empty() {
        return Err(invalid("need at least one subgroup"));
    }
    let n = subgroups.len() as i32;
    let terms = (0..table.num_irreps())
        .map(|l| {
            let mut term = Complex64::new(1.0, 0.0) / (table.dim(l) as f64).powi(n - 2);
            for h in subgroups {
                term *= table.subgroup_character_sum(h, l)?;
            }
            Ok(term)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectralSum { prefactor: (table.group().order() as f64).powi(n - 1), terms })
}

/// `#{(x_j; u_j) ∈ Gⁿ × ∏H_j : ∏ x_j u_j x_j⁻¹ = e}`
pub fn count_conjugate_subgroup_product(table: &CharacterTable<'_>, subgroups: &[Subgroup]) -> Result<CountResult> {
    subgroup_product_sum(table, subgroups)?.certify()
}

/// `#{∏[x_j,y_j]·z² = e} = |G|^{2g} Σ_λ ν(λ)/d_λ^{2g−1}` with ν the Frobenius–Schur indicator.
pub fn count_with_square(table: &CharacterTable<'_>, genus: usize) -> Result<CountResult> {
    let exp = 2 * genus as i32 - 1;
    let terms = (0..table.num_irreps())
        .map(|l| Ok(Complex64::new(table.frobenius_schur(l)? as f64 / (table.dim(l) as f64).powi(exp), 0.0)))
        .collect::<Result<Vec<_>>>()?;
    SpectralSum { prefactor: (table.group().order() as f64).powi(2 * genus as i32), terms }.certify()
}

/// `#{∏[x_j,y_j]·w z w⁻¹ z = e} = Σ_{w,z} N((wzw⁻¹z)⁻¹)` with `N` the genus-`g`
/// push-forward. For fixed `z`, `wzw⁻¹` covers the class of `z` exactly
/// `|Z_z|` times, so the double sum collapses to
/// `|G| Σ_C Σ_{y∈C} N((y·c)⁻¹)` with `c` the representative of `C`.
pub fn count_klein(table: &CharacterTable<'_>, genus: usize) -> Result<CountResult> {
    let group = table.group();
    let k = group.num_classes();
    let n_of_class: Vec<u64> = if genus == 0 {
        (0..k).map(|c| u64::from(c == 0)).collect()
    } else {
        pushforward_class_function(table, genus, &[])?.counts.iter().map(|r| r.count).collect()
    };
    let mut total: u128 = 0;
    for cls in group.conjugacy_classes() {
        let c = cls.representative;
        let inner: u128 = cls
            .members
            .iter()
            .map(|&y| n_of_class[group.class_of(group.inverse(group.mul(y, c)))] as u128)
            .sum();
        total += inner;
    }
    total *= group.order() as u128;
    let count = u64::try_from(total).map_err(|_| Error::Resource("klein count overflows u64".into()))?;
    Ok(CountResult { count, raw_value: count as f64, residue: 0.0 })
}

/// A complex-valued character sum with its floating-point scale.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WeightedResult {
    pub re: f64,
    pub im: f64,
    /// Bound on the accumulated rounding error of the sum.
    pub error_bound: f64,
}

impl WeightedResult {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// `Σ` over solutions of `∏[x_j,y_j]∏z_j = e` of `∏ χ_μ(x_j⁻¹)` for each
/// `(j, μ)` in `weights` (`j` is 1-based). A weight `μ` on `x_j` multiplies
/// the λ-term by the multiplicity of `λ` in `χ_μ·χ_λ`; several weights on one
/// coordinate act through their tensor product.
pub fn weighted_count(
    table: &CharacterTable<'_>,
    genus: usize,
    classes: &[usize],
    weights: &[(usize, Irrep)],
) -> Result<WeightedResult> {
    let mut per_coord: Vec<Vec<Irrep>> = vec![Vec::new(); genus];
    for &(j, mu) in weights {
        if j == 0 || j > genus {
            return Err(invalid(format!("weight coordinate x{j} is not among x1..x{genus}")));
        }
        table.check_irrep(mu)?;
        per_coord[j - 1].push(mu);
    }
    let base = surface_sum(table, genus, classes, 0)?;
    let mut terms = base.terms.clone();
    for (l, term) in terms.iter_mut().enumerate() {
        for mus in per_coord.iter().filter(|m| !m.is_empty()) {
            *term *= table.multiplicity_in_product(mus, l, l)? as f64;
        }
    }
    let sum = SpectralSum { prefactor: base.prefactor, terms };
    let v = sum.value();
    Ok(WeightedResult { re: v.re, im: v.im, error_bound: residue_tolerance(sum.magnitude()) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::group_spec::build_group;

    fn class_with_order(g: &FiniteGroup, ord: usize) -> usize {
        (0..g.num_classes())
            .find(|&c| g.element_order(g.conjugacy_classes()[c].representative) == ord)
            .unwrap()
    }

    #[test]
    fn surface_examples() {
        let g = build_group("cyclic:4").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        assert_eq!(count_surface(&t, 1, &[], 0).unwrap().count, 16);

        let g = build_group("symmetric:3").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        let three = class_with_order(&g, 3);
        let two = class_with_order(&g, 2);
        assert_eq!(count_surface(&t, 1, &[], 0).unwrap().count, 18);
        assert_eq!(count_surface(&t, 1, &[three], 0).unwrap().count, 18);
        assert_eq!(count_surface(&t, 0, &[two, two], 0).unwrap().count, 3);
        assert!(count_surface(&t, 0, &[], 0).is_err());
    }

    #[test]
    fn pushforward_on_s3() {
        let g = build_group("symmetric:3").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        let p = pushforward_class_function(&t, 1, &[]).unwrap();
        assert_eq!(p.at_class(0), 18);
        assert_eq!(p.at_class(class_with_order(&g, 3)), 9);
        assert_eq!(p.at_class(class_with_order(&g, 2)), 0);
    }

    #[test]
    fn n_commutator_examples() {
        let g = build_group("symmetric:3").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        for w in 0..6 {
            assert_eq!(count_n_commutator(&t, 1, w).unwrap().count, 1);
        }
        assert_eq!(count_n_commutator(&t, 2, 0).unwrap().count, 18);
        assert_eq!(count_n_commutator(&t, 3, 0).unwrap().count, 162);
        assert_eq!(frobenius_commutator_count(&t, 0).unwrap().count, 18);
    }

    #[test]
    fn subgroup_product_examples() {
        let g = build_group("symmetric:3").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        assert_eq!(count_conjugate_subgroup_product(&t, &[g.trivial_subgroup()]).unwrap().count, 6);
        let tr = g.conjugacy_classes()[class_with_order(&g, 2)].representative;
        let h = g.subgroup_generated(&[tr]).unwrap();
        assert_eq!(count_conjugate_subgroup_product(&t, &[h.clone(), h]).unwrap().count, 48);

        let g = build_group("cyclic:2").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        assert_eq!(count_conjugate_subgroup_product(&t, &[g.whole(), g.whole()]).unwrap().count, 8);
    }

    #[test]
    fn square_and_klein_examples() {
        let g = build_group("cyclic:2").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        assert_eq!(count_with_square(&t, 0).unwrap().count, 2);
        // every (w, z) solves w z w⁻¹ z = z² = e, and there are |G|² = 4 pairs
        assert_eq!(count_klein(&t, 0).unwrap().count, 4);
        assert_eq!(brute_force_count(&g, &WordEquation::klein(0)).unwrap(), 4);

        let g = build_group("symmetric:3").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        assert_eq!(count_with_square(&t, 0).unwrap().count, 4);
        assert_eq!(count_with_square(&t, 1).unwrap().count, 90);
    }

    #[test]
    fn weighted_examples() {
        let g = build_group("symmetric:3").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        let plain = count_surface(&t, 1, &[], 0).unwrap().count as f64;
        let w = weighted_count(&t, 1, &[], &[(1, 0)]).unwrap();
        assert!((w.re - plain).abs() < 1e-9 && w.im.abs() < 1e-9);
        assert!(weighted_count(&t, 1, &[], &[(2, 0)]).is_err());

        let g = build_group("cyclic:5").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        for mu in 1..5 {
            let w = weighted_count(&t, 1, &[], &[(1, mu)]).unwrap();
            assert!(w.value().norm() < 1e-9);
        }
    }

    #[test]
    fn certification_rejects_non_integers() {
        assert!(matches!(certify_count(Complex64::new(2.4, 0.0), 3.0), Err(Error::Consistency(_))));
        assert!(matches!(certify_count(Complex64::new(2.0, 0.1), 3.0), Err(Error::Consistency(_))));
        assert!(matches!(certify_count(Complex64::new(1e17, 0.0), 1e17), Err(Error::Resource(_))));
        assert_eq!(certify_count(Complex64::new(4.0000001, 0.0), 5.0).unwrap().count, 4);
    }
}
