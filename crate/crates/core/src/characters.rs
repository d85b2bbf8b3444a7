//! Character tables, class functions, Frobenius–Schur indicators and
//! tensor-product multiplicities.
//!
//! Tables are computed numerically from the class algebra: a random
//! Hermitian combination of the normalized class-multiplication operators is
//! diagonalized; each eigenvector is a primitive central idempotent and
//! carries one irreducible character. Every table is certified by the
//! orthogonality relations before it is returned.

use std::cmp::Ordering;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, parse_err, Error, Result};
use crate::group::{Elem, FiniteGroup, Subgroup};
use crate::numfmt::fmt_sig;

/// Tolerance for orthogonality relations.
pub const ORTHO_TOL: f64 = 1e-9;
/// Largest accepted distance from an integer when rounding a character sum.
pub const ROUND_TOL: f64 = 1e-6;
/// Default number of random eigen-splitting attempts.
pub const DEFAULT_ATTEMPTS: usize = 8;
/// Eigenvalues closer than this (relative to the spectrum scale) count as a collision.
pub const COLLISION_TOL: f64 = 1e-8;

const TABLE_SEED: u64 = 0x6865_6174_636f_756e;

/// Index of an irreducible character in a [`CharacterTable`].
pub type Irrep = usize;

#[derive(Debug, Clone)]
pub struct IrrepData {
    pub label: String,
    pub dim: u64,
    /// Character value on each conjugacy class, in class order.
    pub values: Vec<Complex64>,
}

/// A function on the group that is constant on conjugacy classes.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassFunction {
    pub values: Vec<Complex64>,
}

impl ClassFunction {
    pub fn new(values: Vec<Complex64>) -> Self {
        ClassFunction { values }
    }

    pub fn from_real(values: impl IntoIterator<Item = f64>) -> Self {
        ClassFunction { values: values.into_iter().map(|v| Complex64::new(v, 0.0)).collect() }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn pointwise_mul(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction::new(self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect())
    }

    /// `(1/|G|) Σ_x f(x) conj(g(x))`
    pub fn inner(&self, other: &ClassFunction, group: &FiniteGroup) -> Complex64 {
        let s: Complex64 = group
            .conjugacy_classes()
            .iter()
            .zip(self.values.iter().zip(&other.values))
            .map(|(c, (a, b))| a * b.conj() * c.size as f64)
            .sum();
        s / group.order() as f64
    }

    /// `Σ_x f(x)` over all elements.
    pub fn total(&self, group: &FiniteGroup) -> Complex64 {
        group
            .conjugacy_classes()
            .iter()
            .zip(&self.values)
            .map(|(c, v)| v * c.size as f64)
            .sum()
    }
}

/// Rounds `x` to the nearest integer, failing if the residue exceeds `tol`.
pub fn round_certified(x: f64, tol: f64, what: &str) -> Result<i64> {
    let r = x.round();
    if (x - r).abs() > tol || !x.is_finite() {
        return Err(Error::Consistency(format!(
            "{what}: value {x} is {} from the nearest integer (tolerance {tol})",
            (x - r).abs()
        )));
    }
    Ok(r as i64)
}

#[derive(Debug, Clone)]
pub struct CharacterTable<'g> {
    group: &'g FiniteGroup,
    irreps: Vec<IrrepData>,
    /// Class of `x²` for `x` in each class.
    square_class: Vec<usize>,
}

impl<'g> CharacterTable<'g> {
    /// Computes the table with the default number of attempts.
    pub fn compute(group: &'g FiniteGroup) -> Result<Self> {
        Self::compute_with(group, DEFAULT_ATTEMPTS, TABLE_SEED)
    }

    pub fn compute_with(group: &'g FiniteGroup, attempts: usize, seed: u64) -> Result<Self> {
        let k = group.num_classes();
        let structure = class_structure_constants(group);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut last_err = None;
        for _ in 0..attempts.max(1) {
            let coeffs: Vec<Complex64> = (0..k)
                .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                .collect();
            match split_class_algebra(group, &structure, &coeffs) {
                Ok(irreps) => match Self::from_irreps(group, irreps) {
                    Ok(t) => return Ok(t),
                    Err(e) => last_err = Some(e),
                },
                Err(e) => last_err = Some(e),
            }
        }
        Err(Error::Degenerate(format!(
            "eigenspace splitting failed after {attempts} attempts: {}",
            last_err.map(|e| e.to_string()).unwrap_or_default()
        )))
    }

    /// Orders, labels and certifies a list of irreducible characters.
    pub fn from_irreps(group: &'g FiniteGroup, mut irreps: Vec<IrrepData>) -> Result<Self> {
        let k = group.num_classes();
        if irreps.len() != k || irreps.iter().any(|r| r.values.len() != k) {
            return Err(Error::Consistency(format!(
                "a table for {k} classes needs {k} irreducibles with {k} values each"
            )));
        }
        irreps.sort_by(irrep_order);
        for (i, r) in irreps.iter_mut().enumerate() {
            r.label = format!("chi{i}");
        }
        let square_class = group
            .conjugacy_classes()
            .iter()
            .map(|c| group.class_of(group.mul(c.representative, c.representative)))
            .collect();
        let table = CharacterTable { group, irreps, square_class };
        table.certify()?;
        Ok(table)
    }

    /// Checks Σd² = |G|, χ(e) = d, and both orthogonality relations.
    pub fn certify(&self) -> Result<()> {
        let g = self.group;
        let n = g.order() as f64;
        let classes = g.conjugacy_classes();
        let sum_sq: u64 = self.irreps.iter().map(|r| r.dim * r.dim).sum();
        if sum_sq != g.order() as u64 {
            return Err(Error::Consistency(format!("sum of squared dimensions {sum_sq} != |G| = {}", g.order())));
        }
        for r in &self.irreps {
            if (r.values[0] - Complex64::new(r.dim as f64, 0.0)).norm() > 0.0 {
                return Err(Error::Consistency(format!("{}: value at identity differs from dimension", r.label)));
            }
        }
        for (a, ra) in self.irreps.iter().enumerate() {
            for (b, rb) in self.irreps.iter().enumerate().skip(a) {
                let s: Complex64 = classes
                    .iter()
                    .zip(ra.values.iter().zip(&rb.values))
                    .map(|(c, (x, y))| x * y.conj() * c.size as f64)
                    .sum::<Complex64>()
                    / n;
                let expect = if a == b { 1.0 } else { 0.0 };
                if (s - expect).norm() > ORTHO_TOL {
                    return Err(Error::Consistency(format!(
                        "row orthogonality fails for ({}, {}): {s}",
                        ra.label, rb.label
                    )));
                }
            }
        }
        for (c, cc) in classes.iter().enumerate() {
            for (d, cd) in classes.iter().enumerate().skip(c) {
                let s: Complex64 = self.irreps.iter().map(|r| r.values[c] * r.values[d].conj()).sum();
                let expect = if c == d { cc.centralizer_order as f64 } else { 0.0 };
                if (s - expect).norm() > ORTHO_TOL {
                    return Err(Error::Consistency(format!(
                        "column orthogonality fails for classes of {} and {}: {s}",
                        cc.representative, cd.representative
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn irreps(&self) -> &[IrrepData] {
        &self.irreps
    }

    pub fn num_irreps(&self) -> usize {
        self.irreps.len()
    }

    /// The trivial character is always first.
    pub fn trivial(&self) -> Irrep {
        0
    }

    pub fn dim(&self, l: Irrep) -> u64 {
        self.irreps[l].dim
    }

    /// χ_λ on class index `class`.
    #[inline]
    pub fn chi(&self, l: Irrep, class: usize) -> Complex64 {
        self.irreps[l].values[class]
    }

    /// χ_λ(x) for an element.
    #[inline]
    pub fn chi_at(&self, l: Irrep, x: Elem) -> Complex64 {
        self.irreps[l].values[self.group.class_of(x)]
    }

    pub fn character(&self, l: Irrep) -> ClassFunction {
        ClassFunction::new(self.irreps[l].values.clone())
    }

    pub fn check_irrep(&self, l: Irrep) -> Result<()> {
        if l < self.irreps.len() {
            Ok(())
        } else {
            Err(invalid(format!("irrep index {l} out of range 0..{}", self.irreps.len())))
        }
    }

    /// `(1/|G|) Σ_x χ_λ(x²)` before rounding.
    pub fn frobenius_schur_raw(&self, l: Irrep) -> Result<f64> {
        self.check_irrep(l)?;
        let s: Complex64 = self
            .group
            .conjugacy_classes()
            .iter()
            .enumerate()
            .map(|(c, cls)| self.chi(l, self.square_class[c]) * cls.size as f64)
            .sum();
        Ok(s.re / self.group.order() as f64)
    }

    /// Frobenius–Schur indicator: 1 real, −1 quaternionic, 0 complex.
    pub fn frobenius_schur(&self, l: Irrep) -> Result<i32> {
        let raw = self.frobenius_schur_raw(l)?;
        let v = round_certified(raw, ROUND_TOL, "Frobenius-Schur indicator")?;
        if !(-1..=1).contains(&v) {
            return Err(Error::Consistency(format!("indicator {v} outside {{-1, 0, 1}}")));
        }
        Ok(v as i32)
    }

    /// Multiplicities `C^ν_{μλ}` of every ν in `χ_μ·χ_λ`.
    pub fn tensor_decompose(&self, mu: Irrep, lambda: Irrep) -> Result<Vec<u64>> {
        self.check_irrep(mu)?;
        self.check_irrep(lambda)?;
        let product = self.character(mu).pointwise_mul(&self.character(lambda));
        let mut out = Vec::with_capacity(self.irreps.len());
        for nu in 0..self.irreps.len() {
            let m = product.inner(&self.character(nu), self.group);
            if m.im.abs() > ROUND_TOL {
                return Err(Error::Consistency(format!("non-real multiplicity {m}")));
            }
            let v = round_certified(m.re, ROUND_TOL, "tensor multiplicity")?;
            if v < 0 {
                return Err(Error::Consistency(format!("negative multiplicity {v}")));
            }
            out.push(v as u64);
        }
        let total: u64 = out.iter().zip(&self.irreps).map(|(m, r)| m * r.dim).sum();
        if total != self.dim(mu) * self.dim(lambda) {
            return Err(Error::Consistency("tensor multiplicities do not add up to d_μ·d_λ".into()));
        }
        Ok(out)
    }

    /// Multiplicity of `target` in `χ_{μ₁}⋯χ_{μ_k}·χ_λ`, by repeated decomposition.
    pub fn multiplicity_in_product(&self, mus: &[Irrep], lambda: Irrep, target: Irrep) -> Result<u64> {
        let mut current = vec![0u64; self.irreps.len()];
        current[lambda] = 1;
        for &mu in mus {
            let mut next = vec![0u64; self.irreps.len()];
            for (nu, &m) in current.iter().enumerate() {
                if m == 0 {
                    continue;
                }
                for (rho, c) in self.tensor_decompose(mu, nu)?.into_iter().enumerate() {
                    next[rho] += m * c;
                }
            }
            current = next;
        }
        Ok(current[target])
    }

    /// `Σ_{z∈H} χ_λ(z)`
    pub fn subgroup_character_sum(&self, h: &Subgroup, l: Irrep) -> Result<Complex64> {
        self.check_irrep(l)?;
        for &z in h.members() {
            self.group.check_elem(z)?;
        }
        Ok(h.members().iter().map(|&z| self.chi_at(l, z)).sum())
    }
}

impl CharacterTable<'_> {
    /// Writes the table as CSV: a header `label,d,class:<rep>:<size>,...`
    /// followed by one `label,d,re:im,...` row per irrep.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("label,d");
        for c in self.group.conjugacy_classes() {
            out.push_str(&format!(",class:{}:{}", c.representative, c.size));
        }
        out.push('\n');
        for r in &self.irreps {
            out.push_str(&format!("{},{}", r.label, r.dim));
            for v in &r.values {
                out.push_str(&format!(",{}:{}", fmt_sig(v.re), fmt_sig(v.im)));
            }
            out.push('\n');
        }
        out
    }
}

impl<'g> CharacterTable<'g> {
    /// Reads a table written by [`CharacterTable::to_csv`] and re-certifies it.
    /// Columns may appear in any order as long as each names a distinct class.
    pub fn from_csv(group: &'g FiniteGroup, text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| parse_err("empty character table"))?;
        let cols: Vec<&str> = header.split(',').map(str::trim).collect();
        if cols.len() < 2 || cols[0] != "label" || cols[1] != "d" {
            return Err(parse_err("table header must start with `label,d`"));
        }
        let k = group.num_classes();
        let mut column_class = Vec::with_capacity(cols.len() - 2);
        let mut seen = vec![false; k];
        for col in &cols[2..] {
            let mut parts = col.split(':');
            let (Some("class"), Some(rep), Some(size), None) = (parts.next(), parts.next(), parts.next(), parts.next())
            else {
                return Err(parse_err(format!("bad class column `{col}`")));
            };
            let rep: Elem = rep.parse().map_err(|_| parse_err(format!("bad representative in `{col}`")))?;
            let size: usize = size.parse().map_err(|_| parse_err(format!("bad class size in `{col}`")))?;
            group.check_elem(rep)?;
            let c = group.class_of(rep);
            if group.conjugacy_classes()[c].size != size {
                return Err(Error::Consistency(format!("class of {rep} has size {}, table says {size}", group.conjugacy_classes()[c].size)));
            }
            if std::mem::replace(&mut seen[c], true) {
                return Err(Error::Consistency(format!("class of {rep} appears twice")));
            }
            column_class.push(c);
        }
        if column_class.len() != k {
            return Err(Error::Consistency(format!("table has {} class columns, group has {k} classes", column_class.len())));
        }
        let mut irreps = Vec::new();
        for line in lines {
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != cols.len() {
                return Err(parse_err(format!("row `{line}` has {} fields, expected {}", fields.len(), cols.len())));
            }
            let dim: u64 = fields[1].parse().map_err(|_| parse_err(format!("bad dimension in `{line}`")))?;
            let mut values = vec![Complex64::new(0.0, 0.0); k];
            for (f, &c) in fields[2..].iter().zip(&column_class) {
                let (re, im) = f.split_once(':').ok_or_else(|| parse_err(format!("value `{f}` is not `re:im`")))?;
                let re: f64 = re.parse().map_err(|_| parse_err(format!("bad real part `{re}`")))?;
                let im: f64 = im.parse().map_err(|_| parse_err(format!("bad imaginary part `{im}`")))?;
                values[c] = Complex64::new(re, im);
            }
            irreps.push(IrrepData { label: fields[0].to_string(), dim, values });
        }
        Self::from_irreps(group, irreps)
    }
}

/// Deterministic irrep order: dimension ascending, then values descending
/// class by class (rounded to 1e-6), so the trivial character comes first.
fn irrep_order(a: &IrrepData, b: &IrrepData) -> Ordering {
    let q = |x: f64| (x * 1e6).round() as i64;
    a.dim.cmp(&b.dim).then_with(|| {
        for (x, y) in a.values.iter().zip(&b.values) {
            let o = q(y.re).cmp(&q(x.re)).then(q(y.im).cmp(&q(x.im)));
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    })
}

/// `a[(j·k + i)·k + l]` = #{x ∈ C_j : x⁻¹·g_l ∈ C_i}, the coefficient of
/// `C_l` in the class-sum product `C_j·C_i`.
fn class_structure_constants(group: &FiniteGroup) -> Vec<f64> {
    let k = group.num_classes();
    let reps: Vec<Elem> = group.conjugacy_classes().iter().map(|c| c.representative).collect();
    let mut a = vec![0.0; k * k * k];
    for x in 0..group.order() as Elem {
        let j = group.class_of(x);
        let xi = group.inverse(x);
        for (l, &g) in reps.iter().enumerate() {
            let i = group.class_of(group.mul(xi, g));
            a[(j * k + i) * k + l] += 1.0;
        }
    }
    a
}

fn split_class_algebra(group: &FiniteGroup, a: &[f64], coeffs: &[Complex64]) -> Result<Vec<IrrepData>> {
    let k = group.num_classes();
    let sizes: Vec<f64> = group.conjugacy_classes().iter().map(|c| c.size as f64).collect();
    let sq: Vec<f64> = sizes.iter().map(|s| s.sqrt()).collect();

    // M = Σ_j c_j T_j, T_j = left multiplication by the class sum C_j in the
    // orthonormal basis C_l/√|C_l|; each T_j is normal and they commute
    let mut m = DMatrix::<Complex64>::zeros(k, k);
    for (j, &c) in coeffs.iter().enumerate() {
        for i in 0..k {
            for l in 0..k {
                let v = a[(j * k + i) * k + l];
                if v != 0.0 {
                    m[(l, i)] += c * (v * sq[l] / sq[i]);
                }
            }
        }
    }
    let h = &m + m.adjoint();
    let eig = h.symmetric_eigen();

    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&x, &y| eig.eigenvalues[x].total_cmp(&eig.eigenvalues[y]));
    let scale = eig.eigenvalues.iter().fold(1.0f64, |s, v| s.max(v.abs()));
    for w in order.windows(2) {
        if (eig.eigenvalues[w[1]] - eig.eigenvalues[w[0]]).abs() < COLLISION_TOL * scale {
            return Err(Error::Degenerate("eigenvalue collision".into()));
        }
    }

    let n = group.order() as f64;
    let mut irreps = Vec::with_capacity(k);
    for col in 0..k {
        let u = eig.eigenvectors.column(col);
        // eigenvectors are the primitive central idempotents: u_l ∝ conj(χ(C_l))·√|C_l|
        let v0 = u[0].conj();
        if v0.norm() < 1e-12 {
            return Err(Error::Degenerate("eigenvector vanishes at the identity class".into()));
        }
        let ratio: Vec<Complex64> = (0..k).map(|l| u[l].conj() / sq[l] / v0).collect();
        let norm: f64 = (0..k).map(|l| ratio[l].norm_sqr() * sizes[l]).sum();
        let d_raw = (n / norm).sqrt();
        let dim = round_certified(d_raw, ROUND_TOL, "irreducible dimension")?;
        if dim < 1 {
            return Err(Error::Degenerate("non-positive dimension".into()));
        }
        let d = dim as f64;
        let mut values: Vec<Complex64> = ratio.iter().map(|r| r * d).collect();
        values[0] = Complex64::new(d, 0.0);
        irreps.push(IrrepData { label: String::new(), dim: dim as u64, values });
    }
    Ok(irreps)
}
