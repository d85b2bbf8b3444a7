//! Word equations `w(x, z, u, c) = target` over a finite group.
//!
//! Text grammar: letters separated by `*`. A letter is a variable name
//! (`x1`, `y2`, `w`, ...), optionally constrained as `z1@<class-rep>` or
//! `u1@H<i>` (1-based index into the supplied subgroup list), an inverse
//! `inv(<letter>)`, or a constant `c:<element-index>`. An optional
//! `=> <element-index>` sets the target (default the identity).
//!
//! ```text
//! x1*y1*inv(x1)*inv(y1) => 0
//! x1*u1@H1*inv(x1)*x2*u2@H2*inv(x2)
//! ```

use std::fmt;

use crate::error::{invalid, parse_err, Result};
use crate::group::{Elem, FiniteGroup, Subgroup};

/// Where a variable ranges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Domain {
    Free,
    /// The conjugacy class containing this representative.
    Class(Elem),
    /// Index into [`WordEquation::subgroups`].
    Subgroup(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub domain: Domain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    Var { index: usize, inverse: bool },
    Const { elem: Elem, inverse: bool },
}

#[derive(Debug, Clone)]
pub struct WordEquation {
    pub variables: Vec<Variable>,
    pub word: Vec<Letter>,
    pub subgroups: Vec<Subgroup>,
    pub target: Elem,
}

impl WordEquation {
    pub fn new(variables: Vec<Variable>, word: Vec<Letter>, subgroups: Vec<Subgroup>, target: Elem) -> Result<Self> {
        let eq = WordEquation { variables, word, subgroups, target };
        for l in &eq.word {
            if let Letter::Var { index, .. } = l {
                if *index >= eq.variables.len() {
                    return Err(invalid(format!("word references undeclared variable #{index}")));
                }
            }
        }
        for v in &eq.variables {
            if let Domain::Subgroup(h) = v.domain {
                if h >= eq.subgroups.len() {
                    return Err(invalid(format!("variable {} uses subgroup H{} which was not supplied", v.name, h + 1)));
                }
            }
        }
        Ok(eq)
    }

    /// Parses the text grammar; `subgroups` resolves `H<i>` references.
    pub fn parse(text: &str, subgroups: &[Subgroup]) -> Result<Self> {
        let (lhs, target) = match text.split_once("=>") {
            Some((l, t)) => {
                let t = t.trim();
                let target = t.parse().map_err(|_| parse_err(format!("bad target `{t}`")))?;
                (l, target)
            }
            None => (text, 0),
        };
        let mut variables: Vec<Variable> = Vec::new();
        let mut word = Vec::new();
        for raw in lhs.split('*') {
            let tok = raw.trim();
            if tok.is_empty() {
                return Err(parse_err(format!("empty letter in `{text}`")));
            }
            let (inverse, body) = match tok.strip_prefix("inv(").and_then(|s| s.strip_suffix(')')) {
                Some(inner) => (true, inner.trim()),
                None => (false, tok),
            };
            if let Some(c) = body.strip_prefix("c:") {
                let c: Elem = c.trim().parse().map_err(|_| parse_err(format!("bad constant `{body}`")))?;
                word.push(Letter::Const { elem: c, inverse });
                continue;
            }
            let (name, domain) = match body.split_once('@') {
                Some((n, d)) => (n.trim(), Some(parse_domain(d.trim())?)),
                None => (body, None),
            };
            check_name(name)?;
            let index = match variables.iter().position(|v| v.name == name) {
                Some(i) => {
                    if let Some(d) = domain {
                        if variables[i].domain == Domain::Free {
                            variables[i].domain = d;
                        } else if variables[i].domain != d {
                            return Err(parse_err(format!("conflicting constraints on `{name}`")));
                        }
                    }
                    i
                }
                None => {
                    variables.push(Variable { name: name.to_string(), domain: domain.unwrap_or(Domain::Free) });
                    variables.len() - 1
                }
            };
            word.push(Letter::Var { index, inverse });
        }
        WordEquation::new(variables, word, subgroups.to_vec(), target)
    }

    /// Checks every element index against `group`.
    pub fn bind(self, group: &FiniteGroup) -> Result<Self> {
        group.check_elem(self.target)?;
        for l in &self.word {
            if let Letter::Const { elem, .. } = l {
                group.check_elem(*elem)?;
            }
        }
        for v in &self.variables {
            if let Domain::Class(r) = v.domain {
                group.check_elem(r)?;
            }
        }
        for h in &self.subgroups {
            for &m in h.members() {
                group.check_elem(m)?;
            }
        }
        Ok(self)
    }

    /// Elements a variable ranges over.
    pub fn domain_members<'a>(&'a self, group: &'a FiniteGroup, var: usize) -> DomainIter<'a> {
        match self.variables[var].domain {
            Domain::Free => DomainIter::Range(0..group.order() as Elem),
            Domain::Class(r) => DomainIter::Slice(group.conjugacy_classes()[group.class_of(r)].members.iter()),
            Domain::Subgroup(h) => DomainIter::Slice(self.subgroups[h].members().iter()),
        }
    }

    pub fn domain_size(&self, group: &FiniteGroup, var: usize) -> usize {
        match self.variables[var].domain {
            Domain::Free => group.order(),
            Domain::Class(r) => group.conjugacy_classes()[group.class_of(r)].size,
            Domain::Subgroup(h) => self.subgroups[h].order(),
        }
    }

    /// `∏ domain sizes`, saturating.
    pub fn search_space(&self, group: &FiniteGroup) -> u128 {
        (0..self.variables.len()).fold(1u128, |acc, v| acc.saturating_mul(self.domain_size(group, v) as u128))
    }

    /// The surface word `∏[x_j, y_j] ∏ z_j` with class constraints.
    pub fn surface(genus: usize, class_reps: &[Elem], target: Elem) -> Self {
        let mut b = Builder::default();
        b.commutators(genus);
        for (j, &c) in class_reps.iter().enumerate() {
            let z = b.var(format!("z{}", j + 1), Domain::Class(c));
            b.push(z, false);
        }
        b.finish(Vec::new(), target)
    }

    /// `[x₁,[x₂,[…,x_n]]]`, built as the nested commutator word.
    pub fn nested_commutator(n: usize, target: Elem) -> Self {
        let mut b = Builder::default();
        let vars: Vec<usize> = (1..=n).map(|i| b.var(format!("x{i}"), Domain::Free)).collect();
        let word = nested(&vars);
        b.word = word;
        b.finish(Vec::new(), target)
    }

    /// `∏ x_j u_j x_j⁻¹` with `u_j ∈ H_j`.
    pub fn conjugate_subgroup_product(subgroups: &[Subgroup]) -> Self {
        let mut b = Builder::default();
        for j in 0..subgroups.len() {
            let x = b.var(format!("x{}", j + 1), Domain::Free);
            let u = b.var(format!("u{}", j + 1), Domain::Subgroup(j));
            b.push(x, false);
            b.push(u, false);
            b.push(x, true);
        }
        b.finish(subgroups.to_vec(), 0)
    }

    /// `∏[x_j, y_j]·z²`
    pub fn with_square(genus: usize) -> Self {
        let mut b = Builder::default();
        b.commutators(genus);
        let z = b.var("z".into(), Domain::Free);
        b.push(z, false);
        b.push(z, false);
        b.finish(Vec::new(), 0)
    }

    /// `∏[x_j, y_j]·w z w⁻¹ z`
    pub fn klein(genus: usize) -> Self {
        let mut b = Builder::default();
        b.commutators(genus);
        let w = b.var("w".into(), Domain::Free);
        let z = b.var("z".into(), Domain::Free);
        b.push(w, false);
        b.push(z, false);
        b.push(w, true);
        b.push(z, false);
        b.finish(Vec::new(), 0)
    }
}

impl fmt::Display for WordEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut declared = vec![false; self.variables.len()];
        for (k, l) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            match *l {
                Letter::Const { elem, inverse: false } => write!(f, "c:{elem}")?,
                Letter::Const { elem, inverse: true } => write!(f, "inv(c:{elem})")?,
                Letter::Var { index, inverse } => {
                    let v = &self.variables[index];
                    let mut s = v.name.clone();
                    if !std::mem::replace(&mut declared[index], true) {
                        match v.domain {
                            Domain::Free => {}
                            Domain::Class(r) => s.push_str(&format!("@{r}")),
                            Domain::Subgroup(h) => s.push_str(&format!("@H{}", h + 1)),
                        }
                    }
                    if inverse {
                        write!(f, "inv({s})")?;
                    } else {
                        write!(f, "{s}")?;
                    }
                }
            }
        }
        write!(f, " => {}", self.target)
    }
}

pub enum DomainIter<'a> {
    Range(std::ops::Range<Elem>),
    Slice(std::slice::Iter<'a, Elem>),
}

impl Iterator for DomainIter<'_> {
    type Item = Elem;

    fn next(&mut self) -> Option<Elem> {
        match self {
            DomainIter::Range(r) => r.next(),
            DomainIter::Slice(s) => s.next().copied(),
        }
    }
}

#[derive(Default)]
struct Builder {
    variables: Vec<Variable>,
    word: Vec<Letter>,
}

impl Builder {
    fn var(&mut self, name: String, domain: Domain) -> usize {
        self.variables.push(Variable { name, domain });
        self.variables.len() - 1
    }

    fn push(&mut self, index: usize, inverse: bool) {
        self.word.push(Letter::Var { index, inverse });
    }

    fn commutators(&mut self, genus: usize) {
        for j in 1..=genus {
            let x = self.var(format!("x{j}"), Domain::Free);
            let y = self.var(format!("y{j}"), Domain::Free);
            self.push(x, false);
            self.push(y, false);
            self.push(x, true);
            self.push(y, true);
        }
    }

    fn finish(self, subgroups: Vec<Subgroup>, target: Elem) -> WordEquation {
        WordEquation { variables: self.variables, word: self.word, subgroups, target }
    }
}

/// Word of `[v₀,[v₁,[…]]]`; a single variable is itself.
fn nested(vars: &[usize]) -> Vec<Letter> {
    match vars {
        [] => Vec::new(),
        [v] => vec![Letter::Var { index: *v, inverse: false }],
        [v, rest @ ..] => {
            let inner = nested(rest);
            let mut w = vec![Letter::Var { index: *v, inverse: false }];
            w.extend(inner.iter().copied());
            w.push(Letter::Var { index: *v, inverse: true });
            w.extend(invert_word(&inner));
            w
        }
    }
}

fn invert_word(w: &[Letter]) -> Vec<Letter> {
    w.iter()
        .rev()
        .map(|l| match *l {
            Letter::Var { index, inverse } => Letter::Var { index, inverse: !inverse },
            Letter::Const { elem, inverse } => Letter::Const { elem, inverse: !inverse },
        })
        .collect()
}

fn parse_domain(d: &str) -> Result<Domain> {
    if let Some(h) = d.strip_prefix('H') {
        let i: usize = h.parse().map_err(|_| parse_err(format!("bad subgroup reference `{d}`")))?;
        if i == 0 {
            return Err(parse_err("subgroups are numbered from H1"));
        }
        Ok(Domain::Subgroup(i - 1))
    } else {
        let r: Elem = d.parse().map_err(|_| parse_err(format!("bad class representative `{d}`")))?;
        Ok(Domain::Class(r))
    }
}

fn check_name(name: &str) -> Result<()> {
    let mut chars = name.chars();
    let ok = matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && name != "c"
        && name != "inv";
    if ok {
        Ok(())
    } else {
        Err(parse_err(format!("bad variable name `{name}`")))
    }
}
