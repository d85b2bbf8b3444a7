//! Text specifications of finite groups.
//!
//! ```text
//! symmetric:<n> | alternating:<n> | cyclic:<n> | dihedral:<n> | quaternion8
//! perm:[<cycles>,<cycles>,...]      e.g. perm:[(1,2),(1,2,3)]
//! product:<spec>|<spec>             left operand may not itself contain '|'
//! ```

use std::fmt;
use std::sync::Arc;

use crate::error::{parse_err, Result};
use crate::group::{FiniteGroup, DEFAULT_MAX_ORDER};
use crate::perm::{parse_cycles, Perm};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize),
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    Quaternion8,
    /// Generators as 0-based cycle lists, on `degree` points.
    Perm { degree: usize, gens: Vec<Vec<Vec<u32>>> },
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "quaternion8" {
            return Ok(GroupSpec::Quaternion8);
        }
        let (head, arg) = text
            .split_once(':')
            .ok_or_else(|| parse_err(format!("unrecognized group spec `{text}`")))?;
        let num = || -> Result<usize> {
            let n: usize = arg
                .trim()
                .parse()
                .map_err(|_| parse_err(format!("expected a positive integer in `{text}`")))?;
            if n == 0 {
                return Err(parse_err(format!("`{text}`: parameter must be positive")));
            }
            Ok(n)
        };
        match head.trim() {
            "symmetric" => Ok(GroupSpec::Symmetric(num()?)),
            "alternating" => Ok(GroupSpec::Alternating(num()?)),
            "cyclic" => Ok(GroupSpec::Cyclic(num()?)),
            "dihedral" => Ok(GroupSpec::Dihedral(num()?)),
            "perm" => parse_perm_list(arg),
            "product" => {
                let (l, r) = arg
                    .split_once('|')
                    .ok_or_else(|| parse_err(format!("product needs `<spec>|<spec>`: `{text}`")))?;
                Ok(GroupSpec::Product(
                    Box::new(GroupSpec::parse(l)?),
                    Box::new(GroupSpec::parse(r)?),
                ))
            }
            other => Err(parse_err(format!("unknown group family `{other}`"))),
        }
    }

    pub fn build(&self, max_order: usize) -> Result<FiniteGroup> {
        let desc = Some(self.to_string());
        match self {
            GroupSpec::Symmetric(n) => {
                let n = *n;
                if n == 1 {
                    return FiniteGroup::from_permutations(&[], None, max_order, desc);
                }
                let gens = vec![cycle_perm(n, &[0, 1]), cycle_perm(n, &(0..n as u32).collect::<Vec<_>>())];
                let walk: Vec<Perm> = (0..n as u32)
                    .flat_map(|i| (i + 1..n as u32).map(move |j| (i, j)))
                    .map(|(i, j)| cycle_perm(n, &[i, j]))
                    .collect();
                FiniteGroup::from_permutations(&gens, Some(&walk), max_order, desc)
            }
            GroupSpec::Alternating(n) => {
                let n = *n;
                let gens: Vec<Perm> = (2..n as u32).map(|k| cycle_perm(n, &[0, 1, k])).collect();
                FiniteGroup::from_permutations(&gens, None, max_order, desc)
            }
            GroupSpec::Cyclic(n) => {
                let n = *n;
                let gens = vec![cycle_perm(n, &(0..n as u32).collect::<Vec<_>>())];
                FiniteGroup::from_permutations(&gens, None, max_order, desc)
            }
            GroupSpec::Dihedral(n) => {
                let gens = match *n {
                    1 => vec![cycle_perm(2, &[0, 1])],
                    2 => vec![cycle_perm(4, &[0, 1]), cycle_perm(4, &[2, 3])],
                    n => {
                        let rot = cycle_perm(n, &(0..n as u32).collect::<Vec<_>>());
                        let refl = Perm::from_images((0..n as u32).map(|i| n as u32 - 1 - i).collect());
                        vec![rot, refl]
                    }
                };
                FiniteGroup::from_permutations(&gens, None, max_order, desc)
            }
            GroupSpec::Quaternion8 => {
                let gens = vec![quaternion_left_mult(2), quaternion_left_mult(4)];
                FiniteGroup::from_permutations(&gens, None, max_order, desc)
            }
            GroupSpec::Perm { degree, gens } => {
                let perms = gens
                    .iter()
                    .map(|cycles| Perm::from_cycles(*degree, cycles))
                    .collect::<Result<Vec<_>>>()?;
                FiniteGroup::from_permutations(&perms, None, max_order, desc)
            }
            GroupSpec::Product(l, r) => {
                let a = Arc::new(l.build(max_order)?);
                let b = Arc::new(r.build(max_order)?);
                FiniteGroup::direct_product(a, b, max_order)
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            GroupSpec::Alternating(n) => write!(f, "alternating:{n}"),
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Quaternion8 => write!(f, "quaternion8"),
            GroupSpec::Perm { degree, gens } => {
                write!(f, "perm:[")?;
                for (k, g) in gens.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    let p = Perm::from_cycles(*degree, g).map_err(|_| fmt::Error)?;
                    write!(f, "{p}")?;
                }
                write!(f, "]")
            }
            GroupSpec::Product(l, r) => write!(f, "product:{l}|{r}"),
        }
    }
}

/// Parses and builds a group under the default order cap.
pub fn build_group(spec: &str) -> Result<FiniteGroup> {
    build_group_with_cap(spec, DEFAULT_MAX_ORDER)
}

pub fn build_group_with_cap(spec: &str, max_order: usize) -> Result<FiniteGroup> {
    GroupSpec::parse(spec)?.build(max_order)
}

fn cycle_perm(degree: usize, cycle: &[u32]) -> Perm {
    Perm::from_cycles(degree, &[cycle.to_vec()]).expect("valid cycle")
}

fn parse_perm_list(arg: &str) -> Result<GroupSpec> {
    let body = arg
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| parse_err(format!("perm spec must be `[...]`, got `{arg}`")))?;
    // split on commas that sit between `)` and `(`
    let mut pieces = Vec::new();
    let mut depth = 0i32;
    let mut start = 0usize;
    for (i, ch) in body.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                pieces.push(&body[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(parse_err(format!("unbalanced parentheses in `{arg}`")));
        }
    }
    if depth != 0 {
        return Err(parse_err(format!("unbalanced parentheses in `{arg}`")));
    }
    pieces.push(&body[start..]);

    let mut gens = Vec::new();
    let mut degree = 1;
    for piece in pieces {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let (cycles, max_point) = parse_cycles(piece)?;
        degree = degree.max(max_point);
        gens.push(cycles);
    }
    if gens.is_empty() {
        return Err(parse_err("perm spec lists no generators"));
    }
    // validate each generator now so errors surface at parse time
    for g in &gens {
        Perm::from_cycles(degree, g)?;
    }
    Ok(GroupSpec::Perm { degree, gens })
}

/// Left multiplication by a unit quaternion on the 8 elements ±1, ±i, ±j, ±k,
/// encoded as `2·unit + sign` with units 1, i, j, k = 0..4.
fn quaternion_left_mult(by: u32) -> Perm {
    // unit product table: (a, b) -> (sign, unit) for a·b
    fn unit_mul(a: u32, b: u32) -> (u32, u32) {
        match (a, b) {
            (0, b) => (0, b),
            (a, 0) => (0, a),
            (a, b) if a == b => (1, 0),
            (1, 2) => (0, 3),
            (2, 3) => (0, 1),
            (3, 1) => (0, 2),
            (2, 1) => (1, 3),
            (3, 2) => (1, 1),
            (1, 3) => (1, 2),
            _ => unreachable!(),
        }
    }
    let (bu, bs) = (by / 2, by % 2);
    let images = (0..8u32)
        .map(|x| {
            let (xu, xs) = (x / 2, x % 2);
            let (s, u) = unit_mul(bu, xu);
            2 * u + (s + bs + xs) % 2
        })
        .collect();
    Perm::from_images(images)
}
