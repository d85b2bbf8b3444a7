//! Permutations on the points `0..n`, printed and parsed 1-based in cycle notation.

use std::fmt;

use crate::error::{parse_err, Result};

/// A permutation stored as its image list: `self.0[i]` is the image of point `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Box<[u32]>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Self {
        Perm(images.into_boxed_slice())
    }

    /// Builds a permutation of `degree` points from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let p = p as usize;
                if p >= degree {
                    return Err(parse_err(format!("point {} outside 1..{}", p + 1, degree)));
                }
                if seen[p] {
                    return Err(parse_err(format!("point {} repeated in cycle list", p + 1)));
                }
                seen[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Perm(images.into_boxed_slice()))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&p| self.0[p as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p as usize] = i as u32;
        }
        Perm(inv.into_boxed_slice())
    }

    /// Extends to a larger degree by fixing the new points.
    pub fn extend(&self, degree: usize) -> Perm {
        let mut images = self.0.to_vec();
        images.extend(self.degree() as u32..degree as u32);
        Perm(images.into_boxed_slice())
    }

    /// Places `self` on points `0..a` and `other` on `a..a+b`.
    pub fn disjoint_sum(&self, other: &Perm) -> Perm {
        let shift = self.degree() as u32;
        let mut images = self.0.to_vec();
        images.extend(other.0.iter().map(|&p| p + shift));
        Perm(images.into_boxed_slice())
    }

    /// Non-trivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p as u32);
                p = self.0[p] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Parses `(a,b,...)(c,d)` products of 1-based cycles into 0-based cycles.
/// Returns the cycles and the largest point mentioned (1-based).
pub fn parse_cycles(text: &str) -> Result<(Vec<Vec<u32>>, usize)> {
    let mut cycles = Vec::new();
    let mut max_point = 0usize;
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(parse_err("empty permutation"));
    }
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(parse_err(format!("expected '(' in permutation `{text}`")));
        };
        let close = body
            .find(')')
            .ok_or_else(|| parse_err(format!("unclosed cycle in `{text}`")))?;
        let inner = body[..close].trim();
        let mut cycle = Vec::new();
        if !inner.is_empty() {
            for tok in inner.split(',') {
                let p: usize = tok
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(format!("bad point `{}` in `{text}`", tok.trim())))?;
                if p == 0 {
                    return Err(parse_err("points are numbered from 1"));
                }
                max_point = max_point.max(p);
                cycle.push((p - 1) as u32);
            }
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok((cycles, max_point))
}
