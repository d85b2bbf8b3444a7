//! Exhaustive enumeration of word-equation solutions.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::counting::word::{Letter, WordEquation};
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};

/// Default cap on the number of assignments enumerated.
pub const DEFAULT_ORACLE_CAP: u128 = 100_000_000;

/// Counts solutions of `eq` by trying every assignment, with the default cap.
pub fn brute_force_count(group: &FiniteGroup, eq: &WordEquation) -> Result<u64> {
    brute_force_count_with_cap(group, eq, DEFAULT_ORACLE_CAP)
}

pub fn brute_force_count_with_cap(group: &FiniteGroup, eq: &WordEquation, cap: u128) -> Result<u64> {
    let plan = Plan::new(group, eq, cap)?;
    Ok(plan.collect_parts(|_, acc: &mut u64| *acc += 1).into_iter().sum())
}

/// Sums `weight(assignment)` over all solutions of `eq`. Used as the oracle
/// for weighted counts.
pub fn brute_force_sum<F>(group: &FiniteGroup, eq: &WordEquation, cap: u128, weight: F) -> Result<Complex64>
where
    F: Fn(&[Elem]) -> Complex64 + Sync,
{
    let plan = Plan::new(group, eq, cap)?;
    let parts: Vec<Complex64> = plan.collect_parts(|assignment, acc: &mut Complex64| {
        *acc += weight(assignment);
    });
    // fixed-order reduction keeps the result independent of scheduling
    Ok(parts.into_iter().sum())
}

/// Variables in order of first appearance, with the word segment that
/// becomes computable once each is assigned.
struct Plan<'a> {
    group: &'a FiniteGroup,
    eq: &'a WordEquation,
    /// `order[k]` is the k-th variable assigned.
    order: Vec<usize>,
    /// Word letters `[start_k, start_{k+1})` for each depth, plus the tail.
    segments: Vec<(usize, usize)>,
    /// Letters before the first variable.
    head: (usize, usize),
}

impl<'a> Plan<'a> {
    fn new(group: &'a FiniteGroup, eq: &'a WordEquation, cap: u128) -> Result<Self> {
        let space = eq.search_space(group);
        if space > cap {
            return Err(Error::Resource(format!("oracle search space {space} exceeds cap {cap}")));
        }
        let mut order = Vec::new();
        let mut starts = Vec::new();
        let mut seen = vec![false; eq.variables.len()];
        for (pos, l) in eq.word.iter().enumerate() {
            if let Letter::Var { index, .. } = *l {
                if !std::mem::replace(&mut seen[index], true) {
                    order.push(index);
                    starts.push(pos);
                }
            }
        }
        // variables declared but absent from the word range freely and multiply the count
        for (v, s) in seen.iter().enumerate() {
            if !s {
                order.push(v);
                starts.push(eq.word.len());
            }
        }
        let mut segments = Vec::with_capacity(order.len());
        for k in 0..order.len() {
            let end = starts.get(k + 1).copied().unwrap_or(eq.word.len());
            segments.push((starts[k], end.max(starts[k])));
        }
        let head = (0, starts.first().copied().unwrap_or(eq.word.len()));
        Ok(Plan { group, eq, order, segments, head })
    }

    fn apply(&self, mut acc: Elem, range: (usize, usize), assignment: &[Elem]) -> Elem {
        for l in &self.eq.word[range.0..range.1] {
            let x = match *l {
                Letter::Var { index, inverse } => {
                    let v = assignment[index];
                    if inverse {
                        self.group.inverse(v)
                    } else {
                        v
                    }
                }
                Letter::Const { elem, inverse } => {
                    if inverse {
                        self.group.inverse(elem)
                    } else {
                        elem
                    }
                }
            };
            acc = self.group.mul(acc, x);
        }
        acc
    }

    /// Splits the search on the first variable and returns one partial
    /// accumulator per value of it, in domain order.
    fn collect_parts<T, F>(&self, visit: F) -> Vec<T>
    where
        T: Default + Send,
        F: Fn(&[Elem], &mut T) + Sync,
    {
        let start = self.apply(0, self.head, &[]);
        let nvars = self.eq.variables.len();
        if self.order.is_empty() {
            let mut acc = T::default();
            if start == self.eq.target {
                visit(&[], &mut acc);
            }
            return vec![acc];
        }
        let first: Vec<Elem> = self.eq.domain_members(self.group, self.order[0]).collect();
        first
            .par_iter()
            .map(|&v| {
                let mut acc = T::default();
                let mut assignment = vec![0 as Elem; nvars];
                assignment[self.order[0]] = v;
                let prefix = self.apply(start, self.segments[0], &assignment);
                self.descend(1, prefix, &mut assignment, &visit, &mut acc);
                acc
            })
            .collect()
    }

    fn descend<T, F>(&self, depth: usize, prefix: Elem, assignment: &mut [Elem], visit: &F, acc: &mut T)
    where
        F: Fn(&[Elem], &mut T),
    {
        if depth == self.order.len() {
            if prefix == self.eq.target {
                visit(assignment, acc);
            }
            return;
        }
        let var = self.order[depth];
        for v in self.eq.domain_members(self.group, var) {
            assignment[var] = v;
            let next = self.apply(prefix, self.segments[depth], assignment);
            self.descend(depth + 1, next, assignment, visit, acc);
        }
    }
}
