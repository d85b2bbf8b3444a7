//! Concrete finite groups with conjugacy-class and centralizer data.
//!
//! Elements are indexed `0..order` with `0` the identity. Groups up to
//! [`TABLE_LIMIT`] elements carry a dense multiplication table; larger ones
//! multiply through their permutation action (or componentwise for direct
//! products). Conjugacy classes are computed once at construction.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::perm::Perm;

/// Index of a group element. `0` is always the identity.
pub type Elem = u32;

/// Default cap on |G| for every constructor.
pub const DEFAULT_MAX_ORDER: usize = 10_000;

/// Groups at most this large are stored as a dense multiplication table.
pub const TABLE_LIMIT: usize = 4096;

#[derive(Debug)]
enum Repr {
    Table {
        mul: Vec<Elem>,
    },
    Perm {
        perms: Vec<Perm>,
        index: HashMap<Perm, Elem>,
    },
    Product {
        left: Arc<FiniteGroup>,
        right: Arc<FiniteGroup>,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjugacyClass {
    pub representative: Elem,
    pub members: Vec<Elem>,
    pub size: usize,
    pub centralizer_order: usize,
}

/// A subgroup, stored as its sorted member list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<Elem>,
}

impl Subgroup {
    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Validates that `members` is closed under the group operations of `group`.
    pub fn from_members(group: &FiniteGroup, mut members: Vec<Elem>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            group.check_elem(m)?;
        }
        if members.first() != Some(&0) {
            return Err(invalid("subgroup must contain the identity"));
        }
        let sub = Subgroup { members };
        for &a in &sub.members {
            if !sub.contains(group.inverse(a)) {
                return Err(invalid("member set is not closed under inversion"));
            }
            for &b in &sub.members {
                if !sub.contains(group.mul(a, b)) {
                    return Err(invalid("member set is not closed under multiplication"));
                }
            }
        }
        Ok(sub)
    }
}

/// An explicit finite group.
#[derive(Debug)]
pub struct FiniteGroup {
    order: usize,
    repr: Repr,
    inv: Vec<Elem>,
    generators: Vec<Elem>,
    walk_set: Vec<Elem>,
    labels: Vec<String>,
    description: Option<String>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
}

impl FiniteGroup {
    /// Closes a set of permutations (all of one degree) under composition.
    ///
    /// `walk` is the symmetric generating set used for default random-walk
    /// weights; it defaults to `gens` together with their inverses.
    pub fn from_permutations(
        gens: &[Perm],
        walk: Option<&[Perm]>,
        max_order: usize,
        description: Option<String>,
    ) -> Result<Self> {
        let degree = gens.first().map_or(1, Perm::degree);
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(invalid("generators act on different numbers of points"));
        }
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();

        let mut perms = vec![Perm::identity(degree)];
        let mut index: HashMap<Perm, Elem> = HashMap::new();
        index.insert(perms[0].clone(), 0);
        // gen_left[j][x] = index of gens[j] ∘ x
        let mut gen_left: Vec<Vec<Elem>> = vec![Vec::new(); gens.len()];
        let mut parent: Vec<(usize, Elem)> = vec![(usize::MAX, 0)];
        let mut cursor = 0usize;
        while cursor < perms.len() {
            for (j, g) in gens.iter().enumerate() {
                let y = g.compose(&perms[cursor]);
                let idx = match index.get(&y) {
                    Some(&i) => i,
                    None => {
                        let i = perms.len() as Elem;
                        if perms.len() >= max_order {
                            return Err(Error::Resource(format!(
                                "group order exceeds the cap of {max_order}"
                            )));
                        }
                        index.insert(y.clone(), i);
                        perms.push(y);
                        parent.push((j, cursor as Elem));
                        i
                    }
                };
                gen_left[j].push(idx);
            }
            cursor += 1;
        }
        let order = perms.len();
        let inv: Vec<Elem> = perms.iter().map(|p| index[&p.inverse()]).collect();
        let generators: Vec<Elem> = (0..gens.len()).map(|j| gen_left[j][0]).collect();
        let labels = perms.iter().map(|p| p.to_string()).collect();

        let walk_set = match walk {
            Some(w) => {
                let mut out = Vec::new();
                for p in w {
                    if p.degree() != degree {
                        return Err(invalid("walk generator has wrong degree"));
                    }
                    let i = *index
                        .get(p)
                        .ok_or_else(|| invalid("walk generator outside the group"))?;
                    out.push(i);
                }
                out
            }
            None => generators.clone(),
        };

        let repr = if order <= TABLE_LIMIT {
            let mut mul = vec![0 as Elem; order * order];
            for y in 0..order {
                mul[y] = y as Elem;
            }
            for x in 1..order {
                let (j, px) = parent[x];
                let (head, tail) = mul.split_at_mut(x * order);
                let prev = &head[px as usize * order..(px as usize + 1) * order];
                for (dst, &v) in tail[..order].iter_mut().zip(prev) {
                    *dst = gen_left[j][v as usize];
                }
            }
            Repr::Table { mul }
        } else {
            Repr::Perm { perms, index }
        };

        Ok(Self::finish(order, repr, inv, generators, walk_set, labels, description))
    }

    fn finish(
        order: usize,
        repr: Repr,
        inv: Vec<Elem>,
        generators: Vec<Elem>,
        walk_set: Vec<Elem>,
        labels: Vec<String>,
        description: Option<String>,
    ) -> Self {
        let mut g = FiniteGroup {
            order,
            repr,
            inv,
            generators,
            walk_set: Vec::new(),
            labels,
            description,
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        g.walk_set = g.symmetrize(&walk_set);
        g.compute_classes();
        g
    }

    /// Direct product `a × b`; element `(i, j)` has index `i·|b| + j`.
    pub fn direct_product(a: Arc<FiniteGroup>, b: Arc<FiniteGroup>, max_order: usize) -> Result<Self> {
        let order = a
            .order
            .checked_mul(b.order)
            .filter(|&n| n <= max_order)
            .ok_or_else(|| {
                Error::Resource(format!(
                    "direct product of orders {} and {} exceeds the cap of {max_order}",
                    a.order, b.order
                ))
            })?;
        let nb = b.order;
        let pair = |i: Elem, j: Elem| i * nb as Elem + j;
        let inv = (0..order as Elem)
            .map(|x| pair(a.inverse(x / nb as Elem), b.inverse(x % nb as Elem)))
            .collect();
        let mut generators: Vec<Elem> = a.generators.iter().map(|&g| pair(g, 0)).collect();
        generators.extend(b.generators.iter().map(|&g| pair(0, g)));
        let mut walk: Vec<Elem> = a.walk_set.iter().map(|&g| pair(g, 0)).collect();
        walk.extend(b.walk_set.iter().map(|&g| pair(0, g)));
        let labels = (0..order)
            .map(|x| format!("[{};{}]", a.labels[x / nb], b.labels[x % nb]))
            .collect();
        let description = Some(format!(
            "{} x {}",
            a.description.as_deref().unwrap_or("?"),
            b.description.as_deref().unwrap_or("?")
        ));

        let repr = if order <= TABLE_LIMIT {
            let mut mul = vec![0 as Elem; order * order];
            for x in 0..order {
                let (xa, xb) = ((x / nb) as Elem, (x % nb) as Elem);
                for y in 0..order {
                    let (ya, yb) = ((y / nb) as Elem, (y % nb) as Elem);
                    mul[x * order + y] = pair(a.mul(xa, ya), b.mul(xb, yb));
                }
            }
            Repr::Table { mul }
        } else {
            Repr::Product { left: a, right: b }
        };
        Ok(Self::finish(order, repr, inv, generators, walk, labels, description))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn description(&self) -> Option<&str> {
        self.description.as_deref()
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    /// Canonical symmetric generating set for random-walk weights.
    pub fn walk_set(&self) -> &[Elem] {
        &self.walk_set
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x as usize]
    }

    pub fn check_elem(&self, x: Elem) -> Result<()> {
        if (x as usize) < self.order {
            Ok(())
        } else {
            Err(invalid(format!("element index {x} out of range 0..{}", self.order)))
        }
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        match &self.repr {
            Repr::Table { mul } => mul[x as usize * self.order + y as usize],
            Repr::Perm { perms, index } => {
                index[&perms[x as usize].compose(&perms[y as usize])]
            }
            Repr::Product { left, right } => {
                let nb = right.order as Elem;
                left.mul(x / nb, y / nb) * nb + right.mul(x % nb, y % nb)
            }
        }
    }

    #[inline]
    pub fn inverse(&self, x: Elem) -> Elem {
        self.inv[x as usize]
    }

    /// `x y x⁻¹ y⁻¹`
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        let xy = self.mul(x, y);
        let xyx = self.mul(xy, self.inverse(x));
        self.mul(xyx, self.inverse(y))
    }

    pub fn conjugate(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    pub fn pow(&self, x: Elem, mut k: u64) -> Elem {
        let mut base = x;
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: Elem) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order
    }

    /// Closes `set ∪ set⁻¹`, dropping the identity and duplicates, in first-seen order.
    pub fn symmetrize(&self, set: &[Elem]) -> Vec<Elem> {
        let mut out: Vec<Elem> = Vec::new();
        for &s in set {
            for t in [s, self.inverse(s)] {
                if t != 0 && !out.contains(&t) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// The subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[Elem]) -> Result<Subgroup> {
        for &g in gens {
            self.check_elem(g)?;
        }
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut members = vec![0];
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        Ok(Subgroup { members })
    }

    pub fn generates(&self, set: &[Elem]) -> Result<bool> {
        Ok(self.subgroup_generated(set)?.order() == self.order)
    }

    /// Every distinct cyclic subgroup, ordered by (order, members).
    pub fn cyclic_subgroups(&self) -> Vec<Subgroup> {
        let mut out: Vec<Subgroup> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for x in 0..self.order as Elem {
            let mut members = vec![0];
            let mut y = x;
            while y != 0 {
                members.push(y);
                y = self.mul(y, x);
            }
            members.sort_unstable();
            if seen.insert(members.clone()) {
                out.push(Subgroup { members });
            }
        }
        out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
        out
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { members: vec![0] }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { members: (0..self.order as Elem).collect() }
    }

    fn compute_classes(&mut self) {
        let n = self.order;
        let mut class_of = vec![u32::MAX; n];
        let mut classes: Vec<ConjugacyClass> = Vec::new();
        for start in 0..n as Elem {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            class_of[start as usize] = id;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &g in &self.generators {
                    let y = self.conjugate(g, x);
                    if class_of[y as usize] == u32::MAX {
                        class_of[y as usize] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            let size = members.len();
            classes.push(ConjugacyClass {
                representative: start,
                members,
                size,
                centralizer_order: n / size,
            });
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    /// Conjugacy classes ordered by minimal member; class 0 is `{e}`.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    pub fn class_of(&self, x: Elem) -> usize {
        self.class_of[x as usize] as usize
    }

    pub fn centralizer_order(&self, c: Elem) -> Result<usize> {
        self.check_elem(c)?;
        Ok(self.classes[self.class_of(c)].centralizer_order)
    }

    /// Counts `{g : gc = cg}` directly, without the class data.
    pub fn centralizer_order_direct(&self, c: Elem) -> usize {
        (0..self.order as Elem)
            .filter(|&g| self.mul(g, c) == self.mul(c, g))
            .count()
    }

    /// Index of the class containing the inverses of class `k`.
    pub fn inverse_class(&self, k: usize) -> usize {
        self.class_of(self.inverse(self.classes[k].representative))
    }

    /// Checks associativity: exhaustively when `|G| ≤ 64`, otherwise on
    /// `samples` seeded random triples.
    pub fn check_associativity(&self, samples: usize, seed: u64) -> bool {
        let n = self.order as Elem;
        let ok = |a: Elem, b: Elem, c: Elem| {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        };
        if self.order <= 64 {
            return (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| ok(a, b, c))));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples).all(|_| ok(rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n)))
    }

    pub fn check_identity_and_inverses(&self) -> bool {
        (0..self.order as Elem).all(|x| {
            self.mul(0, x) == x && self.mul(x, 0) == x && self.mul(x, self.inverse(x)) == 0
        })
    }
}
