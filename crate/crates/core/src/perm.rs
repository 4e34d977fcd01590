//! Permutations of `0..n` and finite permutation groups materialized by closure.
//!
//! Composition is right to left: `p.compose(q)` maps `x` to `p(q(x))`, and the
//! conjugate of `a` by `b` is `b ∘ a ∘ b⁻¹`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        if !crate::cayley::is_bijection(images.iter().copied(), images.len()) {
            return Err(Error::NotPermutation(images.len()));
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_vec_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(crate::cayley::is_bijection(images.iter().copied(), images.len()));
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(Error::ElementOutOfRange(x));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// `self^by = by ∘ self ∘ by⁻¹`
    pub fn conjugate_by(&self, by: &Permutation) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[by.images[i]] = by.images[x];
        }
        Permutation { images }
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, x)| i == *x)
            .map(|(i, _)| i)
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, lcm)
    }

    /// Cycle lengths, sorted descending (fixed points included).
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// A permutation group with its full element list.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && self.elements.iter().all(|g| other.contains(g))
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    /// Breadth-first closure of `gens` on `degree` points.
    pub fn generate(degree: usize, gens: &[Permutation], cap: usize) -> Result<Self> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let h = g.compose(&elements[i]);
                if !index.contains_key(&h) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    index.insert(h.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(h);
                }
            }
        }
        Ok(PermGroup {
            degree,
            generators: gens,
            elements,
            index,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::generate(degree, &[], 1).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|g| other.contains(g))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|a| {
            self.generators
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    pub fn orbit(&self, e: usize) -> Vec<usize> {
        self.orbit_with_transversal(e).0
    }

    /// Orbit of `e` and, for each orbit point, a group element carrying `e` to it.
    fn orbit_with_transversal(&self, e: usize) -> (Vec<usize>, Vec<Option<Permutation>>) {
        let mut reps: Vec<Option<Permutation>> = vec![None; self.degree];
        reps[e] = Some(Permutation::identity(self.degree));
        let mut orbit = vec![e];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for g in &self.generators {
                let y = g.apply(x);
                if reps[y].is_none() {
                    reps[y] = Some(g.compose(reps[x].as_ref().unwrap()));
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        (orbit, reps)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    /// Point stabilizer, generated by Schreier generators of the orbit traversal.
    pub fn stabilizer(&self, e: usize) -> Result<PermGroup> {
        if e >= self.degree {
            return Err(Error::ElementOutOfRange(e));
        }
        let (orbit, reps) = self.orbit_with_transversal(e);
        let mut schreier = Vec::new();
        for &x in &orbit {
            let rx = reps[x].as_ref().unwrap();
            for g in &self.generators {
                let y = g.apply(x);
                let ry = reps[y].as_ref().unwrap();
                let s = ry.inverse().compose(&g.compose(rx));
                if !s.is_identity() {
                    schreier.push(s);
                }
            }
        }
        schreier.sort();
        schreier.dedup();
        PermGroup::generate(self.degree, &schreier, self.order().max(1))
    }

    /// Subgroup generated by `gens` inside this group (cap = this group's order).
    pub fn subgroup(&self, gens: &[Permutation]) -> Result<PermGroup> {
        PermGroup::generate(self.degree, gens, self.order())
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &[Permutation]) -> Result<PermGroup> {
        let mut current = self.subgroup(gens)?;
        loop {
            let mut extra = Vec::new();
            for h in current.generators() {
                for g in &self.generators {
                    let c = h.conjugate_by(g);
                    if !current.contains(&c) {
                        extra.push(c);
                    }
                }
            }
            if extra.is_empty() {
                return Ok(current);
            }
            let mut all = current.generators.clone();
            all.extend(extra);
            current = self.subgroup(&all)?;
        }
    }

    /// Commutator subgroup: normal closure of commutators of generators.
    pub fn derived_subgroup(&self) -> Result<PermGroup> {
        let mut comms = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = a.inverse().compose(&b.inverse()).compose(&a.compose(b));
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        comms.sort();
        comms.dedup();
        self.normal_closure(&comms)
    }

    /// Orders of the derived series down to where it stabilizes.
    pub fn derived_series(&self) -> Result<Vec<PermGroup>> {
        let mut series = vec![self.clone()];
        loop {
            let next = series.last().unwrap().derived_subgroup()?;
            if next.order() == series.last().unwrap().order() {
                return Ok(series);
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> Result<bool> {
        Ok(self.derived_series()?.last().unwrap().order() == 1)
    }

    /// Elements of `h` commuting with all of `h`.
    pub fn center_of_subgroup(&self, h: &PermGroup) -> Vec<Permutation> {
        h.elements
            .iter()
            .filter(|z| h.generators.iter().all(|g| g.compose(z) == z.compose(g)))
            .cloned()
            .collect()
    }

    pub fn center(&self) -> Vec<Permutation> {
        self.center_of_subgroup(self)
    }

    /// `x^G`, the orbit of `x` under conjugation.
    pub fn conjugacy_class(&self, x: &Permutation) -> Vec<Permutation> {
        let mut class = vec![x.clone()];
        let mut seen: HashMap<Permutation, ()> = HashMap::from([(x.clone(), ())]);
        let mut i = 0;
        while i < class.len() {
            for g in &self.generators {
                let c = class[i].conjugate_by(g);
                if seen.insert(c.clone(), ()).is_none() {
                    class.push(c);
                }
            }
            i += 1;
        }
        class.sort();
        class
    }

    /// Every left coset `gH` meets `s` in exactly one element.
    pub fn is_transversal(&self, s: &[Permutation], h: &PermGroup) -> bool {
        if h.order() == 0 || !self.order().is_multiple_of(h.order()) {
            return false;
        }
        if s.len() != self.order() / h.order() || !s.iter().all(|x| self.contains(x)) {
            return false;
        }
        // x, y lie in the same left coset iff x⁻¹y ∈ H
        for (i, x) in s.iter().enumerate() {
            let xi = x.inverse();
            for y in &s[i + 1..] {
                if h.contains(&xi.compose(y)) {
                    return false;
                }
            }
        }
        true
    }

    /// `N` is normal: conjugates of its generators by ours stay inside.
    pub fn is_normal_subgroup(&self, n: &PermGroup) -> bool {
        n.is_subgroup_of(self)
            && n.generators
                .iter()
                .all(|h| self.generators.iter().all(|g| n.contains(&h.conjugate_by(g))))
    }
}
