//! Multiplication groups, connectedness and automorphism groups.

use crate::cayley::CayleyTable;
use crate::enumerate::iso::for_each_isomorphism;
use crate::error::{Error, Result, Side};
use crate::perm::{PermGroup, Permutation, DEFAULT_CAP};

/// `L_a(x) = a * x` for every `a`.
pub fn left_translations(t: &CayleyTable) -> Result<Vec<Permutation>> {
    (0..t.order())
        .map(|a| {
            Permutation::new(t.row(a).to_vec()).map_err(|_| Error::NotBijective {
                side: Side::Left,
                element: a,
            })
        })
        .collect()
}

/// `R_a(x) = x * a` for every `a`.
pub fn right_translations(t: &CayleyTable) -> Result<Vec<Permutation>> {
    (0..t.order())
        .map(|a| {
            Permutation::new(t.column(a)).map_err(|_| Error::NotBijective {
                side: Side::Right,
                element: a,
            })
        })
        .collect()
}

pub fn lmlt(t: &CayleyTable) -> Result<PermGroup> {
    lmlt_with_cap(t, DEFAULT_CAP)
}

pub fn lmlt_with_cap(t: &CayleyTable, cap: usize) -> Result<PermGroup> {
    PermGroup::generate(t.order(), &left_translations(t)?, cap)
}

pub fn rmlt(t: &CayleyTable) -> Result<PermGroup> {
    PermGroup::generate(t.order(), &right_translations(t)?, DEFAULT_CAP)
}

pub fn mlt(t: &CayleyTable) -> Result<PermGroup> {
    let mut gens = left_translations(t)?;
    gens.extend(right_translations(t)?);
    PermGroup::generate(t.order(), &gens, DEFAULT_CAP)
}

/// Transitivity of the left multiplication group. Only the orbit of 0 is
/// traced, so the group is never materialized.
pub fn is_connected(t: &CayleyTable) -> bool {
    let n = t.order();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for a in 0..n {
            let y = t.op(a, x);
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == n
}

/// All automorphisms, as a materialized group.
pub fn automorphism_group(t: &CayleyTable) -> PermGroup {
    let n = t.order();
    let mut group = PermGroup::trivial(n);
    let mut gens: Vec<Permutation> = Vec::new();
    for_each_isomorphism(t, t, |f| {
        let p = Permutation::from_vec_unchecked(f.to_vec());
        if !group.contains(&p) {
            gens.push(p);
            group = PermGroup::generate(n, &gens, usize::MAX).unwrap();
        }
        true
    });
    group
}

pub fn is_homogeneous(t: &CayleyTable) -> bool {
    automorphism_group(t).is_transitive()
}
