//! Table builders: isotopes, conjugation quandles, cores, Belousov-Onoi
//! quandles, coset quandles, affine quasigroups and the named examples.

mod builders;

pub use builders::{
    boloop15, boloop15_automorphism, bloop15, builder_names, by_name, cml81, dq81, galkin_ldq15,
    ildq15, Built,
};

use crate::cayley::{CayleyTable, LoopView};
use crate::error::{Error, Result, Side};
use crate::perm::{PermGroup, Permutation};
use crate::represent;

/// `a·b = (a/e1) * (e2\b)`; the unit is `e2 * e1`.
pub fn principal_loop_isotope(t: &CayleyTable, e1: usize, e2: usize) -> Result<LoopView> {
    t.check_element(e1)?;
    t.check_element(e2)?;
    let ldiv = t.left_division_table()?;
    let rdiv = t.right_division_table()?;
    let n = t.order();
    let table = CayleyTable::from_fn(n, |a, b| t.op(rdiv[a * n + e1], ldiv[e2 * n + b]))?;
    LoopView::with_unit(table, t.op(e2, e1))
}

/// `a * b = a b a⁻¹` on the elements of `s`, indexed in the given order.
pub fn conjugation_quandle(g: &PermGroup, s: &[Permutation]) -> Result<CayleyTable> {
    if s.is_empty() {
        return Err(Error::EmptyTable);
    }
    if let Some(x) = s.iter().find(|x| !g.contains(x)) {
        return Err(Error::NotConjugationClosed(format!("{x:?} is not in the group")));
    }
    let mut entries = Vec::with_capacity(s.len() * s.len());
    for a in s {
        for b in s {
            let c = b.conjugate_by(a);
            match s.iter().position(|x| *x == c) {
                Some(i) => entries.push(i),
                None => {
                    return Err(Error::NotConjugationClosed(format!(
                        "{a:?} conjugates {b:?} to {c:?}"
                    )))
                }
            }
        }
    }
    CayleyTable::from_flat(s.len(), entries)
}

/// The core `a * b = a·(b⁻¹·a)`.
pub fn core_of_loop(l: &LoopView) -> Result<CayleyTable> {
    if let Some(x) = (0..l.order()).find(|&x| l.linv(x) != l.rinv(x)) {
        return Err(Error::InverseMismatch(x));
    }
    CayleyTable::from_fn(l.order(), |a, b| l.mul(a, l.mul(l.linv(b), a)))
}

/// `a * b = φ(a)·ψ(b)` for a BO-module `(l, ψ)` with companion `φ(x) = x/ψ(x)`.
pub fn bo_quandle(l: &LoopView, psi: &Permutation) -> Result<CayleyTable> {
    if let Some((a, b, c)) = represent::check_bo_module(l, psi)? {
        return Err(Error::BoViolation { a, b, c });
    }
    let phi = represent::companion(l, psi);
    CayleyTable::from_fn(l.order(), |a, b| l.mul(phi[a], psi.apply(b)))
}

/// Loop isotope `a·b = (a/e) * (e\b)` of a latin quandle, with `ψ = L_e`.
/// The companion of `ψ` is `R_e` and `a * b = R_e(a)·L_e(b)`.
pub fn bo_loop_from_ldq(t: &CayleyTable, e: usize) -> Result<(LoopView, Permutation)> {
    if !t.is_quasigroup() {
        return Err(Error::NotQuasigroup);
    }
    if let Some((a, b, c)) = t.left_distributivity_witness() {
        return Err(Error::NotLeftDistributive { a, b, c });
    }
    let l = principal_loop_isotope(t, e, e)?;
    let psi = Permutation::new(t.row(e).to_vec())?;
    Ok((l, psi))
}

/// An automorphism of a permutation group, for coset quandles.
#[derive(Clone, Debug)]
pub enum GroupAutomorphism {
    /// `x ↦ ζ x ζ⁻¹`
    Conjugation(Permutation),
    /// Image of the `i`-th element of `g.elements()` is the `map[i]`-th.
    Map(Vec<usize>),
}

/// Coset quandle on left cosets of `h` in `g`: `aH * bH = aψ(a⁻¹b)H`.
///
/// Cosets are labelled in the order of their minimal element in `g.elements()`;
/// the returned vector holds those representatives.
pub fn coset_quandle(
    g: &PermGroup,
    h: &PermGroup,
    psi: &GroupAutomorphism,
) -> Result<(CayleyTable, Vec<Permutation>)> {
    if !h.is_subgroup_of(g) {
        return Err(Error::Inadmissible("H is not a subgroup of G".into()));
    }
    let apply: Box<dyn Fn(&Permutation) -> Permutation> = match psi {
        GroupAutomorphism::Conjugation(zeta) => {
            if zeta.degree() != g.degree() {
                return Err(Error::DegreeMismatch {
                    expected: g.degree(),
                    found: zeta.degree(),
                });
            }
            if let Some(x) = g.generators().iter().find(|x| !g.contains(&x.conjugate_by(zeta))) {
                return Err(Error::Inadmissible(format!(
                    "conjugation by zeta moves generator {x:?} out of G"
                )));
            }
            let zeta = zeta.clone();
            Box::new(move |x: &Permutation| x.conjugate_by(&zeta))
        }
        GroupAutomorphism::Map(map) => {
            let elems = g.elements();
            if map.len() != elems.len()
                || !crate::cayley::is_bijection(map.iter().copied(), elems.len())
            {
                return Err(Error::Inadmissible("psi is not a bijection of G".into()));
            }
            for (i, x) in elems.iter().enumerate() {
                for (j, y) in elems.iter().enumerate() {
                    let k = g.position(&x.compose(y)).unwrap();
                    if elems[map[k]] != elems[map[i]].compose(&elems[map[j]]) {
                        return Err(Error::Inadmissible(
                            "psi is not a homomorphism of G".into(),
                        ));
                    }
                }
            }
            let g = g.clone();
            let map = map.clone();
            Box::new(move |x: &Permutation| {
                g.elements()[map[g.position(x).unwrap()]].clone()
            })
        }
    };
    if let Some(x) = h.elements().iter().find(|x| apply(x) != **x) {
        return Err(Error::Inadmissible(format!("psi moves {x:?} in H")));
    }
    let elems = g.elements();
    let mut coset = vec![usize::MAX; elems.len()];
    let mut reps = Vec::new();
    for (i, a) in elems.iter().enumerate() {
        if coset[i] != usize::MAX {
            continue;
        }
        for x in h.elements() {
            coset[g.position(&a.compose(x)).unwrap()] = reps.len();
        }
        reps.push(a.clone());
    }
    let m = reps.len();
    let mut entries = Vec::with_capacity(m * m);
    for a in &reps {
        let ai = a.inverse();
        for b in &reps {
            let x = a.compose(&apply(&ai.compose(b)));
            let k = g.position(&x).ok_or_else(|| {
                Error::Inadmissible("psi does not map G into itself".into())
            })?;
            entries.push(coset[k]);
        }
    }
    Ok((CayleyTable::from_flat(m, entries)?, reps))
}

/// `φ(x) = φ̃(x)·u` (`Side::Right`) or `u·φ̃(x)` (`Side::Left`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMapSpec {
    pub side: Side,
    pub u: usize,
    pub auto: Permutation,
}

impl AffineMapSpec {
    pub fn linear(auto: Permutation, unit: usize) -> Self {
        AffineMapSpec {
            side: Side::Right,
            u: unit,
            auto,
        }
    }

    pub fn apply(&self, l: &LoopView, x: usize) -> usize {
        let y = self.auto.apply(x);
        match self.side {
            Side::Right => l.mul(y, self.u),
            Side::Left => l.mul(self.u, y),
        }
    }
}

/// `a * b = φ(a)·ψ(b)` with commuting automorphism parts.
pub fn affine_quasigroup(
    l: &LoopView,
    phi: &AffineMapSpec,
    psi: &AffineMapSpec,
) -> Result<CayleyTable> {
    for spec in [phi, psi] {
        check_automorphism(l.table(), &spec.auto)?;
        l.table().check_element(spec.u)?;
    }
    if phi.auto.compose(&psi.auto) != psi.auto.compose(&phi.auto) {
        return Err(Error::NonCommutingParts);
    }
    CayleyTable::from_fn(l.order(), |a, b| l.mul(phi.apply(l, a), psi.apply(l, b)))
}

/// Fails with the first violating pair unless `f` is an automorphism of `t`.
pub fn check_automorphism(t: &CayleyTable, f: &Permutation) -> Result<()> {
    if f.degree() != t.order() {
        return Err(Error::DegreeMismatch {
            expected: t.order(),
            found: f.degree(),
        });
    }
    for a in 0..t.order() {
        for b in 0..t.order() {
            if f.apply(t.op(a, b)) != t.op(f.apply(a), f.apply(b)) {
                return Err(Error::NotAutomorphism { a, b });
            }
        }
    }
    Ok(())
}
