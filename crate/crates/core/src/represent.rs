//! Affine and Belousov-Onoi representations, trimediality, the B-loop
//! correspondence, and quandle envelopes.

use std::collections::HashSet;

use crate::cayley::{CayleyTable, LoopView, Property};
use crate::construct::{
    check_automorphism, coset_quandle, principal_loop_isotope, AffineMapSpec, GroupAutomorphism,
};
use crate::error::{Error, Result, Side};
use crate::multgroup;
use crate::perm::{PermGroup, Permutation, DEFAULT_CAP};

/// Companion `φ(x) = x/ψ(x)`.
pub fn companion(l: &LoopView, psi: &Permutation) -> Vec<usize> {
    (0..l.order()).map(|x| l.rdiv(x, psi.apply(x))).collect()
}

/// First triple violating `φ(ab)·ψ(ac) = a·(φ(b)ψ(c))`, if any.
pub fn check_bo_module(l: &LoopView, psi: &Permutation) -> Result<Option<(usize, usize, usize)>> {
    check_automorphism(l.table(), psi)?;
    let phi = companion(l, psi);
    let n = l.order();
    for a in 0..n {
        for b in 0..n {
            let left = phi[l.mul(a, b)];
            let pb = phi[b];
            for c in 0..n {
                if l.mul(left, psi.apply(l.mul(a, c))) != l.mul(a, l.mul(pb, psi.apply(c))) {
                    return Ok(Some((a, b, c)));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_bo_loop(l: &LoopView, psi: &Permutation) -> Result<bool> {
    Ok(check_bo_module(l, psi)?.is_none()
        && crate::cayley::is_bijection(companion(l, psi).into_iter(), l.order()))
}

/// Affine presentation `a * b = φ(a)·ψ(b)` of a medial quasigroup over an
/// abelian group; additively `x*y = s(x) + t(y) + c`.
#[derive(Clone, Debug)]
pub struct AffineForm {
    pub loop_: LoopView,
    pub phi: AffineMapSpec,
    pub psi: AffineMapSpec,
    pub constant: usize,
}

impl AffineForm {
    pub fn s(&self) -> &Permutation {
        &self.phi.auto
    }

    pub fn t(&self) -> &Permutation {
        &self.psi.auto
    }

    pub fn reconstruct(&self) -> CayleyTable {
        let l = &self.loop_;
        CayleyTable::from_fn(l.order(), |a, b| {
            l.mul(self.phi.apply(l, a), self.psi.apply(l, b))
        })
        .unwrap()
    }
}

/// Toyoda extraction over the loop isotope at `(e1, e2)`.
pub fn medial_to_affine(t: &CayleyTable, e1: usize, e2: usize) -> Result<AffineForm> {
    if !t.is_quasigroup() {
        return Err(Error::NotQuasigroup);
    }
    if let Some((x, y, u, v)) = t.mediality_witness() {
        return Err(Error::NotMedial { x, y, u, v });
    }
    let l = principal_loop_isotope(t, e1, e2)?;
    if !l.is_associative() || !l.is_commutative() {
        return Err(Error::Inconsistent(
            "loop isotope of a medial quasigroup is not an abelian group".into(),
        ));
    }
    let n = t.order();
    let one = l.unit();
    let r1 = t.op(one, e1);
    let l1 = t.op(e2, one);
    let (ri, li) = (l.linv(r1), l.linv(l1));
    let s = Permutation::new((0..n).map(|x| l.mul(t.op(x, e1), ri)).collect())?;
    let tt = Permutation::new((0..n).map(|x| l.mul(t.op(e2, x), li)).collect())?;
    check_automorphism(l.table(), &s)?;
    check_automorphism(l.table(), &tt)?;
    if s.compose(&tt) != tt.compose(&s) {
        return Err(Error::NonCommutingParts);
    }
    let form = AffineForm {
        phi: AffineMapSpec {
            side: Side::Right,
            u: r1,
            auto: s,
        },
        psi: AffineMapSpec {
            side: Side::Right,
            u: l1,
            auto: tt,
        },
        constant: l.mul(r1, l1),
        loop_: l,
    };
    if form.reconstruct() != *t {
        return Err(Error::Inconsistent("affine reconstruction differs".into()));
    }
    Ok(form)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrimedialMode {
    /// The two-identity base.
    Identities,
    /// Mediality of every subquasigroup generated by three elements.
    Subquasigroups,
    /// Both, failing if they disagree.
    Both,
}

pub fn is_trimedial(t: &CayleyTable, mode: TrimedialMode) -> Result<bool> {
    if !t.is_quasigroup() {
        return Err(Error::NotQuasigroup);
    }
    match mode {
        TrimedialMode::Identities => Ok(trimedial_identity_witness(t).is_none()),
        TrimedialMode::Subquasigroups => Ok(trimedial_by_subquasigroups(t)),
        TrimedialMode::Both => {
            let a = trimedial_identity_witness(t).is_none();
            if a != trimedial_by_subquasigroups(t) {
                return Err(Error::Inconsistent(
                    "trimediality characterizations disagree".into(),
                ));
            }
            Ok(a)
        }
    }
}

/// First `(a,b,c)` violating `(c*b)*(a*a) = (c*a)*(b*a)` or
/// `(a*(a*a))*(b*c) = (a*b)*((a*a)*c)`.
pub fn trimedial_identity_witness(t: &CayleyTable) -> Option<(usize, usize, usize)> {
    let n = t.order();
    let op = |x, y| t.op(x, y);
    for a in 0..n {
        let aa = op(a, a);
        let aaa = op(a, aa);
        for b in 0..n {
            let ba = op(b, a);
            let ab = op(a, b);
            for c in 0..n {
                if op(op(c, b), aa) != op(op(c, a), ba)
                    || op(aaa, op(b, c)) != op(ab, op(aa, c))
                {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

fn trimedial_by_subquasigroups(t: &CayleyTable) -> bool {
    let n = t.order();
    let ldiv = t.left_division_table().ok();
    let rdiv = t.right_division_table().ok();
    let mut checked: HashSet<Vec<usize>> = HashSet::new();
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                let sub = t.closure(&[a, b, c], ldiv.as_deref(), rdiv.as_deref());
                if checked.contains(&sub) {
                    continue;
                }
                let medial = t
                    .restrict(&sub)
                    .map(|r| r.mediality_witness().is_none())
                    .unwrap_or(false);
                if !medial {
                    return false;
                }
                checked.insert(sub);
            }
        }
    }
    true
}

/// Left Bol, automorphic inverses, and unique 2-divisibility.
pub fn is_bloop(l: &LoopView) -> bool {
    bloop_violation(l).is_none()
}

fn bloop_violation(l: &LoopView) -> Option<String> {
    if !l.has_property(Property::LeftBol).unwrap() {
        Some("not left Bol".into())
    } else if !l.has_property(Property::Aip).unwrap() {
        Some("no automorphic inverse property".into())
    } else if !l.is_uniquely_2_divisible() {
        let mut seen = vec![usize::MAX; l.order()];
        for x in 0..l.order() {
            let s = l.mul(x, x);
            if seen[s] != usize::MAX {
                return Some(format!("{} and {x} have the same square {s}", seen[s]));
            }
            seen[s] = x;
        }
        unreachable!()
    } else {
        None
    }
}

/// `a * b = a²·b⁻¹`.
pub fn ildq_from_bloop(l: &LoopView) -> Result<CayleyTable> {
    if let Some(why) = bloop_violation(l) {
        return Err(Error::NotBLoop(why));
    }
    CayleyTable::from_fn(l.order(), |a, b| l.mul(l.mul(a, a), l.linv(b)))
}

/// Loop isotope `a·b = (a/e)*(e\b)` of an involutory latin quandle.
pub fn bloop_from_ildq(t: &CayleyTable, e: usize) -> Result<LoopView> {
    if !t.is_quasigroup() {
        return Err(Error::NotQuasigroup);
    }
    if let Some((a, b, c)) = t.left_distributivity_witness() {
        return Err(Error::NotLeftDistributive { a, b, c });
    }
    let n = t.order();
    for a in 0..n {
        for b in 0..n {
            if t.op(a, t.op(a, b)) != b {
                return Err(Error::NotInvolutory { a, b });
            }
        }
    }
    let l = principal_loop_isotope(t, e, e)?;
    if let Some(why) = bloop_violation(&l) {
        return Err(Error::NotBLoop(why));
    }
    Ok(l)
}

/// A transitive group `G` with `ζ ∈ Z(G_e)` whose conjugates generate `G`.
#[derive(Clone, Debug)]
pub struct Envelope {
    group: PermGroup,
    zeta: Permutation,
    base: usize,
    stabilizer: PermGroup,
}

impl Envelope {
    pub fn new(group: PermGroup, zeta: Permutation, base: usize) -> Result<Self> {
        let n = group.degree();
        if zeta.degree() != n {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: zeta.degree(),
            });
        }
        if base >= n {
            return Err(Error::ElementOutOfRange(base));
        }
        if !group.is_transitive() {
            return Err(Error::InvalidEnvelope("G is not transitive".into()));
        }
        if !group.contains(&zeta) {
            return Err(Error::InvalidEnvelope("zeta is not in G".into()));
        }
        if zeta.apply(base) != base {
            return Err(Error::InvalidEnvelope("zeta does not fix the base point".into()));
        }
        let stabilizer = group.stabilizer(base)?;
        if let Some(x) = stabilizer
            .generators()
            .iter()
            .find(|x| x.compose(&zeta) != zeta.compose(x))
        {
            return Err(Error::InvalidEnvelope(format!(
                "zeta is not central in the stabilizer: fails to commute with {x:?}"
            )));
        }
        if group.normal_closure(std::slice::from_ref(&zeta))?.order() != group.order() {
            return Err(Error::InvalidEnvelope(
                "the conjugates of zeta do not generate G".into(),
            ));
        }
        Ok(Envelope {
            group,
            zeta,
            base,
            stabilizer,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn zeta(&self) -> &Permutation {
        &self.zeta
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn stabilizer(&self) -> &PermGroup {
        &self.stabilizer
    }
}

/// `(LMlt(t), L_e)` for a connected quandle.
pub fn envelope_of(t: &CayleyTable, e: usize) -> Result<Envelope> {
    envelope_of_with_cap(t, e, DEFAULT_CAP)
}

pub fn envelope_of_with_cap(t: &CayleyTable, e: usize, cap: usize) -> Result<Envelope> {
    t.check_element(e)?;
    if !t.is_quandle() {
        return Err(Error::NotQuandle("not a quandle".into()));
    }
    if !multgroup::is_connected(t) {
        return Err(Error::NotConnected);
    }
    let g = multgroup::lmlt_with_cap(t, cap)?;
    Envelope::new(g, Permutation::new(t.row(e).to_vec())?, e)
}

/// The coset quandle on `G/G_e` with conjugation by `ζ`, with the coset of
/// `α` relabelled as `α(e)`.
pub fn quandle_from_envelope(env: &Envelope) -> Result<CayleyTable> {
    let (q, reps) = coset_quandle(
        &env.group,
        &env.stabilizer,
        &GroupAutomorphism::Conjugation(env.zeta.clone()),
    )?;
    let points: Vec<usize> = reps.iter().map(|r| r.apply(env.base)).collect();
    q.relabel(&points)
}

/// `ζ⁻¹ζ^α` is fixed-point-free for every `α ∉ G_e`.
pub fn latin_by_fixed_points(env: &Envelope) -> bool {
    let zi = env.zeta.inverse();
    env.group
        .elements()
        .iter()
        .filter(|a| a.apply(env.base) != env.base)
        .all(|a| zi.compose(&env.zeta.conjugate_by(a)).fixed_points().next().is_none())
}

/// The conjugacy class `ζ^G` is a transversal to `G_e`.
pub fn latin_by_transversal(env: &Envelope) -> bool {
    let class = env.group.conjugacy_class(&env.zeta);
    env.group.is_transversal(&class, &env.stabilizer)
}

/// Whether the envelope's quandle is latin. With `strict`, or in builds with
/// debug assertions, both criteria run and must agree.
pub fn envelope_is_latin(env: &Envelope, strict: bool) -> Result<bool> {
    let a = latin_by_fixed_points(env);
    if (strict || cfg!(debug_assertions)) && a != latin_by_transversal(env) {
        return Err(Error::Inconsistent("latin criteria disagree".into()));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{bloop15, boloop15, boloop15_automorphism, core_of_loop, ildq15};
    use crate::enumerate::are_isomorphic;

    fn zn(n: usize) -> LoopView {
        LoopView::new(CayleyTable::from_fn(n, |a, b| (a + b) % n).unwrap()).unwrap()
    }

    fn inversion(l: &LoopView) -> Permutation {
        Permutation::new((0..l.order()).map(|x| l.linv(x)).collect()).unwrap()
    }

    #[test]
    fn bo_modules() {
        let s3 = LoopView::new(
            CayleyTable::new(
                6,
                &[
                    vec![0, 1, 2, 3, 4, 5],
                    vec![1, 2, 0, 4, 5, 3],
                    vec![2, 0, 1, 5, 3, 4],
                    vec![3, 5, 4, 0, 2, 1],
                    vec![4, 3, 5, 1, 0, 2],
                    vec![5, 4, 3, 2, 1, 0],
                ],
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(check_bo_module(&s3, &Permutation::identity(6)).unwrap(), None);
        for x in 0..6 {
            let conj = Permutation::new(s3.conjugation(x)).unwrap();
            assert_eq!(check_bo_module(&s3, &conj).unwrap(), None);
        }
        let b = bloop15();
        assert_eq!(check_bo_module(&b, &inversion(&b)).unwrap(), None);
        assert!(is_bo_loop(&b, &inversion(&b)).unwrap());
        assert!(is_bo_loop(&boloop15(), &boloop15_automorphism()).unwrap());
        assert!(!is_bo_loop(&zn(4), &Permutation::identity(4)).unwrap());
        let swap = Permutation::new(vec![1, 0, 2]).unwrap();
        assert!(check_bo_module(&zn(3), &swap).is_err());
    }

    #[test]
    fn affine_extraction() {
        let q = CayleyTable::from_fn(5, |a, b| (2 * a + 4 * b) % 5).unwrap();
        for e1 in 0..5 {
            for e2 in 0..5 {
                let f = medial_to_affine(&q, e1, e2).unwrap();
                let l = &f.loop_;
                assert!(are_isomorphic(l.table(), zn(5).table()).is_some());
                assert_eq!(f.reconstruct(), q);
                for x in 0..5 {
                    assert_eq!(f.s().apply(x), l.mul(x, x));
                    let x2 = l.mul(x, x);
                    assert_eq!(f.t().apply(x), l.mul(x2, x2));
                    // idempotent: s(x) + t(x) + c = x
                    assert_eq!(l.mul(l.mul(f.s().apply(x), f.t().apply(x)), f.constant), x);
                }
            }
        }
        let z = zn(6);
        let f = medial_to_affine(z.table(), 0, 0).unwrap();
        assert!(f.s().is_identity() && f.t().is_identity());
        assert_eq!(f.constant, 0);
        assert!(matches!(
            medial_to_affine(&ildq15(), 0, 0),
            Err(Error::NotMedial { .. })
        ));
    }

    #[test]
    fn trimediality() {
        let q = CayleyTable::from_fn(7, |a, b| (3 * a + 5 * b + 2) % 7).unwrap();
        assert!(is_trimedial(&q, TrimedialMode::Both).unwrap());
        assert!(!is_trimedial(&ildq15(), TrimedialMode::Both).unwrap());
    }

    #[test]
    fn bloop_correspondence() {
        let z3 = zn(3);
        assert!(is_bloop(&z3));
        assert_eq!(
            ildq_from_bloop(&z3).unwrap(),
            CayleyTable::from_fn(3, |a, b| (2 * a + 3 - b) % 3).unwrap()
        );
        let b = bloop15();
        assert!(is_bloop(&b));
        assert!(!is_bloop(&boloop15()));
        let q = ildq_from_bloop(&b).unwrap();
        assert!(are_isomorphic(&q, &ildq15()).is_some());
        assert!(are_isomorphic(&core_of_loop(&b).unwrap(), &q).is_some());
        for e in [0, 4, 14] {
            let l = bloop_from_ildq(&q, e).unwrap();
            assert_eq!(ildq_from_bloop(&l).unwrap(), q);
        }
        assert!(matches!(ildq_from_bloop(&zn(4)), Err(Error::NotBLoop(_))));
    }

    #[test]
    fn envelopes() {
        let core3 = CayleyTable::from_fn(3, |a, b| (2 * a + 3 - b) % 3).unwrap();
        let env = envelope_of(&core3, 0).unwrap();
        assert_eq!(env.group().order(), 6);
        assert_eq!(env.zeta().order(), 2);
        assert_eq!(quandle_from_envelope(&env).unwrap(), core3);
        assert!(envelope_is_latin(&env, true).unwrap());

        let q = ildq15();
        let env = envelope_of(&q, 3).unwrap();
        assert_eq!(env.group().degree(), 15);
        assert_eq!(quandle_from_envelope(&env).unwrap(), q);
        assert!(envelope_is_latin(&env, true).unwrap());

        let proj = CayleyTable::from_fn(2, |_, b| b).unwrap();
        assert_eq!(envelope_of(&proj, 0).unwrap_err(), Error::NotConnected);

        let r = Permutation::new(vec![1, 2, 0]).unwrap();
        let c3 = PermGroup::generate(3, &[r], DEFAULT_CAP).unwrap();
        assert!(matches!(
            Envelope::new(c3, Permutation::identity(3), 0),
            Err(Error::InvalidEnvelope(_))
        ));

        let s3 = PermGroup::generate(
            3,
            &[
                Permutation::new(vec![1, 2, 0]).unwrap(),
                Permutation::new(vec![1, 0, 2]).unwrap(),
            ],
            DEFAULT_CAP,
        )
        .unwrap();
        let env = Envelope::new(s3, Permutation::new(vec![0, 2, 1]).unwrap(), 0).unwrap();
        assert_eq!(quandle_from_envelope(&env).unwrap(), core3);
    }
}
