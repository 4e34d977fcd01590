mod common;

use common::*;
use selfdist::construct::{self, bo_loop_from_ldq, bo_quandle};
use selfdist::enumerate::{are_isomorphic, Family};
use selfdist::identities::{self, Constraints, Identity, ModelQuery};
use selfdist::multgroup;
use selfdist::represent::{self, Envelope};
use selfdist::Property;

#[test]
fn bo_round_trip_on_latin_quandles() {
    let mut corpus: Vec<_> = (1..=8).flat_map(|n| family(Family::LatinQuandle, n)).collect();
    corpus.push(construct::ildq15());
    corpus.push(construct::galkin_ldq15());
    for t in &corpus {
        for e in 0..t.order() {
            let (l, psi) = bo_loop_from_ldq(t, e).unwrap();
            assert!(represent::is_bo_loop(&l, &psi).unwrap());
            assert_eq!(&bo_quandle(&l, &psi).unwrap(), t, "base point {e}");
        }
    }
}

#[test]
fn bo_loops_at_different_base_points_are_isomorphic() {
    let mut corpus: Vec<_> = (1..=8).flat_map(|n| family(Family::LatinQuandle, n)).collect();
    corpus.push(construct::galkin_ldq15());
    for t in &corpus {
        let (first, _) = bo_loop_from_ldq(t, 0).unwrap();
        for e in 1..t.order() {
            let (l, _) = bo_loop_from_ldq(t, e).unwrap();
            assert!(are_isomorphic(first.table(), l.table()).is_some());
        }
    }
}

#[test]
fn envelope_round_trip_on_connected_quandles() {
    for n in 1..=8 {
        for t in connected_quandles(n) {
            for e in 0..n {
                let env = represent::envelope_of(&t, e).unwrap();
                let q = represent::quandle_from_envelope(&env).unwrap();
                assert!(are_isomorphic(&q, &t).is_some(), "order {n}, base {e}");
            }
        }
    }
}

/// A valid envelope is `(LMlt(Q), L_e, e)` for the quandle `Q` it induces, so
/// connected quandles with every base point cover all envelopes of each degree
/// up to relabeling.
#[test]
fn latin_criteria_agree_on_envelopes() {
    let mut latin_seen = [0usize; 2];
    for n in 1..=8 {
        for t in connected_quandles(n) {
            for e in 0..n {
                let env = represent::envelope_of(&t, e).unwrap();
                let q = represent::quandle_from_envelope(&env).unwrap();
                assert_eq!(multgroup::lmlt(&q).unwrap().order(), env.group().order());
                let a = represent::latin_by_fixed_points(&env);
                let b = represent::latin_by_transversal(&env);
                assert_eq!(a, b, "order {n}, base {e}");
                assert_eq!(a, t.is_latin_quandle());
                latin_seen[usize::from(a)] += 1;
            }
        }
    }
    assert!(latin_seen[0] > 0 && latin_seen[1] > 0);
}

#[test]
fn envelope_from_symmetric_group() {
    let s3 = selfdist::PermGroup::generate(
        3,
        &[
            selfdist::Permutation::new(vec![1, 0, 2]).unwrap(),
            selfdist::Permutation::new(vec![1, 2, 0]).unwrap(),
        ],
        100,
    )
    .unwrap();
    let zeta = selfdist::Permutation::new(vec![1, 0, 2]).unwrap();
    let env = Envelope::new(s3, zeta, 2).unwrap();
    let q = represent::quandle_from_envelope(&env).unwrap();
    let core = selfdist::CayleyTable::from_fn(3, |a, b| (2 * a + 3 - b) % 3).unwrap();
    assert!(are_isomorphic(&q, &core).is_some());
    assert!(represent::envelope_is_latin(&env, true).unwrap());
}

#[test]
fn bloop_round_trip_on_involutory_latin_quandles() {
    for n in 1..=9 {
        let mut checked = 0;
        for t in family(Family::LatinQuandle, n) {
            if !t.has_property(Property::LeftInvolutory).unwrap() {
                continue;
            }
            for e in 0..n {
                let l = represent::bloop_from_ildq(&t, e).unwrap();
                assert!(represent::is_bloop(&l));
                assert_eq!(represent::ildq_from_bloop(&l).unwrap(), t);
                // B-loops are BO-loops for inversion
                let inv = selfdist::Permutation::new((0..n).map(|x| l.linv(x)).collect()).unwrap();
                assert_eq!(bo_quandle(&l, &inv).unwrap(), t);
            }
            checked += 1;
        }
        let mut q = ModelQuery::new(
            vec![
                Identity::parse("x*(y*z)=(x*y)*(x*z)").unwrap(),
                Identity::parse("x*(x*y)=y").unwrap(),
            ],
            n,
            Constraints {
                quasigroup: true,
                loop_: false,
                idempotent: true,
            },
        );
        q.bound = 9;
        assert_eq!(checked, identities::count_models_up_to_isomorphism(&q).unwrap(), "order {n}");
    }
}

#[test]
fn core_of_bloop15_is_ildq15() {
    let core = construct::core_of_loop(&construct::bloop15()).unwrap();
    assert!(are_isomorphic(&core, &construct::ildq15()).is_some());
}

#[test]
fn medial_affine_round_trip() {
    for n in 1..=16 {
        for t in family(Family::MedialIdempotent, n) {
            for (e1, e2) in [(0, 0), (0, n - 1), (n / 2, 1 % n)] {
                let f = represent::medial_to_affine(&t, e1, e2).unwrap();
                assert!(f.loop_.is_associative() && f.loop_.is_commutative());
                let r = f.reconstruct();
                assert_eq!(r, t);
                assert!(r.has_property(Property::Medial).unwrap());
            }
        }
    }
}
