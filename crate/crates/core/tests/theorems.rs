mod common;

use common::*;
use selfdist::construct::{self, bo_loop_from_ldq};
use selfdist::enumerate::Family;
use selfdist::identities::{self, Constraints, Identity, ModelQuery};
use selfdist::represent::{self, TrimedialMode};
use selfdist::{CayleyTable, LoopView, Permutation, Property};

fn is_automorphism(l: &LoopView, f: &[usize]) -> bool {
    l.table().is_endomorphism(f) && selfdist::Permutation::new(f.to_vec()).is_ok()
}

fn companion_is_bijective(l: &LoopView, psi: &Permutation) -> bool {
    Permutation::new(represent::companion(l, psi)).is_ok()
}

/// Loops of order at most 6 with each automorphism whose companion is bijective.
fn loop_modules() -> Vec<(LoopView, Permutation)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        for l in loops(n) {
            for psi in automorphisms(l.table()) {
                if companion_is_bijective(&l, &psi) {
                    out.push((l.clone(), psi));
                }
            }
        }
    }
    out
}

/// BO-loops with their automorphism: those of order at most 6, the loop
/// isotopes of latin quandles of order at most 8, and the order-15 examples.
fn bo_loop_corpus() -> Vec<(LoopView, Permutation)> {
    let mut out: Vec<_> = loop_modules()
        .into_iter()
        .filter(|(l, psi)| represent::is_bo_loop(l, psi).unwrap())
        .collect();
    for n in 1..=8 {
        for t in family(Family::LatinQuandle, n) {
            out.push(bo_loop_from_ldq(&t, 0).unwrap());
        }
    }
    out.push(bo_loop_from_ldq(&construct::galkin_ldq15(), 0).unwrap());
    out.push(bo_loop_from_ldq(&construct::ildq15(), 0).unwrap());
    out.push((construct::boloop15(), construct::boloop15_automorphism()));
    for (l, psi) in &out {
        assert!(represent::is_bo_loop(l, psi).unwrap());
    }
    out
}

#[test]
fn bo_loop_commutative_moufang_and_automorphic_companion_any_two_imply_third() {
    let mut patterns = std::collections::HashSet::new();
    for (l, psi) in loop_modules() {
        let bo = represent::check_bo_module(&l, &psi).unwrap().is_none();
        let cml = l.is_commutative() && l.has_property(Property::Moufang).unwrap();
        let phi_auto = is_automorphism(&l, &represent::companion(&l, &psi));
        let count = [bo, cml, phi_auto].iter().filter(|&&b| b).count();
        assert_ne!(count, 2, "order {}: bo={bo} cml={cml} phi={phi_auto}", l.order());
        patterns.insert((bo, cml, phi_auto));
    }
    assert!(patterns.contains(&(true, true, true)));
    assert!(patterns.len() > 1);
}

#[test]
fn bo_condition_matches_its_two_identity_form() {
    let mut corpus = loop_modules();
    corpus.push((construct::boloop15(), construct::boloop15_automorphism()));
    corpus.push(bo_loop_from_ldq(&construct::galkin_ldq15(), 3).unwrap());
    let b = construct::bloop15();
    let inv = Permutation::new((0..15).map(|x| b.linv(x)).collect()).unwrap();
    corpus.push((b, inv));
    for (l, psi) in corpus {
        let n = l.order();
        let phi = represent::companion(&l, &psi);
        let first = (0..n).all(|x| {
            (0..n).all(|y| l.mul(phi[x], l.mul(psi.apply(x), y)) == l.mul(x, y))
        });
        let second = (0..n).all(|x| {
            (0..n).all(|y| {
                let lxy = l.left_inner(x, y);
                (0..n).all(|z| lxy[psi.apply(z)] == psi.apply(lxy[z]))
            })
        });
        let bo = represent::check_bo_module(&l, &psi).unwrap().is_none();
        assert_eq!(first && second, bo, "order {n}");
    }
}

#[test]
fn bo_loop_subclasses() {
    let mut groups = 0;
    let mut non_bol = 0;
    for (l, _) in bo_loop_corpus() {
        let t = l.table();
        let left_alt = l.has_property(Property::LeftAlternative).unwrap();
        assert_eq!(l.has_property(Property::LeftBol).unwrap(), left_alt);

        let moufang = l.has_property(Property::Moufang).unwrap();
        assert_eq!(holds(t, "(y*x)*x=y*(x*x)"), moufang);
        assert_eq!(l.has_property(Property::Rip).unwrap(), moufang);
        assert_eq!(holds(t, "(x*y)'=y'*x'"), moufang);
        assert_eq!(holds(t, "x*(y*x)=(x*y)*x"), moufang);

        let nucleus = l.nucleus();
        let squares_nuclear = (0..l.order()).all(|x| nucleus.contains(&l.mul(x, x)));
        assert_eq!(l.is_associative(), left_alt && squares_nuclear);
        groups += usize::from(l.is_associative());
        non_bol += usize::from(!left_alt);
    }
    assert!(groups > 0 && non_bol > 0);
}

#[test]
fn commutative_moufang_characterizations() {
    let mut seen = 0;
    for n in 1..=6 {
        for l in loops(n) {
            if !l.is_commutative() {
                continue;
            }
            let t = l.table();
            let moufang = l.has_property(Property::Moufang).unwrap();
            assert_eq!(l.is_diassociative() && l.is_automorphic(), moufang);
            assert_eq!(holds(t, "(x*x)*(y*z)=(x*y)*(x*z)"), moufang);
            // some f with f(x)x·yz = f(x)y·xz, chosen pointwise
            let exists_f = (0..n).all(|x| {
                (0..n).any(|w| {
                    (0..n).all(|y| {
                        (0..n).all(|z| {
                            l.mul(l.mul(w, x), l.mul(y, z)) == l.mul(l.mul(w, y), l.mul(x, z))
                        })
                    })
                })
            });
            assert_eq!(exists_f, moufang);
            seen += 1;
        }
    }
    assert!(seen >= 8);
}

#[test]
fn left_bol_automorphic_inverse_characterizations() {
    for n in 1..=6 {
        for l in loops(n) {
            if !l.has_property(Property::LeftBol).unwrap() {
                continue;
            }
            let t = l.table();
            let aip = l.has_property(Property::Aip).unwrap();
            assert_eq!(holds(t, "(x*y)*(x*y)=x*((y*y)*x)"), aip);
            let lt: Vec<Vec<usize>> = (0..n).map(|a| t.row(a).to_vec()).collect();
            let translations = (0..n).all(|a| {
                (0..n).all(|b| {
                    let ab = l.mul(a, b);
                    (0..n).all(|z| {
                        lt[ab][lt[ab][z]] == lt[a][lt[b][lt[b][lt[a][z]]]]
                    })
                })
            });
            assert_eq!(translations, aip);
        }
    }
}

#[test]
fn uniquely_2_divisible_left_bol_characterizations() {
    for n in 1..=6 {
        for l in loops(n) {
            if !l.is_uniquely_2_divisible() || !l.has_property(Property::Laip).unwrap() {
                continue;
            }
            let t = l.table();
            let left_automorphic = (0..n).all(|x| (0..n).all(|y| is_automorphism(&l, &l.left_inner(x, y))));
            let one = l.has_property(Property::Lip).unwrap()
                && l.has_property(Property::LeftAlternative).unwrap()
                && left_automorphic;
            let inner_inverse = (0..n).all(|x| {
                (0..n).all(|y| {
                    let m = l.left_inner(x, y);
                    (0..n).all(|z| m[l.linv(z)] == l.linv(m[z]))
                })
            });
            let one_prime = holds(t, "(x*x)*(x'*y)=x*y") && inner_inverse;
            let two = l.has_property(Property::LeftBol).unwrap();
            let two_prime = holds(t, "((x*y)*(x*y))*(x'*z)=x*((y*y)*z)");
            assert_eq!(one, two);
            assert_eq!(one_prime, two);
            assert_eq!(two_prime, two);
        }
    }
}

#[test]
fn no_latin_quandles_of_order_2_or_6() {
    for n in [2, 6] {
        assert!(family(Family::LatinQuandle, n).is_empty());
        let ld = Identity::parse("x*(y*z)=(x*y)*(x*z)").unwrap();
        let cons = Constraints {
            quasigroup: true,
            loop_: false,
            idempotent: true,
        };
        assert!(identities::find_model(&[ld], n, cons).unwrap().is_none());
    }
}

#[test]
fn connected_quandles_of_prime_and_prime_square_order_are_medial() {
    for n in [3, 4, 5, 7, 9] {
        let qs = connected_quandles(n);
        assert!(!qs.is_empty());
        for t in qs {
            assert!(t.has_property(Property::Medial).unwrap(), "order {n}");
        }
    }
    // order 6 has non-medial connected quandles
    assert!(connected_quandles(6)
        .iter()
        .any(|t| !t.has_property(Property::Medial).unwrap()));
}

fn distributive(t: &CayleyTable) -> bool {
    t.has_property(Property::LeftDistributive).unwrap() && t.has_property(Property::RightDistributive).unwrap()
}

fn distributive_iff_idempotent_trimedial(t: &CayleyTable) {
    let trimedial = represent::trimedial_identity_witness(t).is_none();
    assert_eq!(distributive(t), t.is_idempotent() && trimedial);
}

#[test]
fn distributive_quasigroups_are_the_idempotent_trimedial_ones() {
    for n in 1..=5 {
        for t in all_latin_squares(n) {
            distributive_iff_idempotent_trimedial(&t);
        }
    }
    let q = ModelQuery::new(
        Vec::new(),
        6,
        Constraints {
            quasigroup: true,
            loop_: false,
            idempotent: true,
        },
    );
    let mut count = 0;
    identities::for_each_model(&q, true, |t| {
        distributive_iff_idempotent_trimedial(t);
        count += 1;
        true
    })
    .unwrap();
    assert!(count > 0);
    for t in [construct::ildq15(), construct::galkin_ldq15()] {
        distributive_iff_idempotent_trimedial(&t);
    }
    for k in 1..=6 {
        let t = construct::dq81(k).unwrap();
        distributive_iff_idempotent_trimedial(&t);
        assert!(distributive(&t));
    }
}

#[test]
fn trimediality_characterizations_agree() {
    for n in 1..=4 {
        for t in all_latin_squares(n) {
            represent::is_trimedial(&t, TrimedialMode::Both).unwrap();
        }
    }
    for n in 1..=9 {
        for t in family(Family::LatinQuandle, n) {
            represent::is_trimedial(&t, TrimedialMode::Both).unwrap();
        }
    }
    assert!(!represent::is_trimedial(&construct::ildq15(), TrimedialMode::Both).unwrap());
}

#[test]
fn latin_quandles_are_connected_and_homogeneous() {
    for n in 1..=9 {
        for t in family(Family::LatinQuandle, n) {
            assert!(selfdist::multgroup::is_connected(&t));
            assert!(selfdist::multgroup::is_homogeneous(&t));
        }
    }
}
