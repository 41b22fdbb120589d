//! Property tests for the algebraic and combinatorial invariants.

use proptest::prelude::*;

use uoplab::coeffs::{Coweight, GroupAlgElt, Int, LaurentPoly};
use uoplab::hecke::HeckeAlgebra;
use uoplab::rootdata::{
    antidominant_rep, dot_act, dot_orbit_sum, is_dot_invariant, orbit, preset, ExtAffWeylElt,
};
use uoplab::tree::{apply_u, apply_v, hecke_t, retraction, TreeModel, TreeVertex, VertexSum};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-8i32..=8, -50i64..=50), 0..6)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (e, Int::from(c)))))
}

fn coweight(rank: usize, r: i32) -> impl Strategy<Value = Coweight> {
    prop::collection::vec(-r..=r, rank).prop_map(Coweight::from)
}

fn group_alg(rank: usize) -> impl Strategy<Value = GroupAlgElt> {
    prop::collection::vec((coweight(rank, 3), laurent()), 0..5).prop_map(move |ts| {
        let mut out = GroupAlgElt::zero(rank);
        for (l, c) in ts {
            out.add_term(l, &c);
        }
        out
    })
}

fn element(rank: usize, order: u32) -> impl Strategy<Value = ExtAffWeylElt> {
    (coweight(rank, 2), 0..order).prop_map(|(l, w)| ExtAffWeylElt::new(l, w))
}

fn vertex(q: u32, max_len: usize) -> impl Strategy<Value = TreeVertex> {
    (
        0..=q as u8,
        prop::collection::vec(0..q as u8, 0..max_len),
        any::<bool>(),
    )
        .prop_map(|(first, rest, origin)| {
            if origin {
                return TreeVertex::origin();
            }
            let mut v = TreeVertex::origin().child(first);
            for d in rest {
                v = v.child(d);
            }
            v
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn laurent_ring(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &LaurentPoly::zero(), a.clone());
    }

    #[test]
    fn laurent_text_round_trip(a in laurent()) {
        let back: LaurentPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn laurent_exact_division(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn evaluation_is_a_ring_map(a in laurent(), b in laurent(), q in prop::sample::select(vec![4u64, 9, 25])) {
        prop_assert_eq!((&a * &b).eval_q(q).unwrap(), a.eval_q(q).unwrap() * b.eval_q(q).unwrap());
        prop_assert_eq!((&a + &b).eval_q(q).unwrap(), a.eval_q(q).unwrap() + b.eval_q(q).unwrap());
    }

    #[test]
    fn group_algebra_ring(a in group_alg(2), b in group_alg(2), c in group_alg(2)) {
        let ab = a.try_mul(&b).unwrap();
        prop_assert_eq!(&ab, &b.try_mul(&a).unwrap());
        prop_assert_eq!(ab.try_mul(&c).unwrap(), a.try_mul(&b.try_mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.try_mul(&(&b + &c)).unwrap(), &ab + &a.try_mul(&c).unwrap());
    }

    #[test]
    fn coweight_text_round_trip(l in coweight(3, 50)) {
        let back: Coweight = l.to_string().parse().unwrap();
        prop_assert_eq!(back, l);
    }

    #[test]
    fn dot_action_is_an_action(r in group_alg(3), a in 0u32..6, b in 0u32..6) {
        let d = preset("gl3").unwrap();
        let w = d.weyl();
        prop_assert_eq!(dot_act(&d, b, &dot_act(&d, a, &r)), dot_act(&d, w.mul(b, a), &r));
    }

    #[test]
    fn orbit_sums_are_invariant(l in coweight(2, 3)) {
        let d = preset("sp4").unwrap();
        let (rep, w) = antidominant_rep(&d, &l);
        prop_assert!(d.is_antidominant(&rep));
        prop_assert_eq!(d.weyl().act(w, &rep), l.clone());
        prop_assert!(orbit(&d, &rep).contains(&l));
        prop_assert!(is_dot_invariant(&d, &dot_orbit_sum(&d, &rep)));
    }

    #[test]
    fn tree_relations(v in vertex(3, 5)) {
        let t = TreeModel::new(3, 8).unwrap();
        let d = VertexSum::delta(v.clone());
        let u = apply_u(&t, &d).unwrap();
        prop_assert_eq!(apply_v(&t, &u).unwrap(), d.scale(3));
        prop_assert_eq!(hecke_t(&t, &d).unwrap(), u.add(&apply_v(&t, &d).unwrap()));
        prop_assert_eq!(retraction(&retraction(&v)), retraction(&v));
        prop_assert_eq!(retraction(&v).len(), v.len());
        let back: TreeVertex = v.address().parse().unwrap();
        prop_assert_eq!(back, v);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lengths_are_subadditive(x in element(3, 6), y in element(3, 6)) {
        let a = HeckeAlgebra::from_datum(preset("gl3").unwrap()).unwrap();
        let g = a.group();
        let xy = g.mul(&x, &y);
        prop_assert!(g.length(&xy) <= g.length(&x) + g.length(&y));
        prop_assert_eq!(g.length(&g.inverse(&x)), g.length(&x));
        let d = g.decompose(&x);
        prop_assert_eq!(d.word.len() as u32, g.length(&x));
    }

    #[test]
    fn hecke_associativity(x in element(2, 8), y in element(2, 8), z in element(2, 8)) {
        let a = HeckeAlgebra::from_datum(preset("sp4").unwrap()).unwrap();
        let (tx, ty, tz) = (a.basis(x), a.basis(y), a.basis(z));
        prop_assert_eq!(a.mul(&a.mul(&tx, &ty), &tz), a.mul(&tx, &a.mul(&ty, &tz)));
    }

    #[test]
    fn theta_is_additive(l in coweight(3, 2), m in coweight(3, 2)) {
        let a = HeckeAlgebra::from_datum(preset("gl3").unwrap()).unwrap();
        let lhs = a.mul(&a.theta(&l).unwrap(), &a.theta(&m).unwrap());
        prop_assert_eq!(&lhs, &*a.theta(&(&l + &m)).unwrap());
    }

    #[test]
    fn bernstein_round_trip(x in element(2, 8)) {
        let a = HeckeAlgebra::from_datum(preset("sp4").unwrap()).unwrap();
        let h = a.basis(x);
        prop_assert_eq!(a.expand(&a.bernstein_form(&h).unwrap()).unwrap(), h);
    }

    #[test]
    fn inverse_of_basis(x in element(2, 2)) {
        let a = HeckeAlgebra::from_datum(preset("gl2").unwrap()).unwrap();
        let h = a.basis(x.clone());
        prop_assert_eq!(a.mul(&h, &a.t_inverse(&x)), a.one());
    }
}
