//! Property tests for the skew-commuting polynomial arithmetic.

use proptest::prelude::*;

use oddsoergel::skewpoly::{q_int, Monomial, SkewPoly};

fn arb_poly(nvars: usize) -> impl Strategy<Value = SkewPoly> {
    let exps = prop::collection::vec(0u32..4, nvars);
    prop::collection::vec((exps, -5i64..=5), 0..6).prop_map(move |terms| {
        let mut p = SkewPoly::zero(nvars);
        for (e, c) in terms {
            p = p.add(&SkewPoly::monomial(Monomial::new(e), q_int(c)));
        }
        p
    })
}

proptest! {
    #[test]
    fn multiplication_is_associative(
        a in arb_poly(2), b in arb_poly(2), c in arb_poly(2)
    ) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn multiplication_is_bilinear(a in arb_poly(2), b in arb_poly(2), c in arb_poly(2)) {
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert_eq!(c.mul(&a.add(&b)), c.mul(&a).add(&c.mul(&b)));
    }

    #[test]
    fn transposition_is_involutive_ring_map(a in arb_poly(2), b in arb_poly(2)) {
        prop_assert_eq!(a.act_s(0).act_s(0), a.clone());
        prop_assert_eq!(a.mul(&b).act_s(0), a.act_s(0).mul(&b.act_s(0)));
    }

    #[test]
    fn twisted_leibniz(a in arb_poly(2), b in arb_poly(2)) {
        let lhs = a.mul(&b).demazure(0);
        let rhs = a.demazure(0).mul(&b).add(&a.act_s(0).mul(&b.demazure(0)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn demazure_image_is_invariant(a in arb_poly(3)) {
        prop_assert!(a.demazure(0).is_invariant(0));
        prop_assert!(a.demazure(1).is_invariant(1));
    }

    #[test]
    fn three_variable_leibniz(a in arb_poly(3), b in arb_poly(3)) {
        for i in [0usize, 1] {
            let lhs = a.mul(&b).demazure(i);
            let rhs = a.demazure(i).mul(&b).add(&a.act_s(i).mul(&b.demazure(i)));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn printed_polynomials_parse_back(a in arb_poly(2)) {
        let text = a.to_string();
        let parsed = oddsoergel::skewpoly::parse_poly(&text, 2).unwrap();
        prop_assert_eq!(parsed, a);
    }
}
