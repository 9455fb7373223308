mod common;

use proptest::prelude::*;
use skewcodes::{extend_field, parse_poly, Automorphism, Field, MatFq, RingCtx};

fn fields() -> Vec<Field> {
    [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 2), (7, 1), (7, 2), (11, 1), (13, 2)]
        .iter()
        .map(|&(p, s)| common::field(p, s))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(fi in 0..12usize, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = &fields()[fi];
        let (a, b, c) = (common::elem(f, a), common::elem(f, b), common::elem(f, c));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert!(f.add(a, f.neg(a)).is_zero());
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            prop_assert_eq!(f.pow(a, (f.q() - 1) as i64), f.one());
            prop_assert_eq!(f.exp(f.log(a).unwrap() as i64), a);
        }
    }

    #[test]
    fn automorphisms_are_ring_maps(fi in 0..12usize, t in 0..4u32, a in any::<u32>(), b in any::<u32>()) {
        let f = &fields()[fi];
        let th = Automorphism::new(f, t);
        let (a, b) = (common::elem(f, a), common::elem(f, b));
        prop_assert_eq!(th.map(f.add(a, b)), f.add(th.map(a), th.map(b)));
        prop_assert_eq!(th.map(f.mul(a, b)), f.mul(th.map(a), th.map(b)));
        prop_assert_eq!(th.inverse().map(th.map(a)), a);
        prop_assert_eq!(th.power(th.order() as i64).map(a), a);
        prop_assert_eq!(th.fixes(a), f.pow(a, f.p().pow(th.fixed_field_degree()) as i64) == a);
    }

    #[test]
    fn text_round_trip(fi in 0..12usize, a in any::<u32>()) {
        let f = &fields()[fi];
        let a = common::elem(f, a);
        prop_assert_eq!(f.parse(&f.format(a)).unwrap(), a);
        prop_assert_eq!(f.from_digits(&f.digits(a)).unwrap(), a);
    }
}

#[test]
fn embeddings_commute_with_frobenius() {
    for (p, s, m) in [(2, 1, 3), (2, 2, 2), (2, 3, 2), (3, 1, 2), (3, 2, 3), (5, 1, 2), (7, 1, 2)] {
        let base = common::field(p, s);
        let (ext, emb) = extend_field(&base, m).unwrap();
        assert_eq!(ext.q(), base.q().pow(m));
        for t in 0..s {
            let th = Automorphism::new(&base, t);
            let th_ext = Automorphism::new(&ext, t);
            for a in base.elements() {
                assert_eq!(emb.map(th.map(a)), th_ext.map(emb.map(a)));
                for b in base.elements() {
                    assert_eq!(emb.map(base.mul(a, b)), ext.mul(emb.map(a), emb.map(b)));
                    assert_eq!(emb.map(base.add(a, b)), ext.add(emb.map(a), emb.map(b)));
                }
            }
        }
    }
}

#[test]
fn extended_rings_restrict_correctly() {
    let f4 = common::field(2, 2);
    let ctx = common::ctx(&f4, 1, 0);
    let (_, emb) = extend_field(&f4, 2).unwrap();
    let big = ctx.extend(&emb).unwrap();
    let a = parse_poly(&ctx, "X^2 + w*X + 1").unwrap();
    let b = parse_poly(&ctx, "w*X + w^2").unwrap();
    let lift = |p: &skewcodes::SkewPoly| big.poly(p.coeffs().iter().map(|&c| emb.map(c)).collect()).unwrap();
    assert_eq!(lift(&(&a * &b)), &lift(&a) * &lift(&b));
}

#[test]
fn matrix_text_round_trip() {
    let f9 = common::field(3, 2);
    let m = MatFq::parse(&f9, "[1,w,0];[w^3,2,1]").unwrap();
    assert_eq!(MatFq::parse(&f9, &m.to_text()).unwrap(), m);
    assert_eq!(MatFq::parse(&f9, "I3").unwrap(), MatFq::identity(&f9, 3));
    assert!(MatFq::parse(&f9, "[1,2];[1]").is_err());
}

#[test]
fn polynomial_text_round_trip() {
    for ctx in common::rings() {
        for raw in [[3u32, 1, 4, 1].as_slice(), &[5, 9, 2], &[0, 0, 1]] {
            let p = common::poly(&ctx, raw);
            assert_eq!(parse_poly(&ctx, &p.pretty()).unwrap(), p);
            assert_eq!(parse_poly(&ctx, &p.to_list_string()).unwrap(), p);
        }
    }
    let ctx = RingCtx::commutative(&common::field(7, 1));
    assert!(parse_poly(&ctx, "X +").is_err());
}
