mod common;

use common::{all_monic, commutative_rings, plain, poly, rings};
use proptest::collection::vec;
use proptest::prelude::*;
use skewcodes::poly::{lclm, left_divide, lgcd_bezout, norm, right_divide, right_divides, skew_eval};
use skewcodes::{Elem, SkewPoly};

fn ring_count() -> usize {
    rings().len()
}

fn deg(p: &SkewPoly) -> usize {
    p.degree().expect("nonzero")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn multiplication_is_associative_and_distributive(
        r in 0..ring_count(),
        a in vec(any::<u32>(), 0..6),
        b in vec(any::<u32>(), 0..6),
        c in vec(any::<u32>(), 0..6),
    ) {
        let ctx = &rings()[r];
        let (a, b, c) = (poly(ctx, &a), poly(ctx, &b), poly(ctx, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&ctx.one() * &a, a.clone());
        prop_assert_eq!(&a * &ctx.one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() && !b.is_zero() {
            prop_assert_eq!(deg(&(&a * &b)), deg(&a) + deg(&b));
        }
    }

    #[test]
    fn divisions_multiply_back(
        r in 0..ring_count(),
        a in vec(any::<u32>(), 0..9),
        b in vec(any::<u32>(), 1..6),
    ) {
        let ctx = &rings()[r];
        let (a, b) = (poly(ctx, &a), poly(ctx, &b));
        prop_assume!(!b.is_zero());
        let (q, rem) = right_divide(&a, &b).unwrap();
        prop_assert_eq!(&(&q * &b) + &rem, a.clone());
        prop_assert!(rem.is_zero() || deg(&rem) < deg(&b));
        let (q, rem) = left_divide(&a, &b).unwrap();
        prop_assert_eq!(&(&b * &q) + &rem, a.clone());
        prop_assert!(rem.is_zero() || deg(&rem) < deg(&b));
    }

    #[test]
    fn bezout_and_lclm(
        r in 0..ring_count(),
        a in vec(any::<u32>(), 1..7),
        b in vec(any::<u32>(), 1..7),
        common in vec(any::<u32>(), 0..3),
    ) {
        let ctx = &rings()[r];
        // a shared right factor makes nontrivial gcds common
        let s = poly(ctx, &common);
        let s = if s.is_zero() { ctx.one() } else { s };
        let (a, b) = (&poly(ctx, &a) * &s, &poly(ctx, &b) * &s);
        prop_assume!(!a.is_zero() && !b.is_zero());
        let bez = lgcd_bezout(&a, &b).unwrap();
        prop_assert!(bez.d.is_monic());
        prop_assert_eq!(&(&bez.u * &a) + &(&bez.v * &b), bez.d.clone());
        prop_assert!(right_divides(&bez.d, &a).unwrap());
        prop_assert!(right_divides(&bez.d, &b).unwrap());
        prop_assert!(right_divides(&s.monic().unwrap(), &bez.d).unwrap());
        let m = lclm(&a, &b).unwrap();
        prop_assert!(m.is_monic());
        prop_assert!(right_divides(&a, &m).unwrap());
        prop_assert!(right_divides(&b, &m).unwrap());
        prop_assert_eq!(deg(&m) + deg(&bez.d), deg(&a) + deg(&b));
    }

    #[test]
    fn identity_automorphism_matches_plain_polynomials(
        r in 0..5usize,
        a in vec(any::<u32>(), 0..8),
        b in vec(any::<u32>(), 1..6),
        x in any::<u32>(),
        i in 0..8usize,
    ) {
        let ctx = &commutative_rings()[r];
        let f = ctx.field();
        let (pa, pb) = (poly(ctx, &a), poly(ctx, &b));
        prop_assume!(!pb.is_zero());
        let (ca, cb) = (pa.coeffs().to_vec(), pb.coeffs().to_vec());
        prop_assert_eq!(&pa * &pb, ctx.poly(plain::mul(f, &ca, &cb)).unwrap());
        prop_assert_eq!(&pb * &pa, &pa * &pb);
        let (q, rem) = plain::divmod(f, &ca, &cb);
        let (q, rem) = (ctx.poly(q).unwrap(), ctx.poly(rem).unwrap());
        prop_assert_eq!(right_divide(&pa, &pb).unwrap(), (q.clone(), rem.clone()));
        prop_assert_eq!(left_divide(&pa, &pb).unwrap(), (q, rem));
        if !pa.is_zero() {
            prop_assert_eq!(lgcd_bezout(&pa, &pb).unwrap().d, ctx.poly(plain::gcd(f, &ca, &cb)).unwrap());
            prop_assert_eq!(lclm(&pa, &pb).unwrap(), ctx.poly(plain::lcm(f, &ca, &cb)).unwrap());
        }
        let x = common::elem(f, x);
        prop_assert_eq!(skew_eval(&pa, x).unwrap(), plain::eval(f, &ca, x));
        prop_assert_eq!(norm(i, x, ctx.theta()), f.pow(x, i as i64));
    }
}

#[test]
fn exhaustive_division_and_gcd_over_f4() {
    let f4 = common::field(2, 2);
    for beta in 0..4 {
        let ctx = common::ctx(&f4, 1, beta);
        let mut polys: Vec<SkewPoly> = vec![ctx.zero()];
        for d in 0..=2 {
            for m in all_monic(&ctx, d) {
                for c in f4.nonzero_elements() {
                    polys.push(m.scale_left(c));
                }
            }
        }
        assert_eq!(polys.len(), 64);
        for a in &polys {
            for b in polys.iter().filter(|b| !b.is_zero()) {
                let (q, r) = right_divide(a, b).unwrap();
                assert_eq!(&(&q * b) + &r, *a);
                let (q, r) = left_divide(a, b).unwrap();
                assert_eq!(&(b * &q) + &r, *a);
                if !a.is_zero() {
                    let bez = lgcd_bezout(a, b).unwrap();
                    assert_eq!(&(&bez.u * a) + &(&bez.v * b), bez.d);
                    let m = lclm(a, b).unwrap();
                    assert_eq!(deg(&m) + deg(&bez.d), deg(a) + deg(b));
                }
            }
        }
    }
}

#[test]
fn commutation_rule() {
    for ctx in rings() {
        let f = ctx.field();
        for a in f.elements() {
            let lhs = &ctx.x() * &ctx.constant(a);
            let ta = ctx.theta().map(a);
            let d = f.mul(ctx.beta(), f.sub(ta, a));
            assert_eq!(lhs, ctx.poly(vec![d, ta]).unwrap());
        }
    }
}

#[test]
fn units_are_the_nonzero_constants() {
    let f4 = common::field(2, 2);
    let ctx = common::ctx(&f4, 1, 1);
    let w = f4.primitive();
    let c = ctx.constant(w);
    let inv = ctx.constant(f4.inv(w).unwrap());
    assert!((&c * &inv).is_one());
    assert_eq!(lgcd_bezout(&ctx.x(), &ctx.linear(Elem::ONE)).unwrap().d, ctx.one());
}
