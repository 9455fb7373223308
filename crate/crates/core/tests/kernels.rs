mod common;

use common::{all_monic, monic, rings, vector};
use proptest::collection::vec;
use proptest::prelude::*;
use skewcodes::code::{is_invariant_code, SkewGCCode};
use skewcodes::factor::invariant_factorization;
use skewcodes::linalg::row_space_equal;
use skewcodes::poly::{is_invariant, right_divide, right_rem};
use skewcodes::pseudo_linear::{poly_to_vector, vector_to_poly};
use skewcodes::{MatFq, PseudoLinearMap, RingCtx, SkewPoly};

struct KernelFacts {
    fq_linear: bool,
    gc_code: bool,
    equals_code: bool,
}

fn kernel_facts(f: &SkewPoly, h: &SkewPoly, g: &SkewPoly) -> KernelFacts {
    let field = f.field();
    let n = f.degree().unwrap();
    let t = PseudoLinearMap::for_modulus(f).unwrap();
    let ker = t.kernel_of_poly(h).unwrap();
    let basis = ker.basis_matrix(field, n);
    let gc_code = ker.is_fq_linear && is_invariant_code(&basis, &t).unwrap();
    let code = SkewGCCode::new(g, f).unwrap();
    let equals_code = ker.is_fq_linear && row_space_equal(&basis, code.generator_matrix()).unwrap();
    KernelFacts { fq_linear: ker.is_fq_linear, gc_code, equals_code }
}

/// Every factorization `f = h g` with `1 <= deg g < deg f`.
fn splittings(ctx: &RingCtx, f: &SkewPoly) -> Vec<(SkewPoly, SkewPoly)> {
    let n = f.degree().unwrap();
    let mut out = Vec::new();
    for d in 1..n {
        for g in all_monic(ctx, d) {
            let (h, r) = right_divide(f, &g).unwrap();
            if r.is_zero() {
                out.push((h, g));
            }
        }
    }
    out
}

#[test]
fn kernel_is_the_code_exactly_for_invariant_cofactors_f4() {
    let f4 = common::field(2, 2);
    let mut total = 0;
    let mut equal = 0;
    for beta in 0..4 {
        let ctx = common::ctx(&f4, 1, beta);
        for n in 2..=4 {
            for f in all_monic(&ctx, n) {
                for (h, g) in splittings(&ctx, &f) {
                    let inv = is_invariant(&h).unwrap();
                    let k = kernel_facts(&f, &h, &g);
                    assert_eq!(k.gc_code, inv, "beta={beta} f={} h={}", f.pretty(), h.pretty());
                    assert_eq!(k.equals_code, inv, "beta={beta} f={} h={}", f.pretty(), h.pretty());
                    // the kernel of a non-invariant cofactor fails linearity or differs
                    if !inv {
                        assert!(!k.fq_linear || !k.equals_code);
                    }
                    total += 1;
                    equal += k.equals_code as usize;
                }
            }
        }
    }
    assert!(total > 1000, "{total}");
    assert!(equal > 0 && equal < total);
}

#[test]
fn factor_divisors_of_central_moduli() {
    let f4 = common::field(2, 2);
    for beta in 0..2 {
        let ctx = common::ctx(&f4, 1, beta);
        let f = ctx.poly_from_ints(&[1, 0, 1, 0, 0, 0, 1, 0, 1]);
        let fac = invariant_factorization(&f).unwrap();
        // every product of prime-power pieces is a two-sided divisor
        let pieces: Vec<SkewPoly> = fac.factors.iter().map(|(p, a)| p.pow(*a)).collect();
        for mask in 1..(1u32 << pieces.len()) - 1 {
            let h =
                pieces.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(ctx.one(), |acc, (_, p)| &acc * p);
            let (g, r) = right_divide(&f, &h).unwrap();
            assert!(r.is_zero());
            assert!(is_invariant(&h).unwrap());
            let k = kernel_facts(&f, &h, &g);
            assert!(k.fq_linear && k.gc_code && k.equals_code);
        }
    }
}

#[test]
fn linearity_alone_does_not_detect_invariance() {
    // h(T_f) = T_f^2 + w^2 is GF(4)-linear since theta^2 = id, yet h is not invariant
    let f4 = common::field(2, 2);
    let ctx = common::ctx(&f4, 1, 0);
    let f = ctx.poly_from_ints(&[1, 0, 1, 0, 1]);
    let w2 = f4.pow(f4.primitive(), 2);
    let h = ctx.poly(vec![w2, skewcodes::Elem::ZERO, skewcodes::Elem::ONE]).unwrap();
    let (g, r) = right_divide(&f, &h).unwrap();
    assert!(r.is_zero());
    let g = skewcodes::poly::left_divide(&f, &h).map(|_| g).unwrap();
    let (hh, r) = right_divide(&f, &g).unwrap();
    assert!(r.is_zero());
    assert_eq!(hh, h);
    let k = kernel_facts(&f, &h, &g);
    assert!(!is_invariant(&h).unwrap());
    assert!(k.fq_linear);
    assert!(!k.gc_code);
    assert!(!k.equals_code);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn polynomial_action_matches_ring_multiplication(
        r in 0..13usize,
        fr in vec(any::<u32>(), 1..6),
        pr in vec(any::<u32>(), 0..8),
        vr in vec(any::<u32>(), 6),
    ) {
        let ctx = &rings()[r];
        let f = monic(ctx, &fr);
        let n = f.degree().unwrap();
        let p = common::poly(ctx, &pr);
        let v = vector(ctx.field(), &vr[..n]);
        let t = PseudoLinearMap::for_modulus(&f).unwrap();
        let lhs = vector_to_poly(ctx, &t.apply_poly(&p, &v).unwrap()).unwrap();
        let rhs = right_rem(&(&p * &vector_to_poly(ctx, &v).unwrap()), &f).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(poly_to_vector(&rhs, &f).unwrap(), t.apply_poly(&p, &v).unwrap());
    }

    #[test]
    fn kernel_flag_matches_code_property_random(
        r in 0..13usize,
        hr in vec(any::<u32>(), 1..4),
        gr in vec(any::<u32>(), 1..4),
    ) {
        let ctx = &rings()[r];
        let (h, g) = (monic(ctx, &hr), monic(ctx, &gr));
        let f = &h * &g;
        prop_assume!(f.degree().unwrap() * ctx.field().s() as usize <= 24);
        let inv = is_invariant(&h).unwrap();
        let k = kernel_facts(&f, &h, &g);
        prop_assert_eq!(k.gc_code, inv);
        prop_assert_eq!(k.equals_code, inv);
    }
}

#[test]
fn kernel_basis_spans_a_prime_subspace() {
    let f9 = common::field(3, 2);
    let ctx = common::ctx(&f9, 1, 4);
    let f = monic(&ctx, &[2, 5, 1]);
    let t = PseudoLinearMap::for_modulus(&f).unwrap();
    let h = monic(&ctx, &[3]);
    let ker = t.kernel_of_poly(&h).unwrap();
    for row in &ker.basis {
        assert!(t.apply_poly(&h, row).unwrap().iter().all(|x| x.is_zero()));
    }
    let m: MatFq = ker.basis_matrix(&f9, 3);
    assert!(m.rows() <= 3);
}
