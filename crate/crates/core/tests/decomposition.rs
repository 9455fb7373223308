mod common;

use common::rings;
use proptest::collection::vec;
use proptest::prelude::*;
use skewcodes::code::{code_component_split, decompose, SkewGCCode};
use skewcodes::factor::{invariant_factorization, invariant_factorization_by_search};
use skewcodes::linalg::{row_space_equal, to_prime_coords};
use skewcodes::poly::{is_invariant, right_divide};
use skewcodes::{MatFq, PseudoLinearMap, RingCtx, SkewPoly};

/// `b(Y^k)` with `Y = X + beta` and `b` over the fixed field; always invariant.
fn central(ctx: &RingCtx, raw: &[u32], x_power: u32) -> SkewPoly {
    let k = ctx.theta().order();
    let fixed = ctx.field().subfield_elements(ctx.theta().fixed_field_degree());
    let y = &ctx.x() + &ctx.constant(ctx.beta());
    let yk = y.pow(k);
    let mut acc = ctx.one();
    for &c in raw {
        acc = &(&acc * &yk) + &ctx.constant(fixed[c as usize % fixed.len()]);
    }
    // X^t only stays central without a derivation
    if ctx.has_derivation() {
        acc
    } else {
        &ctx.x().pow(x_power) * &acc
    }
}

fn check_identities(f: &SkewPoly) {
    let dec = decompose(f).unwrap();
    let rep = dec.verify().unwrap();
    assert!(rep.all_hold(), "f={} report={rep:?}", f.pretty());
    assert_eq!(rep.dimensions.iter().sum::<usize>(), f.degree().unwrap());
    assert_eq!(dec.factorization.product(f.ctx()), *f);
    // e_i acts as the identity on U_i
    let field = f.field();
    for c in &dec.components {
        for row in c.subspace.to_rows() {
            let flat = to_prime_coords(field, &row);
            assert_eq!(c.idempotent.vec_mul(&flat).unwrap(), flat);
        }
    }
}

#[test]
fn example_modulus_over_f4() {
    let f4 = common::field(2, 2);
    for beta in 0..2 {
        let ctx = common::ctx(&f4, 1, beta);
        let f = ctx.poly_from_ints(&[1, 0, 1, 0, 0, 0, 1, 0, 1]);
        check_identities(&f);
        let dec = decompose(&f).unwrap();
        assert_eq!(dec.components.len(), 2);
        assert!(dec.components.iter().all(|c| c.subspace.rows() == 4));
    }
}

#[test]
fn example_modulus_is_not_invariant_for_other_betas() {
    let f4 = common::field(2, 2);
    for beta in 2..4 {
        let ctx = common::ctx(&f4, 1, beta);
        let f = ctx.poly_from_ints(&[1, 0, 1, 0, 0, 0, 1, 0, 1]);
        assert!(!is_invariant(&f).unwrap());
        assert!(decompose(&f).is_err());
    }
}

#[test]
fn single_component_gives_identity() {
    let f4 = common::field(2, 2);
    let ctx = common::ctx(&f4, 1, 0);
    // X^2 + X + 1 is irreducible over GF(2), so its square has one prime-power piece
    let f = ctx.poly_from_ints(&[1, 0, 1, 0, 1]);
    let dec = decompose(&f).unwrap();
    assert_eq!(dec.components.len(), 1);
    let c = &dec.components[0];
    assert_eq!(c.subspace.rows(), 4);
    assert_eq!(c.idempotent, MatFq::identity(&f4.prime_field(), 8));
}

#[test]
fn identity_automorphism_components_are_idempotent_row_spaces() {
    let f7 = common::field(7, 1);
    let ctx = RingCtx::commutative(&f7);
    let f = ctx.poly_from_ints(&[-1, 0, 0, 0, 0, 0, 1]);
    let dec = decompose(&f).unwrap();
    assert_eq!(dec.components.len(), 6);
    check_identities(&f);
    // over a prime field the flattened idempotent is e_i(A) itself
    for c in &dec.components {
        assert!(row_space_equal(&c.idempotent.row_space_basis(), &c.subspace).unwrap());
    }
}

#[test]
fn code_splits_along_the_decomposition() {
    let f7 = common::field(7, 1);
    let ctx = RingCtx::commutative(&f7);
    let f = ctx.poly_from_ints(&[-1, 0, 0, 0, 0, 0, 1]);
    let dec = decompose(&f).unwrap();
    for g in skewcodes::code::enumerate_right_divisors(&f, 1 << 24).unwrap() {
        let code = SkewGCCode::new(&g, &f).unwrap();
        let parts = code_component_split(&code, &dec).unwrap();
        assert_eq!(parts.iter().map(|p| p.rows()).sum::<usize>(), code.dimension());
        let mut all = MatFq::zeros(&f7, 0, 6);
        for p in &parts {
            all = all.stack(p).unwrap();
        }
        assert!(row_space_equal(&all, code.generator_matrix()).unwrap());
    }
}

#[test]
fn invariant_codes_split_into_summand_pieces() {
    let f4 = common::field(2, 2);
    let ctx = common::ctx(&f4, 1, 1);
    let f = ctx.poly_from_ints(&[1, 0, 1, 0, 0, 0, 1, 0, 1]);
    let dec = decompose(&f).unwrap();
    for c in &dec.components {
        let (g, r) = right_divide(&f, &c.cofactor).unwrap();
        assert!(r.is_zero());
        let code = SkewGCCode::new(&c.cofactor, &f).unwrap();
        let parts = code_component_split(&code, &dec).unwrap();
        assert_eq!(parts.iter().map(|p| p.rows()).sum::<usize>(), code.dimension());
        assert_eq!(g.degree(), Some(4));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn idempotent_identities_on_central_moduli(
        r in 0..13usize,
        raw in vec(any::<u32>(), 1..5),
        x_power in 0..2u32,
    ) {
        let ctx = &rings()[r];
        let f = central(ctx, &raw, x_power);
        let n = f.degree().unwrap();
        prop_assume!(n >= 1 && n * ctx.field().s() as usize <= 24);
        prop_assert!(is_invariant(&f).unwrap());
        check_identities(&f);
    }
}

#[test]
fn factorization_agrees_with_search_on_small_moduli() {
    for ctx in rings() {
        if ctx.field().q() > 9 {
            continue;
        }
        for raw in [[1u32, 1].as_slice(), &[0, 1], &[1, 0, 1], &[2, 1]] {
            let f = central(&ctx, raw, 0);
            if f.degree().unwrap() > 4 || (ctx.field().q() as u64).pow(f.degree().unwrap() as u32) > 1 << 12 {
                continue;
            }
            let a = invariant_factorization(&f).unwrap();
            let b = invariant_factorization_by_search(&f).unwrap();
            assert_eq!(a.factors, b.factors, "f={}", f.pretty());
        }
    }
}

#[test]
fn kernels_of_pieces_are_invariant_under_the_companion_map() {
    let f9 = common::field(3, 2);
    let ctx = common::ctx(&f9, 1, 4);
    let f = central(&ctx, &[1, 2, 1], 0);
    let t = PseudoLinearMap::for_modulus(&f).unwrap();
    let dec = decompose(&f).unwrap();
    for c in &dec.components {
        assert!(skewcodes::code::is_invariant_code(&c.subspace, &t).unwrap());
    }
}
