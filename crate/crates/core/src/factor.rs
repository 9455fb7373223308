//! Factorization of invariant polynomials into powers of distinct
//! irreducible invariant factors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::poly::{is_invariant, lgcd_bezout, right_divide, right_divides, right_rem, RingCtx, SkewPoly};

/// Largest number of candidates tried per degree in the brute-force search.
pub const BRUTE_FORCE_LIMIT: u64 = 1 << 20;

/// `f = f_1^{a_1} ... f_t^{a_t}` with distinct monic irreducible invariant `f_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(SkewPoly, u32)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorRecord {
    pub factor: String,
    pub multiplicity: u32,
}

impl Factorization {
    /// The product of the factor powers, in listed order.
    pub fn product(&self, ctx: &RingCtx) -> SkewPoly {
        self.factors.iter().fold(ctx.one(), |acc, (f, a)| &acc * &f.pow(*a))
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn records(&self) -> Vec<FactorRecord> {
        self.factors.iter().map(|(f, a)| FactorRecord { factor: f.pretty(), multiplicity: *a }).collect()
    }
}

fn sort_key(p: &SkewPoly) -> (usize, Vec<Elem>) {
    (p.coeffs().len(), p.coeffs().to_vec())
}

/// Factors a monic invariant `f`. Without a derivation `f = X^t b(X^k)` with
/// `b` over the fixed field of theta, and `b` is factored as an ordinary
/// polynomial. A derivation `beta (theta(a) - a)` is inner: `Y = X + beta`
/// satisfies `Y a = theta(a) Y`, so that case is rewritten in `Y`, factored
/// the same way, and mapped back.
pub fn invariant_factorization(f: &SkewPoly) -> Result<Factorization> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if !is_invariant(f)? {
        return Err(Error::NotInvariant);
    }
    let ctx = f.ctx();
    let mut factors = if n == 0 {
        Vec::new()
    } else if ctx.has_derivation() {
        let plain = ctx.without_derivation();
        let beta = ctx.beta();
        let neg_beta = ctx.field().neg(beta);
        let in_y = substitute_shift(f, &plain, neg_beta);
        structured_factors(&in_y)?.into_iter().map(|(g, a)| (substitute_shift(&g, ctx, beta), a)).collect()
    } else {
        structured_factors(f)?
    };
    factors.sort_by_key(|a| sort_key(&a.0));
    let fac = Factorization { factors };
    debug_assert_eq!(&fac.product(ctx), f);
    Ok(fac)
}

/// Image of `p` under the ring map sending the variable to `X + c` in `target`.
fn substitute_shift(p: &SkewPoly, target: &RingCtx, c: Elem) -> SkewPoly {
    let lin = target.poly(vec![c, Elem::ONE]).expect("element of the field");
    let mut acc = target.zero();
    let mut power = target.one();
    for (i, &a) in p.coeffs().iter().enumerate() {
        if i > 0 {
            power = &power * &lin;
        }
        acc = &acc + &power.scale_left(a);
    }
    acc
}

/// Reference search: monic invariant right divisors of increasing degree,
/// keeping those not right-divisible by an earlier factor. Costs up to
/// `q^deg` candidates per degree.
pub fn invariant_factorization_by_search(f: &SkewPoly) -> Result<Factorization> {
    if f.degree().ok_or(Error::ZeroPolynomial)? == 0 {
        return Ok(Factorization { factors: Vec::new() });
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if !is_invariant(f)? {
        return Err(Error::NotInvariant);
    }
    let mut factors = brute_force_factors(f)?;
    factors.sort_by_key(|a| sort_key(&a.0));
    Ok(Factorization { factors })
}

fn structured_factors(f: &SkewPoly) -> Result<Vec<(SkewPoly, u32)>> {
    let ctx = f.ctx();
    let field = ctx.field();
    let k = ctx.theta().order() as usize;
    let t = f.coeffs().iter().take_while(|c| c.is_zero()).count();
    let rest = &f.coeffs()[t..];
    let mut out = Vec::new();
    if t > 0 {
        out.push((ctx.x(), t as u32));
    }
    if rest.len() == 1 {
        return Ok(out);
    }
    // b(Y) with f = X^t b(X^k)
    let comm = RingCtx::commutative(field);
    let mut b = Vec::new();
    for (i, &c) in rest.iter().enumerate() {
        if i % k == 0 {
            if !ctx.theta().fixes(c) {
                return Err(Error::NotInvariant);
            }
            b.push(c);
        } else if !c.is_zero() {
            return Err(Error::NotInvariant);
        }
    }
    let b = comm.poly(b)?;
    let sub_degree = ctx.theta().fixed_field_degree();
    for (pi, m) in factor_over_subfield(&b, sub_degree)? {
        let mut lifted = vec![Elem::ZERO; (pi.coeffs().len() - 1) * k + 1];
        for (i, &c) in pi.coeffs().iter().enumerate() {
            lifted[i * k] = c;
        }
        out.push((ctx.poly(lifted)?, m));
    }
    Ok(out)
}

fn brute_force_factors(f: &SkewPoly) -> Result<Vec<(SkewPoly, u32)>> {
    let ctx = f.ctx();
    let field = ctx.field();
    let n = f.degree().expect("nonzero");
    let q = field.q() as u64;
    let mut found: Vec<(SkewPoly, u32)> = Vec::new();
    let mut covered = 0usize;
    for d in 1..=n {
        if covered == n {
            break;
        }
        let count = q.checked_pow(d as u32).filter(|&c| c <= BRUTE_FORCE_LIMIT).ok_or(Error::BudgetExceeded {
            needed: (q as u128).saturating_pow(d as u32),
            budget: BRUTE_FORCE_LIMIT as u128,
        })?;
        for idx in 0..count {
            let mut coeffs: Vec<Elem> = (0..d).map(|i| Elem(((idx / q.pow(i as u32)) % q) as u32)).collect();
            coeffs.push(Elem::ONE);
            let p = ctx.poly(coeffs)?;
            if !right_divides(&p, f)? || !is_invariant(&p)? {
                continue;
            }
            let mut reducible = false;
            for (g, _) in &found {
                if right_divides(g, &p)? {
                    reducible = true;
                    break;
                }
            }
            if reducible {
                continue;
            }
            let mut alpha = 1u32;
            let mut power = &p * &p;
            while power.degree() <= f.degree() && right_divides(&power, f)? {
                alpha += 1;
                power = &power * &p;
            }
            covered += d * alpha as usize;
            found.push((p, alpha));
        }
    }
    if covered != n {
        return Err(Error::Precondition("invariant factors do not cover the polynomial".into()));
    }
    Ok(found)
}

// ordinary polynomials over a subfield, using the commutative ring over the big field

fn derivative(a: &SkewPoly) -> SkewPoly {
    let f = a.field();
    let c: Vec<Elem> = a.coeffs().iter().enumerate().skip(1).map(|(i, &c)| f.mul(f.from_int(i as i64), c)).collect();
    a.ctx().poly(c).expect("coefficients in field")
}

fn gcd(a: &SkewPoly, b: &SkewPoly) -> SkewPoly {
    if a.is_zero() && b.is_zero() {
        return a.ctx().zero();
    }
    lgcd_bezout(a, b).expect("not both zero").d
}

fn exact_div(a: &SkewPoly, b: &SkewPoly) -> SkewPoly {
    let (q, r) = right_divide(a, b).expect("nonzero divisor");
    debug_assert!(r.is_zero());
    q
}

fn mulmod(a: &SkewPoly, b: &SkewPoly, m: &SkewPoly) -> SkewPoly {
    right_rem(&(a * b), m).expect("nonzero modulus")
}

fn powmod(a: &SkewPoly, mut e: u64, m: &SkewPoly) -> SkewPoly {
    let mut base = right_rem(a, m).expect("nonzero modulus");
    let mut acc = right_rem(&a.ctx().one(), m).expect("nonzero modulus");
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &base, m);
        }
        base = mulmod(&base, &base, m);
        e >>= 1;
    }
    acc
}

/// Square-free decomposition: pairs `(g_i, i)` with `b = prod g_i^i`, each `g_i` square-free.
fn square_free(b: &SkewPoly) -> Vec<(SkewPoly, u32)> {
    let field = b.field();
    let p = field.p();
    let mut out = Vec::new();
    let mut c = gcd(b, &derivative(b));
    let mut w = exact_div(b, &c);
    let mut i = 1u32;
    while w.degree() > Some(0) {
        let y = gcd(&w, &c);
        let fac = exact_div(&w, &y);
        if fac.degree() > Some(0) {
            out.push((fac, i));
        }
        w = y;
        c = exact_div(&c, &w);
        i += 1;
    }
    if c.degree() > Some(0) {
        // c is a p-th power
        let root: Vec<Elem> =
            c.coeffs().iter().step_by(p as usize).map(|&a| field.frobenius(a, field.s() - 1)).collect();
        let root = c.ctx().poly(root).expect("coefficients in field");
        for (g, m) in square_free(&root) {
            out.push((g, m * p));
        }
    }
    out
}

/// Distinct-degree split of a square-free monic polynomial over GF(q'), `q' = p^e`.
fn distinct_degree(b: &SkewPoly, qs: u64) -> Vec<(SkewPoly, usize)> {
    let ctx = b.ctx();
    let x = ctx.x();
    let mut out = Vec::new();
    let mut rest = b.clone();
    let mut h = right_rem(&x, &rest).expect("nonzero");
    let mut d = 0;
    while rest.degree().is_some_and(|deg| deg >= 2 * (d + 1)) {
        d += 1;
        h = powmod(&h, qs, &rest);
        let g = gcd(&rest, &(&h - &x));
        if g.degree() > Some(0) {
            rest = exact_div(&rest, &g);
            h = right_rem(&h, &rest).expect("nonzero");
            out.push((g, d));
        }
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((rest, deg));
    }
    out
}

/// Splits a product of distinct degree-`d` irreducibles over GF(q') into its factors.
fn equal_degree(b: &SkewPoly, d: usize, sub: &[Elem], qs: u64, rng: &mut ChaCha8Rng) -> Vec<SkewPoly> {
    let deg = b.degree().expect("nonzero");
    if deg == d {
        return vec![b.clone()];
    }
    let ctx = b.ctx();
    let field = b.field();
    let p = field.p() as u64;
    loop {
        let a: Vec<Elem> = (0..deg).map(|_| sub[rng.gen_range(0..sub.len())]).collect();
        let a = ctx.poly(a).expect("subfield elements");
        if a.degree() < Some(1) {
            continue;
        }
        let probe = if p == 2 {
            // trace to GF(2): a + a^2 + ... + a^(2^(e d - 1))
            let bits = (qs.trailing_zeros() as usize) * d;
            let mut acc = right_rem(&a, b).expect("nonzero");
            let mut cur = acc.clone();
            for _ in 1..bits {
                cur = mulmod(&cur, &cur, b);
                acc = &acc + &cur;
            }
            acc
        } else {
            // a^((q'^d - 1)/2) = (prod_i a^(q'^i))^((q' - 1)/2)
            let mut cur = right_rem(&a, b).expect("nonzero");
            let mut prod = cur.clone();
            for _ in 1..d {
                cur = powmod(&cur, qs, b);
                prod = mulmod(&prod, &cur, b);
            }
            &powmod(&prod, (qs - 1) / 2, b) - &ctx.one()
        };
        let g = gcd(b, &probe);
        if g.degree() > Some(0) && g.degree() < b.degree() {
            let other = exact_div(b, &g);
            let mut out = equal_degree(&g, d, sub, qs, rng);
            out.extend(equal_degree(&other, d, sub, qs, rng));
            return out;
        }
    }
}

/// Factors a monic polynomial whose coefficients lie in the subfield GF(p^e)
/// into irreducibles over that subfield, with multiplicities.
pub fn factor_over_subfield(b: &SkewPoly, e: u32) -> Result<Vec<(SkewPoly, u32)>> {
    let field: &Field = b.field();
    if !b.ctx().is_commutative() {
        return Err(Error::Precondition("ordinary factorization needs the identity automorphism".into()));
    }
    if !b.is_monic() {
        return Err(Error::NotMonic);
    }
    let sub = field.subfield_elements(e);
    if b.coeffs().iter().any(|c| !sub.contains(c)) {
        return Err(Error::FieldMismatch);
    }
    let qs = (field.p() as u64).pow(e);
    let mut rng = ChaCha8Rng::seed_from_u64(0xfac7);
    let mut out = Vec::new();
    for (sf, m) in square_free(b) {
        for (part, d) in distinct_degree(&sf, qs) {
            for irr in equal_degree(&part, d, &sub, qs, &mut rng) {
                out.push((irr, m));
            }
        }
    }
    out.sort_by_key(|a| sort_key(&a.0));
    Ok(out)
}
