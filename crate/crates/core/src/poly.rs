//! The skew polynomial ring `F_q[X; theta, delta]` with `delta(a) = beta (theta(a) - a)`.
//!
//! Multiplication follows `X a = theta(a) X + delta(a)`. Polynomials are
//! stored with ascending coefficients and no trailing zeros; the zero
//! polynomial has degree `None`, which orders below every `Some(d)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Automorphism, Derivation, Elem, Embedding, Field};

/// The ring a skew polynomial lives in: field, automorphism and derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingCtx {
    field: Field,
    theta: Automorphism,
    delta: Derivation,
}

impl RingCtx {
    pub fn new(field: &Field, theta_t: u32, beta: Elem) -> Result<RingCtx> {
        let theta = Automorphism::new(field, theta_t);
        let delta = Derivation::new(theta.clone(), beta)?;
        Ok(RingCtx { field: field.clone(), theta, delta })
    }

    /// The ordinary polynomial ring `F_q[X]`.
    pub fn commutative(field: &Field) -> RingCtx {
        RingCtx::new(field, 0, Elem::ZERO).expect("zero is in every field")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn theta(&self) -> &Automorphism {
        &self.theta
    }

    pub fn beta(&self) -> Elem {
        self.delta.beta
    }

    pub fn derivation(&self) -> &Derivation {
        &self.delta
    }

    pub fn has_derivation(&self) -> bool {
        !self.delta.is_zero()
    }

    pub fn is_commutative(&self) -> bool {
        self.theta.is_identity()
    }

    /// Same field and automorphism, zero derivation.
    pub fn without_derivation(&self) -> RingCtx {
        RingCtx::new(&self.field, self.theta.exponent(), Elem::ZERO).expect("zero is in every field")
    }

    /// The same ring over an extension field, with theta and beta carried along.
    pub fn extend(&self, emb: &Embedding) -> Result<RingCtx> {
        if emb.base() != &self.field {
            return Err(Error::FieldMismatch);
        }
        RingCtx::new(emb.ext(), self.theta.exponent(), emb.map(self.delta.beta))
    }

    pub fn poly(&self, coeffs: Vec<Elem>) -> Result<SkewPoly> {
        for &c in &coeffs {
            self.field.check(c)?;
        }
        Ok(self.poly_unchecked(coeffs))
    }

    pub(crate) fn poly_unchecked(&self, mut coeffs: Vec<Elem>) -> SkewPoly {
        trim(&mut coeffs);
        SkewPoly { coeffs, ctx: self.clone() }
    }

    /// Polynomial from integer coefficients (prime subfield images).
    pub fn poly_from_ints(&self, coeffs: &[i64]) -> SkewPoly {
        self.poly_unchecked(coeffs.iter().map(|&c| self.field.from_int(c)).collect())
    }

    pub fn zero(&self) -> SkewPoly {
        self.poly_unchecked(Vec::new())
    }

    pub fn one(&self) -> SkewPoly {
        self.constant(Elem::ONE)
    }

    pub fn x(&self) -> SkewPoly {
        self.monomial(Elem::ONE, 1)
    }

    pub fn constant(&self, c: Elem) -> SkewPoly {
        self.poly_unchecked(vec![c])
    }

    pub fn monomial(&self, c: Elem, d: usize) -> SkewPoly {
        let mut v = vec![Elem::ZERO; d + 1];
        v[d] = c;
        self.poly_unchecked(v)
    }

    /// `X - b`.
    pub fn linear(&self, b: Elem) -> SkewPoly {
        self.poly_unchecked(vec![self.field.neg(b), Elem::ONE])
    }

    // raw coefficient-slice arithmetic

    /// `X * b`.
    fn mul_x(&self, b: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut out = vec![Elem::ZERO; b.len() + 1];
        for (j, &c) in b.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out[j + 1] = f.add(out[j + 1], self.theta.map(c));
            if self.has_derivation() {
                out[j] = f.add(out[j], self.delta.map(c));
            }
        }
        trim(&mut out);
        out
    }

    fn mul_raw(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; a.len() + b.len() - 1];
        if self.is_commutative() {
            for (i, &ai) in a.iter().enumerate() {
                if ai.is_zero() {
                    continue;
                }
                for (j, &bj) in b.iter().enumerate() {
                    out[i + j] = f.add(out[i + j], f.mul(ai, bj));
                }
            }
        } else {
            // row = X^i * b, accumulated as a_i * row
            let mut row = b.to_vec();
            for (i, &ai) in a.iter().enumerate() {
                if i > 0 {
                    row = self.mul_x(&row);
                }
                if ai.is_zero() {
                    continue;
                }
                for (j, &rj) in row.iter().enumerate() {
                    out[j] = f.add(out[j], f.mul(ai, rj));
                }
            }
        }
        trim(&mut out);
        out
    }

    /// `c X^e * b`.
    fn mul_term(&self, c: Elem, e: usize, b: &[Elem]) -> Vec<Elem> {
        let mut row = b.to_vec();
        for _ in 0..e {
            row = self.mul_x(&row);
        }
        row.iter().map(|&r| self.field.mul(c, r)).collect()
    }

    /// Right division `a = q b + r`.
    fn rdiv_raw(&self, a: &[Elem], b: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
        let f = &self.field;
        let db = b.len() - 1;
        let lead = b[db];
        let mut r = a.to_vec();
        trim(&mut r);
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let mut q = vec![Elem::ZERO; r.len() - db];
        while r.len() > db {
            let dr = r.len() - 1;
            let e = dr - db;
            // lead(X^e b) = theta^e(lead b)
            let lc = self.theta.power(e as i64).map(lead);
            let c = f.div(r[dr], lc).expect("nonzero leading coefficient");
            q[e] = f.add(q[e], c);
            let sub = self.mul_term(c, e, b);
            for (i, s) in sub.into_iter().enumerate() {
                r[i] = f.sub(r[i], s);
            }
            debug_assert!(r[dr].is_zero());
            trim(&mut r);
        }
        trim(&mut q);
        (q, r)
    }

    /// Left division `a = b q + r`.
    fn ldiv_raw(&self, a: &[Elem], b: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
        let f = &self.field;
        let db = b.len() - 1;
        let lead_inv = f.inv(b[db]).expect("nonzero leading coefficient");
        let theta_back = self.theta.power(-(db as i64));
        let mut r = a.to_vec();
        trim(&mut r);
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let mut q = vec![Elem::ZERO; r.len() - db];
        while r.len() > db {
            let dr = r.len() - 1;
            let e = dr - db;
            // lead(b c X^e) = lead(b) theta^db(c)
            let c = theta_back.map(f.mul(lead_inv, r[dr]));
            q[e] = f.add(q[e], c);
            let mut term = vec![Elem::ZERO; e + 1];
            term[e] = c;
            let sub = self.mul_raw(b, &term);
            for (i, s) in sub.into_iter().enumerate() {
                r[i] = f.sub(r[i], s);
            }
            debug_assert!(r[dr].is_zero());
            trim(&mut r);
        }
        trim(&mut q);
        (q, r)
    }
}

fn trim(v: &mut Vec<Elem>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// A skew polynomial bound to its ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewPoly {
    coeffs: Vec<Elem>,
    ctx: RingCtx,
}

impl SkewPoly {
    pub fn ctx(&self) -> &RingCtx {
        &self.ctx
    }

    pub fn field(&self) -> &Field {
        &self.ctx.field
    }

    /// Ascending coefficients, no trailing zeros.
    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [Elem::ONE]
    }

    pub fn lead(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Some(Elem::ONE)
    }

    /// Hamming weight of the coefficient vector.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Coefficient vector padded with zeros to length `n`.
    pub fn to_vector(&self, n: usize) -> Vec<Elem> {
        let mut v = self.coeffs.clone();
        v.resize(n.max(v.len()), Elem::ZERO);
        v
    }

    /// `c * self`, a left scalar multiple.
    pub fn scale_left(&self, c: Elem) -> SkewPoly {
        let f = self.field();
        self.ctx.poly_unchecked(self.coeffs.iter().map(|&a| f.mul(c, a)).collect())
    }

    /// Left-normalizes to a monic polynomial.
    pub fn monic(&self) -> Result<SkewPoly> {
        let lc = self.lead().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale_left(self.field().inv(lc)?))
    }

    fn same_ctx(&self, other: &SkewPoly) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.same_ctx(other)?;
        let f = self.field();
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(self.ctx.poly_unchecked((0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect()))
    }

    pub fn checked_sub(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.checked_add(&-other)
    }

    /// `self^e` under skew multiplication.
    pub fn pow(&self, e: u32) -> SkewPoly {
        let mut acc = self.ctx.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Human-readable form such as `X^4 + X^3 + w*X^2 + 1`.
    pub fn pretty(&self) -> String {
        self.pretty_with("X")
    }

    pub fn pretty_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = self.field();
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let coef = f.format(c);
            terms.push(match (i, c == Elem::ONE) {
                (0, _) => coef,
                (_, true) => mono,
                _ => format!("{coef}*{mono}"),
            });
        }
        terms.join(" + ")
    }

    /// Ascending coefficient list `[c0,c1,...]` in the field's text format.
    pub fn to_list_string(&self) -> String {
        let f = self.field();
        let items: Vec<String> = self.coeffs.iter().map(|&c| f.format(c)).collect();
        format!("[{}]", items.join(","))
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl Add for &SkewPoly {
    type Output = SkewPoly;
    fn add(self, rhs: &SkewPoly) -> SkewPoly {
        self.checked_add(rhs).expect("ring context mismatch")
    }
}

impl Sub for &SkewPoly {
    type Output = SkewPoly;
    fn sub(self, rhs: &SkewPoly) -> SkewPoly {
        self.checked_sub(rhs).expect("ring context mismatch")
    }
}

impl Neg for &SkewPoly {
    type Output = SkewPoly;
    fn neg(self) -> SkewPoly {
        let f = self.field();
        self.ctx.poly_unchecked(self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl Mul for &SkewPoly {
    type Output = SkewPoly;
    fn mul(self, rhs: &SkewPoly) -> SkewPoly {
        skew_mul(self, rhs).expect("ring context mismatch")
    }
}

/// The Ore product `a * b`.
pub fn skew_mul(a: &SkewPoly, b: &SkewPoly) -> Result<SkewPoly> {
    a.same_ctx(b)?;
    Ok(a.ctx.poly_unchecked(a.ctx.mul_raw(&a.coeffs, &b.coeffs)))
}

/// Right division: `a = q * b + r` with `deg r < deg b`.
pub fn right_divide(a: &SkewPoly, b: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
    a.same_ctx(b)?;
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (q, r) = a.ctx.rdiv_raw(&a.coeffs, &b.coeffs);
    Ok((a.ctx.poly_unchecked(q), a.ctx.poly_unchecked(r)))
}

/// Left division: `a = b * q + r` with `deg r < deg b`.
pub fn left_divide(a: &SkewPoly, b: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
    a.same_ctx(b)?;
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (q, r) = a.ctx.ldiv_raw(&a.coeffs, &b.coeffs);
    Ok((a.ctx.poly_unchecked(q), a.ctx.poly_unchecked(r)))
}

/// Remainder of right division, i.e. reduction modulo the left ideal `R b`.
pub fn right_rem(a: &SkewPoly, b: &SkewPoly) -> Result<SkewPoly> {
    right_divide(a, b).map(|(_, r)| r)
}

/// True when `b` right-divides `a` (`a` lies in `R b`).
pub fn right_divides(b: &SkewPoly, a: &SkewPoly) -> Result<bool> {
    right_rem(a, b).map(|r| r.is_zero())
}

/// Output of [`lgcd_bezout`]: `d = u a + v b`, `d` monic, `R a + R b = R d`.
#[derive(Clone, Debug)]
pub struct Bezout {
    pub d: SkewPoly,
    pub u: SkewPoly,
    pub v: SkewPoly,
}

/// Runs the right-division Euclidean algorithm with cofactors. Returns the
/// last nonzero remainder data and the vanishing combination.
fn euclid(a: &SkewPoly, b: &SkewPoly) -> Result<(Bezout, SkewPoly, SkewPoly)> {
    a.same_ctx(b)?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ctx = &a.ctx;
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut u0, mut u1) = (ctx.one(), ctx.zero());
    let (mut v0, mut v1) = (ctx.zero(), ctx.one());
    while !r1.is_zero() {
        let (q, r) = right_divide(&r0, &r1)?;
        let u2 = &u0 - &(&q * &u1);
        let v2 = &v0 - &(&q * &v1);
        r0 = std::mem::replace(&mut r1, r);
        u0 = std::mem::replace(&mut u1, u2);
        v0 = std::mem::replace(&mut v1, v2);
    }
    let lc_inv = ctx.field.inv(r0.lead().expect("nonzero remainder"))?;
    let bez = Bezout { d: r0.scale_left(lc_inv), u: u0.scale_left(lc_inv), v: v0.scale_left(lc_inv) };
    Ok((bez, u1, v1))
}

/// Monic generator of `R a + R b` together with Bezout cofactors.
pub fn lgcd_bezout(a: &SkewPoly, b: &SkewPoly) -> Result<Bezout> {
    euclid(a, b).map(|(bez, _, _)| bez)
}

/// Monic least common left multiple: the generator of `R a ∩ R b`.
pub fn lclm(a: &SkewPoly, b: &SkewPoly) -> Result<SkewPoly> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (_, u, _) = euclid(a, b)?;
    // u a + v b = 0 at termination, so u a is a common left multiple
    (&u * a).monic()
}

/// `N_i(b) = theta^(i-1)(b) ... theta(b) b`, with `N_0(b) = 1`.
pub fn norm(i: usize, b: Elem, theta: &Automorphism) -> Elem {
    let f = theta.field();
    let mut acc = Elem::ONE;
    let mut conj = b;
    for _ in 0..i {
        acc = f.mul(acc, conj);
        conj = theta.map(conj);
    }
    acc
}

/// Evaluation weights `N_0(b), ..., N_{len-1}(b)`, defined by
/// `N_{i+1} = theta(N_i) b + delta(N_i)` so that `p(b)` is the remainder of
/// `p` on right division by `X - b`. Without a derivation these are the
/// ordinary twisted norms.
pub fn eval_weights(ctx: &RingCtx, b: Elem, len: usize) -> Vec<Elem> {
    let f = &ctx.field;
    let mut out = Vec::with_capacity(len);
    let mut cur = Elem::ONE;
    for _ in 0..len {
        out.push(cur);
        cur = f.add(f.mul(ctx.theta.map(cur), b), ctx.delta.map(cur));
    }
    out
}

/// `p(b) = sum p_i N_i(b)`.
pub fn skew_eval(p: &SkewPoly, b: Elem) -> Result<Elem> {
    let f = p.field();
    f.check(b)?;
    let weights = eval_weights(&p.ctx, b, p.coeffs.len());
    Ok(p.coeffs.iter().zip(&weights).fold(Elem::ZERO, |acc, (&c, &n)| f.add(acc, f.mul(c, n))))
}

/// Evaluates `p` at a point `b` of an extension field given by `emb`.
pub fn skew_eval_ext(p: &SkewPoly, b: Elem, emb: &Embedding) -> Result<Elem> {
    let ext_ctx = p.ctx.extend(emb)?;
    let lifted = ext_ctx.poly_unchecked(p.coeffs.iter().map(|&c| emb.map(c)).collect());
    skew_eval(&lifted, b)
}

/// Decides `R p = p R` by testing `p w` and `p X` for membership in `R p`.
pub fn is_invariant(p: &SkewPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ctx = &p.ctx;
    let w = ctx.constant(ctx.field.generator());
    Ok(right_divides(p, &(p * &w))? && right_divides(p, &(p * &ctx.x()))?)
}

/// Inverses of `X` in `R / R f`: `alpha X = 1` and `X beta = 1`.
#[derive(Clone, Debug)]
pub struct XInverses {
    pub alpha: SkewPoly,
    pub beta: SkewPoly,
}

/// Computes the one-sided inverses of `X` modulo `R f` for monic `f` with
/// nonzero constant term. Without a derivation `beta` has the closed form
/// `theta^-1(f0^-1) X^(n-1) - theta^-1(f0^-1 f_{n-1}) X^(n-2) - ... - theta^-1(f0^-1 f1)`
/// (writing `f = X^n - f_{n-1} X^{n-1} - ... - f_0`); with a derivation it is
/// solved from `T_f(beta) = e_0` over the prime field.
pub fn x_inverse_mod_f(f: &SkewPoly) -> Result<XInverses> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !f.is_monic() || n == 0 {
        return Err(Error::NotMonic);
    }
    let ctx = &f.ctx;
    let fld = &ctx.field;
    // f = X^n - sum fs[i] X^i
    let fs: Vec<Elem> = (0..n).map(|i| fld.neg(f.coeff(i))).collect();
    if fs[0].is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let f0_inv = fld.inv(fs[0])?;
    let mut alpha = vec![Elem::ZERO; n];
    alpha[n - 1] = f0_inv;
    for i in 1..n {
        alpha[i - 1] = fld.neg(fld.mul(f0_inv, fs[i]));
    }
    let alpha = ctx.poly_unchecked(alpha);
    let beta = if ctx.has_derivation() {
        let target: Vec<Elem> = std::iter::once(Elem::ONE).chain(std::iter::repeat_n(Elem::ZERO, n - 1)).collect();
        let t = crate::pseudo_linear::PseudoLinearMap::for_modulus(f)?;
        let v = t.solve(&target)?.ok_or_else(|| Error::Precondition("X is not invertible modulo R f".into()))?;
        ctx.poly_unchecked(v)
    } else {
        let inv = ctx.theta.inverse();
        let mut beta = vec![Elem::ZERO; n];
        beta[n - 1] = inv.map(f0_inv);
        for i in 1..n {
            beta[i - 1] = fld.neg(inv.map(fld.mul(f0_inv, fs[i])));
        }
        ctx.poly_unchecked(beta)
    };
    Ok(XInverses { alpha, beta })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4_ctx(beta: u32) -> RingCtx {
        let f4 = Field::new(2, 2, None).unwrap();
        RingCtx::new(&f4, 1, Elem(beta)).unwrap()
    }

    #[test]
    fn multiplication_rule() {
        let ctx = f4_ctx(0);
        let f = ctx.field().clone();
        let w = ctx.constant(f.primitive());
        assert_eq!(&ctx.x() * &w, ctx.monomial(f.exp(2), 1));
        let ctx1 = f4_ctx(1);
        let w1 = ctx1.constant(f.primitive());
        assert_eq!((&ctx1.x() * &w1).coeffs(), &[Elem::ONE, f.exp(2)]);
        let f3 = Field::new(3, 1, None).unwrap();
        let c3 = RingCtx::commutative(&f3);
        let prod = &c3.poly_from_ints(&[2, 1]) * &c3.poly_from_ints(&[1, 1]);
        assert_eq!(prod, c3.poly_from_ints(&[2, 0, 1]));
    }

    #[test]
    fn context_mismatch_is_reported() {
        let a = f4_ctx(0).x();
        let b = f4_ctx(1).x();
        assert_eq!(skew_mul(&a, &b).unwrap_err(), Error::ContextMismatch);
        assert_eq!(right_divide(&a, &b).unwrap_err(), Error::ContextMismatch);
    }

    #[test]
    fn division_examples() {
        let ctx = f4_ctx(1);
        let a = ctx.poly_from_ints(&[1, 0, 1, 1]);
        let (q, r) = right_divide(&a, &a).unwrap();
        assert!(q.is_one() && r.is_zero());
        let (q, r) = left_divide(&a, &a).unwrap();
        assert!(q.is_one() && r.is_zero());
        assert_eq!(right_divide(&a, &ctx.zero()).unwrap_err(), Error::DivisionByZero);

        let f8 = Field::new(2, 3, None).unwrap();
        let c8 = RingCtx::new(&f8, 1, Elem::ZERO).unwrap();
        let w = f8.primitive();
        let f = c8.poly(vec![Elem::ONE, Elem::ZERO, w, Elem::ONE, Elem::ONE]).unwrap();
        let g = c8.poly(vec![w, w, Elem::ONE]).unwrap();
        assert!(right_divides(&g, &f).unwrap());
    }

    #[test]
    fn norm_examples() {
        let f4 = Field::new(2, 2, None).unwrap();
        let th = Automorphism::frobenius(&f4);
        let w = f4.primitive();
        assert_eq!(norm(0, w, &th), Elem::ONE);
        assert_eq!(norm(2, w, &th), Elem::ONE);
        let f7 = Field::new(7, 1, None).unwrap();
        let id = Automorphism::identity(&f7);
        for i in 0..8 {
            assert_eq!(norm(i, Elem(3), &id), f7.pow(Elem(3), i as i64));
        }
    }

    #[test]
    fn evaluation_examples() {
        let f7 = Field::new(7, 1, None).unwrap();
        let ctx = RingCtx::commutative(&f7);
        let g = &ctx.linear(Elem(5)) * &ctx.linear(Elem(3));
        assert_eq!(skew_eval(&g, Elem(5)).unwrap(), Elem::ZERO);
        assert_eq!(skew_eval(&g, Elem(3)).unwrap(), Elem::ZERO);
        assert_eq!(skew_eval(&ctx.linear(Elem(4)), Elem(4)).unwrap(), Elem::ZERO);
    }

    #[test]
    fn invariance_examples() {
        let f7 = Field::new(7, 1, None).unwrap();
        let c = RingCtx::commutative(&f7);
        assert!(is_invariant(&c.poly_from_ints(&[3, 1, 4])).unwrap());
        // X^8 + X^6 + X^2 + 1 is invariant exactly when beta lies in GF(2)
        for beta in 0..4 {
            let ctx = f4_ctx(beta);
            assert_eq!(is_invariant(&ctx.poly_from_ints(&[1, 0, 1, 0, 0, 0, 1, 0, 1])).unwrap(), beta < 2);
        }
        let ctx = f4_ctx(0);
        let xw = ctx.poly(vec![ctx.field().primitive(), Elem::ONE]).unwrap();
        assert!(!is_invariant(&xw).unwrap());
        assert_eq!(is_invariant(&ctx.zero()).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn x_inverse_examples() {
        let f3 = Field::new(3, 1, None).unwrap();
        let c = RingCtx::commutative(&f3);
        let f = c.poly_from_ints(&[-1, 0, 1]);
        let inv = x_inverse_mod_f(&f).unwrap();
        assert_eq!(inv.alpha, c.x());
        assert_eq!(inv.alpha, inv.beta);
        let no_const = c.poly_from_ints(&[0, 1, 1]);
        assert_eq!(x_inverse_mod_f(&no_const).unwrap_err(), Error::ZeroConstantTerm);
    }
}
