//! Finite fields GF(p^s) in a polynomial basis, with log/antilog tables.
//!
//! An element is stored as the integer `c_0 + c_1 p + ... + c_{s-1} p^{s-1}`
//! of its coefficient vector over GF(p), so two elements are equal exactly
//! when their coefficient vectors are. Multiplication goes through discrete
//! logarithms with respect to a fixed primitive element `w`.
//!
//! When no modulus is given the field is built from a bundled Conway
//! polynomial, which makes `w` (the residue class of `x`) agree with the
//! generator used by common computer algebra systems. Sizes without a bundled
//! entry fall back to the first primitive polynomial in index order.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

/// An element of some [`Field`]; meaningless without the field it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Integer encoding of the coefficient vector (base-p digits).
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Conway polynomials for small fields, ascending coefficients, monic.
fn conway(p: u32, s: u32) -> Option<&'static [u32]> {
    let poly: &'static [u32] = match (p, s) {
        (2, 1) => &[1, 1],
        (2, 2) => &[1, 1, 1],
        (2, 3) => &[1, 1, 0, 1],
        (2, 4) => &[1, 1, 0, 0, 1],
        (3, 1) => &[1, 1],
        (3, 2) => &[2, 2, 1],
        (3, 3) => &[1, 2, 0, 1],
        (3, 4) => &[2, 0, 0, 2, 1],
        (5, 1) => &[3, 1],
        (5, 2) => &[2, 4, 1],
        (5, 3) => &[3, 3, 0, 1],
        (5, 4) => &[2, 4, 4, 0, 1],
        (7, 1) => &[4, 1],
        (7, 2) => &[3, 6, 1],
        (7, 3) => &[4, 0, 6, 1],
        (7, 4) => &[3, 4, 5, 0, 1],
        (2, 5) => &[1, 0, 1, 0, 0, 1],
        (2, 6) => &[1, 1, 0, 1, 1, 0, 1],
        (2, 7) => &[1, 1, 0, 0, 0, 0, 0, 1],
        (2, 8) => &[1, 0, 1, 1, 1, 0, 0, 0, 1],
        (3, 5) => &[1, 2, 0, 0, 0, 1],
        (3, 6) => &[2, 2, 1, 0, 2, 0, 1],
        _ => return None,
    };
    Some(poly)
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

// Dense polynomials over GF(p) used only while building a field.

fn fp_trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    fp_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = fp_pow(b[db], p - 2, p);
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        for (i, &bi) in b.iter().enumerate() {
            let idx = dr - db + i;
            r[idx] = (r[idx] + p - c * bi % p) % p;
        }
        fp_trim(&mut r);
    }
    r
}

fn fp_pow(mut base: u32, mut e: u32, p: u32) -> u32 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn fp_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_rem(&out, m, p)
}

/// True when `x` generates the multiplicative group modulo an irreducible `m`.
fn fp_x_is_primitive(m: &[u32], p: u32) -> bool {
    let s = m.len() as u32 - 1;
    let order = p.pow(s) - 1;
    let mut n = order;
    let mut primes = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            primes.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes.iter().all(|&r| {
        let mut e = order / r;
        let mut base = fp_rem(&[0, 1], m, p);
        let mut acc = vec![1u32];
        while e > 0 {
            if e & 1 == 1 {
                acc = fp_mulmod(&acc, &base, m, p);
            }
            base = fp_mulmod(&base, &base, m, p);
            e >>= 1;
        }
        acc != [1]
    })
}

/// The bundled Conway polynomial, or else the first primitive polynomial
/// in index order.
fn default_modulus(p: u32, s: u32) -> Option<Vec<u32>> {
    if let Some(c) = conway(p, s) {
        return Some(c.to_vec());
    }
    (0..p.pow(s)).find_map(|tail| {
        let mut m: Vec<u32> = (0..s).map(|i| tail / p.pow(i) % p).collect();
        m.push(1);
        (m[0] != 0 && fp_irreducible(&m, p) && fp_x_is_primitive(&m, p)).then_some(m)
    })
}

fn fp_irreducible(modulus: &[u32], p: u32) -> bool {
    let s = modulus.len() as u32 - 1;
    if s <= 1 {
        return true;
    }
    // trial division by every monic polynomial of degree 1..=s/2
    for d in 1..=s / 2 {
        let count = p.pow(d);
        for tail in 0..count {
            let mut cand = Vec::with_capacity(d as usize + 1);
            let mut t = tail;
            for _ in 0..d {
                cand.push(t % p);
                t /= p;
            }
            cand.push(1);
            if fp_rem(modulus, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

struct FieldInner {
    p: u32,
    s: u32,
    q: u32,
    modulus: Vec<u32>,
    /// exp[i] = w^i, doubled so sums of two logs need no reduction.
    exp: Vec<u32>,
    /// log[a] for a != 0.
    log: Vec<u32>,
    primitive: u32,
    pow_p: Vec<u32>,
}

/// The finite field GF(p^s). Cheap to clone; clones share tables.
#[derive(Clone)]
pub struct Field {
    inner: Arc<FieldInner>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p(), self.s(), self.inner.modulus)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl Field {
    /// Builds GF(p^s). Without `modulus` a Conway polynomial is used where one
    /// is bundled, otherwise the first primitive polynomial.
    pub fn new(p: u32, s: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        let q = (p as u64)
            .checked_pow(s)
            .filter(|&q| q <= MAX_ORDER as u64)
            .ok_or_else(|| Error::InvalidField(format!("GF({p}^{s}) exceeds the supported order {MAX_ORDER}")))?
            as u32;
        let modulus: Vec<u32> = match modulus {
            Some(m) => {
                if m.len() != s as usize + 1 || m[s as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(Error::BadModulus(s));
                }
                if !fp_irreducible(m, p) {
                    return Err(Error::BadModulus(s));
                }
                m.to_vec()
            }
            None => default_modulus(p, s).ok_or(Error::UnsupportedField { p, s })?,
        };
        let pow_p: Vec<u32> = (0..=s).map(|i| p.pow(i)).collect();
        let mut inner = FieldInner { p, s, q, modulus, exp: Vec::new(), log: Vec::new(), primitive: 0, pow_p };
        let primitive = if q == 2 {
            1
        } else if s == 1 {
            (2..p).find(|&g| slow_order(&inner, g) == q - 1).expect("GF(p) is cyclic")
        } else if slow_order(&inner, p) == q - 1 {
            p
        } else {
            (2..q).find(|&g| slow_order(&inner, g) == q - 1).expect("multiplicative group is cyclic")
        };
        let mut exp = vec![0u32; 2 * (q as usize - 1)];
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..(q - 1) as usize {
            exp[i] = cur;
            exp[i + q as usize - 1] = cur;
            log[cur as usize] = i as u32;
            cur = slow_mul(&inner, cur, primitive);
        }
        inner.exp = exp;
        inner.log = log;
        inner.primitive = primitive;
        Ok(Field { inner: Arc::new(inner) })
    }

    /// GF(q) for a prime power q, with the default modulus.
    pub fn with_order(q: u32) -> Result<Field> {
        let (p, s) = prime_power(q).ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        Field::new(p, s, None)
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn s(&self) -> u32 {
        self.inner.s
    }

    pub fn q(&self) -> u32 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.s == 1
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        Elem(1)
    }

    /// The distinguished primitive element `w`.
    pub fn primitive(&self) -> Elem {
        Elem(self.inner.primitive)
    }

    /// Generator of the field over its prime subfield: the class of `x`,
    /// or `1` for a prime field.
    pub fn generator(&self) -> Elem {
        if self.inner.s == 1 {
            Elem(1)
        } else {
            Elem(self.inner.p)
        }
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.inner.q
    }

    pub fn check(&self, a: Elem) -> Result<Elem> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn elem(&self, index: u32) -> Result<Elem> {
        self.check(Elem(index))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.inner.p as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.inner.q).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (1..self.inner.q).map(Elem)
    }

    /// Coefficients over GF(p) in the polynomial basis.
    pub fn digits(&self, a: Elem) -> Vec<u32> {
        let p = self.inner.p;
        let mut v = Vec::with_capacity(self.inner.s as usize);
        let mut x = a.0;
        for _ in 0..self.inner.s {
            v.push(x % p);
            x /= p;
        }
        v
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<Elem> {
        if digits.len() > self.inner.s as usize || digits.iter().any(|&d| d >= self.inner.p) {
            return Err(Error::FieldMismatch);
        }
        Ok(Elem(digits.iter().zip(&self.inner.pow_p).map(|(d, w)| d * w).sum()))
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.inner.p;
        if p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if self.inner.s == 1 {
            return Elem((a.0 + b.0) % p);
        }
        let (mut x, mut y, mut out, mut w) = (a.0, b.0, 0, 1);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * w;
            x /= p;
            y /= p;
            w *= p;
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.inner.p;
        if p == 2 {
            return a;
        }
        let (mut x, mut out, mut w) = (a.0, 0, 1);
        while x > 0 {
            out += ((p - x % p) % p) * w;
            x /= p;
            w *= p;
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem(0);
        }
        let l = self.inner.log[a.0 as usize] + self.inner.log[b.0 as usize];
        Elem(self.inner.exp[l as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.inner.q - 1;
        let l = self.inner.log[a.0 as usize];
        Ok(Elem(self.inner.exp[((n - l) % n) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`; negative exponents need `a != 0`, and `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: i64) -> Elem {
        if a.0 == 0 {
            assert!(e >= 0, "zero has no inverse");
            return if e == 0 { Elem(1) } else { Elem(0) };
        }
        let n = (self.inner.q - 1) as i64;
        let l = (self.inner.log[a.0 as usize] as i64 * e.rem_euclid(n)).rem_euclid(n);
        Elem(self.inner.exp[l as usize])
    }

    /// `w^k` for the primitive element `w`.
    pub fn exp(&self, k: i64) -> Elem {
        let n = (self.inner.q - 1) as i64;
        Elem(self.inner.exp[k.rem_euclid(n) as usize])
    }

    /// Discrete logarithm with respect to `w`.
    pub fn log(&self, a: Elem) -> Option<u32> {
        (a.0 != 0).then(|| self.inner.log[a.0 as usize])
    }

    /// `a^(p^t)`.
    pub fn frobenius(&self, a: Elem, t: u32) -> Elem {
        if a.0 == 0 || t.is_multiple_of(self.inner.s) {
            return a;
        }
        let n = (self.inner.q - 1) as u64;
        let mut l = self.inner.log[a.0 as usize] as u64;
        for _ in 0..(t % self.inner.s) {
            l = l * self.inner.p as u64 % n;
        }
        Elem(self.inner.exp[l as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Elem) -> Result<u64> {
        self.check(a)?;
        let l = self.log(a).ok_or(Error::ZeroOrder)? as u64;
        let n = (self.inner.q - 1) as u64;
        Ok(n / gcd(n, l))
    }

    /// The prime subfield GF(p) as a standalone field.
    pub fn prime_field(&self) -> Field {
        if self.inner.s == 1 {
            self.clone()
        } else {
            Field::new(self.inner.p, 1, None).expect("prime fields always build")
        }
    }

    /// Elements of the subfield GF(p^e), `e | s`.
    pub fn subfield_elements(&self, e: u32) -> Vec<Elem> {
        assert!(e >= 1 && self.inner.s.is_multiple_of(e), "subfield degree must divide s");
        let qs = self.inner.p.pow(e);
        let step = ((self.inner.q - 1) / (qs - 1)) as i64;
        std::iter::once(Elem(0)).chain((0..(qs - 1) as i64).map(|i| self.exp(i * step))).collect()
    }

    /// Text form: integers for prime fields, `0`, `1`, `w`, `w^k` otherwise.
    pub fn format(&self, a: Elem) -> String {
        if self.inner.s == 1 {
            return a.0.to_string();
        }
        match self.log(a) {
            None => "0".into(),
            Some(0) => "1".into(),
            Some(1) => "w".into(),
            Some(k) => format!("w^{k}"),
        }
    }

    /// Parses `3`, `-1`, `w`, `w^k` or a coefficient vector `[c0,c1,...]`.
    pub fn parse(&self, text: &str) -> Result<Elem> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        if let Some(body) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let digits = if body.is_empty() {
                Vec::new()
            } else {
                body.split(',')
                    .map(|d| d.parse::<u32>().map_err(|_| Error::Parse(format!("bad digit `{d}`"))))
                    .collect::<Result<Vec<_>>>()?
            };
            return self.from_digits(&digits).map_err(|_| Error::Parse(format!("`{t}` is not in the field")));
        }
        if t == "w" {
            return Ok(self.primitive());
        }
        if let Some(k) = t.strip_prefix("w^") {
            let k: i64 = k.parse().map_err(|_| Error::Parse(format!("bad exponent in `{t}`")))?;
            return Ok(self.exp(k));
        }
        t.parse::<i64>().map(|n| self.from_int(n)).map_err(|_| Error::Parse(format!("cannot read field element `{t}`")))
    }
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut x, mut s) = (q, 0);
    while x % p == 0 {
        x /= p;
        s += 1;
    }
    (x == 1).then_some((p, s))
}

fn slow_mul(f: &FieldInner, a: u32, b: u32) -> u32 {
    let (p, s) = (f.p, f.s as usize);
    let da: Vec<u32> = (0..s).map(|i| a / f.p.pow(i as u32) % p).collect();
    let db: Vec<u32> = (0..s).map(|i| b / f.p.pow(i as u32) % p).collect();
    let mut prod = vec![0u32; 2 * s];
    for i in 0..s {
        for j in 0..s {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    let r = fp_rem(&prod, &f.modulus, p);
    r.iter().enumerate().map(|(i, &c)| c * p.pow(i as u32)).sum()
}

fn slow_order(f: &FieldInner, g: u32) -> u32 {
    if g == 0 {
        return 0;
    }
    let mut cur = g;
    let mut k = 1;
    while cur != 1 {
        cur = slow_mul(f, cur, g);
        k += 1;
        if k > f.q {
            return 0;
        }
    }
    k
}

/// A field automorphism `a -> a^(p^t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    field: Field,
    t: u32,
}

impl Automorphism {
    /// `t` is reduced modulo `s`.
    pub fn new(field: &Field, t: u32) -> Automorphism {
        Automorphism { field: field.clone(), t: t % field.s() }
    }

    pub fn identity(field: &Field) -> Automorphism {
        Automorphism::new(field, 0)
    }

    pub fn frobenius(field: &Field) -> Automorphism {
        Automorphism::new(field, 1)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn exponent(&self) -> u32 {
        self.t
    }

    pub fn is_identity(&self) -> bool {
        self.t == 0
    }

    /// `s / gcd(s, t)`.
    pub fn order(&self) -> u32 {
        let s = self.field.s() as u64;
        (s / gcd(s, self.t as u64)) as u32
    }

    /// Degree over GF(p) of the fixed field of this automorphism.
    pub fn fixed_field_degree(&self) -> u32 {
        self.field.s() / self.order()
    }

    pub fn inverse(&self) -> Automorphism {
        let s = self.field.s();
        Automorphism::new(&self.field, (s - self.t) % s)
    }

    /// `theta^j` for any integer `j`.
    pub fn power(&self, j: i64) -> Automorphism {
        let s = self.field.s() as i64;
        Automorphism::new(&self.field, (self.t as i64 * j).rem_euclid(s) as u32)
    }

    /// Applies the automorphism without a membership check.
    pub fn map(&self, a: Elem) -> Elem {
        self.field.frobenius(a, self.t)
    }

    pub fn apply(&self, a: Elem) -> Result<Elem> {
        self.field.check(a)?;
        Ok(self.map(a))
    }

    pub fn fixes(&self, a: Elem) -> bool {
        self.map(a) == a
    }
}

/// The inner theta-derivation `a -> beta (theta(a) - a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub theta: Automorphism,
    pub beta: Elem,
}

impl Derivation {
    pub fn new(theta: Automorphism, beta: Elem) -> Result<Derivation> {
        theta.field().check(beta)?;
        Ok(Derivation { theta, beta })
    }

    pub fn is_zero(&self) -> bool {
        self.beta.is_zero() || self.theta.is_identity()
    }

    pub fn map(&self, a: Elem) -> Elem {
        if self.is_zero() {
            return Elem::ZERO;
        }
        let f = self.theta.field();
        f.mul(self.beta, f.sub(self.theta.map(a), a))
    }

    pub fn apply(&self, a: Elem) -> Result<Elem> {
        self.theta.field().check(a)?;
        Ok(self.map(a))
    }
}

/// An injective homomorphism from a base field into an extension.
#[derive(Clone, Debug)]
pub struct Embedding {
    base: Field,
    ext: Field,
    table: Vec<Elem>,
}

impl Embedding {
    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn ext(&self) -> &Field {
        &self.ext
    }

    pub fn map(&self, a: Elem) -> Elem {
        self.table[a.0 as usize]
    }

    pub fn apply(&self, a: Elem) -> Result<Elem> {
        self.base.check(a)?;
        Ok(self.map(a))
    }

    /// Identity embedding of a field into itself.
    pub fn identity(field: &Field) -> Embedding {
        Embedding { base: field.clone(), ext: field.clone(), table: field.elements().collect() }
    }
}

/// Builds GF(p^(s m)) with its Conway modulus and the embedding of `base`.
///
/// The image of the generator of `base` is `W^((p^(sm)-1)/(p^s-1))` when that
/// is a root of the base modulus (always the case for Conway moduli), and
/// otherwise the first root found.
pub fn extend_field(base: &Field, m: u32) -> Result<(Field, Embedding)> {
    if m == 0 {
        return Err(Error::InvalidField("extension degree must be at least 1".into()));
    }
    if m == 1 {
        return Ok((base.clone(), Embedding::identity(base)));
    }
    let ext = Field::new(base.p(), base.s() * m, None)?;
    let modulus: Vec<Elem> = base.modulus().iter().map(|&c| ext.from_int(c as i64)).collect();
    let eval = |r: Elem| modulus.iter().rev().fold(Elem::ZERO, |acc, &c| ext.add(ext.mul(acc, r), c));
    let root = if base.s() == 1 {
        Elem::ZERO
    } else {
        let preferred = ext.exp(((ext.q() - 1) / (base.q() - 1)) as i64);
        if eval(preferred).is_zero() {
            preferred
        } else {
            ext.elements().find(|&r| eval(r).is_zero()).ok_or(Error::BadModulus(base.s()))?
        }
    };
    let table = base
        .elements()
        .map(|a| {
            let d = base.digits(a);
            d.iter().rev().fold(Elem::ZERO, |acc, &c| ext.add(ext.mul(acc, root), ext.from_int(c as i64)))
        })
        .collect();
    Ok((ext.clone(), Embedding { base: base.clone(), ext, table }))
}
