#![allow(dead_code)]

use skewcodes::{Elem, Field, RingCtx, SkewPoly};

pub fn field(p: u32, s: u32) -> Field {
    Field::new(p, s, None).unwrap()
}

pub fn ctx(f: &Field, t: u32, beta: u32) -> RingCtx {
    RingCtx::new(f, t, f.elem(beta).unwrap()).unwrap()
}

/// A spread of rings: nontrivial automorphisms, nonzero derivations, both
/// characteristics 2 and odd.
pub fn rings() -> Vec<RingCtx> {
    let f4 = field(2, 2);
    let f8 = field(2, 3);
    let f9 = field(3, 2);
    let f16 = field(2, 4);
    let f25 = field(5, 2);
    let f7 = field(7, 1);
    let mut out: Vec<RingCtx> = (0..4).map(|b| ctx(&f4, 1, b)).collect();
    out.extend([
        ctx(&f8, 1, 0),
        ctx(&f8, 1, 2),
        ctx(&f8, 2, 5),
        ctx(&f9, 1, 0),
        ctx(&f9, 1, 4),
        ctx(&f16, 2, 0),
        ctx(&f16, 1, 7),
        ctx(&f25, 1, 3),
        ctx(&f7, 0, 0),
    ]);
    out
}

/// Rings with theta = id, where the multiplication is commutative.
pub fn commutative_rings() -> Vec<RingCtx> {
    vec![
        ctx(&field(7, 1), 0, 0),
        ctx(&field(2, 2), 0, 2),
        ctx(&field(3, 2), 0, 0),
        ctx(&field(2, 3), 0, 3),
        ctx(&field(5, 1), 0, 0),
    ]
}

pub fn elem(f: &Field, raw: u32) -> Elem {
    f.elem(raw % f.q()).unwrap()
}

pub fn poly(ctx: &RingCtx, raw: &[u32]) -> SkewPoly {
    ctx.poly(raw.iter().map(|&r| elem(ctx.field(), r)).collect()).unwrap()
}

pub fn monic(ctx: &RingCtx, raw: &[u32]) -> SkewPoly {
    let mut c: Vec<Elem> = raw.iter().map(|&r| elem(ctx.field(), r)).collect();
    c.push(Elem::ONE);
    ctx.poly(c).unwrap()
}

pub fn vector(f: &Field, raw: &[u32]) -> Vec<Elem> {
    raw.iter().map(|&r| elem(f, r)).collect()
}

/// All monic polynomials of the given degree, constant term first.
pub fn all_monic(ctx: &RingCtx, deg: usize) -> Vec<SkewPoly> {
    let q = ctx.field().q();
    let total = (q as u64).pow(deg as u32);
    (0..total)
        .map(|mut idx| {
            let raw: Vec<u32> = (0..deg)
                .map(|_| {
                    let d = (idx % q as u64) as u32;
                    idx /= q as u64;
                    d
                })
                .collect();
            monic(ctx, &raw)
        })
        .collect()
}

/// All vectors of length n.
pub fn all_vectors(f: &Field, n: usize) -> Vec<Vec<Elem>> {
    let q = f.q() as u64;
    (0..q.pow(n as u32))
        .map(|mut idx| {
            (0..n)
                .map(|_| {
                    let d = (idx % q) as u32;
                    idx /= q;
                    f.elem(d).unwrap()
                })
                .collect()
        })
        .collect()
}

/// Dense polynomials over a field with ordinary multiplication; the
/// reference for rings whose automorphism is the identity.
pub mod plain {
    use skewcodes::{Elem, Field};

    pub fn trim(mut a: Vec<Elem>) -> Vec<Elem> {
        while a.last().is_some_and(|c| c.is_zero()) {
            a.pop();
        }
        a
    }

    pub fn add(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let n = a.len().max(b.len());
        let get = |v: &[Elem], i: usize| v.get(i).copied().unwrap_or(Elem::ZERO);
        trim((0..n).map(|i| f.add(get(a, i), get(b, i))).collect())
    }

    pub fn mul(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Elem::ZERO; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        trim(out)
    }

    pub fn divmod(f: &Field, a: &[Elem], b: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let inv = f.inv(*b.last().unwrap()).unwrap();
        let mut q = vec![Elem::ZERO; r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = f.mul(*r.last().unwrap(), inv);
            q[shift] = c;
            for (i, &bi) in b.iter().enumerate() {
                r[shift + i] = f.sub(r[shift + i], f.mul(c, bi));
            }
            r = trim(r);
        }
        (trim(q), r)
    }

    pub fn monic(f: &Field, a: &[Elem]) -> Vec<Elem> {
        let inv = f.inv(*a.last().unwrap()).unwrap();
        a.iter().map(|&c| f.mul(c, inv)).collect()
    }

    pub fn gcd(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
        while !y.is_empty() {
            let r = divmod(f, &x, &y).1;
            x = std::mem::replace(&mut y, r);
        }
        monic(f, &x)
    }

    pub fn lcm(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let g = gcd(f, a, b);
        monic(f, &divmod(f, &mul(f, a, b), &g).0)
    }

    pub fn eval(f: &Field, a: &[Elem], x: Elem) -> Elem {
        a.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }
}
