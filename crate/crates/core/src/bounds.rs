//! BCH-type lower bounds on the distance of skew GC codes, the MDS
//! construction from consecutive roots, and the MDS search sweep.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::code::{minimum_distance_of, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::field::{gcd, Automorphism, Elem, Embedding, Field};
use crate::linalg::MatFq;
use crate::poly::{lclm, norm, right_divides, skew_eval_ext, RingCtx, SkewPoly};

/// Largest root grid the bound checks will walk.
pub const GRID_LIMIT: u64 = 1 << 16;

/// Hypotheses that held, and the resulting lower bound `delta + sum s_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCertificate {
    pub beta: String,
    pub ext_degree: u32,
    pub l: u64,
    pub cs: Vec<u64>,
    pub ss: Vec<u64>,
    pub delta: usize,
    pub claimed_bound: usize,
}

/// The first hypothesis found to fail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum BoundFailure {
    /// `g(beta^exponent) != 0` at grid point `indices`.
    Root { indices: Vec<u64>, exponent: u64, value: String },
    /// `N_i(beta^{c_j}) = 1`; `j` counts from 1.
    Norm { i: usize, j: usize },
}

impl std::fmt::Display for BoundFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundFailure::Root { indices, exponent, value } => {
                write!(f, "root condition fails at grid point {indices:?}: g(beta^{exponent}) = {value}")
            }
            BoundFailure::Norm { i, j } => write!(f, "norm condition fails: N_{i}(beta^c_{j}) = 1"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum BoundOutcome {
    Certified(BoundCertificate),
    Failed(BoundFailure),
}

impl BoundOutcome {
    pub fn certificate(&self) -> Option<&BoundCertificate> {
        match self {
            BoundOutcome::Certified(c) => Some(c),
            BoundOutcome::Failed(_) => None,
        }
    }

    pub fn failure(&self) -> Option<&BoundFailure> {
        match self {
            BoundOutcome::Certified(_) => None,
            BoundOutcome::Failed(f) => Some(f),
        }
    }
}

/// Parameters of a bound check. `beta` lives in `emb.ext()`.
#[derive(Clone, Debug)]
pub struct BoundParams {
    pub beta: Elem,
    pub emb: Embedding,
    pub l: u64,
    pub cs: Vec<u64>,
    pub ss: Vec<u64>,
    pub delta: usize,
}

impl BoundParams {
    /// Single direction, `beta` in the code's own field.
    pub fn simple(field: &Field, beta: Elem, l: u64, c: u64, delta: usize) -> BoundParams {
        BoundParams { beta, emb: Embedding::identity(field), l, cs: vec![c], ss: Vec::new(), delta }
    }

    fn validate(&self, base: &Field) -> Result<u64> {
        if self.emb.base() != base {
            return Err(Error::FieldMismatch);
        }
        self.emb.ext().check(self.beta)?;
        if self.beta.is_zero() {
            return Err(Error::Precondition("beta must be nonzero".into()));
        }
        if self.cs.is_empty() {
            return Err(Error::Precondition("at least one step c is needed".into()));
        }
        if self.cs.contains(&0) {
            return Err(Error::Precondition("every step c_j must be positive".into()));
        }
        if self.ss.len() + 1 != self.cs.len() {
            return Err(Error::Dimension(format!("{} steps need {} extents s_k", self.cs.len(), self.cs.len() - 1)));
        }
        if self.delta < 2 {
            return Err(Error::Precondition("delta must be at least 2".into()));
        }
        let size = self.ss.iter().try_fold(self.delta as u64 - 1, |acc, &s| acc.checked_mul(s + 1));
        match size {
            Some(s) if s <= GRID_LIMIT => Ok(s),
            _ => Err(Error::BudgetExceeded { needed: size.unwrap_or(u64::MAX) as u128, budget: GRID_LIMIT as u128 }),
        }
    }

    /// Exponents `l + sum i_k c_k` over the grid, with their indices.
    fn grid(&self) -> Vec<(Vec<u64>, u64)> {
        let mut extents = vec![self.delta as u64 - 2];
        extents.extend(&self.ss);
        let mut out = Vec::new();
        let mut idx = vec![0u64; extents.len()];
        loop {
            let e = self.l + idx.iter().zip(&self.cs).map(|(i, c)| i * c).sum::<u64>();
            out.push((idx.clone(), e));
            let mut pos = idx.len();
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                if idx[pos] < extents[pos] {
                    idx[pos] += 1;
                    for later in idx.iter_mut().skip(pos + 1) {
                        *later = 0;
                    }
                    break;
                }
            }
        }
    }
}

fn ext_pow(field: &Field, b: Elem, e: u64) -> Elem {
    let ord = field.order(b).expect("nonzero");
    field.pow(b, (e % ord) as i64)
}

/// Checks the roots `g(beta^{l + sum i_k c_k}) = 0` over the grid
/// `i_1 <= delta - 2`, `i_k <= s_k`, then `N_i(beta^{c_j}) != 1` for
/// `1 <= i <= n - 1` (directions with `s_j = 0` are skipped). On success
/// the code has distance at least `delta + sum s_k`.
pub fn verify_bound_general(g: &SkewPoly, n: usize, params: &BoundParams) -> Result<BoundOutcome> {
    let ctx = g.ctx();
    if ctx.has_derivation() {
        return Err(Error::Precondition("distance bounds need a zero derivation".into()));
    }
    params.validate(ctx.field())?;
    let ext = params.emb.ext();
    for (indices, e) in params.grid() {
        let v = skew_eval_ext(g, ext_pow(ext, params.beta, e), &params.emb)?;
        if !v.is_zero() {
            return Ok(BoundOutcome::Failed(BoundFailure::Root { indices, exponent: e, value: ext.format(v) }));
        }
    }
    let theta = Automorphism::new(ext, ctx.theta().exponent());
    for (j, &c) in params.cs.iter().enumerate() {
        // a direction with s_j = 0 adds no roots and nothing to the bound
        if j > 0 && params.ss[j - 1] == 0 {
            continue;
        }
        let bc = ext_pow(ext, params.beta, c);
        for i in 1..n {
            if norm(i, bc, &theta) == Elem::ONE {
                return Ok(BoundOutcome::Failed(BoundFailure::Norm { i, j: j + 1 }));
            }
        }
    }
    Ok(BoundOutcome::Certified(BoundCertificate {
        beta: ext.format(params.beta),
        ext_degree: ext.s() / ctx.field().s(),
        l: params.l,
        cs: params.cs.clone(),
        ss: params.ss.clone(),
        delta: params.delta,
        claimed_bound: params.delta + params.ss.iter().sum::<u64>() as usize,
    }))
}

/// The single-direction case: roots `beta^{l + c i}` for `i <= delta - 2`.
pub fn verify_bound1(
    g: &SkewPoly,
    n: usize,
    beta: Elem,
    emb: &Embedding,
    l: u64,
    c: u64,
    delta: usize,
) -> Result<BoundOutcome> {
    let params = BoundParams { beta, emb: emb.clone(), l, cs: vec![c], ss: Vec::new(), delta };
    verify_bound_general(g, n, &params)
}

/// For theta = id: `ord(beta) >= n` and `gcd(ord(beta), c) = 1` force
/// `beta^{ic} != 1` for `1 <= i <= n - 1`.
pub fn order_condition(field: &Field, beta: Elem, c: u64, n: usize) -> Result<bool> {
    let ord = field.order(beta)?;
    Ok(ord >= n as u64 && gcd(ord, c) == 1)
}

/// lclm of the linear factors `X - beta^{l + sum i_k c_k}` over the grid, with
/// `beta` in the ring's field. Requires `q >= n + 1` and the norm conditions.
pub fn mds_generator(
    ctx: &RingCtx,
    beta: Elem,
    l: u64,
    cs: &[u64],
    ss: &[u64],
    n: usize,
    delta: usize,
) -> Result<SkewPoly> {
    let field = ctx.field();
    if (field.q() as usize) < n + 1 {
        return Err(Error::Precondition(format!("need q >= n + 1, got q = {} and n = {n}", field.q())));
    }
    let params = BoundParams { beta, emb: Embedding::identity(field), l, cs: cs.to_vec(), ss: ss.to_vec(), delta };
    params.validate(field)?;
    let theta = ctx.theta();
    for &c in cs {
        let bc = ext_pow(field, beta, c);
        for i in 1..n {
            if norm(i, bc, theta) == Elem::ONE {
                return Err(Error::Precondition(format!("N_{i}(beta^{c}) = 1")));
            }
        }
    }
    let mut g = ctx.one();
    for (_, e) in params.grid() {
        g = lclm(&g, &ctx.linear(ext_pow(field, beta, e)))?;
    }
    Ok(g)
}

/// All `a != 0` with `g` right-dividing `X^n - a`.
pub fn constacyclic_moduli(g: &SkewPoly, n: usize) -> Result<Vec<Elem>> {
    if g.degree().ok_or(Error::ZeroPolynomial)? > n {
        return Err(Error::Precondition("generator degree exceeds n".into()));
    }
    let ctx = g.ctx();
    let field = ctx.field();
    let xn = ctx.monomial(Elem::ONE, n);
    let mut out = Vec::new();
    for a in field.nonzero_elements() {
        if right_divides(g, &(&xn - &ctx.constant(a)))? {
            out.push(a);
        }
    }
    Ok(out)
}

/// One row of the MDS search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchRow {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub g: SkewPoly,
    pub constacyclic: Vec<Elem>,
}

impl SearchRow {
    pub fn is_mds(&self) -> bool {
        self.d == self.n - self.k + 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchRecord {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub g: String,
    pub g_coeffs: Vec<String>,
    pub mds: bool,
    pub constacyclic_a: Vec<String>,
}

impl SearchRow {
    pub fn record(&self) -> SearchRecord {
        let field = self.g.field();
        SearchRecord {
            q: field.q(),
            n: self.n,
            k: self.k,
            d: self.d,
            g: self.g.pretty_with("x"),
            g_coeffs: self.g.coeffs().iter().map(|&c| field.format(c)).collect(),
            mds: self.is_mds(),
            constacyclic_a: self.constacyclic.iter().map(|&a| field.format(a)).collect(),
        }
    }
}

/// Sweeps `c in [1, q-2]` with `gcd(c, q-1) = 1`, `l in [0, q-2]`,
/// `k in [1, n-1]`, builds `g` from the roots `w^l (w^c)^i`, `i < n - k`
/// (product for theta = id, lclm otherwise), drops duplicates, and measures
/// each code spanned by `X^j g`, `j < k`. Here `w` is the field's generator
/// (`1` in a prime field). Rows come sorted by `k`, then `g`.
pub fn mds_search(ctx: &RingCtx, n: usize, budget: u128) -> Result<Vec<SearchRow>> {
    let field = ctx.field();
    let q = field.q() as usize;
    if n < 2 || n > q - 1 {
        return Err(Error::Precondition(format!("need 2 <= n <= q - 1, got n = {n} for q = {q}")));
    }
    let w = field.generator();
    let mut root_lists: BTreeSet<Vec<Elem>> = BTreeSet::new();
    for c in (1..=q.saturating_sub(2)).filter(|&c| gcd(c as u64, q as u64 - 1) == 1) {
        let wc = field.pow(w, c as i64);
        for l in 0..=q - 2 {
            let wl = field.pow(w, l as i64);
            for k in 1..n {
                root_lists.insert((0..n - k).map(|i| field.mul(wl, field.pow(wc, i as i64))).collect());
            }
        }
    }
    let mut gens: BTreeSet<Vec<Elem>> = BTreeSet::new();
    for roots in &root_lists {
        let mut g = ctx.one();
        for &r in roots {
            g = if ctx.is_commutative() { &g * &ctx.linear(r) } else { lclm(&g, &ctx.linear(r))? };
        }
        gens.insert(g.coeffs().to_vec());
    }
    let gens: Vec<SkewPoly> = gens.into_iter().map(|c| ctx.poly(c)).collect::<Result<_>>()?;
    let mut rows = gens
        .par_iter()
        .filter(|g| g.degree().is_some_and(|d| d >= 1 && d < n))
        .map(|g| {
            let k = n - g.degree().expect("nonzero");
            let mut words = Vec::with_capacity(k);
            let mut cur = g.clone();
            for _ in 0..k {
                words.push(cur.to_vector(n));
                cur = &ctx.x() * &cur;
            }
            let m = MatFq::from_rows(field, &words, n)?;
            let d = minimum_distance_of(&m, budget)?;
            Ok(SearchRow { n, k, d, g: g.clone(), constacyclic: constacyclic_moduli(g, n)? })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| (a.k, a.g.coeffs()).cmp(&(b.k, b.g.coeffs())));
    Ok(rows)
}

/// [`mds_search`] with the default budget.
pub fn mds_search_default(ctx: &RingCtx, n: usize) -> Result<Vec<SearchRow>> {
    mds_search(ctx, n, DEFAULT_BUDGET)
}
