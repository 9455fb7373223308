//! Skew GC codes: codes `C` in GF(q)^n with `T_f(C) ⊆ C`, i.e. left ideals
//! `R g / R f` for right divisors `g` of `f`.

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::constacyclic_moduli;
use crate::error::{Error, Result};
use crate::factor::{invariant_factorization, Factorization};
use crate::field::{Elem, Field};
use crate::linalg::{self, intersect_row_spaces, row_space_equal, MatFq};
use crate::poly::{left_divide, lgcd_bezout, right_divide, right_divides, RingCtx, SkewPoly};
use crate::pseudo_linear::{poly_to_vector, PseudoLinearMap};

/// Default cap on the number of vectors any exhaustive loop may visit.
pub const DEFAULT_BUDGET: u128 = 1 << 24;

fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

fn pow_u128(base: u32, e: usize) -> u128 {
    (base as u128).saturating_pow(e as u32)
}

#[derive(Clone, Debug)]
pub struct SkewGCCode {
    f: SkewPoly,
    g: SkewPoly,
    generator: MatFq,
    t_f: PseudoLinearMap,
}

impl SkewGCCode {
    /// The code generated by `g`: rows `g, T_f(g), ..., T_f^{k-1}(g)`.
    pub fn new(g: &SkewPoly, f: &SkewPoly) -> Result<SkewGCCode> {
        if g.ctx() != f.ctx() {
            return Err(Error::ContextMismatch);
        }
        let n = f.degree().ok_or(Error::ZeroPolynomial)?;
        if !f.is_monic() || !g.is_monic() {
            return Err(Error::NotMonic);
        }
        let dg = g.degree().ok_or(Error::ZeroPolynomial)?;
        if dg == 0 || dg >= n {
            return Err(Error::DegenerateCode(format!("generator of degree {dg} for length {n}")));
        }
        if !right_divides(g, f)? {
            return Err(Error::NotRightDivisor);
        }
        let t_f = PseudoLinearMap::for_modulus(f)?;
        let k = n - dg;
        let mut rows = Vec::with_capacity(k);
        let mut cur = g.to_vector(n);
        for _ in 0..k {
            let next = t_f.apply_unchecked(&cur);
            rows.push(std::mem::replace(&mut cur, next));
        }
        let generator = MatFq::from_rows(f.field(), &rows, n)?;
        Ok(SkewGCCode { f: f.clone(), g: g.clone(), generator, t_f })
    }

    pub fn modulus(&self) -> &SkewPoly {
        &self.f
    }

    pub fn generator_poly(&self) -> &SkewPoly {
        &self.g
    }

    pub fn generator_matrix(&self) -> &MatFq {
        &self.generator
    }

    pub fn t_f(&self) -> &PseudoLinearMap {
        &self.t_f
    }

    pub fn ctx(&self) -> &RingCtx {
        self.f.ctx()
    }

    pub fn field(&self) -> &Field {
        self.f.field()
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn contains(&self, v: &[Elem]) -> Result<bool> {
        self.generator.in_row_space(v)
    }

    /// Singleton bound `n - k + 1`.
    pub fn singleton_bound(&self) -> usize {
        self.length() - self.dimension() + 1
    }
}

/// True when `T(row)` lies in the row space for every row of `g`.
pub fn is_invariant_code(g: &MatFq, t: &PseudoLinearMap) -> Result<bool> {
    if g.cols() != t.n() {
        return Err(Error::Dimension("code length differs from the map size".into()));
    }
    for i in 0..g.rows() {
        if !g.in_row_space(&t.apply(g.row(i))?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Monic right divisors `g` of `f` with `1 <= deg g <= n - 1` and nonzero
/// constant term, in order of degree then coefficients. Every candidate of
/// degree below `n` is tested, so `q^n` must fit in the budget.
pub fn enumerate_right_divisors(f: &SkewPoly, budget: u128) -> Result<Vec<SkewPoly>> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let q = f.field().q();
    check_budget(pow_u128(q, n), budget)?;
    let ctx = f.ctx();
    let mut out = Vec::new();
    for d in 1..n {
        // monic, degree d, constant term nonzero: (q - 1) q^(d-1) candidates
        let count = (q as u64 - 1) * (q as u64).pow(d as u32 - 1);
        let found: Vec<SkewPoly> = (0..count)
            .into_par_iter()
            .filter_map(|idx| {
                let mut coeffs = Vec::with_capacity(d + 1);
                coeffs.push(Elem((idx % (q as u64 - 1)) as u32 + 1));
                let mut rest = idx / (q as u64 - 1);
                for _ in 1..d {
                    coeffs.push(Elem((rest % q as u64) as u32));
                    rest /= q as u64;
                }
                coeffs.push(Elem::ONE);
                let g = ctx.poly(coeffs).expect("valid elements");
                right_divides(&g, f).expect("same ring").then_some(g)
            })
            .collect();
        let mut found = found;
        found.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
        out.extend(found);
    }
    Ok(out)
}

/// Generator polynomials as an unnormalized exhaustive search lists them. For theta != id: every right divisor of degree `1..n-1` with nonzero
/// constant term, all nonzero scalar multiples included. For theta = id: the
/// powers `p^j`, `1 <= j <= m`, of each irreducible factor `p` of multiplicity
/// `m` (skipping `f` itself). Scalar multiples of one divisor span the same code.
pub fn enumerate_generators(f: &SkewPoly, budget: u128) -> Result<Vec<SkewPoly>> {
    let ctx = f.ctx();
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let mut out = Vec::new();
    if ctx.is_commutative() {
        for (p, m) in invariant_factorization(&f.monic()?)?.factors {
            for j in 1..=m {
                let g = p.pow(j);
                if g.degree() < Some(n) {
                    out.push(g);
                }
            }
        }
    } else {
        for g in enumerate_right_divisors(f, budget)? {
            for c in ctx.field().nonzero_elements() {
                out.push(g.scale_left(c));
            }
        }
    }
    Ok(out)
}

/// Minimum Hamming weight over the nonzero words spanned by the rows of `g`.
/// Only words whose first nonzero message symbol is 1 are visited.
pub fn minimum_distance_of(g: &MatFq, budget: u128) -> Result<usize> {
    let k = g.rows();
    let n = g.cols();
    if k == 0 {
        return Err(Error::DegenerateCode("zero-dimensional code".into()));
    }
    let field = g.field();
    let q = field.q() as u64;
    check_budget(pow_u128(field.q(), k), budget)?;
    let rows = g.to_rows();
    // messages (m_0, ..., m_{k-1}) with m_j = 1 and m_i = 0 for i < j
    let best = (0..k)
        .into_par_iter()
        .map(|lead| {
            let free = k - lead - 1;
            let total = q.pow(free as u32);
            (0..total)
                .into_par_iter()
                .map(|idx| {
                    let mut word = rows[lead].clone();
                    let mut rest = idx;
                    for row in &rows[lead + 1..] {
                        let c = Elem((rest % q) as u32);
                        rest /= q;
                        if !c.is_zero() {
                            for (w, &r) in word.iter_mut().zip(row) {
                                *w = field.add(*w, field.mul(c, r));
                            }
                        }
                    }
                    word.iter().filter(|c| !c.is_zero()).count()
                })
                .min()
                .unwrap_or(n)
        })
        .min()
        .unwrap_or(n);
    Ok(best)
}

pub fn minimum_distance(code: &SkewGCCode, budget: u128) -> Result<usize> {
    minimum_distance_of(&code.generator, budget)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DualMethod {
    /// Columns of the matrix with rows `T_f^j(h')`, where `f = g h'`.
    Cofactor,
    /// Plain null space of the generator matrix.
    NullSpace,
}

#[derive(Clone, Debug)]
pub struct DualCode {
    pub matrix: MatFq,
    pub method: DualMethod,
}

/// Generator matrix of the dual code. When `f = g h'` for some `h'`, the
/// `deg g` pivot columns of the matrix with rows `h', T_f(h'), ..., T_f^{n-1}(h')`
/// are used; otherwise the null space of the generator matrix.
pub fn dual_code(code: &SkewGCCode) -> Result<DualCode> {
    let n = code.length();
    let dg = code.g.degree().expect("nonzero");
    let (h, r) = left_divide(&code.f, &code.g)?;
    if r.is_zero() {
        let mut rows = Vec::with_capacity(n);
        let mut cur = h.to_vector(n);
        for _ in 0..n {
            let next = code.t_f.apply_unchecked(&cur);
            rows.push(std::mem::replace(&mut cur, next));
        }
        let m = MatFq::from_rows(code.field(), &rows, n)?;
        let pivots = m.pivot_columns();
        if pivots.len() == dg {
            let t = m.transpose();
            let cols: Vec<Vec<Elem>> = pivots.iter().map(|&j| t.row(j).to_vec()).collect();
            let matrix = MatFq::from_rows(code.field(), &cols, n)?;
            return Ok(DualCode { matrix, method: DualMethod::Cofactor });
        }
    }
    let ns = code.generator.null_space();
    Ok(DualCode { matrix: MatFq::from_rows(code.field(), &ns, n)?, method: DualMethod::NullSpace })
}

/// The map `T'` that leaves the dual of every `T`-invariant code invariant.
pub fn dual_pseudolinear_map(t: &PseudoLinearMap) -> PseudoLinearMap {
    t.dual()
}

/// A word of `C` with constant coefficient 1 and the same weight as `c`:
/// `c = b X^i (1 + ...)` is shifted down by `i` with coefficients
/// `theta^{-i}(b^{-1} b_j)`. Fails if the shifted word is not in `C`, which
/// can happen when `f` is not invariant.
pub fn normalize_to_unit_constant(c: &SkewPoly, code: &SkewGCCode) -> Result<SkewPoly> {
    if c.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if code.f.coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let ctx = code.ctx();
    if ctx.has_derivation() {
        return Err(Error::Precondition("normalization needs a zero derivation".into()));
    }
    let field = code.field();
    let n = code.length();
    let v = poly_to_vector(c, &code.f)?;
    if !code.contains(&v)? {
        return Err(Error::Precondition("word is not in the code".into()));
    }
    let i0 = v.iter().position(|x| !x.is_zero()).ok_or(Error::ZeroPolynomial)?;
    let b_inv = field.inv(v[i0])?;
    let back = ctx.theta().power(-(i0 as i64));
    let shifted: Vec<Elem> = v[i0..].iter().map(|&x| back.map(field.mul(b_inv, x))).collect();
    let mut word = shifted.clone();
    word.resize(n, Elem::ZERO);
    if !code.contains(&word)? {
        return Err(Error::Precondition("shifted word leaves the code".into()));
    }
    ctx.poly(shifted)
}

/// One summand `U_i = ker f_i^{a_i}(T_f)` with its idempotent.
#[derive(Clone, Debug)]
pub struct Component {
    pub factor: SkewPoly,
    pub multiplicity: u32,
    /// GF(q)-basis of `U_i` (reduced rows).
    pub subspace: MatFq,
    /// `e_i(T_f) = (b_i fhat_i)(T_f)` as a GF(p)-matrix on GF(q)^n.
    pub idempotent: MatFq,
    /// `fhat_i` with `f = f_i^{a_i} fhat_i`.
    pub cofactor: SkewPoly,
    /// Bezout data `a_i f_i^{a_i} + b_i fhat_i = 1`.
    pub a: SkewPoly,
    pub b: SkewPoly,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub f: SkewPoly,
    pub factorization: Factorization,
    pub components: Vec<Component>,
}

/// Splits GF(q)^n into the kernels of the prime-power factors of an invariant `f`.
pub fn decompose(f: &SkewPoly) -> Result<Decomposition> {
    let factorization = invariant_factorization(f)?;
    let t_f = PseudoLinearMap::for_modulus(f)?;
    let field = f.field();
    let n = f.degree().expect("nonzero");
    let mut components = Vec::new();
    for (fi, alpha) in &factorization.factors {
        let power = fi.pow(*alpha);
        let ker = t_f.kernel_of_poly(&power)?;
        if !ker.is_fq_linear {
            return Err(Error::NotInvariant);
        }
        let (cofactor, r) = right_divide(f, &power)?;
        debug_assert!(r.is_zero());
        let bez = lgcd_bezout(&power, &cofactor)?;
        if !bez.d.is_one() {
            return Err(Error::Precondition("prime-power factors are not coprime".into()));
        }
        let e = &bez.v * &cofactor;
        let idempotent = t_f.flatten_poly(&e)?;
        components.push(Component {
            factor: fi.clone(),
            multiplicity: *alpha,
            subspace: ker.basis_matrix(field, n),
            idempotent,
            cofactor,
            a: bez.u,
            b: bez.v,
        });
    }
    Ok(Decomposition { f: f.clone(), factorization, components })
}

/// Outcome of the idempotent and direct-sum checks on a decomposition.
#[derive(Clone, Debug, Default, Serialize)]
pub struct DecompositionReport {
    pub dimensions: Vec<usize>,
    pub expected_dimensions: Vec<usize>,
    pub direct_sum: bool,
    pub idempotent: bool,
    pub orthogonal: bool,
    pub sum_is_identity: bool,
    pub kills_other_summands: bool,
    pub fixed_space_is_summand: bool,
}

impl DecompositionReport {
    pub fn all_hold(&self) -> bool {
        self.dimensions == self.expected_dimensions
            && self.direct_sum
            && self.idempotent
            && self.orthogonal
            && self.sum_is_identity
            && self.kills_other_summands
            && self.fixed_space_is_summand
    }
}

impl Decomposition {
    pub fn field(&self) -> &Field {
        self.f.field()
    }

    pub fn n(&self) -> usize {
        self.f.degree().expect("nonzero")
    }

    pub fn verify(&self) -> Result<DecompositionReport> {
        let field = self.field();
        let n = self.n();
        let fp = field.prime_field();
        let dim = n * field.s() as usize;
        let id = MatFq::identity(&fp, dim);
        let mut rep = DecompositionReport {
            dimensions: self.components.iter().map(|c| c.subspace.rows()).collect(),
            expected_dimensions: self
                .components
                .iter()
                .map(|c| c.multiplicity as usize * c.factor.degree().expect("nonzero"))
                .collect(),
            idempotent: true,
            orthogonal: true,
            kills_other_summands: true,
            fixed_space_is_summand: true,
            ..Default::default()
        };
        let mut all = MatFq::zeros(field, 0, n);
        for c in &self.components {
            all = all.stack(&c.subspace)?;
        }
        rep.direct_sum = all.rank() == n && all.rows() == n;
        let mut sum = MatFq::zeros(&fp, dim, dim);
        for (i, c) in self.components.iter().enumerate() {
            let e = &c.idempotent;
            sum = sum.add(e)?;
            rep.idempotent &= &e.mul(e)? == e;
            for (j, d) in self.components.iter().enumerate() {
                if i != j {
                    rep.orthogonal &= e.mul(&d.idempotent)?.is_zero();
                    for row in d.subspace.to_rows() {
                        let img = e.vec_mul(&linalg::to_prime_coords(field, &row))?;
                        rep.kills_other_summands &= img.iter().all(|x| x.is_zero());
                    }
                }
            }
            let fixed = linalg::fixed_space_of_flattened(field, n, e);
            rep.fixed_space_is_summand &=
                fixed.is_fq_linear && row_space_equal(&fixed.basis_matrix(field, n), &c.subspace)?;
        }
        rep.sum_is_identity = sum == id;
        Ok(rep)
    }
}

/// `C_i = C ∩ U_i` for each summand.
pub fn code_component_split(code: &SkewGCCode, dec: &Decomposition) -> Result<Vec<MatFq>> {
    if code.f != dec.f {
        return Err(Error::Precondition("code and decomposition use different moduli".into()));
    }
    dec.components.iter().map(|c| intersect_row_spaces(&code.generator, &c.subspace)).collect()
}

/// One row of an enumeration or search report.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CodeRecord {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub g: Vec<String>,
    pub f: Vec<String>,
    pub theta_t: u32,
    pub beta: String,
    pub mds: bool,
    pub constacyclic_a: Vec<String>,
}

impl CodeRecord {
    pub fn from_code(code: &SkewGCCode, d: usize) -> Result<CodeRecord> {
        let field = code.field();
        let fmt = |p: &SkewPoly| p.coeffs().iter().map(|&c| field.format(c)).collect::<Vec<_>>();
        let n = code.length();
        let consta = constacyclic_moduli(&code.g, n)?;
        Ok(CodeRecord {
            q: field.q(),
            n,
            k: code.dimension(),
            d,
            g: fmt(&code.g),
            f: fmt(&code.f),
            theta_t: code.ctx().theta().exponent(),
            beta: field.format(code.ctx().beta()),
            mds: d == code.singleton_bound(),
            constacyclic_a: consta.iter().map(|&a| field.format(a)).collect(),
        })
    }
}
