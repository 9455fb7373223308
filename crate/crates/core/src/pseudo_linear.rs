//! Pseudo-linear maps `T(v) = theta(v) M + beta (theta(v) - v)` on row vectors.

use crate::error::{Error, Result};
use crate::field::{Automorphism, Elem, Field};
use crate::linalg::{self, MatFq, PrimeSubspace};
use crate::poly::{lclm, right_rem, RingCtx, SkewPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoLinearMap {
    m: MatFq,
    theta: Automorphism,
    beta: Elem,
}

/// Companion matrix of a monic `f = X^n + a_{n-1} X^{n-1} + ... + a_0`:
/// ones on the superdiagonal, bottom row `(-a_0, ..., -a_{n-1})`.
pub fn companion_matrix(f: &SkewPoly) -> Result<MatFq> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if n == 0 {
        return Err(Error::Dimension("companion matrix of a constant".into()));
    }
    let fld = f.field();
    let mut a = MatFq::zeros(fld, n, n);
    for i in 0..n - 1 {
        a.set(i, i + 1, Elem::ONE);
    }
    for j in 0..n {
        a.set(n - 1, j, fld.neg(f.coeff(j)));
    }
    Ok(a)
}

impl PseudoLinearMap {
    pub fn new(m: MatFq, theta: Automorphism, beta: Elem) -> Result<PseudoLinearMap> {
        if !m.is_square() {
            return Err(Error::Dimension("pseudo-linear map needs a square matrix".into()));
        }
        if m.field() != theta.field() {
            return Err(Error::FieldMismatch);
        }
        m.field().check(beta)?;
        Ok(PseudoLinearMap { m, theta, beta })
    }

    /// The map `T_f` for the ring of `f`, with `M` the companion matrix of `f`.
    pub fn for_modulus(f: &SkewPoly) -> Result<PseudoLinearMap> {
        let ctx = f.ctx();
        PseudoLinearMap::new(companion_matrix(f)?, ctx.theta().clone(), ctx.beta())
    }

    pub fn matrix(&self) -> &MatFq {
        &self.m
    }

    pub fn theta(&self) -> &Automorphism {
        &self.theta
    }

    pub fn beta(&self) -> Elem {
        self.beta
    }

    pub fn field(&self) -> &Field {
        self.m.field()
    }

    pub fn n(&self) -> usize {
        self.m.rows()
    }

    /// The ring whose scalars act on the left of `p(T)`.
    pub fn ring(&self) -> RingCtx {
        RingCtx::new(self.field(), self.theta.exponent(), self.beta).expect("beta is in the field")
    }

    pub fn is_semilinear(&self) -> bool {
        self.beta.is_zero() || self.theta.is_identity()
    }

    pub fn apply(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.n() {
            return Err(Error::Dimension(format!("vector of length {} for a map on GF(q)^{}", v.len(), self.n())));
        }
        for &c in v {
            self.field().check(c)?;
        }
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked(&self, v: &[Elem]) -> Vec<Elem> {
        let f = self.field();
        let tv: Vec<Elem> = v.iter().map(|&c| self.theta.map(c)).collect();
        let mut out = self.m.vec_mul(&tv).expect("length checked");
        if !self.beta.is_zero() {
            for ((o, &t), &c) in out.iter_mut().zip(&tv).zip(v) {
                *o = f.add(*o, f.mul(self.beta, f.sub(t, c)));
            }
        }
        out
    }

    /// `T^i(v)`.
    pub fn apply_power(&self, i: usize, v: &[Elem]) -> Result<Vec<Elem>> {
        let mut cur = self.apply(v)?;
        if i == 0 {
            return Ok(v.to_vec());
        }
        for _ in 1..i {
            cur = self.apply_unchecked(&cur);
        }
        Ok(cur)
    }

    /// `p(T)(v) = sum p_i T^i(v)`, scalars applied on the left.
    pub fn apply_poly(&self, p: &SkewPoly, v: &[Elem]) -> Result<Vec<Elem>> {
        if p.field() != self.field() {
            return Err(Error::FieldMismatch);
        }
        let f = self.field();
        let mut cur = v.to_vec();
        self.apply(v)?;
        let mut out = vec![Elem::ZERO; self.n()];
        for (i, &c) in p.coeffs().iter().enumerate() {
            if i > 0 {
                cur = self.apply_unchecked(&cur);
            }
            if c.is_zero() {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(&cur) {
                *o = f.add(*o, f.mul(c, x));
            }
        }
        Ok(out)
    }

    /// Matrix over GF(p) of `T` itself.
    pub fn flatten(&self) -> MatFq {
        linalg::flatten_additive_map(self.field(), self.n(), |v| self.apply_unchecked(v))
            .expect("pseudo-linear maps are additive")
    }

    /// Matrix over GF(p) of the additive map `p(T)`.
    pub fn flatten_poly(&self, p: &SkewPoly) -> Result<MatFq> {
        if p.field() != self.field() {
            return Err(Error::FieldMismatch);
        }
        linalg::flatten_additive_map(self.field(), self.n(), |v| self.apply_poly(p, v).expect("length checked"))
    }

    /// Kernel of `h(T)`, with a flag telling whether it is a GF(q)-subspace.
    pub fn kernel_of_poly(&self, h: &SkewPoly) -> Result<PrimeSubspace> {
        let flat = self.flatten_poly(h)?;
        Ok(linalg::kernel_of_flattened(self.field(), self.n(), &flat))
    }

    /// Some `v` with `T(v) = target`, if one exists.
    pub fn solve(&self, target: &[Elem]) -> Result<Option<Vec<Elem>>> {
        if target.len() != self.n() {
            return Err(Error::Dimension("target length".into()));
        }
        let flat = self.flatten();
        let b = linalg::to_prime_coords(self.field(), target);
        Ok(flat.solve_left(&b)?.map(|x| linalg::from_prime_coords(self.field(), &x)))
    }

    /// The map `T'` whose invariant codes are the duals of `T`-invariant codes:
    /// matrix `theta^-1` applied to the transpose, automorphism `theta^-1`,
    /// derivation parameter `theta^-1(beta)`.
    pub fn dual(&self) -> PseudoLinearMap {
        let inv = self.theta.inverse();
        let m = self.m.transpose().map(|c| inv.map(c));
        let beta = inv.map(self.beta);
        PseudoLinearMap { m, theta: inv, beta }
    }
}

/// `B = theta^(k-1)(M) ... theta(M) M` for `k` the order of `theta`.
pub fn theta_conjugate_product(m: &MatFq, theta: &Automorphism) -> Result<MatFq> {
    if !m.is_square() {
        return Err(Error::Dimension("theta-conjugate product of a non-square matrix".into()));
    }
    if m.field() != theta.field() {
        return Err(Error::FieldMismatch);
    }
    let mut b = m.clone();
    for j in 1..theta.order() {
        let conj = m.map(|c| theta.power(j as i64).map(c));
        b = conj.mul(&b)?;
    }
    Ok(b)
}

/// Monic minimal polynomial of a square matrix, in `F_q[X]`. Each basis
/// vector's Krylov sequence `e_i, e_i B, e_i B^2, ...` gives a local
/// annihilator; the answer is their lcm.
pub fn matrix_minimal_poly(b: &MatFq) -> Result<SkewPoly> {
    if !b.is_square() {
        return Err(Error::Dimension("minimal polynomial of a non-square matrix".into()));
    }
    let f = b.field();
    let n = b.rows();
    let ctx = RingCtx::commutative(f);
    let mut acc = ctx.one();
    for i in 0..n {
        let mut e = vec![Elem::ZERO; n];
        e[i] = Elem::ONE;
        let mut seq = vec![e];
        loop {
            let next = b.vec_mul(seq.last().expect("nonempty"))?;
            let krylov = MatFq::from_rows(f, &seq, n)?;
            if let Some(x) = krylov.solve_left(&next)? {
                // next = sum x_j B^j e  =>  X^d - sum x_j X^j annihilates e
                let mut c: Vec<Elem> = x.iter().map(|&a| f.neg(a)).collect();
                c.push(Elem::ONE);
                acc = lclm(&acc, &ctx.poly(c)?)?;
                break;
            }
            seq.push(next);
        }
    }
    Ok(acc)
}

/// Minimal polynomial of a semi-linear map (`beta = 0`, `M` invertible):
/// `m_T = m_B(X^k)`, an element of `F_q[X; theta]` with fixed-field coefficients.
pub fn semilinear_minimal_poly(t: &PseudoLinearMap) -> Result<SkewPoly> {
    if !t.beta.is_zero() && !t.theta.is_identity() {
        return Err(Error::Precondition("minimal polynomial needs a zero derivation".into()));
    }
    if t.m.rank() < t.n() {
        return Err(Error::Singular);
    }
    let b = theta_conjugate_product(&t.m, &t.theta)?;
    let mb = matrix_minimal_poly(&b)?;
    let k = t.theta.order() as usize;
    let ctx = RingCtx::new(t.field(), t.theta.exponent(), Elem::ZERO)?;
    let mut coeffs = vec![Elem::ZERO; (mb.coeffs().len() - 1) * k + 1];
    for (i, &c) in mb.coeffs().iter().enumerate() {
        coeffs[i * k] = c;
    }
    ctx.poly(coeffs)
}

/// `pi_f`: vector `v` to the class of `sum v_i X^i` in `R / R f`.
pub fn vector_to_poly(ctx: &RingCtx, v: &[Elem]) -> Result<SkewPoly> {
    ctx.poly(v.to_vec())
}

/// Inverse of `pi_f`: reduce modulo `R f` and pad to length `deg f`.
pub fn poly_to_vector(p: &SkewPoly, f: &SkewPoly) -> Result<Vec<Elem>> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    Ok(right_rem(p, f)?.to_vector(n))
}
