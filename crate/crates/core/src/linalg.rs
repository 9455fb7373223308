//! Dense linear algebra over GF(q), plus flattening of additive maps to GF(p).
//!
//! Vectors are rows and matrices act on the right: a map `v -> v M`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

#[derive(Clone, PartialEq, Eq)]
pub struct MatFq {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for MatFq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatFq({}x{} over GF({})) {}", self.rows, self.cols, self.field.q(), self.to_text())
    }
}

impl MatFq {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> MatFq {
        MatFq { field: field.clone(), rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> MatFq {
        let mut m = MatFq::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    /// Builds a matrix from rows; an empty list gives a `0 x cols` matrix.
    pub fn from_rows(field: &Field, rows: &[Vec<Elem>], cols: usize) -> Result<MatFq> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension(format!("row of length {} in a matrix with {cols} columns", r.len())));
            }
            for &c in r {
                field.check(c)?;
            }
            data.extend_from_slice(r);
        }
        Ok(MatFq { field: field.clone(), rows: rows.len(), cols, data })
    }

    /// Matrix with integer entries taken in the prime subfield.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> MatFq {
        let cols = rows.first().map_or(0, |r| r.len());
        let v: Vec<Vec<Elem>> = rows.iter().map(|r| r.iter().map(|&c| field.from_int(c)).collect()).collect();
        MatFq::from_rows(field, &v, cols).expect("rows of equal length")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn transpose(&self) -> MatFq {
        let mut t = MatFq::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Applies `f` to every entry.
    pub fn map(&self, f: impl Fn(Elem) -> Elem) -> MatFq {
        MatFq {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&c| f(c)).collect(),
        }
    }

    pub fn mul(&self, other: &MatFq) -> Result<MatFq> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::Dimension(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let f = &self.field;
        let mut out = MatFq::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(l, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &MatFq) -> Result<MatFq> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension("matrix sum of different shapes".into()));
        }
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(MatFq { field: f.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: Elem) -> MatFq {
        let f = self.field.clone();
        self.map(|a| f.mul(c, a))
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.rows {
            return Err(Error::Dimension(format!("vector of length {} against {} rows", v.len(), self.rows)));
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(a, self.get(i, j)));
            }
        }
        Ok(out)
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &MatFq) -> Result<MatFq> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::Dimension("stacking matrices with different column counts".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MatFq { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Reduced row echelon form and rank.
    pub fn rref(&self) -> (MatFq, usize) {
        let f = &self.field;
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(piv) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else { continue };
            m.swap_rows(piv, rank);
            let inv = f.inv(m.get(rank, col)).expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = m.get(rank, j);
                m.set(rank, j, f.mul(inv, v));
            }
            for r in 0..m.rows {
                if r == rank {
                    continue;
                }
                let factor = m.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let v = f.sub(m.get(r, j), f.mul(factor, m.get(rank, j)));
                    m.set(r, j, v);
                }
            }
            rank += 1;
        }
        (m, rank)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Nonzero rows of the reduced row echelon form.
    pub fn row_space_basis(&self) -> MatFq {
        let (r, rank) = self.rref();
        MatFq { field: r.field.clone(), rows: rank, cols: r.cols, data: r.data[..rank * r.cols].to_vec() }
    }

    /// Pivot column indices of the reduced form.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let (r, rank) = self.rref();
        (0..rank).map(|i| (0..r.cols).find(|&j| !r.get(i, j).is_zero()).expect("pivot row is nonzero")).collect()
    }

    /// Basis of `{v : M v^T = 0}`.
    pub fn null_space(&self) -> Vec<Vec<Elem>> {
        let f = &self.field;
        let (r, rank) = self.rref();
        let pivots: Vec<usize> =
            (0..rank).map(|i| (0..r.cols).find(|&j| !r.get(i, j).is_zero()).expect("pivot row is nonzero")).collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|j| !pivots.contains(j)) {
            let mut v = vec![Elem::ZERO; self.cols];
            v[free] = Elem::ONE;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of `{v : v M = 0}`.
    pub fn left_null_space(&self) -> Vec<Vec<Elem>> {
        self.transpose().null_space()
    }

    pub fn in_row_space(&self, v: &[Elem]) -> Result<bool> {
        let extra = MatFq::from_rows(&self.field, &[v.to_vec()], self.cols)?;
        Ok(self.stack(&extra)?.rank() == self.rank())
    }

    /// Solves `x M = b`; `None` if `b` is not in the row space.
    pub fn solve_left(&self, b: &[Elem]) -> Result<Option<Vec<Elem>>> {
        if b.len() != self.cols {
            return Err(Error::Dimension("right-hand side length".into()));
        }
        let f = &self.field;
        // columns of the augmented system [M^T | b^T]
        let mut aug = MatFq::zeros(f, self.cols, self.rows + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(j, i, self.get(i, j));
            }
        }
        for (j, &bj) in b.iter().enumerate() {
            aug.set(j, self.rows, bj);
        }
        let (r, rank) = aug.rref();
        let mut x = vec![Elem::ZERO; self.rows];
        for i in 0..rank {
            let pc = (0..r.cols).find(|&j| !r.get(i, j).is_zero()).expect("pivot row is nonzero");
            if pc == self.rows {
                return Ok(None);
            }
            x[pc] = r.get(i, self.rows);
        }
        Ok(Some(x))
    }

    /// Text form: one bracketed row per line.
    pub fn to_text(&self) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let items: Vec<String> = self.row(i).iter().map(|&c| self.field.format(c)).collect();
                format!("[{}]", items.join(","))
            })
            .collect();
        rows.join("\n")
    }

    /// Nested arrays of element strings.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|&c| self.field.format(c)).collect()).collect()
    }

    /// Parses `[a,b];[c,d]` (or newline-separated rows). `I<n>` gives the identity.
    pub fn parse(field: &Field, text: &str) -> Result<MatFq> {
        let t = text.trim();
        if let Some(n) = t.strip_prefix('I').and_then(|r| r.parse::<usize>().ok()) {
            return Ok(MatFq::identity(field, n));
        }
        let mut rows = Vec::new();
        for chunk in t.split([';', '\n']).map(str::trim).filter(|c| !c.is_empty()) {
            let inner = chunk
                .strip_prefix('[')
                .and_then(|c| c.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("matrix row `{chunk}` must be bracketed")))?;
            rows.push(split_top_level(inner).iter().map(|e| field.parse(e)).collect::<Result<Vec<_>>>()?);
        }
        let cols = rows.first().map_or(0, Vec::len);
        MatFq::from_rows(field, &rows, cols)
    }
}

/// Splits on commas that are not nested inside brackets.
pub(crate) fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    if !cur.trim().is_empty() || !out.is_empty() {
        out.push(cur);
    }
    out
}

/// True when both matrices span the same row space.
pub fn row_space_equal(a: &MatFq, b: &MatFq) -> Result<bool> {
    if a.field != b.field {
        return Err(Error::FieldMismatch);
    }
    if a.cols != b.cols {
        return Err(Error::Dimension("row spaces in different ambient dimensions".into()));
    }
    Ok(a.row_space_basis() == b.row_space_basis())
}

/// Basis of the intersection of two row spaces.
pub fn intersect_row_spaces(a: &MatFq, b: &MatFq) -> Result<MatFq> {
    let a = a.row_space_basis();
    let b = b.row_space_basis();
    // x a = y b  <=>  (x, y) [a; -b] = 0
    let stacked = a.stack(&b.scale(a.field.neg(Elem::ONE)))?;
    let sols = stacked.left_null_space();
    let rows: Vec<Vec<Elem>> = sols.iter().map(|s| a.vec_mul(&s[..a.rows]).expect("sizes agree")).collect();
    Ok(MatFq::from_rows(&a.field, &rows, a.cols)?.row_space_basis())
}

/// `v` written over GF(p): coordinate `i s + j` is the `w^j` digit of `v_i`.
pub fn to_prime_coords(field: &Field, v: &[Elem]) -> Vec<Elem> {
    v.iter().flat_map(|&c| field.digits(c).into_iter().map(Elem)).collect()
}

pub fn from_prime_coords(field: &Field, v: &[Elem]) -> Vec<Elem> {
    let s = field.s() as usize;
    v.chunks(s)
        .map(|ch| field.from_digits(&ch.iter().map(|e| e.index()).collect::<Vec<_>>()).expect("digits below p"))
        .collect()
}

/// The GF(p)-basis vector `w^j e_i` of GF(q)^n, index `i s + j`.
pub fn prime_basis_vector(field: &Field, n: usize, idx: usize) -> Vec<Elem> {
    let s = field.s() as usize;
    let mut v = vec![Elem::ZERO; n];
    v[idx / s] = Elem(field.p().pow((idx % s) as u32));
    v
}

/// Matrix over GF(p) of an additive map on GF(q)^n: row `i s + j` holds the
/// coordinates of `map(w^j e_i)`. Additivity is spot-checked on random pairs.
pub fn flatten_additive_map(field: &Field, n: usize, map: impl Fn(&[Elem]) -> Vec<Elem>) -> Result<MatFq> {
    let fp = field.prime_field();
    let dim = n * field.s() as usize;
    let mut rows = Vec::with_capacity(dim);
    for idx in 0..dim {
        let img = map(&prime_basis_vector(field, n, idx));
        if img.len() != n {
            return Err(Error::Dimension(format!("map returned a vector of length {}", img.len())));
        }
        rows.push(to_prime_coords(field, &img));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..8 {
        let u: Vec<Elem> = (0..n).map(|_| Elem(rng.gen_range(0..field.q()))).collect();
        let v: Vec<Elem> = (0..n).map(|_| Elem(rng.gen_range(0..field.q()))).collect();
        let sum: Vec<Elem> = u.iter().zip(&v).map(|(&a, &b)| field.add(a, b)).collect();
        let lhs = map(&sum);
        let rhs: Vec<Elem> = map(&u).iter().zip(map(&v)).map(|(&a, b)| field.add(a, b)).collect();
        if lhs != rhs {
            return Err(Error::NotAdditive);
        }
    }
    MatFq::from_rows(&fp, &rows, dim)
}

/// A subspace of GF(q)^n found as a GF(p)-space.
#[derive(Clone, Debug)]
pub struct PrimeSubspace {
    /// GF(p)-basis, as vectors over GF(q).
    pub prime_basis: Vec<Vec<Elem>>,
    /// GF(q)-basis in reduced form, filled in only when the space is GF(q)-linear.
    pub basis: Vec<Vec<Elem>>,
    pub is_fq_linear: bool,
}

impl PrimeSubspace {
    /// Regroups a GF(p)-basis, testing closure under multiplication by `w`.
    pub fn from_prime_basis(field: &Field, n: usize, prime_basis: Vec<Vec<Elem>>) -> PrimeSubspace {
        let fp = field.prime_field();
        let dim = n * field.s() as usize;
        let flat: Vec<Vec<Elem>> = prime_basis.iter().map(|v| to_prime_coords(field, v)).collect();
        let span = MatFq::from_rows(&fp, &flat, dim).expect("coordinate length");
        let w = field.generator();
        let closed = prime_basis.iter().all(|v| {
            let wv: Vec<Elem> = v.iter().map(|&c| field.mul(w, c)).collect();
            span.in_row_space(&to_prime_coords(field, &wv)).expect("coordinate length")
        });
        let basis = if closed {
            MatFq::from_rows(field, &prime_basis, n).expect("vector length").row_space_basis().to_rows()
        } else {
            Vec::new()
        };
        PrimeSubspace { prime_basis, basis, is_fq_linear: closed }
    }

    pub fn prime_dimension(&self) -> usize {
        self.prime_basis.len()
    }

    /// The GF(q)-basis as a matrix (empty when not GF(q)-linear).
    pub fn basis_matrix(&self, field: &Field, n: usize) -> MatFq {
        MatFq::from_rows(field, &self.basis, n).expect("vector length")
    }
}

/// Kernel `{v : v F = 0}` of a flattened map, regrouped into GF(q)^n.
pub fn kernel_of_flattened(field: &Field, n: usize, flat: &MatFq) -> PrimeSubspace {
    let basis: Vec<Vec<Elem>> = flat.left_null_space().iter().map(|v| from_prime_coords(field, v)).collect();
    PrimeSubspace::from_prime_basis(field, n, basis)
}

/// Fixed space `{v : v F = v}` of a flattened map.
pub fn fixed_space_of_flattened(field: &Field, n: usize, flat: &MatFq) -> PrimeSubspace {
    let id = MatFq::identity(flat.field(), flat.rows());
    let diff = flat.add(&id.scale(flat.field().neg(Elem::ONE))).expect("same shape");
    kernel_of_flattened(field, n, &diff)
}
