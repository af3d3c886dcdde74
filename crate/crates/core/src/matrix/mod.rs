//! Dense square matrices over a [`FieldSpec`]. Vectors are columns and
//! matrices act on the left.

mod algebra;
mod charpoly;
mod smith;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{Fel, FieldSpec};
use crate::poly::UPoly;

pub use algebra::{commutant_dim, enveloping_dim, frobenius_commutant_dim, spin};
pub use smith::InvariantFactors;

/// Column vector.
pub type Vector = Vec<Fel>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FMatrix {
    n: usize,
    data: Vec<Fel>,
}

/// Result of a bounded order search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixOrder {
    Finite(u64),
    /// No `k <= cap` gives the identity.
    ExceedsCap(u64),
}

impl MatrixOrder {
    pub fn finite(self) -> Option<u64> {
        match self {
            MatrixOrder::Finite(k) => Some(k),
            MatrixOrder::ExceedsCap(_) => None,
        }
    }
}

/// Default cap for [`FMatrix::order`].
pub const DEFAULT_ORDER_CAP: u64 = 1_000_000;

impl FMatrix {
    pub fn zero(n: usize, field: &FieldSpec) -> Self {
        FMatrix {
            n,
            data: vec![field.zero(); n * n],
        }
    }

    pub fn identity(n: usize, field: &FieldSpec) -> Self {
        Self::scalar(n, field.one(), field)
    }

    pub fn scalar(n: usize, c: Fel, field: &FieldSpec) -> Self {
        let mut m = Self::zero(n, field);
        for i in 0..n {
            m.set(i, i, c);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Fel>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch);
        }
        Ok(FMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer entries mapped into the prime field.
    pub fn from_ints(rows: &[&[i64]], field: &FieldSpec) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| field.from_int(c)).collect())
                .collect(),
        )
    }

    /// Matrix with columns `cols[0], cols[1], ...`.
    pub fn from_columns(cols: &[Vector]) -> Result<Self> {
        let n = cols.len();
        if cols.iter().any(|c| c.len() != n) {
            return Err(Error::DimensionMismatch);
        }
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            data.extend(cols.iter().map(|c| c[i]));
        }
        Ok(FMatrix { n, data })
    }

    /// Companion matrix of a monic polynomial of positive degree.
    pub fn companion(f: &UPoly, field: &FieldSpec) -> Self {
        let n = f.degree().expect("nonzero polynomial");
        let mut m = Self::zero(n, field);
        for i in 1..n {
            m.set(i, i - 1, field.one());
        }
        for i in 0..n {
            m.set(i, n - 1, field.neg(f.coeff(i, field)));
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Fel {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Fel) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fel] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Fel]> {
        self.data.chunks(self.n.max(1))
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    /// Row-major entries, the flattening used for algebra spanning.
    pub fn entries(&self) -> &[Fel] {
        &self.data
    }

    fn zip_with(&self, other: &Self, op: impl Fn(Fel, Fel) -> Fel) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        FMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self, field: &FieldSpec) -> Self {
        self.zip_with(other, |a, b| field.add(a, b))
    }

    pub fn sub(&self, other: &Self, field: &FieldSpec) -> Self {
        self.zip_with(other, |a, b| field.sub(a, b))
    }

    pub fn scale(&self, c: Fel, field: &FieldSpec) -> Self {
        FMatrix {
            n: self.n,
            data: self.data.iter().map(|&a| field.mul(a, c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self, field: &FieldSpec) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zero(n, field);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * n + j;
                        out.data[idx] = field.add(out.data[idx], field.mul(a, b));
                    }
                }
            }
        }
        out
    }

    /// `self * v`.
    pub fn apply(&self, v: &[Fel], field: &FieldSpec) -> Vector {
        assert_eq!(v.len(), self.n, "dimension mismatch");
        self.rows()
            .map(|r| {
                r.iter().zip(v).fold(field.zero(), |acc, (&a, &b)| {
                    field.add(acc, field.mul(a, b))
                })
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for j in 0..n {
            data.extend((0..n).map(|i| self.get(i, j)));
        }
        FMatrix { n, data }
    }

    /// Entrywise sigma.
    pub fn frobenius(&self, field: &FieldSpec) -> Self {
        FMatrix {
            n: self.n,
            data: self.data.iter().map(|&a| field.frobenius_q(a)).collect(),
        }
    }

    pub fn pow(&self, mut e: u64, field: &FieldSpec) -> Self {
        let mut r = Self::identity(self.n, field);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b, field);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b, field);
            }
        }
        r
    }

    pub fn is_identity(&self, field: &FieldSpec) -> bool {
        self.scalar_value(field) == Some(field.one())
    }

    /// `Some(lambda)` when `self = lambda * I`.
    pub fn scalar_value(&self, _field: &FieldSpec) -> Option<Fel> {
        let n = self.n;
        let lambda = if n == 0 { return None } else { self.get(0, 0) };
        for i in 0..n {
            for j in 0..n {
                let v = self.get(i, j);
                if (i == j && v != lambda) || (i != j && !v.is_zero()) {
                    return None;
                }
            }
        }
        Some(lambda)
    }

    pub fn is_scalar(&self, field: &FieldSpec) -> bool {
        self.scalar_value(field).is_some()
    }

    pub fn det(&self, field: &FieldSpec) -> Fel {
        let n = self.n;
        let mut a: Vec<Vec<Fel>> = self.rows().map(|r| r.to_vec()).collect();
        let mut det = field.one();
        for k in 0..n {
            let Some(piv) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return field.zero();
            };
            if piv != k {
                a.swap(piv, k);
                det = field.neg(det);
            }
            let pv = a[k][k];
            det = field.mul(det, pv);
            let inv = field.inv(pv);
            for i in k + 1..n {
                let factor = field.mul(a[i][k], inv);
                if factor.is_zero() {
                    continue;
                }
                for j in k..n {
                    a[i][j] = field.sub(a[i][j], field.mul(factor, a[k][j]));
                }
            }
        }
        det
    }

    pub fn inverse(&self, field: &FieldSpec) -> Result<Self> {
        let n = self.n;
        let mut a: Vec<Vec<Fel>> = self.rows().map(|r| r.to_vec()).collect();
        let mut inv: Vec<Vec<Fel>> = Self::identity(n, field)
            .rows()
            .map(|r| r.to_vec())
            .collect();
        for k in 0..n {
            let piv = (k..n)
                .find(|&i| !a[i][k].is_zero())
                .ok_or(Error::SingularMatrix)?;
            a.swap(piv, k);
            inv.swap(piv, k);
            let s = field.inv(a[k][k]);
            for j in 0..n {
                a[k][j] = field.mul(a[k][j], s);
                inv[k][j] = field.mul(inv[k][j], s);
            }
            for i in 0..n {
                if i == k || a[i][k].is_zero() {
                    continue;
                }
                let factor = a[i][k];
                for j in 0..n {
                    a[i][j] = field.sub(a[i][j], field.mul(factor, a[k][j]));
                    inv[i][j] = field.sub(inv[i][j], field.mul(factor, inv[k][j]));
                }
            }
        }
        Self::from_rows(inv)
    }

    pub fn rank(&self, field: &FieldSpec) -> usize {
        let mut space = Subspace::new(self.n);
        self.rows()
            .filter(|r| space.insert(r.to_vec(), field))
            .count()
    }

    /// Basis of the right null space `{v : self * v = 0}`, one vector per
    /// free column of the reduced row echelon form.
    pub fn kernel_basis(&self, field: &FieldSpec) -> Vec<Vector> {
        let rows: Vec<Vec<Fel>> = self.rows().map(|r| r.to_vec()).collect();
        nullspace(rows, self.n, field)
    }

    /// `p(self)` by Horner's scheme.
    pub fn eval_poly(&self, p: &UPoly, field: &FieldSpec) -> Self {
        let id = Self::identity(self.n, field);
        p.coeffs()
            .iter()
            .rev()
            .fold(Self::zero(self.n, field), |acc, &c| {
                acc.mul(self, field).add(&id.scale(c, field), field)
            })
    }

    /// Least `k <= cap` with `self^k = I`, by successive multiplication.
    pub fn order(&self, cap: u64, field: &FieldSpec) -> Result<MatrixOrder> {
        if self.det(field).is_zero() {
            return Err(Error::SingularMatrix);
        }
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity(field) {
                return Ok(MatrixOrder::Finite(k));
            }
            acc = acc.mul(self, field);
        }
        Ok(MatrixOrder::ExceedsCap(cap))
    }

    /// `det(tI - self)`.
    pub fn char_poly(&self, field: &FieldSpec) -> UPoly {
        charpoly::char_poly(self, field)
    }

    /// Nontrivial invariant factors of `tI - self`.
    pub fn invariant_factors(&self, field: &FieldSpec) -> InvariantFactors {
        smith::invariant_factors(self, field)
    }

    pub fn min_poly(&self, field: &FieldSpec) -> UPoly {
        self.invariant_factors(field)
            .factors()
            .last()
            .cloned()
            .unwrap_or_else(|| UPoly::constant(field.one()))
    }

    /// `self^-1 other^-1 self other`.
    pub fn commutator(&self, other: &Self, field: &FieldSpec) -> Result<Self> {
        let si = self.inverse(field)?;
        let oi = other.inverse(field)?;
        Ok(si.mul(&oi, field).mul(self, field).mul(other, field))
    }

    /// Copy of `block` placed on the diagonal starting at `offset`, identity
    /// elsewhere.
    pub fn embed(block: &Self, n: usize, offset: usize, field: &FieldSpec) -> Self {
        let mut m = Self::identity(n, field);
        for i in 0..block.n {
            for j in 0..block.n {
                m.set(offset + i, offset + j, block.get(i, j));
            }
        }
        m
    }
}

/// Right null space of a `rows.len() x width` matrix.
pub fn nullspace(mut rows: Vec<Vec<Fel>>, width: usize, field: &FieldSpec) -> Vec<Vector> {
    let pivots = rref(&mut rows, width, field);
    let mut basis = Vec::new();
    for free in (0..width).filter(|c| !pivots.contains(c)) {
        let mut v = vec![field.zero(); width];
        v[free] = field.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(rows[r][free]);
        }
        basis.push(v);
    }
    basis
}

/// Reduced row echelon form in place; returns pivot columns, one per
/// leading row.
fn rref(rows: &mut [Vec<Fel>], width: usize, field: &FieldSpec) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        if r == rows.len() {
            break;
        }
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(piv, r);
        let s = field.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, s);
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c];
            for j in 0..width {
                let sub = field.mul(factor, rows[r][j]);
                rows[i][j] = field.sub(rows[i][j], sub);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Incrementally built subspace of `F^len` kept in echelon form.
#[derive(Clone, Debug)]
pub struct Subspace {
    len: usize,
    /// Reduced rows, each normalised to 1 at its pivot.
    reduced: Vec<(usize, Vector)>,
    /// The vectors as inserted, in insertion order.
    accepted: Vec<Vector>,
}

impl Subspace {
    pub fn new(len: usize) -> Self {
        Subspace {
            len,
            reduced: Vec::new(),
            accepted: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.accepted.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    /// Accepted vectors, in insertion order.
    pub fn basis(&self) -> &[Vector] {
        &self.accepted
    }

    fn reduce(&self, mut v: Vector, field: &FieldSpec) -> Vector {
        for (pivot, row) in &self.reduced {
            let factor = v[*pivot];
            if factor.is_zero() {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = field.sub(*x, field.mul(factor, r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Fel], field: &FieldSpec) -> bool {
        self.reduce(v.to_vec(), field).iter().all(|x| x.is_zero())
    }

    /// Adds `v` when it is independent of the current span; returns whether
    /// it was added.
    pub fn insert(&mut self, v: Vector, field: &FieldSpec) -> bool {
        assert_eq!(v.len(), self.len, "dimension mismatch");
        let r = self.reduce(v.clone(), field);
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let s = field.inv(r[pivot]);
        let r: Vector = r.iter().map(|&x| field.mul(x, s)).collect();
        self.reduced.push((pivot, r));
        self.accepted.push(v);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf9() -> FieldSpec {
        FieldSpec::new(3, 1, Some(&[2, 1, 1])).unwrap()
    }

    fn sample(field: &FieldSpec, n: usize, seed: u64) -> FMatrix {
        let mut s = seed;
        let rows = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        s = s
                            .wrapping_mul(6364136223846793005)
                            .wrapping_add(1442695040888963407);
                        field.element((s >> 33) % field.size())
                    })
                    .collect()
            })
            .collect();
        FMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn identity_basics() {
        let f = gf9();
        let id = FMatrix::identity(6, &f);
        assert_eq!(id.det(&f), f.one());
        assert_eq!(id.order(10, &f).unwrap(), MatrixOrder::Finite(1));
        assert!(id.is_scalar(&f));
        assert_eq!(id.rank(&f), 6);
        assert!(id.kernel_basis(&f).is_empty());
        let w = FMatrix::scalar(3, f.generator(), &f);
        assert!(w.is_scalar(&f));
    }

    #[test]
    fn inverse_roundtrip() {
        let f = gf9();
        let mut done = 0;
        for seed in 0..200 {
            let a = sample(&f, 4, seed);
            if a.det(&f).is_zero() {
                assert_eq!(a.inverse(&f), Err(Error::SingularMatrix));
                continue;
            }
            let inv = a.inverse(&f).unwrap();
            assert!(a.mul(&inv, &f).is_identity(&f));
            done += 1;
            if done == 50 {
                break;
            }
        }
        assert_eq!(done, 50);
    }

    #[test]
    fn kernel_is_annihilated() {
        let f = gf9();
        let a = FMatrix::from_ints(&[&[1, 2, 0], &[2, 1, 0], &[0, 0, 0]], &f).unwrap();
        let k = a.kernel_basis(&f);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.apply(v, &f).iter().all(|x| x.is_zero()));
        }
        assert_eq!(a.rank(&f), 1);
    }

    #[test]
    fn order_cap_and_singular() {
        let f = gf9();
        let swap = FMatrix::from_ints(&[&[0, 1], &[1, 0]], &f).unwrap();
        assert_eq!(swap.order(1, &f).unwrap(), MatrixOrder::ExceedsCap(1));
        assert_eq!(swap.order(5, &f).unwrap(), MatrixOrder::Finite(2));
        let sing = FMatrix::zero(2, &f);
        assert_eq!(sing.order(5, &f), Err(Error::SingularMatrix));
    }

    #[test]
    fn subspace_insertion() {
        let f = gf9();
        let mut s = Subspace::new(3);
        assert!(s.insert(vec![f.one(), f.one(), f.zero()], &f));
        assert!(!s.insert(vec![f.from_int(2), f.from_int(2), f.zero()], &f));
        assert!(s.insert(vec![f.zero(), f.one(), f.one()], &f));
        assert!(s.contains(&[f.one(), f.zero(), f.from_int(2)], &f));
        assert_eq!(s.dim(), 2);
    }
}
