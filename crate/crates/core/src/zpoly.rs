//! Integer polynomials in two variables `u`, `v` (read as `a` and `a^q`),
//! with exact resultants with respect to `v`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gf::{Fel, FieldSpec};

/// Dense univariate integer polynomial, constant first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZPoly(Vec<BigInt>);

impl ZPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        ZPoly(c)
    }

    pub fn zero() -> Self {
        ZPoly(Vec::new())
    }

    pub fn one() -> Self {
        ZPoly(vec![BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = BigInt::zero();
        Self::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        ZPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// `self / d` when the quotient exists in `Z[u]`, else `None`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let dd = d.0.len().checked_sub(1)?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.0.len() <= dd {
            return None;
        }
        let lead = &d.0[dd];
        let mut rem = self.0.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let (qk, r) = rem[k].div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, di) in d.0.iter().enumerate() {
                rem[k - dd + i] -= &qk * di;
            }
            quot[k - dd] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }
}

/// `sum c_ij u^i v^j` with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ZBiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl ZBiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::from_terms(&[(c, 0, 0)])
    }

    pub fn u() -> Self {
        Self::from_terms(&[(1, 1, 0)])
    }

    pub fn v() -> Self {
        Self::from_terms(&[(1, 0, 1)])
    }

    /// From `(coefficient, i, j)` triples; repeated exponents accumulate.
    pub fn from_terms(terms: &[(i64, u32, u32)]) -> Self {
        let mut out = Self::zero();
        for &(c, i, j) in terms {
            out.add_term((i, j), BigInt::from(c));
        }
        out
    }

    fn add_term(&mut self, key: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &o.terms {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        ZBiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &o.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        self.mul(&Self::constant(c))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(1), |acc, _| acc.mul(self))
    }

    /// Exchanges the roles of `u` and `v` (the action of sigma on
    /// polynomials in `a`, `a^q`).
    pub fn swap(&self) -> Self {
        ZBiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    /// Coefficients reduced into `[0, m)`, zeros dropped.
    pub fn reduce_mod(&self, m: u64) -> Self {
        let m = BigInt::from(m);
        let mut out = Self::zero();
        for (&k, c) in &self.terms {
            out.add_term(k, c.mod_floor(&m));
        }
        out
    }

    pub fn degree_in_v(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// The coefficient of `v^j` as a polynomial in `u`.
    pub fn coeff_in_v(&self, j: u32) -> ZPoly {
        let deg = self
            .terms
            .keys()
            .filter(|&&(_, jj)| jj == j)
            .map(|&(i, _)| i as usize)
            .max();
        let Some(deg) = deg else {
            return ZPoly::zero();
        };
        let mut c = vec![BigInt::zero(); deg + 1];
        for (&(i, jj), x) in &self.terms {
            if jj == j {
                c[i as usize] = x.clone();
            }
        }
        ZPoly::new(c)
    }

    /// A polynomial in `u` alone.
    pub fn from_u_poly(p: &ZPoly) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.0.iter().enumerate() {
            out.add_term((i as u32, 0), c.clone());
        }
        out
    }

    /// Substitutes `u = a`, `v = b` in `field`, integer coefficients mapped
    /// into the prime field.
    pub fn eval(&self, field: &FieldSpec, a: Fel, b: Fel) -> Fel {
        let p = BigInt::from(field.p());
        self.terms.iter().fold(field.zero(), |acc, (&(i, j), c)| {
            let c: i64 = i64::try_from(c.mod_floor(&p)).expect("reduced below p");
            let mono = field.mul(field.pow(a, i as u64), field.pow(b, j as u64));
            field.add(acc, field.mul(field.from_int(c), mono))
        })
    }

    /// Substitutes `u = a`, `v = a^q`.
    pub fn eval_at(&self, field: &FieldSpec, a: Fel) -> Fel {
        self.eval(field, a, field.frobenius_q(a))
    }
}

/// `c*a^i*aq^j` monomials in ascending `(i, j)` order joined by ` + `.
impl fmt::Display for ZBiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (&(i, j), c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*a^{i}*aq^{j}")?;
        }
        Ok(())
    }
}

/// Determinant of the Sylvester matrix of `p`, `q` in `v`, as a polynomial
/// in `u`, by fraction-free (Bareiss) elimination over `Z[u]`.
pub fn resultant_wrt_second(p: &ZBiPoly, q: &ZBiPoly) -> Result<ZBiPoly> {
    let m = p
        .degree_in_v()
        .filter(|&d| d > 0)
        .ok_or(Error::DegenerateResultant)? as usize;
    let n = q
        .degree_in_v()
        .filter(|&d| d > 0)
        .ok_or(Error::DegenerateResultant)? as usize;
    let det = bareiss_det(sylvester(p, q, m, n));
    Ok(ZBiPoly::from_u_poly(&det))
}

/// Rows `0..n` carry `p`'s coefficients (highest first), rows `n..n+m` `q`'s.
pub fn sylvester(p: &ZBiPoly, q: &ZBiPoly, m: usize, n: usize) -> Vec<Vec<ZPoly>> {
    let size = m + n;
    let mut s = vec![vec![ZPoly::zero(); size]; size];
    for r in 0..n {
        for k in 0..=m {
            s[r][r + k] = p.coeff_in_v((m - k) as u32);
        }
    }
    for r in 0..m {
        for k in 0..=n {
            s[n + r][r + k] = q.coeff_in_v((n - k) as u32);
        }
    }
    s
}

fn bareiss_det(mut a: Vec<Vec<ZPoly>>) -> ZPoly {
    let n = a.len();
    if n == 0 {
        return ZPoly::one();
    }
    let mut negate = false;
    let mut prev = ZPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return ZPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.exact_div(&prev).expect("Bareiss quotients are exact");
            }
            a[i][k] = ZPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// The integer polynomials in `(a, a^q)` (or `(s, s^q)`) whose identities
/// the checks rely on.
#[derive(Clone, Debug)]
pub struct NamedPolys {
    pub alpha: ZBiPoly,
    pub beta: ZBiPoly,
    /// Coefficient-of-`t` condition of the symmetric-square comparison, with
    /// `a = s^(q+2) - 2s` and `b`, `c` expanded.
    pub p1: ZBiPoly,
    /// Coefficient-of-`t^2` condition, same substitution.
    pub p2: ZBiPoly,
    pub p3: ZBiPoly,
    pub p_prime: ZBiPoly,
    pub gamma: ZBiPoly,
    pub cond_ii: ZBiPoly,
}

impl NamedPolys {
    pub fn entries(&self) -> [(&'static str, &ZBiPoly); 8] {
        [
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("P1", &self.p1),
            ("P2", &self.p2),
            ("P3", &self.p3),
            ("P'", &self.p_prime),
            ("gamma", &self.gamma),
            ("cond_ii", &self.cond_ii),
        ]
    }
}

/// `b = 2a - a^(2q)` and `c = a^(q+1) - 4` as polynomials in `(a, a^q)`,
/// given `a` and `a^q` as polynomials in some pair of variables.
fn b_and_c(a: &ZBiPoly, aq: &ZBiPoly) -> (ZBiPoly, ZBiPoly) {
    let b = a.scale(2).sub(&aq.pow(2));
    let c = a.mul(aq).sub(&ZBiPoly::constant(4));
    (b, c)
}

pub fn named_polys() -> NamedPolys {
    let alpha = ZBiPoly::from_terms(&[
        (1, 4, 3),
        (-2, 2, 4),
        (-7, 3, 2),
        (1, 0, 5),
        (8, 1, 3),
        (20, 2, 1),
        (-16, 0, 2),
        (-16, 1, 0),
    ]);
    let beta = ZBiPoly::from_terms(&[(1, 2, 2), (-1, 0, 3), (-4, 1, 1), (8, 0, 0)]);
    let p3 = ZBiPoly::from_terms(&[(1, 3, 0), (-4, 1, 1), (1, 0, 3), (2, 0, 0)]);
    let p_prime = ZBiPoly::from_terms(&[(1, 2, 2), (-1, 0, 3), (-2, 1, 1), (2, 0, 0)]);
    let gamma = ZBiPoly::from_terms(&[(1, 3, 0), (1, 0, 3), (-6, 1, 1), (8, 0, 0)]);
    let cond_ii = ZBiPoly::from_terms(&[(1, 2, 2), (-5, 1, 1), (8, 0, 0)]);

    // a = s^(q+2) - 2s, a^q = s^(2q+1) - 2s^q, using s^(q^2) = s.
    let a = ZBiPoly::from_terms(&[(1, 2, 1), (-2, 1, 0)]);
    let aq = a.swap();
    let (b, c) = b_and_c(&a, &aq);
    let bq = b.swap();
    // P1 = c(s^2 - s^q - a^q) - b^q
    let p1 = c
        .mul(&ZBiPoly::from_terms(&[(1, 2, 0), (-1, 0, 1)]).sub(&aq))
        .sub(&bq);
    // P2 = c(-s^(q+2) + s + s^(2q)) - b
    let p2 = c
        .mul(&ZBiPoly::from_terms(&[(-1, 2, 1), (1, 1, 0), (1, 0, 2)]))
        .sub(&b);

    NamedPolys {
        alpha,
        beta,
        p1,
        p2,
        p3,
        p_prime,
        gamma,
        cond_ii,
    }
}
