//! Exact arithmetic in `GF(p^(2f))`, the quadratic extension `F_{q^2}` of
//! `F_q` with `q = p^f`.
//!
//! Elements are residue classes of polynomials over `GF(p)` modulo a monic
//! irreducible `modulus`, stored as fixed-capacity coefficient arrays so that
//! [`Fel`] is `Copy`. Every operation goes through the owning [`FieldSpec`].

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::UPoly;
use crate::primepoly;

/// Largest supported extension degree over the prime field.
pub const MAX_DEG: usize = 24;

/// Residue-polynomial element of a [`FieldSpec`], constant term first.
///
/// Slots at and beyond the field degree are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Fel {
    c: [u16; MAX_DEG],
}

impl Fel {
    const ZERO: Fel = Fel { c: [0; MAX_DEG] };

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }

    /// Raw coefficient slot `i` (zero past the field degree).
    pub fn coeff(&self, i: usize) -> u32 {
        self.c.get(i).copied().unwrap_or(0) as u32
    }
}

/// Description of `GF(p^deg)` together with the data the constructions need.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    f: u32,
    deg: usize,
    /// Monic, constant term first, length `deg + 1`.
    modulus: Vec<u32>,
    omega: Fel,
    q: u64,
    size: u64,
    /// Distinct prime divisors of `size - 1`.
    unit_primes: Vec<u64>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power `q` into `(p, f)` with `q = p^f`.
pub fn split_prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = primepoly::prime_factors(q);
    if p.len() != 1 || p[0] > u16::MAX as u64 {
        return None;
    }
    let (p, mut rest, mut f) = (p[0], q, 0u32);
    while rest > 1 {
        rest /= p;
        f += 1;
    }
    Some((p as u32, f))
}

impl FieldSpec {
    /// Builds `GF(p^(2f))`.
    ///
    /// With `modulus = None` the lexicographically smallest monic irreducible
    /// of degree `2f` is used (non-leading coefficients compared from the
    /// highest degree down). A supplied modulus is reduced into `[0, p)`
    /// first, so `-1` may be written for `p - 1`.
    pub fn new(p: u32, f: u32, modulus: Option<&[i64]>) -> Result<Self> {
        if !is_prime(p as u64) || p > u16::MAX as u32 {
            return Err(Error::NotPrime(p as u64));
        }
        if f == 0 {
            return Err(Error::InvalidExtension(f));
        }
        let deg = 2 * f as usize;
        if deg > MAX_DEG {
            return Err(Error::FieldTooLarge);
        }
        let size = (p as u64)
            .checked_pow(deg as u32)
            .filter(|s| *s < (1u64 << 62))
            .ok_or(Error::FieldTooLarge)?;
        let pp = p as u64;
        let modulus: Vec<u64> = match modulus {
            None => primepoly::smallest_irreducible(deg, pp),
            Some(m) => {
                let m: Vec<u64> = m.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect();
                let m = primepoly::trim(m);
                if m.len() != deg + 1 {
                    return Err(Error::ModulusWrongDegree {
                        expected: deg,
                        found: m.len().saturating_sub(1),
                    });
                }
                if m[deg] != 1 {
                    return Err(Error::ModulusNotMonic);
                }
                if !primepoly::is_irreducible(&m, pp) {
                    return Err(Error::ModulusReducible);
                }
                m
            }
        };
        let mut field = FieldSpec {
            p,
            f,
            deg,
            modulus: modulus.iter().map(|&c| c as u32).collect(),
            omega: Fel::ZERO,
            q: pp.pow(f),
            size,
            unit_primes: primepoly::prime_factors(size - 1),
        };
        field.omega = field.find_omega();
        Ok(field)
    }

    fn find_omega(&self) -> Fel {
        if self.p == 3 {
            return self.one();
        }
        let e = (self.size - 1) / 3;
        (1..self.size)
            .map(|i| self.pow(self.element(i), e))
            .find(|w| *w != self.one())
            .expect("3 divides p^(2f) - 1 for p != 3")
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    /// Extension degree over `GF(p)`.
    pub fn degree(&self) -> usize {
        self.deg
    }

    /// `q = p^f`.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Number of elements, `q^2`.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Constant term first, leading 1 included.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Order-3 element (or 1 in characteristic 3).
    pub fn omega(&self) -> Fel {
        self.omega
    }

    pub fn zero(&self) -> Fel {
        Fel::ZERO
    }

    pub fn one(&self) -> Fel {
        self.from_int(1)
    }

    /// The class of `t`, a root of the modulus.
    pub fn generator(&self) -> Fel {
        let mut x = Fel::ZERO;
        x.c[1] = 1;
        x
    }

    pub fn from_int(&self, v: i64) -> Fel {
        let mut x = Fel::ZERO;
        x.c[0] = v.rem_euclid(self.p as i64) as u16;
        x
    }

    /// Element with the given coefficients (constant first); values are
    /// reduced mod `p`, missing high coefficients are zero.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<Fel> {
        if coeffs.len() > self.deg {
            return Err(Error::BadCoefficients);
        }
        let mut x = Fel::ZERO;
        for (slot, &c) in x.c.iter_mut().zip(coeffs) {
            *slot = c.rem_euclid(self.p as i64) as u16;
        }
        Ok(x)
    }

    /// The `deg` coefficients of `x`, constant first.
    pub fn coeffs(&self, x: Fel) -> Vec<u32> {
        x.c[..self.deg].iter().map(|&c| c as u32).collect()
    }

    /// Position of `x` in the canonical enumeration: `sum c_i p^i`.
    pub fn index(&self, x: Fel) -> u64 {
        x.c[..self.deg]
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p as u64 + c as u64)
    }

    /// Inverse of [`FieldSpec::index`].
    pub fn element(&self, mut idx: u64) -> Fel {
        let mut x = Fel::ZERO;
        for slot in x.c.iter_mut().take(self.deg) {
            *slot = (idx % self.p as u64) as u16;
            idx /= self.p as u64;
        }
        x
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Fel> + '_ {
        (0..self.size).map(move |i| self.element(i))
    }

    pub fn add(&self, a: Fel, b: Fel) -> Fel {
        let mut out = Fel::ZERO;
        let p = self.p;
        for i in 0..self.deg {
            out.c[i] = ((a.c[i] as u32 + b.c[i] as u32) % p) as u16;
        }
        out
    }

    pub fn sub(&self, a: Fel, b: Fel) -> Fel {
        let mut out = Fel::ZERO;
        let p = self.p;
        for i in 0..self.deg {
            out.c[i] = ((a.c[i] as u32 + p - b.c[i] as u32) % p) as u16;
        }
        out
    }

    pub fn neg(&self, a: Fel) -> Fel {
        self.sub(Fel::ZERO, a)
    }

    pub fn mul(&self, a: Fel, b: Fel) -> Fel {
        let d = self.deg;
        let p = self.p as u64;
        let mut prod = [0u64; 2 * MAX_DEG];
        for i in 0..d {
            let x = a.c[i] as u64;
            if x == 0 {
                continue;
            }
            for j in 0..d {
                prod[i + j] += x * b.c[j] as u64;
            }
        }
        // t^d = -(m_0 + ... + m_{d-1} t^{d-1})
        for k in (d..2 * d - 1).rev() {
            let lead = prod[k] % p;
            if lead == 0 {
                continue;
            }
            for i in 0..d {
                let m = self.modulus[i] as u64;
                if m != 0 {
                    prod[k - d + i] += (p - m) * lead;
                }
            }
        }
        let mut out = Fel::ZERO;
        for i in 0..d {
            out.c[i] = (prod[i] % p) as u16;
        }
        out
    }

    pub fn square(&self, a: Fel) -> Fel {
        self.mul(a, a)
    }

    pub fn pow(&self, a: Fel, mut e: u64) -> Fel {
        let mut r = self.one();
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    /// Signed exponent; negative powers invert first.
    pub fn pow_i(&self, a: Fel, e: i64) -> Fel {
        if e < 0 {
            self.pow(self.inv(a), e.unsigned_abs())
        } else {
            self.pow(a, e as u64)
        }
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    ///
    /// Panics if `a` is zero; use [`FieldSpec::try_inv`] when that can happen.
    pub fn inv(&self, a: Fel) -> Fel {
        self.try_inv(a).expect("inverse of zero")
    }

    pub fn try_inv(&self, a: Fel) -> Result<Fel> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(self.pow(a, self.size - 2))
    }

    pub fn div(&self, a: Fel, b: Fel) -> Fel {
        self.mul(a, self.inv(b))
    }

    /// `x -> x^p`.
    pub fn frobenius_p(&self, x: Fel) -> Fel {
        self.pow(x, self.p as u64)
    }

    /// The involution `sigma: x -> x^q`, as `f` successive `p`-th powers.
    pub fn frobenius_q(&self, x: Fel) -> Fel {
        (0..self.f).fold(x, |acc, _| self.frobenius_p(acc))
    }

    /// `x^(q+1)`, which lies in `GF(q)`.
    pub fn norm(&self, x: Fel) -> Fel {
        self.mul(x, self.frobenius_q(x))
    }

    /// Whether `x` lies in `GF(q)`, i.e. is fixed by sigma.
    pub fn in_subfield(&self, x: Fel) -> bool {
        self.frobenius_q(x) == x
    }

    /// Whether `x` lies in `GF(p)`.
    pub fn in_prime_field(&self, x: Fel) -> bool {
        x.c[1..].iter().all(|&c| c == 0)
    }

    /// Multiplicative order, by stripping prime factors of `p^deg - 1`.
    pub fn element_order(&self, x: Fel) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        let one = self.one();
        let mut ord = self.size - 1;
        for &r in &self.unit_primes {
            while ord.is_multiple_of(r) && self.pow(x, ord / r) == one {
                ord /= r;
            }
        }
        Ok(ord)
    }

    /// Monic minimal polynomial of `x` over `GF(p)`, from the first linear
    /// dependence among `1, x, x^2, ...` viewed as vectors over `GF(p)`.
    /// Coefficients are prime-field elements of this field.
    pub fn min_poly_prime(&self, x: Fel) -> UPoly {
        let p = self.p as u64;
        let d = self.deg;
        // Reduced rows: (vector over GF(p), pivot, combination of powers).
        let mut rows: Vec<(Vec<u64>, usize, Vec<u64>)> = Vec::new();
        let mut power = self.one();
        for k in 0..=d {
            let mut v: Vec<u64> = power.c[..d].iter().map(|&c| c as u64).collect();
            let mut combo = vec![0u64; d + 1];
            combo[k] = 1;
            for (row, pivot, rc) in &rows {
                let factor = v[*pivot];
                if factor == 0 {
                    continue;
                }
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi = (*vi + p - factor * ri % p) % p;
                }
                for (ci, ri) in combo.iter_mut().zip(rc) {
                    *ci = (*ci + p - factor * ri % p) % p;
                }
            }
            match v.iter().position(|&c| c != 0) {
                None => {
                    combo.truncate(k + 1);
                    let coeffs = combo.iter().map(|&c| self.from_int(c as i64)).collect();
                    return UPoly::from_coeffs(coeffs);
                }
                Some(pivot) => {
                    let inv = primepoly::inv_mod(v[pivot], p);
                    for c in v.iter_mut().chain(combo.iter_mut()) {
                        *c = *c * inv % p;
                    }
                    rows.push((v, pivot, combo));
                }
            }
            power = self.mul(power, x);
        }
        unreachable!("degree of a minimal polynomial is at most the extension degree")
    }

    /// `F_p[x] = F`, i.e. the minimal polynomial of `x` has full degree.
    pub fn generates_full(&self, x: Fel) -> bool {
        self.min_poly_prime(x).degree() == Some(self.deg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf9() -> FieldSpec {
        FieldSpec::new(3, 1, Some(&[2, 1, 1])).unwrap()
    }

    #[test]
    fn gf4_default_modulus() {
        let f = FieldSpec::new(2, 1, None).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.size(), 4);
        assert_eq!(f.q(), 2);
        assert_eq!(f.element_order(f.omega()).unwrap(), 3);
    }

    #[test]
    fn gf9_frobenius_of_t() {
        let f = gf9();
        let a = f.generator();
        // a^2 = 2a + 1, a^3 = 2a + 2
        assert_eq!(f.square(a), f.from_coeffs(&[1, 2]).unwrap());
        assert_eq!(f.frobenius_q(a), f.from_coeffs(&[2, 2]).unwrap());
        assert_eq!(f.omega(), f.one());
    }

    #[test]
    fn gf9_min_polys() {
        let f = gf9();
        let a = f.generator();
        let m = f.min_poly_prime(a);
        let expect: Vec<Fel> = [2, 1, 1].iter().map(|&c| f.from_int(c)).collect();
        assert_eq!(m.coeffs(), &expect[..]);
        let a3 = f.pow(a, 3);
        assert_eq!(f.min_poly_prime(a3).degree(), Some(2));
        assert!(f.generates_full(a3));
        assert!(!f.generates_full(f.from_int(2)));
        let two = f.from_int(2);
        let lin = f.min_poly_prime(two);
        assert_eq!(lin.coeffs(), &[f.from_int(-2), f.one()]);
    }

    #[test]
    fn gf25_primitive_count() {
        let f = FieldSpec::new(5, 1, None).unwrap();
        let n = f
            .elements()
            .skip(1)
            .filter(|&x| f.element_order(x).unwrap() == 24)
            .count();
        assert_eq!(n, 8);
        // order of t by brute force
        let t = f.generator();
        let mut k = 1;
        let mut acc = t;
        while acc != f.one() {
            acc = f.mul(acc, t);
            k += 1;
        }
        assert_eq!(f.element_order(t).unwrap(), k);
        assert_eq!(24 % k, 0);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(FieldSpec::new(4, 1, None), Err(Error::NotPrime(4)));
        assert_eq!(
            FieldSpec::new(3, 1, Some(&[1, 0, 0, 1])).unwrap_err(),
            Error::ModulusWrongDegree {
                expected: 2,
                found: 3
            }
        );
        // t^2 - 1 = (t-1)(t+1)
        assert_eq!(
            FieldSpec::new(3, 1, Some(&[-1, 0, 1])).unwrap_err(),
            Error::ModulusReducible
        );
        assert_eq!(
            FieldSpec::new(3, 1, Some(&[2, 1, 2])).unwrap_err(),
            Error::ModulusNotMonic
        );
        assert_eq!(f_zero_order(), Err(Error::ZeroElement));
    }

    fn f_zero_order() -> Result<u64> {
        let f = gf9();
        f.element_order(f.zero())
    }

    #[test]
    fn split_powers() {
        assert_eq!(split_prime_power(16), Some((2, 4)));
        assert_eq!(split_prime_power(23), Some((23, 1)));
        assert_eq!(split_prime_power(12), None);
        assert_eq!(split_prime_power(1), None);
    }

    #[test]
    fn index_roundtrip() {
        let f = FieldSpec::new(2, 2, None).unwrap();
        for (i, x) in f.elements().enumerate() {
            assert_eq!(f.index(x), i as u64);
        }
    }
}
