//! Univariate polynomials over a [`FieldSpec`].

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{Fel, FieldSpec};

/// Dense polynomial, constant term first, with no trailing zeros. The zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UPoly {
    coeffs: Vec<Fel>,
}

impl UPoly {
    pub fn from_coeffs(mut coeffs: Vec<Fel>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    /// Integer coefficients mapped into the prime field.
    pub fn from_ints(coeffs: &[i64], field: &FieldSpec) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Fel) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: Fel, k: usize, field: &FieldSpec) -> Self {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// `t - r`.
    pub fn linear(r: Fel, field: &FieldSpec) -> Self {
        Self::from_coeffs(vec![field.neg(r), field.one()])
    }

    pub fn coeffs(&self) -> &[Fel] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero past the degree).
    pub fn coeff(&self, i: usize, field: &FieldSpec) -> Fel {
        self.coeffs.get(i).copied().unwrap_or(field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<Fel> {
        self.coeffs.last().copied()
    }

    pub fn is_one(&self, field: &FieldSpec) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == field.one()
    }

    pub fn add(&self, other: &Self, field: &FieldSpec) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs(
            (0..n)
                .map(|i| field.add(self.coeff(i, field), other.coeff(i, field)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self, field: &FieldSpec) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs(
            (0..n)
                .map(|i| field.sub(self.coeff(i, field), other.coeff(i, field)))
                .collect(),
        )
    }

    pub fn neg(&self, field: &FieldSpec) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&c| field.neg(c)).collect())
    }

    pub fn scale(&self, c: Fel, field: &FieldSpec) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&x| field.mul(x, c)).collect())
    }

    pub fn mul(&self, other: &Self, field: &FieldSpec) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn pow(&self, mut e: u32, field: &FieldSpec) -> Self {
        let mut r = Self::constant(field.one());
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b, field);
            }
            b = b.mul(&b, field);
            e >>= 1;
        }
        r
    }

    /// Quotient and remainder.
    pub fn divmod(&self, divisor: &Self, field: &FieldSpec) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = field.inv(divisor.coeffs[dd]);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![field.zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let factor = field.mul(rem[k], lead_inv);
            if factor.is_zero() {
                continue;
            }
            quot[k - dd] = factor;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                let j = k - dd + i;
                rem[j] = field.sub(rem[j], field.mul(factor, d));
            }
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Self, field: &FieldSpec) -> Result<Self> {
        Ok(self.divmod(divisor, field)?.1)
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self, field: &FieldSpec) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(field.inv(l), field),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self, field: &FieldSpec) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b, field).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic(field)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Fel, field: &FieldSpec) -> Fel {
        self.coeffs
            .iter()
            .rev()
            .fold(field.zero(), |acc, &c| field.add(field.mul(acc, x), c))
    }

    /// Whether `self` divides `other` exactly.
    pub fn divides(&self, other: &Self, field: &FieldSpec) -> bool {
        match other.rem(self, field) {
            Ok(r) => r.is_zero(),
            Err(_) => other.is_zero(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf9() -> FieldSpec {
        FieldSpec::new(3, 1, Some(&[2, 1, 1])).unwrap()
    }

    #[test]
    fn gcd_and_product() {
        let f = gf9();
        let t2m1 = UPoly::from_ints(&[-1, 0, 1], &f);
        let tm1 = UPoly::from_ints(&[-1, 1], &f);
        let tp1 = UPoly::from_ints(&[1, 1], &f);
        assert_eq!(t2m1.gcd(&tm1, &f), tm1);
        assert_eq!(tm1.mul(&tp1, &f), t2m1);
        assert_eq!(UPoly::zero().gcd(&UPoly::zero(), &f), UPoly::zero());
    }

    #[test]
    fn modulus_vanishes_at_generator() {
        let f = gf9();
        let m = UPoly::from_ints(&[2, 1, 1], &f);
        assert!(m.eval(f.generator(), &f).is_zero());
    }

    #[test]
    fn divmod_identity() {
        let f = gf9();
        let a = UPoly::from_coeffs(vec![
            f.generator(),
            f.one(),
            f.from_int(2),
            f.one(),
            f.generator(),
        ]);
        let b = UPoly::from_ints(&[1, 2, 1], &f);
        let (q, r) = a.divmod(&b, &f).unwrap();
        assert_eq!(q.mul(&b, &f).add(&r, &f), a);
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(a.divmod(&UPoly::zero(), &f), Err(Error::DivisionByZero));
    }
}
