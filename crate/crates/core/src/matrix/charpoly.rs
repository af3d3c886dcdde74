use alloc::vec::Vec;

use super::FMatrix;
use crate::gf::{Fel, FieldSpec};
use crate::poly::UPoly;

/// Similarity reduction to upper Hessenberg form, pivoting on any nonzero
/// subdiagonal entry.
fn hessenberg(m: &FMatrix, field: &FieldSpec) -> Vec<Vec<Fel>> {
    let n = m.n();
    let mut h: Vec<Vec<Fel>> = m.rows().map(|r| r.to_vec()).collect();
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| !h[i][j].is_zero()) else {
            continue;
        };
        if piv != j + 1 {
            h.swap(piv, j + 1);
            for row in h.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = field.inv(h[j + 1][j]);
        for i in j + 2..n {
            let t = field.mul(h[i][j], inv);
            if t.is_zero() {
                continue;
            }
            // row_i -= t * row_{j+1}, then col_{j+1} += t * col_i
            for k in 0..n {
                let s = field.mul(t, h[j + 1][k]);
                h[i][k] = field.sub(h[i][k], s);
            }
            for row in h.iter_mut() {
                let s = field.mul(t, row[i]);
                row[j + 1] = field.add(row[j + 1], s);
            }
        }
    }
    h
}

/// `det(tI - m)` via the Hessenberg determinant recurrence. Uses field
/// operations only, so it is valid in every characteristic.
pub(super) fn char_poly(m: &FMatrix, field: &FieldSpec) -> UPoly {
    let n = m.n();
    let h = hessenberg(m, field);
    let t = UPoly::monomial(field.one(), 1, field);
    // chain[k] = characteristic polynomial of the leading k x k block
    let mut chain: Vec<UPoly> = Vec::with_capacity(n + 1);
    chain.push(UPoly::constant(field.one()));
    for k in 1..=n {
        let d = t.sub(&UPoly::constant(h[k - 1][k - 1]), field);
        let mut pk = d.mul(&chain[k - 1], field);
        let mut prod = field.one();
        for i in (1..k).rev() {
            prod = field.mul(prod, h[i][i - 1]);
            if prod.is_zero() {
                break;
            }
            let coeff = field.mul(h[i - 1][k - 1], prod);
            pk = pk.sub(&chain[i - 1].scale(coeff, field), field);
        }
        chain.push(pk);
    }
    chain.pop().expect("chain has n + 1 entries")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn identity_is_power_of_linear() {
        let f = FieldSpec::new(3, 1, Some(&[2, 1, 1])).unwrap();
        let cp = FMatrix::identity(6, &f).char_poly(&f);
        let expect = UPoly::linear(f.one(), &f).pow(6, &f);
        assert_eq!(cp, expect);
    }

    #[test]
    fn companion_recovers_polynomial() {
        let f = FieldSpec::new(5, 1, None).unwrap();
        let p = UPoly::from_coeffs(vec![
            f.generator(),
            f.from_int(3),
            f.zero(),
            f.add(f.generator(), f.one()),
            f.one(),
        ]);
        assert_eq!(FMatrix::companion(&p, &f).char_poly(&f), p);
    }

    #[test]
    fn zero_subdiagonal_block() {
        // block upper triangular; exercises the early break in the recurrence
        let f = FieldSpec::new(2, 1, None).unwrap();
        let m = FMatrix::from_ints(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 0]], &f).unwrap();
        // (t - 1)^2 t
        let expect = UPoly::from_ints(&[0, 1, 0, 1], &f);
        assert_eq!(m.char_poly(&f), expect);
    }
}
