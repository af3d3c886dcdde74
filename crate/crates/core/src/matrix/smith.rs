use alloc::vec::Vec;

use super::FMatrix;
use crate::gf::FieldSpec;
use crate::poly::UPoly;

/// Monic nontrivial invariant factors `f_1 | f_2 | ... | f_k` of `tI - A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantFactors {
    factors: Vec<UPoly>,
}

impl InvariantFactors {
    pub fn factors(&self) -> &[UPoly] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(&self, field: &FieldSpec) -> UPoly {
        self.factors
            .iter()
            .fold(UPoly::constant(field.one()), |acc, f| acc.mul(f, field))
    }

    /// Each factor is monic and divides the next.
    pub fn is_chain(&self, field: &FieldSpec) -> bool {
        self.factors
            .iter()
            .all(|f| f.leading() == Some(field.one()))
            && self.factors.windows(2).all(|w| w[0].divides(&w[1], field))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors
            .iter()
            .map(|f| f.degree().unwrap_or(0))
            .collect()
    }
}

type PolyMatrix = Vec<Vec<UPoly>>;

fn min_degree_entry(m: &PolyMatrix, k: usize) -> Option<(usize, usize)> {
    let n = m.len();
    let mut best: Option<(usize, usize, usize)> = None;
    for i in k..n {
        for j in k..n {
            if let Some(d) = m[i][j].degree() {
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Smith normal form of `tI - a` over `F[t]`: the pivot is always the
/// lowest-degree nonzero entry (first in row-major order on ties), and rows
/// and columns are cleared by exact polynomial division.
pub(super) fn invariant_factors(a: &FMatrix, field: &FieldSpec) -> InvariantFactors {
    let n = a.n();
    let t = UPoly::monomial(field.one(), 1, field);
    let mut m: PolyMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = UPoly::constant(a.get(i, j));
                    if i == j {
                        t.sub(&c, field)
                    } else {
                        c.neg(field)
                    }
                })
                .collect()
        })
        .collect();

    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        while let Some((pi, pj)) = min_degree_entry(&m, k) {
            m.swap(k, pi);
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
            let pivot = m[k][k].clone();
            let mut clean = true;
            for i in k + 1..n {
                if m[i][k].is_zero() {
                    continue;
                }
                let (q, r) = m[i][k].divmod(&pivot, field).expect("pivot is nonzero");
                for j in k..n {
                    let s = q.mul(&m[k][j], field);
                    m[i][j] = m[i][j].sub(&s, field);
                }
                clean &= r.is_zero();
            }
            for j in k + 1..n {
                if m[k][j].is_zero() {
                    continue;
                }
                let (q, r) = m[k][j].divmod(&pivot, field).expect("pivot is nonzero");
                for row in m.iter_mut().skip(k) {
                    let s = q.mul(&row[k], field);
                    row[j] = row[j].sub(&s, field);
                }
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            let offending =
                (k + 1..n).find(|&i| (k + 1..n).any(|j| !pivot.divides(&m[i][j], field)));
            match offending {
                Some(i) => {
                    for j in k..n {
                        let s = m[i][j].clone();
                        m[k][j] = m[k][j].add(&s, field);
                    }
                }
                None => break,
            }
        }
        diag.push(m[k][k].monic(field));
    }
    InvariantFactors {
        factors: diag.into_iter().filter(|f| !f.is_one(field)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_matrix_has_repeated_linear_factors() {
        let f = FieldSpec::new(3, 1, Some(&[2, 1, 1])).unwrap();
        let m = FMatrix::scalar(3, f.from_int(2), &f);
        let inv = m.invariant_factors(&f);
        assert_eq!(inv.len(), 3);
        assert!(inv
            .factors()
            .iter()
            .all(|p| *p == UPoly::linear(f.from_int(2), &f)));
    }

    #[test]
    fn companion_is_cyclic() {
        let f = FieldSpec::new(2, 1, None).unwrap();
        let p = UPoly::from_ints(&[1, 0, 1, 1, 0, 1], &f);
        let inv = FMatrix::companion(&p, &f).invariant_factors(&f);
        assert_eq!(inv.factors(), &[p]);
    }

    #[test]
    fn jordan_block_plus_eigenvalue() {
        // diag(J_2(1), 1): factors (t-1), (t-1)^2
        let f = FieldSpec::new(5, 1, None).unwrap();
        let m = FMatrix::from_ints(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]], &f).unwrap();
        let inv = m.invariant_factors(&f);
        let l = UPoly::linear(f.one(), &f);
        assert_eq!(inv.factors(), &[l.clone(), l.mul(&l, &f)]);
        assert!(inv.is_chain(&f));
        assert_eq!(inv.product(&f), m.char_poly(&f));
    }
}
