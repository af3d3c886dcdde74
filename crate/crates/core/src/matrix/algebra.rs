use alloc::collections::VecDeque;
use alloc::vec;

use super::{FMatrix, InvariantFactors, Subspace, Vector};
use crate::gf::FieldSpec;

/// Dimension of `{X : XA = AX for all A in mats}`, by rank-nullity on the
/// stacked linear system in the `n^2` entries of `X`.
pub fn commutant_dim(mats: &[FMatrix], field: &FieldSpec) -> usize {
    let Some(first) = mats.first() else {
        return 0;
    };
    let n = first.n();
    let unknowns = n * n;
    let mut equations = Subspace::new(unknowns);
    for a in mats {
        assert_eq!(a.n(), n, "dimension mismatch");
        for i in 0..n {
            for j in 0..n {
                // (XA - AX)_ij = sum_k X_ik A_kj - A_ik X_kj
                let mut row = vec![field.zero(); unknowns];
                for k in 0..n {
                    let l = i * n + k;
                    row[l] = field.add(row[l], a.get(k, j));
                    let r = k * n + j;
                    row[r] = field.sub(row[r], a.get(i, k));
                }
                equations.insert(row, field);
                if equations.dim() == unknowns {
                    return 0;
                }
            }
        }
    }
    unknowns - equations.dim()
}

/// Centraliser dimension from the invariant factors alone:
/// `sum_i (2i - 1) deg f_(k-i+1)`, largest factor first.
pub fn frobenius_commutant_dim(inv: &InvariantFactors) -> usize {
    inv.degrees()
        .iter()
        .rev()
        .enumerate()
        .map(|(i, d)| (2 * i + 1) * d)
        .sum()
}

/// Dimension of the unital algebra generated by `gens`: starting from `I`,
/// basis elements are left-multiplied by each generator in turn
/// (breadth-first) and kept when independent, until closed.
pub fn enveloping_dim(gens: &[FMatrix], field: &FieldSpec) -> usize {
    let Some(first) = gens.first() else {
        return 1;
    };
    let n = first.n();
    let full = n * n;
    let mut span = Subspace::new(full);
    let id = FMatrix::identity(n, field);
    span.insert(id.entries().to_vec(), field);
    let mut queue = VecDeque::from([id]);
    while let Some(b) = queue.pop_front() {
        for g in gens {
            let prod = g.mul(&b, field);
            if span.insert(prod.entries().to_vec(), field) {
                if span.dim() == full {
                    return full;
                }
                queue.push_back(prod);
            }
        }
    }
    span.dim()
}

/// Smallest subspace containing `vectors` and invariant under every
/// generator. Breadth-first closure; the returned basis lists accepted
/// vectors in the order they were found.
pub fn spin(vectors: &[Vector], gens: &[FMatrix], field: &FieldSpec) -> Subspace {
    let n = vectors
        .first()
        .map(|v| v.len())
        .or_else(|| gens.first().map(|g| g.n()))
        .unwrap_or(0);
    let mut space = Subspace::new(n);
    let mut queue = VecDeque::new();
    for v in vectors {
        if space.insert(v.clone(), field) {
            queue.push_back(v.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        for g in gens {
            let w = g.apply(&v, field);
            if space.insert(w.clone(), field) {
                if space.dim() == n {
                    return space;
                }
                queue.push_back(w);
            }
        }
    }
    space
}
