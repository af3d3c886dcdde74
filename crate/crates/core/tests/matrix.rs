use proptest::prelude::*;
use unigen_core::gf::FieldSpec;
use unigen_core::matrix::{commutant_dim, enveloping_dim, frobenius_commutant_dim, spin, FMatrix};

const SHAPES: [(u32, u32); 4] = [(2, 1), (3, 1), (5, 1), (2, 2)];

/// Random `n x n` matrices over one of a few small fields. Entries are drawn
/// from a short range of indices half the time so repeated eigenvalues and
/// nontrivial invariant-factor chains actually occur.
fn matrices(k: usize) -> impl Strategy<Value = (FieldSpec, Vec<FMatrix>)> {
    (0..SHAPES.len(), 1usize..=6, any::<bool>()).prop_flat_map(move |(i, n, sparse)| {
        let (p, f) = SHAPES[i];
        let field = FieldSpec::new(p, f, None).unwrap();
        let top = if sparse { 2 } else { field.size() };
        proptest::collection::vec(proptest::collection::vec(0..top, n * n), k).prop_map(move |ms| {
            let mats = ms
                .iter()
                .map(|idx| {
                    let rows = idx
                        .chunks(n)
                        .map(|r| r.iter().map(|&j| field.element(j)).collect())
                        .collect();
                    FMatrix::from_rows(rows).unwrap()
                })
                .collect();
            (field.clone(), mats)
        })
    })
}

proptest! {
    #[test]
    fn cayley_hamilton((f, m) in matrices(1)) {
        let a = &m[0];
        let chi = a.char_poly(&f);
        prop_assert_eq!(chi.degree(), Some(a.n()));
        prop_assert!(a.eval_poly(&chi, &f).entries().iter().all(|x| x.is_zero()));
        prop_assert_eq!(chi.coeff(0, &f), if a.n() % 2 == 0 { a.det(&f) } else { f.neg(a.det(&f)) });
    }

    #[test]
    fn invariant_factors_multiply_to_char_poly((f, m) in matrices(1)) {
        let a = &m[0];
        let inv = a.invariant_factors(&f);
        prop_assert!(inv.is_chain(&f));
        prop_assert_eq!(inv.product(&f), a.char_poly(&f));
        let mu = a.min_poly(&f);
        prop_assert!(a.eval_poly(&mu, &f).entries().iter().all(|x| x.is_zero()));
        prop_assert_eq!(Some(&mu), inv.factors().last());
    }

    #[test]
    fn commutant_matches_frobenius_formula((f, m) in matrices(1)) {
        let a = &m[0];
        prop_assert_eq!(commutant_dim(std::slice::from_ref(a), &f), frobenius_commutant_dim(&a.invariant_factors(&f)));
    }

    #[test]
    fn full_algebra_has_scalar_commutant((f, m) in matrices(2)) {
        let n = m[0].n();
        if enveloping_dim(&m, &f) == n * n {
            prop_assert_eq!(commutant_dim(&m, &f), 1);
        }
    }

    #[test]
    fn spun_subspace_is_invariant((f, m) in matrices(3)) {
        let v = m[2].column(0);
        let s = spin(std::slice::from_ref(&v), &m[..2], &f);
        for b in s.basis() {
            for g in &m[..2] {
                prop_assert!(s.contains(&g.apply(b, &f), &f));
            }
        }
        prop_assert!(s.contains(&v, &f));
    }

    #[test]
    fn inverse_and_rank((f, m) in matrices(1)) {
        let a = &m[0];
        let n = a.n();
        match a.inverse(&f) {
            Ok(inv) => {
                prop_assert!(a.mul(&inv, &f).is_identity(&f));
                prop_assert_eq!(a.rank(&f), n);
            }
            Err(_) => {
                prop_assert!(a.det(&f).is_zero());
                prop_assert_eq!(a.rank(&f) + a.kernel_basis(&f).len(), n);
            }
        }
    }
}

#[test]
fn jordan_block_invariants() {
    // J_3(1) (+) J_1(1) over GF(3): factors (t - 1), (t - 1)^3
    let f = FieldSpec::new(3, 1, None).unwrap();
    let m = FMatrix::from_ints(
        &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]],
        &f,
    )
    .unwrap();
    let inv = m.invariant_factors(&f);
    assert_eq!(inv.degrees(), vec![1, 3]);
    // 1*3 + 3*1
    assert_eq!(commutant_dim(std::slice::from_ref(&m), &f), 6);
    assert_eq!(m.order(100, &f).unwrap().finite(), Some(3));
}
