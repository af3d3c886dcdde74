use num_bigint::BigInt;
use proptest::prelude::*;
use unigen_core::gf::FieldSpec;
use unigen_core::zpoly::{resultant_wrt_second, sylvester, ZBiPoly, ZPoly};

/// Cofactor expansion along the first row; exponential, but independent of
/// the fraction-free elimination used by the library.
fn laplace(m: &[Vec<ZPoly>]) -> ZPoly {
    let n = m.len();
    if n == 0 {
        return ZPoly::one();
    }
    let mut acc = ZPoly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<ZPoly>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&laplace(&minor));
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// Small random polynomial with degree in `v` exactly `dv` (leading
/// coefficient a nonzero constant).
fn bipoly(dv: u32) -> impl Strategy<Value = ZBiPoly> {
    (
        proptest::collection::vec((-3i64..=3, 0u32..=2, 0u32..dv.max(1)), 0..5),
        1i64..=2,
        any::<bool>(),
    )
        .prop_map(move |(terms, lead, neg)| {
            let mut t: Vec<(i64, u32, u32)> = if dv == 0 { Vec::new() } else { terms };
            t.push((if neg { -lead } else { lead }, 0, dv));
            ZBiPoly::from_terms(&t)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matches_cofactor_oracle(p in bipoly(2), q in bipoly(3)) {
        let (m, n) = (p.degree_in_v().unwrap() as usize, q.degree_in_v().unwrap() as usize);
        let det = laplace(&sylvester(&p, &q, m, n));
        prop_assert_eq!(resultant_wrt_second(&p, &q).unwrap(), ZBiPoly::from_u_poly(&det));
    }

    #[test]
    fn multiplicative(f in bipoly(1), g in bipoly(2), h in bipoly(2)) {
        let lhs = resultant_wrt_second(&f.mul(&g), &h).unwrap();
        let rhs = resultant_wrt_second(&f, &h).unwrap().mul(&resultant_wrt_second(&g, &h).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn vanishes_at_common_roots(a in bipoly(1), b in bipoly(1), u0 in 0i64..7, v0 in 0i64..7) {
        // p and q both vanish at (u0, v0) over GF(7)
        let f = FieldSpec::new(7, 1, None).unwrap();
        let lin_v = ZBiPoly::from_terms(&[(1, 0, 1), (-v0, 0, 0)]);
        let lin_u = ZBiPoly::from_terms(&[(1, 1, 0), (-u0, 0, 0)]);
        let p = lin_v.mul(&a).add(&lin_u);
        let q = lin_v.mul(&b).add(&lin_u.scale(2));
        let r = resultant_wrt_second(&p, &q).unwrap();
        prop_assert!(r.eval(&f, f.from_int(u0), f.zero()).is_zero());
    }

    #[test]
    fn ring_laws(a in bipoly(2), b in bipoly(1), c in bipoly(1)) {
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.pow(3), a.mul(&a).mul(&a));
        prop_assert_eq!(a.swap().swap(), a);
    }
}

#[test]
fn large_coefficients_are_exact() {
    // (u + 10^12)^4 has a 49-digit constant term
    let big = ZBiPoly::from_terms(&[(1, 1, 0), (1_000_000_000_000, 0, 0)]).pow(4);
    let expect = BigInt::from(10u32).pow(48);
    assert_eq!(big.coefficient(0, 0), expect);
    // Res_v(v - g(u), v - h(u)) = h - g
    let g = ZBiPoly::from_terms(&[(1, 0, 1)]).sub(&big);
    let h = ZBiPoly::from_terms(&[(1, 0, 1), (-3, 2, 0)]);
    let r = resultant_wrt_second(&g, &h).unwrap();
    assert_eq!(r, big.sub(&ZBiPoly::from_terms(&[(3, 2, 0)])));
}
