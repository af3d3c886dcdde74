//! The polynomial identities behind the parameter conditions, checked
//! exactly over `Z[u, v]` and, where they are statements about field
//! elements, by evaluation at every element of small fields.

use alloc::string::String;
use alloc::vec::Vec;

use crate::construct::{build_su6, expected_gram_det, gamma_factors};
use crate::error::Result;
use crate::gf::{split_prime_power, FieldSpec};
use crate::verify::{check_conditions, gamma_value};
use crate::zpoly::{named_polys, resultant_wrt_second, ZBiPoly};

/// Largest `q` for which the element-wise identities are evaluated.
pub const IDENTITY_SWEEP_MAX_Q: u64 = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    /// Computed value or the first counterexample, for reporting.
    pub detail: String,
}

impl IdentityCheck {
    fn exact(name: &'static str, statement: &'static str, got: &ZBiPoly, want: &ZBiPoly) -> Self {
        IdentityCheck {
            name,
            statement,
            passed: got == want,
            detail: alloc::format!("{got}"),
        }
    }
}

/// `u^3 - k` as a polynomial in the first variable.
fn cube_minus(k: i64) -> ZBiPoly {
    ZBiPoly::from_terms(&[(1, 3, 0), (-k, 0, 0)])
}

/// Identities over `Z[u, v]`: the two resultants, the factorisations of
/// `P1` and `P2` through `P'`, `u^3 - 8 = (u - 2)(u^2 + 2u + 4)` and the
/// reduction of `beta` modulo 2.
pub fn symbolic_identities() -> Result<Vec<IdentityCheck>> {
    let n = named_polys();
    let mut out = Vec::new();

    let r = resultant_wrt_second(&n.alpha, &n.beta)?;
    let want = cube_minus(8).pow(3).scale(64);
    out.push(IdentityCheck::exact(
        "res_alpha_beta",
        "Res_v(alpha, beta) = 64(u^3 - 8)^3",
        &r,
        &want,
    ));

    let r = resultant_wrt_second(&n.p3, &n.p_prime)?;
    let want = cube_minus(1).mul(&cube_minus(4).pow(3));
    out.push(IdentityCheck::exact(
        "res_p3_pprime",
        "Res_v(P3, P') = (u^3 - 1)(u^3 - 4)^3",
        &r,
        &want,
    ));

    // uv - 3
    let uv3 = ZBiPoly::from_terms(&[(1, 1, 1), (-3, 0, 0)]);
    let want = ZBiPoly::from_terms(&[(-1, 2, 1)]).mul(&uv3).mul(&n.p_prime);
    out.push(IdentityCheck::exact(
        "p2_factor",
        "P2 = -u^2 v (uv - 3) P'",
        &n.p2,
        &want,
    ));
    let want = ZBiPoly::from_terms(&[(-1, 1, 2)])
        .mul(&uv3)
        .mul(&n.p_prime.swap());
    out.push(IdentityCheck::exact(
        "p1_factor",
        "P1 = -u v^2 (uv - 3) P'(v, u)",
        &n.p1,
        &want,
    ));

    let lhs = cube_minus(8);
    let rhs = ZBiPoly::from_terms(&[(1, 1, 0), (-2, 0, 0)]).mul(&ZBiPoly::from_terms(&[
        (1, 2, 0),
        (2, 1, 0),
        (4, 0, 0),
    ]));
    out.push(IdentityCheck::exact(
        "cube_factor",
        "u^3 - 8 = (u - 2)(u^2 + 2u + 4)",
        &rhs,
        &lhs,
    ));

    let want = ZBiPoly::from_terms(&[(1, 2, 2), (1, 0, 3)]);
    out.push(IdentityCheck::exact(
        "beta_mod_2",
        "beta = v^2 (u^2 + v) mod 2",
        &n.beta.reduce_mod(2),
        &want,
    ));

    Ok(out)
}

/// `gamma = gamma_0 gamma_1 gamma_2` at every element of `F_{q^2}`, and
/// `det J = -c^3 gamma^2` at every admissible element, for `q <= 9`.
pub fn field_identities() -> Result<Vec<IdentityCheck>> {
    let mut gamma_bad = None;
    let mut det_bad = None;
    let mut fields = 0;
    for q in 2..=IDENTITY_SWEEP_MAX_Q {
        let Some((p, f)) = split_prime_power(q) else {
            continue;
        };
        let field = FieldSpec::new(p, f, None)?;
        fields += 1;
        for a in field.elements() {
            let prod = gamma_factors(&field, a)
                .iter()
                .fold(field.one(), |s, &g| field.mul(s, g));
            if gamma_bad.is_none() && prod != gamma_value(&field, a) {
                gamma_bad = Some((q, field.index(a)));
            }
            if q == 2 || !check_conditions(&field, a).admissible() {
                continue;
            }
            let sys = build_su6(&field, a)?;
            let params = sys.params().expect("generic family");
            if det_bad.is_none() && sys.gram().det(&field) != expected_gram_det(&field, params) {
                det_bad = Some((q, field.index(a)));
            }
        }
    }
    let detail = |bad: Option<(u64, u64)>| match bad {
        Some((q, i)) => alloc::format!("fails at q={q}, element #{i}"),
        None => alloc::format!("{fields} fields, q <= {IDENTITY_SWEEP_MAX_Q}"),
    };
    Ok(alloc::vec![
        IdentityCheck {
            name: "gamma_product",
            statement: "gamma = gamma_0 gamma_1 gamma_2 at every a",
            passed: gamma_bad.is_none(),
            detail: detail(gamma_bad),
        },
        IdentityCheck {
            name: "gram_det",
            statement: "det J = -c^3 gamma^2 at every admissible a",
            passed: det_bad.is_none(),
            detail: detail(det_bad),
        },
    ])
}

/// Every identity, symbolic ones first.
pub fn all_identities() -> Result<Vec<IdentityCheck>> {
    let mut out = symbolic_identities()?;
    out.extend(field_identities()?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn everything_holds() {
        for c in all_identities().unwrap() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn wrong_target_is_detected() {
        let n = named_polys();
        let r = resultant_wrt_second(&n.alpha, &n.beta).unwrap();
        assert_ne!(r, cube_minus(8).pow(3).scale(63));
    }
}
