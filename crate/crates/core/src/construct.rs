//! Generator pairs `(x, y)` of orders 2 and 3 in `SU_n(q^2)` together with
//! the Gram matrix of the hermitian form they preserve.
//!
//! For `n > 6` the basis is ordered `(v_1, ..., v_r, e_1, ..., e_3m)` with
//! `n = 3m + r`, so the six-dimensional block occupies the trailing
//! coordinates `e_(3m-5), ..., e_3m`. Cycles `(u, v, w)` send `u -> v -> w -> u`
//! and products of matrices act right to left on column vectors.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{Fel, FieldSpec};
use crate::matrix::FMatrix;

/// Scalars derived from the parameter `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedParams {
    pub a: Fel,
    /// `a^q`.
    pub aq: Fel,
    /// `2a - a^(2q)`.
    pub b: Fel,
    /// `a^(q+1) - 4`, nonzero and fixed by sigma.
    pub c: Fel,
    /// `2a^3 + 2a^(3q) - 12a^(q+1) + 16`.
    pub d: Fel,
    /// `-a^(4q) + 6a^(2q+1) - a^(q+3) - 8a^q`.
    pub e: Fel,
    /// `a + omega^-j a^q + 2 omega^j` for `j = 0, 1, 2`.
    pub gamma_j: [Fel; 3],
    /// `a^3 + a^(3q) - 6a^(q+1) + 8`.
    pub gamma: Fel,
}

pub fn derived_params(field: &FieldSpec, a: Fel) -> Result<DerivedParams> {
    if field.in_subfield(a) {
        return Err(Error::ParameterInSubfield);
    }
    let int = |v: i64| field.from_int(v);
    let aq = field.frobenius_q(a);
    let norm = field.mul(a, aq);
    if norm == int(4) {
        return Err(Error::ParameterNormFour);
    }
    let pw = |x: Fel, k: u64| field.pow(x, k);
    let a2q = field.square(aq);
    let b = field.sub(field.mul(int(2), a), a2q);
    let c = field.sub(norm, int(4));
    let a3 = pw(a, 3);
    let a3q = pw(aq, 3);
    let d = [
        field.mul(int(2), a3),
        field.mul(int(2), a3q),
        field.mul(int(-12), norm),
        int(16),
    ]
    .into_iter()
    .fold(field.zero(), |s, t| field.add(s, t));
    let e = [
        field.neg(pw(aq, 4)),
        field.mul(int(6), field.mul(a2q, a)),
        field.neg(field.mul(aq, a3)),
        field.mul(int(-8), aq),
    ]
    .into_iter()
    .fold(field.zero(), |s, t| field.add(s, t));
    let gamma = [a3, a3q, field.mul(int(-6), norm), int(8)]
        .into_iter()
        .fold(field.zero(), |s, t| field.add(s, t));
    let gamma_j = gamma_factors(field, a);

    if !field.in_subfield(c) {
        return Err(Error::Invariant("c lies in GF(q)"));
    }
    let prod = gamma_j
        .iter()
        .fold(field.one(), |acc, &g| field.mul(acc, g));
    if prod != gamma {
        return Err(Error::Invariant("gamma = gamma_0 gamma_1 gamma_2"));
    }
    Ok(DerivedParams {
        a,
        aq,
        b,
        c,
        d,
        e,
        gamma_j,
        gamma,
    })
}

/// `a + omega^-j a^q + 2 omega^j` for `j = 0, 1, 2`; their product is
/// `gamma` for every `a`.
pub fn gamma_factors(field: &FieldSpec, a: Fel) -> [Fel; 3] {
    let aq = field.frobenius_q(a);
    let w = field.omega();
    [0i64, 1, 2].map(|j| {
        let wj = field.pow_i(w, j);
        let wmj = field.pow_i(w, -j);
        field.add(
            field.add(a, field.mul(wmj, aq)),
            field.mul(field.from_int(2), wj),
        )
    })
}

/// A constructed generating pair with its hermitian form.
#[derive(Clone, Debug)]
pub struct GenSystem {
    n: usize,
    field: FieldSpec,
    params: Option<DerivedParams>,
    x: FMatrix,
    y: FMatrix,
    z: FMatrix,
    gram: FMatrix,
    basis: Vec<String>,
}

impl GenSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// `None` for the `q = 2` construction.
    pub fn params(&self) -> Option<&DerivedParams> {
        self.params.as_ref()
    }

    pub fn x(&self) -> &FMatrix {
        &self.x
    }

    pub fn y(&self) -> &FMatrix {
        &self.y
    }

    /// `z = xy`.
    pub fn z(&self) -> &FMatrix {
        &self.z
    }

    pub fn gram(&self) -> &FMatrix {
        &self.gram
    }

    /// Labels of the coordinate vectors, in matrix order.
    pub fn basis_labels(&self) -> &[String] {
        &self.basis
    }

    pub fn generators(&self) -> [FMatrix; 2] {
        [self.x.clone(), self.y.clone()]
    }

    /// `g^T J g^sigma = J`.
    pub fn preserves_form(&self, g: &FMatrix) -> bool {
        let f = &self.field;
        g.transpose().mul(&self.gram, f).mul(&g.frobenius(f), f) == self.gram
    }

    /// `J^T = J^sigma`.
    pub fn form_is_hermitian(&self) -> bool {
        self.gram.transpose() == self.gram.frobenius(&self.field)
    }

    fn assemble(
        field: &FieldSpec,
        params: Option<DerivedParams>,
        x: FMatrix,
        y: FMatrix,
        gram: FMatrix,
        basis: Vec<String>,
    ) -> Result<Self> {
        let z = x.mul(&y, field);
        let sys = GenSystem {
            n: x.n(),
            field: field.clone(),
            params,
            x,
            y,
            z,
            gram,
            basis,
        };
        sys.check()?;
        Ok(sys)
    }

    fn check(&self) -> Result<()> {
        let f = &self.field;
        if !self.x.pow(2, f).is_identity(f) {
            return Err(Error::Invariant("x^2 = I"));
        }
        if !self.y.pow(3, f).is_identity(f) {
            return Err(Error::Invariant("y^3 = I"));
        }
        if self.x.det(f) != f.one() || self.y.det(f) != f.one() {
            return Err(Error::Invariant("det(x) = det(y) = 1"));
        }
        if !self.form_is_hermitian() {
            return Err(Error::Invariant("J^T = J^sigma"));
        }
        if !self.preserves_form(&self.x) || !self.preserves_form(&self.y) {
            return Err(Error::Invariant("x, y preserve J"));
        }
        if let (6, Some(p)) = (self.n, &self.params) {
            if self.gram.det(f) != expected_gram_det(f, p) {
                return Err(Error::Invariant("det(J) = -c^3 gamma^2"));
            }
        }
        Ok(())
    }
}

/// `-c^3 gamma^2`.
pub fn expected_gram_det(field: &FieldSpec, p: &DerivedParams) -> Fel {
    field.neg(field.mul(field.pow(p.c, 3), field.square(p.gamma)))
}

fn labels(n: usize) -> Vec<String> {
    let (m, r) = (n / 3, n % 3);
    (1..=r)
        .map(|i| format!("v{i}"))
        .chain((1..=3 * m).map(|i| format!("e{i}")))
        .collect()
}

/// The generic pair over `F_{q^2}`, `q > 2`.
pub fn build_su6(field: &FieldSpec, a: Fel) -> Result<GenSystem> {
    if field.q() == 2 {
        return Err(Error::UseQ2Construction);
    }
    let p = derived_params(field, a)?;
    let (o, z) = (field.one(), field.zero());
    let neg = |v| field.neg(v);
    let over = |num, den| field.div(num, den);
    let c2 = field.square(p.c);
    let x = FMatrix::from_rows(vec![
        vec![o, z, z, z, z, z],
        vec![z, o, z, z, z, z],
        vec![z, z, z, o, z, z],
        vec![z, z, o, z, z, z],
        vec![z, z, z, z, neg(o), a],
        vec![z, z, z, z, z, o],
    ])?;
    let bq = field.frobenius_q(p.b);
    let y = FMatrix::from_rows(vec![
        vec![z, z, o, z, z, z],
        vec![o, z, z, z, z, z],
        vec![z, o, z, z, z, z],
        vec![z, z, z, over(p.b, p.c), over(p.e, c2), over(p.d, c2)],
        vec![z, z, z, o, neg(over(p.b, p.c)), neg(over(bq, p.c))],
        vec![z, z, z, z, o, z],
    ])?;
    // J = (1/c) diag(c^2 I_4, [[d, e], [e^q, d]])
    let mut gram = FMatrix::scalar(6, p.c, field);
    let eq = field.frobenius_q(p.e);
    gram.set(4, 4, over(p.d, p.c));
    gram.set(4, 5, over(p.e, p.c));
    gram.set(5, 4, over(eq, p.c));
    gram.set(5, 5, over(p.d, p.c));
    GenSystem::assemble(field, Some(p), x, y, gram, labels(6))
}

/// The `GF(4)` pair, preserving the standard form `J = I`.
pub fn build_su6_q2() -> Result<GenSystem> {
    build_su6_q2_over(&FieldSpec::new(2, 1, None)?)
}

/// The `GF(4)` pair over a given description of `GF(4)`.
pub fn build_su6_q2_over(field: &FieldSpec) -> Result<GenSystem> {
    if field.q() != 2 {
        return Err(Error::Invariant("field is GF(4)"));
    }
    let (o, z, w) = (field.one(), field.zero(), field.omega());
    let w2 = field.square(w);
    let x = FMatrix::from_rows(vec![
        vec![z, o, z, z, z, z],
        vec![o, z, z, z, z, z],
        vec![z, z, o, o, z, w],
        vec![z, z, o, z, w2, w],
        vec![z, z, z, w, o, w2],
        vec![z, z, w2, w2, w, z],
    ])?;
    let y = FMatrix::from_rows(vec![
        vec![z, z, o, z, z, z],
        vec![o, z, z, z, z, z],
        vec![z, o, z, z, z, z],
        vec![z, z, z, z, z, o],
        vec![z, z, z, o, z, z],
        vec![z, z, z, z, o, z],
    ])?;
    GenSystem::assemble(field, None, x, y, FMatrix::identity(6, field), labels(6))
}

/// Monomial matrix for a product of disjoint cycles (given as coordinate
/// indices) with optional diagonal scalars on fixed coordinates.
fn monomial(
    n: usize,
    cycles: &[Vec<usize>],
    scalars: &[(usize, Fel)],
    field: &FieldSpec,
) -> FMatrix {
    let mut image: Vec<usize> = (0..n).collect();
    for cycle in cycles {
        for (k, &u) in cycle.iter().enumerate() {
            image[u] = cycle[(k + 1) % cycle.len()];
        }
    }
    let mut m = FMatrix::zero(n, field);
    for (u, &v) in image.iter().enumerate() {
        m.set(v, u, field.one());
    }
    for &(i, s) in scalars {
        m.set(i, i, s);
    }
    m
}

/// Whether some construction covers `(n, q)`: `n >= 6`, excluding
/// `n = 8` with `q` in `{3, 4}`.
pub fn check_shape(n: usize, q: u64) -> Result<()> {
    if n < 6 {
        return Err(Error::DimensionTooSmall(n));
    }
    if n == 8 && (q == 3 || q == 4) {
        return Err(Error::UnsupportedCase { n, q });
    }
    Ok(())
}

/// Extension to `SU_n(q^2)`, `n >= 7`: `x_n = nu_n x_6`, `y_n = mu_n y_6` with
/// the six-dimensional pair on the trailing block.
///
/// For `q = 2, r = 2` the diagonal twist acts as `omega^i` on `v_i` and
/// trivially on every `e_i`. The cases `n = 8, q in {3, 4}` are rejected.
pub fn build_sun(n: usize, field: &FieldSpec, a: Option<Fel>) -> Result<GenSystem> {
    if n < 7 {
        return Err(Error::DimensionTooSmall(n));
    }
    let q = field.q();
    check_shape(n, q)?;
    let base = if q == 2 {
        build_su6_q2_over(field)?
    } else {
        build_su6(field, a.ok_or(Error::MissingParameter)?)?
    };
    let (m, r) = (n / 3, n % 3);
    // coordinate indices of v_i and e_i (both 1-based)
    let v = |i: usize| i - 1;
    let e = |i: usize| r + i - 1;
    let offset = n - 6;

    let mu_cycles: Vec<Vec<usize>> = (0..m.saturating_sub(2))
        .map(|k| vec![e(3 * k + 1), e(3 * k + 2), e(3 * k + 3)])
        .collect();
    let (nu, mu) = if q == 2 {
        let nu_cycles: Vec<Vec<usize>> = match n {
            7 => vec![vec![v(1), e(1), e(2)]],
            8 => vec![vec![v(1), e(1), v(2), e(2)]],
            _ => {
                let mut cycles = match r {
                    0 => vec![vec![e(1), e(2)]],
                    1 => vec![vec![e(1), v(1)]],
                    _ => vec![vec![e(1), v(1)], vec![e(2), v(2)]],
                };
                cycles.extend((1..=m.saturating_sub(3)).map(|k| vec![e(3 * k), e(3 * k + 1)]));
                cycles.push(vec![e(3 * m - 6), e(3 * m - 5), e(3 * m - 4)]);
                cycles
            }
        };
        let delta: Vec<(usize, Fel)> = if r == 2 {
            let w = field.omega();
            vec![(v(1), w), (v(2), field.square(w))]
        } else {
            Vec::new()
        };
        (
            monomial(n, &nu_cycles, &[], field),
            monomial(n, &mu_cycles, &delta, field),
        )
    } else {
        let mut nu_cycles: Vec<Vec<usize>> = (1..=r).map(|i| vec![v(i), e(i)]).collect();
        nu_cycles.extend((1..=m - 2).map(|k| vec![e(3 * k), e(3 * k + 1)]));
        // sign on e_(3m-4) restoring det = 1; trivial for even q or n = 8
        let odd = nu_cycles.len() % 2 == 1;
        let eta2 = if field.p() != 2 && n != 8 && odd {
            vec![(e(3 * m - 4), field.from_int(-1))]
        } else {
            Vec::new()
        };
        (
            monomial(n, &nu_cycles, &eta2, field),
            monomial(n, &mu_cycles, &[], field),
        )
    };

    let x = nu.mul(&FMatrix::embed(base.x(), n, offset, field), field);
    let y = mu.mul(&FMatrix::embed(base.y(), n, offset, field), field);
    let fill = match base.params() {
        Some(p) => p.c,
        None => field.one(),
    };
    let mut gram = FMatrix::scalar(n, fill, field);
    for i in 0..6 {
        for j in 0..6 {
            gram.set(offset + i, offset + j, base.gram().get(i, j));
        }
    }
    GenSystem::assemble(field, base.params, x, y, gram, labels(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf9() -> FieldSpec {
        FieldSpec::new(3, 1, Some(&[2, 1, 1])).unwrap()
    }

    #[test]
    fn gf9_scalars() {
        let f = gf9();
        let p = derived_params(&f, f.generator()).unwrap();
        assert_eq!(p.c, f.one());
        assert_eq!(p.gamma, f.one());
    }

    #[test]
    fn parameter_errors() {
        let f = gf9();
        assert_eq!(
            derived_params(&f, f.from_int(2)),
            Err(Error::ParameterInSubfield)
        );
        // norm 4 = 1 in GF(3): any a outside GF(3) with a^4 = 1
        let a = f
            .elements()
            .find(|&a| !f.in_subfield(a) && f.norm(a) == f.one())
            .unwrap();
        assert_eq!(derived_params(&f, a), Err(Error::ParameterNormFour));
        let f4 = FieldSpec::new(2, 1, None).unwrap();
        assert_eq!(
            build_su6(&f4, f4.generator()).unwrap_err(),
            Error::UseQ2Construction
        );
    }

    #[test]
    fn generic_pair_determinants() {
        let f = gf9();
        let s = build_su6(&f, f.generator()).unwrap();
        assert_eq!(s.x().det(&f), f.one());
        assert_eq!(s.gram().det(&f), expected_gram_det(&f, s.params().unwrap()));
    }

    #[test]
    fn q2_pair_is_unitary_for_identity_form() {
        let s = build_su6_q2().unwrap();
        let f = s.field();
        assert!(s.x().transpose().mul(&s.x().frobenius(f), f).is_identity(f));
        assert!(s.y().transpose().mul(&s.y().frobenius(f), f).is_identity(f));
    }

    #[test]
    fn extension_rejections() {
        let f = gf9();
        assert_eq!(
            build_sun(8, &f, Some(f.generator())).unwrap_err(),
            Error::UnsupportedCase { n: 8, q: 3 }
        );
        assert_eq!(build_sun(9, &f, None).unwrap_err(), Error::MissingParameter);
        assert_eq!(
            build_sun(6, &f, None).unwrap_err(),
            Error::DimensionTooSmall(6)
        );
    }

    #[test]
    fn extension_labels() {
        let f = gf9();
        let s = build_sun(7, &f, Some(f.generator())).unwrap();
        assert_eq!(s.basis_labels()[0], "v1");
        assert_eq!(s.basis_labels()[6], "e6");
    }
}
