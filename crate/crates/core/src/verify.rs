//! Parameter conditions, parameter search, the tabulated parameters, the
//! counting bound and reducibility witnesses for the six-dimensional family.

use alloc::vec::Vec;

use crate::construct::{build_su6, GenSystem};
use crate::error::{Error, Result};
use crate::gf::{split_prime_power, Fel, FieldSpec};
use crate::matrix::{enveloping_dim, spin, FMatrix, Vector};

/// Hypotheses on `a`, each reproducible from `a` and the field alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    /// `a` not in `GF(q)`.
    pub not_in_subfield: bool,
    /// `a^(q+1) != 4`.
    pub norm_ne_4: bool,
    /// `a^3 - 6a^(q+1) + a^(3q) + 8 != 0`.
    pub cond_i: bool,
    /// `a^(2q+2) - 5a^(q+1) + 8 != 0`.
    pub cond_ii: bool,
    /// `F_p[a^3] = F_{q^2}`.
    pub cond_iii: bool,
}

impl ConditionReport {
    pub fn all(&self) -> bool {
        self.admissible() && self.cond_i && self.cond_ii && self.cond_iii
    }

    /// The construction is defined (`a` outside `GF(q)`, `c != 0`).
    pub fn admissible(&self) -> bool {
        self.not_in_subfield && self.norm_ne_4
    }

    /// Conditions (i) and (ii), equivalent to absolute irreducibility for
    /// admissible `a`.
    pub fn irreducible(&self) -> bool {
        self.cond_i && self.cond_ii
    }

    pub fn flags(&self) -> [(&'static str, bool); 5] {
        [
            ("not_in_subfield", self.not_in_subfield),
            ("norm_ne_4", self.norm_ne_4),
            ("cond_i", self.cond_i),
            ("cond_ii", self.cond_ii),
            ("cond_iii", self.cond_iii),
        ]
    }
}

/// `a^3 + a^(3q) - 6a^(q+1) + 8`.
pub fn gamma_value(field: &FieldSpec, a: Fel) -> Fel {
    let aq = field.frobenius_q(a);
    let terms = [
        field.pow(a, 3),
        field.pow(aq, 3),
        field.mul(field.from_int(-6), field.mul(a, aq)),
        field.from_int(8),
    ];
    terms.into_iter().fold(field.zero(), |s, t| field.add(s, t))
}

/// `a^(2q+2) - 5a^(q+1) + 8`.
pub fn cond_ii_value(field: &FieldSpec, a: Fel) -> Fel {
    let n = field.norm(a);
    let terms = [
        field.square(n),
        field.mul(field.from_int(-5), n),
        field.from_int(8),
    ];
    terms.into_iter().fold(field.zero(), |s, t| field.add(s, t))
}

pub fn check_conditions(field: &FieldSpec, a: Fel) -> ConditionReport {
    ConditionReport {
        not_in_subfield: !field.in_subfield(a),
        norm_ne_4: field.norm(a) != field.from_int(4),
        cond_i: !gamma_value(field, a).is_zero(),
        cond_ii: !cond_ii_value(field, a).is_zero(),
        cond_iii: field.generates_full(field.pow(a, 3)),
    }
}

/// First element in canonical order passing all five conditions.
pub fn search_parameter(field: &FieldSpec) -> Result<Fel> {
    field
        .elements()
        .find(|&a| check_conditions(field, a).all())
        .ok_or(Error::NoValidParameter { q: field.q() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// Radical of the form: vectors `w` with `w^T J = 0`.
    KernelOfGram,
    /// Closure of a single vector under the generators.
    SpunSubspace,
}

/// A proper invariant subspace exhibiting reducibility.
#[derive(Clone, Debug)]
pub struct Witness {
    pub kind: WitnessKind,
    pub basis: Vec<Vector>,
    /// Every generator maps every basis vector back into the span, and the
    /// span is proper and nonzero.
    pub verified_invariant: bool,
}

fn is_proper_invariant(basis: &[Vector], gens: &[FMatrix], field: &FieldSpec) -> bool {
    let Some(n) = gens.first().map(|g| g.n()) else {
        return false;
    };
    let span = spin(basis, &[], field);
    if span.dim() == 0 || span.dim() >= n || span.dim() != basis.len() {
        return false;
    }
    basis.iter().all(|b| {
        gens.iter()
            .all(|g| span.contains(&g.apply(b, field), field))
    })
}

/// Invariant subspace for an admissible `a` violating (i) or (ii).
///
/// When `gamma = 0` the radical of the form is used; `x^T J x^sigma = J`
/// makes `{w : w^T J = 0}` stable under `x` and `y`. Otherwise the vector
/// `(0, 0, 1, -1, c/(a^(2q) - a), 0)` is spun under `x` and `y`.
pub fn reducibility_witness(field: &FieldSpec, a: Fel) -> Result<Witness> {
    let report = check_conditions(field, a);
    let sys = build_su6(field, a)?;
    witness_for(&sys, &report)
}

pub(crate) fn witness_for(sys: &GenSystem, report: &ConditionReport) -> Result<Witness> {
    if report.irreducible() {
        return Err(Error::NotReducible);
    }
    let field = sys.field();
    let gens = sys.generators();
    let params = sys.params().ok_or(Error::Invariant("generic family"))?;
    let (kind, basis) = if !report.cond_i {
        let radical = sys.gram().transpose().kernel_basis(field);
        (WitnessKind::KernelOfGram, radical)
    } else {
        let denom = field.sub(field.square(params.aq), params.a);
        if denom.is_zero() {
            return Err(Error::Invariant("a^(2q) != a when only (ii) fails"));
        }
        let (o, z) = (field.one(), field.zero());
        let v = alloc::vec![z, z, o, field.neg(o), field.div(params.c, denom), z];
        let w = spin(&[v], &gens, field);
        (WitnessKind::SpunSubspace, w.basis().to_vec())
    };
    let verified_invariant = is_proper_invariant(&basis, &gens, field);
    Ok(Witness {
        kind,
        basis,
        verified_invariant,
    })
}

/// `z^k` is scalar, for `k = 1..=9`.
pub fn scalar_powers(z: &FMatrix, field: &FieldSpec) -> [bool; 9] {
    let mut acc = FMatrix::identity(z.n(), field);
    [(); 9].map(|_| {
        acc = acc.mul(z, field);
        acc.is_scalar(field)
    })
}

/// `(q, m_a)` with `m_a` constant term first; `a` is taken as a root.
pub const PARAMETER_TABLE: [(u64, &[i64]); 11] = [
    (3, &[2, 1, 1]),
    (13, &[2, 1, 1]),
    (4, &[-1, 0, 0, 1, 1]),
    (9, &[-1, 0, 0, 1, 1]),
    (5, &[-3, 1, 1]),
    (11, &[-3, 1, 1]),
    (7, &[3, 1, 1]),
    (17, &[3, 1, 1]),
    (19, &[3, 1, 1]),
    (8, &[1, 1, 0, 0, 0, 0, 1]),
    (16, &[1, 1, 0, 0, 0, 1, 1, 0, 1]),
];

#[derive(Clone, Debug)]
pub struct TableRow {
    pub q: u64,
    /// The polynomial as tabulated (integer coefficients).
    pub tabulated: &'static [i64],
    /// The field, when the reduced polynomial is an irreducible modulus.
    pub field: Option<FieldSpec>,
    pub report: Option<ConditionReport>,
}

impl TableRow {
    pub fn passed(&self) -> bool {
        self.report.is_some_and(|r| r.all())
    }
}

/// Field and parameter for a tabulated `q`.
pub fn table_parameter(q: u64) -> Option<(FieldSpec, Fel)> {
    let (_, m) = PARAMETER_TABLE.iter().find(|(tq, _)| *tq == q)?;
    let (p, f) = split_prime_power(q)?;
    let field = FieldSpec::new(p, f, Some(m)).ok()?;
    let a = field.generator();
    Some((field, a))
}

/// Every tabulated row, with `a = t` in `GF(p)[t]/(m_a)`.
pub fn table_rows() -> Vec<TableRow> {
    PARAMETER_TABLE
        .iter()
        .map(|&(q, m)| {
            let field = table_parameter(q).map(|(f, _)| f);
            let report = field.as_ref().map(|f| check_conditions(f, f.generator()));
            TableRow {
                q,
                tabulated: m,
                field,
                report,
            }
        })
        .collect()
}

/// As [`table_rows`], failing on the first row that does not pass.
pub fn reproduce_table() -> Result<Vec<TableRow>> {
    let rows = table_rows();
    match rows.iter().find(|r| !r.passed()) {
        Some(bad) => Err(Error::TableRow { q: bad.q }),
        None => Ok(rows),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub q: u64,
    /// Elements of `F_{q^2}` violating (i) or (ii).
    pub failures: u64,
    /// Elements of order `q^2 - 1`.
    pub primitives: u64,
    /// `failures <= 5q + 2`.
    pub bound_ok: bool,
    /// `primitives >= 5q + 3`, asserted only for `q >= 23`.
    pub primitives_ok: Option<bool>,
}

/// Largest `q^2` accepted by [`counting_bound`].
pub const COUNT_GUARD: u64 = 1 << 20;

pub fn counting_bound(q: u64) -> Result<CountReport> {
    if q < 3 || q.saturating_mul(q) > COUNT_GUARD {
        return Err(Error::EnumerationGuard { q });
    }
    let (p, f) = split_prime_power(q).ok_or(Error::NotPrime(q))?;
    let field = FieldSpec::new(p, f, None)?;
    let mut failures = 0;
    let mut primitives = 0;
    for a in field.elements() {
        if gamma_value(&field, a).is_zero() || cond_ii_value(&field, a).is_zero() {
            failures += 1;
        }
        if !a.is_zero() && field.element_order(a)? == field.size() - 1 {
            primitives += 1;
        }
    }
    Ok(CountReport {
        q,
        failures,
        primitives,
        bound_ok: failures <= 5 * q + 2,
        primitives_ok: (q >= 23).then_some(primitives >= 5 * q + 3),
    })
}

/// Outcome of comparing the algebra-dimension oracle with conditions
/// (i) and (ii) over every admissible `a` in a field.
#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub admissible: usize,
    pub irreducible: usize,
    /// Parameters where `enveloping_dim = 36` disagrees with (i) and (ii).
    pub disagreements: Vec<Fel>,
    /// Reducible parameters without a verified witness.
    pub missing_witnesses: Vec<Fel>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty() && self.missing_witnesses.is_empty()
    }
}

/// Full sweep over every element of the field.
pub fn irreducibility_sweep(field: &FieldSpec) -> Result<SweepReport> {
    irreducibility_check(field, field.elements())
}

/// As [`irreducibility_sweep`], restricted to the given parameters; used to
/// sample fields too large to sweep.
pub fn irreducibility_check(
    field: &FieldSpec,
    params: impl IntoIterator<Item = Fel>,
) -> Result<SweepReport> {
    let mut out = SweepReport::default();
    for a in params {
        let report = check_conditions(field, a);
        if !report.admissible() {
            continue;
        }
        out.admissible += 1;
        let sys = build_su6(field, a)?;
        let full = enveloping_dim(&sys.generators(), field) == 36;
        if full != report.irreducible() {
            out.disagreements.push(a);
        }
        if report.irreducible() {
            out.irreducible += 1;
        } else {
            let ok = witness_for(&sys, &report)
                .map(|w| w.verified_invariant)
                .unwrap_or(false);
            if !ok {
                out.missing_witnesses.push(a);
            }
        }
    }
    Ok(out)
}
