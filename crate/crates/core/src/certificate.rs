//! Structured record of every check run for one `(n, q, a)`.
//!
//! Certificates carry typed payloads; rendering them to text lives in the
//! companion crate. Nothing here depends on time or randomness, so the same
//! inputs always produce the same certificate.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::construct::{build_su6, build_su6_q2_over, build_sun, GenSystem};
use crate::gf::{Fel, FieldSpec};
use crate::matrix::{commutant_dim, enveloping_dim, FMatrix, DEFAULT_ORDER_CAP};
use crate::poly::UPoly;
use crate::verify::{check_conditions, scalar_powers, ConditionReport};

pub const TOOLKIT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Bool(bool),
    Int(i64),
    Text(String),
    Elem(Fel),
    Poly(UPoly),
    Matrix(FMatrix),
    List(Vec<Value>),
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Int(v as i64)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Recorded but not machine-checked here (a cited classification result).
    Cited,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Cited => "cited",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub payload: Vec<(String, Value)>,
}

impl Check {
    fn new(name: &str, ok: bool) -> Self {
        Check {
            name: name.to_string(),
            status: Status::from_bool(ok),
            payload: Vec::new(),
        }
    }

    fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.payload.push((key.to_string(), value.into()));
        self
    }
}

/// What the certificate establishes about `<x, y> = SU_n(q^2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    /// `q = 2`: orders 11, 9, 21 together with the known maximal subgroups.
    Generation,
    /// `q > 2`: the checked hypotheses feed a cited classification argument.
    ConditionalGeneration,
    /// `n > 6`: irreducibility and membership evidence only.
    Evidence,
}

impl Claim {
    pub fn as_str(self) -> &'static str {
        match self {
            Claim::Generation => "generation",
            Claim::ConditionalGeneration => "conditional-generation",
            Claim::Evidence => "evidence",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub n: usize,
    pub field: FieldSpec,
    pub a: Option<Fel>,
    pub claim: Claim,
    pub basis: Vec<String>,
    /// `None` when construction was rejected (see the `construction` check).
    pub system: Option<GenSystem>,
    pub checks: Vec<Check>,
    pub version: &'static str,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn conditions_check(report: &ConditionReport) -> Check {
    let mut c = Check::new("conditions", report.all());
    for (k, v) in report.flags() {
        c = c.with(k, v);
    }
    c
}

fn order_value(m: &FMatrix, field: &FieldSpec) -> Value {
    match m.order(DEFAULT_ORDER_CAP, field) {
        Ok(o) => match o.finite() {
            Some(k) => Value::Int(k as i64),
            None => Value::Text(format!("> {DEFAULT_ORDER_CAP}")),
        },
        Err(_) => Value::Text("singular".to_string()),
    }
}

fn polys(list: &[UPoly]) -> Value {
    Value::List(list.iter().cloned().map(Value::Poly).collect())
}

/// The closed form of the characteristic polynomial of `z = xy`:
/// `t^6 - (b+ac)/c t^5 - b^q/c t^4 - b/c t^2 - (b^q + c a^q)/c t + 1`.
pub fn expected_z_char_poly(field: &FieldSpec, p: &crate::construct::DerivedParams) -> UPoly {
    let over = |x| field.div(x, p.c);
    let bq = field.frobenius_q(p.b);
    let c5 = field.neg(over(field.add(p.b, field.mul(p.a, p.c))));
    let c4 = field.neg(over(bq));
    let c2 = field.neg(over(p.b));
    let c1 = field.neg(over(field.add(bq, field.mul(p.c, p.aq))));
    UPoly::from_coeffs(vec![field.one(), c1, c2, field.zero(), c4, c5, field.one()])
}

fn structural_checks(sys: &GenSystem, checks: &mut Vec<Check>) {
    let f = sys.field();
    let n = sys.n();
    let (x, y, z) = (sys.x(), sys.y(), sys.z());

    let ox = order_value(x, f);
    let oy = order_value(y, f);
    checks.push(
        Check::new("orders", ox == Value::Int(2) && oy == Value::Int(3))
            .with("x", ox)
            .with("y", oy),
    );
    checks.push(
        Check::new("determinants", x.det(f) == f.one() && y.det(f) == f.one())
            .with("det_x", Value::Elem(x.det(f)))
            .with("det_y", Value::Elem(y.det(f))),
    );

    let yx = y.mul(x, f);
    let comm = x.commutator(y, f).ok();
    let mut unitary = Check::new("unitarity", true).with("hermitian", sys.form_is_hermitian());
    let mut all = sys.form_is_hermitian();
    for (name, g) in [
        ("x", Some(x)),
        ("y", Some(y)),
        ("xy", Some(z)),
        ("yx", Some(&yx)),
        ("[x,y]", comm.as_ref()),
    ] {
        let ok = g.is_some_and(|g| sys.preserves_form(g));
        all &= ok;
        unitary = unitary.with(name, ok);
    }
    unitary.status = Status::from_bool(all);
    checks.push(unitary);

    let env = enveloping_dim(&sys.generators(), f);
    checks.push(
        Check::new("enveloping_dim", env == n * n)
            .with("dim", env)
            .with("expected", n * n),
    );
}

fn six_dim_checks(sys: &GenSystem, checks: &mut Vec<Check>) {
    let f = sys.field();
    let (x, y, z) = (sys.x(), sys.y(), sys.z());
    let ix = x.invariant_factors(f);
    let iy = y.invariant_factors(f);
    let iz = z.invariant_factors(f);
    let t = |c: &[i64]| UPoly::from_ints(c, f);

    if let Some(p) = sys.params() {
        let expect_x = [t(&[-1, 1]), t(&[-1, 1]), t(&[-1, 0, 1]), t(&[-1, 0, 1])];
        checks.push(
            Check::new("invariant_factors_x", ix.factors() == expect_x)
                .with("factors", polys(ix.factors())),
        );
        let expect_y = [t(&[-1, 0, 0, 1]), t(&[-1, 0, 0, 1])];
        checks.push(
            Check::new("invariant_factors_y", iy.factors() == expect_y)
                .with("factors", polys(iy.factors())),
        );
        let chi = z.char_poly(f);
        checks.push(
            Check::new(
                "z_single_invariant",
                iz.len() == 1 && iz.factors()[0] == chi,
            )
            .with("factors", polys(iz.factors())),
        );
        let formula = expected_z_char_poly(f, p);
        checks.push(
            Check::new("z_char_poly_formula", chi == formula).with("char_poly", Value::Poly(chi)),
        );
        let (cx, cy, cz) = (
            commutant_dim(std::slice::from_ref(x), f),
            commutant_dim(std::slice::from_ref(y), f),
            commutant_dim(std::slice::from_ref(z), f),
        );
        checks.push(
            Check::new("centralizer_dims", (cx, cy, cz) == (20, 12, 6))
                .with("x", cx)
                .with("y", cy)
                .with("z", cz)
                .with("scott_bound", (36 + 2 - cx - cy) as u64),
        );
        let powers = scalar_powers(z, f);
        checks.push(Check::new("scalar_powers", powers.iter().all(|s| !s)).with(
            "scalar",
            Value::List(powers.iter().map(|&b| Value::Bool(b)).collect()),
        ));
        let det = sys.gram().det(f);
        let expected = crate::construct::expected_gram_det(f, p);
        checks.push(
            Check::new("gram_det", det == expected)
                .with("det", Value::Elem(det))
                .with("minus_c3_gamma2", Value::Elem(expected)),
        );
        checks.push(
            Check { name: "generation".to_string(), status: Status::Cited, payload: Vec::new() }
                .with("note", "H = SU_6(q^2) follows from conditions (i)-(iii) by the maximal-subgroup classification; not machine-checked"),
        );
    } else {
        let expect_x = [t(&[-1, 0, 1]), t(&[-1, 0, 1]), t(&[-1, 0, 1])];
        checks.push(
            Check::new("invariant_factors_x", ix.factors() == expect_x)
                .with("factors", polys(ix.factors())),
        );
        checks.push(Check::new("invariant_factors_y", true).with("factors", polys(iy.factors())));
        let mut ok = true;
        let mut c = Check::new("special_orders", true);
        let xy = z.clone();
        let comm = x.commutator(y, f).ok();
        let word = comm.as_ref().map(|k| k.mul(k, f).mul(&xy, f));
        for (name, g, want) in [
            ("xy", Some(&xy), 11),
            ("[x,y]", comm.as_ref(), 9),
            ("[x,y]^2xy", word.as_ref(), 21),
        ] {
            let v = g
                .map(|g| order_value(g, f))
                .unwrap_or(Value::Text("singular".to_string()));
            ok &= v == Value::Int(want);
            c = c.with(name, v);
        }
        c.status = Status::from_bool(ok);
        checks.push(c);
        let ident = x.transpose().mul(&x.frobenius(f), f).is_identity(f)
            && y.transpose().mul(&y.frobenius(f), f).is_identity(f);
        checks.push(Check::new("standard_form", ident));
        checks.push(
            Check { name: "generation".to_string(), status: Status::Cited, payload: Vec::new() }
                .with("note", "only maximal subgroups of order divisible by 7*9*11 are 3.M22, which has no elements of order 9"),
        );
    }
}

/// Runs every applicable check for `(n, q)` over `field` with parameter `a`
/// (ignored when `q = 2`). Failures are recorded, never raised.
pub fn su_certificate(field: &FieldSpec, n: usize, a: Option<Fel>) -> Certificate {
    let q = field.q();
    let claim = match (n, q) {
        (6, 2) => Claim::Generation,
        (6, _) => Claim::ConditionalGeneration,
        _ => Claim::Evidence,
    };
    let mut checks = Vec::new();
    let a = if q == 2 { None } else { a };
    if let Some(a) = a {
        checks.push(conditions_check(&check_conditions(field, a)));
    }
    let built = match (n, q) {
        (6, 2) => build_su6_q2_over(field),
        (6, _) => match a {
            Some(a) => build_su6(field, a),
            None => Err(crate::error::Error::MissingParameter),
        },
        _ => build_sun(n, field, a),
    };
    let system = match built {
        Ok(sys) => {
            checks.push(Check::new("construction", true));
            structural_checks(&sys, &mut checks);
            if n == 6 {
                six_dim_checks(&sys, &mut checks);
            }
            Some(sys)
        }
        Err(e) => {
            checks
                .push(Check::new("construction", false).with("error", Value::Text(e.to_string())));
            None
        }
    };
    Certificate {
        n,
        field: field.clone(),
        a,
        claim,
        basis: system
            .as_ref()
            .map(|s| s.basis_labels().to_vec())
            .unwrap_or_default(),
        system,
        checks,
        version: TOOLKIT_VERSION,
    }
}
