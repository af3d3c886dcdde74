//! Plain-text encodings of fields, elements, matrices and parameters.
//!
//! * field descriptor: `p^deg:c0,c1,...,1`, modulus coefficients constant
//!   term first (`3^2:2,1,1` is `GF(3)[t]/(t^2 + t + 2)`);
//! * element token: residue coefficients joined by `:`, constant first, always
//!   `deg` of them (`0:1` is `t` in `GF(9)`);
//! * matrix: one row per line, entries as element tokens separated by `, `.

use thiserror::Error;
use unigen_core::gf::{Fel, FieldSpec};
use unigen_core::matrix::FMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("malformed field descriptor {0:?}")]
    Descriptor(String),
    #[error("malformed element token {0:?}")]
    Element(String),
    #[error("malformed polynomial {0:?}")]
    Polynomial(String),
    #[error("malformed integer list {0:?}")]
    IntList(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error(transparent)]
    Field(#[from] unigen_core::Error),
}

pub fn render_field(field: &FieldSpec) -> String {
    let coeffs: Vec<String> = field.modulus().iter().map(u32::to_string).collect();
    format!("{}^{}:{}", field.p(), field.degree(), coeffs.join(","))
}

pub fn parse_field(s: &str) -> Result<FieldSpec, FormatError> {
    let bad = || FormatError::Descriptor(s.to_string());
    let (head, tail) = s.trim().split_once(':').ok_or_else(bad)?;
    let (p, deg) = head.split_once('^').ok_or_else(bad)?;
    let p: u32 = p.parse().map_err(|_| bad())?;
    let deg: u32 = deg.parse().map_err(|_| bad())?;
    if deg == 0 || !deg.is_multiple_of(2) {
        return Err(bad());
    }
    let modulus = parse_int_list(tail)?;
    Ok(FieldSpec::new(p, deg / 2, Some(&modulus))?)
}

/// Comma-separated integers, surrounding whitespace allowed.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>, FormatError> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| FormatError::IntList(s.to_string()))
}

pub fn render_fel(field: &FieldSpec, x: Fel) -> String {
    let c: Vec<String> = field.coeffs(x).iter().map(u32::to_string).collect();
    c.join(":")
}

pub fn parse_fel(field: &FieldSpec, s: &str) -> Result<Fel, FormatError> {
    let coeffs: Vec<i64> = s
        .trim()
        .split(':')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| FormatError::Element(s.to_string()))?;
    Ok(field.from_coeffs(&coeffs)?)
}

/// An element as a polynomial in the generator, e.g. `2t^3 + t + 1`.
pub fn render_fel_poly(field: &FieldSpec, x: Fel) -> String {
    let terms: Vec<String> = field
        .coeffs(x)
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| {
            let coef = if c == 1 && k > 0 {
                String::new()
            } else {
                c.to_string()
            };
            match k {
                0 => coef,
                1 => format!("{coef}t"),
                _ => format!("{coef}t^{k}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// A parameter given either as a polynomial in `t` (`t`, `2t+1`, `t^3 - 2`,
/// `3*t^2`) or as a coefficient vector, constant first (`1,2` or `1:2`).
/// Polynomials of any degree are reduced by the modulus.
pub fn parse_param(field: &FieldSpec, s: &str) -> Result<Fel, FormatError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.contains('t') {
        return parse_t_poly(field, &compact).ok_or_else(|| FormatError::Polynomial(s.to_string()));
    }
    if compact.contains(':') {
        return parse_fel(field, &compact);
    }
    let coeffs = parse_int_list(&compact)?;
    Ok(field.from_coeffs(&coeffs)?)
}

fn parse_t_poly(field: &FieldSpec, s: &str) -> Option<Fel> {
    if s.is_empty() {
        return None;
    }
    let mut acc = field.zero();
    let mut rest = s;
    while !rest.is_empty() {
        let (neg, body) = match rest.as_bytes()[0] {
            b'-' => (true, &rest[1..]),
            b'+' => (false, &rest[1..]),
            _ if rest.len() == s.len() => (false, rest),
            _ => return None,
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let mut term = parse_term(field, &body[..end])?;
        if neg {
            term = field.neg(term);
        }
        acc = field.add(acc, term);
        rest = &body[end..];
    }
    Some(acc)
}

fn parse_term(field: &FieldSpec, term: &str) -> Option<Fel> {
    let Some(pos) = term.find('t') else {
        return Some(field.from_int(term.parse().ok()?));
    };
    let coef = term[..pos].trim_end_matches('*');
    let coef: i64 = if coef.is_empty() {
        1
    } else {
        coef.parse().ok()?
    };
    let exp = &term[pos + 1..];
    let exp: u64 = match exp.strip_prefix('^') {
        Some(e) => e.parse().ok()?,
        None if exp.is_empty() => 1,
        None => return None,
    };
    Some(field.mul(field.from_int(coef), field.pow(field.generator(), exp)))
}

pub fn render_matrix(field: &FieldSpec, m: &FMatrix) -> String {
    let mut out = String::new();
    for row in m.rows() {
        let toks: Vec<String> = row.iter().map(|&x| render_fel(field, x)).collect();
        out.push_str(&toks.join(", "));
        out.push('\n');
    }
    out
}

pub fn parse_matrix(field: &FieldSpec, s: &str) -> Result<FMatrix, FormatError> {
    let rows: Vec<Vec<Fel>> = s
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split(',').map(|t| parse_fel(field, t)).collect())
        .collect::<Result<_, _>>()?;
    FMatrix::from_rows(rows).map_err(|_| FormatError::NotSquare)
}
