use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime(u64),
    InvalidExtension(u32),
    /// The field would not fit the fixed-capacity element representation.
    FieldTooLarge,
    ModulusNotMonic,
    ModulusWrongDegree {
        expected: usize,
        found: usize,
    },
    ModulusReducible,
    BadCoefficients,
    ZeroElement,
    DivisionByZero,
    SingularMatrix,
    DimensionMismatch,
    /// The parameter lies in the subfield `GF(q)`.
    ParameterInSubfield,
    /// The parameter has norm `a^(q+1) = 4`, so `c = 0`.
    ParameterNormFour,
    MissingParameter,
    /// `q = 2` uses the dedicated `GF(4)` pair.
    UseQ2Construction,
    UnsupportedCase {
        n: usize,
        q: u64,
    },
    DimensionTooSmall(usize),
    /// A construction-time invariant did not hold.
    Invariant(&'static str),
    DegenerateResultant,
    NoValidParameter {
        q: u64,
    },
    NotReducible,
    EnumerationGuard {
        q: u64,
    },
    TableRow {
        q: u64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::InvalidExtension(k) => write!(f, "invalid extension exponent {k}"),
            Error::FieldTooLarge => f.write_str("field exceeds supported size"),
            Error::ModulusNotMonic => f.write_str("modulus is not monic"),
            Error::ModulusWrongDegree { expected, found } => {
                write!(f, "modulus has degree {found}, expected {expected}")
            }
            Error::ModulusReducible => f.write_str("modulus is reducible"),
            Error::BadCoefficients => f.write_str("wrong number of coefficients for field element"),
            Error::ZeroElement => f.write_str("operation undefined for zero element"),
            Error::DivisionByZero => f.write_str("division by zero polynomial"),
            Error::SingularMatrix => f.write_str("matrix is singular"),
            Error::DimensionMismatch => f.write_str("dimension mismatch"),
            Error::ParameterInSubfield => f.write_str("parameter a lies in GF(q)"),
            Error::ParameterNormFour => f.write_str("parameter a has a^(q+1) = 4"),
            Error::MissingParameter => f.write_str("parameter a is required for q > 2"),
            Error::UseQ2Construction => f.write_str("q = 2 uses the dedicated GF(4) pair"),
            Error::UnsupportedCase { n, q } => write!(f, "unsupported: n={n}, q={q}"),
            Error::DimensionTooSmall(n) => write!(f, "dimension {n} too small"),
            Error::Invariant(what) => write!(f, "construction invariant failed: {what}"),
            Error::DegenerateResultant => {
                f.write_str("resultant needs positive degree in the eliminated variable")
            }
            Error::NoValidParameter { q } => write!(f, "no valid parameter exists for q={q}"),
            Error::NotReducible => f.write_str("parameter gives an irreducible group"),
            Error::EnumerationGuard { q } => write!(f, "q={q} exceeds the enumeration guard"),
            Error::TableRow { q } => write!(f, "table row q={q} failed"),
        }
    }
}

impl core::error::Error for Error {}
