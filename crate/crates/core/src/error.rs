use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Polynomial division left a nonzero remainder.
    NonExactDivision,
    /// A factored sum did not clear to a polynomial.
    NonIntegral,
    /// `an(i) + an(j)` was odd for an admissible coloring.
    ParityViolation { i: u8, j: u8 },
    BoundaryMismatch(String),
    AnchoredComponent,
    NotStandardGenerator,
    InvariantViolation(String),
    InternalInconsistency(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonExactDivision => f.write_str("division left a nonzero remainder"),
            Error::NonIntegral => f.write_str("factored sum is not a polynomial"),
            Error::ParityViolation { i, j } => {
                write!(f, "odd anchor count an({i})+an({j}) under an admissible coloring")
            }
            Error::BoundaryMismatch(m) => write!(f, "boundary mismatch: {m}"),
            Error::AnchoredComponent => f.write_str("Kempe component meets the anchor line"),
            Error::NotStandardGenerator => f.write_str("not a standard generator"),
            Error::InvariantViolation(m) => write!(f, "invariant violation: {m}"),
            Error::InternalInconsistency(m) => write!(f, "internal inconsistency: {m}"),
        }
    }
}

impl core::error::Error for Error {}
