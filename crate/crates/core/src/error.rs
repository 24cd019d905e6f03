use alloc::string::String;
use core::fmt;

/// Failure modes shared by every module of the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Division by the zero polynomial or a zero scalar.
    DivisionByZero,
    /// The combination is degenerate (`gamma_0 != 1` or `gamma_K == 0`).
    DegenerateCombination,
    /// The normalization or operator is undefined at this parameter.
    DegenerateParameter(&'static str),
    /// An argument is outside the accepted domain.
    InvalidArgument(String),
    /// The supplied interval does not isolate exactly one root.
    NotIsolating,
    /// The supplied point is not a zero; carries the residual value.
    NotAZero { residual: crate::ratpoly::Rational },
    /// An iterative numeric method did not converge.
    NonConvergence { iterations: usize, unconverged: usize },
    /// A requested degree exceeds the exact-arithmetic cap.
    ExceedsCap { requested: usize, cap: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::DegenerateCombination => {
                write!(f, "degenerate combination: need gamma_0 = 1 and gamma_K != 0")
            }
            Error::DegenerateParameter(what) => write!(f, "degenerate parameter: {what}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::NotAZero { residual } => write!(
                f,
                "not a zero (residual {})",
                crate::ratpoly::format_rational(residual)
            ),
            Error::NotIsolating => write!(f, "interval does not isolate a single root"),
            Error::NonConvergence { iterations, unconverged } => write!(
                f,
                "root finder did not converge after {iterations} iterations ({unconverged} roots unconverged)"
            ),
            Error::ExceedsCap { requested, cap } => {
                write!(f, "degree {requested} exceeds the exact-arithmetic cap {cap}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
