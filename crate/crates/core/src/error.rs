//! Error type shared by every module of the crate.

use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in exact evaluation and verification.
///
/// Domain violations are first-class values rather than panics: the
/// certifier must be able to detect and report them (a negative radicand
/// under a square root, for instance, is a finding, not a crash).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Square root (or similar) applied to a negative quantity.
    /// `expr` identifies the offending expression, e.g. `H1(4, 2)`.
    NegativeRadicand { expr: String },
    /// An operation received an argument outside its domain.
    Domain { op: &'static str, reason: String },
    /// Interval division where the divisor straddles or touches zero.
    IntervalDivByZero,
    /// An operation on the zero polynomial that requires a nonzero one.
    ZeroPolynomial { op: &'static str },
    /// Root isolation asked for a root of a polynomial without real roots.
    NoRealRoot,
    /// A comparison or enclosure was still undecided at the precision cap.
    UndecidedAtPrecision { what: String },
    /// A recurrence engine produced a non-integer intermediate value.
    /// This signals a transcription bug, never a rounding issue.
    NonIntegerEntry { n: i64, k: i64, engine: &'static str },
    /// Brute-force enumeration was asked to exceed its configured cap.
    EnumerationCap { n: i64, cap: i64 },
    /// Two independently built tables disagree.
    EngineMismatch { n: i64, k: i64, left: String, right: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NegativeRadicand { expr } => {
                write!(f, "negative radicand in {expr}")
            }
            Error::Domain { op, reason } => write!(f, "{op}: {reason}"),
            Error::IntervalDivByZero => {
                write!(f, "interval division by an interval containing zero")
            }
            Error::ZeroPolynomial { op } => write!(f, "{op}: zero polynomial"),
            Error::NoRealRoot => write!(f, "polynomial has no real root"),
            Error::UndecidedAtPrecision { what } => {
                write!(f, "undecided at precision cap: {what}")
            }
            Error::NonIntegerEntry { n, k, engine } => write!(
                f,
                "engine {engine} produced a non-integer value at ({n}, {k})"
            ),
            Error::EnumerationCap { n, cap } => {
                write!(f, "enumeration length {n} exceeds cap {cap}")
            }
            Error::EngineMismatch { n, k, left, right } => {
                write!(f, "engines disagree at ({n}, {k}): {left} != {right}")
            }
        }
    }
}

impl std::error::Error for Error {}
