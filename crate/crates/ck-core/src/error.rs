use core::fmt;

/// Errors raised by the symbolic engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CkError {
    /// A generator or omega index lies outside `0..=N`.
    IndexOutOfRange { index: usize, n: usize },
    /// Two values built over algebras of different `N` were combined.
    MismatchedAlgebra { expected: usize, found: usize },
    /// An operation requiring numeric omegas met a symbolic entry.
    SymbolicEntry { index: usize },
    /// An operation requiring nonzero omegas met a zero entry.
    ZeroOmega { index: usize },
    /// A substitution targeted a variable that does not exist or is fixed.
    UnknownVariable { index: usize },
    /// A W index set is malformed (odd length, not increasing, out of range).
    BadIndexSet,
    /// The Casimir order `s` is outside `1..=floor(N/2)`.
    OrderOutOfRange { s: usize, n: usize },
    /// The extra Casimir exists only for odd `N`.
    EvenN { n: usize },
    /// The omega ratio under the closed-form square root failed to cancel
    /// to a perfect square; indicates a convention error, never expected.
    CancellationFailure,
    /// The Killing form is degenerate (some omega is zero), duality undefined.
    DegenerateForm,
}

impl fmt::Display for CkError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CkError::IndexOutOfRange { index, n } => {
                write!(f, "index {index} out of range for N = {n}")
            }
            CkError::MismatchedAlgebra { expected, found } => {
                write!(f, "mismatched algebras: N = {expected} vs N = {found}")
            }
            CkError::SymbolicEntry { index } => {
                write!(f, "omega_{index} is symbolic but a numeric value is required")
            }
            CkError::ZeroOmega { index } => {
                write!(f, "omega_{index} is zero but a nonzero value is required")
            }
            CkError::UnknownVariable { index } => {
                write!(f, "omega_{index} is not a symbolic variable of this algebra")
            }
            CkError::BadIndexSet => write!(f, "malformed W index set"),
            CkError::OrderOutOfRange { s, n } => {
                write!(f, "Casimir order s = {s} out of range for N = {n}")
            }
            CkError::EvenN { n } => {
                write!(f, "the extra Casimir requires odd N, got N = {n}")
            }
            CkError::CancellationFailure => {
                write!(f, "omega ratio is not a perfect square after cancellation")
            }
            CkError::DegenerateForm => {
                write!(f, "Killing form is degenerate: some omega vanishes")
            }
        }
    }
}

impl core::error::Error for CkError {}
