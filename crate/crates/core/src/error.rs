use alloc::string::String;

/// Errors raised by the algebraic routines.
///
/// Verification failures that are part of a certificate are reported as
/// data, not through this type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("characteristic polynomial does not split over the rationals")]
    NonRationalSpectrum,
    #[error("element is not semisimple: {0}")]
    NotSemisimple(String),
    #[error("subspace is not closed under the bracket")]
    NotASubalgebra,
    #[error("solvable radical candidate failed verification: {0}")]
    RadicalVerificationFailed(String),
    #[error("nilradical candidate failed verification: {0}")]
    NilradicalVerificationFailed(String),
    #[error("bilinear form is not invariant")]
    FormNotInvariant,
    #[error("bilinear form is degenerate")]
    FormDegenerate,
    #[error("base case outside the supported class: {0}")]
    BaseCaseUnsupported(String),
    #[error("semisimple part of ad(x_f) is not the adjoint of an element of k")]
    AdjointNotInK,
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("class or polynomial is not k-invariant")]
    NotInvariant,
    #[error("invalid symmetric pair: {axiom} ({detail})")]
    InvalidPair { axiom: String, detail: String },
    #[error("symmetric pair has no anti-invariant bilinear form")]
    MissingForm,
    #[error("truncation degree must be even, got {0}")]
    OddTruncation(usize),
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
