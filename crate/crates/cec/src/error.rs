//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("antisymmetry violated at [{i},{j}] (component {k})")]
    AntisymmetryViolation { i: usize, j: usize, k: usize },

    #[error("Jacobi identity fails on basis triple ({i},{j},{k})")]
    JacobiViolation { i: usize, j: usize, k: usize },

    #[error("bilinear form is not symmetric or not ad-invariant")]
    InvalidForm,

    #[error("form is singular but a nondegenerate form is required")]
    SingularFormWhenNondegenerateRequired,

    #[error("form is degenerate")]
    DegenerateForm,

    #[error("matrices do not define a representation (bracket mismatch at pair ({i},{j}))")]
    NotARepresentation { i: usize, j: usize },

    #[error("representation is not faithful")]
    NotFaithful,

    #[error("subalgebra columns are not closed under the bracket")]
    NotASubalgebra,

    #[error("algebra is not abelian")]
    NotAbelian,

    #[error("algebra is not semisimple")]
    NotSemisimple,

    #[error("graded piece exceeds the size budget ({size} > {budget})")]
    TruncationOverflow { size: usize, budget: usize },

    #[error("states belong to different complexes")]
    MixedComplex,

    #[error("construction identity `{identity}` fails on {detail}")]
    PinningSuiteFailure { identity: String, detail: String },

    #[error("homotopy witness condition `{condition}` fails: {detail}")]
    HomotopyConditionsFailed { condition: String, detail: String },

    #[error("homotopy identity fails on piece {detail}")]
    HomotopyIdentityFailed { detail: String },

    #[error("differential does not preserve the basic subspace on piece {detail}")]
    BasicNotClosed { detail: String },

    #[error("input is not a basic cocycle: {0}")]
    NotACocycle(String),

    #[error("missing fixed-point or Poincare data: {0}")]
    MissingBetti(String),

    #[error("component count c0={0} outside the admissible range 3..=6")]
    C0OutOfRange(i64),

    #[error("config error: {0}")]
    ConfigError(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
