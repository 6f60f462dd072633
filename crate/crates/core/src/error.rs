use std::fmt;

use thiserror::Error;

/// The identity a Jacobi-type check was evaluating when it failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// Jacobi identity of the first subalgebra.
    Jacobi,
    /// Jacobi identity of the second (dual) subalgebra.
    DualJacobi,
    /// Mixed identities coupling the two subalgebras.
    Mixed,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Identity::Jacobi => "Jacobi identity in g",
            Identity::DualJacobi => "Jacobi identity in g~",
            Identity::Mixed => "mixed Jacobi identity",
        })
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("no value assigned to variable `{0}`")]
    MissingVariable(String),

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("tensor is not antisymmetric at f[{i}][{j}][{k}]")]
    NotAntisymmetric { i: usize, j: usize, k: usize },

    #[error("n-matrix of the decomposition is not symmetric")]
    NonSymmetricN,

    #[error("structure constants do not satisfy the Jacobi identity")]
    NotLieAlgebra,

    #[error("expected numeric structure constants, found parametric entry `{0}`")]
    ParametricInput(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("{identity} violated at index tuple {indices:?} (residual {residual})")]
    JacobiViolation {
        identity: Identity,
        indices: [usize; 4],
        residual: String,
    },

    #[error("pivot `{pivot}` for component {column} vanishes at {at}")]
    ParametricPivot { column: String, pivot: String, at: String },

    #[error("constraint `{constraint}` violated by {values}")]
    ConstraintViolation { constraint: String, values: String },

    #[error("equality constraint `{0}` cannot be eliminated by substitution")]
    UnsupportedConstraint(String),

    #[error("schema violation at `{pointer}`: {reason}")]
    Schema { pointer: String, reason: String },

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("entry `{id}` does not have its claimed types: {detail}")]
    ClaimMismatch { id: String, detail: String },

    #[error("entry `{id}`: {source}")]
    InvalidEntry { id: String, source: Box<Error> },

    #[error("unknown Bianchi class `{0}`")]
    UnknownClass(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(input: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.into(),
            reason: reason.into(),
        }
    }
}
