use thiserror::Error;

/// Errors raised by the toolkit.
///
/// Variants are grouped by how the CLI reports them: parse problems,
/// domain violations (bad input for an otherwise working operation), and
/// internal cross-check failures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cannot parse {what}: {token:?}")]
    Parse { what: &'static str, token: String },

    #[error("invalid algebra {family}{rank}: {reason}")]
    InvalidAlgebra {
        family: char,
        rank: usize,
        reason: &'static str,
    },

    #[error("weight has {got} labels, algebra has rank {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight {weight} is outside the level-{level} alcove")]
    AlcoveViolation { weight: String, level: u32 },

    #[error("weights live at different levels: {expected} and {got}")]
    LevelMismatch { expected: u32, got: u32 },

    #[error("{what} exceeds cap: {value} > {cap}")]
    CapExceeded {
        what: &'static str,
        value: u128,
        cap: u128,
    },

    #[error("inconsistent embedding: {0}")]
    InconsistentEmbedding(String),

    #[error("normalization is convention-dependent: {0}")]
    ConventionDependent(String),

    #[error("degenerate bilinear form: {0}")]
    Degenerate(&'static str),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("Verlinde sum {value} is not within {tolerance:e} of an integer")]
    NonIntegral { value: String, tolerance: f64 },

    #[error("negative multiplicity {multiplicity} for {weight} at degree {degree}")]
    NegativeMultiplicity {
        weight: String,
        degree: usize,
        multiplicity: i64,
    },

    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
}

impl Error {
    /// True for failures of an internal consistency check (as opposed to bad
    /// input).
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::NonIntegral { .. }
                | Error::NegativeMultiplicity { .. }
                | Error::CrossCheck(_)
                | Error::Overflow(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
