use crate::poly::IntPoly;

/// Errors raised by the symbolic pipelines and the finite-field oracle.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("exact division failed: ({dividend}) is not divisible by ({divisor})")]
    NonzeroRemainder { dividend: IntPoly, divisor: IntPoly },

    #[error("representations live over different monodromy groups ({left} vs {right})")]
    GroupMismatch { left: String, right: String },

    #[error("character map expects rank {expected}, got rank {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("puncture count must be at least 1, got {0}")]
    InvalidPunctureCount(usize),

    #[error("unknown building block `{0}`")]
    UnknownBlock(String),

    #[error("self-check `{name}` failed: expected {expected}, computed {computed}")]
    SelfCheckFailed {
        name: String,
        expected: String,
        computed: String,
    },

    #[error(
        "`{name}` disagrees with the published value: expected {expected}, computed {computed}"
    )]
    MismatchWithPaper {
        name: String,
        expected: String,
        computed: String,
    },

    #[error("cross-check `{name}` failed: {first} vs {second}")]
    CrossCheckFailed {
        name: String,
        first: String,
        second: String,
    },

    #[error("linear system is singular")]
    SingularSystem,

    #[error("linear system has no polynomial solution: {0}")]
    NonPolynomialSolution(String),

    #[error("unsupported field size {0}: need an odd prime q <= 13")]
    UnsupportedField(u64),

    #[error("unsupported genus {0}: need 1, 2 or 3")]
    UnsupportedGenus(u32),

    #[error("verification failed on {} row(s): {}", .0.len(), .0.join("; "))]
    VerificationFailed(Vec<String>),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// A computed value disagreed with a reference or with another route to
    /// the same value, as opposed to a failure of the computation itself.
    pub fn is_mismatch(&self) -> bool {
        matches!(
            self,
            Error::MismatchWithPaper { .. }
                | Error::CrossCheckFailed { .. }
                | Error::VerificationFailed(_)
        )
    }
}
