//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input text does not match the word/relation grammar.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A documented operation precondition was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The relator's weight pair has gcd != 1, so the abelianization is not
    /// infinite cyclic and the zero-weight descent cannot terminate at 0/±1.
    #[error("relator is not knot-like: generator weights {weights:?} have gcd {gcd}")]
    NotKnotLike { weights: (i64, i64), gcd: i64 },

    /// Empty relator or one with both generator weights zero.
    #[error("degenerate relator: {0}")]
    DegenerateRelator(String),

    /// Syllable decomposition requires the conjugating generator to have
    /// weight zero.
    #[error("word has nonzero weight {weight} in the conjugating generator")]
    NotZeroWeight { weight: i64 },

    /// Every syllable column sum vanished; no support to build on.
    #[error("empty support: all syllable column sums are zero")]
    EmptySupport,

    /// Sturm chains are only defined here for squarefree polynomials.
    #[error("polynomial is not squarefree")]
    NotSquarefree,

    /// Root counting on (0, oo) / (-oo, 0) requires a nonzero constant term.
    #[error("polynomial vanishes at the interval endpoint 0")]
    ZeroAtEndpoint,

    /// Two-bridge parameters must be coprime odd integers 0 < p < q.
    #[error("invalid two-bridge fraction {p}/{q}: {reason}")]
    InvalidFraction { p: i64, q: i64, reason: String },

    /// A proven internal invariant failed; this is a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 1 for input/parse problems, 2 for
    /// structural problems with an otherwise well-formed input.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Parse { .. } => 1,
            _ => 2,
        }
    }
}
