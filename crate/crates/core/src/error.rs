use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A character outside the declared alphabet. `position` is 1-based.
    #[error("character {symbol:?} at position {position} is not in the alphabet")]
    SymbolNotInAlphabet { symbol: char, position: usize },

    /// Alphabet symbols must be printable, non-space ASCII.
    #[error("{0:?} is not a printable ASCII symbol")]
    UnprintableSymbol(char),

    #[error("no rule for letter {0:?}")]
    MissingRule(char),

    #[error("letter {0:?} has more than one rule")]
    DuplicateRule(char),

    #[error("image of letter {0:?} is empty")]
    EmptyImage(char),

    /// Iteration needs every image letter to have a rule of its own.
    #[error("morphism is not an endomorphism: image letter {0:?} has no rule")]
    NotEndomorphism(char),

    #[error("outer morphism has no rule for inner letter {0:?}")]
    AlphabetMismatch(char),

    #[error("power exponent must be at least 1")]
    ZeroPower,

    #[error("operation needs a nonempty word")]
    EmptyWord,

    #[error("word length {len} exceeds the brute-force cap {cap}")]
    OracleCapExceeded { len: usize, cap: usize },

    #[error("word length {len} exceeds the limit {limit}")]
    TooLong { len: u128, limit: u128 },

    #[error("index {index} is outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("[{start}, {end}] with period {period} is not a run: {reason}")]
    InvalidRun {
        start: usize,
        end: usize,
        period: usize,
        reason: &'static str,
    },

    #[error("cannot parse {0:?} as a non-negative decimal")]
    BadDecimal(alloc::string::String),
}
