use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires a non-empty word")]
    EmptyWord,

    #[error("operation requires a word of length at least {min}, got {len}")]
    WordTooShort { len: usize, min: usize },

    #[error("invalid character {ch:?} at offset {offset}; expected a lowercase letter a-z")]
    InvalidCharacter { ch: char, offset: usize },

    #[error("symbol {symbol} is outside the alphabet of size {size}")]
    SymbolOutOfAlphabet { symbol: u8, size: usize },

    #[error("alphabet size must be between 1 and {max}, got {size}")]
    InvalidAlphabet { size: usize, max: usize },

    #[error("words are over different alphabets (sizes {left} and {right})")]
    AlphabetMismatch { left: usize, right: usize },

    #[error("position {pos} is out of range for a word of length {len}")]
    PositionOutOfRange { pos: usize, len: usize },

    #[error("interval [{start}..{end}] is not valid for a word of length {len}")]
    InvalidInterval {
        start: usize,
        end: usize,
        len: usize,
    },

    #[error("word is not primitive, its Lyndon conjugate is not unique")]
    NotPrimitive,

    #[error("word is not border-free")]
    NotBorderFree,

    #[error("operation requires a binary word (symbols a and b only)")]
    NotBinary,

    #[error("interval [{start}..{end}] is not a run of the word")]
    NotARun { start: usize, end: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("word length {len} exceeds the configured cap of {cap}")]
    CapExceeded { len: usize, cap: usize },

    #[error("{count} words of length {len} over {alphabet} letters exceed the cap of {cap}")]
    SpaceTooLarge {
        alphabet: usize,
        len: usize,
        count: u128,
        cap: u64,
    },

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("{what} disagrees with its oracle on {word:?}: {detail}")]
    OracleMismatch {
        what: String,
        word: String,
        detail: String,
    },

    /// A property that is proven to hold was observed to fail.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}
