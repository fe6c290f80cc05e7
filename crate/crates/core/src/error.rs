use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol {found:?} at position {position} is not in the {alphabet} alphabet")]
    AlphabetMismatch {
        alphabet: &'static str,
        found: char,
        position: usize,
    },

    #[error("index {index} outside the window [{lo}, {hi}]")]
    OutOfRange { index: i64, lo: i64, hi: i64 },

    #[error("iteration depth {requested} exceeds the configured limit {max}")]
    DepthLimit { requested: u32, max: u32 },

    #[error("range of {len} symbols exceeds the configured cap {cap}")]
    RangeTooLarge { len: u128, cap: u64 },

    #[error("empty range: lo = {lo} > hi = {hi}")]
    InvalidRange { lo: i64, hi: i64 },

    #[error("word length {len} is not a multiple of 3")]
    LengthNotMultipleOfThree { len: usize },

    #[error("balanced ternary digits have a zero leading digit")]
    MalformedDigits,

    #[error("balanced ternary value does not fit in a 64-bit signed integer")]
    Overflow,

    #[error("need at least two occurrences of 0, found {zeros}")]
    InsufficientInput { zeros: usize },

    #[error("{count} ones between consecutive zeros ending at position {position}; not a Thue-Morse prefix")]
    AlphabetOverflow { position: usize, count: usize },

    #[error("digit {digit} is not in the automaton input alphabet {alphabet}")]
    InvalidDigit { digit: i64, alphabet: &'static str },

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
}
