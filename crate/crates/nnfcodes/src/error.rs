use thiserror::Error;

/// Errors reported by this crate.
#[derive(Debug, Error)]
#[non_exhaustive]
pub enum Error {
    /// A code needs at least one codeword.
    #[error("empty input: a code needs at least one codeword")]
    EmptyInput,

    /// Codewords (or generator rows) were not all the same length.
    #[error("ragged input: row {index} has length {got}, expected {expected}")]
    RaggedInput {
        index: usize,
        expected: usize,
        got: usize,
    },

    /// The operation requires a code whose cardinality is a power of two.
    #[error("cardinality {m} is not a power of two")]
    NotPowerOfTwo { m: usize },

    /// A polynomial that should describe a Boolean function evaluated
    /// outside {0, 1}.
    #[error("column {column} evaluates to {value} at point {point}; expected 0 or 1")]
    NotBoolean {
        column: usize,
        point: usize,
        value: i64,
    },

    /// Distance computations need at least two codewords.
    #[error("distance computations need at least two codewords")]
    TooFewWords,

    /// Every codeword is the zero word, so nothing remains once the zero
    /// codeword is excluded.
    #[error("all codewords are zero; nothing remains after excluding the zero codeword")]
    EmptyAfterExclusion,

    /// A variable set contained an out-of-range or repeated index.
    #[error("invalid variable set: {0}")]
    InvalidVariableSet(String),

    /// The requested number of variables exceeds a supported limit.
    #[error("k = {k} exceeds the limit {max} for {context}")]
    KTooLarge {
        k: u32,
        max: u32,
        context: &'static str,
    },

    /// A checked 64-bit integer operation overflowed. Results are never
    /// silently wrapped.
    #[error("integer overflow during {phase}")]
    IntegerOverflow { phase: &'static str },

    /// A text input (code file, generator file, bit string) could not be
    /// parsed. `line` is 1-based; 0 means the input as a whole.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
