//! Error type shared by every module in the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("symbol {symbol} out of range for alphabet of size {alphabet_size}")]
    SymbolOutOfRange { symbol: usize, alphabet_size: usize },

    #[error("empty sequence: a type over zero symbols is undefined")]
    EmptySequence,

    #[error("message index {message} out of range (num_messages = {num_messages})")]
    MessageOutOfRange { message: u64, num_messages: u64 },

    #[error("codebook generation failed: {0}")]
    CodebookInfeasible(String),

    #[error(
        "configuration asks for {requested} codewords, above the decoder scale limit {limit}; \
         the decoder is exhaustive over codewords, raise `max_codewords` only if the scan is \
         actually affordable"
    )]
    ScaleLimit { requested: u64, limit: u64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("attack witness absent: {0}")]
    WitnessAbsent(String),

    #[error("linear program did not terminate: {0}")]
    LpStalled(String),
}

pub type Result<T> = std::result::Result<T, Error>;
