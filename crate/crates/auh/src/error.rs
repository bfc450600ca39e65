use thiserror::Error;

/// Errors produced by this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A probability vector failed validation (empty, negative mass,
    /// not normalizable, or mixed representations).
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    /// A distribution and a length profile disagree on symbol count.
    #[error("dimension mismatch: distribution has {dist} symbols, profile has {profile}")]
    DimensionMismatch { dist: usize, profile: usize },

    /// An intermediate-node index outside `1..=n-2`.
    #[error("invalid intermediate node {index} for alphabet size {n}")]
    InvalidNode { index: usize, n: usize },

    /// A symbol outside `1..=n` was passed to the codec.
    #[error("invalid symbol {symbol} for alphabet size {n}")]
    InvalidSymbol { symbol: u32, n: u32 },

    /// Decoder ran out of bits in the middle of a codeword, or the
    /// framed header is short.
    #[error("truncated bitstream")]
    TruncatedStream,

    /// A family or grid parameter outside its documented range.
    #[error("bad parameter: {0}")]
    BadParam(String),

    /// A function argument outside its mathematical domain.
    #[error("domain error: {0}")]
    DomainError(String),

    /// A grid contains no structurally anti-uniform point.
    #[error("no anti-uniform point exists on the n={n}, m={m} grid")]
    EmptyFeasibleSet { n: usize, m: u64 },

    /// A perturbation move's premise does not hold.
    #[error("move not applicable: {0}")]
    MoveNotApplicable(String),

    /// Local ascent was started from a non-anti-uniform distribution.
    #[error("local ascent requires an anti-uniform starting distribution")]
    NotAuhStart,

    /// Local ascent hit its iteration cap or step floor before all
    /// violations fell under the tolerance.
    #[error("local ascent failed to converge after {iterations} iterations")]
    ConvergenceFailure { iterations: u64 },

    /// Malformed numeric literal or JSON input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
