use thiserror::Error;

/// Errors produced by the library.
#[derive(Error, Debug)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} outside supported range [3, 2^31 - 1]")]
    ModulusOutOfRange(u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("scale factor must be nonzero")]
    ZeroScale,
    #[error("interval [-{t}, {t}] has 2t+1 > p = {p} elements and wraps onto itself")]
    IntervalTooWide { t: u64, p: u64 },
    #[error("set operand must be nonempty")]
    EmptySet,
    #[error("inputs must be positive integers")]
    NonPositiveEntry,
    #[error("need at least {min} entries, got {got}")]
    TooFewEntries { got: usize, min: usize },
    #[error("polynomial has {len} coefficients but the code dimension is {k}")]
    DegreeTooHigh { len: usize, k: usize },
    #[error("evaluation points must be pairwise distinct")]
    DuplicatePoints,
    #[error("code dimension k = {k} must satisfy k < n = {n} <= p")]
    InvalidDimension { k: usize, n: usize },
    #[error("puncturing to {kept} points needs more than k = {k}")]
    PunctureTooSmall { kept: usize, k: usize },
    #[error("index {index} out of range for {n} nodes")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("cell length t = {t} must satisfy 1 <= t < p = {p}")]
    CellLengthOutOfRange { t: u64, p: u64 },
    #[error("helper count d = {d} must satisfy k = {k} <= d <= n-1 = {max}")]
    HelperCountOutOfRange { d: usize, k: usize, max: usize },
    #[error("failed node may not appear among the helpers")]
    FailedAmongHelpers,
    #[error("duplicate helper index {0}")]
    DuplicateHelper(usize),
    #[error("enumeration needs {candidates} candidates, over the budget of {budget}")]
    BudgetExceeded { candidates: u128, budget: u64 },
    #[error("no codeword is consistent with the received messages")]
    NoConsistentCodeword,
    #[error("two consistent codewords disagree at the failed node; scheme was not validated")]
    AmbiguousRepair,
    #[error("helper message names unknown helper {0}")]
    MessageForUnknownHelper(usize),
    #[error("missing message for helper {0}")]
    MissingMessage(usize),
    #[error("cell index {cell} out of range for {s} cells")]
    CellOutOfRange { cell: usize, s: u64 },
    #[error("row {row}: {source}")]
    RowRepair { row: usize, source: Box<Error> },
    #[error("invalid construction parameters: {0}")]
    InvalidConstruction(&'static str),
    #[error("reconstructed value {reconstructed} differs from the secret {secret}")]
    SecretMismatch { secret: u64, reconstructed: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
