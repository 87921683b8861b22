use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid truncation profile: {0}")]
    InvalidProfile(String),
    #[error("operands carry different truncation profiles")]
    ProfileMismatch,
    #[error("profile {0} would be widened; use an explicit embed")]
    ProfileWiden(&'static str),
    #[error("window exhausted: exponent {exponent} of {var} outside [{low}, {high}]")]
    WindowExhausted {
        var: &'static str,
        exponent: i64,
        low: i64,
        high: i64,
    },
    #[error("request outside the truncation profile: {0}")]
    OutOfProfile(String),
    #[error("constant term is not invertible")]
    NonUnit,
    #[error("log needs constant term 1")]
    LogDomain,
    #[error("exponential argument does not terminate within the profile")]
    NonTerminating,
    #[error("row {index} is not leading-normalized at exponent {expected}")]
    NonNormalizedRow { index: usize, expected: i64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("oracle bounds exceeded (d <= 6, m <= 7): d = {d}, m = {m}")]
    OracleBounds { d: u32, m: u32 },
    #[error("negative q2 exponents survived: {0}")]
    CancellationFailed(String),
    #[error("zero pivot in triangular solve")]
    ZeroPivot,
    #[error("degenerate soliton parameters: Wronskian vanishes at k = {0}")]
    DegenerateSoliton(usize),
    #[error("parity violation: {0}")]
    Parity(String),
}
