use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("0 is not a natural number in this domain")]
    Zero,
    #[error("invalid range: lo {lo} > hi {hi}")]
    InvalidRange { lo: u64, hi: u64 },
    #[error("sieve limit {0} is below 2")]
    SieveLimitTooSmall(u64),
    #[error("sieve limit {limit} exceeds the desk-scale cap of {cap}")]
    SieveLimitTooLarge { limit: u64, cap: u64 },
    #[error("block {0} runs past the 64-bit range")]
    BlockOutOfRange(u64),
    #[error("degenerate signal: need at least 2 samples, got {0}")]
    DegenerateSignal(usize),
    #[error("max period {max_period} must be below half the sequence length {len}")]
    PeriodTooLong { max_period: usize, len: usize },
    #[error("count must be positive")]
    EmptyCount,
    #[error("invalid plot config: {0}")]
    InvalidConfig(String),
    #[error("writing {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
