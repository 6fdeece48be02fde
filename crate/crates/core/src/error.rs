use std::path::PathBuf;

use thiserror::Error;

use crate::poly::IntPolynomial;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation at index {index}: {reason}")]
    InvalidPermutation { index: usize, reason: String },

    #[error("invalid Lehmer code at position {position}: entry {value} exceeds {max}")]
    InvalidCode {
        position: usize,
        value: u32,
        max: usize,
    },

    #[error("position {position} out of range for a permutation of size {n}")]
    PositionOutOfRange { position: usize, n: usize },

    #[error("Lehmer code jumps by {change} at position {position}; no lattice path exists")]
    NotAPath { position: usize, change: i64 },

    #[error("Lehmer rules fail for {word:?}")]
    LehmerRulesViolated { word: Vec<u32> },

    #[error("zero polynomial has no leading monomial")]
    ZeroPolynomial,

    #[error("monomial {exponents:?} lies outside the staircase for n = {n}")]
    StaircaseViolation { exponents: Vec<u32>, n: usize },

    #[error("polynomial is not homogeneous (degrees {first} and {second})")]
    NotHomogeneous { first: u32, second: u32 },

    #[error("invalid pipe dream: {0}")]
    InvalidPipeDream(String),

    #[error("pipe dream row {row} is not left-justified")]
    NotLeftJustified { row: usize },

    #[error("pipe dream enumeration exceeded the limit of {limit}")]
    EnumerationLimit { limit: usize },

    #[error("divided-difference and pipe-dream methods disagree: {divdiff} vs {pipedream}")]
    MethodMismatch {
        divdiff: Box<IntPolynomial>,
        pipedream: Box<IntPolynomial>,
    },

    #[error("Monk's rule needs k >= 1, got {k}")]
    InvalidMonkIndex { k: usize },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}
