use crate::cube::{Configuration, Subcube};
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {0} is outside the supported range 1..={max}", max = crate::MAX_DIMENSION)]
    InvalidDimension(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation `{operation}` supports at most n = {limit}, got n = {n}")]
    DimensionTooLarge {
        operation: &'static str,
        limit: usize,
        n: usize,
    },
    #[error("value {value:#b} does not fit in {n} bits")]
    ValueOutOfRange { value: u32, n: usize },
    #[error("table has {found} entries, expected {expected}")]
    TableLength { expected: usize, found: usize },
    #[error("empty input")]
    EmptyInput,
    #[error("configuration {point} is not a member of subcube {cube}")]
    NotMember { point: Configuration, cube: Subcube },
    #[error("graph is not reflexive at {0}")]
    NotReflexive(Configuration),
    #[error("out-neighbourhood of {0} is not a subcube")]
    NotSubcube(Configuration),
    #[error("layers are not nested: layer {0} is not contained in layer {1}")]
    LayersNotNested(usize, usize),
    #[error("too many layers: {0} (palette has {1} colours)")]
    TooManyLayers(usize, usize),
    #[error("subcubes {0} and {1} overlap")]
    Overlap(Subcube, Subcube),
    #[error("supports of parts {0} and {1} overlap")]
    SupportOverlap(usize, usize),
    #[error("arrangement has an empty common intersection")]
    EmptyArrangement,
    #[error("target {target} lies outside the common intersection {core}")]
    TargetOutsideCore { target: Configuration, core: Subcube },
    #[error("arrangement network validation failed: {0}")]
    ValidationFailed(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("period exceeds the representable range")]
    PeriodOverflow,
    #[error("missing fixture `{0}`")]
    MissingFixture(String),
}
