use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("need at least {min} strands, got {strands}")]
    TooFewStrands { strands: usize, min: usize },

    #[error("band generator A({i},{j}) requires 1 <= i < j <= {n}")]
    InvalidBand { i: usize, j: usize, n: usize },

    #[error("curve around punctures {i}..{j} is not essential in the {n}-punctured disk")]
    InessentialCurve { i: usize, j: usize, n: usize },

    #[error("the empty lamination cannot seed an iteration")]
    ZeroSeed,

    #[error("loop word reduces to the trivial loop")]
    TrivialLoop,

    #[error("loop generator g{index} out of range for a sphere with {punctures} punctures")]
    LoopIndexOutOfRange { index: usize, punctures: usize },

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("invalid surface type (p={p}, n={n}): {reason}")]
    InvalidSurface { p: u32, n: u32, reason: &'static str },

    #[error("{0}")]
    Domain(String),

    #[error("invalid options: {0}")]
    InvalidOptions(String),
}

pub type Result<T> = std::result::Result<T, Error>;
