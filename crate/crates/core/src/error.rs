use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("radicand mismatch: sqrt({0}) and sqrt({1}) cannot be mixed")]
    RadicandMismatch(u64, u64),

    #[error("negative radicand: {0}")]
    NegativeRadicand(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("negative index {0}")]
    NegativeIndex(i64),

    #[error("inexact division in {0}")]
    InexactDivision(&'static str),

    #[error("invalid Frobenius symbol: {0}")]
    InvalidFrobenius(String),

    #[error("invalid block coordinates: {0}")]
    InvalidBlocks(String),

    #[error("invalid shift: {0}")]
    InvalidShift(String),

    #[error("diagram is not in standard form")]
    NotStandardForm,

    #[error("site {0} is already occupied")]
    SiteOccupied(i64),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("flip sequence does not close the cycle: M_p != M_0 + {0}")]
    CycleNotClosed(i64),

    #[error("tau functions at the ends of the cycle are not proportional")]
    TauNotProportional,

    #[error("non-positive shift Delta = {0}")]
    NonPositiveDelta(i64),

    #[error("wrong period: expected p = {expected}, got {got}")]
    WrongPeriod { expected: usize, got: usize },

    #[error("surd part does not vanish in {0}")]
    SurdResidue(&'static str),

    #[error("rational function is not a function of the squared variable")]
    NotEven,

    #[error("degenerate solution: {0}")]
    Degenerate(&'static str),

    #[error("zero symmetry scale")]
    ZeroScale,

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
