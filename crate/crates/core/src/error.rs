use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition {0} is not self-conjugate")]
    NotSelfConjugate(String),

    #[error("partition {partition} is not a {p}-core")]
    NotACore { partition: String, p: usize },

    #[error("quotient has {got} components, expected {expected}")]
    QuotientArity { got: usize, expected: usize },

    #[error("no rim hook of length {length} at cell ({row},{col})")]
    InvalidHook { row: usize, col: usize, length: usize },

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("{0} is not an odd prime")]
    NotOddPrime(usize),

    #[error("cyclotomic orders differ: {0} vs {1}")]
    OrderMismatch(u32, u32),

    #[error("radicands differ: {0} vs {1}")]
    RadicandMismatch(i64, i64),

    #[error("class set is not closed under the +/- pairing of split classes")]
    UnpairedSplitClass,

    #[error("value {0} is not rational")]
    Irrational(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix file: {0}")]
    MatrixFormat(String),

    #[error("label mismatch: {0}")]
    LabelMismatch(String),

    #[error("block constraint violated: {0}")]
    BlockConstraint(String),

    #[error("not a permutation matrix: {0}")]
    NotPermutation(String),

    #[error("characters appear in more than one block: {0}")]
    OverlappingBlocks(String),

    #[error("isometry report is not verified")]
    UnverifiedReport,

    #[error("block has weight 0")]
    WeightZero,

    #[error("claim does not apply: {0}")]
    ClaimMismatch(String),

    #[error("internal: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
