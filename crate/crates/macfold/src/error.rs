//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A sequence of letters is not a permutation of 1..n.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// A word contains a repeated or zero letter.
    #[error("invalid word: {0}")]
    InvalidWord(String),

    /// Parts are not weakly decreasing positive integers.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// A reading position outside 1..=n.
    #[error("position {position} out of range 1..={n}")]
    PositionOutOfRange { position: usize, n: usize },

    /// A cell that does not belong to the shape.
    #[error("cell (row {row}, col {col}) lies outside shape ({shape})")]
    CellOutsideShape { row: usize, col: usize, shape: String },

    /// An involution or fold index outside its admissible range.
    #[error("index {index} out of range {min}..={max}")]
    IndexOutOfRange { index: usize, min: usize, max: usize },

    /// The pivot letter of a gamma/beta application occurs in the word.
    #[error("letter {letter} occurs in the word {word}")]
    LetterInWord { letter: u8, word: String },

    /// A shape and a word of different sizes were combined.
    #[error("size mismatch: shape ({shape}) has {shape_n} cells but the word has {word_n} letters")]
    SizeMismatch {
        shape: String,
        shape_n: usize,
        word_n: usize,
    },

    /// Two partitions of different totals were compared.
    #[error("partitions ({left}) and ({right}) have different sums")]
    UnequalSums { left: String, right: String },

    /// The folding pipeline only covers shapes with second part at most 2.
    #[error("unsupported shape ({shape}): second part exceeds 2")]
    UnsupportedShape { shape: String },

    /// An n!-scale enumeration was requested beyond the configured budget.
    #[error("size {n} exceeds the enumeration budget of {max_n}; raise the budget to opt in")]
    BudgetExceeded { n: usize, max_n: usize },

    /// A property that is supposed to hold unconditionally failed.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    /// A fundamental expansion did not reconstruct from its Schur coefficients.
    #[error("not a symmetric function: {0}")]
    NotSymmetric(String),
}
