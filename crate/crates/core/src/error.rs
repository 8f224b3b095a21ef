//! Error types shared by the crate.

use thiserror::Error;

/// Errors raised while constructing an [`crate::AlgebraicBase`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaseError {
    /// The described number is not greater than one.
    #[error("base must be greater than 1")]
    NotGreaterThanOne,
    /// The interval does not isolate exactly one root, or an endpoint is a
    /// root of the (square-free part of the) polynomial.
    #[error("interval does not isolate exactly one root: {0}")]
    NotIsolating(String),
    /// The polynomial is zero or constant and has no roots at all.
    #[error("polynomial has no roots")]
    DegeneratePolynomial,
    /// A denominator was zero or a numeric field failed to parse.
    #[error("invalid base descriptor: {0}")]
    InvalidDescriptor(String),
}

/// Errors raised by [`crate::base_from_word`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordToBaseError {
    /// The digit word sums to 1 for no base q > 1 (e.g. the period is all
    /// zeros, so the word is finite).
    #[error("no base q > 1 has this word summing to 1")]
    NoRootAboveOne,
}

/// Errors raised by digit-word operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    /// A digit exceeds the alphabet bound m.
    #[error("digit {digit} exceeds alphabet bound {m}")]
    DigitExceedsM { digit: u32, m: u32 },
    /// The textual form could not be parsed.
    #[error("invalid word syntax: {0}")]
    Parse(String),
}

/// Errors raised by the expansion engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpansionError {
    /// The point lies outside J_q = [0, m/(q-1)].
    #[error("point is outside J_q = [0, m/(q-1)]")]
    OutOfRange,
    /// The finite greedy word has no nonzero digit, so the rewrite rule does
    /// not apply.
    #[error("word has no nonzero digit")]
    LastDigitZero,
}

/// Errors raised by the enumeration module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    /// The two bases have different ceilings, so their digit alphabets differ.
    #[error("bases have different ceilings")]
    CeilingMismatch,
    /// The bases are not in the required strict order.
    #[error("bases are not strictly ordered")]
    NotOrdered,
    /// The quasi-greedy expansion of 1 was not detected to be eventually
    /// periodic, but the operation requires exact mode.
    #[error("quasi-greedy expansion of 1 not detected eventually periodic")]
    AlphaNotEp,
    /// No candidate base validated within the search budget.
    #[error("no candidate base found within the search budget")]
    NotFound,
    /// The operation is only defined for non-integer bases.
    #[error("base is an integer")]
    IntegerBase,
    /// A point operation failed.
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
}
