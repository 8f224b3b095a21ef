//! Exact arithmetic for expansions of real numbers in non-integer bases.
//!
//! The crate computes greedy and quasi-greedy digit expansions over exactly
//! represented bases (rationals or isolated roots of integer polynomials),
//! decides lexicographic admissibility and univoqueness with three-valued
//! verdicts, classifies bases by the shift conditions on the quasi-greedy
//! expansion of 1, and enumerates or counts univoque digit words with a
//! survivor automaton. All comparisons reduce to certified sign
//! determination; there is no floating point in any decision path.

pub mod automaton;
pub mod base;
pub mod classify;
pub mod constants;
pub mod enumerate;
pub mod error;
pub mod expansion;
pub mod field;
pub mod interval;
pub(crate) mod poly;
pub mod word;

pub use base::{base_from_word, compare_bases, parse_descriptor, AlgebraicBase, BaseDescriptor};

pub use error::{BaseError, EnumerateError, ExpansionError, WordError, WordToBaseError};
pub use expansion::{
    alpha_prefix, alpha_sequence, count_expansion_branches, detect_eventual_periodicity,
    greedy_digits, greedy_finite_to_quasi, quasi_greedy_digits, value_of_ep, value_of_word,
    Algorithm, DigitStream, DEFAULT_MAX_STEPS,
};
pub use field::FieldElement;
pub use interval::IntervalApprox;
pub use word::{EpWord, Sequence, Word};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
