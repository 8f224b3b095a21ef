//! Greedy and quasi-greedy digit algorithms with exact remainder orbits.
//!
//! Digits are produced by the remainder recurrence r ← q·r − d, where d is
//! the largest admissible digit (partial sums ≤ x for greedy, < x for
//! quasi-greedy), every tie resolved by certified sign tests. Eventual
//! periodicity is detected by exact repetition of the remainder state; a
//! miss within the step budget is reported as a first-class prefix result,
//! never an error.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_traits::Signed;

use crate::base::AlgebraicBase;
use crate::error::ExpansionError;
use crate::field::FieldElement;
use crate::word::{EpWord, Sequence, Word};

/// Which digit algorithm drives an orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    /// Partial sums stay ≤ x; the expansion may terminate in zeros.
    Greedy,
    /// Partial sums stay < x; the expansion of any x > 0 is infinite.
    QuasiGreedy,
}

/// Default step budget for periodicity detection.
pub const DEFAULT_MAX_STEPS: usize = 10_000;

pub(crate) struct AlphaInfo {
    pub(crate) seq: Sequence,
    /// Steps spent when the result is a prefix; prefixes this long or
    /// shorter can be served from cache.
    pub(crate) steps: usize,
}

/// Is x in J_q = [0, m/(q−1)]? Checked as 0 ≤ x and x·(q−1) ≤ m to avoid
/// field division.
pub fn in_jq(x: &FieldElement) -> bool {
    if x.sign() == Ordering::Less {
        return false;
    }
    let m = x.base().digit_max();
    let xq1 = x.mul_q().sub(x);
    FieldElement::from_integer(x.base(), i64::from(m))
        .sub(&xq1)
        .sign()
        != Ordering::Less
}

fn ensure_in_jq(x: &FieldElement) -> Result<(), ExpansionError> {
    if in_jq(x) {
        Ok(())
    } else {
        Err(ExpansionError::OutOfRange)
    }
}

/// Largest digit d ≤ m with d ≤ y (the greedy choice for y = q·remainder).
fn greedy_digit(y: &FieldElement, m: u32) -> u32 {
    if let Some(_) = y.base().as_rational() {
        let v = &y.coeffs()[0];
        if v.is_negative() {
            return 0;
        }
        let f = v.floor().to_integer();
        return u32::try_from(&f).map_or(m, |d| d.min(m));
    }
    for d in (1..=m).rev() {
        if y.sub_integer(d).sign() != Ordering::Less {
            return d;
        }
    }
    0
}

/// Largest digit d ≤ m with d < y strictly; 0 when no digit qualifies
/// (which only happens on the zero orbit).
fn quasi_digit(y: &FieldElement, m: u32) -> u32 {
    if let Some(_) = y.base().as_rational() {
        let v = &y.coeffs()[0];
        if !v.is_positive() {
            return 0;
        }
        let c = v.ceil().to_integer() - 1u32;
        if c.is_negative() {
            return 0;
        }
        return u32::try_from(&c).map_or(m, |d| d.min(m));
    }
    for d in (1..=m).rev() {
        if y.sub_integer(d).sign() == Ordering::Greater {
            return d;
        }
    }
    0
}

fn pick_digit(algorithm: Algorithm, y: &FieldElement, m: u32) -> u32 {
    match algorithm {
        Algorithm::Greedy => greedy_digit(y, m),
        Algorithm::QuasiGreedy => quasi_digit(y, m),
    }
}

/// An infinite digit stream over the exact remainder orbit.
pub struct DigitStream {
    remainder: FieldElement,
    m: u32,
    algorithm: Algorithm,
}

impl DigitStream {
    pub fn new(x: &FieldElement, algorithm: Algorithm) -> Result<Self, ExpansionError> {
        ensure_in_jq(x)?;
        Ok(DigitStream {
            remainder: x.clone(),
            m: x.base().digit_max(),
            algorithm,
        })
    }

    /// Current remainder q^n·(x − Σ c_i q^{−i}).
    pub fn remainder(&self) -> &FieldElement {
        &self.remainder
    }
}

impl Iterator for DigitStream {
    type Item = u32;
    fn next(&mut self) -> Option<u32> {
        let y = self.remainder.mul_q();
        let d = pick_digit(self.algorithm, &y, self.m);
        self.remainder = y.sub_integer(d);
        Some(d)
    }
}

/// First n greedy digits of x.
pub fn greedy_digits(x: &FieldElement, n: usize) -> Result<Word, ExpansionError> {
    Ok(Word::new(
        DigitStream::new(x, Algorithm::Greedy)?.take(n).collect(),
    ))
}

/// First n quasi-greedy digits of x; the expansion of 0 is 0^∞ by
/// convention.
pub fn quasi_greedy_digits(x: &FieldElement, n: usize) -> Result<Word, ExpansionError> {
    Ok(Word::new(
        DigitStream::new(x, Algorithm::QuasiGreedy)?
            .take(n)
            .collect(),
    ))
}

/// α(q): the quasi-greedy expansion of 1, to n digits.
pub fn alpha_prefix(base: &AlgebraicBase, n: usize) -> Word {
    alpha_of(base, n.max(1), n).prefix(n)
}

/// Run the digit algorithm storing exact remainders; return the eventually
/// periodic word when a remainder repeats, otherwise the digits found.
pub fn detect_eventual_periodicity(
    x: &FieldElement,
    algorithm: Algorithm,
    max_steps: usize,
) -> Result<Sequence, ExpansionError> {
    ensure_in_jq(x)?;
    let m = x.base().digit_max();
    let mut seen: HashMap<FieldElement, usize> = HashMap::new();
    let mut digits: Vec<u32> = Vec::new();
    let mut r = x.clone();
    loop {
        if let Some(&j) = seen.get(&r) {
            let per = digits.split_off(j);
            return Ok(Sequence::Ep(EpWord::new(digits, per)));
        }
        if digits.len() >= max_steps {
            return Ok(Sequence::Prefix(Word::new(digits)));
        }
        seen.insert(r.clone(), digits.len());
        let y = r.mul_q();
        let d = pick_digit(algorithm, &y, m);
        digits.push(d);
        r = y.sub_integer(d);
    }
}

/// The quasi-greedy expansion of 1, detected if possible and cached on the
/// base. `min_prefix` digits are guaranteed available when the result is a
/// prefix.
pub(crate) fn alpha_of(base: &AlgebraicBase, max_steps: usize, min_prefix: usize) -> Sequence {
    let needed = max_steps.max(min_prefix);
    let mut guard = base.repr.alpha_cache.lock().unwrap();
    if let Some(info) = guard.as_ref() {
        match &info.seq {
            Sequence::Ep(_) => return info.seq.clone(),
            Sequence::Prefix(_) if info.steps >= needed => return info.seq.clone(),
            Sequence::Prefix(_) => {}
        }
    }
    let one = FieldElement::one(base);
    let seq = detect_eventual_periodicity(&one, Algorithm::QuasiGreedy, needed)
        .expect("1 is always in J_q");
    *guard = Some(AlphaInfo {
        seq: seq.clone(),
        steps: needed,
    });
    seq
}

/// Public view of the cached α computation.
pub fn alpha_sequence(base: &AlgebraicBase, max_steps: usize) -> Sequence {
    alpha_of(base, max_steps, 0)
}

/// Rewrite a finite greedy expansion b₁…b_n (last nonzero digit at position
/// n) into the quasi-greedy expansion b₁…b_{n−1}(b_n − 1) followed by the
/// α-stream of the base.
pub fn greedy_finite_to_quasi(
    b: &Word,
    base: &AlgebraicBase,
    max_steps: usize,
) -> Result<Sequence, ExpansionError> {
    let last_nonzero = b
        .digits()
        .iter()
        .rposition(|&d| d != 0)
        .ok_or(ExpansionError::LastDigitZero)?;
    let mut prefix: Vec<u32> = b.digits()[..=last_nonzero].to_vec();
    *prefix.last_mut().unwrap() -= 1;
    match alpha_of(base, max_steps, max_steps) {
        Sequence::Ep(alpha) => {
            prefix.extend_from_slice(alpha.preperiod());
            Ok(Sequence::Ep(EpWord::new(prefix, alpha.period().to_vec())))
        }
        Sequence::Prefix(alpha) => {
            prefix.extend_from_slice(alpha.digits());
            Ok(Sequence::Prefix(Word::new(prefix)))
        }
    }
}

/// Exact value Σ c_i q^{−i} of a finite word in the given base.
pub fn value_of_word(w: &Word, base: &AlgebraicBase) -> FieldElement {
    let mut acc = FieldElement::zero(base);
    for &d in w.digits() {
        acc = acc.mul_q().add(&FieldElement::from_integer(base, i64::from(d)));
    }
    acc.div(&FieldElement::pow_q(base, w.len()))
}

/// Exact value of an eventually periodic word, via the closed form
/// [U(q)(q^{|v|}−1) + V(q)] / [q^{|u|}(q^{|v|}−1)].
pub fn value_of_ep(w: &EpWord, base: &AlgebraicBase) -> FieldElement {
    let horner = |digits: &[u32]| {
        let mut acc = FieldElement::zero(base);
        for &d in digits {
            acc = acc.mul_q().add(&FieldElement::from_integer(base, i64::from(d)));
        }
        acc
    };
    let u = w.preperiod();
    let v = w.period();
    let qv1 = FieldElement::pow_q(base, v.len()).sub(&FieldElement::one(base));
    let num = horner(u).mul(&qv1).add(&horner(v));
    let den = FieldElement::pow_q(base, u.len()).mul(&qv1);
    num.div(&den)
}

/// Number of length-n digit words extendable to an expansion of x, i.e.
/// whose exact remainder stays inside [0, m/(q−1)] at every step.
pub fn count_expansion_branches(
    x: &FieldElement,
    n: usize,
) -> Result<u128, ExpansionError> {
    ensure_in_jq(x)?;
    let mut memo: HashMap<(FieldElement, usize), u128> = HashMap::new();
    Ok(count_branches_rec(x, n, &mut memo))
}

fn count_branches_rec(
    r: &FieldElement,
    remaining: usize,
    memo: &mut HashMap<(FieldElement, usize), u128>,
) -> u128 {
    if remaining == 0 {
        return 1;
    }
    if let Some(&c) = memo.get(&(r.clone(), remaining)) {
        return c;
    }
    let m = r.base().digit_max();
    let y = r.mul_q();
    let mut total = 0u128;
    for d in 0..=m {
        let next = y.sub_integer(d);
        if in_jq(&next) {
            total += count_branches_rec(&next, remaining - 1, memo);
        }
    }
    memo.insert((r.clone(), remaining), total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::base_from_word;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn golden() -> AlgebraicBase {
        base_from_word(&EpWord::parse("(10)").unwrap()).unwrap()
    }

    fn q_star() -> AlgebraicBase {
        base_from_word(&EpWord::parse("(110)").unwrap()).unwrap()
    }

    fn digits(w: &Word) -> Vec<u32> {
        w.digits().to_vec()
    }

    #[test]
    fn greedy_examples() {
        let g = golden();
        let one = FieldElement::one(&g);
        assert_eq!(digits(&greedy_digits(&one, 5).unwrap()), [1, 1, 0, 0, 0]);
        // oracle for the 11 prefix: G⁻¹ + G⁻² = 1 exactly
        let v = value_of_word(&Word::new(vec![1, 1]), &g);
        assert_eq!(v.sub(&one).sign(), Ordering::Equal);

        let zero = FieldElement::zero(&g);
        assert_eq!(digits(&greedy_digits(&zero, 4).unwrap()), [0, 0, 0, 0]);

        let two = AlgebraicBase::from_integer(2).unwrap();
        let one2 = FieldElement::one(&two);
        assert_eq!(digits(&greedy_digits(&one2, 4).unwrap()), [1, 1, 1, 1]);
    }

    #[test]
    fn quasi_greedy_examples() {
        let g = golden();
        let one = FieldElement::one(&g);
        assert_eq!(
            digits(&quasi_greedy_digits(&one, 6).unwrap()),
            [1, 0, 1, 0, 1, 0]
        );
        let q32 = AlgebraicBase::from_rational(rat(3, 2)).unwrap();
        let zero = FieldElement::zero(&q32);
        assert_eq!(digits(&quasi_greedy_digits(&zero, 3).unwrap()), [0, 0, 0]);
    }

    #[test]
    fn alpha_prefixes() {
        let g = golden();
        assert_eq!(digits(&alpha_prefix(&g, 4)), [1, 0, 1, 0]);
        let two = AlgebraicBase::from_integer(2).unwrap();
        assert_eq!(digits(&alpha_prefix(&two, 3)), [1, 1, 1]);
        assert_eq!(digits(&alpha_prefix(&q_star(), 6)), [1, 1, 0, 1, 1, 0]);
    }

    #[test]
    fn out_of_range_rejected() {
        let g = golden();
        // m/(q−1) = G + 1 for the golden ratio; 3 is outside
        let x = FieldElement::from_integer(&g, 3);
        assert_eq!(greedy_digits(&x, 3), Err(ExpansionError::OutOfRange));
        let neg = FieldElement::from_rational(&g, rat(-1, 2));
        assert_eq!(
            quasi_greedy_digits(&neg, 3),
            Err(ExpansionError::OutOfRange)
        );
        // the right endpoint itself is fine
        let q = FieldElement::generator(&g);
        let endpoint = q.add(&FieldElement::one(&g)); // G+1 = G²  = m/(q−1)
        assert!(greedy_digits(&endpoint, 3).is_ok());
    }

    #[test]
    fn periodicity_detection() {
        let g = golden();
        let one = FieldElement::one(&g);
        assert_eq!(
            detect_eventual_periodicity(&one, Algorithm::QuasiGreedy, 100).unwrap(),
            Sequence::Ep(EpWord::parse("(10)").unwrap())
        );
        let qs = q_star();
        let one = FieldElement::one(&qs);
        assert_eq!(
            detect_eventual_periodicity(&one, Algorithm::QuasiGreedy, 100).unwrap(),
            Sequence::Ep(EpWord::parse("(110)").unwrap())
        );
        // greedy expansion of 1/2 in base 2 terminates: 1(0)
        let two = AlgebraicBase::from_integer(2).unwrap();
        let half = FieldElement::from_rational(&two, rat(1, 2));
        assert_eq!(
            detect_eventual_periodicity(&half, Algorithm::Greedy, 100).unwrap(),
            Sequence::Ep(EpWord::parse("1(0)").unwrap())
        );
        // quasi-greedy of 1 in base 3/2 is aperiodic: budget exhausts
        let q32 = AlgebraicBase::from_rational(rat(3, 2)).unwrap();
        let one = FieldElement::one(&q32);
        match detect_eventual_periodicity(&one, Algorithm::QuasiGreedy, 60).unwrap() {
            Sequence::Prefix(w) => {
                assert_eq!(w.len(), 60);
                assert_eq!(&w.digits()[..9], [1, 0, 1, 0, 0, 0, 0, 0, 1]);
            }
            Sequence::Ep(w) => panic!("false period {w}"),
        }
    }

    #[test]
    fn finite_greedy_rewrite() {
        let g = golden();
        // greedy of 1 in base G is 11: rewrite to 10(10) = (10)^∞
        let rw = greedy_finite_to_quasi(&Word::new(vec![1, 1]), &g, 100).unwrap();
        assert_eq!(rw, Sequence::Ep(EpWord::parse("(10)").unwrap()));
        // greedy of 1/2 in base 2 is 1: rewrite to 0(1)
        let two = AlgebraicBase::from_integer(2).unwrap();
        let rw = greedy_finite_to_quasi(&Word::new(vec![1]), &two, 100).unwrap();
        assert_eq!(rw, Sequence::Ep(EpWord::parse("0(1)").unwrap()));
        assert_eq!(
            greedy_finite_to_quasi(&Word::new(vec![0, 0]), &g, 100),
            Err(ExpansionError::LastDigitZero)
        );
    }

    #[test]
    fn values_of_words() {
        let g = golden();
        let one = FieldElement::one(&g);
        let v = value_of_ep(&EpWord::parse("(10)").unwrap(), &g);
        assert_eq!(v.sub(&one).sign(), Ordering::Equal);
        let v = value_of_word(&Word::new(vec![1, 1]), &g);
        assert_eq!(v.sub(&one).sign(), Ordering::Equal);
        let v = value_of_word(&Word::new(vec![0, 0, 0]), &g);
        assert!(v.is_zero_element());
        // round trip: detect then re-evaluate
        let q32 = AlgebraicBase::from_rational(rat(3, 2)).unwrap();
        let x = FieldElement::from_rational(&q32, rat(7, 10));
        if let Sequence::Ep(w) = detect_eventual_periodicity(&x, Algorithm::Greedy, 2000).unwrap()
        {
            let v = value_of_ep(&w, &q32);
            assert_eq!(v.sub(&x).sign(), Ordering::Equal);
        }
    }

    #[test]
    fn branch_counting() {
        let two = AlgebraicBase::from_integer(2).unwrap();
        let half = FieldElement::from_rational(&two, rat(1, 2));
        assert_eq!(count_expansion_branches(&half, 5).unwrap(), 2);
        let zero = FieldElement::zero(&two);
        assert_eq!(count_expansion_branches(&zero, 6).unwrap(), 1);
        // x = 1 in the golden ratio: branch structure gives n/2·2 + 1 words
        let g = golden();
        let one = FieldElement::one(&g);
        assert_eq!(count_expansion_branches(&one, 6).unwrap(), 7);
    }

    #[test]
    fn greedy_dominates_quasi() {
        let q85 = AlgebraicBase::from_rational(rat(8, 5)).unwrap();
        for num in 1..10i64 {
            let x = FieldElement::from_rational(&q85, rat(num, 7));
            if !in_jq(&x) {
                continue;
            }
            let b = greedy_digits(&x, 12).unwrap();
            let a = quasi_greedy_digits(&x, 12).unwrap();
            assert!(b.digits() >= a.digits(), "x = {num}/7: {b} < {a}");
        }
    }
}
