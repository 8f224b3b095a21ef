//! Finite digit words and eventually periodic infinite digit words.
//!
//! An `EpWord` is stored in canonical form: the period is primitive (not a
//! power of a shorter word) and the preperiod is minimal (no tail symbol of
//! the preperiod can be rolled into the loop). Equality of canonical forms is
//! equality of the represented infinite sequences. Finite words are padded
//! with 0^∞, which canonicalizes to the period `(0)`.

use std::cmp::Ordering;

use num_integer::Integer;

use crate::error::WordError;

/// A finite digit word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    digits: Vec<u32>,
}

impl Word {
    pub fn new(digits: Vec<u32>) -> Self {
        Word { digits }
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digit(&self, i: usize) -> Option<u32> {
        self.digits.get(i).copied()
    }

    pub fn max_digit(&self) -> u32 {
        self.digits.iter().copied().max().unwrap_or(0)
    }

    /// Digit-wise complement c ↦ m − c.
    pub fn complement(&self, m: u32) -> Result<Word, WordError> {
        self.digits
            .iter()
            .map(|&d| {
                if d > m {
                    Err(WordError::DigitExceedsM { digit: d, m })
                } else {
                    Ok(m - d)
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word::new)
    }

    /// Parse either comma-free single-digit form (`11010`) or
    /// comma-separated form (`10,2,11`).
    pub fn parse(s: &str) -> Result<Word, WordError> {
        parse_digits(s).map(Word::new)
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", join_digits(&self.digits, self.max_digit() > 9))
    }
}

/// An eventually periodic infinite word: preperiod followed by an infinitely
/// repeated nonempty period.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EpWord {
    pre: Vec<u32>,
    per: Vec<u32>,
}

impl EpWord {
    /// Build and canonicalize. An empty period stands for the 0^∞ tail.
    pub fn new(pre: Vec<u32>, per: Vec<u32>) -> Self {
        let mut w = EpWord {
            pre,
            per: if per.is_empty() { vec![0] } else { per },
        };
        w.canonicalize();
        w
    }

    /// A finite word padded with zeros.
    pub fn from_finite(w: &Word) -> Self {
        EpWord::new(w.digits().to_vec(), vec![0])
    }

    pub fn periodic(per: Vec<u32>) -> Self {
        EpWord::new(vec![], per)
    }

    fn canonicalize(&mut self) {
        // Primitive period: keep the shortest repeating factor.
        let n = self.per.len();
        for d in 1..n {
            if n % d == 0 && (d..n).all(|i| self.per[i] == self.per[i - d]) {
                self.per.truncate(d);
                break;
            }
        }
        // Roll preperiod symbols into the loop while they match its tail.
        while let Some(&last) = self.pre.last() {
            if last == *self.per.last().unwrap() {
                self.pre.pop();
                self.per.rotate_right(1);
            } else {
                break;
            }
        }
    }

    pub fn preperiod(&self) -> &[u32] {
        &self.pre
    }

    pub fn period(&self) -> &[u32] {
        &self.per
    }

    /// True when the word has only finitely many nonzero digits.
    pub fn period_is_zero(&self) -> bool {
        self.per == [0]
    }

    /// Digit at 0-based position i.
    pub fn digit(&self, i: usize) -> u32 {
        if i < self.pre.len() {
            self.pre[i]
        } else {
            self.per[(i - self.pre.len()) % self.per.len()]
        }
    }

    pub fn max_digit(&self) -> u32 {
        self.pre
            .iter()
            .chain(self.per.iter())
            .copied()
            .max()
            .unwrap_or(0)
    }

    /// The first n digits as a finite word.
    pub fn prefix(&self, n: usize) -> Word {
        Word::new((0..n).map(|i| self.digit(i)).collect())
    }

    /// Drop the first k digits.
    pub fn shift(&self, k: usize) -> EpWord {
        if k <= self.pre.len() {
            EpWord::new(self.pre[k..].to_vec(), self.per.clone())
        } else {
            let r = (k - self.pre.len()) % self.per.len();
            let mut per = self.per.clone();
            per.rotate_left(r);
            EpWord::new(vec![], per)
        }
    }

    pub fn complement(&self, m: u32) -> Result<EpWord, WordError> {
        let comp = |v: &[u32]| {
            v.iter()
                .map(|&d| {
                    if d > m {
                        Err(WordError::DigitExceedsM { digit: d, m })
                    } else {
                        Ok(m - d)
                    }
                })
                .collect::<Result<Vec<_>, _>>()
        };
        Ok(EpWord::new(comp(&self.pre)?, comp(&self.per)?))
    }

    /// Exact lexicographic comparison of the represented infinite words. A
    /// disagreement, if any, occurs within max(|pre|) + lcm(|per|) positions.
    pub fn lex_cmp(&self, other: &EpWord) -> Ordering {
        let bound = self.pre.len().max(other.pre.len())
            + self.per.len().lcm(&other.per.len());
        for i in 0..bound {
            match self.digit(i).cmp(&other.digit(i)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Parse `pre(per)` or a bare finite word `pre` (implicitly padded with
    /// zeros); digits as in [`Word::parse`].
    pub fn parse(s: &str) -> Result<EpWord, WordError> {
        let s = s.trim();
        match s.find('(') {
            None => Ok(EpWord::from_finite(&Word::parse(s)?)),
            Some(open) => {
                if !s.ends_with(')') {
                    return Err(WordError::Parse("missing closing parenthesis".into()));
                }
                let pre = &s[..open];
                let per = &s[open + 1..s.len() - 1];
                if per.is_empty() {
                    return Err(WordError::Parse("empty period".into()));
                }
                Ok(EpWord::new(parse_digits(pre)?, parse_digits(per)?))
            }
        }
    }
}

impl PartialOrd for EpWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.lex_cmp(other))
    }
}
impl Ord for EpWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(other)
    }
}

impl std::fmt::Display for EpWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let wide = self.max_digit() > 9;
        write!(f, "{}", join_digits(&self.pre, wide))?;
        write!(f, "({})", join_digits(&self.per, wide))
    }
}

/// A digit sequence as known to a checker: either completely (eventually
/// periodic) or only through a finite prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sequence {
    /// Only a finite prefix is known.
    Prefix(Word),
    /// The whole word is known exactly.
    Ep(EpWord),
}

impl Sequence {
    /// Digit at 0-based position i, when known.
    pub fn digit(&self, i: usize) -> Option<u32> {
        match self {
            Sequence::Prefix(w) => w.digit(i),
            Sequence::Ep(w) => Some(w.digit(i)),
        }
    }

    pub fn is_ep(&self) -> bool {
        matches!(self, Sequence::Ep(_))
    }

    pub fn as_ep(&self) -> Option<&EpWord> {
        match self {
            Sequence::Ep(w) => Some(w),
            Sequence::Prefix(_) => None,
        }
    }

    /// Number of leading digits known exactly; None when all are.
    pub fn known_len(&self) -> Option<usize> {
        match self {
            Sequence::Prefix(w) => Some(w.len()),
            Sequence::Ep(_) => None,
        }
    }

    pub fn prefix(&self, n: usize) -> Word {
        match self {
            Sequence::Prefix(w) => Word::new(w.digits()[..n.min(w.len())].to_vec()),
            Sequence::Ep(w) => w.prefix(n),
        }
    }
}

impl std::fmt::Display for Sequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sequence::Prefix(w) => write!(f, "{w}"),
            Sequence::Ep(w) => write!(f, "{w}"),
        }
    }
}

fn parse_digits(s: &str) -> Result<Vec<u32>, WordError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(vec![]);
    }
    if s.contains(',') {
        s.split(',')
            .map(|d| {
                d.trim()
                    .parse::<u32>()
                    .map_err(|e| WordError::Parse(format!("digit {d:?}: {e}")))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| WordError::Parse(format!("invalid digit character {c:?}")))
            })
            .collect()
    }
}

fn join_digits(v: &[u32], wide: bool) -> String {
    if wide {
        v.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",")
    } else {
        v.iter().map(|d| char::from_digit(*d, 10).unwrap()).collect()
    }
}
