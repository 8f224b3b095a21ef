//! Rational intervals used to report certified enclosures.

use num_rational::BigRational;

/// A closed interval with rational endpoints, guaranteed by its producer to
/// contain the true value. Refinement always returns a new interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalApprox {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl IntervalApprox {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        IntervalApprox { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        IntervalApprox { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// True if `self` is contained in `other`.
    pub fn subset_of(&self, other: &IntervalApprox) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (
            self.lo.to_f64().unwrap_or(f64::NAN),
            self.hi.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl std::fmt::Display for IntervalApprox {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
