//! Exact representation of bases q > 1.
//!
//! A base is either a rational number or the unique root of a square-free
//! integer polynomial inside a rational isolating interval. Everything
//! downstream reduces to certified sign determination against this
//! representation, so construction is where all the validation lives:
//! square-freeness is enforced by dividing out gcd(p, p'), factors of x are
//! stripped (the root is > 1), the interval must bracket a sign change, and a
//! Sturm count certifies that exactly one root lies inside.

use std::cmp::Ordering;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{BaseError, WordToBaseError};
use crate::interval::IntervalApprox;
use crate::poly::{gcd_int, IntPoly, Rat, SturmChain};
use crate::word::EpWord;

/// How a base was described.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseDescriptor {
    /// A rational number p/s.
    Rational(BigRational),
    /// The unique root of the polynomial inside [lo, hi].
    PolyRoot {
        coeffs: Vec<BigInt>,
        lo: BigRational,
        hi: BigRational,
    },
}

pub(crate) struct BaseRepr {
    /// Defining polynomial: square-free, primitive, positive leading
    /// coefficient, nonzero constant term, exactly one root in (lo, hi).
    pub(crate) poly: IntPoly,
    /// Precomputed p_j / p_d for j < d, used to reduce field elements.
    pub(crate) monic_tail: Vec<Rat>,
    /// If the base is rational, its exact value.
    pub(crate) rational: Option<BigRational>,
    pub(crate) ceil_q: BigInt,
    pub(crate) m: u32,
    /// Monotonically shrinking isolating interval; p(lo)·p(hi) < 0 always.
    bracket: Mutex<(Rat, Rat)>,
    /// Cached quasi-greedy expansion of 1 (see `expansion::alpha_of`).
    pub(crate) alpha_cache: Mutex<Option<crate::expansion::AlphaInfo>>,
}

/// A real base q > 1, exactly represented. Cheap to clone and safe to share
/// across threads; interval refinement only ever shrinks an internal cache.
#[derive(Clone)]
pub struct AlgebraicBase {
    pub(crate) repr: Arc<BaseRepr>,
}

impl std::fmt::Debug for AlgebraicBase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.repr.rational {
            Some(r) => write!(f, "AlgebraicBase({r})"),
            None => {
                let (lo, hi) = self.bracket();
                write!(f, "AlgebraicBase({} @ [{}, {}])", self.repr.poly, lo, hi)
            }
        }
    }
}

impl PartialEq for AlgebraicBase {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.repr, &other.repr) || compare_bases(self, other) == Ordering::Equal
    }
}
impl Eq for AlgebraicBase {}

impl AlgebraicBase {
    /// Validate a descriptor and build the base. Ties (q equal to an
    /// integer) are resolved exactly, never numerically.
    pub fn new(desc: &BaseDescriptor) -> Result<AlgebraicBase, BaseError> {
        match desc {
            BaseDescriptor::Rational(r) => Self::from_rational(r.clone()),
            BaseDescriptor::PolyRoot { coeffs, lo, hi } => {
                Self::from_poly(IntPoly::new(coeffs.clone()), lo.clone(), hi.clone())
            }
        }
    }

    pub fn from_rational(q: BigRational) -> Result<AlgebraicBase, BaseError> {
        if q <= BigRational::one() {
            return Err(BaseError::NotGreaterThanOne);
        }
        let ceil_q = q.ceil().to_integer();
        let m = ceil_to_m(&ceil_q)?;
        // Defining polynomial s·x − p keeps the field-element machinery
        // uniform: elements reduce to a single rational coefficient.
        let poly = IntPoly::new(vec![-q.numer().clone(), q.denom().clone()]).primitive();
        let lo = &q - BigRational::one();
        let hi = &q + BigRational::one();
        Ok(Self::build(poly, lo, hi, Some(q), ceil_q, m))
    }

    pub fn from_integer(n: i64) -> Result<AlgebraicBase, BaseError> {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_poly(poly: IntPoly, lo: Rat, hi: Rat) -> Result<AlgebraicBase, BaseError> {
        if lo >= hi {
            return Err(BaseError::NotIsolating("empty interval".into()));
        }
        let poly = poly.square_free_part().strip_zero_roots().primitive();
        if poly.degree() == 0 || poly.is_zero() {
            return Err(BaseError::DegeneratePolynomial);
        }
        if poly.eval_rat(&lo).is_zero() || poly.eval_rat(&hi).is_zero() {
            return Err(BaseError::NotIsolating(
                "an interval endpoint is a root; shrink the interval".into(),
            ));
        }
        let chain = SturmChain::new(&poly);
        match chain.count_roots(&lo, &hi) {
            1 => {}
            n => {
                return Err(BaseError::NotIsolating(format!(
                    "interval contains {n} roots, expected exactly 1"
                )))
            }
        }
        // Rational root after all (degree 1): collapse to the rational case.
        if poly.degree() == 1 {
            let c = poly.coeffs();
            let q = BigRational::new(-c[0].clone(), c[1].clone());
            return Self::from_rational(q);
        }
        let (mut lo, mut hi) = (lo, hi);
        // q > 1 check, resolving the tie q = 1 exactly.
        let one = Rat::one();
        if lo < one && one < hi {
            if poly.eval_rat(&one).is_zero() {
                return Err(BaseError::NotGreaterThanOne);
            }
            while lo < one && one < hi {
                let (nlo, nhi) = bisect_step(&poly, &lo, &hi);
                lo = nlo;
                hi = nhi;
            }
        }
        if hi <= one {
            return Err(BaseError::NotGreaterThanOne);
        }
        // Here lo >= 1 (the root is > 1 since endpoints are not roots).
        let ceil_q = exact_ceil(&poly, &mut lo, &mut hi);
        let m = ceil_to_m(&ceil_q)?;
        Ok(Self::build(poly, lo, hi, None, ceil_q, m))
    }

    fn build(
        poly: IntPoly,
        lo: Rat,
        hi: Rat,
        rational: Option<BigRational>,
        ceil_q: BigInt,
        m: u32,
    ) -> AlgebraicBase {
        let d = poly.degree();
        let lead = Rat::from(poly.leading().unwrap().clone());
        let monic_tail = poly.coeffs()[..d]
            .iter()
            .map(|c| Rat::from(c.clone()) / &lead)
            .collect();
        AlgebraicBase {
            repr: Arc::new(BaseRepr {
                poly,
                monic_tail,
                rational,
                ceil_q,
                m,
                bracket: Mutex::new((lo, hi)),
                alpha_cache: Mutex::new(None),
            }),
        }
    }

    /// Digit alphabet bound: digits run over {0, …, m} with m = ⌈q⌉ − 1.
    pub fn digit_max(&self) -> u32 {
        self.repr.m
    }

    pub fn ceil_q(&self) -> &BigInt {
        &self.repr.ceil_q
    }

    /// Exact rational value, if the base is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.repr.rational.as_ref()
    }

    pub fn is_integer(&self) -> bool {
        self.repr
            .rational
            .as_ref()
            .map_or(false, |r| r.is_integer())
    }

    /// Degree of the defining polynomial (1 for rational bases).
    pub fn degree(&self) -> usize {
        self.repr.poly.degree()
    }

    pub fn defining_poly(&self) -> &IntPoly {
        &self.repr.poly
    }

    pub(crate) fn bracket(&self) -> (Rat, Rat) {
        self.repr.bracket.lock().unwrap().clone()
    }

    /// Tighten the cached bracket until its width is at most `eps`,
    /// returning an interval that still encloses a sign change.
    pub fn refine(&self, eps: &Rat) -> IntervalApprox {
        assert!(eps.is_positive(), "eps must be positive");
        if let Some(r) = &self.repr.rational {
            return IntervalApprox::point(r.clone());
        }
        let mut guard = self.repr.bracket.lock().unwrap();
        let (mut lo, mut hi) = guard.clone();
        while &hi - &lo > *eps {
            let (nlo, nhi) = bisect_step(&self.repr.poly, &lo, &hi);
            lo = nlo;
            hi = nhi;
        }
        *guard = (lo.clone(), hi.clone());
        IntervalApprox::new(lo, hi)
    }

    /// One bisection step on the cached bracket; cheaper than picking an eps
    /// when a caller just wants "smaller than now".
    pub(crate) fn refine_step(&self) {
        if self.repr.rational.is_some() {
            return;
        }
        let mut guard = self.repr.bracket.lock().unwrap();
        let (lo, hi) = guard.clone();
        *guard = bisect_step(&self.repr.poly, &lo, &hi);
    }
}

fn ceil_to_m(ceil_q: &BigInt) -> Result<u32, BaseError> {
    let m = ceil_q - 1u32;
    if m < BigInt::one() {
        return Err(BaseError::NotGreaterThanOne);
    }
    u32::try_from(&m).map_err(|_| BaseError::InvalidDescriptor("base is astronomically large".into()))
}

/// Halve [lo, hi] while keeping a sign change bracketed. If the midpoint is
/// a root (only possible for the unique isolated root), nudge both endpoints
/// in around it instead; a simple root always changes sign locally.
fn bisect_step(poly: &IntPoly, lo: &Rat, hi: &Rat) -> (Rat, Rat) {
    let two = Rat::from(BigInt::from(2));
    let mid = (lo + hi) / &two;
    let vmid = poly.eval_rat(&mid);
    if vmid.is_zero() {
        let w = (hi - lo) / Rat::from(BigInt::from(8));
        let nlo = &mid - &w;
        let nhi = &mid + &w;
        debug_assert!(!poly.eval_rat(&nlo).is_zero() && !poly.eval_rat(&nhi).is_zero());
        return (nlo, nhi);
    }
    let vlo = poly.eval_rat(lo);
    if vlo.is_positive() != vmid.is_positive() {
        (lo.clone(), mid)
    } else {
        (mid, hi.clone())
    }
}

/// Compute ⌈q⌉ exactly, refining the bracket so that afterwards either q is
/// a known integer or the open interval contains no integer.
fn exact_ceil(poly: &IntPoly, lo: &mut Rat, hi: &mut Rat) -> BigInt {
    loop {
        // Integers in (lo, hi)
        let first = lo.floor().to_integer() + 1u32;
        let last = hi.ceil().to_integer() - 1u32;
        let mut candidates = vec![];
        let mut n = first.clone();
        while n <= last {
            candidates.push(n.clone());
            n += 1u32;
        }
        for n in &candidates {
            if poly.eval_int(n).is_zero() {
                // The isolated root is exactly n.
                return n.clone();
            }
        }
        if candidates.is_empty() {
            // No integer inside the open interval: ceil is constant over it.
            return lo.ceil().to_integer().max(hi.ceil().to_integer());
        }
        let (nlo, nhi) = bisect_step(poly, lo, hi);
        *lo = nlo;
        *hi = nhi;
    }
}

/// Exact order comparison of two bases, deciding equality algebraically via
/// a common factor of the defining polynomials.
pub fn compare_bases(a: &AlgebraicBase, b: &AlgebraicBase) -> Ordering {
    if Arc::ptr_eq(&a.repr, &b.repr) {
        return Ordering::Equal;
    }
    match (a.as_rational(), b.as_rational()) {
        (Some(x), Some(y)) => return x.cmp(y),
        (Some(x), None) => return cmp_rational_to_root(x, b),
        (None, Some(y)) => return cmp_rational_to_root(y, a).reverse(),
        (None, None) => {}
    }
    // Equality test once up front: the bases are equal iff the gcd of their
    // defining polynomials has a root in the overlap of the brackets.
    let g = gcd_int(&a.repr.poly, &b.repr.poly);
    let mut equal_possible = g.degree() >= 1;
    loop {
        let (alo, ahi) = a.bracket();
        let (blo, bhi) = b.bracket();
        if ahi < blo {
            return Ordering::Less;
        }
        if bhi < alo {
            return Ordering::Greater;
        }
        if equal_possible {
            let lo = if alo > blo { alo.clone() } else { blo.clone() };
            let hi = if ahi < bhi { ahi.clone() } else { bhi.clone() };
            if lo < hi {
                // g divides both defining polynomials, so it cannot vanish
                // at either bracket endpoint.
                let chain = SturmChain::new(&g);
                if chain.count_roots(&lo, &hi) >= 1 {
                    // The common root lies in both isolating intervals, so it
                    // is both a's root and b's root.
                    return Ordering::Equal;
                }
            }
            equal_possible = false;
        }
        a.refine_step();
        b.refine_step();
    }
}

/// Order a rational `x` against the isolated root of `b`: one exact sign
/// evaluation decides which side of the root `x` falls on.
fn cmp_rational_to_root(x: &BigRational, b: &AlgebraicBase) -> Ordering {
    let (lo, hi) = b.bracket();
    if *x <= lo {
        return Ordering::Less;
    }
    if *x >= hi {
        return Ordering::Greater;
    }
    let v = b.repr.poly.eval_rat(x);
    if v.is_zero() {
        return Ordering::Equal;
    }
    let vlo = b.repr.poly.eval_rat(&lo);
    if v.is_positive() == vlo.is_positive() {
        // The sign change (and hence the root) is still to the right of x.
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// The unique base q > 1 in which the eventually periodic word sums to 1,
/// i.e. the inverse of q ↦ (quasi-greedy expansion of 1) restricted to
/// eventually periodic words.
///
/// The word's digits need not be bounded by the resulting base's digit
/// alphabet, and no admissibility check is made here; callers who need the
/// word to actually *be* the expansion of 1 must check admissibility
/// separately.
pub fn base_from_word(w: &EpWord) -> Result<AlgebraicBase, WordToBaseError> {
    if w.period_is_zero() {
        // Finite word: sum < 1 for every q at least as large as any root,
        // and the value map has no solution q > 1.
        return Err(WordToBaseError::NoRootAboveOne);
    }
    let u = w.preperiod();
    let v = w.period();
    let nu = u.len();
    let nv = v.len();
    // Clearing denominators in  Σ u_i q^{-i} + q^{-|u|} Σ v_j q^{-j} / (1 - q^{-|v|}) = 1
    // gives  P(q) = q^{|u|}(q^{|v|} - 1) - U(q)(q^{|v|} - 1) - V(q) = 0
    // with U(q) = Σ u_i q^{|u|-i}, V(q) = Σ v_j q^{|v|-j}.
    let mut coeffs = vec![BigInt::zero(); nu + nv + 1];
    coeffs[nu + nv] += 1;
    coeffs[nu] -= 1;
    for (i, &d) in u.iter().enumerate() {
        // u_{i+1} q^{nu-1-i} (q^{nv} - 1)
        coeffs[nu - 1 - i + nv] -= BigInt::from(d);
        coeffs[nu - 1 - i] += BigInt::from(d);
    }
    for (j, &d) in v.iter().enumerate() {
        coeffs[nv - 1 - j] -= BigInt::from(d);
    }
    let poly = IntPoly::new(coeffs);
    // P(1) = -Σ v_j < 0 and P → +∞, so the bracket [1, hi] isolates the
    // unique root above 1 once P(hi) > 0.
    let mut hi = Rat::from(BigInt::from(2));
    while !poly.eval_rat(&hi).is_positive() {
        hi = hi * Rat::from(BigInt::from(2));
    }
    let base = AlgebraicBase::from_poly(poly, Rat::one(), hi)
        .expect("value map has exactly one root above 1");
    Ok(base)
}

/// Parse the textual base descriptor: `rat:p/s` or
/// `poly:c0,c1,...,cd@lo,hi` (coefficients low-to-high).
pub fn parse_descriptor(s: &str) -> Result<BaseDescriptor, BaseError> {
    if let Some(rest) = s.strip_prefix("rat:") {
        let q = parse_rat(rest)?;
        return Ok(BaseDescriptor::Rational(q));
    }
    if let Some(rest) = s.strip_prefix("poly:") {
        let (coeff_part, bounds) = rest
            .split_once('@')
            .ok_or_else(|| BaseError::InvalidDescriptor("missing @lo,hi bounds".into()))?;
        let coeffs = coeff_part
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<BigInt>()
                    .map_err(|e| BaseError::InvalidDescriptor(format!("coefficient {c:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let (lo, hi) = bounds
            .split_once(',')
            .ok_or_else(|| BaseError::InvalidDescriptor("bounds must be lo,hi".into()))?;
        return Ok(BaseDescriptor::PolyRoot {
            coeffs,
            lo: parse_rat(lo)?,
            hi: parse_rat(hi)?,
        });
    }
    Err(BaseError::InvalidDescriptor(
        "expected rat:p/s or poly:c0,c1,...@lo,hi".into(),
    ))
}

pub(crate) fn parse_rat(s: &str) -> Result<BigRational, BaseError> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer = n
        .trim()
        .parse::<BigInt>()
        .map_err(|e| BaseError::InvalidDescriptor(format!("numerator {n:?}: {e}")))?;
    let denom = d
        .trim()
        .parse::<BigInt>()
        .map_err(|e| BaseError::InvalidDescriptor(format!("denominator {d:?}: {e}")))?;
    if denom.is_zero() {
        return Err(BaseError::InvalidDescriptor("zero denominator".into()));
    }
    Ok(BigRational::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_base_three_halves() {
        let q = AlgebraicBase::from_rational(rat(3, 2)).unwrap();
        assert_eq!(q.digit_max(), 1);
        assert_eq!(q.ceil_q(), &BigInt::from(2));
        // refine is exact for rationals regardless of eps
        let iv = q.refine(&rat(1, 1_000_000));
        assert_eq!(iv, IntervalApprox::point(rat(3, 2)));
    }

    #[test]
    fn golden_ratio_from_poly() {
        let g = AlgebraicBase::from_poly(IntPoly::from_i64(&[-1, -1, 1]), rat(1, 1), rat(2, 1))
            .unwrap();
        assert_eq!(g.digit_max(), 1);
        assert!(g.as_rational().is_none());
        // Bisection oracle: x²-x-1 is negative at 1.61 and positive at 1.62,
        // so the refined interval must land inside [1.61, 1.62].
        let p = g.defining_poly();
        assert!(p.eval_rat(&rat(161, 100)).is_negative());
        assert!(p.eval_rat(&rat(162, 100)).is_positive());
        let iv = g.refine(&rat(1, 100));
        assert!(iv.lo >= rat(161, 100) && iv.hi <= rat(162, 100));
    }

    #[test]
    fn sqrt3_in_unit_interval() {
        let q =
            AlgebraicBase::from_poly(IntPoly::from_i64(&[-3, 0, 1]), rat(1, 1), rat(2, 1)).unwrap();
        assert_eq!(q.digit_max(), 1);
        let iv = q.refine(&rat(1, 1000));
        assert!(iv.lo >= rat(1732, 1000) && iv.hi <= rat(1733, 1000));
    }

    #[test]
    fn refinements_are_nested() {
        let g = AlgebraicBase::from_poly(IntPoly::from_i64(&[-1, -1, 1]), rat(1, 1), rat(2, 1))
            .unwrap();
        let a = g.refine(&rat(1, 10));
        let b = g.refine(&rat(1, 1000));
        let c = g.refine(&rat(1, 100_000));
        assert!(b.subset_of(&a));
        assert!(c.subset_of(&b));
        // interval always brackets a sign change
        let p = g.defining_poly();
        assert!(p.eval_rat(&c.lo).is_negative() != p.eval_rat(&c.hi).is_negative());
    }

    #[test]
    fn rejects_bad_bases() {
        assert_eq!(
            AlgebraicBase::from_rational(rat(1, 1)),
            Err(BaseError::NotGreaterThanOne)
        );
        assert_eq!(
            AlgebraicBase::from_rational(rat(2, 3)),
            Err(BaseError::NotGreaterThanOne)
        );
        // x² - 3 on [0, 2] contains ±… only √3; but on [-2, 2] it has two roots
        let err =
            AlgebraicBase::from_poly(IntPoly::from_i64(&[-3, 0, 1]), rat(-2, 1), rat(2, 1));
        assert!(matches!(err, Err(BaseError::NotIsolating(_))));
        // no root at all in the interval
        let err = AlgebraicBase::from_poly(IntPoly::from_i64(&[-3, 0, 1]), rat(2, 1), rat(3, 1));
        assert!(matches!(err, Err(BaseError::NotIsolating(_))));
        // root below 1
        let err =
            AlgebraicBase::from_poly(IntPoly::from_i64(&[-1, 0, 2]), rat(0, 1), rat(1, 1));
        assert!(matches!(err, Err(BaseError::NotGreaterThanOne)));
    }

    #[test]
    fn square_free_reduction_applied() {
        // (x²-x-1)² has the same root; construction must accept it.
        let sq = IntPoly::from_i64(&[1, 2, -1, -2, 1]);
        let g = AlgebraicBase::from_poly(sq, rat(1, 1), rat(2, 1)).unwrap();
        assert_eq!(g.defining_poly(), &IntPoly::from_i64(&[-1, -1, 1]));
    }

    #[test]
    fn integer_tie_resolved_exactly() {
        // (x-2)(x²-5) isolated around 2: the base is exactly the integer 2.
        let p = IntPoly::from_i64(&[10, -5, -2, 1]);
        let q = AlgebraicBase::from_poly(p, rat(19, 10), rat(21, 10)).unwrap();
        assert_eq!(q.ceil_q(), &BigInt::from(2));
        assert_eq!(q.digit_max(), 1);
        assert!(q.is_integer() || q.as_rational().is_none());
        // ceil of a slightly-above-2 root is 3, resolved exactly as well
        let p2 = IntPoly::from_i64(&[-17, 0, 0, 0, 1]); // x⁴ = 17, root ≈ 2.0305
        let q2 = AlgebraicBase::from_poly(p2, rat(2, 1), rat(3, 1)).unwrap();
        assert_eq!(q2.ceil_q(), &BigInt::from(3));
        assert_eq!(q2.digit_max(), 2);
    }

    #[test]
    fn base_from_word_examples() {
        // (10)^∞ → golden ratio, root of x² - x - 1
        let g = base_from_word(&EpWord::new(vec![], vec![1, 0])).unwrap();
        assert_eq!(g.defining_poly(), &IntPoly::from_i64(&[-1, -1, 1]));
        // (110)^∞ → root of x³ - x² - x - 1 in (1, 2)
        let qs = base_from_word(&EpWord::new(vec![], vec![1, 1, 0])).unwrap();
        assert_eq!(qs.defining_poly(), &IntPoly::from_i64(&[-1, -1, -1, 1]));
        // 1^∞ → exactly 2
        let two = base_from_word(&EpWord::new(vec![], vec![1])).unwrap();
        assert_eq!(two.as_rational(), Some(&rat(2, 1)));
        // finite word (period of zeros) has no base
        assert_eq!(
            base_from_word(&EpWord::new(vec![1], vec![0])),
            Err(WordToBaseError::NoRootAboveOne)
        );
    }

    #[test]
    fn compare_bases_orders_and_detects_equality() {
        let g = base_from_word(&EpWord::new(vec![], vec![1, 0])).unwrap();
        let qs = base_from_word(&EpWord::new(vec![], vec![1, 1, 0])).unwrap();
        let three_halves = AlgebraicBase::from_rational(rat(3, 2)).unwrap();
        assert_eq!(compare_bases(&three_halves, &g), Ordering::Less);
        assert_eq!(compare_bases(&g, &qs), Ordering::Less);
        assert_eq!(compare_bases(&qs, &g), Ordering::Greater);
        // same number via a reducible polynomial: (x²-x-1)(x²-7) on [3/2, 2]
        let prod = IntPoly::from_i64(&[7, 7, -8, -1, 1]);
        let g2 = AlgebraicBase::from_poly(prod, rat(3, 2), rat(2, 1)).unwrap();
        assert_eq!(compare_bases(&g, &g2), Ordering::Equal);
        assert_eq!(g, g2);
    }

    #[test]
    fn descriptor_parsing() {
        assert_eq!(
            parse_descriptor("rat:3/2").unwrap(),
            BaseDescriptor::Rational(rat(3, 2))
        );
        assert_eq!(
            parse_descriptor("rat:2").unwrap(),
            BaseDescriptor::Rational(rat(2, 1))
        );
        let d = parse_descriptor("poly:-1,-1,1@1,2").unwrap();
        assert_eq!(
            d,
            BaseDescriptor::PolyRoot {
                coeffs: vec![BigInt::from(-1), BigInt::from(-1), BigInt::from(1)],
                lo: rat(1, 1),
                hi: rat(2, 1),
            }
        );
        assert!(parse_descriptor("nonsense").is_err());
        assert!(parse_descriptor("rat:1/0").is_err());
    }
}
