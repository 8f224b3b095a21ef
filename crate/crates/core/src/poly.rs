//! Dense univariate polynomials over the integers and rationals.
//!
//! Coefficients are stored in ascending degree order; the canonical form has
//! a nonzero last element (the empty vector is the zero polynomial). This is
//! the minimal toolkit needed by the exact kernel: evaluation, gcd,
//! square-free parts, Sturm chains and interval evaluation. No factorization
//! into irreducibles is performed anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type Rat = BigRational;

/// Integer polynomial in canonical form (last coefficient nonzero).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::new(vec![]);
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Divide out the gcd of the coefficients and normalize the leading
    /// coefficient to be positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.clone());
        }
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Strip factors of x (roots at 0). Sound for defining polynomials whose
    /// isolated root is known to be positive.
    pub fn strip_zero_roots(&self) -> IntPoly {
        let k = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len());
        IntPoly::new(self.coeffs[k..].to_vec())
    }

    /// p / gcd(p, p'): same roots, all simple.
    pub fn square_free_part(&self) -> IntPoly {
        if self.degree() <= 1 {
            return self.primitive();
        }
        let g = gcd_int(self, &self.derivative());
        if g.degree() == 0 {
            return self.primitive();
        }
        let (q, r) = div_rem_rat(&RatPoly::from_int(self), &RatPoly::from_int(&g));
        debug_assert!(r.is_zero());
        q.to_primitive_int()
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::from_int(self)
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "x")?,
                1 => write!(f, "{a}*x")?,
                _ if a.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "{a}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Rational polynomial in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_int(p: &IntPoly) -> Self {
        RatPoly::new(p.coeffs.iter().map(|c| Rat::from(c.clone())).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Clear denominators and the content, keeping only the sign and the
    /// root set.
    pub fn to_primitive_int(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::new(vec![]);
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        IntPoly::new(ints).primitive()
    }

    /// Evaluate over an interval using interval Horner, returning rational
    /// bounds containing the image of [lo, hi].
    pub fn eval_interval(&self, lo: &Rat, hi: &Rat) -> (Rat, Rat) {
        let mut alo = Rat::zero();
        let mut ahi = Rat::zero();
        for c in self.coeffs.iter().rev() {
            // (alo, ahi) * [lo, hi] + c
            let p1 = &alo * lo;
            let p2 = &alo * hi;
            let p3 = &ahi * lo;
            let p4 = &ahi * hi;
            let mut nlo = p1.clone();
            let mut nhi = p1;
            for p in [p2, p3, p4] {
                if p < nlo {
                    nlo = p.clone();
                }
                if p > nhi {
                    nhi = p;
                }
            }
            alo = nlo + c;
            ahi = nhi + c;
        }
        (alo, ahi)
    }
}

fn sub_scaled(a: &RatPoly, b: &RatPoly, factor: &Rat, shift: usize) -> RatPoly {
    // a - factor * x^shift * b
    let n = a.coeffs.len().max(b.coeffs.len() + shift);
    let mut out = vec![Rat::zero(); n];
    for (i, c) in a.coeffs.iter().enumerate() {
        out[i] = c.clone();
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        out[i + shift] = &out[i + shift] - &(factor * c);
    }
    RatPoly::new(out)
}

/// Euclidean division: returns (quotient, remainder) with deg r < deg b.
pub fn div_rem_rat(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    assert!(!b.is_zero(), "division by zero polynomial");
    let mut r = a.clone();
    let mut q = vec![Rat::zero(); a.coeffs.len().saturating_sub(b.coeffs.len()) + 1];
    let db = b.degree();
    let lead_b = b.leading().unwrap().clone();
    while !r.is_zero() && r.coeffs.len() >= b.coeffs.len() {
        let shift = r.degree() - db;
        let factor = r.leading().unwrap() / &lead_b;
        r = sub_scaled(&r, b, &factor, shift);
        q[shift] = factor;
    }
    (RatPoly::new(q), r)
}

/// Polynomial gcd over the rationals, returned as a primitive integer
/// polynomial with positive leading coefficient.
pub fn gcd_int(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut x = a.to_rat();
    let mut y = b.to_rat();
    while !y.is_zero() {
        let (_, r) = div_rem_rat(&x, &y);
        x = y;
        y = r;
    }
    x.to_primitive_int()
}

/// Extended gcd over the rationals: returns (g, u) with u*a ≡ g (mod b) and
/// g the (monic-free) gcd of a and b.
pub fn ext_gcd_rat(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut u0 = RatPoly::new(vec![Rat::one()]);
    let mut u1 = RatPoly::new(vec![]);
    while !r1.is_zero() {
        let (q, r2) = div_rem_rat(&r0, &r1);
        let u2 = sub_mul(&u0, &q, &u1);
        r0 = r1;
        r1 = r2;
        u0 = u1;
        u1 = u2;
    }
    (r0, u0)
}

fn sub_mul(a: &RatPoly, q: &RatPoly, b: &RatPoly) -> RatPoly {
    // a - q*b
    let prod = mul_rat(q, b);
    let n = a.coeffs.len().max(prod.coeffs.len());
    let mut out = vec![Rat::zero(); n];
    for (i, c) in a.coeffs.iter().enumerate() {
        out[i] = c.clone();
    }
    for (i, c) in prod.coeffs.iter().enumerate() {
        out[i] = &out[i] - c;
    }
    RatPoly::new(out)
}

pub fn mul_rat(a: &RatPoly, b: &RatPoly) -> RatPoly {
    if a.is_zero() || b.is_zero() {
        return RatPoly::new(vec![]);
    }
    let mut out = vec![Rat::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        for (j, y) in b.coeffs.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    RatPoly::new(out)
}

/// Sturm chain of a square-free integer polynomial.
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let mut chain = vec![p.to_rat(), p.derivative().to_rat()];
        while !chain.last().unwrap().is_zero() {
            let n = chain.len();
            let (_, r) = div_rem_rat(&chain[n - 2], &chain[n - 1]);
            let neg = RatPoly::new(r.coeffs.iter().map(|c| -c.clone()).collect());
            chain.push(neg);
        }
        chain.pop();
        SturmChain { chain }
    }

    fn variations(&self, x: &Rat) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.chain {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let s = v.is_positive();
            if let Some(l) = last {
                if l != s {
                    count += 1;
                }
            }
            last = Some(s);
        }
        count
    }

    /// Number of distinct real roots in (lo, hi]. Requires p(lo) != 0.
    pub fn count_roots(&self, lo: &Rat, hi: &Rat) -> usize {
        self.variations(lo) - self.variations(hi)
    }
}
