//! Points of the field generated by a base, in canonical reduced form.
//!
//! A `FieldElement` is a polynomial in q with rational coefficients, reduced
//! modulo the base's defining polynomial (for rational bases the defining
//! polynomial has degree 1, so elements collapse to a single rational).
//! Equality and hashing are on the reduced coefficient vector; value equality
//! is decided by `sign` of a difference. No floating point is used anywhere.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::base::AlgebraicBase;
use crate::interval::IntervalApprox;
use crate::poly::{div_rem_rat, ext_gcd_rat, gcd_int, mul_rat, Rat, RatPoly};

/// An exact point of the field generated by the base.
#[derive(Clone)]
pub struct FieldElement {
    base: AlgebraicBase,
    /// Fixed length = degree of the defining polynomial; coefficient of qⁱ
    /// at index i.
    coeffs: Vec<Rat>,
}

impl std::fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FieldElement({self})")
    }
}

impl std::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.iter().all(|c| c.is_zero()) {
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
                1 if a.is_one() => write!(f, "q")?,
                1 => write!(f, "{a}*q")?,
                _ if a.is_one() => write!(f, "q^{i}")?,
                _ => write!(f, "{a}*q^{i}")?,
            }
        }
        Ok(())
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(self.same_base(other), "comparing elements of different bases");
        self.coeffs == other.coeffs
    }
}
impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl FieldElement {
    fn same_base(&self, other: &FieldElement) -> bool {
        Arc::ptr_eq(&self.base.repr, &other.base.repr)
    }

    pub fn base(&self) -> &AlgebraicBase {
        &self.base
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn zero(base: &AlgebraicBase) -> FieldElement {
        FieldElement {
            base: base.clone(),
            coeffs: vec![Rat::zero(); base.degree()],
        }
    }

    pub fn one(base: &AlgebraicBase) -> FieldElement {
        Self::from_rational(base, Rat::one())
    }

    pub fn from_rational(base: &AlgebraicBase, r: BigRational) -> FieldElement {
        let mut coeffs = vec![Rat::zero(); base.degree()];
        coeffs[0] = r;
        FieldElement {
            base: base.clone(),
            coeffs,
        }
    }

    pub fn from_integer(base: &AlgebraicBase, n: i64) -> FieldElement {
        Self::from_rational(base, Rat::from(BigInt::from(n)))
    }

    /// The generator q itself.
    pub fn generator(base: &AlgebraicBase) -> FieldElement {
        if let Some(r) = base.as_rational() {
            return Self::from_rational(base, r.clone());
        }
        let mut coeffs = vec![Rat::zero(); base.degree()];
        coeffs[1] = Rat::one();
        FieldElement {
            base: base.clone(),
            coeffs,
        }
    }

    /// Build from arbitrary-length polynomial coefficients, reducing mod the
    /// defining polynomial.
    pub fn from_poly_coeffs(base: &AlgebraicBase, coeffs: Vec<Rat>) -> FieldElement {
        let mut e = FieldElement {
            base: base.clone(),
            coeffs,
        };
        e.reduce();
        e
    }

    /// Reduce the coefficient vector to degree < deg(p) and pad to fixed
    /// length.
    fn reduce(&mut self) {
        let d = self.base.degree();
        let tail = &self.base.repr.monic_tail;
        while self.coeffs.len() > d {
            let c = self.coeffs.pop().unwrap();
            if !c.is_zero() {
                let k = self.coeffs.len() - d;
                for (j, t) in tail.iter().enumerate() {
                    self.coeffs[k + j] = &self.coeffs[k + j] - &(&c * t);
                }
            }
        }
        self.coeffs.resize(d, Rat::zero());
    }

    pub fn is_zero_element(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, rhs: &FieldElement) -> FieldElement {
        debug_assert!(self.same_base(rhs));
        FieldElement {
            base: self.base.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &FieldElement) -> FieldElement {
        debug_assert!(self.same_base(rhs));
        FieldElement {
            base: self.base.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            base: self.base.clone(),
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> FieldElement {
        FieldElement {
            base: self.base.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn sub_integer(&self, n: u32) -> FieldElement {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] = &coeffs[0] - Rat::from(BigInt::from(n));
        FieldElement {
            base: self.base.clone(),
            coeffs,
        }
    }

    /// Multiply by the generator q: one shift plus one reduction step.
    pub fn mul_q(&self) -> FieldElement {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rat::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_poly_coeffs(&self.base, coeffs)
    }

    pub fn mul(&self, rhs: &FieldElement) -> FieldElement {
        debug_assert!(self.same_base(rhs));
        let prod = mul_rat(
            &RatPoly::new(self.coeffs.clone()),
            &RatPoly::new(rhs.coeffs.clone()),
        );
        Self::from_poly_coeffs(&self.base, prod.coeffs().to_vec())
    }

    pub fn pow_q(base: &AlgebraicBase, n: usize) -> FieldElement {
        let mut e = FieldElement::one(base);
        for _ in 0..n {
            e = e.mul_q();
        }
        e
    }

    /// Exact division; panics if the divisor's value is zero. Division is
    /// well defined even when the defining polynomial is reducible: the
    /// divisor is inverted modulo the factor that vanishes at q and the
    /// result re-expressed in canonical form.
    pub fn div(&self, rhs: &FieldElement) -> FieldElement {
        debug_assert!(self.same_base(rhs));
        assert!(rhs.sign() != Ordering::Equal, "division by zero value");
        if let Some(_r) = self.base.as_rational() {
            return FieldElement::from_rational(
                &self.base,
                &self.coeffs[0] / &rhs.coeffs[0],
            );
        }
        let p = self.base.defining_poly().to_rat();
        let b = RatPoly::new(rhs.coeffs.clone());
        let b_int = b.to_primitive_int();
        let g = gcd_int(&b_int, self.base.defining_poly());
        // q is a root of p/g (it is not a root of g, since g divides b and
        // b(q) ≠ 0), and b is coprime to p/g.
        let modulus = if g.degree() >= 1 {
            let (quot, rem) = div_rem_rat(&p, &g.to_rat());
            debug_assert!(rem.is_zero());
            quot
        } else {
            p
        };
        let (gc, u) = ext_gcd_rat(&b, &modulus);
        debug_assert_eq!(gc.degree(), 0, "divisor not invertible mod defining factor");
        let inv_scale = Rat::one() / gc.coeffs()[0].clone();
        // inverse of b modulo `modulus`
        let inv = RatPoly::new(u.coeffs().iter().map(|c| c * &inv_scale).collect());
        let prod = mul_rat(&RatPoly::new(self.coeffs.clone()), &inv);
        let (_, reduced) = div_rem_rat(&prod, &modulus);
        Self::from_poly_coeffs(&self.base, reduced.coeffs().to_vec())
    }

    /// Exact sign of the represented value. Zero is detected algebraically
    /// (never numerically); nonzero signs come from refining the base's
    /// isolating interval until the interval evaluation excludes 0.
    pub fn sign(&self) -> Ordering {
        // Constant elements (this covers every element of a rational base).
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            return self.coeffs[0].cmp(&Rat::zero());
        }
        let g = RatPoly::new(self.coeffs.clone());
        let mut zero_checked = false;
        loop {
            let (lo, hi) = self.base.bracket();
            let (vlo, vhi) = g.eval_interval(&lo, &hi);
            if vlo.is_positive() {
                return Ordering::Greater;
            }
            if vhi.is_negative() {
                return Ordering::Less;
            }
            if !zero_checked {
                zero_checked = true;
                if self.is_exactly_zero_algebraic(&g) {
                    return Ordering::Equal;
                }
            }
            // Nonzero value: refinement terminates.
            self.base.refine_step();
            self.base.refine_step();
        }
    }

    /// g(q) = 0 iff gcd(g, p) has a sign change across the bracket: the
    /// bracket contains exactly one root of p, so a factor of p vanishes at
    /// q exactly when that factor changes sign there.
    fn is_exactly_zero_algebraic(&self, g: &RatPoly) -> bool {
        let g_int = g.to_primitive_int();
        let h = gcd_int(&g_int, self.base.defining_poly());
        if h.degree() == 0 {
            return false;
        }
        let (lo, hi) = self.base.bracket();
        let a = h.eval_rat(&lo);
        let b = h.eval_rat(&hi);
        debug_assert!(!a.is_zero() && !b.is_zero());
        a.is_positive() != b.is_positive()
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }

    /// Compare two elements of the same field by value.
    pub fn cmp_value(&self, rhs: &FieldElement) -> Ordering {
        self.sub(rhs).sign()
    }

    /// A certified enclosure of the value with width at most `eps`.
    pub fn enclosure(&self, eps: &Rat) -> IntervalApprox {
        assert!(eps.is_positive());
        let g = RatPoly::new(self.coeffs.clone());
        loop {
            let (lo, hi) = self.base.bracket();
            let (vlo, vhi) = g.eval_interval(&lo, &hi);
            if &vhi - &vlo <= *eps {
                return IntervalApprox::new(vlo, vhi);
            }
            self.base.refine_step();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::base_from_word;
    use crate::word::EpWord;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    fn golden() -> AlgebraicBase {
        base_from_word(&EpWord::parse("(10)").unwrap()).unwrap()
    }

    #[test]
    fn defining_relation_is_zero() {
        // q² − q − 1 at the golden ratio
        let g = golden();
        let q = FieldElement::generator(&g);
        let e = q.mul(&q).sub(&q).sub(&FieldElement::one(&g));
        assert!(e.is_zero_element());
        assert_eq!(e.sign(), Ordering::Equal);
    }

    #[test]
    fn sign_by_refinement() {
        // G − 3/2 > 0
        let g = golden();
        let q = FieldElement::generator(&g);
        let e = q.sub(&FieldElement::from_rational(&g, rat(3, 2)));
        assert_eq!(e.sign(), Ordering::Greater);
        // G − 2 < 0
        let e = q.sub(&FieldElement::from_integer(&g, 2));
        assert_eq!(e.sign(), Ordering::Less);
    }

    #[test]
    fn rational_base_signs() {
        // 1 − q⁻¹ − q⁻² at q = 3/2 is (9 − 6 − 4)/9 < 0
        let q = AlgebraicBase::from_rational(rat(3, 2)).unwrap();
        let one = FieldElement::one(&q);
        let qinv = one.div(&FieldElement::generator(&q));
        let e = one.sub(&qinv).sub(&qinv.mul(&qinv));
        assert_eq!(e.sign(), Ordering::Less);
        assert_eq!(e.coeffs()[0], rat(-1, 9));
    }

    #[test]
    fn algebraic_zero_detection_with_reducible_poly() {
        // Defining polynomial (x²-x-1)(x²-2): the element q²-q-1 is a nonzero
        // vector mod p but its value at the isolated root (the golden ratio)
        // is zero; x²-2 is nonzero there.
        let p = crate::poly::IntPoly::from_i64(&[2, 2, -3, -1, 1]);
        let b = crate::base::AlgebraicBase::from_poly(p, rat(3, 2), rat(7, 4)).unwrap();
        let q = FieldElement::generator(&b);
        let one = FieldElement::one(&b);
        let rel = q.mul(&q).sub(&q).sub(&one);
        assert!(!rel.is_zero_element());
        assert_eq!(rel.sign(), Ordering::Equal);
        let other = q.mul(&q).sub(&FieldElement::from_integer(&b, 2));
        assert_eq!(other.sign(), Ordering::Greater); // G² − 2 ≈ 0.618 > 0
    }

    #[test]
    fn division_round_trips() {
        let g = golden();
        let q = FieldElement::generator(&g);
        let one = FieldElement::one(&g);
        // 1/q = q − 1 for the golden ratio
        let inv = one.div(&q);
        assert_eq!(inv, q.sub(&one));
        // (q³)/(q) = q²
        let q3 = FieldElement::pow_q(&g, 3);
        assert_eq!(q3.div(&q), q.mul(&q));
        // division by q² − 1 against multiplication
        let d = q.mul(&q).sub(&one);
        let x = FieldElement::from_rational(&g, rat(7, 3));
        assert_eq!(x.div(&d).mul(&d).sub(&x).sign(), Ordering::Equal);
    }

    #[test]
    fn division_with_reducible_modulus() {
        // modulus (x²-x-1)(x²-2); divide by q−1 whose gcd with p is constant,
        // and by q²−2 … which vanishes at √2 but not at G, so it is a zero
        // divisor mod p yet division by it is still well defined at q.
        let p = crate::poly::IntPoly::from_i64(&[2, 2, -3, -1, 1]);
        let b = crate::base::AlgebraicBase::from_poly(p, rat(3, 2), rat(7, 4)).unwrap();
        let q = FieldElement::generator(&b);
        let one = FieldElement::one(&b);
        let div = q.mul(&q).sub(&FieldElement::from_integer(&b, 2));
        let x = FieldElement::from_rational(&b, rat(5, 2));
        let y = x.div(&div);
        assert_eq!(y.mul(&div).sub(&x).sign(), Ordering::Equal);
        let z = x.div(&q.sub(&one));
        assert_eq!(z.mul(&q.sub(&one)).sub(&x).sign(), Ordering::Equal);
    }

    #[test]
    fn enclosure_is_tight_and_correct() {
        let g = golden();
        let q = FieldElement::generator(&g);
        let iv = q.enclosure(&rat(1, 10_000));
        assert!(iv.width() <= rat(1, 10_000));
        assert!(iv.lo <= rat(1619, 1000) && rat(1617, 1000) <= iv.hi);
    }
}
