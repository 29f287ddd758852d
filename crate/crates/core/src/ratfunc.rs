//! Rational functions over a coefficient field, kept in lowest terms with a
//! monic denominator. Fraction fields nest: `RatFunc<RatFunc<Rational>>`
//! realizes ℚ(A)(B) for two-parameter symbolic verification.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{poly_gcd, Poly};
use crate::rational::Rational;
use crate::ring::{Field, Ring};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc<D> {
    num: Poly<D>,
    den: Poly<D>,
}

impl<D: Field> RatFunc<D> {
    /// Builds `num / den` reduced to lowest terms with a monic denominator.
    /// Panics if `den` is zero.
    pub fn new(num: Poly<D>, den: Poly<D>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::reduce(num, den)
    }

    fn reduce(num: Poly<D>, den: Poly<D>) -> Self {
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        if den.degree() == Some(0) {
            let inv = den.leading().unwrap().inv();
            return RatFunc {
                num: num.mul_coeff(&inv),
                den: Poly::one(),
            };
        }
        let g = poly_gcd(&num, &den).expect("inputs nonzero");
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        let lead_inv = den.leading().unwrap().inv();
        RatFunc {
            num: num.mul_coeff(&lead_inv),
            den: den.mul_coeff(&lead_inv),
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly<D>) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(d: D) -> Self {
        RatFunc::from_poly(Poly::constant(d))
    }

    /// The generator `x` of the fraction field.
    pub fn x() -> Self {
        RatFunc::from_poly(Poly::x())
    }

    pub fn numerator(&self) -> &Poly<D> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<D> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(p)` iff the value is a polynomial.
    pub fn as_poly(&self) -> Option<Poly<D>> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        Self::reduce(num, den)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc {
                num: self.num.mul(&rhs.num),
                den: Poly::one(),
            };
        }
        Self::reduce(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::Domain("division by zero rational function".into()));
        }
        Ok(self.mul(&rhs.recip().unwrap()))
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::reduce(self.den.clone(), self.num.clone()))
        }
    }

    pub fn pow_i64(&self, e: i64) -> Self {
        if e < 0 {
            self.recip()
                .expect("negative power of zero")
                .pow_usize(e.unsigned_abs() as usize)
        } else {
            self.pow_usize(e as usize)
        }
    }

    /// Degree of the map `max(deg num, deg den)`.
    pub fn map_degree(&self) -> usize {
        let dn = self.num.degree().map_or(0, |d| d);
        let dd = self.den.degree().map_or(0, |d| d);
        dn.max(dd)
    }

    /// Evaluates at a point of `D`; `None` on a pole.
    pub fn eval(&self, v: &D) -> Option<D> {
        let den = self.den.eval(v);
        den.inverse().map(|i| self.num.eval(v).mul(&i))
    }
}

impl<D: Field> Ring for RatFunc<D> {
    fn zero() -> Self {
        RatFunc::zero()
    }

    fn one() -> Self {
        RatFunc::one()
    }

    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        RatFunc::add(self, rhs)
    }

    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }

    fn mul(&self, rhs: &Self) -> Self {
        RatFunc::mul(self, rhs)
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self.mul(&rhs.recip().unwrap()))
        }
    }

    fn inverse(&self) -> Option<Self> {
        self.recip()
    }

    fn from_rational(q: &Rational) -> Self {
        RatFunc::from_poly(Poly::from_rational(q))
    }

    fn to_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.to_rational()
        } else {
            None
        }
    }
}

impl<D: Field> Field for RatFunc<D> {}

impl<D: Field + fmt::Display> fmt::Display for RatFunc<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = Rational;
    type F = RatFunc<Q>;

    fn p(cs: &[i64]) -> Poly<Q> {
        Poly::new(cs.iter().map(|&n| Rational::from_int(n)).collect())
    }

    #[test]
    fn reduction_and_monic_denominator() {
        // (x^2 - 1) / (2x - 2) = (x + 1) / 2
        let f = F::new(p(&[-1, 0, 1]), p(&[-2, 2]));
        assert_eq!(f.numerator(), &p(&[1, 1]).scale(&Rational::new(1, 2)));
        assert_eq!(f.denominator(), &Poly::one());
        let g = F::new(p(&[0, 1]), p(&[0, 0, 2]));
        assert!(g.denominator().is_monic());
    }

    #[test]
    fn field_operations() {
        let x = F::x();
        // x/(x-1) + 1/(1-x) = (x-1)/(x-1) = 1
        let a = F::new(p(&[0, 1]), p(&[-1, 1]));
        let b = F::new(p(&[1]), p(&[1, -1]));
        assert_eq!(a.add(&b), F::one());
        // (x * x) / x = x
        assert_eq!(x.mul(&x).div(&x).unwrap(), x);
    }

    #[test]
    fn nested_fraction_field() {
        // In Q(A)(B): (A + B)(A - B) = A^2 - B^2
        type Qa = RatFunc<Rational>;
        type Qab = RatFunc<Qa>;
        let a_inner = Qa::x();
        let a: Qab = Qab::constant(a_inner.clone());
        let b: Qab = Qab::x();
        let lhs = a.add(&b).mul(&a.sub(&b));
        let a2 = Qab::constant(a_inner.mul(&a_inner));
        let rhs = a2.sub(&b.mul(&b));
        assert_eq!(lhs, rhs);
    }
}
