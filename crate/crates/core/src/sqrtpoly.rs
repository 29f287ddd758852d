//! Elements of `D[√x, 1/√x]`, stored as a pair of Laurent polynomials:
//! value = even(x) + √x · odd(x). All half-integer-power expressions live
//! here; conjugation is √x ↦ −√x, which negates the odd part only.

use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::poly::Poly;
use crate::rational::Rational;
use crate::ring::Ring;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SqrtPoly<D> {
    even: Laurent<D>,
    odd: Laurent<D>,
}

impl<D: Ring> SqrtPoly<D> {
    pub fn new(even: Laurent<D>, odd: Laurent<D>) -> Self {
        SqrtPoly { even, odd }
    }

    pub fn zero() -> Self {
        SqrtPoly {
            even: Laurent::zero(),
            odd: Laurent::zero(),
        }
    }

    pub fn one() -> Self {
        SqrtPoly {
            even: Laurent::one(),
            odd: Laurent::zero(),
        }
    }

    pub fn constant(d: D) -> Self {
        SqrtPoly {
            even: Laurent::constant(d),
            odd: Laurent::zero(),
        }
    }

    /// The element √x.
    pub fn sqrt_x() -> Self {
        SqrtPoly {
            even: Laurent::zero(),
            odd: Laurent::one(),
        }
    }

    pub fn from_poly(p: &Poly<D>) -> Self {
        SqrtPoly {
            even: Laurent::from_poly(p),
            odd: Laurent::zero(),
        }
    }

    pub fn even_part(&self) -> &Laurent<D> {
        &self.even
    }

    pub fn odd_part(&self) -> &Laurent<D> {
        &self.odd
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        SqrtPoly {
            even: self.even.add(&rhs.even),
            odd: self.odd.add(&rhs.odd),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        SqrtPoly {
            even: self.even.neg(),
            odd: self.odd.neg(),
        }
    }

    /// (e1 + √x o1)(e2 + √x o2) = (e1 e2 + x o1 o2) + √x (e1 o2 + e2 o1).
    pub fn mul(&self, rhs: &Self) -> Self {
        let even = self
            .even
            .mul(&rhs.even)
            .add(&self.odd.mul(&rhs.odd).shift(1));
        let odd = self.even.mul(&rhs.odd).add(&self.odd.mul(&rhs.even));
        SqrtPoly { even, odd }
    }

    pub fn mul_coeff(&self, d: &D) -> Self {
        SqrtPoly {
            even: self.even.mul_coeff(d),
            odd: self.odd.mul_coeff(d),
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        self.mul_coeff(&D::from_rational(q))
    }

    /// Binary powering; `u^0 = 1`.
    pub fn pow(&self, e: usize) -> Self {
        let mut acc = SqrtPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Conjugation √x ↦ −√x.
    pub fn conj(&self) -> Self {
        SqrtPoly {
            even: self.even.clone(),
            odd: self.odd.neg(),
        }
    }

    /// Multiplication by an integer power of x.
    pub fn mul_x_pow(&self, e: i64) -> Self {
        SqrtPoly {
            even: self.even.shift(e),
            odd: self.odd.shift(e),
        }
    }

    /// Multiplication by `x^(j/2)` for integer `j` of either sign.
    pub fn mul_half_pow(&self, j: i64) -> Self {
        let (q, r) = (j.div_euclid(2), j.rem_euclid(2));
        let shifted = self.mul_x_pow(q);
        if r == 0 {
            shifted
        } else {
            // multiply by √x: (e, o) -> (x*o, e)
            SqrtPoly {
                even: shifted.odd.shift(1),
                odd: shifted.even,
            }
        }
    }

    /// Lowest exponent in the expansion in t = √x (t-units), if nonzero.
    pub fn t_low(&self) -> Option<i64> {
        let e = self.even.low().map(|l| 2 * l);
        let o = self.odd.low().map(|l| 2 * l + 1);
        match (e, o) {
            (None, None) => None,
            (Some(a), None) => Some(a),
            (None, Some(b)) => Some(b),
            (Some(a), Some(b)) => Some(a.min(b)),
        }
    }

    /// The full expansion in t = √x as a Laurent polynomial in t.
    pub fn to_t_laurent(&self) -> Laurent<D> {
        let mut acc = Laurent::zero();
        if let (Some(lo), Some(hi)) = (self.even.low(), self.even.high()) {
            for e in lo..=hi {
                acc = acc.add(&Laurent::monomial(self.even.coeff(e), 2 * e));
            }
        }
        if let (Some(lo), Some(hi)) = (self.odd.low(), self.odd.high()) {
            for e in lo..=hi {
                acc = acc.add(&Laurent::monomial(self.odd.coeff(e), 2 * e + 1));
            }
        }
        acc
    }

    /// Splits into ordinary polynomials `(even, odd)`; errors if any negative
    /// power of x survives (final objects must be polynomial in √x).
    pub fn to_poly_parts(&self) -> Result<(Poly<D>, Poly<D>)> {
        let even = self.even.to_poly().ok_or_else(|| {
            Error::Internal("negative x-power in the even part".into())
        })?;
        let odd = self.odd.to_poly().ok_or_else(|| {
            Error::Internal("negative x-power in the odd part".into())
        })?;
        Ok((even, odd))
    }
}

impl<D: Ring> Ring for SqrtPoly<D> {
    fn zero() -> Self {
        SqrtPoly::zero()
    }

    fn one() -> Self {
        SqrtPoly::one()
    }

    fn is_zero(&self) -> bool {
        SqrtPoly::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        SqrtPoly::add(self, rhs)
    }

    fn neg(&self) -> Self {
        SqrtPoly::neg(self)
    }

    fn mul(&self, rhs: &Self) -> Self {
        SqrtPoly::mul(self, rhs)
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        // Only division by units is supported here; that is all the
        // evaluators need.
        rhs.inverse().map(|i| self.mul(&i))
    }

    fn inverse(&self) -> Option<Self> {
        // Units of the form c * x^k with invertible c (odd part zero), or
        // c * x^k * sqrt(x) (even part zero).
        if self.odd.is_zero() && !self.even.is_zero() {
            let (lo, hi) = (self.even.low().unwrap(), self.even.high().unwrap());
            if lo == hi {
                return self
                    .even
                    .coeff(lo)
                    .inverse()
                    .map(|c| SqrtPoly::new(Laurent::monomial(c, -lo), Laurent::zero()));
            }
        }
        if self.even.is_zero() && !self.odd.is_zero() {
            let (lo, hi) = (self.odd.low().unwrap(), self.odd.high().unwrap());
            if lo == hi {
                // (c x^lo √x)^(-1) = c^(-1) x^(-lo-1) √x
                return self
                    .odd
                    .coeff(lo)
                    .inverse()
                    .map(|c| SqrtPoly::new(Laurent::zero(), Laurent::monomial(c, -lo - 1)));
            }
        }
        None
    }

    fn from_rational(q: &Rational) -> Self {
        if q.is_zero() {
            SqrtPoly::zero()
        } else {
            SqrtPoly::constant(D::from_rational(q))
        }
    }

    fn to_rational(&self) -> Option<Rational> {
        if !self.odd.is_zero() {
            return None;
        }
        if self.even.is_zero() {
            return Some(Rational::zero());
        }
        if self.even.low() == Some(0) && self.even.high() == Some(0) {
            self.even.coeff(0).to_rational()
        } else {
            None
        }
    }
}
