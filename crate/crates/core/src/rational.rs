//! Arbitrary-precision rational numbers, the base scalar everywhere.
//!
//! Backed by `num`'s `BigRational`, which keeps values in lowest terms with a
//! positive denominator. No floating point is used anywhere in this crate.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{Field, Ring};

/// An exact rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den`; panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// If the value is an integer `-k` with `k >= 0`, returns `k`.
    /// This is the termination test for hypergeometric upper parameters.
    pub fn as_nonpositive_integer(&self) -> Option<usize> {
        if !self.0.is_integer() || self.0.is_positive() {
            return None;
        }
        let n = -self.0.to_integer();
        usize::try_from(&n).ok()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn pow(&self, e: i32) -> Self {
        if e < 0 {
            Rational(self.0.pow(e))
        } else {
            Rational(self.0.pow(e))
        }
    }

    /// Exact factorial as a rational.
    pub fn factorial(n: usize) -> Self {
        let mut acc = BigInt::one();
        for i in 2..=n {
            acc *= BigInt::from(i);
        }
        Rational(BigRational::from_integer(acc))
    }

    /// Binomial coefficient `C(n, k)`.
    pub fn binomial(n: usize, k: usize) -> Self {
        if k > n {
            return Rational::zero();
        }
        let mut acc = BigRational::one();
        for i in 0..k {
            let num = BigInt::from(n - i);
            let den = BigInt::from(i + 1);
            acc *= BigRational::new(num, den);
        }
        Rational(acc)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `"p"` or `"p/q"` with arbitrary-precision integers.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("invalid rational `{s}`: {m}"));
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s.trim()).map_err(|_| bad("bad integer"))?;
                Ok(Rational(BigRational::from_integer(n)))
            }
            Some((p, q)) => {
                let num = BigInt::from_str(p.trim()).map_err(|_| bad("bad numerator"))?;
                let den = BigInt::from_str(q.trim()).map_err(|_| bad("bad denominator"))?;
                Rational::from_big(num, den)
            }
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }

    fn one() -> Self {
        Rational::one()
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn inverse(&self) -> Option<Self> {
        self.recip()
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
}

impl Field for Rational {
    /// Fraction-free gcd: clear denominators, run a primitive
    /// pseudo-remainder sequence over ℤ, return the monic rational gcd.
    fn poly_gcd_nonzero(
        a: &crate::poly::Poly<Rational>,
        b: &crate::poly::Poly<Rational>,
    ) -> crate::poly::Poly<Rational> {
        let mut p = primitive_int_coeffs(a);
        let mut q = primitive_int_coeffs(b);
        if p.len() < q.len() {
            std::mem::swap(&mut p, &mut q);
        }
        loop {
            let r = int_pseudo_rem(&p, &q);
            if r.is_empty() {
                break;
            }
            p = q;
            q = make_primitive(r);
        }
        let monic_den = q.last().expect("nonzero gcd").clone();
        let coeffs = q
            .into_iter()
            .map(|c| Rational(BigRational::new(c, monic_den.clone())))
            .collect();
        crate::poly::Poly::new(coeffs)
    }
}

/// Clears denominators and strips the integer content; the result is a
/// primitive integer coefficient vector (no trailing zeros).
fn primitive_int_coeffs(p: &crate::poly::Poly<Rational>) -> Vec<BigInt> {
    use num::Integer;
    let mut den = BigInt::one();
    for c in p.coeffs() {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    make_primitive(ints)
}

fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    use num::Integer;
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
        if content.is_one() {
            return v;
        }
    }
    for c in &mut v {
        *c = &*c / &content;
    }
    v
}

/// Pseudo-remainder of primitive integer polynomials: the remainder of
/// `lc(q)^(deg p - deg q + 1) * p` divided by `q`, computed over ℤ.
fn int_pseudo_rem(p: &[BigInt], q: &[BigInt]) -> Vec<BigInt> {
    let dq = q.len() - 1;
    let lq = q.last().unwrap();
    let mut r = p.to_vec();
    while r.len() > dq {
        let dr = r.len() - 1;
        let lead = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c = &*c * lq;
        }
        for (i, qc) in q.iter().enumerate() {
            let idx = dr - dq + i;
            r[idx] = &r[idx] - &(&lead * qc);
        }
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
        if r.is_empty() {
            return r;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_to_lowest_terms() {
        let r = Rational::new(6, -4);
        assert_eq!(r, Rational::new(-3, 2));
        assert_eq!(r.to_string(), "-3/2");
        assert!(r.denom() > &BigInt::zero());
    }

    #[test]
    fn display_omits_unit_denominator() {
        assert_eq!(Rational::from_int(7).to_string(), "7");
        assert_eq!(Rational::new(7, 7).to_string(), "1");
        assert_eq!(Rational::new(1, 2).to_string(), "1/2");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-3", "22/7", "-5/9"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn nonpositive_integer_detection() {
        assert_eq!(Rational::from_int(0).as_nonpositive_integer(), Some(0));
        assert_eq!(Rational::from_int(-3).as_nonpositive_integer(), Some(3));
        assert_eq!(Rational::from_int(2).as_nonpositive_integer(), None);
        assert_eq!(Rational::new(-1, 2).as_nonpositive_integer(), None);
    }

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(Rational::factorial(5), Rational::from_int(120));
        assert_eq!(Rational::binomial(5, 2), Rational::from_int(10));
        assert_eq!(Rational::binomial(3, 5), Rational::zero());
    }
}
