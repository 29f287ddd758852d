//! Coefficient-domain abstraction.
//!
//! Every coefficient domain in this crate is a commutative ℚ-algebra with
//! exact arithmetic and decidable equality. The three instances that matter
//! are ℚ itself ([`crate::rational::Rational`]), the polynomial ring ℚ[a] in
//! one formal parameter ([`crate::poly::Poly<Rational>`]), and fraction
//! fields such as ℚ(r) ([`crate::ratfunc::RatFunc<Rational>`]); fraction
//! fields nest, so ℚ(A)(B) is available for two-parameter identities.

use crate::rational::Rational;

/// A commutative ring with exact equality, an exact-division test, and an
/// embedding of ℚ. All values are immutable; operations are pure.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// Exact quotient: `Some(q)` iff `self == q * rhs` in the ring.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    /// Multiplicative inverse, if `self` is a unit.
    fn inverse(&self) -> Option<Self>;

    /// Embedding of a rational constant.
    fn from_rational(q: &Rational) -> Self;

    /// `Some(q)` iff the element is the image of the rational constant `q`.
    fn to_rational(&self) -> Option<Rational>;

    fn from_integer(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Multiplication by a rational scalar.
    fn scale(&self, q: &Rational) -> Self {
        self.mul(&Self::from_rational(q))
    }

    fn pow_usize(&self, e: usize) -> Self {
        let mut base = self.clone();
        let mut e = e;
        let mut acc = Self::one();
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
}

/// Marker for rings in which every nonzero element is a unit.
pub trait Field: Ring {
    /// Inverse of a nonzero element; panics on zero.
    fn inv(&self) -> Self {
        self.inverse().expect("inverse of zero field element")
    }

    /// Monic gcd of two nonzero polynomials over this field. The default is
    /// the Euclidean algorithm with monic normalization at every step;
    /// ℚ overrides it with a fraction-free primitive remainder sequence,
    /// which avoids the coefficient blowup of naive elimination.
    fn poly_gcd_nonzero(a: &crate::poly::Poly<Self>, b: &crate::poly::Poly<Self>) -> crate::poly::Poly<Self> {
        let mut a = a.monic();
        let mut b = b.monic();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("field division cannot fail");
            a = b;
            b = match r.leading() {
                None => crate::poly::Poly::zero(),
                Some(_) => r.monic(),
            };
        }
        a.monic()
    }
}
