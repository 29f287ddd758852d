//! Laurent polynomials: finitely many terms with integer exponents of either
//! sign. These are the components of the √x pairs; negative exponents occur
//! mid-computation and are asserted away in final objects.

use crate::poly::Poly;
use crate::rational::Rational;
use crate::ring::Ring;

/// Coefficients for exponents `low, low+1, ..., low+len-1`; the first and
/// last stored coefficients are nonzero (canonical form). Zero is the empty
/// list with `low = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Laurent<D> {
    low: i64,
    c: Vec<D>,
}

impl<D: Ring> Laurent<D> {
    pub fn new(low: i64, mut c: Vec<D>) -> Self {
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        let lead_zeros = c.iter().take_while(|x| x.is_zero()).count();
        if lead_zeros > 0 {
            c.drain(..lead_zeros);
        }
        if c.is_empty() {
            Laurent { low: 0, c }
        } else {
            Laurent {
                low: low + lead_zeros as i64,
                c,
            }
        }
    }

    pub fn zero() -> Self {
        Laurent { low: 0, c: Vec::new() }
    }

    pub fn one() -> Self {
        Laurent::constant(D::one())
    }

    pub fn constant(d: D) -> Self {
        Laurent::new(0, vec![d])
    }

    /// `d * x^e` with `e` of either sign.
    pub fn monomial(d: D, e: i64) -> Self {
        Laurent::new(e, vec![d])
    }

    pub fn from_poly(p: &Poly<D>) -> Self {
        Laurent::new(0, p.coeffs().to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Lowest exponent with nonzero coefficient; `None` for zero.
    pub fn low(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.low)
        }
    }

    /// Highest exponent with nonzero coefficient.
    pub fn high(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.low + self.c.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, e: i64) -> D {
        if self.is_zero() || e < self.low {
            return D::zero();
        }
        let i = (e - self.low) as usize;
        self.c.get(i).cloned().unwrap_or_else(D::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high().unwrap().max(rhs.high().unwrap());
        let mut c = Vec::with_capacity((high - low + 1) as usize);
        for e in low..=high {
            c.push(self.coeff(e).add(&rhs.coeff(e)));
        }
        Laurent::new(low, c)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Laurent {
            low: self.low,
            c: self.c.iter().map(|x| x.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        let mut c = vec![D::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        Laurent::new(self.low + rhs.low, c)
    }

    pub fn mul_coeff(&self, d: &D) -> Self {
        Laurent::new(self.low, self.c.iter().map(|x| x.mul(d)).collect())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        self.mul_coeff(&D::from_rational(q))
    }

    /// Multiplication by `x^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            low: self.low + e,
            c: self.c.clone(),
        }
    }

    /// Conversion to an ordinary polynomial; `None` if a negative exponent
    /// carries a nonzero coefficient.
    pub fn to_poly(&self) -> Option<Poly<D>> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if self.low < 0 {
            return None;
        }
        let mut c = vec![D::zero(); self.low as usize];
        c.extend(self.c.iter().cloned());
        Some(Poly::new(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type L = Laurent<Rational>;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn canonical_bounds() {
        let a = L::new(-2, vec![r(0), r(1), r(0), r(2), r(0)]);
        assert_eq!(a.low(), Some(-1));
        assert_eq!(a.high(), Some(1));
        assert_eq!(a.coeff(-1), r(1));
        assert_eq!(a.coeff(0), r(0));
        assert_eq!(a.coeff(1), r(2));
    }

    #[test]
    fn mul_tracks_negative_exponents() {
        // (x^-1 + 1)(x - 1) = x - x^-1
        let a = L::new(-1, vec![r(1), r(1)]);
        let b = L::new(0, vec![r(-1), r(1)]);
        let prod = a.mul(&b);
        assert_eq!(prod, L::new(-1, vec![r(-1), r(0), r(1)]));
        assert!(prod.to_poly().is_none());
        assert_eq!(prod.shift(1).to_poly().unwrap().degree(), Some(2));
    }
}
