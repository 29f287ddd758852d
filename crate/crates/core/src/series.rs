//! Truncated power series with exact coefficients.
//!
//! The truncation order is explicit state: a series of order `N` has known
//! coefficients for exponents `0..N`. Mixed-order arithmetic truncates to the
//! minimum order of the operands, so a result can never silently claim more
//! verified coefficients than were actually computed.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rational;
use crate::ring::Ring;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series<D> {
    var: &'static str,
    n: usize,
    c: Vec<D>, // exactly n entries
}

impl<D: Ring> Series<D> {
    pub fn new(var: &'static str, order: usize, mut c: Vec<D>) -> Self {
        assert!(order > 0, "series order must be positive");
        c.truncate(order);
        c.resize_with(order, D::zero);
        Series { var, n: order, c }
    }

    pub fn zero(var: &'static str, order: usize) -> Self {
        Series::new(var, order, Vec::new())
    }

    pub fn one(var: &'static str, order: usize) -> Self {
        Series::new(var, order, vec![D::one()])
    }

    pub fn constant(var: &'static str, order: usize, d: D) -> Self {
        Series::new(var, order, vec![d])
    }

    /// The series of the variable itself.
    pub fn x(var: &'static str, order: usize) -> Self {
        Series::new(var, order, vec![D::zero(), D::one()])
    }

    pub fn from_poly(var: &'static str, order: usize, p: &Poly<D>) -> Self {
        Series::new(var, order, p.coeffs().to_vec())
    }

    pub fn var(&self) -> &'static str {
        self.var
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, i: usize) -> D {
        self.c.get(i).cloned().unwrap_or_else(D::zero)
    }

    pub fn coeffs(&self) -> &[D] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    fn check_var(&self, rhs: &Self) {
        assert_eq!(
            self.var, rhs.var,
            "series in different variables cannot be combined"
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_var(rhs);
        let n = self.n.min(rhs.n);
        let c = (0..n).map(|i| self.c[i].add(&rhs.c[i])).collect();
        Series::new(self.var, n, c)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Series {
            var: self.var,
            n: self.n,
            c: self.c.iter().map(|x| x.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_var(rhs);
        let n = self.n.min(rhs.n);
        let mut c = vec![D::zero(); n];
        for i in 0..n.min(self.c.len()) {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..(n - i).min(rhs.c.len()) {
                if rhs.c[j].is_zero() {
                    continue;
                }
                c[i + j] = c[i + j].add(&self.c[i].mul(&rhs.c[j]));
            }
        }
        Series::new(self.var, n, c)
    }

    pub fn mul_coeff(&self, d: &D) -> Self {
        Series {
            var: self.var,
            n: self.n,
            c: self.c.iter().map(|x| x.mul(d)).collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        self.mul_coeff(&D::from_rational(q))
    }

    /// Multiplication by `var^k`. Knowing the input mod `var^n` determines
    /// the product mod `var^(n+k)`, so the order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut c = vec![D::zero(); k];
        c.extend(self.c.iter().cloned());
        Series::new(self.var, self.n + k, c)
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.n, "cannot extend a truncated series");
        Series::new(self.var, order, self.c[..order].to_vec())
    }

    pub fn pow_usize(&self, e: usize) -> Self {
        let mut acc = Series::one(self.var, self.n);
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

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn invert(&self) -> Result<Self> {
        let c0 = self.coeff(0);
        let inv0 = c0.inverse().ok_or_else(|| {
            Error::Precondition("series inverse needs a unit constant term".into())
        })?;
        let mut c = vec![D::zero(); self.n];
        c[0] = inv0.clone();
        for j in 1..self.n {
            let mut s = D::zero();
            for i in 1..=j {
                s = s.add(&self.coeff(i).mul(&c[j - i]));
            }
            c[j] = s.neg().mul(&inv0);
        }
        Ok(Series::new(self.var, self.n, c))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.invert()?))
    }

    /// Composition `self ∘ inner`. The inner series must have zero constant
    /// term; the result is valid to `min(order(inner), order(self) * val)`
    /// where `val` is the valuation of `inner`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeff(0).is_zero() {
            return Err(Error::Precondition(
                "composition needs an inner series with zero constant term".into(),
            ));
        }
        let var = inner.var;
        match inner.valuation() {
            None => Ok(Series::constant(var, inner.n, self.coeff(0))),
            Some(val) => {
                let mut acc = Series::constant(var, inner.n, self.coeff(self.n - 1));
                for j in (0..self.n - 1).rev() {
                    acc = acc.mul(inner);
                    acc = acc.add(&Series::constant(var, inner.n, self.coeff(j)));
                }
                let valid = inner.n.min(self.n.saturating_mul(val));
                Ok(acc.truncate(valid.max(1)))
            }
        }
    }

    /// `self^e` for a ring exponent, requiring constant term 1. Computed by
    /// the first-order recurrence `s y' = e s' y`, which needs only ring
    /// operations and division by integers.
    pub fn pow_elem(&self, e: &D) -> Result<Self> {
        if !self.coeff(0).is_one() {
            return Err(Error::Precondition(
                "powering with general exponent needs constant term 1".into(),
            ));
        }
        let n = self.n;
        let mut y = vec![D::zero(); n];
        y[0] = D::one();
        for j in 0..n - 1 {
            // (j+1) y_{j+1} = e * sum_{i<=j} (i+1) s_{i+1} y_{j-i}
            //               - sum_{i>=1} (j+1-i) s_i y_{j+1-i}
            let mut lhs = D::zero();
            for i in 0..=j {
                let s = self.coeff(i + 1);
                if s.is_zero() {
                    continue;
                }
                lhs = lhs.add(&s.scale(&Rational::from_int((i + 1) as i64)).mul(&y[j - i]));
            }
            let mut rhs = D::zero();
            for i in 1..=j {
                let s = self.coeff(i);
                if s.is_zero() {
                    continue;
                }
                rhs = rhs.add(
                    &s.scale(&Rational::from_int((j + 1 - i) as i64))
                        .mul(&y[j + 1 - i]),
                );
            }
            y[j + 1] = e
                .mul(&lhs)
                .sub(&rhs)
                .scale(&Rational::new(1, (j + 1) as i64));
        }
        Ok(Series::new(self.var, n, y))
    }

    /// Binomial powering with a rational exponent; requires constant term 1.
    /// For an integer exponent this agrees with repeated multiplication.
    pub fn pow_rational(&self, e: &Rational) -> Result<Self> {
        self.pow_elem(&D::from_rational(e))
    }

    pub fn map<E: Ring>(&self, f: &dyn Fn(&D) -> E) -> Series<E> {
        Series::new(self.var, self.n, self.c.iter().map(f).collect())
    }

    /// Reinterprets a series in `z` as the even series in `t` with `z = t^2`.
    pub fn substitute_square(&self, var: &'static str) -> Series<D> {
        let mut c = vec![D::zero(); 2 * self.n];
        for (i, a) in self.c.iter().enumerate() {
            c[2 * i] = a.clone();
        }
        Series::new(var, 2 * self.n, c)
    }

    /// First index below the common order where coefficients differ.
    pub fn first_mismatch(&self, rhs: &Self) -> Option<(usize, D, D)> {
        self.check_var(rhs);
        let n = self.n.min(rhs.n);
        for i in 0..n {
            if self.c[i] != rhs.c[i] {
                return Some((i, self.c[i].clone(), rhs.c[i].clone()));
            }
        }
        None
    }

    /// Coefficient-wise equality up to the common order.
    pub fn agrees_with(&self, rhs: &Self) -> bool {
        self.first_mismatch(rhs).is_none()
    }

    pub fn common_order(&self, rhs: &Self) -> usize {
        self.n.min(rhs.n)
    }
}

#[allow(clippy::needless_lifetimes)]
impl<D: Ring + fmt::Display> fmt::Display for Series<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "({a})*{}", self.var)?,
                _ => write!(f, "({a})*{}^{i}", self.var)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.var, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type QS = Series<Rational>;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn rr(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    /// 1/(1-u) to the given order.
    fn geometric(order: usize) -> QS {
        Series::new("u", order, vec![r(1); order])
    }

    #[test]
    fn arithmetic_truncates_to_minimum_order() {
        let a = QS::one("x", 6);
        let b = QS::x("x", 4);
        assert_eq!(a.add(&b).order(), 4);
        assert_eq!(a.mul(&b).order(), 4);
    }

    #[test]
    fn compose_geometric_with_x_plus_x2() {
        // 1/(1-u) at u = x + x^2: 1 + x + 2x^2 + 3x^3 + O(x^4)
        let inner = Series::new("x", 4, vec![r(0), r(1), r(1)]);
        let out = geometric(4).compose(&inner).unwrap();
        assert_eq!(out, Series::new("x", 4, vec![r(1), r(1), r(2), r(3)]));
    }

    #[test]
    fn compose_with_zero_inner_gives_constant() {
        let f = Series::new("x", 5, vec![r(7), r(1), r(2)]);
        let out = f.compose(&QS::zero("x", 5)).unwrap();
        assert_eq!(out, Series::constant("x", 5, r(7)));
    }

    #[test]
    fn compose_with_identity_inner() {
        let f = Series::new("x", 5, vec![r(2), r(-1), r(5), r(0), r(9)]);
        assert_eq!(f.compose(&QS::x("x", 5)).unwrap(), f);
    }

    #[test]
    fn compose_rejects_nonzero_constant_term() {
        assert!(geometric(4).compose(&QS::one("x", 4)).is_err());
    }

    #[test]
    fn sqrt_of_one_plus_x() {
        // (1+x)^(1/2) = 1 + x/2 - x^2/8 + O(x^3)
        let s = Series::new("x", 3, vec![r(1), r(1)]);
        let out = s.pow_rational(&rr(1, 2)).unwrap();
        assert_eq!(out, Series::new("x", 3, vec![r(1), rr(1, 2), rr(-1, 8)]));
        assert_eq!(s.pow_rational(&r(0)).unwrap(), QS::one("x", 3));
    }

    #[test]
    fn symbolic_exponent_binomial_series() {
        // (1-x)^(-a) over Q[a]: 1 + a x + a(a+1)/2 x^2 + O(x^3)
        type Qa = Poly<Rational>;
        let a = Qa::x();
        let s: Series<Qa> = Series::new("x", 3, vec![Qa::one(), Qa::one().neg()]);
        let out = s.pow_elem(&a.neg()).unwrap();
        assert_eq!(out.coeff(0), Qa::one());
        assert_eq!(out.coeff(1), a.clone());
        // a(a+1)/2
        let expected = a.mul(&a.add(&Qa::one())).scale(&rr(1, 2));
        assert_eq!(out.coeff(2), expected);
    }

    #[test]
    fn integer_exponent_matches_repeated_multiplication() {
        let s = Series::new("x", 8, vec![r(1), r(2), r(-1), r(3)]);
        let via_pow = s.pow_rational(&r(3)).unwrap();
        let direct = s.mul(&s).mul(&s);
        assert_eq!(via_pow, direct);
    }

    #[test]
    fn shift_up_extends_known_order() {
        let s = Series::new("x", 3, vec![r(1), r(1), r(1)]);
        let t = s.shift_up(2);
        assert_eq!(t.order(), 5);
        assert_eq!(t.coeff(2), r(1));
        assert_eq!(t.coeff(1), r(0));
    }

    #[test]
    fn inversion_round_trip() {
        let s = Series::new("x", 6, vec![r(1), r(3), r(-2), r(1)]);
        let inv = s.invert().unwrap();
        assert_eq!(s.mul(&inv), QS::one("x", 6));
        assert!(QS::x("x", 4).invert().is_err());
    }
}
