//! Dense univariate polynomials over a pluggable coefficient domain.
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so the
//! representation is canonical and equality is coefficient-wise. The zero
//! polynomial has an empty coefficient list and degree `None`.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::ring::{Field, Ring};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<D> {
    c: Vec<D>,
}

impl<D: Ring> Poly<D> {
    /// Builds a polynomial from coefficients (lowest degree first), trimming
    /// trailing zeros to keep the canonical form.
    pub fn new(mut c: Vec<D>) -> Self {
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(D::one())
    }

    pub fn constant(d: D) -> Self {
        Poly::new(vec![d])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![D::zero(), D::one()])
    }

    /// `d * x^e`.
    pub fn monomial(d: D, e: usize) -> Self {
        if d.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![D::zero(); e + 1];
        c[e] = d;
        Poly { c }
    }

    pub fn from_rationals(rs: &[Rational]) -> Self {
        Poly::new(rs.iter().map(D::from_rational).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[D] {
        &self.c
    }

    /// Coefficient of `x^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> D {
        self.c.get(i).cloned().unwrap_or_else(D::zero)
    }

    pub fn leading(&self) -> Option<&D> {
        self.c.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i).add(&rhs.coeff(i)));
        }
        Poly::new(c)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            c: self.c.iter().map(|x| x.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
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
        Poly::new(c)
    }

    pub fn mul_coeff(&self, d: &D) -> Self {
        Poly::new(self.c.iter().map(|x| x.mul(d)).collect())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        self.mul_coeff(&D::from_rational(q))
    }

    /// Multiplication by `x^e`.
    pub fn shift_up(&self, e: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![D::zero(); e];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Poly::one();
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

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Poly::zero();
        }
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a.scale(&Rational::from_int(i as i64)))
            .collect();
        Poly::new(c)
    }

    /// Horner evaluation at a point of the coefficient domain.
    pub fn eval(&self, v: &D) -> D {
        self.eval_in(v, &|d: &D| d.clone())
    }

    /// Horner evaluation in any algebra `R` over the coefficient domain.
    pub fn eval_in<R: Ring>(&self, v: &R, embed: &dyn Fn(&D) -> R) -> R {
        let mut acc = R::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul(v).add(&embed(a));
        }
        acc
    }

    pub fn map<E: Ring>(&self, f: &dyn Fn(&D) -> E) -> Poly<E> {
        Poly::new(self.c.iter().map(f).collect())
    }

    /// Long division, `self = q * d + r` with `deg r < deg d`. Returns `None`
    /// when a leading-coefficient division is not exact in the domain.
    pub fn divrem(&self, d: &Self) -> Option<(Self, Self)> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let lead = d.leading().unwrap();
        let mut r = self.clone();
        let mut q = vec![D::zero(); self.c.len().saturating_sub(dd)];
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let f = r.leading().unwrap().exact_div(lead)?;
            q[rd - dd] = f.clone();
            r = r.sub(&d.mul(&Poly::monomial(f, rd - dd)));
        }
        Some((Poly::new(q), r))
    }

    /// Exact quotient; `None` if the division leaves a remainder.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d)?;
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Returns `(x-1)^d * p(x/(x-1))` expanded as a polynomial. Applying the
    /// operation twice with the same `d` recovers a scalar multiple of `p`.
    pub fn moebius_involution(&self, d: usize) -> Result<Self> {
        if let Some(deg) = self.degree() {
            if d < deg {
                return Err(Error::Precondition(format!(
                    "moebius involution needs d >= deg(p); got d = {d}, deg = {deg}"
                )));
            }
        }
        let xm1 = Poly::new(vec![D::one().neg(), D::one()]);
        let mut acc = Poly::zero();
        for (i, a) in self.c.iter().enumerate() {
            // coefficient a_i contributes a_i * x^i * (x-1)^(d-i)
            let term = Poly::monomial(a.clone(), i).mul(&xm1.pow(d - i));
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

impl<D: Field> Poly<D> {
    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |l| l.is_one())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.mul_coeff(&l.inv()),
        }
    }
}

/// Monic greatest common divisor over a field; it divides both inputs
/// exactly. `gcd(p, 0)` is `p` made monic; `gcd(0, 0)` is a domain error.
pub fn poly_gcd<D: Field>(p: &Poly<D>, q: &Poly<D>) -> Result<Poly<D>> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::Domain("gcd(0, 0) is undefined".into()));
    }
    if p.is_zero() {
        return Ok(q.monic());
    }
    if q.is_zero() {
        return Ok(p.monic());
    }
    Ok(D::poly_gcd_nonzero(p, q))
}

/// Squarefree decomposition by Yun's algorithm (characteristic zero).
/// Returns pairs `(g_i, i)` with `p = lc * prod g_i^i`, the `g_i` squarefree,
/// pairwise coprime and monic.
pub fn squarefree_decomposition<D: Field>(p: &Poly<D>) -> Result<Vec<(Poly<D>, usize)>> {
    if p.is_zero() {
        return Err(Error::Domain("squarefree decomposition of zero".into()));
    }
    let p = p.monic();
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let dp = p.derivative();
    let g0 = poly_gcd(&p, &dp)?;
    let mut w = p.exact_div(&g0).expect("gcd divides");
    let mut y = dp.exact_div(&g0).expect("gcd divides");
    let mut out = Vec::new();
    let mut i = 1usize;
    loop {
        let z = y.sub(&w.derivative());
        if z.is_zero() {
            if w.degree().map_or(false, |d| d > 0) {
                out.push((w.monic(), i));
            }
            break;
        }
        let g = poly_gcd(&w, &z)?;
        if g.degree().map_or(false, |d| d > 0) {
            out.push((g.clone(), i));
        }
        w = w.exact_div(&g).expect("gcd divides");
        y = z.exact_div(&g).expect("gcd divides");
        i += 1;
    }
    Ok(out)
}

impl<D: Ring> Ring for Poly<D> {
    fn zero() -> Self {
        Poly::zero()
    }

    fn one() -> Self {
        Poly::one()
    }

    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        Poly::add(self, rhs)
    }

    fn neg(&self) -> Self {
        Poly::neg(self)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Poly::mul(self, rhs)
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        Poly::exact_div(self, rhs)
    }

    fn inverse(&self) -> Option<Self> {
        if self.degree() == Some(0) {
            self.c[0].inverse().map(Poly::constant)
        } else {
            None
        }
    }

    fn from_rational(q: &Rational) -> Self {
        if q.is_zero() {
            Poly::zero()
        } else {
            Poly::constant(D::from_rational(q))
        }
    }

    fn to_rational(&self) -> Option<Rational> {
        match self.degree() {
            None => Some(Rational::zero()),
            Some(0) => self.c[0].to_rational(),
            _ => None,
        }
    }
}

impl<D: Ring + fmt::Display> Poly<D> {
    /// Renders with the given variable name, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let coeff = a.to_string();
            let part = match i {
                0 => coeff,
                1 if a.is_one() => var.to_string(),
                1 => format!("({coeff})*{var}"),
                _ if a.is_one() => format!("{var}^{i}"),
                _ => format!("({coeff})*{var}^{i}"),
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

impl<D: Ring + fmt::Display> fmt::Display for Poly<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type QPoly = Poly<Rational>;

    fn p(cs: &[i64]) -> QPoly {
        Poly::new(cs.iter().map(|&n| Rational::from_int(n)).collect())
    }

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        let q = Poly::new(vec![
            Rational::from_int(1),
            Rational::from_int(0),
            Rational::from_int(0),
        ]);
        assert_eq!(q.degree(), Some(0));
        assert_eq!(QPoly::zero().degree(), None);
    }

    #[test]
    fn gcd_shared_root() {
        // gcd(x^2 - 1, x - 1) = x - 1
        let g = poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap();
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn gcd_coprime_inputs() {
        // 1 + 3x has root -1/3, which is not a root of x(3+x)^2,
        // so the gcd is 1 (brute-force root check).
        let a = p(&[1, 3]);
        let b = p(&[0, 1]).mul(&p(&[3, 1]).pow(2));
        assert_eq!(a.eval(&Rational::new(-1, 3)), Rational::zero());
        assert!(!b.eval(&Rational::new(-1, 3)).is_zero());
        let g = poly_gcd(&a, &b).unwrap();
        assert_eq!(g, QPoly::one());
    }

    #[test]
    fn gcd_with_zero_is_monic_identity() {
        let g = poly_gcd(&p(&[2, 4]), &QPoly::zero()).unwrap();
        assert_eq!(g, p(&[1, 2]).scale(&Rational::new(1, 2)));
        assert!(g.is_monic());
        assert!(poly_gcd(&QPoly::zero(), &QPoly::zero()).is_err());
    }

    #[test]
    fn moebius_involution_examples() {
        // p = x, d = 1: (x-1) * x/(x-1) = x
        assert_eq!(p(&[0, 1]).moebius_involution(1).unwrap(), p(&[0, 1]));
        // p = 1 - x, d = 1: (x-1)(1 - x/(x-1)) = -1
        assert_eq!(p(&[1, -1]).moebius_involution(1).unwrap(), p(&[-1]));
        // p = 4 - x, d = 1: (x-1)(4 - x/(x-1)) = 3x - 4
        assert_eq!(p(&[4, -1]).moebius_involution(1).unwrap(), p(&[-4, 3]));
        // degree cap is a precondition
        assert!(p(&[0, 0, 1]).moebius_involution(1).is_err());
    }

    #[test]
    fn exact_division_over_q_bracket_a() {
        // (a x + a^2) / a = x + a in Q[a][x]
        let a: Poly<Rational> = Poly::x();
        let num: Poly<Poly<Rational>> =
            Poly::new(vec![a.mul(&a), a.clone()]);
        let q = num.exact_div(&Poly::constant(a.clone())).unwrap();
        assert_eq!(q, Poly::new(vec![a, Poly::one()]));
    }

    #[test]
    fn squarefree_decomposition_recovers_multiplicities() {
        // x (3+x)^2 -> [(x, 1), (x+3, 2)]
        let f = p(&[0, 1]).mul(&p(&[3, 1]).pow(2));
        let parts = squarefree_decomposition(&f).unwrap();
        assert_eq!(parts, vec![(p(&[0, 1]), 1), (p(&[3, 1]), 2)]);
    }
}
