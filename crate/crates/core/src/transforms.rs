//! Degree-n pull-back machinery for dihedral hypergeometric equations with a
//! free parameter: the θ polynomial pair, the covering φ = x θ₂²/θ₁², the
//! Tchebyshev connection, and the Heun parameter maps of the quadratic
//! substitutions.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::rational::Rational;
use crate::ring::Ring;

/// The polynomial pair θ₁, θ₂ with
/// θ₁(x) = Σ C(n,2j) x^j and θ₂(x) = Σ C(n,2j+1) x^j,
/// i.e. the even/odd binomial halves of (1 ± √x)^n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThetaPair {
    pub n: u32,
    pub theta1: Poly<Rational>,
    pub theta2: Poly<Rational>,
}

/// Builds the θ pair for a positive n. The pair satisfies
/// θ₁(x²) − x θ₂(x²) = (1−x)^n and θ₁(x)² − x θ₂(x)² = (1−x)^n exactly.
pub fn theta_pair(n: u32) -> Result<ThetaPair> {
    if n == 0 {
        return Err(Error::Precondition("theta pair needs n >= 1".into()));
    }
    let n = n as usize;
    let mut even = Vec::with_capacity(n / 2 + 1);
    let mut odd = Vec::with_capacity((n + 1) / 2);
    for j in 0..=n / 2 {
        even.push(Rational::binomial(n, 2 * j));
    }
    for j in 0..=(n.saturating_sub(1)) / 2 {
        odd.push(Rational::binomial(n, 2 * j + 1));
    }
    Ok(ThetaPair {
        n: n as u32,
        theta1: Poly::new(even),
        theta2: Poly::new(odd),
    })
}

/// The degree-n covering φ(x) = x θ₂(x)² / θ₁(x)² in lowest terms;
/// φ(0) = 0 and the map degree equals n.
pub fn pullback_phi(n: u32) -> Result<RatFunc<Rational>> {
    let t = theta_pair(n)?;
    let num = t.theta2.pow(2).shift_up(1);
    let den = t.theta1.pow(2);
    Ok(RatFunc::new(num, den))
}

/// Tchebyshev polynomials (T_n, U_{n-1}) from the classical three-term
/// recurrence. This is the independent oracle for the θ/Tchebyshev relation;
/// it never touches the hypergeometric evaluators.
pub fn tchebyshev_pair(n: u32) -> (Poly<Rational>, Poly<Rational>) {
    assert!(n >= 1, "tchebyshev pair needs n >= 1");
    let x = Poly::<Rational>::x();
    let two_x = x.scale(&Rational::from_int(2));
    let mut t_prev = Poly::<Rational>::one(); // T_0
    let mut t_cur = x.clone(); // T_1
    let mut u_prev = Poly::<Rational>::one(); // U_0
    let mut u_cur = two_x.clone(); // U_1
    for _ in 1..n {
        let t_next = two_x.mul(&t_cur).sub(&t_prev);
        t_prev = t_cur;
        t_cur = t_next;
        let u_next = two_x.mul(&u_cur).sub(&u_prev);
        u_prev = u_cur;
        u_cur = u_next;
    }
    (t_cur, u_prev)
}

/// Substitutes `(x²−1)/x²` into a polynomial and clears denominators with
/// `x^scale`, i.e. returns `x^scale · p((x²−1)/x²)`. Requires
/// `scale >= 2 deg(p)` so the result is a polynomial.
pub fn substitute_sq_moebius(p: &Poly<Rational>, scale: usize) -> Result<Poly<Rational>> {
    if let Some(d) = p.degree() {
        if scale < 2 * d {
            return Err(Error::Precondition(format!(
                "need scale >= 2 deg(p); got scale = {scale}, deg = {d}"
            )));
        }
    }
    // x^scale * sum c_j ((x^2-1)/x^2)^j = sum c_j x^(scale-2j) (x^2-1)^j
    let x2m1 = Poly::new(vec![
        Rational::from_int(-1),
        Rational::zero(),
        Rational::one(),
    ]);
    let mut acc = Poly::zero();
    for (j, c) in p.coeffs().iter().enumerate() {
        let term = x2m1
            .pow(j)
            .mul_coeff(c)
            .shift_up(scale - 2 * j);
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Local data of a Heun equation: exponent parameters, the fourth singular
/// point t, and the accessory parameter q.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeunParams<D> {
    pub alpha: D,
    pub beta: D,
    pub gamma: D,
    pub delta: D,
    pub t: D,
    pub q: D,
}

/// Heun parameters produced by the quadratic substitution z ↦ 4x(1−x)
/// applied to a Gauss equation with parameters (A, B, C):
/// (α, β, γ, δ, t, q) = (2A, 2B, C, C, 1/2, 2AB).
pub fn heun_square_map<D: Ring>(a: &D, b: &D, c: &D) -> HeunParams<D> {
    let two = D::from_integer(2);
    HeunParams {
        alpha: two.mul(a),
        beta: two.mul(b),
        gamma: c.clone(),
        delta: c.clone(),
        t: D::from_rational(&Rational::new(1, 2)),
        q: two.mul(a).mul(b),
    }
}

/// Heun parameters of the equation obtained by pulling a dihedral Gauss
/// equation back along the quadratic covering 4x/(1+x)² with the power
/// factor (1+x)^(−a): (α, β, γ, δ, t, q) = (a, −k−ℓ, 1+a+k+ℓ, −2k, −1, (k−ℓ)a).
pub fn heun_dihedral_pullback<D: Ring>(a: &D, k: u32, l: u32) -> HeunParams<D> {
    HeunParams {
        alpha: a.clone(),
        beta: D::from_integer(-(k as i64) - (l as i64)),
        gamma: D::one().add(a).add(&D::from_integer((k + l) as i64)),
        delta: D::from_integer(-2 * (k as i64)),
        t: D::from_integer(-1),
        q: a.scale(&Rational::from_int(k as i64 - l as i64)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::new(cs.iter().map(|&n| Rational::from_int(n)).collect())
    }

    #[test]
    fn theta_pair_small_cases() {
        let t1 = theta_pair(1).unwrap();
        assert_eq!((t1.theta1, t1.theta2), (p(&[1]), p(&[1])));
        let t2 = theta_pair(2).unwrap();
        assert_eq!((t2.theta1, t2.theta2), (p(&[1, 1]), p(&[2])));
        let t3 = theta_pair(3).unwrap();
        assert_eq!((t3.theta1, t3.theta2), (p(&[1, 3]), p(&[3, 1])));
        assert!(theta_pair(0).is_err());
    }

    #[test]
    fn theta_pair_degrees() {
        for n in 1..=20u32 {
            let t = theta_pair(n).unwrap();
            assert_eq!(t.theta1.degree(), Some(n as usize / 2));
            assert_eq!(t.theta2.degree(), Some((n as usize - 1) / 2));
            // theta2(0) = C(n, 1) = n
            assert_eq!(t.theta2.coeff(0), Rational::from_int(n as i64));
        }
    }

    #[test]
    fn phi_small_cases() {
        // n = 1: the identity map x
        let phi1 = pullback_phi(1).unwrap();
        assert_eq!(phi1.numerator(), &p(&[0, 1]));
        assert_eq!(phi1.denominator(), &Poly::one());
        // n = 2: 4x/(1+x)^2
        let phi2 = pullback_phi(2).unwrap();
        assert_eq!(phi2.numerator(), &p(&[0, 4]));
        assert_eq!(phi2.denominator(), &p(&[1, 1]).pow(2));
        // n = 3: x(3+x)^2/(1+3x)^2; stored with monic denominator
        let phi3 = pullback_phi(3).unwrap();
        let num = p(&[0, 1]).mul(&p(&[3, 1]).pow(2)).scale(&Rational::new(1, 9));
        let den = p(&[1, 3]).pow(2).scale(&Rational::new(1, 9));
        assert_eq!(phi3.numerator(), &num);
        assert_eq!(phi3.denominator(), &den);
        for n in 1..=12u32 {
            assert_eq!(pullback_phi(n).unwrap().map_degree(), n as usize);
        }
    }

    #[test]
    fn tchebyshev_recurrence_small_cases() {
        assert_eq!(tchebyshev_pair(1), (p(&[0, 1]), p(&[1])));
        assert_eq!(tchebyshev_pair(2), (p(&[-1, 0, 2]), p(&[0, 2])));
        assert_eq!(tchebyshev_pair(3), (p(&[0, -3, 0, 4]), p(&[-1, 0, 4])));
    }

    #[test]
    fn heun_parameter_maps() {
        // square map at (A, B, C) = (a/2, (a+1)/2, 1/2) over Q[a]
        type Qa = Poly<Rational>;
        let a = Qa::x();
        let half = Rational::new(1, 2);
        let hp = heun_square_map(
            &a.scale(&half),
            &a.add(&Qa::one()).scale(&half),
            &Qa::from_rational(&half),
        );
        assert_eq!(hp.alpha, a);
        assert_eq!(hp.beta, a.add(&Qa::one()));
        assert_eq!(hp.gamma, Qa::from_rational(&half));
        assert_eq!(hp.delta, Qa::from_rational(&half));
        assert_eq!(hp.t, Qa::from_rational(&half));
        assert_eq!(hp.q, a.mul(&a.add(&Qa::one())).scale(&half));

        // dihedral pullback at (a, 0, 0): (a, 0, 1+a, 0, -1, 0)
        let hp0 = heun_dihedral_pullback(&a, 0, 0);
        assert_eq!(hp0.alpha, a);
        assert!(hp0.beta.is_zero());
        assert_eq!(hp0.gamma, Qa::one().add(&a));
        assert!(hp0.delta.is_zero());
        assert_eq!(hp0.t, Qa::from_integer(-1));
        assert!(hp0.q.is_zero());

        // (a, 1, 1): (a, -2, 3+a, -2, -1, 0)
        let hp1 = heun_dihedral_pullback(&a, 1, 1);
        assert_eq!(hp1.beta, Qa::from_integer(-2));
        assert_eq!(hp1.gamma, a.add(&Qa::from_integer(3)));
        assert_eq!(hp1.delta, Qa::from_integer(-2));
        assert!(hp1.q.is_zero());
    }
}
