//! Pochhammer algebra and evaluators for terminating single and double
//! hypergeometric sums, plus truncated non-terminating series.
//!
//! Sums with nonpositive-integer upper parameters use the terminating
//! interpretation: every term is built as a product of per-index ratio
//! factors, so expressions like (-k)_p / (-2k)_p are evaluated
//! factor-by-factor without ever dividing by zero. A zero lower-parameter
//! factor is legal only when an upper zero factor at an index <= that
//! position has already annihilated the term; otherwise the evaluation
//! reports the offending index.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::ring::Ring;
use crate::series::Series;

/// Rising factorial `base (base+1) ... (base+count-1)`; the empty product is 1.
pub fn pochhammer<D: Ring>(base: &D, count: usize) -> D {
    let mut acc = D::one();
    let mut f = base.clone();
    for _ in 0..count {
        acc = acc.mul(&f);
        f = f.add(&D::one());
    }
    acc
}

/// Smallest `k >= 0` such that some upper parameter equals `-k`, i.e. the
/// terminating index of the sum.
pub fn termination_index<D: Ring>(upper: &[D]) -> Option<usize> {
    upper
        .iter()
        .filter_map(|u| u.to_rational().and_then(|q| q.as_nonpositive_integer()))
        .min()
}

/// Coefficients `c_j = prod (u_i)_j / (prod (l_i)_j * j!)` for `j < count`,
/// built by per-index ratio factors with the terminating interpretation.
pub fn pfq_coeffs<D: Ring>(upper: &[D], lower: &[D], count: usize) -> Result<Vec<D>> {
    let mut out = Vec::with_capacity(count);
    let mut term = D::one();
    let mut dead = false;
    for j in 0..count {
        out.push(if dead { D::zero() } else { term.clone() });
        if j + 1 == count {
            break;
        }
        if dead {
            continue;
        }
        let shift = D::from_integer(j as i64);
        let mut num = D::one();
        for u in upper {
            num = num.mul(&u.add(&shift));
        }
        if num.is_zero() {
            dead = true;
            continue;
        }
        let mut den = D::from_integer((j + 1) as i64);
        for l in lower {
            den = den.mul(&l.add(&shift));
        }
        let inv = den.inverse().ok_or_else(|| Error::UndefinedTerm {
            index: (j + 1).to_string(),
            reason: "zero lower-parameter factor not cancelled by an upper zero".into(),
        })?;
        term = term.mul(&num).mul(&inv);
    }
    Ok(out)
}

/// Terminating generalized hypergeometric sum with the argument in the same
/// domain. Errors if no upper parameter is a nonpositive integer.
pub fn pfq_terminating<D: Ring>(upper: &[D], lower: &[D], arg: &D) -> Result<D> {
    let k = termination_index(upper).ok_or_else(|| {
        Error::Precondition("no nonpositive-integer upper parameter; the sum does not terminate".into())
    })?;
    let coeffs = pfq_coeffs(upper, lower, k + 1)?;
    // Horner over the coefficient list
    let mut acc = D::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(arg).add(c);
    }
    Ok(acc)
}

/// Terminating sum with the argument in an algebra over the coefficient
/// domain (rational functions, √x pairs, ...).
pub fn pfq_terminating_in<D: Ring, R: Ring>(
    upper: &[D],
    lower: &[D],
    arg: &R,
    embed: &dyn Fn(&D) -> R,
) -> Result<R> {
    let k = termination_index(upper).ok_or_else(|| {
        Error::Precondition("no nonpositive-integer upper parameter; the sum does not terminate".into())
    })?;
    let coeffs = pfq_coeffs(upper, lower, k + 1)?;
    let mut acc = R::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(arg).add(&embed(c));
    }
    Ok(acc)
}

/// Truncated power series of a (generally non-terminating) pFq in the given
/// variable. Errors if a lower-parameter factor vanishes inside the window
/// without being cancelled.
pub fn pfq_series<D: Ring>(
    upper: &[D],
    lower: &[D],
    var: &'static str,
    order: usize,
) -> Result<Series<D>> {
    let count = match termination_index(upper) {
        Some(k) if k + 1 < order => k + 1,
        _ => order,
    };
    let coeffs = pfq_coeffs(upper, lower, count)?;
    Ok(Series::new(var, order, coeffs))
}

/// Terminating sum applied to a series argument.
pub fn pfq_terminating_series<D: Ring>(
    upper: &[D],
    lower: &[D],
    arg: &Series<D>,
) -> Result<Series<D>> {
    let k = termination_index(upper).ok_or_else(|| {
        Error::Precondition("no nonpositive-integer upper parameter; the sum does not terminate".into())
    })?;
    let coeffs = pfq_coeffs(upper, lower, k + 1)?;
    let mut acc = Series::zero(arg.var(), arg.order());
    for c in coeffs.iter().rev() {
        acc = acc.mul(arg).add(&Series::constant(arg.var(), arg.order(), c.clone()));
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Double sums
// ---------------------------------------------------------------------------

/// Which double-sum family a parameter set describes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DoubleKind {
    /// Appell F2: `(a)_{p+q} (u1)_p (u2)_q / ((v1)_p (v2)_q p! q!)`.
    F2,
    /// Appell F3: `(u1)_p (u2)_q (v1)_p (v2)_q / ((b)_{p+q} p! q!)`.
    F3,
    /// Kampé de Fériet 2:1;1 / 1:1;1 —
    /// `(a)_{p+q} (b)_{p+q} (u1)_p (u2)_q / ((c)_{p+q} (v1)_p (v2)_q p! q!)`.
    Kdf211,
    /// Kampé de Fériet 1:2;2 / 2:0;0 —
    /// `(a)_{p+q} (u1)_p (u2)_q (v1)_p (v2)_q / ((b)_{p+q} (c)_{p+q} p! q!)`.
    Kdf122,
}

/// Parameters of a double hypergeometric sum, sorted by the index each
/// Pochhammer factor runs over.
#[derive(Clone, Debug)]
pub struct DoubleSumSpec<D> {
    pub kind: DoubleKind,
    pq_num: Vec<D>,
    p_num: Vec<D>,
    q_num: Vec<D>,
    pq_den: Vec<D>,
    p_den: Vec<D>,
    q_den: Vec<D>,
}

impl<D: Ring> DoubleSumSpec<D> {
    pub fn f2(a: D, u1: D, u2: D, v1: D, v2: D) -> Self {
        DoubleSumSpec {
            kind: DoubleKind::F2,
            pq_num: vec![a],
            p_num: vec![u1],
            q_num: vec![u2],
            pq_den: vec![],
            p_den: vec![v1],
            q_den: vec![v2],
        }
    }

    pub fn f3(u1: D, u2: D, v1: D, v2: D, b: D) -> Self {
        DoubleSumSpec {
            kind: DoubleKind::F3,
            pq_num: vec![],
            p_num: vec![u1, v1],
            q_num: vec![u2, v2],
            pq_den: vec![b],
            p_den: vec![],
            q_den: vec![],
        }
    }

    pub fn kdf211(a: D, b: D, u1: D, u2: D, c: D, v1: D, v2: D) -> Self {
        DoubleSumSpec {
            kind: DoubleKind::Kdf211,
            pq_num: vec![a, b],
            p_num: vec![u1],
            q_num: vec![u2],
            pq_den: vec![c],
            p_den: vec![v1],
            q_den: vec![v2],
        }
    }

    pub fn kdf122(a: D, u1: D, u2: D, v1: D, v2: D, b: D, c: D) -> Self {
        DoubleSumSpec {
            kind: DoubleKind::Kdf122,
            pq_num: vec![a],
            p_num: vec![u1, v1],
            q_num: vec![u2, v2],
            pq_den: vec![b, c],
            p_den: vec![],
            q_den: vec![],
        }
    }
}

/// Coefficient table `coef[p][q]` for `p <= p_bound`, `q <= q_bound`,
/// built by ratio steps with the same zero-avoidance contract as the
/// univariate sums. Undefined terms report their `(p, q)` index.
pub fn double_sum_coeffs<D: Ring>(
    spec: &DoubleSumSpec<D>,
    p_bound: usize,
    q_bound: usize,
) -> Result<Vec<Vec<D>>> {
    // step in the q direction from (p, q) to (p, q+1)
    let q_step = |val: &D, dead: bool, p: usize, q: usize| -> Result<(D, bool)> {
        let pq_shift = D::from_integer((p + q) as i64);
        let q_shift = D::from_integer(q as i64);
        let mut num = D::one();
        for f in &spec.pq_num {
            num = num.mul(&f.add(&pq_shift));
        }
        for f in &spec.q_num {
            num = num.mul(&f.add(&q_shift));
        }
        if dead || num.is_zero() {
            return Ok((D::zero(), true));
        }
        let mut den = D::from_integer((q + 1) as i64);
        for f in &spec.pq_den {
            den = den.mul(&f.add(&pq_shift));
        }
        for f in &spec.q_den {
            den = den.mul(&f.add(&q_shift));
        }
        let inv = den.inverse().ok_or_else(|| Error::UndefinedTerm {
            index: format!("({p}, {})", q + 1),
            reason: "zero lower-parameter factor not cancelled by an upper zero".into(),
        })?;
        Ok((val.mul(&num).mul(&inv), false))
    };
    // step in the p direction from (p, 0) to (p+1, 0)
    let p_step = |val: &D, dead: bool, p: usize| -> Result<(D, bool)> {
        let shift = D::from_integer(p as i64);
        let mut num = D::one();
        for f in &spec.pq_num {
            num = num.mul(&f.add(&shift));
        }
        for f in &spec.p_num {
            num = num.mul(&f.add(&shift));
        }
        if dead || num.is_zero() {
            return Ok((D::zero(), true));
        }
        let mut den = D::from_integer((p + 1) as i64);
        for f in &spec.pq_den {
            den = den.mul(&f.add(&shift));
        }
        for f in &spec.p_den {
            den = den.mul(&f.add(&shift));
        }
        let inv = den.inverse().ok_or_else(|| Error::UndefinedTerm {
            index: format!("({}, 0)", p + 1),
            reason: "zero lower-parameter factor not cancelled by an upper zero".into(),
        })?;
        Ok((val.mul(&num).mul(&inv), false))
    };

    let mut rows = Vec::with_capacity(p_bound + 1);
    let mut col = (D::one(), false);
    for p in 0..=p_bound {
        let mut row = Vec::with_capacity(q_bound + 1);
        let mut cur = col.clone();
        row.push(cur.0.clone());
        for q in 0..q_bound {
            cur = q_step(&cur.0, cur.1, p, q)?;
            row.push(cur.0.clone());
        }
        rows.push(row);
        if p < p_bound {
            col = p_step(&col.0, col.1, p)?;
        }
    }
    Ok(rows)
}

/// Evaluates a terminating double sum with both arguments in an algebra `R`
/// over the coefficient domain: `sum coef[p][q] x^p y^q` with at most
/// `(p_bound+1)(q_bound+1)` terms.
pub fn eval_double_sum<D: Ring, R: Ring>(
    coeffs: &[Vec<D>],
    x: &R,
    y: &R,
    embed: &dyn Fn(&D) -> R,
) -> R {
    let mut acc = R::zero();
    let mut xp = R::one();
    for row in coeffs {
        // Horner in y for this row
        let mut row_acc = R::zero();
        for c in row.iter().rev() {
            row_acc = row_acc.mul(y).add(&embed(c));
        }
        acc = acc.add(&xp.mul(&row_acc));
        xp = xp.mul(x);
    }
    acc
}

/// Series-argument version of [`eval_double_sum`].
pub fn eval_double_sum_series<D: Ring>(
    coeffs: &[Vec<D>],
    x: &Series<D>,
    y: &Series<D>,
) -> Series<D> {
    let var = x.var();
    let order = x.order().min(y.order());
    let mut acc = Series::zero(var, order);
    let mut xp = Series::one(var, order);
    for row in coeffs {
        let mut row_acc = Series::zero(var, order);
        for c in row.iter().rev() {
            row_acc = row_acc
                .mul(y)
                .add(&Series::constant(var, order, c.clone()));
        }
        acc = acc.add(&xp.mul(&row_acc));
        xp = xp.mul(x);
    }
    acc
}

/// Terminating double sum with both truncation bounds explicit and the
/// arguments in the coefficient domain itself.
pub fn terminating_double_sum<D: Ring>(
    spec: &DoubleSumSpec<D>,
    k: usize,
    l: usize,
    x: &D,
    y: &D,
) -> Result<D> {
    let coeffs = double_sum_coeffs(spec, k, l)?;
    Ok(eval_double_sum(&coeffs, x, y, &|d: &D| d.clone()))
}

// ---------------------------------------------------------------------------
// Convenience constructors for rational and shifted-linear parameters
// ---------------------------------------------------------------------------

/// Shorthand for a rational parameter list.
pub fn params<D: Ring>(qs: &[Rational]) -> Vec<D> {
    qs.iter().map(D::from_rational).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    type Q = Rational;
    type Qa = Poly<Rational>;

    fn r(n: i64) -> Q {
        Rational::from_int(n)
    }

    fn rr(n: i64, d: i64) -> Q {
        Rational::new(n, d)
    }

    #[test]
    fn pochhammer_examples() {
        // (a)_3 = a^3 + 3a^2 + 2a over Q[a]
        let a = Qa::x();
        let p = pochhammer(&a, 3);
        let expected = Poly::new(vec![r(0), r(2), r(3), r(1)]);
        assert_eq!(p, expected);
        // (1/2)_2 = 3/4
        assert_eq!(pochhammer(&rr(1, 2), 2), rr(3, 4));
        // (-3)_5 = 0
        assert_eq!(pochhammer(&r(-3), 5), r(0));
        // empty product
        assert_eq!(pochhammer(&r(5), 0), r(1));
    }

    #[test]
    fn terminating_2f1_term_by_term() {
        // 2F1(-2, -3/2; -1/2; w) = 1 - 6w - 3w^2 (per-index factor products);
        // with w = x/4 the polynomial is 1 - (3/2)x - (3/16)x^2.
        let coeffs =
            pfq_coeffs::<Q>(&[r(-2), rr(-3, 2)], &[rr(-1, 2)], 3).unwrap();
        assert_eq!(coeffs, vec![r(1), r(-6), r(-3)]);
    }

    #[test]
    fn terminating_2f1_matches_theta_polynomial() {
        // 2F1(-n/2, -(n-1)/2; 1/2; x) at n = 3 is 1 + 3x
        let v = pfq_terminating(&[rr(-3, 2), r(-1)], &[rr(1, 2)], &Q::one()).unwrap();
        assert_eq!(v, r(4)); // evaluated at x = 1: 1 + 3 = 4
        let coeffs = pfq_coeffs::<Q>(&[rr(-3, 2), r(-1)], &[rr(1, 2)], 2).unwrap();
        assert_eq!(coeffs, vec![r(1), r(3)]);
    }

    #[test]
    fn zero_length_sum_is_one() {
        // an upper parameter 0 terminates immediately
        let v = pfq_terminating(&[r(0), rr(5, 3), rr(-7, 2)], &[rr(1, 3), rr(2, 5)], &r(9))
            .unwrap();
        assert_eq!(v, r(1));
    }

    #[test]
    fn uncancelled_lower_zero_is_an_error() {
        // 2F1(-3, 1; -2; x): lower factor hits zero at index 3 before the
        // upper -3 annihilates (annihilation happens after index 3).
        let err = pfq_coeffs::<Q>(&[r(-3), r(1)], &[r(-2)], 4);
        assert!(err.is_err());
        // but (-2)_j / (-2)_j style cancellation is fine: upper zero at the
        // same index annihilates first.
        let ok = pfq_coeffs::<Q>(&[r(-2), r(1)], &[r(-2)], 5).unwrap();
        assert_eq!(ok[3], r(0));
        assert_eq!(ok[4], r(0));
    }

    #[test]
    fn series_embeds_terminating_sum() {
        // 2F1(-1, b; c; z) = 1 - (b/c) z, thereafter zero
        let s = pfq_series(&[r(-1), rr(2, 3)], &[rr(5, 7)], "z", 6).unwrap();
        assert_eq!(s.coeff(0), r(1));
        assert_eq!(s.coeff(1), rr(-14, 15));
        for j in 2..6 {
            assert_eq!(s.coeff(j), r(0));
        }
    }

    #[test]
    fn series_order_one_is_constant_one() {
        let s = pfq_series(&[rr(1, 3), rr(2, 5)], &[rr(7, 2)], "z", 1).unwrap();
        assert_eq!(s, Series::one("z", 1));
    }

    #[test]
    fn symbolic_2f1_coefficient() {
        // 2F1(a/2, (a+1)/2; 1/2; z): coefficient of z is a(a+1)/2
        let a = Qa::x();
        let upper = [
            a.scale(&rr(1, 2)),
            a.add(&Qa::one()).scale(&rr(1, 2)),
        ];
        let lower = [Qa::from_rational(&rr(1, 2))];
        let s = pfq_series(&upper, &lower, "z", 3).unwrap();
        let expected = a.mul(&a.add(&Qa::one())).scale(&rr(1, 2));
        assert_eq!(s.coeff(1), expected);
    }

    #[test]
    fn f3_single_term_and_linear_case() {
        // F3(k+1, l+1; -k, -l; c; u, v) at k = l = 0 is the single term 1
        let spec = DoubleSumSpec::f3(r(1), r(1), r(0), r(0), rr(3, 2));
        assert_eq!(
            terminating_double_sum(&spec, 0, 0, &r(7), &r(-4)).unwrap(),
            r(1)
        );
        // F3(2, 1; -1, 0; 3/2; u, 0) = 1 - (4/3) u
        let spec = DoubleSumSpec::f3(r(2), r(1), r(-1), r(0), rr(3, 2));
        let coeffs = double_sum_coeffs(&spec, 1, 0).unwrap();
        assert_eq!(coeffs[0][0], r(1));
        assert_eq!(coeffs[1][0], rr(-4, 3));
    }

    #[test]
    fn f2_four_term_symbolic_expansion() {
        // F2(a; -1, -1; -2, -2; x, y) = 1 + (a/2)x + (a/2)y + (a(a+1)/4)xy
        let a = Qa::x();
        let m1 = Qa::from_integer(-1);
        let m2 = Qa::from_integer(-2);
        let spec = DoubleSumSpec::f2(a.clone(), m1.clone(), m1, m2.clone(), m2);
        let coeffs = double_sum_coeffs(&spec, 1, 1).unwrap();
        let half_a = a.scale(&rr(1, 2));
        assert_eq!(coeffs[0][0], Qa::one());
        assert_eq!(coeffs[1][0], half_a.clone());
        assert_eq!(coeffs[0][1], half_a);
        let quarter = a.mul(&a.add(&Qa::one())).scale(&rr(1, 4));
        assert_eq!(coeffs[1][1], quarter);
    }
}
