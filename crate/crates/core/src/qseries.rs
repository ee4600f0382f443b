//! Exact polynomial arithmetic in `q` and `(t, q)` with big-integer
//! coefficients, Gaussian binomials, and the Baxter / Catalan counts.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::generate_baxter;

/// Polynomial in `q`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(degree: u32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(degree, c.into());
        p
    }

    /// `coeffs[i]` is the coefficient of `q^i`.
    pub fn from_coeffs<T: Into<BigInt> + Clone>(coeffs: &[T]) -> Self {
        let mut p = Self::zero();
        for (d, c) in coeffs.iter().enumerate() {
            p.add_term(d as u32, c.clone().into());
        }
        p
    }

    /// `1 + q + … + q^{m-1}`.
    pub fn q_integer(m: u32) -> Self {
        Self::from_coeffs(&vec![1; m as usize])
    }

    pub fn add_term(&mut self, degree: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(degree).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: u32) -> BigInt {
        self.coeffs.get(&degree).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    /// Dense coefficient list up to the degree; empty for zero.
    pub fn to_dense(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| self.coeff(i)).collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn shift(&self, by: u32) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(d, c)| (d + by, c.clone()))
                .collect(),
        }
    }

    /// Quotient `c` with `self = divisor · c`; a nonzero remainder is an error.
    pub fn exact_div(&self, divisor: &QPoly) -> Result<QPoly> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::InexactDivision(
                "division by the zero polynomial".into(),
            ));
        };
        let lead = divisor.coeff(dd);
        let mut rem = self.clone();
        let mut quot = QPoly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let (c, r) = rem.coeff(rd).div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "leading coefficient {} not divisible by {lead}",
                    rem.coeff(rd)
                )));
            }
            let term = QPoly::monomial(rd - dd, c);
            rem = &rem - &(divisor * &term);
            quot = &quot + &term;
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::InexactDivision(format!(
                "remainder {rem} after dividing by {divisor}"
            )))
        }
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (d, c) in rhs.terms() {
            out.add_term(d, c.clone());
        }
        out
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (da, a) in self.terms() {
            for (db, b) in rhs.terms() {
                out.add_term(da + db, a * b);
            }
        }
        out
    }
}

impl Mul for QPoly {
    type Output = QPoly;

    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.terms().map(|(d, c)| monomial_text(c, 0, d)).collect();
        write_sum(f, &terms)
    }
}

/// Polynomial in `t` and `q`, keyed by `(t-degree, q-degree)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TQPoly {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl TQPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(t: u32, q: u32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(t, q, c.into());
        p
    }

    /// `t^k · poly`.
    pub fn from_q_slice(k: u32, poly: &QPoly) -> Self {
        let mut p = Self::zero();
        for (d, c) in poly.terms() {
            p.add_term(k, d, c.clone());
        }
        p
    }

    pub fn add_term(&mut self, t: u32, q: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((t, q)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&(t, q));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, t: u32, q: u32) -> BigInt {
        self.coeffs.get(&(t, q)).cloned().unwrap_or_default()
    }

    /// Terms sorted by `(t-degree, q-degree)`.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn max_t_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|(t, _)| *t).max()
    }

    /// Coefficient of `t^k` as a polynomial in `q`.
    pub fn t_slice(&self, k: u32) -> QPoly {
        let mut out = QPoly::zero();
        for (&(t, q), c) in &self.coeffs {
            if t == k {
                out.add_term(q, c.clone());
            }
        }
        out
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Divides by a polynomial in `q` alone, one `t`-slice at a time.
    pub fn exact_div(&self, divisor: &QPoly) -> Result<TQPoly> {
        let mut out = TQPoly::zero();
        let ts: Vec<u32> = {
            let mut v: Vec<u32> = self.coeffs.keys().map(|(t, _)| *t).collect();
            v.dedup();
            v
        };
        for t in ts {
            let q = self.t_slice(t).exact_div(divisor)?;
            out = &out + &TQPoly::from_q_slice(t, &q);
        }
        Ok(out)
    }

    pub fn to_terms(&self) -> Vec<PolyTerm> {
        self.terms()
            .map(|((t, q), c)| PolyTerm {
                t,
                q,
                c: c.to_string(),
            })
            .collect()
    }

    pub fn from_terms(terms: &[PolyTerm]) -> Result<Self> {
        let mut p = Self::zero();
        for term in terms {
            let c: BigInt = term
                .c
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", term.c)))?;
            p.add_term(term.t, term.q, c);
        }
        Ok(p)
    }
}

impl Add for &TQPoly {
    type Output = TQPoly;

    fn add(self, rhs: &TQPoly) -> TQPoly {
        let mut out = self.clone();
        for ((t, q), c) in rhs.terms() {
            out.add_term(t, q, c.clone());
        }
        out
    }
}

impl Mul for &TQPoly {
    type Output = TQPoly;

    fn mul(self, rhs: &TQPoly) -> TQPoly {
        let mut out = TQPoly::zero();
        for ((ta, qa), a) in self.terms() {
            for ((tb, qb), b) in rhs.terms() {
                out.add_term(ta + tb, qa + qb, a * b);
            }
        }
        out
    }
}

impl fmt::Display for TQPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .terms()
            .map(|((t, q), c)| monomial_text(c, t, q))
            .collect();
        write_sum(f, &terms)
    }
}

fn monomial_text(c: &BigInt, t: u32, q: u32) -> String {
    let pow = |v: &str, e: u32| match e {
        0 => String::new(),
        1 => v.to_string(),
        e => format!("{v}^{e}"),
    };
    let vars: Vec<String> = [pow("t", t), pow("q", q)]
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect();
    if vars.is_empty() {
        return c.to_string();
    }
    let body = vars.join("*");
    if c.is_one() {
        body
    } else if (-c).is_one() {
        format!("-{body}")
    } else {
        format!("{c}*{body}")
    }
}

fn write_sum(f: &mut fmt::Formatter<'_>, terms: &[String]) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (i, t) in terms.iter().enumerate() {
        match (i, t.strip_prefix('-')) {
            (0, _) => f.write_str(t)?,
            (_, Some(rest)) => write!(f, " - {rest}")?,
            (_, None) => write!(f, " + {t}")?,
        }
    }
    Ok(())
}

/// One term of the JSON polynomial form: `{"t":i,"q":j,"c":"<decimal>"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub t: u32,
    pub q: u32,
    pub c: String,
}

/// Exact non-negative count.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigCount(pub BigUint);

impl BigCount {
    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<usize> for BigCount {
    fn from(v: usize) -> Self {
        Self(BigUint::from(v))
    }
}

impl PartialEq<u64> for BigCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl PartialEq<usize> for BigCount {
    fn eq(&self, other: &usize) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl TryFrom<BigInt> for BigCount {
    type Error = Error;

    fn try_from(v: BigInt) -> Result<Self> {
        v.to_biguint()
            .map(BigCount)
            .ok_or_else(|| Error::Domain(format!("negative count {v}")))
    }
}

impl Mul for &BigCount {
    type Output = BigCount;

    fn mul(self, rhs: &BigCount) -> BigCount {
        BigCount(&self.0 * &rhs.0)
    }
}

impl Sum for BigCount {
    fn sum<I: Iterator<Item = BigCount>>(iter: I) -> Self {
        BigCount(iter.map(|c| c.0).sum())
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `[n]_q! = Π_{i=1}^{n} (1 + q + … + q^{i-1})`.
pub fn q_factorial(n: u32) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, i| &acc * &QPoly::q_integer(i))
}

/// Gaussian binomial `[n k]_q`, zero when `k > n`.
pub fn q_binomial(n: u32, k: u32) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    q_factorial(n)
        .exact_div(&q_factorial(k))
        .and_then(|p| p.exact_div(&q_factorial(n - k)))
        .expect("q-factorial quotients are polynomials")
}

fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        BigUint::zero()
    } else {
        num_integer::binomial(BigUint::from(n), BigUint::from(k))
    }
}

pub fn catalan(n: u64) -> BigCount {
    BigCount(binom(2 * n, n) / BigUint::from(n + 1))
}

/// The `k`-th summand of the Baxter number formula, which counts `Tlp_{n,k}`.
pub fn tlp_count_formula(n: u64, k: u64) -> BigCount {
    assert!(n >= 1 && k < n, "need 0 <= k <= n-1");
    let num = binom(n + 1, k) * binom(n + 1, k + 1) * binom(n + 1, k + 2);
    let den = binom(n + 1, 1) * binom(n + 1, 2);
    let (quot, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "summand for n={n}, k={k} is not an integer");
    BigCount(quot)
}

pub fn baxter_number(n: u64) -> BigCount {
    assert!(n >= 1, "baxter_number needs n >= 1");
    let num: BigUint = (0..n)
        .map(|k| binom(n + 1, k) * binom(n + 1, k + 1) * binom(n + 1, k + 2))
        .sum();
    BigCount(num / (binom(n + 1, 1) * binom(n + 1, 2)))
}

/// The displayed sum `Σ_k q^{3·C(k+1,2)} [n+1 k][n+1 k+1][n+1 k+2] t^k`
/// before dividing by `[n+1 1][n+1 2]`.
pub fn baxter_polynomial_numerator(n: u32) -> TQPoly {
    let mut sum = TQPoly::zero();
    for k in 0..n {
        let weight = 3 * (k + 1) * k / 2;
        let slice =
            &(&q_binomial(n + 1, k) * &q_binomial(n + 1, k + 1)) * &q_binomial(n + 1, k + 2);
        sum = &sum + &TQPoly::from_q_slice(k, &slice.shift(weight));
    }
    sum
}

pub fn baxter_polynomial_denominator(n: u32) -> QPoly {
    &q_binomial(n + 1, 1) * &q_binomial(n + 1, 2)
}

/// Closed form of the `(t, q)`-Baxter polynomial.
pub fn baxter_polynomial_rhs(n: u32) -> Result<TQPoly> {
    assert!(n >= 1, "baxter_polynomial_rhs needs n >= 1");
    baxter_polynomial_numerator(n).exact_div(&baxter_polynomial_denominator(n))
}

/// `Σ_{π ∈ Bax_n} t^{des} q^{imaj_B + maj + imaj_T}` by enumeration.
pub fn baxter_polynomial_lhs(n: usize) -> TQPoly {
    let mut out = TQPoly::zero();
    for p in generate_baxter(n) {
        let s = p.stat_profile();
        out.add_term(
            s.des as u32,
            (s.imaj_b + s.maj + s.imaj_t) as u32,
            BigInt::one(),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(cs: &[i64]) -> QPoly {
        QPoly::from_coeffs(cs)
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(3, 2), qp(&[1, 1, 1]));
        for n in 0..6 {
            assert_eq!(q_binomial(n, 0), QPoly::one());
        }
        assert_eq!(q_binomial(4, 2), qp(&[1, 1, 2, 1, 1]));
        assert!(q_binomial(2, 3).is_zero());
    }

    #[test]
    fn exact_div_examples() {
        let a = qp(&[1, 1, 1]);
        assert_eq!((&a * &a).exact_div(&a).unwrap(), a);
        assert_eq!(q_binomial(4, 2).exact_div(&qp(&[1, 0, 1])).unwrap(), a);
        assert!(matches!(
            qp(&[1, 1]).exact_div(&a),
            Err(Error::InexactDivision(_))
        ));
        assert!(matches!(
            a.exact_div(&QPoly::zero()),
            Err(Error::InexactDivision(_))
        ));
        assert!(qp(&[1, 2]).exact_div(&qp(&[2])).is_err());
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(QPoly::zero().degree(), None);
        assert!((&qp(&[1, 2]) - &qp(&[1, 2])).is_zero());
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(qp(&[1, -2, 0, 1]).to_string(), "1 - 2*q + q^3");
    }

    #[test]
    fn rhs_small_cases() {
        assert_eq!(baxter_polynomial_rhs(1).unwrap(), TQPoly::one());
        let two = &TQPoly::one() + &TQPoly::monomial(1, 3, 1);
        assert_eq!(baxter_polynomial_rhs(2).unwrap(), two);
        assert_eq!(
            baxter_polynomial_rhs(3).unwrap().eval_at_one(),
            BigInt::from(6)
        );
        assert_eq!(two.to_string(), "1 + t*q^3");
    }

    #[test]
    fn lhs_small_cases() {
        assert_eq!(baxter_polynomial_lhs(1), TQPoly::one());
        assert_eq!(
            baxter_polynomial_lhs(2),
            &TQPoly::one() + &TQPoly::monomial(1, 3, 1)
        );
        assert_eq!(baxter_polynomial_lhs(5), baxter_polynomial_rhs(5).unwrap());
    }

    #[test]
    fn counts() {
        assert_eq!(baxter_number(1), 1u64);
        assert_eq!(baxter_number(4), 22u64);
        let firsts: Vec<u64> = (1..=10)
            .map(|n| baxter_number(n).to_u64().unwrap())
            .collect();
        assert_eq!(firsts, [1, 2, 6, 22, 92, 422, 2074, 10754, 58202, 326240]);
        assert_eq!(catalan(0), 1u64);
        assert_eq!(catalan(3), 5u64);
        assert_eq!(tlp_count_formula(3, 1), 4u64);
        assert_eq!(tlp_count_formula(2, 1), 1u64);
    }

    #[test]
    fn json_terms_round_trip() {
        let p = baxter_polynomial_rhs(4).unwrap();
        let terms = p.to_terms();
        assert!(terms
            .windows(2)
            .all(|w| (w[0].t, w[0].q) < (w[1].t, w[1].q)));
        assert_eq!(TQPoly::from_terms(&terms).unwrap(), p);
        let bad = [PolyTerm {
            t: 0,
            q: 0,
            c: "x".into(),
        }];
        assert!(TQPoly::from_terms(&bad).is_err());
    }
}
