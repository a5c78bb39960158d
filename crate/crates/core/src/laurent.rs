//! Integer Laurent polynomials in the field size `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Sparse `Σ c_k q^k` with `k ∈ Z`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    pub fn q() -> Self {
        LaurentPoly::monomial(1, 1)
    }

    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(coeff, exp);
        p
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    pub fn add_term(&mut self, coeff: i64, exp: i32) {
        if coeff == 0 {
            return;
        }
        let c = self.terms.entry(exp).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    pub fn pow_q_minus_one(k: u32) -> Self {
        let base = LaurentPoly::q() - LaurentPoly::one();
        (0..k).fold(LaurentPoly::one(), |acc, _| &acc * &base)
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Exact division by `q - 1`. On failure returns the nonzero remainder,
    /// which equals the value at `q = 1`.
    pub fn div_q_minus_one(&self) -> Result<LaurentPoly, i64> {
        let rem = self.at_one();
        if rem != 0 {
            return Err(rem);
        }
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return Ok(LaurentPoly::zero());
        };
        // synthetic division from the top: quotient coefficient of q^{k-1}
        // is the running sum of coefficients of exponents >= k
        let mut quotient = LaurentPoly::zero();
        let mut carry = 0i64;
        for k in (lo + 1..=hi).rev() {
            carry += self.coeff(k);
            quotient.add_term(carry, k - 1);
        }
        Ok(quotient)
    }

    /// Exact value at an integer `q`.
    pub fn eval(&self, q: i64) -> Ratio<i128> {
        let q = q as i128;
        self.terms.iter().fold(Ratio::from_integer(0), |acc, (&e, &c)| {
            let power = Ratio::from_integer(q).pow(e);
            acc + power * Ratio::from_integer(c as i128)
        })
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(c, e);
        }
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, coeff: u64, exp: i32) -> fmt::Result {
    match (coeff, exp) {
        (c, 0) => write!(f, "{c}"),
        (1, 1) => write!(f, "q"),
        (c, 1) => write!(f, "{c}q"),
        (1, e) => write!(f, "q^{e}"),
        (c, e) => write!(f, "{c}q^{e}"),
    }
}

/// Descending exponents with explicit signs, e.g. `q^2 - 2q + 1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().rev().enumerate() {
            match (k, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            fmt_monomial(f, c.unsigned_abs(), e)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse Laurent polynomial: {0}")]
pub struct ParseLaurentError(String);

impl FromStr for LaurentPoly {
    type Err = ParseLaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseLaurentError(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut out = LaurentPoly::zero();
        // split into signed terms; a '-' right after '^' belongs to the exponent
        let mut terms = Vec::new();
        let mut current = String::new();
        let mut prev = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev.is_some() && prev != Some('^') {
                terms.push(std::mem::take(&mut current));
            }
            current.push(ch);
            prev = Some(ch);
        }
        terms.push(current);
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, term.strip_prefix('+').unwrap_or(&term)),
            };
            let (coeff, exp) = match body.find('q') {
                None => (body.parse::<i64>().map_err(|_| err())?, 0),
                Some(pos) => {
                    let c = if pos == 0 { 1 } else { body[..pos].parse::<i64>().map_err(|_| err())? };
                    let rest = &body[pos + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').ok_or_else(err)?.parse::<i32>().map_err(|_| err())?
                    };
                    (c, e)
                }
            };
            out.add_term(sign * coeff, exp);
        }
        Ok(out)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn printing() {
        let p = LaurentPoly::q() - LaurentPoly::one();
        assert_eq!(p.to_string(), "q - 1");
        assert_eq!((&p * &p).to_string(), "q^2 - 2q + 1");
        assert_eq!(LaurentPoly::monomial(-3, -2).to_string(), "-3q^-2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn parsing() {
        let p: LaurentPoly = "q^2 - 2q + 1".parse().unwrap();
        assert_eq!(p, LaurentPoly::pow_q_minus_one(2));
        let p: LaurentPoly = "-q^-1 + 4".parse().unwrap();
        assert_eq!(p.coeff(-1), -1);
        assert_eq!(p.coeff(0), 4);
        assert!("q^".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn division() {
        let p = LaurentPoly::pow_q_minus_one(3).shift(-2);
        let d = p.div_q_minus_one().unwrap();
        assert_eq!(d, LaurentPoly::pow_q_minus_one(2).shift(-2));
        assert_eq!(LaurentPoly::q().div_q_minus_one(), Err(1));
    }

    #[test]
    fn evaluation() {
        let p: LaurentPoly = "q^2 - q^-1".parse().unwrap();
        assert_eq!(p.eval(2), Ratio::new(7, 2));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-20i64..20, -6i32..6), 0..6).prop_map(|terms| {
            let mut p = LaurentPoly::zero();
            for (c, e) in terms {
                p.add_term(c, e);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(p in arb_poly()) {
            let back: LaurentPoly = p.to_string().parse().unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn multiply_then_divide(p in arb_poly()) {
            let m = &p * &(LaurentPoly::q() - LaurentPoly::one());
            prop_assert_eq!(m.div_q_minus_one().unwrap(), p);
        }

        #[test]
        fn evaluation_is_a_ring_map(a in arb_poly(), b in arb_poly(), q in 2i64..6) {
            prop_assert_eq!((&a * &b).eval(q), a.eval(q) * b.eval(q));
            prop_assert_eq!((&a + &b).eval(q), a.eval(q) + b.eval(q));
        }
    }
}
