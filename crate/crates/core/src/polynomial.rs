//! Multivariate polynomials with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A polynomial over `Z` in named variables. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    variables: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl IntPolynomial {
    pub fn zero(variables: Vec<String>) -> Self {
        IntPolynomial { variables, terms: BTreeMap::new() }
    }

    pub fn constant(variables: Vec<String>, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(variables);
        let n = p.variables.len();
        p.add_term(vec![0; n], c.into());
        p
    }

    pub fn one(variables: Vec<String>) -> Self {
        Self::constant(variables, 1)
    }

    /// The variable with index `i`.
    pub fn var(variables: Vec<String>, i: usize) -> Self {
        let mut e = vec![0; variables.len()];
        e[i] = 1;
        let mut p = Self::zero(variables);
        p.add_term(e, BigInt::one());
        p
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    /// Exponent vector ↦ coefficient, in lexicographic order of exponents.
    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: BigInt) {
        assert_eq!(exponents.len(), self.variables.len(), "exponent arity");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!(self.variables, other.variables, "polynomials over different variables");
    }

    /// Terms as `(exponents, coefficient)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            variables: self.variables.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.check_ring(rhs);
        let mut out = IntPolynomial::zero(self.variables.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *out.terms.entry(e).or_default() += c1 * c2;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { self.variables[i].clone() } else { format!("{}^{x}", self.variables[i]) })
                .collect();
            let sign = match (k > 0, c.is_negative()) {
                (false, false) => "",
                (false, true) => "-",
                (true, false) => " + ",
                (true, true) => " - ",
            };
            let mag = c.abs();
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{sign}{mag}")?,
                (false, true) => write!(f, "{sign}{}", mono.join("*"))?,
                (false, false) => write!(f, "{sign}{mag}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars() -> Vec<String> {
        vec!["a".into(), "b".into()]
    }

    #[test]
    fn arithmetic() {
        let a = IntPolynomial::var(vars(), 0);
        let b = IntPolynomial::var(vars(), 1);
        let one = IntPolynomial::one(vars());
        // (1 - a)(1 + a) = 1 - a^2
        let p = &(&one - &a) * &(&one + &a);
        assert_eq!(p.terms().len(), 2);
        assert_eq!(p.coefficient(&[2, 0]), BigInt::from(-1));
        assert!((&(&a * &b) - &(&b * &a)).is_zero());
        assert_eq!((&a - &a).to_string(), "0");
        assert_eq!((&(&a * &b) - &one).to_string(), "a*b - 1");
    }
}
