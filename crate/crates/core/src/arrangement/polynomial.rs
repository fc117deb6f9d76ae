use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// A univariate polynomial in `t` with integer coefficients, stored
/// lowest degree first without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_i64(&[c])
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// `t`.
    pub fn t() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `t − a`.
    pub fn linear_root(a: i64) -> Self {
        Self::from_i64(&[-a, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients, lowest degree first.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// `p(t + a)`.
    pub fn shift(&self, a: i64) -> Self {
        let x = Self::from_i64(&[a, 1]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &x) + &Self::new(vec![c.clone()]))
    }

    /// `(−t)^ℓ p(−1/t)`, which turns a characteristic polynomial of an
    /// arrangement in an ℓ-dimensional space into its Poincaré polynomial.
    pub fn reciprocal_alternating(&self, ell: usize) -> Self {
        let coeffs = (0..=ell)
            .map(|c| {
                let a = self.coefficient(ell - c);
                if c % 2 == 0 {
                    a
                } else {
                    -a
                }
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn to_i64_coefficients(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coefficient(k) + other.coefficient(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coefficient(k) - other.coefficient(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, other: IntPolynomial) -> IntPolynomial {
                (&self).$method(&other)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl std::iter::Product for IntPolynomial {
    fn product<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |acc, p| &acc + &p)
    }
}

/// Sparse, highest degree first, e.g. `t^4-5t^3+10t^2-10t+4`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let abs = c.abs();
            let body = match (k, abs.is_one()) {
                (0, _) => abs.to_string(),
                (1, true) => "t".to_string(),
                (1, false) => format!("{abs}t"),
                (_, true) => format!("t^{k}"),
                (_, false) => format!("{abs}t^{k}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Coefficient array, lowest degree first; coefficients beyond `i64` are strings.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(x) => seq.serialize_element(&x)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_table_style() {
        assert_eq!(IntPolynomial::from_i64(&[4, -10, 10, -5, 1]).to_string(), "t^4-5t^3+10t^2-10t+4");
        assert_eq!(IntPolynomial::from_i64(&[-1, 1]).to_string(), "t-1");
        assert_eq!(IntPolynomial::from_i64(&[0, -1]).to_string(), "-t");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::one().to_string(), "1");
    }

    #[test]
    fn arithmetic() {
        let p: IntPolynomial = (1..=4).map(IntPolynomial::linear_root).product();
        assert_eq!(p, IntPolynomial::from_i64(&[24, -50, 35, -10, 1]));
        assert_eq!(p.eval(&BigInt::from(3)), BigInt::zero());
        assert_eq!(p.degree(), Some(4));
        let q = IntPolynomial::linear_root(1).pow(3);
        assert_eq!(q, IntPolynomial::from_i64(&[-1, 3, -3, 1]));
        assert_eq!(q.shift(1), IntPolynomial::monomial(BigInt::one(), 3));
        assert!((&q - &q).is_zero());
        assert_eq!(serde_json::to_string(&q).unwrap(), "[-1,3,-3,1]");
    }

    #[test]
    fn poincare_of_braid_characteristic_polynomial() {
        let chi: IntPolynomial = (1..=3).map(IntPolynomial::linear_root).product();
        let poin: IntPolynomial = (1..=3).map(|k| IntPolynomial::from_i64(&[1, k])).product();
        assert_eq!(chi.reciprocal_alternating(3), poin);
    }
}
