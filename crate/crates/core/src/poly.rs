//! Polynomials in one variable `q` with integer coefficients.
//!
//! Coefficients are `i64` and every arithmetic step is overflow-checked, so a
//! result is either exact or the computation panics. All values in this crate
//! (group orders up to a few times 10^5, inclusion-exclusion sums over at most
//! 2^20 terms) stay many orders of magnitude below the `i64` range.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A polynomial `c_0 + c_1 q + ... + c_d q^d` in canonical form: the last
/// stored coefficient is nonzero, and the zero polynomial has no coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    /// `c * q^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// The q-analog `[n]_q = 1 + q + ... + q^(n-1)`.
    pub fn q_analog(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroQAnalog);
        }
        Ok(Self {
            coeffs: vec![1; n as usize],
        })
    }

    /// `prod_i [e_i + 1]_q`, the rank-generating function of the chain
    /// product `{0..e_1} x ... x {0..e_k}`.
    pub fn q_analog_product(entries: &[u32]) -> Self {
        entries.iter().fold(Self::one(), |acc, &e| {
            acc.mul_ref(&Self {
                coeffs: vec![1; e as usize + 1],
            })
        })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.coeffs.iter().rev().fold(0i64, |acc, &c| {
            acc.checked_mul(q)
                .and_then(|v| v.checked_add(c))
                .expect("polynomial evaluation overflow")
        })
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                self.coeff(i)
                    .checked_add(other.coeff(i))
                    .expect("polynomial coefficient overflow")
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).expect("polynomial coefficient overflow");
                coeffs[i + j] = coeffs[i + j]
                    .checked_add(term)
                    .expect("polynomial coefficient overflow");
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scalar(&self, c: i64) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .map(|&a| a.checked_mul(c).expect("polynomial coefficient overflow"))
                .collect(),
        )
    }

    /// True iff `coeff(i) == coeff(top_degree - i)` for all `0 <= i <= top_degree`.
    pub fn is_palindromic(&self, top_degree: usize) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree().unwrap() > top_degree {
            return Ok(false);
        }
        Ok((0..=top_degree).all(|i| self.coeff(i) == self.coeff(top_degree - i)))
    }

    /// Exact division by `[n]_q`; `None` when the remainder is nonzero.
    pub(crate) fn div_q_analog(&self, n: u32) -> Option<Self> {
        let n = n as usize;
        if n == 0 || self.is_zero() {
            return if self.is_zero() && n > 0 {
                Some(Self::zero())
            } else {
                None
            };
        }
        if self.coeffs.len() < n {
            return None;
        }
        // long division by the monic divisor 1 + q + ... + q^(n-1), top down
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - n + 1;
        let mut quot = vec![0i64; qlen];
        for k in (0..qlen).rev() {
            let c = rem[k + n - 1];
            quot[k] = c;
            for j in 0..n {
                rem[k + j] -= c;
            }
        }
        if rem.iter().all(|&c| c == 0) {
            Some(Self::from_coeffs(quot))
        } else {
            None
        }
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (i, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "q")?,
                (1, m) => write!(f, "{m}*q")?,
                (k, 1) => write!(f, "q^{k}")?,
                (k, m) => write!(f, "{m}*q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Vec::<i64>::deserialize(d).map(Self::from_coeffs)
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: Self) -> Self {
        self.add_ref(&rhs.scalar(-1))
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> Self {
        self.scalar(-1)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.mul_ref(rhs)
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a.add_ref(&b))
    }
}

impl std::iter::Product for IntPolynomial {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| a.mul_ref(&b))
    }
}
