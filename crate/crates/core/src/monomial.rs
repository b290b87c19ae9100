//! Monomials over a fixed variable set, stored as exponent vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A monomial `x_1^{a_1} ... x_n^{a_n}`, stored as its exponent vector.
///
/// The variable count `n` is the length of the vector; variable `i`
/// (0-based in the API, printed 1-based) has exponent `exponents[i]`.
/// The unit monomial 1 has all exponents zero. The derived `Ord` is
/// lexicographic on exponent vectors, which is the canonical generator
/// order used throughout.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    /// Builds a monomial from its exponent vector.
    ///
    /// Panics if `exponents` is empty; the ambient ring always has at
    /// least one variable.
    pub fn new(exponents: Vec<u32>) -> Self {
        assert!(!exponents.is_empty(), "a monomial needs at least one variable");
        Self { exponents }
    }

    /// The unit monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        Self::new(vec![0; n])
    }

    /// The variable `x_{i+1}` as a monomial (`i` is the 0-based index).
    pub fn variable(n: usize, i: usize) -> Self {
        assert!(i < n, "variable index {i} out of range for {n} variables");
        let mut exponents = vec![0; n];
        exponents[i] = 1;
        Self { exponents }
    }

    /// `(x_1 x_2 ... x_n)^e`, the degree-`e*n` monomial with full support.
    pub fn full_support_power(n: usize, e: u32) -> Self {
        Self::new(vec![e; n])
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// All exponents at most 1.
    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// 0-based indices of the variables that occur in this monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// True iff `self` divides `other`, i.e. the exponents are
    /// componentwise at most those of `other`.
    ///
    /// Panics if the variable counts differ; mixed-arity inputs are
    /// rejected earlier, at the ideal level.
    pub fn divides(&self, other: &Self) -> bool {
        assert_eq!(self.n(), other.n(), "variable count mismatch");
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    /// Componentwise maximum; the least common multiple.
    pub fn lcm(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "variable count mismatch");
        Self {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Product of two monomials, with overflow reported rather than
    /// wrapped.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, Error> {
        assert_eq!(self.n(), other.n(), "variable count mismatch");
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { exponents })
    }

    /// `self * x_{i+1}`.
    pub fn times_variable(&self, i: usize) -> Result<Self, Error> {
        if i >= self.n() {
            return Err(Error::VariableOutOfRange { index: i, n: self.n() });
        }
        let mut exponents = self.exponents.clone();
        exponents[i] = exponents[i].checked_add(1).ok_or(Error::ExponentOverflow)?;
        Ok(Self { exponents })
    }

    /// Divides out one factor of `x_{i+1}` when present; otherwise
    /// returns the monomial unchanged.
    pub fn divide_by_variable(&self, i: usize) -> Self {
        assert!(i < self.n(), "variable index {i} out of range");
        let mut exponents = self.exponents.clone();
        exponents[i] = exponents[i].saturating_sub(1);
        Self { exponents }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}
