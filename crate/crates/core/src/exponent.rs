use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector of a monomial `x_1^{e_1} ... x_d^{e_d}`.
///
/// The derived ordering is lexicographic with the first variable most
/// significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(dim: usize) -> Self {
        ExponentVector(vec![0; dim])
    }

    /// The pure power `x_var^exp`.
    pub fn pure_power(dim: usize, var: usize, exp: u32) -> Self {
        let mut v = vec![0; dim];
        v[var] = exp;
        ExponentVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub(crate) fn check_dim(&self, dim: usize) -> Result<()> {
        if self.0.len() == dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: dim, found: self.0.len() })
        }
    }

    /// Componentwise `self <= other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Monomial product.
    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise `max(self - other, 0)`, the generator of `(x^self) : x^other`.
    pub fn saturating_sub(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    pub fn lcm(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn scale(&self, k: u32) -> Result<Self> {
        self.0
            .iter()
            .map(|&e| e.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    /// `Some(var)` when this is a pure power of a single variable with positive exponent.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (j, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(j);
            }
        }
        found
    }

    pub fn is_variable(&self) -> bool {
        self.degree() == 1
    }
}

impl Index<usize> for ExponentVector {
    type Output = u32;

    fn index(&self, j: usize) -> &u32 {
        &self.0[j]
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Every lattice point of the box `[0, upper_0] x ... x [0, upper_{d-1}]`,
/// in lexicographic order.
pub fn box_points(upper: &[u32]) -> Vec<ExponentVector> {
    let total: usize = upper.iter().map(|&u| u as usize + 1).product();
    let mut out = Vec::with_capacity(total);
    let mut cur = vec![0u32; upper.len()];
    if upper.is_empty() {
        return out;
    }
    loop {
        out.push(ExponentVector(cur.clone()));
        let mut j = upper.len();
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            if cur[j] < upper[j] {
                cur[j] += 1;
                break;
            }
            cur[j] = 0;
        }
    }
}
