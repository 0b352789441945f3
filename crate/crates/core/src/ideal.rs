//! Monomial ideals stored by their unique minimal generating set.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::{box_points, ExponentVector};

/// A monomial ideal in `dim` variables.
///
/// The generators always form an antichain under divisibility and are kept
/// sorted in descending lexicographic order, so structural equality is ideal
/// equality. The zero ideal has no generators; the unit ideal is generated
/// by the origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    dim: usize,
    generators: Vec<ExponentVector>,
}

/// Length of `R/I`: the number of standard monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn finite(self) -> Option<u64> {
        match self {
            Colength::Finite(n) => Some(n),
            Colength::Infinite => None,
        }
    }
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(n) => write!(f, "{n}"),
            Colength::Infinite => write!(f, "infinite"),
        }
    }
}

/// Keep the divisibility-minimal elements of `gens`.
pub fn minimalize<I>(gens: I, dim: usize) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = ExponentVector>,
{
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut all: Vec<ExponentVector> = Vec::new();
    for g in gens {
        g.check_dim(dim)?;
        all.push(g);
    }
    Ok(MonomialIdeal { dim, generators: minimal_antichain(all) })
}

// Any proper divisor has strictly smaller degree, so a degree-ascending
// scan only needs to compare against already accepted elements.
fn minimal_antichain(mut all: Vec<ExponentVector>) -> Vec<ExponentVector> {
    all.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    all.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(all.len());
    for v in all {
        if !kept.iter().any(|k| k.divides(&v)) {
            kept.push(v);
        }
    }
    kept.sort_unstable_by(|a, b| b.cmp(a));
    kept
}

impl MonomialIdeal {
    pub fn new<I>(dim: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        minimalize(gens, dim)
    }

    /// Build from raw exponent arrays; panics on a length mismatch.
    pub fn from_exponents<const N: usize>(gens: &[[u32; N]]) -> Self {
        minimalize(gens.iter().map(|g| ExponentVector::from(*g)), N)
            .expect("exponent arrays share the array length")
    }

    pub fn zero(dim: usize) -> Self {
        MonomialIdeal { dim, generators: Vec::new() }
    }

    pub fn unit(dim: usize) -> Self {
        MonomialIdeal { dim, generators: vec![ExponentVector::zero(dim)] }
    }

    /// The maximal ideal `(x_1, ..., x_d)`.
    pub fn maximal(dim: usize) -> Self {
        let gens = (0..dim).map(|j| ExponentVector::pure_power(dim, j, 1)).collect();
        MonomialIdeal { dim, generators: minimal_antichain(gens) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].degree() == 0
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim, found: other.dim })
        }
    }

    pub fn contains(&self, m: &ExponentVector) -> Result<bool> {
        m.check_dim(self.dim)?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &ExponentVector) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.same_dim(other)?;
        Ok(self.generators.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.same_dim(other)?;
        Ok(self.generators == other.generators)
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for g in &self.generators {
            for h in &other.generators {
                gens.push(g.add(h));
            }
        }
        Ok(MonomialIdeal { dim: self.dim, generators: minimal_antichain(gens) })
    }

    pub fn power(&self, n: u32) -> Self {
        let mut acc = MonomialIdeal::unit(self.dim);
        for _ in 0..n {
            acc = acc.product(self).expect("same ideal");
        }
        acc
    }

    /// Every power `I^0, ..., I^n`, computed incrementally.
    pub fn powers_up_to(&self, n: u32) -> Vec<Self> {
        let mut out = Vec::with_capacity(n as usize + 1);
        out.push(MonomialIdeal::unit(self.dim));
        for k in 1..=n as usize {
            let next = out[k - 1].product(self).expect("same ideal");
            out.push(next);
        }
        out
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let gens = self.generators.iter().chain(&other.generators).cloned().collect();
        Ok(MonomialIdeal { dim: self.dim, generators: minimal_antichain(gens) })
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let mut gens = Vec::new();
        for g in &self.generators {
            for h in &other.generators {
                gens.push(g.lcm(h));
            }
        }
        Ok(MonomialIdeal { dim: self.dim, generators: minimal_antichain(gens) })
    }

    /// `(I : x^v)`.
    pub fn colon_monomial(&self, v: &ExponentVector) -> Result<Self> {
        v.check_dim(self.dim)?;
        let gens = self.generators.iter().map(|g| g.saturating_sub(v)).collect();
        Ok(MonomialIdeal { dim: self.dim, generators: minimal_antichain(gens) })
    }

    /// `(I : J)`, the intersection of `(I : h)` over generators `h` of `J`.
    /// Colon by the zero ideal is the unit ideal.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let mut acc = MonomialIdeal::unit(self.dim);
        for h in &other.generators {
            acc = acc.intersection(&self.colon_monomial(h)?)?;
        }
        Ok(acc)
    }

    /// Least exponent `p` such that `x_var^p` is a generator.
    pub fn pure_power_exponent(&self, var: usize) -> Option<u32> {
        if self.is_unit() {
            return Some(0);
        }
        self.generators
            .iter()
            .filter(|g| g.pure_power_var() == Some(var))
            .map(|g| g[var])
            .min()
    }

    /// A pure power of every variable lies in the ideal. The unit ideal
    /// counts as m-primary.
    pub fn is_m_primary(&self) -> bool {
        (0..self.dim).all(|j| self.pure_power_exponent(j).is_some())
    }

    /// Componentwise maximum of the generator exponents.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.dim];
        for g in &self.generators {
            for (o, &e) in out.iter_mut().zip(g.entries()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    /// Standard monomials, enumerated inside the pure-power box. `None`
    /// when the ideal is not m-primary.
    pub fn standard_monomials(&self) -> Option<Vec<ExponentVector>> {
        let upper = self.standard_box()?;
        if upper.contains(&0) {
            return Some(Vec::new());
        }
        let upper: Vec<u32> = upper.iter().map(|u| u - 1).collect();
        Some(box_points(&upper).into_iter().filter(|m| !self.contains_unchecked(m)).collect())
    }

    fn standard_box(&self) -> Option<Vec<u32>> {
        (0..self.dim).map(|j| self.pure_power_exponent(j)).collect()
    }

    pub fn colength(&self) -> Colength {
        match self.standard_box() {
            None => Colength::Infinite,
            Some(upper) => {
                if upper.contains(&0) {
                    return Colength::Finite(0);
                }
                let upper: Vec<u32> = upper.iter().map(|u| u - 1).collect();
                let n = box_points(&upper).iter().filter(|m| !self.contains_unchecked(m)).count();
                Colength::Finite(n as u64)
            }
        }
    }

    /// Minimal number of generators.
    pub fn mu(&self) -> usize {
        self.generators.len()
    }

    /// Number of variables that are themselves generators; for monomial
    /// ideals this is the length of `(I + m^2) / m^2`.
    pub fn rsop_count(&self) -> usize {
        self.generators.iter().filter(|g| g.is_variable()).count()
    }

    /// Embedding dimension of `R/I`.
    pub fn v_quotient(&self) -> usize {
        self.dim - self.rsop_count()
    }

    /// Rename variables: coordinate `j` of the result is coordinate `perm[j]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: perm.len() });
        }
        let gens = self
            .generators
            .iter()
            .map(|g| ExponentVector::new(perm.iter().map(|&p| g[p]).collect()))
            .collect();
        Ok(MonomialIdeal { dim: self.dim, generators: minimal_antichain(gens) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev<const N: usize>(v: [u32; N]) -> ExponentVector {
        ExponentVector::from(v)
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = minimalize(vec![ev([2, 0]), ev([3, 0]), ev([0, 1])], 2).unwrap();
        assert_eq!(i.generators(), &[ev([2, 0]), ev([0, 1])]);

        let q = minimalize(vec![ev([7, 0, 0]), ev([0, 3, 0]), ev([0, 0, 2]), ev([14, 0, 0])], 3).unwrap();
        assert_eq!(q, MonomialIdeal::from_exponents(&[[7, 0, 0], [0, 3, 0], [0, 0, 2]]));
        assert_eq!(q.mu(), 3);
    }

    #[test]
    fn minimalize_empty_is_zero_ideal() {
        let z = minimalize(Vec::new(), 3).unwrap();
        assert!(z.is_zero());
        assert_eq!(z, MonomialIdeal::zero(3));
    }

    #[test]
    fn minimalize_rejects_bad_lengths() {
        let err = minimalize(vec![ev([1, 0]), ev([1, 0, 0])], 2).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, found: 3 });
        assert_eq!(minimalize(Vec::new(), 0).unwrap_err(), Error::ZeroDimension);
    }

    #[test]
    fn contains_examples() {
        let q = MonomialIdeal::from_exponents(&[[7, 0, 0], [0, 3, 0], [0, 0, 2]]);
        assert!(q.contains(&ev([7, 1, 0])).unwrap());
        let i = MonomialIdeal::from_exponents(&[[2, 0], [0, 2]]);
        assert!(!i.contains(&ev([1, 1])).unwrap());
        assert!(!MonomialIdeal::zero(2).contains(&ev([5, 5])).unwrap());
        assert!(q.contains(&ev([1, 1])).is_err());
    }

    #[test]
    fn product_examples() {
        let x = MonomialIdeal::from_exponents(&[[1, 0]]);
        let y = MonomialIdeal::from_exponents(&[[0, 1]]);
        assert_eq!(x.product(&y).unwrap(), MonomialIdeal::from_exponents(&[[1, 1]]));
        let i = MonomialIdeal::from_exponents(&[[2, 0], [1, 2], [0, 5]]);
        assert_eq!(i.product(&MonomialIdeal::unit(2)).unwrap(), i);
        assert!(i.product(&MonomialIdeal::unit(3)).is_err());
    }

    #[test]
    fn power_examples() {
        let m = MonomialIdeal::maximal(2);
        assert_eq!(m.power(2), MonomialIdeal::from_exponents(&[[2, 0], [1, 1], [0, 2]]));
        assert_eq!(m.power(0), MonomialIdeal::unit(2));
        // (X^2, XZ^2, Z^4)^2: the nine pairwise sums minimalize to five.
        let j = MonomialIdeal::from_exponents(&[[2, 0], [1, 2], [0, 4]]);
        assert_eq!(
            j.power(2),
            MonomialIdeal::from_exponents(&[[4, 0], [3, 2], [2, 4], [1, 6], [0, 8]])
        );
    }

    #[test]
    fn sum_and_colon_examples() {
        let x2 = MonomialIdeal::from_exponents(&[[2, 0]]);
        let x = MonomialIdeal::from_exponents(&[[1, 0]]);
        assert_eq!(x2.colon(&x).unwrap(), x);
        let i = MonomialIdeal::from_exponents(&[[2, 0], [1, 3]]);
        assert_eq!(i.colon(&MonomialIdeal::unit(2)).unwrap(), i);
        // (X^2,XZ,Z^2):(X) = (X,Z) and (X^2,XZ,Z^2):(Z) = (X,Z).
        let m2 = MonomialIdeal::maximal(2).power(2);
        assert_eq!(m2.colon(&MonomialIdeal::maximal(2)).unwrap(), MonomialIdeal::maximal(2));
        assert_eq!(i.colon(&MonomialIdeal::zero(2)).unwrap(), MonomialIdeal::unit(2));
        assert_eq!(
            x2.sum(&MonomialIdeal::from_exponents(&[[3, 1], [0, 4]])).unwrap(),
            MonomialIdeal::from_exponents(&[[2, 0], [0, 4]])
        );
    }

    #[test]
    fn equals_examples() {
        let a = MonomialIdeal::from_exponents(&[[2], [3]]);
        assert!(a.equals(&MonomialIdeal::from_exponents(&[[2]])).unwrap());
        let x = MonomialIdeal::from_exponents(&[[1, 0]]);
        let y = MonomialIdeal::from_exponents(&[[0, 1]]);
        assert!(!x.equals(&y).unwrap());
    }

    #[test]
    fn m_primary_examples() {
        assert!(MonomialIdeal::from_exponents(&[[7, 0, 0], [0, 3, 0], [0, 0, 2]]).is_m_primary());
        assert!(!MonomialIdeal::from_exponents(&[[2, 0], [1, 1]]).is_m_primary());
        assert!(MonomialIdeal::unit(3).is_m_primary());
        assert!(!MonomialIdeal::zero(3).is_m_primary());
    }

    #[test]
    fn colength_examples() {
        assert_eq!(MonomialIdeal::maximal(2).power(2).colength(), Colength::Finite(3));
        assert_eq!(MonomialIdeal::from_exponents(&[[2, 0], [0, 3]]).colength(), Colength::Finite(6));
        let e351 = MonomialIdeal::from_exponents(&[[3, 0, 0], [2, 1, 0], [1, 2, 0], [0, 3, 0], [0, 0, 1]]);
        assert_eq!(e351.colength(), Colength::Finite(6));
        assert_eq!(MonomialIdeal::from_exponents(&[[2, 0], [1, 1]]).colength(), Colength::Infinite);
        assert_eq!(MonomialIdeal::unit(2).colength(), Colength::Finite(0));
        assert_eq!(MonomialIdeal::zero(2).colength(), Colength::Infinite);
    }

    #[test]
    fn mu_and_rsop_examples() {
        assert_eq!(MonomialIdeal::maximal(3).power(2).mu(), 6);
        assert_eq!(MonomialIdeal::from_exponents(&[[1, 0]]).mu(), 1);
        let e351 = MonomialIdeal::from_exponents(&[[3, 0, 0], [2, 1, 0], [1, 2, 0], [0, 3, 0], [0, 0, 1]]);
        assert_eq!(e351.rsop_count(), 1);
        assert_eq!(e351.v_quotient(), 2);
        let intro = MonomialIdeal::from_exponents(&[
            [7, 0, 0], [0, 3, 0], [0, 0, 2], [5, 1, 0], [4, 0, 1], [3, 2, 0], [2, 1, 1], [0, 2, 1],
        ]);
        assert_eq!(intro.mu(), 8);
        assert_eq!(intro.rsop_count(), 0);
        assert_eq!(intro.v_quotient(), 3);
    }

    #[test]
    fn permute_swaps_coordinates() {
        let i = MonomialIdeal::from_exponents(&[[2, 0], [1, 3]]);
        assert_eq!(i.permute(&[1, 0]).unwrap(), MonomialIdeal::from_exponents(&[[0, 2], [3, 1]]));
    }
}
