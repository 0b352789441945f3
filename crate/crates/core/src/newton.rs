//! Integral closure of monomial ideals via the Newton polyhedron
//! `NP(I) = conv(exponents of I) + R^d_{>=0}`.
//!
//! A monomial `x^m` lies in the closure of `I^n` exactly when `m / n` lies in
//! `NP(I)`, i.e. when there are rationals `λ_i >= 0` with `Σ λ_i = n` and
//! `Σ λ_i g_i <= m`. Each decision is made by the exact kernel in [`crate::lp`]
//! and returns a checked certificate either way: a [`ClosureCertificate`]
//! (clearing denominators gives `(x^m)^ρ ∈ I^{ρn}`) or a [`Separation`]
//! (a monomial valuation that `x^m` fails).
//!
//! # Search box
//!
//! Let `M_j = max_i g_i[j]`. Every divisibility-minimal lattice point of
//! `NP(I)` satisfies `m_j <= M_j`: write `m = c + r` with `c` in the convex
//! hull of the generators and `r >= 0`; since `c_j <= M_j`, `m_j > M_j`
//! forces `r_j >= 1`, so `m - e_j` is still in `NP(I)`. The same argument
//! with `n M_j` bounds the minimal generators of `closure(I^n)`, and the
//! minimal elements of `closure(I^n) \ I^n`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::exponent::{box_points, ExponentVector};
use crate::ideal::MonomialIdeal;
use crate::lp::{Feasibility, System};

/// Integral-dependence witness: `ρ·m = Σ count_i·g_i + slack` with
/// `Σ count_i = ρ·power`, so `(x^m)^ρ ∈ I^{ρ·power}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureCertificate {
    pub rho: u64,
    /// The `n` in `closure(I^n)`; 1 for plain closure membership.
    pub power: u32,
    /// Generator index (into `I.generators()`) to multiplicity. Zero counts are omitted.
    pub factor_counts: BTreeMap<usize, u64>,
    pub slack: ExponentVector,
}

impl ClosureCertificate {
    /// Check both defining identities exactly against `ideal` and `m`.
    pub fn verify(&self, ideal: &MonomialIdeal, m: &ExponentVector) -> bool {
        if self.rho == 0 || m.dim() != ideal.dim() || self.slack.dim() != ideal.dim() {
            return false;
        }
        let total: u128 = self.factor_counts.values().map(|&c| c as u128).sum();
        if total != self.rho as u128 * self.power as u128 {
            return false;
        }
        let gens = ideal.generators();
        if self.factor_counts.keys().any(|&i| i >= gens.len()) {
            return false;
        }
        (0..ideal.dim()).all(|j| {
            let lhs = self.rho as u128 * m[j] as u128;
            let rhs: u128 = self
                .factor_counts
                .iter()
                .map(|(&i, &c)| c as u128 * gens[i][j] as u128)
                .sum::<u128>()
                + self.slack[j] as u128;
            lhs == rhs
        })
    }

    /// The monomial `Π g_i^{count_i}`, an element of `I^{ρ·power}` dividing `ρ·m`.
    pub fn product_monomial(&self, ideal: &MonomialIdeal) -> ExponentVector {
        let gens = ideal.generators();
        let mut acc = vec![0u32; ideal.dim()];
        for (&i, &c) in &self.factor_counts {
            for (a, &g) in acc.iter_mut().zip(gens[i].entries()) {
                *a += g * c as u32;
            }
        }
        ExponentVector::new(acc)
    }
}

/// Non-negative rational weights on the variables: the monomial valuation
/// `x^m -> <w, m>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<BigRational>);

impl WeightVector {
    pub fn new(weights: Vec<BigRational>) -> Result<Self> {
        if weights.iter().any(|w| w.is_negative()) {
            return Err(Error::NegativeWeight);
        }
        Ok(WeightVector(weights))
    }

    pub fn from_integers(weights: &[u64]) -> Self {
        WeightVector(weights.iter().map(|&w| BigRational::from_integer(BigInt::from(w))).collect())
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, m: &ExponentVector) -> BigRational {
        self.0.iter().zip(m.entries()).map(|(w, &e)| w * BigInt::from(e)).sum()
    }
}

/// A monomial valuation separating `m / power` from `NP(I)`:
/// `<w, g> >= threshold` for every generator while `<w, m> < power·threshold`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    pub weight: WeightVector,
    pub threshold: BigRational,
    pub power: u32,
}

impl Separation {
    pub fn verify(&self, ideal: &MonomialIdeal, m: &ExponentVector) -> bool {
        let n = BigRational::from_integer(BigInt::from(self.power));
        self.weight.dim() == ideal.dim()
            && !self.weight.0.iter().any(Signed::is_negative)
            && ideal.generators().iter().all(|g| self.weight.eval(g) >= self.threshold)
            && self.weight.eval(m) < n * &self.threshold
    }
}

/// Outcome of a Newton-polyhedron membership query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HullDecision {
    Inside(ClosureCertificate),
    Outside(Separation),
}

impl HullDecision {
    pub fn is_inside(&self) -> bool {
        matches!(self, HullDecision::Inside(_))
    }

    /// Least common denominator of the rational weights found by the
    /// feasibility procedure (`ρ` of the certificate), if inside.
    pub fn denominator(&self) -> Option<u64> {
        match self {
            HullDecision::Inside(c) => Some(c.rho),
            HullDecision::Outside(_) => None,
        }
    }
}

fn integer(v: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Decide whether `m ∈ closure(I^power)`; `power >= 1`. Panics on the zero ideal
/// or a dimension mismatch; the public wrappers check both.
pub(crate) fn decide_unchecked(ideal: &MonomialIdeal, power: u32, m: &ExponentVector) -> HullDecision {
    let gens = ideal.generators();
    let d = ideal.dim();
    assert!(!gens.is_empty() && power >= 1);

    if power == 1 {
        if let Some(i) = gens.iter().position(|g| g.divides(m)) {
            return HullDecision::Inside(ClosureCertificate {
                rho: 1,
                power: 1,
                factor_counts: BTreeMap::from([(i, 1)]),
                slack: m.saturating_sub(&gens[i]),
            });
        }
    }

    // Columns: λ_0..λ_{k-1}, then one slack per coordinate.
    let k = gens.len();
    let mut rows = Vec::with_capacity(d + 1);
    for j in 0..d {
        let mut row: Vec<BigRational> = gens.iter().map(|g| integer(g[j])).collect();
        row.extend((0..d).map(|s| if s == j { BigRational::one() } else { BigRational::zero() }));
        rows.push(row);
    }
    let mut sum_row = vec![BigRational::one(); k];
    sum_row.extend(std::iter::repeat_n(BigRational::zero(), d));
    rows.push(sum_row);
    let mut rhs: Vec<BigRational> = m.entries().iter().map(|&e| integer(e)).collect();
    rhs.push(integer(power));

    let system = System::new(rows, rhs);
    match system.solve() {
        Feasibility::Feasible(x) => {
            let cert = certificate_from_weights(ideal, power, m, &x[..k]);
            debug_assert!(cert.verify(ideal, m));
            HullDecision::Inside(cert)
        }
        Feasibility::Infeasible(y) => {
            let weight = WeightVector(y[..d].to_vec());
            let sep = Separation { weight, threshold: -y[d].clone(), power };
            debug_assert!(sep.verify(ideal, m));
            HullDecision::Outside(sep)
        }
    }
}

fn certificate_from_weights(
    ideal: &MonomialIdeal,
    power: u32,
    m: &ExponentVector,
    lambda: &[BigRational],
) -> ClosureCertificate {
    let rho = lambda.iter().fold(BigInt::one(), |acc, l| acc.lcm(l.denom()));
    let mut factor_counts = BTreeMap::new();
    for (i, l) in lambda.iter().enumerate() {
        if !l.is_zero() {
            let c = (l * BigRational::from_integer(rho.clone())).to_integer();
            factor_counts.insert(i, c.to_u64().expect("multiplicity fits in u64"));
        }
    }
    let rho = rho.to_u64().expect("denominator fits in u64");
    let gens = ideal.generators();
    let slack = (0..ideal.dim())
        .map(|j| {
            let used: u64 = factor_counts.iter().map(|(&i, &c)| c * gens[i][j] as u64).sum();
            u32::try_from(rho * m[j] as u64 - used).expect("slack fits in u32")
        })
        .collect();
    ClosureCertificate { rho, power, factor_counts, slack: ExponentVector::new(slack) }
}

fn check_query(ideal: &MonomialIdeal, m: &ExponentVector) -> Result<()> {
    m.check_dim(ideal.dim())
}

/// Full decision with certificate; `None` for the zero ideal.
pub fn decide(ideal: &MonomialIdeal, m: &ExponentVector) -> Result<Option<HullDecision>> {
    decide_power(ideal, 1, m)
}

/// Decide `m ∈ closure(I^power)` against the generators of `I`.
pub fn decide_power(ideal: &MonomialIdeal, power: u32, m: &ExponentVector) -> Result<Option<HullDecision>> {
    check_query(ideal, m)?;
    if ideal.is_zero() {
        return Ok(None);
    }
    if power == 0 {
        // closure(I^0) is the unit ideal.
        return Ok(Some(HullDecision::Inside(ClosureCertificate {
            rho: 1,
            power: 0,
            factor_counts: BTreeMap::new(),
            slack: m.clone(),
        })));
    }
    Ok(Some(decide_unchecked(ideal, power, m)))
}

/// `x^m ∈ closure(I)`.
pub fn np_membership(ideal: &MonomialIdeal, m: &ExponentVector) -> Result<bool> {
    Ok(decide(ideal, m)?.is_some_and(|d| d.is_inside()))
}

pub fn certificate(ideal: &MonomialIdeal, m: &ExponentVector) -> Result<Option<ClosureCertificate>> {
    Ok(match decide(ideal, m)? {
        Some(HullDecision::Inside(c)) => Some(c),
        _ => None,
    })
}

/// Minimal generators of `closure(I)`.
pub fn integral_closure(ideal: &MonomialIdeal) -> MonomialIdeal {
    integral_closure_with(ideal, Exec::default())
}

pub fn integral_closure_with(ideal: &MonomialIdeal, exec: Exec) -> MonomialIdeal {
    closure_scan(ideal, ideal, 1, exec)
}

/// Minimal generators of `closure(I^n)`, testing the scaled constraint
/// `Σ λ_i = n` against the generators of `I`. `I^n` itself is passed in so
/// points already in it skip the feasibility test.
pub(crate) fn closure_scan(base: &MonomialIdeal, power_ideal: &MonomialIdeal, n: u32, exec: Exec) -> MonomialIdeal {
    if base.is_zero() {
        return MonomialIdeal::zero(base.dim());
    }
    let upper: Vec<u32> = power_ideal.max_exponents();
    let candidates: Vec<ExponentVector> =
        box_points(&upper).into_iter().filter(|p| !power_ideal.contains_unchecked(p)).collect();
    let found = exec.filter(candidates, |p| decide_unchecked(base, n, p).is_inside());
    MonomialIdeal::new(base.dim(), power_ideal.generators().iter().cloned().chain(found))
        .expect("dimensions agree")
}

/// `min_g <w, g>` over the generators.
pub fn ord_w(ideal: &MonomialIdeal, w: &WeightVector) -> Result<BigRational> {
    if w.dim() != ideal.dim() {
        return Err(Error::DimensionMismatch { expected: ideal.dim(), found: w.dim() });
    }
    ideal.generators().iter().map(|g| w.eval(g)).min().ok_or(Error::UndefinedOrder)
}

/// `<w, m> >= ord_w(I)` for every weight in `sample`. Necessary for
/// `np_membership`; sufficient when the sample contains every facet normal.
/// The zero ideal passes vacuously only for an empty sample.
pub fn valuation_membership(ideal: &MonomialIdeal, m: &ExponentVector, sample: &[WeightVector]) -> Result<bool> {
    check_query(ideal, m)?;
    for w in sample {
        match ord_w(ideal, w) {
            Ok(ord) => {
                if w.eval(m) < ord {
                    return Ok(false);
                }
            }
            Err(Error::UndefinedOrder) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}
