//! Integral closedness and normality of monomial ideals.
//!
//! Normality is certified with the Reid–Roberts–Vitulli bound: in `d`
//! variables, if `I, I^2, ..., I^{d-1}` are integrally closed then every
//! power is.
//!
//! Closedness of `I^n` is decided from the staircase corners only. `NP` is
//! closed upward, so if any lattice point of the search box lies in
//! `closure(I^n) \ I^n`, stepping up one variable at a time (staying outside
//! `I^n` and inside the box) reaches a corner that does too.

use serde::{Deserialize, Serialize};

use crate::exec::Exec;
use crate::exponent::{box_points, ExponentVector};
use crate::ideal::MonomialIdeal;
use crate::newton::{closure_scan, decide_unchecked, integral_closure_with};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Normal,
    NotNormal,
    Undetermined,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Normal => "normal",
            Verdict::NotNormal => "not_normal",
            Verdict::Undetermined => "undetermined",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSource {
    Rrv,
    User,
}

/// Set when the verdict comes from a convention rather than a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Degenerate {
    ZeroIdeal,
    UnitIdeal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerCheck {
    pub n: u32,
    pub is_closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub power: u32,
    pub witness: ExponentVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalityReport {
    pub ideal: MonomialIdeal,
    pub checked_powers: Vec<PowerCheck>,
    pub verdict: Verdict,
    pub first_failure: Option<Failure>,
    pub bound_used: u32,
    pub bound_source: BoundSource,
    pub degenerate: Option<Degenerate>,
}

/// Number of powers whose closedness certifies normality in `dim` variables.
pub fn rrv_bound(dim: usize) -> u32 {
    (dim.saturating_sub(1)).max(1) as u32
}

/// `I = closure(I)`. The zero ideal counts as closed.
pub fn is_integrally_closed(ideal: &MonomialIdeal) -> bool {
    is_integrally_closed_with(ideal, Exec::default())
}

pub fn is_integrally_closed_with(ideal: &MonomialIdeal, exec: Exec) -> bool {
    ideal.is_zero() || power_is_closed(ideal, 1, ideal, exec)
}

/// `closure(I^n)` via the scaled constraint `Σ λ_i = n` on the generators of `I`.
pub fn closure_of_power(ideal: &MonomialIdeal, n: u32) -> MonomialIdeal {
    closure_of_power_with(ideal, n, Exec::default())
}

pub fn closure_of_power_with(ideal: &MonomialIdeal, n: u32, exec: Exec) -> MonomialIdeal {
    if n == 0 {
        return MonomialIdeal::unit(ideal.dim());
    }
    closure_scan(ideal, &ideal.power(n), n, exec)
}

/// `closure(I^n)` computed as `integral_closure(power(I, n))`.
pub fn closure_of_power_direct(ideal: &MonomialIdeal, n: u32, exec: Exec) -> MonomialIdeal {
    integral_closure_with(&ideal.power(n), exec)
}

fn staircase_corners(power_ideal: &MonomialIdeal) -> Vec<ExponentVector> {
    let upper = power_ideal.max_exponents();
    box_points(&upper)
        .into_iter()
        .filter(|p| !power_ideal.contains_unchecked(p))
        .filter(|p| {
            (0..p.dim()).all(|j| {
                if p[j] == upper[j] {
                    return true;
                }
                let mut up = p.entries().to_vec();
                up[j] += 1;
                power_ideal.contains_unchecked(&ExponentVector::new(up))
            })
        })
        .collect()
}

/// `closure(I^n) = I^n`, with `power_ideal = I^n` precomputed.
fn power_is_closed(base: &MonomialIdeal, n: u32, power_ideal: &MonomialIdeal, exec: Exec) -> bool {
    if base.is_zero() || base.is_unit() {
        return true;
    }
    let corners = staircase_corners(power_ideal);
    !exec.any(&corners, |p| decide_unchecked(base, n, p).is_inside())
}

/// `closure(I^n) = I^n`.
pub fn is_power_closed(ideal: &MonomialIdeal, n: u32) -> bool {
    n == 0 || power_is_closed(ideal, n, &ideal.power(n), Exec::default())
}

/// Lexicographically least element of `closure(I^n) \ I^n`; it is also
/// divisibility-minimal there.
pub fn first_failure_witness(ideal: &MonomialIdeal, n: u32) -> Option<ExponentVector> {
    first_failure_witness_with(ideal, n, Exec::default())
}

pub fn first_failure_witness_with(ideal: &MonomialIdeal, n: u32, exec: Exec) -> Option<ExponentVector> {
    if n == 0 || ideal.is_zero() {
        return None;
    }
    witness_in(ideal, n, &ideal.power(n), exec)
}

fn witness_in(base: &MonomialIdeal, n: u32, power_ideal: &MonomialIdeal, exec: Exec) -> Option<ExponentVector> {
    let candidates: Vec<ExponentVector> = box_points(&power_ideal.max_exponents())
        .into_iter()
        .filter(|p| !power_ideal.contains_unchecked(p))
        .collect();
    exec.find_first(&candidates, |p| decide_unchecked(base, n, p).is_inside()).cloned()
}

/// Check `closure(I^n) = I^n` for `n = 1..bound`.
///
/// Without `max_power` the bound is `max(1, d - 1)`, which certifies
/// normality. A smaller user bound that passes gives `Undetermined`; a user
/// bound at or above the certifying one is reported with source `Rrv`.
pub fn is_normal(ideal: &MonomialIdeal, max_power: Option<u32>) -> NormalityReport {
    is_normal_with(ideal, max_power, Exec::default())
}

pub fn is_normal_with(ideal: &MonomialIdeal, max_power: Option<u32>, exec: Exec) -> NormalityReport {
    let rrv = rrv_bound(ideal.dim());
    let bound = max_power.unwrap_or(rrv).max(1);
    let bound_source = if bound < rrv { BoundSource::User } else { BoundSource::Rrv };

    let degenerate = if ideal.is_zero() {
        Some(Degenerate::ZeroIdeal)
    } else if ideal.is_unit() {
        Some(Degenerate::UnitIdeal)
    } else {
        None
    };
    if degenerate.is_some() {
        return NormalityReport {
            ideal: ideal.clone(),
            checked_powers: Vec::new(),
            verdict: Verdict::Normal,
            first_failure: None,
            bound_used: bound,
            bound_source: BoundSource::Rrv,
            degenerate,
        };
    }

    let powers = ideal.powers_up_to(bound);
    let ns: Vec<u32> = (1..=bound).collect();
    let closed = exec.map(&ns, |&n| power_is_closed(ideal, n, &powers[n as usize], exec));
    let checked_powers: Vec<PowerCheck> =
        ns.iter().zip(&closed).map(|(&n, &is_closed)| PowerCheck { n, is_closed }).collect();

    let first_failure = checked_powers.iter().find(|c| !c.is_closed).map(|c| {
        let witness = witness_in(ideal, c.n, &powers[c.n as usize], exec)
            .expect("an unclosed power has a witness in the search box");
        Failure { power: c.n, witness }
    });
    let verdict = match (&first_failure, bound_source) {
        (Some(_), _) => Verdict::NotNormal,
        (None, BoundSource::Rrv) => Verdict::Normal,
        (None, BoundSource::User) => Verdict::Undetermined,
    };
    NormalityReport {
        ideal: ideal.clone(),
        checked_powers,
        verdict,
        first_failure,
        bound_used: bound,
        bound_source,
        degenerate: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::{integral_closure, np_membership};

    fn ev<const N: usize>(v: [u32; N]) -> ExponentVector {
        ExponentVector::from(v)
    }

    fn intro_i() -> MonomialIdeal {
        MonomialIdeal::from_exponents(&[
            [7, 0, 0], [0, 3, 0], [0, 0, 2], [5, 1, 0], [4, 0, 1], [3, 2, 0], [2, 1, 1], [0, 2, 1],
        ])
    }

    fn thm_ideal(a: u32, b: u32, c: u32) -> MonomialIdeal {
        MonomialIdeal::from_exponents(&[[2, 0, 0], [1, 1, 0], [0, 2, 0], [0, 0, c], [1, 0, a], [0, 1, b]])
    }

    #[test]
    fn closedness_examples() {
        assert!(is_integrally_closed(&MonomialIdeal::maximal(2).power(2)));
        assert!(!is_integrally_closed(&MonomialIdeal::from_exponents(&[[2, 0], [0, 2]])));
        assert!(is_integrally_closed(&intro_i()));
        assert!(is_integrally_closed(&MonomialIdeal::zero(2)));
    }

    #[test]
    fn closure_of_power_examples() {
        let i = intro_i();
        assert_eq!(closure_of_power(&i, 1), integral_closure(&i));
        assert_ne!(closure_of_power(&i, 2), i.power(2));
        let j = MonomialIdeal::from_exponents(&[[2, 0], [1, 2], [0, 4]]);
        assert_eq!(closure_of_power(&j, 2), j.power(2));
        assert_eq!(closure_of_power_direct(&j, 2, Exec::Sequential), j.power(2));
        assert_eq!(closure_of_power(&i, 0), MonomialIdeal::unit(3));
    }

    #[test]
    fn normality_examples() {
        let j = MonomialIdeal::from_exponents(&[[2, 0], [1, 2], [0, 4]]);
        let r = is_normal(&j, None);
        assert_eq!(r.verdict, Verdict::Normal);
        assert_eq!(r.bound_used, 1);
        assert_eq!(r.bound_source, BoundSource::Rrv);

        let r = is_normal(&intro_i(), None);
        assert_eq!(r.verdict, Verdict::NotNormal);
        let fail = r.first_failure.expect("witness");
        assert_eq!(fail.power, 2);
        let i2 = intro_i().power(2);
        assert!(!i2.contains(&fail.witness).unwrap());
        assert!(np_membership(&i2, &fail.witness).unwrap());

        assert_eq!(is_normal(&MonomialIdeal::maximal(3), None).verdict, Verdict::Normal);
    }

    #[test]
    fn user_bounds() {
        let m = MonomialIdeal::maximal(4);
        let r = is_normal(&m, Some(2));
        assert_eq!(r.verdict, Verdict::Undetermined);
        assert_eq!(r.bound_source, BoundSource::User);
        assert_eq!(r.checked_powers.len(), 2);
        let r = is_normal(&m, Some(5));
        assert_eq!(r.verdict, Verdict::Normal);
        assert_eq!(r.bound_source, BoundSource::Rrv);
        assert_eq!(r.bound_used, 5);
        // a failure found under a user bound is still a failure
        let r = is_normal(&intro_i(), Some(2));
        assert_eq!(r.verdict, Verdict::NotNormal);
    }

    #[test]
    fn degenerate_ideals_are_normal_by_convention() {
        let r = is_normal(&MonomialIdeal::zero(3), None);
        assert_eq!((r.verdict, r.degenerate), (Verdict::Normal, Some(Degenerate::ZeroIdeal)));
        let r = is_normal(&MonomialIdeal::unit(3), None);
        assert_eq!((r.verdict, r.degenerate), (Verdict::Normal, Some(Degenerate::UnitIdeal)));
    }

    #[test]
    fn witness_examples() {
        assert_eq!(first_failure_witness(&thm_ideal(1, 3, 4), 1), Some(ev([0, 1, 2])));
        assert_eq!(first_failure_witness(&intro_i(), 1), None);
        let w = first_failure_witness(&intro_i(), 2).expect("I^2 is not closed");
        assert!(!intro_i().power(2).contains(&w).unwrap());
    }

    #[test]
    fn witness_is_lex_least_by_brute_force() {
        let i = intro_i();
        let i2 = i.power(2);
        let closure = integral_closure(&i2);
        let brute = box_points(&i2.max_exponents())
            .into_iter()
            .find(|p| closure.contains(p).unwrap() && !i2.contains(p).unwrap());
        assert_eq!(first_failure_witness(&i, 2), brute);
    }
}
