use monideal::exponent::box_points;
use monideal::newton::{decide, integral_closure_with, HullDecision};
use monideal::normality::{closure_of_power_direct, closure_of_power_with, is_power_closed};
use monideal::verify::{corpus_ideal, CorpusSpec};
use monideal::{
    format_ideal, integral_closure, is_integrally_closed, is_normal, minimalize, np_membership, parse_ideal,
    valuation_membership, Exec, ExponentVector, MonomialIdeal, Variables, Verdict, WeightVector,
};
use proptest::prelude::*;

fn vector(dim: usize, max: u32) -> impl Strategy<Value = ExponentVector> {
    prop::collection::vec(0..=max, dim).prop_map(ExponentVector::new)
}

fn ideal_in(dim: usize, max_gens: usize, max: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(vector(dim, max), 1..=max_gens).prop_map(move |g| MonomialIdeal::new(dim, g).unwrap())
}

fn small_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=3).prop_flat_map(|d| ideal_in(d, 5, 4))
}

fn ideal_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1usize..=3).prop_flat_map(|d| (ideal_in(d, 4, 3), ideal_in(d, 4, 3)))
}

fn ideal_and_point() -> impl Strategy<Value = (MonomialIdeal, ExponentVector)> {
    (1usize..=3).prop_flat_map(|d| (ideal_in(d, 5, 4), vector(d, 5)))
}

/// Forces a pure power of every variable so the ideal is m-primary.
fn m_primary(dim: usize, max: u32) -> impl Strategy<Value = MonomialIdeal> {
    (prop::collection::vec(vector(dim, max), 0..=3), prop::collection::vec(1..=max, dim)).prop_map(
        move |(mut gens, powers)| {
            for (j, p) in powers.into_iter().enumerate() {
                gens.push(ExponentVector::pure_power(dim, j, p));
            }
            MonomialIdeal::new(dim, gens).unwrap()
        },
    )
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn minimalize_is_idempotent(i in small_ideal()) {
        let again = minimalize(i.generators().to_vec(), i.dim()).unwrap();
        prop_assert_eq!(&again, &i);
        for (a, g) in i.generators().iter().enumerate() {
            for (b, h) in i.generators().iter().enumerate() {
                prop_assert!(a == b || !g.divides(h));
            }
        }
    }

    #[test]
    fn product_commutes((i, j) in ideal_pair()) {
        prop_assert_eq!(i.product(&j).unwrap(), j.product(&i).unwrap());
    }

    #[test]
    fn powers_add(i in (1usize..=3).prop_flat_map(|d| ideal_in(d, 3, 2)), a in 0u32..=4, b in 0u32..=4) {
        prop_assert_eq!(i.power(a + b), i.power(a).product(&i.power(b)).unwrap());
    }

    #[test]
    fn membership_is_upward_closed((i, m) in ideal_and_point(), bump in prop::collection::vec(0u32..3, 3)) {
        let up = ExponentVector::new(m.entries().iter().zip(&bump).map(|(a, b)| a + b).collect());
        if i.contains(&m).unwrap() {
            prop_assert!(i.contains(&up).unwrap());
        }
    }

    #[test]
    fn colength_finite_iff_m_primary(i in small_ideal()) {
        prop_assert_eq!(i.colength().finite().is_some(), i.is_m_primary());
    }

    #[test]
    fn colon_product_adjunction((i, j) in ideal_pair()) {
        let back = i.colon(&j).unwrap().product(&j).unwrap();
        prop_assert!(back.is_subset(&i).unwrap());
    }

    #[test]
    fn text_round_trip(i in small_ideal()) {
        let vars = Variables::standard(i.dim());
        prop_assert_eq!(parse_ideal(&format_ideal(&i, &vars), &vars).unwrap(), i);
    }

    #[test]
    fn closure_contains_and_is_idempotent(i in small_ideal()) {
        let c = integral_closure(&i);
        prop_assert!(i.is_subset(&c).unwrap());
        prop_assert_eq!(integral_closure(&c), c.clone());
        prop_assert!(is_integrally_closed(&c));
        prop_assert_eq!(is_integrally_closed(&i), c == i);
    }

    #[test]
    fn closure_is_monotone((i, j) in ideal_pair()) {
        let sum = i.sum(&j).unwrap();
        prop_assert!(integral_closure(&i).is_subset(&integral_closure(&sum)).unwrap());
    }

    #[test]
    fn product_of_closures_inside_closure_of_product((i, j) in ideal_pair()) {
        let lhs = integral_closure(&i).product(&integral_closure(&j)).unwrap();
        let rhs = integral_closure(&i.product(&j).unwrap());
        prop_assert!(lhs.is_subset(&rhs).unwrap());
    }

    #[test]
    fn decisions_carry_valid_certificates((i, m) in ideal_and_point()) {
        match decide(&i, &m).unwrap().unwrap() {
            HullDecision::Inside(cert) => {
                prop_assert!(cert.verify(&i, &m));
                if cert.rho <= 6 {
                    prop_assert!(i.power(cert.rho as u32).contains(&m.scale(cert.rho as u32).unwrap()).unwrap());
                }
            }
            HullDecision::Outside(sep) => {
                prop_assert!(sep.verify(&i, &m));
                // the separating valuation rules out every ρ-th power at once
                for rho in 1..=4u32 {
                    prop_assert!(!i.power(rho).contains(&m.scale(rho).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn valuation_test_is_necessary((i, m) in ideal_and_point(), ws in prop::collection::vec(prop::collection::vec(0u64..5, 3), 1..4)) {
        let sample: Vec<WeightVector> = ws.iter().map(|w| WeightVector::from_integers(&w[..i.dim()])).collect();
        if np_membership(&i, &m).unwrap() {
            prop_assert!(valuation_membership(&i, &m, &sample).unwrap());
        }
    }

    #[test]
    fn zariski_in_two_variables(i in m_primary(2, 5), j in m_primary(2, 5)) {
        let (ci, cj) = (integral_closure(&i), integral_closure(&j));
        prop_assert!(is_integrally_closed(&ci.product(&cj).unwrap()));
    }

    #[test]
    fn closed_implies_normal_in_two_variables(i in m_primary(2, 6)) {
        let c = integral_closure(&i);
        prop_assert_eq!(is_normal(&c, None).verdict, Verdict::Normal);
        for n in 2..=4 {
            prop_assert!(is_power_closed(&c, n));
        }
    }

    #[test]
    fn normality_is_stable_under_permutation(i in m_primary(3, 3), perm in Just(vec![0usize, 1, 2]).prop_shuffle()) {
        let c = integral_closure(&i);
        let p = c.permute(&perm).unwrap();
        prop_assert_eq!(is_normal(&c, None).verdict, is_normal(&p, None).verdict);
    }
}

#[test]
fn colength_of_maximal_powers_counts_low_degree_monomials() {
    for d in 1..=4usize {
        for k in 1..=5u32 {
            let brute = box_points(&vec![k; d]).iter().filter(|m| m.degree() < k as u64).count() as u64;
            assert_eq!(brute, binomial(k as u64 - 1 + d as u64, d as u64));
            let mk = MonomialIdeal::maximal(d).power(k);
            assert_eq!(mk.colength().finite(), Some(brute), "d={d} k={k}");
        }
    }
}

#[test]
fn scaled_and_direct_power_closures_agree_on_corpus() {
    for dim in [2usize, 3] {
        let spec = CorpusSpec::standard(dim, 6, 11);
        for t in 0..spec.trials as u64 {
            let i = corpus_ideal(&spec, t);
            for n in 1..=4u32 {
                if dim == 3 && n > 3 {
                    continue;
                }
                let scaled = closure_of_power_with(&i, n, Exec::default());
                let direct = closure_of_power_direct(&i, n, Exec::default());
                assert_eq!(scaled, direct, "dim {dim} trial {t} n {n}");
                assert_eq!(is_power_closed(&i, n), scaled == i.power(n));
            }
        }
    }
}

#[test]
fn normal_verdicts_survive_deeper_powers() {
    // verdict normal at the certifying bound, then spot-check up to 2(d-1)
    let spec = CorpusSpec::standard(3, 16, 5);
    let mut normal = 0;
    for t in 0..spec.trials as u64 {
        let i = corpus_ideal(&spec, t);
        if is_normal(&i, None).verdict == Verdict::Normal {
            normal += 1;
            for n in 1..=4 {
                assert!(is_power_closed(&i, n), "trial {t} power {n}");
            }
        }
    }
    assert!(normal > 0);
}

#[test]
fn sequential_and_parallel_agree() {
    let spec = CorpusSpec::standard(3, 4, 3);
    for t in 0..4 {
        let i = corpus_ideal(&spec, t);
        let sq = i.power(2);
        assert_eq!(integral_closure_with(&sq, Exec::Sequential), integral_closure_with(&sq, Exec::Parallel));
    }
}
