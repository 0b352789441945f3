//! Explicit ideals with known closures and invariants.

use serde_json::json;

use super::report::CheckReport;
use crate::ideal::MonomialIdeal;
use crate::newton::integral_closure;
use crate::normality::{closure_of_power, is_integrally_closed, is_normal, Verdict};
use crate::text::{format_ideal, format_monomial, Variables};

fn xyz() -> Variables {
    Variables::parse("x,y,z").expect("valid names")
}

/// Compare generator sets and describe the difference.
fn expect_ideal(report: &mut CheckReport, label: &str, expected: &MonomialIdeal, got: &MonomialIdeal) {
    if expected == got {
        return;
    }
    let v = xyz();
    let missing: Vec<String> = expected
        .generators()
        .iter()
        .filter(|g| !got.generators().contains(g))
        .map(|g| format_monomial(g, &v))
        .collect();
    let extra: Vec<String> = got
        .generators()
        .iter()
        .filter(|g| !expected.generators().contains(g))
        .map(|g| format_monomial(g, &v))
        .collect();
    report.fail(
        label,
        format_ideal(expected, &v),
        format!("{} (missing: [{}], extra: [{}])", format_ideal(got, &v), missing.join(", "), extra.join(", ")),
    );
}

/// `Q = (X^7, Y^3, Z^2)` and its closure `I`: `I` is integrally closed,
/// `closure(I^2) != I^2`, and `I^2 = QI`.
pub fn verify_intro_example() -> CheckReport {
    let v = xyz();
    let q = MonomialIdeal::from_exponents(&[[7, 0, 0], [0, 3, 0], [0, 0, 2]]);
    let listed = MonomialIdeal::from_exponents(&[
        [7, 0, 0], [0, 3, 0], [0, 0, 2], [5, 1, 0], [4, 0, 1], [3, 2, 0], [2, 1, 1], [0, 2, 1],
    ]);
    let mut report = CheckReport::new("verify_intro_example", json!({ "q": format_ideal(&q, &v) }));

    let i = integral_closure(&q);
    expect_ideal(&mut report, "closure(Q)", &listed, &i);

    report.expect(is_integrally_closed(&i), "is_integrally_closed(I)", "true", "false");

    let i2 = i.power(2);
    let closure2 = closure_of_power(&i, 2);
    let extra: Vec<String> = closure2
        .generators()
        .iter()
        .filter(|g| !i2.contains_unchecked(g))
        .map(|g| format_monomial(g, &v))
        .collect();
    report.expect(
        !extra.is_empty(),
        "closure(I^2) vs I^2",
        "closure(I^2) strictly larger",
        "closure(I^2) = I^2",
    );

    let qi = q.product(&i).expect("same dimension");
    report.expect(i2 == qi, "I^2 vs QI", format_ideal(&i2, &v), format_ideal(&qi, &v));
    report
}

struct Worked {
    label: &'static str,
    seed: MonomialIdeal,
    closure: MonomialIdeal,
    mu: usize,
    v_quotient: Option<usize>,
}

/// The closures of `(X^3, Y^3, Z)`, `(X^4, Y^4, Z)` and `(X^2, Y^2, Z^4)`,
/// with their generator counts, embedding dimensions and normality.
pub fn verify_examples() -> CheckReport {
    let cases = [
        Worked {
            label: "closure(x^3, y^3, z)",
            seed: MonomialIdeal::from_exponents(&[[3, 0, 0], [0, 3, 0], [0, 0, 1]]),
            closure: MonomialIdeal::from_exponents(&[[3, 0, 0], [2, 1, 0], [1, 2, 0], [0, 3, 0], [0, 0, 1]]),
            mu: 5,
            v_quotient: Some(2),
        },
        Worked {
            label: "closure(x^4, y^4, z)",
            seed: MonomialIdeal::from_exponents(&[[4, 0, 0], [0, 4, 0], [0, 0, 1]]),
            closure: MonomialIdeal::from_exponents(&[
                [4, 0, 0], [3, 1, 0], [2, 2, 0], [1, 3, 0], [0, 4, 0], [0, 0, 1],
            ]),
            mu: 6,
            v_quotient: Some(2),
        },
        Worked {
            label: "closure(x^2, y^2, z^4)",
            seed: MonomialIdeal::from_exponents(&[[2, 0, 0], [0, 2, 0], [0, 0, 4]]),
            closure: MonomialIdeal::from_exponents(&[
                [2, 0, 0], [1, 1, 0], [0, 2, 0], [0, 0, 4], [1, 0, 2], [0, 1, 2],
            ]),
            mu: 6,
            v_quotient: None,
        },
    ];

    let mut report = CheckReport::new("verify_examples", json!({ "cases": cases.len() }));
    for case in &cases {
        let got = integral_closure(&case.seed);
        expect_ideal(&mut report, case.label, &case.closure, &got);
        report.expect(got.mu() == case.mu, format!("mu {}", case.label), case.mu.to_string(), got.mu().to_string());
        report.expect(got.is_m_primary(), format!("m-primary {}", case.label), "true", "false");
        if let Some(v) = case.v_quotient {
            report.expect(
                got.v_quotient() == v,
                format!("v {}", case.label),
                v.to_string(),
                got.v_quotient().to_string(),
            );
        }
        let verdict = is_normal(&got, None).verdict;
        report.expect(
            verdict == Verdict::Normal,
            format!("normality {}", case.label),
            "normal",
            verdict.to_string(),
        );
    }
    report
}
