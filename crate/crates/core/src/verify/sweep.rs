//! Grid sweeps over the two monomial families
//! `J = (X^2, XZ^a, Z^c)` in `k[X, Z]` and
//! `I = (X^2, XY, Y^2, Z^c, XZ^a, YZ^b)` in `k[X, Y, Z]`.

use std::io::Write;

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::report::CheckReport;
use crate::exec::Exec;
use crate::exponent::ExponentVector;
use crate::ideal::MonomialIdeal;
use crate::normality::{is_integrally_closed_with, is_normal_with, Verdict};
use crate::text::{format_monomial, Variables};

/// Column order of the CSV output.
pub const CSV_HEADER: [&str; 9] = ["a", "b", "c", "is_closed", "bound_holds", "normal_verdict", "witness", "mu", "colength"];

/// `⌈c/2⌉`.
pub fn ceil_half(c: u32) -> u32 {
    c.div_ceil(2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepFamily {
    /// `(X^2, XZ^a, Z^c)`; records have no `b`.
    LemmaDim2,
    /// `(X^2, XY, Y^2, Z^c, XZ^a, YZ^b)`.
    TheoremDim3,
}

impl SweepFamily {
    pub fn variables(self) -> Variables {
        match self {
            SweepFamily::LemmaDim2 => Variables::parse("x,z").expect("valid names"),
            SweepFamily::TheoremDim3 => Variables::parse("x,y,z").expect("valid names"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub a: u32,
    pub b: Option<u32>,
    pub c: u32,
    pub is_closed: bool,
    /// The family's hypothesis: `a <= ⌈c/2⌉` for the lemma, `b <= ⌈c/2⌉` for the theorem.
    pub bound_holds: bool,
    pub normal_verdict: Verdict,
    /// First failure of the normality report (at power 1 when not closed).
    pub witness: Option<ExponentVector>,
    pub witness_power: Option<u32>,
    pub mu: usize,
    pub colength: u64,
}

pub fn lemma_ideal(a: u32, c: u32) -> MonomialIdeal {
    MonomialIdeal::from_exponents(&[[2, 0], [1, a], [0, c]])
}

pub fn theorem_ideal(a: u32, b: u32, c: u32) -> MonomialIdeal {
    MonomialIdeal::from_exponents(&[[2, 0, 0], [1, 1, 0], [0, 2, 0], [0, 0, c], [1, 0, a], [0, 1, b]])
}

fn record(ideal: &MonomialIdeal, a: u32, b: Option<u32>, c: u32, bound_holds: bool, exec: Exec) -> SweepRecord {
    let is_closed = is_integrally_closed_with(ideal, exec);
    let report = is_normal_with(ideal, None, exec);
    let (witness, witness_power) = match report.first_failure {
        Some(f) => (Some(f.witness), Some(f.power)),
        None => (None, None),
    };
    SweepRecord {
        a,
        b,
        c,
        is_closed,
        bound_holds,
        normal_verdict: report.verdict,
        witness,
        witness_power,
        mu: ideal.mu(),
        colength: ideal.colength().finite().expect("sweep ideals are m-primary"),
    }
}

/// All cells `1 <= a <= a_max`, `2 <= c <= c_max`, sorted by `(a, c)`.
pub fn sweep_lemma_dim2(a_max: u32, c_max: u32) -> Vec<SweepRecord> {
    sweep_lemma_dim2_with(a_max, c_max, Exec::default())
}

pub fn sweep_lemma_dim2_with(a_max: u32, c_max: u32, exec: Exec) -> Vec<SweepRecord> {
    let cells: Vec<(u32, u32)> = (1..=a_max).flat_map(|a| (2..=c_max).map(move |c| (a, c))).collect();
    exec.map(&cells, |&(a, c)| record(&lemma_ideal(a, c), a, None, c, a <= ceil_half(c), Exec::Sequential))
}

/// All cells `1 <= a <= b <= c - 1`, `2 <= c <= c_max`, sorted by `(a, b, c)`.
pub fn sweep_theorem_dim3(c_max: u32) -> Vec<SweepRecord> {
    sweep_theorem_dim3_with(c_max, Exec::default())
}

pub fn sweep_theorem_dim3_with(c_max: u32, exec: Exec) -> Vec<SweepRecord> {
    let mut cells: Vec<(u32, u32, u32)> = Vec::new();
    for c in 2..=c_max {
        for b in 1..c {
            for a in 1..=b {
                cells.push((a, b, c));
            }
        }
    }
    cells.sort_unstable();
    exec.map(&cells, |&(a, b, c)| {
        record(&theorem_ideal(a, b, c), a, Some(b), c, b <= ceil_half(c), Exec::Sequential)
    })
}

fn cell_label(r: &SweepRecord) -> String {
    match r.b {
        Some(b) => format!("(a,b,c)=({},{},{})", r.a, b, r.c),
        None => format!("(a,c)=({},{})", r.a, r.c),
    }
}

/// Within the hypothesis `a <= ⌈c/2⌉`, `J` must be integrally closed and normal.
pub fn lemma_report(a_max: u32, c_max: u32, records: &[SweepRecord]) -> CheckReport {
    let mut report = CheckReport::new("sweep_lemma_dim2", json!({ "a_max": a_max, "c_max": c_max }));
    for r in records.iter().filter(|r| r.bound_holds) {
        report.expect(
            r.is_closed && r.normal_verdict == Verdict::Normal,
            cell_label(r),
            "closed, normal",
            format!("closed={}, {}", r.is_closed, r.normal_verdict),
        );
    }
    report
}

/// Closed implies `b <= ⌈c/2⌉` and normal; `b > ⌈c/2⌉` yields the witness
/// `Y Z^{⌈c/2⌉}` at power 1.
pub fn theorem_report(c_max: u32, records: &[SweepRecord]) -> CheckReport {
    let vars = SweepFamily::TheoremDim3.variables();
    let mut report = CheckReport::new("sweep_theorem_dim3", json!({ "c_max": c_max }));
    for r in records {
        if r.is_closed {
            report.expect(
                r.bound_holds && r.normal_verdict == Verdict::Normal,
                cell_label(r),
                "b <= ceil(c/2) and normal",
                format!("bound_holds={}, {}", r.bound_holds, r.normal_verdict),
            );
        }
        if !r.bound_holds {
            let expected = ExponentVector::from([0, 1, ceil_half(r.c)]);
            let got = match (&r.witness, r.witness_power) {
                (Some(w), Some(p)) => format!("{} at power {p}", format_monomial(w, &vars)),
                _ => "none".to_string(),
            };
            report.expect(
                r.witness.as_ref() == Some(&expected) && r.witness_power == Some(1),
                cell_label(r),
                format!("{} at power 1", format_monomial(&expected, &vars)),
                got,
            );
        }
    }
    report
}

/// Write records as CSV with columns [`CSV_HEADER`]. The witness is a
/// monomial string in the family's variables, empty when absent; `b` is
/// empty for the lemma family.
pub fn write_csv<W: Write>(records: &[SweepRecord], family: SweepFamily, out: W) -> csv::Result<()> {
    let vars = family.variables();
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.a.to_string(),
            r.b.map(|b| b.to_string()).unwrap_or_default(),
            r.c.to_string(),
            r.is_closed.to_string(),
            r.bound_holds.to_string(),
            r.normal_verdict.to_string(),
            r.witness.as_ref().map(|m| format_monomial(m, &vars)).unwrap_or_default(),
            r.mu.to_string(),
            r.colength.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find(records: &[SweepRecord], a: u32, b: Option<u32>, c: u32) -> &SweepRecord {
        records.iter().find(|r| r.a == a && r.b == b && r.c == c).expect("cell present")
    }

    #[test]
    fn ceil_half_matches_definition() {
        for c in 0..40u32 {
            let brute = (0..).find(|&n: &u32| c <= 2 * n).unwrap();
            assert_eq!(ceil_half(c), brute);
        }
    }

    #[test]
    fn lemma_cells() {
        let recs = sweep_lemma_dim2(3, 4);
        let r = find(&recs, 2, None, 4);
        assert!(r.is_closed && r.normal_verdict == Verdict::Normal);
        let r = find(&recs, 1, None, 2);
        assert!(r.is_closed);
        assert_eq!(lemma_ideal(1, 2), MonomialIdeal::maximal(2).power(2));
        // (3, 4) lies outside the hypothesis; XZ^2 is in the closure of (X^2, Z^4).
        let r = find(&recs, 3, None, 4);
        assert!(!r.bound_holds);
        assert!(!r.is_closed);
        assert_eq!(r.witness, Some(ExponentVector::from([1, 2])));
        assert!(lemma_report(3, 4, &recs).passes);
    }

    #[test]
    fn theorem_cells() {
        let recs = sweep_theorem_dim3(4);
        let r = find(&recs, 1, Some(3), 4);
        assert!(!r.is_closed);
        assert_eq!(r.witness, Some(ExponentVector::from([0, 1, 2])));
        let r = find(&recs, 2, Some(2), 4);
        assert!(r.is_closed && r.normal_verdict == Verdict::Normal);
        let r = find(&recs, 1, Some(1), 2);
        assert!(r.is_closed && r.normal_verdict == Verdict::Normal);
        assert!(theorem_report(4, &recs).passes);
    }

    #[test]
    fn theorem_grid_is_sorted_and_complete() {
        let recs = sweep_theorem_dim3(5);
        let keys: Vec<_> = recs.iter().map(|r| (r.a, r.b.unwrap(), r.c)).collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
        // Σ_{c=2..5} c(c-1)/2
        assert_eq!(recs.len(), 1 + 3 + 6 + 10);
    }

    #[test]
    fn csv_layout() {
        let recs = sweep_theorem_dim3(4);
        let mut buf = Vec::new();
        write_csv(&recs, SweepFamily::TheoremDim3, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("a,b,c,is_closed,bound_holds,normal_verdict,witness,mu,colength"));
        assert!(text.contains("1,3,4,false,false,not_normal,y*z^2,6,"));

        let mut buf = Vec::new();
        write_csv(&sweep_lemma_dim2(1, 2), SweepFamily::LemmaDim2, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().lines().nth(1), Some("1,,2,true,true,normal,,3,3"));
    }
}
