//! Executable checks of the monomial content of the Rees-algebra results:
//! worked examples, parameter sweeps over the `(a, b, c)` families, and
//! seeded random corpora for the theorem-level properties.

mod corpus;
mod report;
mod sweep;
mod worked;

pub use corpus::{
    corpus_check_div2, corpus_check_div2_on, corpus_check_main_normality, corpus_check_main_normality_on,
    corpus_check_watanabe, corpus_check_watanabe_on, corpus_check_zariski, corpus_check_zariski_on, corpus_ideal,
    div2_holds, main_normality_holds, random_integrally_closed, watanabe_holds, CorpusOutcome, CorpusSpec,
    DEFAULT_SEED, SEED_ENV_VAR,
};
pub use report::{CheckReport, FailureEntry};
pub use sweep::{
    ceil_half, lemma_ideal, lemma_report, sweep_lemma_dim2, sweep_lemma_dim2_with, sweep_theorem_dim3,
    sweep_theorem_dim3_with, theorem_ideal, theorem_report, write_csv, SweepFamily, SweepRecord, CSV_HEADER,
};
pub use worked::{verify_examples, verify_intro_example};

use crate::exec::Exec;

/// Bounds and corpus sizes for [`verify_paper`].
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub lemma_a_max: u32,
    pub lemma_c_max: u32,
    pub theorem_c_max: u32,
    pub seed: u64,
    pub trials: usize,
    pub exec: Exec,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            lemma_a_max: 8,
            lemma_c_max: 16,
            theorem_c_max: 12,
            seed: DEFAULT_SEED,
            trials: 200,
            exec: Exec::default(),
        }
    }
}

/// Every check: worked examples, both sweeps, and the corpus properties in
/// dimensions 3 and 4 (Zariski in dimension 2).
pub fn verify_paper(config: &VerifyConfig) -> Vec<CheckReport> {
    let mut out = vec![verify_intro_example(), verify_examples()];
    let lemma = sweep_lemma_dim2_with(config.lemma_a_max, config.lemma_c_max, config.exec);
    out.push(lemma_report(config.lemma_a_max, config.lemma_c_max, &lemma));
    let thm = sweep_theorem_dim3_with(config.theorem_c_max, config.exec);
    out.push(theorem_report(config.theorem_c_max, &thm));
    for dim in [3, 4] {
        let spec = CorpusSpec::standard(dim, config.trials, config.seed);
        let corpus = corpus::build(&spec, config.exec);
        for check in [corpus_check_div2_on, corpus_check_watanabe_on, corpus_check_main_normality_on] {
            out.push(check(&spec, &corpus, config.exec).expect("standard spec is valid").report);
        }
    }
    let spec = CorpusSpec::standard(2, config.trials, config.seed);
    let corpus = corpus::build_pairs(&spec, config.exec);
    out.push(corpus_check_zariski_on(&spec, &corpus, config.exec).expect("standard spec is valid").report);
    out
}
