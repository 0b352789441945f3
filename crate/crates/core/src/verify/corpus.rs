//! Seeded corpora of integrally closed m-primary ideals.
//!
//! Trial `t` of a corpus draws from `ChaCha8Rng::seed_from_u64(seed)` with
//! its stream set to `t` (rand 0.8 / rand_chacha 0.3 sampling), so each
//! trial is reproducible on its own and trials can run in any order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::report::CheckReport;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::exponent::ExponentVector;
use crate::ideal::MonomialIdeal;
use crate::newton::integral_closure_with;
use crate::normality::{is_integrally_closed_with, is_normal_with, Verdict};
use crate::text::{format_ideal, Variables};

pub const DEFAULT_SEED: u64 = 20_251_015;

/// Environment variable consulted by the CLI for the default seed.
pub const SEED_ENV_VAR: &str = "MONIDEAL_SEED";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    /// Sampled exponents lie in `[0, max_exponent]`, pure powers in `[1, max_exponent]`.
    pub max_exponent: u32,
    pub min_generators: usize,
    pub max_generators: usize,
}

impl CorpusSpec {
    /// The corpus shape used by the acceptance checks.
    pub fn standard(dim: usize, trials: usize, seed: u64) -> Self {
        CorpusSpec { dim, trials, seed, max_exponent: 4, min_generators: 1, max_generators: 4 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::InvalidSpec("dimension must be positive".into()));
        }
        if self.max_exponent == 0 {
            return Err(Error::InvalidSpec("max_exponent must be positive".into()));
        }
        if self.min_generators > self.max_generators {
            return Err(Error::InvalidSpec("empty generator count range".into()));
        }
        Ok(())
    }

    fn params(&self) -> serde_json::Value {
        json!({
            "dim": self.dim,
            "trials": self.trials,
            "seed": self.seed,
            "max_exponent": self.max_exponent,
            "generators": [self.min_generators, self.max_generators],
        })
    }
}

fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn sample_ideal(spec: &CorpusSpec, rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let d = spec.dim;
    let k = rng.gen_range(spec.min_generators..=spec.max_generators);
    let mut gens = Vec::with_capacity(k + d);
    while gens.len() < k {
        let v: Vec<u32> = (0..d).map(|_| rng.gen_range(0..=spec.max_exponent)).collect();
        // the origin would make the ideal the whole ring
        if v.iter().any(|&e| e > 0) {
            gens.push(ExponentVector::new(v));
        }
    }
    for j in 0..d {
        gens.push(ExponentVector::pure_power(d, j, rng.gen_range(1..=spec.max_exponent)));
    }
    MonomialIdeal::new(d, gens).expect("sampled vectors have the corpus dimension")
}

/// Ideal number `index` of the corpus described by `spec`.
pub fn corpus_ideal(spec: &CorpusSpec, index: u64) -> MonomialIdeal {
    corpus_ideal_with(spec, index, Exec::Sequential)
}

fn corpus_ideal_with(spec: &CorpusSpec, index: u64, exec: Exec) -> MonomialIdeal {
    let mut rng = trial_rng(spec.seed, index);
    integral_closure_with(&sample_ideal(spec, &mut rng), exec)
}

/// The corpus as a lazy stream of `spec.trials` ideals. Every ideal is
/// integrally closed and m-primary.
pub fn random_integrally_closed(spec: &CorpusSpec) -> impl Iterator<Item = MonomialIdeal> + '_ {
    (0..spec.trials as u64).map(move |t| corpus_ideal_with(spec, t, Exec::default()))
}

pub(crate) fn build(spec: &CorpusSpec, exec: Exec) -> Vec<MonomialIdeal> {
    let idx: Vec<u64> = (0..spec.trials as u64).collect();
    exec.map(&idx, |&t| corpus_ideal_with(spec, t, Exec::Sequential))
}

/// `2 * trials` ideals, paired consecutively.
pub(crate) fn build_pairs(spec: &CorpusSpec, exec: Exec) -> Vec<(MonomialIdeal, MonomialIdeal)> {
    let idx: Vec<u64> = (0..spec.trials as u64).collect();
    exec.map(&idx, |&t| {
        (corpus_ideal_with(spec, 2 * t, Exec::Sequential), corpus_ideal_with(spec, 2 * t + 1, Exec::Sequential))
    })
}

/// A corpus check's report together with how many ideals met its hypothesis.
#[derive(Debug, Clone)]
pub struct CorpusOutcome {
    pub report: CheckReport,
    pub trials: usize,
    pub applicable: usize,
}

/// `mu(I) <= d + 2` implies `v(R/I) <= 2`. `None` when `mu(I) > d + 2`.
pub fn div2_holds(ideal: &MonomialIdeal) -> Option<bool> {
    (ideal.mu() <= ideal.dim() + 2).then(|| ideal.v_quotient() <= 2)
}

/// `I ⊆ m^2` implies `mu(I) >= d(d+1)/2`. `None` when some variable lies in `I`.
pub fn watanabe_holds(ideal: &MonomialIdeal) -> Option<bool> {
    let d = ideal.dim();
    (ideal.rsop_count() == 0).then(|| ideal.mu() >= d * (d + 1) / 2)
}

/// `v(R/I) <= 2` implies `I` is normal. `None` when `v(R/I) > 2`.
pub fn main_normality_holds(ideal: &MonomialIdeal, exec: Exec) -> Option<bool> {
    (ideal.v_quotient() <= 2).then(|| is_normal_with(ideal, None, exec).verdict == Verdict::Normal)
}

fn require_dim(spec: &CorpusSpec, ok: bool, want: &str) -> Result<()> {
    spec.validate()?;
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidSpec(format!("dimension {} but this check needs {want}", spec.dim)))
    }
}

fn run_property<F>(
    name: &str,
    spec: &CorpusSpec,
    corpus: &[MonomialIdeal],
    exec: Exec,
    expected: &str,
    prop: F,
) -> CorpusOutcome
where
    F: Fn(&MonomialIdeal) -> Option<bool> + Sync + Send,
{
    let vars = Variables::standard(spec.dim);
    let outcomes = exec.map(corpus, |i| prop(i));
    let mut report = CheckReport::new(name, spec.params());
    let mut applicable = 0;
    for (ideal, outcome) in corpus.iter().zip(outcomes) {
        match outcome {
            Some(true) => applicable += 1,
            Some(false) => {
                applicable += 1;
                let got = format!("mu={}, v={}, rsop={}", ideal.mu(), ideal.v_quotient(), ideal.rsop_count());
                report.fail(format_ideal(ideal, &vars), expected, got);
            }
            None => {}
        }
        if !ideal.is_m_primary() {
            report.fail(format_ideal(ideal, &vars), "m-primary corpus ideal", "not m-primary");
        }
    }
    annotate(&mut report, applicable);
    CorpusOutcome { report, trials: corpus.len(), applicable }
}

fn annotate(report: &mut CheckReport, applicable: usize) {
    if let Some(obj) = report.params.as_object_mut() {
        obj.insert("applicable".into(), json!(applicable));
    }
}

pub fn corpus_check_div2(spec: &CorpusSpec) -> Result<CorpusOutcome> {
    require_dim(spec, spec.dim >= 3, "at least 3")?;
    corpus_check_div2_on(spec, &build(spec, Exec::default()), Exec::default())
}

pub fn corpus_check_div2_on(spec: &CorpusSpec, corpus: &[MonomialIdeal], exec: Exec) -> Result<CorpusOutcome> {
    require_dim(spec, spec.dim >= 3, "at least 3")?;
    Ok(run_property("corpus_check_div2", spec, corpus, exec, "v <= 2 whenever mu <= d+2", div2_holds))
}

pub fn corpus_check_watanabe(spec: &CorpusSpec) -> Result<CorpusOutcome> {
    require_dim(spec, spec.dim >= 3, "at least 3")?;
    corpus_check_watanabe_on(spec, &build(spec, Exec::default()), Exec::default())
}

pub fn corpus_check_watanabe_on(spec: &CorpusSpec, corpus: &[MonomialIdeal], exec: Exec) -> Result<CorpusOutcome> {
    require_dim(spec, spec.dim >= 3, "at least 3")?;
    Ok(run_property(
        "corpus_check_watanabe",
        spec,
        corpus,
        exec,
        "mu >= d(d+1)/2 whenever I is inside m^2",
        watanabe_holds,
    ))
}

pub fn corpus_check_main_normality(spec: &CorpusSpec) -> Result<CorpusOutcome> {
    require_dim(spec, spec.dim >= 3, "at least 3")?;
    corpus_check_main_normality_on(spec, &build(spec, Exec::default()), Exec::default())
}

pub fn corpus_check_main_normality_on(
    spec: &CorpusSpec,
    corpus: &[MonomialIdeal],
    exec: Exec,
) -> Result<CorpusOutcome> {
    require_dim(spec, spec.dim >= 3, "at least 3")?;
    // the per-ideal normality checks already run under `exec`
    Ok(run_property(
        "corpus_check_main_normality",
        spec,
        corpus,
        exec,
        "normal whenever v <= 2",
        |i| main_normality_holds(i, Exec::Sequential),
    ))
}

pub fn corpus_check_zariski(spec: &CorpusSpec) -> Result<CorpusOutcome> {
    require_dim(spec, spec.dim == 2, "exactly 2")?;
    corpus_check_zariski_on(spec, &build_pairs(spec, Exec::default()), Exec::default())
}

pub fn corpus_check_zariski_on(
    spec: &CorpusSpec,
    pairs: &[(MonomialIdeal, MonomialIdeal)],
    exec: Exec,
) -> Result<CorpusOutcome> {
    require_dim(spec, spec.dim == 2, "exactly 2")?;
    let vars = Variables::standard(2);
    let closed = exec.map(pairs, |(i, j)| {
        is_integrally_closed_with(&i.product(j).expect("corpus ideals share a dimension"), Exec::Sequential)
    });
    let mut report = CheckReport::new("corpus_check_zariski", spec.params());
    for ((i, j), ok) in pairs.iter().zip(closed) {
        report.expect(
            ok,
            format!("({}) * ({})", format_ideal(i, &vars), format_ideal(j, &vars)),
            "integrally closed product",
            "product not integrally closed",
        );
    }
    annotate(&mut report, pairs.len());
    Ok(CorpusOutcome { report, trials: pairs.len(), applicable: pairs.len() })
}
