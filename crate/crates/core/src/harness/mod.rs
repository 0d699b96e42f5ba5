//! Exhaustive and randomized sweeps over word spaces.
//!
//! A sweep walks every word of each length in `min_len..=max_len`, runs the
//! selected checks on it and folds the outcomes into a [`SweepReport`]. The
//! fold is associative and commutative, so the report does not depend on the
//! number of worker threads. A failing theorem-class check stops the sweep
//! after the length in which it was found, with the smallest failing word as
//! the counterexample; conjecture-class failures are collected.

mod checks;
mod cross;
mod space;

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::density::density_cmp;
use crate::error::{Error, Result};
use crate::word::{to_text, Interval, Word};

pub use checks::{Check, CheckClass, Violation, SHORT_INTERVAL_MAX};
pub use cross::{cross_validate, CrossValidationReport};
pub use space::{enumerate_words, is_restricted_growth, WordSpace, DEFAULT_SPACE_CAP};

use checks::{evaluate, WordContext};

/// Longest word length a sweep accepts.
pub const MAX_SWEEP_LEN: usize = 64;

/// Number of prefix blocks each length is split into for the worker pool.
const MIN_BLOCKS: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub alphabet: usize,
    pub min_len: usize,
    pub max_len: usize,
    /// Visit one word per renaming class for checks that pass the renaming
    /// spot check.
    pub canonicalize: bool,
    pub checks: Vec<Check>,
    /// Worker threads. Not part of the report.
    #[serde(skip, default = "default_jobs")]
    pub jobs: usize,
    pub seed: u64,
    /// Violations kept per check (the smallest ones).
    pub max_examples: usize,
    pub space_cap: u64,
    /// Random words for cross validation, with their length and alphabet
    /// bounds.
    pub random_words: usize,
    pub random_max_len: usize,
    pub random_max_alphabet: usize,
    pub local_period_words: usize,
    pub local_period_max_len: usize,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            alphabet: 2,
            min_len: 1,
            max_len: 12,
            canonicalize: false,
            checks: Check::ALL.to_vec(),
            jobs: default_jobs(),
            seed: 0,
            max_examples: 8,
            space_cap: DEFAULT_SPACE_CAP,
            random_words: 10_000,
            random_max_len: 200,
            random_max_alphabet: 4,
            local_period_words: 1_000,
            local_period_max_len: 100,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        crate::word::Alphabet::new(self.alphabet)?;
        if self.min_len == 0 || self.min_len > self.max_len {
            return Err(Error::InvalidParameter(format!(
                "length range {}..={} is empty or starts at 0",
                self.min_len, self.max_len
            )));
        }
        if self.max_len > MAX_SWEEP_LEN {
            return Err(Error::CapExceeded {
                len: self.max_len,
                cap: MAX_SWEEP_LEN,
            });
        }
        if self.checks.is_empty() {
            return Err(Error::InvalidParameter("no checks selected".into()));
        }
        if self.jobs == 0 {
            return Err(Error::InvalidParameter("jobs must be at least 1".into()));
        }
        WordSpace::new(self.alphabet, self.max_len, false, self.space_cap)?;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Holds,
    Falsified,
    VerifiedAtScale,
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: Check,
    pub class: CheckClass,
    pub status: CheckStatus,
    /// Whether only restricted-growth representatives were examined.
    pub canonical: bool,
    pub words: u64,
    pub violations: u64,
    pub examples: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunsRatioWitness {
    pub word: String,
    pub runs: usize,
    pub n: usize,
    pub ratio: f64,
}

impl Eq for RunsRatioWitness {}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityWitness {
    pub word: String,
    pub start: usize,
    pub end: usize,
    pub count: usize,
    pub ratio: f64,
}

impl Eq for DensityWitness {}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthMax {
    pub len: usize,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Extremal {
    /// Word with the largest runs / length ratio.
    pub max_runs_ratio: Option<RunsRatioWitness>,
    /// Interval with the largest Lroot density, when an Lroot check ran.
    pub max_lroot_density: Option<DensityWitness>,
    /// Largest Lroot count seen on intervals of each length.
    pub lroot_max_by_length: Vec<LengthMax>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Completed,
    /// A theorem-class check failed; the sweep stopped after `last_len`.
    Falsified {
        last_len: usize,
        counterexample: Violation,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub outcome: Outcome,
    pub words: u64,
    pub checks: Vec<CheckReport>,
    pub extremal: Extremal,
}

impl SweepReport {
    /// No theorem falsified and no conjecture counterexample.
    pub fn is_clean(&self) -> bool {
        self.checks.iter().all(|c| c.violations == 0)
    }

    pub fn check(&self, check: Check) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.check == check)
    }

    /// Fails with the counterexample when a theorem-class check failed.
    pub fn ensure_no_falsification(&self) -> Result<()> {
        match &self.outcome {
            Outcome::Completed => Ok(()),
            Outcome::Falsified { counterexample, .. } => Err(Error::InvariantViolation(format!(
                "{} fails on {:?}: {}",
                counterexample.check, counterexample.word, counterexample.detail
            ))),
        }
    }
}

/// Which checks run on which words.
#[derive(Debug, Clone)]
struct Plan {
    checks: Vec<(Check, bool)>,
    enumerate_canonical: bool,
    lroot_stats: bool,
}

impl Plan {
    fn new(cfg: &SweepConfig) -> Result<Self> {
        let mut checks = Vec::with_capacity(cfg.checks.len());
        for &check in &cfg.checks {
            let canonical = cfg.canonicalize && renaming_spot_check(check, cfg.alphabet)?;
            checks.push((check, canonical));
        }
        Ok(Plan {
            enumerate_canonical: checks.iter().all(|&(_, c)| c),
            lroot_stats: checks.iter().any(|&(c, _)| c.uses_lroot_counts()),
            checks,
        })
    }

    fn explicit(cfg: &SweepConfig) -> Self {
        Plan {
            checks: cfg.checks.iter().map(|&c| (c, false)).collect(),
            enumerate_canonical: false,
            lroot_stats: cfg.checks.iter().any(|c| c.uses_lroot_counts()),
        }
    }
}

#[derive(Debug, Clone, Default)]
struct CheckTally {
    words: u64,
    violations: u64,
    examples: Vec<Violation>,
}

/// Keeps the `cap` smallest items of the union.
fn merge_smallest<T: Ord>(mut a: Vec<T>, b: Vec<T>, cap: usize) -> Vec<T> {
    a.extend(b);
    a.sort();
    a.dedup();
    a.truncate(cap);
    a
}

/// Best-of witnesses carry their comparison keys as integers so the merge is
/// exact.
#[derive(Debug, Clone, PartialEq, Eq)]
struct RunsBest {
    runs: usize,
    symbols: Vec<u8>,
}

impl RunsBest {
    /// Higher runs / n first, then shorter, then lexicographically smaller.
    fn better(&self, other: &RunsBest) -> bool {
        let (a, b) = (self, other);
        (a.runs * b.symbols.len())
            .cmp(&(b.runs * a.symbols.len()))
            .then(b.symbols.len().cmp(&a.symbols.len()))
            .then(b.symbols.cmp(&a.symbols))
            == Ordering::Greater
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct DensityBest {
    count: usize,
    interval: Interval,
    symbols: Vec<u8>,
}

impl DensityBest {
    fn better(&self, other: &DensityBest) -> bool {
        let (a, b) = (self, other);
        density_cmp((a.count, a.interval), (b.count, b.interval))
            .then(b.symbols.len().cmp(&a.symbols.len()))
            .then(b.symbols.cmp(&a.symbols))
            == Ordering::Greater
    }
}

fn keep_better<T>(a: Option<T>, b: Option<T>, better: impl Fn(&T, &T) -> bool) -> Option<T> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if better(&y, &x) { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

#[derive(Debug, Clone)]
struct Tally {
    words: u64,
    checks: Vec<CheckTally>,
    runs_best: Option<RunsBest>,
    density_best: Option<DensityBest>,
    lroot_max: Vec<usize>,
}

impl Tally {
    fn new(plan: &Plan) -> Self {
        Tally {
            words: 0,
            checks: vec![CheckTally::default(); plan.checks.len()],
            runs_best: None,
            density_best: None,
            lroot_max: Vec::new(),
        }
    }

    fn observe(&mut self, w: &[u8], plan: &Plan, max_examples: usize) {
        self.words += 1;
        let canonical = plan.enumerate_canonical || is_restricted_growth(w);
        let ctx = WordContext::new(w);
        for (tally, &(check, canonical_only)) in self.checks.iter_mut().zip(&plan.checks) {
            if (canonical_only && !canonical) || !check.applies_to(w) {
                continue;
            }
            tally.words += 1;
            if let Some(v) = evaluate(check, &ctx) {
                tally.violations += 1;
                if tally.examples.len() < max_examples || Some(&v) < tally.examples.last() {
                    tally.examples =
                        merge_smallest(std::mem::take(&mut tally.examples), vec![v], max_examples);
                }
            }
        }
        let runs = RunsBest {
            runs: ctx.rs.len(),
            symbols: w.to_vec(),
        };
        self.runs_best = keep_better(self.runs_best.take(), Some(runs), RunsBest::better);
        if plan.lroot_stats {
            let counts = ctx.lroot_counts();
            if self.lroot_max.len() < w.len() {
                self.lroot_max.resize(w.len(), 0);
            }
            for iv in crate::density::all_intervals(w.len()) {
                let slot = &mut self.lroot_max[iv.len() - 1];
                *slot = (*slot).max(counts.get(iv));
            }
            if let Some((count, interval)) = ctx.densest(crate::density::all_intervals(w.len())) {
                let best = DensityBest {
                    count,
                    interval,
                    symbols: w.to_vec(),
                };
                self.density_best =
                    keep_better(self.density_best.take(), Some(best), DensityBest::better);
            }
        }
    }

    fn merge(mut self, other: Tally, max_examples: usize) -> Tally {
        self.words += other.words;
        for (a, b) in self.checks.iter_mut().zip(other.checks) {
            a.words += b.words;
            a.violations += b.violations;
            a.examples = merge_smallest(std::mem::take(&mut a.examples), b.examples, max_examples);
        }
        self.runs_best = keep_better(self.runs_best, other.runs_best, RunsBest::better);
        self.density_best = keep_better(self.density_best, other.density_best, DensityBest::better);
        if self.lroot_max.len() < other.lroot_max.len() {
            self.lroot_max.resize(other.lroot_max.len(), 0);
        }
        for (a, b) in self.lroot_max.iter_mut().zip(other.lroot_max) {
            *a = (*a).max(b);
        }
        self
    }

    fn first_theorem_violation(&self, plan: &Plan) -> Option<Violation> {
        self.checks
            .iter()
            .zip(&plan.checks)
            .filter(|(_, (check, _))| check.class() == CheckClass::Theorem)
            .filter_map(|(t, _)| t.examples.first())
            .min()
            .cloned()
    }

    fn into_report(self, cfg: &SweepConfig, plan: &Plan, outcome: Outcome) -> SweepReport {
        let checks = self
            .checks
            .into_iter()
            .zip(&plan.checks)
            .map(|(t, &(check, canonical))| {
                let status = match (check.class(), t.violations) {
                    (CheckClass::Theorem, 0) => CheckStatus::Holds,
                    (CheckClass::Theorem, _) => CheckStatus::Falsified,
                    (CheckClass::Conjecture, 0) => CheckStatus::VerifiedAtScale,
                    (CheckClass::Conjecture, _) => CheckStatus::Counterexample,
                };
                CheckReport {
                    check,
                    class: check.class(),
                    status,
                    canonical,
                    words: t.words,
                    violations: t.violations,
                    examples: t.examples,
                }
            })
            .collect();
        let extremal = Extremal {
            max_runs_ratio: self.runs_best.map(|b| RunsRatioWitness {
                word: to_text(&b.symbols),
                runs: b.runs,
                n: b.symbols.len(),
                ratio: b.runs as f64 / b.symbols.len() as f64,
            }),
            max_lroot_density: self.density_best.map(|b| DensityWitness {
                word: to_text(&b.symbols),
                start: b.interval.start,
                end: b.interval.end,
                count: b.count,
                ratio: b.count as f64 / b.interval.len() as f64,
            }),
            lroot_max_by_length: self
                .lroot_max
                .into_iter()
                .enumerate()
                .map(|(i, count)| LengthMax { len: i + 1, count })
                .collect(),
        };
        SweepReport {
            config: cfg.clone(),
            outcome,
            words: self.words,
            checks,
            extremal,
        }
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start {jobs} workers: {e}")))
}

/// Runs the configured checks over every word of every length in range.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    cfg.validate()?;
    let plan = Plan::new(cfg)?;
    let pool = pool(cfg.jobs)?;
    let max_examples = cfg.max_examples.max(1);
    let mut total = Tally::new(&plan);
    let mut outcome = Outcome::Completed;
    for len in cfg.min_len..=cfg.max_len {
        let space = WordSpace::new(cfg.alphabet, len, plan.enumerate_canonical, cfg.space_cap)?;
        let blocks = space.blocks(MIN_BLOCKS);
        let part = pool.install(|| {
            blocks
                .par_iter()
                .map(|prefix| {
                    let mut t = Tally::new(&plan);
                    space.for_each_in_block(prefix, |w| t.observe(w, &plan, max_examples));
                    t
                })
                .reduce(|| Tally::new(&plan), |a, b| a.merge(b, max_examples))
        });
        total = total.merge(part, max_examples);
        if let Some(counterexample) = total.first_theorem_violation(&plan) {
            outcome = Outcome::Falsified {
                last_len: len,
                counterexample,
            };
            break;
        }
    }
    Ok(total.into_report(cfg, &plan, outcome))
}

/// Runs the configured checks on an explicit list of words. Length bounds
/// and canonicalization in `cfg` are ignored; the sweep never stops early.
pub fn run_checks_on(words: &[Word], cfg: &SweepConfig) -> Result<SweepReport> {
    if cfg.checks.is_empty() {
        return Err(Error::InvalidParameter("no checks selected".into()));
    }
    if words.iter().any(Word::is_empty) {
        return Err(Error::EmptyWord);
    }
    let plan = Plan::explicit(cfg);
    let max_examples = cfg.max_examples.max(1);
    let total = pool(cfg.jobs)?.install(|| {
        words
            .par_iter()
            .map(|w| {
                let mut t = Tally::new(&plan);
                t.observe(w.symbols(), &plan, max_examples);
                t
            })
            .reduce(|| Tally::new(&plan), |a, b| a.merge(b, max_examples))
    });
    let outcome = match total.first_theorem_violation(&plan) {
        Some(counterexample) => Outcome::Falsified {
            last_len: words.iter().map(Word::len).max().unwrap_or(0),
            counterexample,
        },
        None => Outcome::Completed,
    };
    let mut config = cfg.clone();
    config.canonicalize = false;
    config.min_len = words.iter().map(Word::len).min().unwrap_or(0);
    config.max_len = words.iter().map(Word::len).max().unwrap_or(0);
    Ok(total.into_report(&config, &plan, outcome))
}

/// Longest length used by the renaming spot check for `sigma` letters.
fn spot_check_len(sigma: usize) -> usize {
    (1..=10)
        .take_while(|&n| (sigma as u64).pow(n as u32) <= 4096)
        .last()
        .unwrap_or(1)
}

/// Whether `check` passes or fails on each word exactly when it does on
/// its images under the transposition `a <-> b` and the cyclic shift of
/// the alphabet (which together generate all renamings), for all words
/// over `sigma` letters up to a small length.
pub fn renaming_spot_check(check: Check, sigma: usize) -> Result<bool> {
    crate::word::Alphabet::new(sigma)?;
    if sigma == 1 {
        return Ok(true);
    }
    let swap: Vec<u8> = (0..sigma as u8)
        .map(|s| match s {
            0 => 1,
            1 => 0,
            s => s,
        })
        .collect();
    let shift: Vec<u8> = (0..sigma as u8).map(|s| (s + 1) % sigma as u8).collect();
    let outcome = |w: &[u8]| check.applies_to(w) && evaluate(check, &WordContext::new(w)).is_some();
    for len in 1..=spot_check_len(sigma) {
        let space = WordSpace::new(sigma, len, false, DEFAULT_SPACE_CAP)?;
        for w in space.iter() {
            let base = outcome(&w);
            for perm in [&swap, &shift] {
                let image: Vec<u8> = w.iter().map(|&s| perm[s as usize]).collect();
                if outcome(&image) != base {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
