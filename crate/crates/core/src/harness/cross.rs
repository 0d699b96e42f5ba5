use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::critical::{local_period, local_period_by_definition};
use crate::error::{Error, Result};
use crate::index::SuffixIndex;
use crate::runs::{runs_naive_of, runs_of};
use crate::word::{to_text, Order};

use super::{pool, SweepConfig, WordSpace};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossValidationReport {
    pub alphabet: usize,
    pub min_len: usize,
    pub max_len: usize,
    pub seed: u64,
    /// Words compared exhaustively (runs, local periods, suffix index).
    pub exhaustive_words: u64,
    /// Random words compared on runs and the suffix index.
    pub random_words: u64,
    /// Random words compared on local periods at every cut.
    pub local_period_words: u64,
}

/// First disagreement found on a word, ordered shortest word first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Mismatch {
    len: usize,
    symbols: Vec<u8>,
    what: &'static str,
    detail: String,
}

impl Mismatch {
    fn new(w: &[u8], what: &'static str, detail: String) -> Self {
        Mismatch {
            len: w.len(),
            symbols: w.to_vec(),
            what,
            detail,
        }
    }

    fn into_error(self) -> Error {
        Error::OracleMismatch {
            what: self.what.to_string(),
            word: to_text(&self.symbols),
            detail: self.detail,
        }
    }
}

fn smaller(a: Option<Mismatch>, b: Option<Mismatch>) -> Option<Mismatch> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn check_runs(w: &[u8]) -> Option<Mismatch> {
    let fast = runs_of(w);
    let naive = runs_naive_of(w);
    (fast != naive).then(|| Mismatch::new(w, "runs", format!("fast {fast:?}, naive {naive:?}")))
}

fn check_local_periods(w: &[u8]) -> Option<Mismatch> {
    (0..=w.len()).find_map(|cut| {
        let fast = local_period(w, cut).unwrap();
        let slow = local_period_by_definition(w, cut).unwrap();
        (fast != slow).then(|| {
            Mismatch::new(
                w,
                "local period",
                format!("cut {cut}: fast {fast}, definition {slow}"),
            )
        })
    })
}

fn check_index(w: &[u8]) -> Option<Mismatch> {
    let n = w.len();
    for ord in Order::BOTH {
        let idx = SuffixIndex::from_symbols(w, ord).unwrap();
        let mut naive: Vec<usize> = (0..n).collect();
        naive.sort_by(|&a, &b| ord.compare(&w[a..], &w[b..]));
        if idx.suffix_array() != naive.as_slice() {
            return Some(Mismatch::new(
                w,
                "suffix array",
                format!("{ord}: {:?} vs sorted {naive:?}", idx.suffix_array()),
            ));
        }
        for (i, j) in index_pairs(idx.suffix_array()) {
            {
                let scan = w[i..]
                    .iter()
                    .zip(&w[j..])
                    .take_while(|(a, b)| a == b)
                    .count();
                if idx.lce(i, j).unwrap() != scan {
                    return Some(Mismatch::new(w, "lce", format!("{ord}: ({i}, {j})")));
                }
                let expected = ord.compare(&w[i..], &w[j..]);
                let got: Ordering = idx.compare_suffixes(i, j).unwrap();
                if got != expected {
                    return Some(Mismatch::new(
                        w,
                        "suffix comparison",
                        format!("{ord}: ({i}, {j})"),
                    ));
                }
            }
        }
    }
    None
}

/// All pairs for short words; otherwise neighbours in suffix order plus a
/// fixed stride pattern.
fn index_pairs(sa: &[usize]) -> Vec<(usize, usize)> {
    let n = sa.len();
    if n <= 32 {
        return (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    }
    let mut pairs: Vec<(usize, usize)> = sa.windows(2).map(|p| (p[0], p[1])).collect();
    pairs.extend((0..n).map(|i| (i, (7 * i + 3) % n)));
    pairs
}

fn check_all(w: &[u8]) -> Option<Mismatch> {
    check_runs(w)
        .or_else(|| check_local_periods(w))
        .or_else(|| check_index(w))
}

fn random_words(
    rng: &mut ChaCha8Rng,
    count: usize,
    max_len: usize,
    max_alphabet: usize,
) -> Vec<Vec<u8>> {
    (0..count)
        .map(|_| {
            let len = rng.random_range(1..=max_len);
            let sigma = rng.random_range(1..=max_alphabet) as u8;
            (0..len).map(|_| rng.random_range(0..sigma)).collect()
        })
        .collect()
}

/// Compares the fast routines with their oracles: every word of the
/// configured space (runs, local periods, suffix index), then
/// `random_words` seeded random words (runs, suffix index) and
/// `local_period_words` random words (local periods at every cut). Stops at
/// the first length with a disagreement and reports its smallest word.
pub fn cross_validate(cfg: &SweepConfig) -> Result<CrossValidationReport> {
    cfg.validate()?;
    if cfg.random_max_len == 0 || cfg.local_period_max_len == 0 {
        return Err(Error::InvalidParameter(
            "random word lengths must be at least 1".into(),
        ));
    }
    crate::word::Alphabet::new(cfg.random_max_alphabet)?;
    let pool = pool(cfg.jobs)?;
    let mut exhaustive = 0u64;
    for len in cfg.min_len..=cfg.max_len {
        let space = WordSpace::new(cfg.alphabet, len, cfg.canonicalize, cfg.space_cap)?;
        let blocks = space.blocks(super::MIN_BLOCKS);
        let (count, mismatch) = pool.install(|| {
            blocks
                .par_iter()
                .map(|prefix| {
                    let mut count = 0u64;
                    let mut found = None;
                    space.for_each_in_block(prefix, |w| {
                        count += 1;
                        if found.is_none() {
                            found = check_all(w);
                        }
                    });
                    (count, found)
                })
                .reduce(|| (0, None), |a, b| (a.0 + b.0, smaller(a.1, b.1)))
        });
        exhaustive += count;
        if let Some(m) = mismatch {
            return Err(m.into_error());
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let random = random_words(
        &mut rng,
        cfg.random_words,
        cfg.random_max_len,
        cfg.random_max_alphabet,
    );
    let local = random_words(
        &mut rng,
        cfg.local_period_words,
        cfg.local_period_max_len,
        cfg.random_max_alphabet,
    );
    let mismatch = pool.install(|| {
        let a = random
            .par_iter()
            .map(|w| check_runs(w).or_else(|| check_index(w)))
            .reduce(|| None, smaller);
        let b = local
            .par_iter()
            .map(|w| check_local_periods(w))
            .reduce(|| None, smaller);
        smaller(a, b)
    });
    if let Some(m) = mismatch {
        return Err(m.into_error());
    }
    Ok(CrossValidationReport {
        alphabet: cfg.alphabet,
        min_len: cfg.min_len,
        max_len: cfg.max_len,
        seed: cfg.seed,
        exhaustive_words: exhaustive,
        random_words: random.len() as u64,
        local_period_words: local.len() as u64,
    })
}
