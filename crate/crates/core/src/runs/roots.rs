use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::word::lyndon::least_rotation;
use crate::word::{greatest_proper_suffix, Interval, Order, Word};

use super::{assign_all_symbols, runs_of, validate_run, Assignment, Run};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootKind {
    Lroot,
    Oroot,
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootKind::Lroot => "lroot",
            RootKind::Oroot => "oroot",
        })
    }
}

/// A length-`period` interval attached to a run.
///
/// For an Lroot `order` is always `Forward`. For an Oroot it names the order
/// under which the selected occurrence is a Lyndon word: `Forward` when the
/// run is followed by a smaller letter (or ends the word), `Reverse` when the
/// occurrence comes from the greatest proper suffix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootOccurrence {
    pub run: Run,
    pub kind: RootKind,
    pub interval: Interval,
    pub order: Order,
}

/// Lroot: first occurrence inside the run of the forward Lyndon conjugate of
/// its root.
pub fn lroot(w: &Word, run: &Run) -> Result<RootOccurrence> {
    validate_run(w.symbols(), run)?;
    Ok(lroot_of(w.symbols(), run))
}

/// Oroot of a run.
pub fn oroot(w: &Word, run: &Run) -> Result<RootOccurrence> {
    validate_run(w.symbols(), run)?;
    Ok(oroot_of(w.symbols(), run))
}

/// Offset of the forward Lyndon conjugate inside the root. Occurrences of a
/// conjugate in the periodic factor are aligned modulo the period since the
/// root is primitive.
fn lyndon_offset(w: &[u8], run: &Run) -> usize {
    least_rotation(&w[run.start..run.start + run.period], Order::Forward)
}

pub(crate) fn lroot_of(w: &[u8], run: &Run) -> RootOccurrence {
    let offset = lyndon_offset(w, run);
    RootOccurrence {
        run: *run,
        kind: RootKind::Lroot,
        interval: Interval::with_len(run.start + offset, run.period),
        order: Order::Forward,
    }
}

pub(crate) fn oroot_of(w: &[u8], run: &Run) -> RootOccurrence {
    let p = run.period;
    let follows_smaller = match w.get(run.end + 1) {
        None => true,
        Some(&next) => {
            let before = w[run.end + 1 - p];
            assert_ne!(next, before, "run {run} is not right-maximal");
            next < before
        }
    };
    let (start, order) = if follows_smaller {
        let offset = lyndon_offset(w, run);
        let first = if offset == 0 { p } else { offset };
        (run.start + first, Order::Forward)
    } else {
        let k = greatest_proper_suffix(&w[run.start..=run.end], Order::Forward).unwrap();
        (run.start + k, Order::Reverse)
    };
    RootOccurrence {
        run: *run,
        kind: RootKind::Oroot,
        interval: Interval::with_len(start, p),
        order,
    }
}

/// Every occurrence, inside the run, of the Lyndon conjugate of the run's
/// root under `ord`, found by scanning the run factor.
pub fn lyndon_root_occurrences(w: &Word, run: &Run, ord: Order) -> Result<Vec<Interval>> {
    validate_run(w.symbols(), run)?;
    let w = w.symbols();
    let root = &w[run.start..run.start + run.period];
    let offset = least_rotation(root, ord);
    let conjugate: Vec<u8> = root[offset..]
        .iter()
        .chain(&root[..offset])
        .copied()
        .collect();
    let factor = &w[run.start..=run.end];
    Ok(factor
        .windows(run.period)
        .enumerate()
        .filter(|(_, win)| *win == conjugate.as_slice())
        .map(|(s, _)| Interval::with_len(run.start + s, run.period))
        .collect())
}

/// Runs of a word with their Lroots, Oroots and assigned positions, index
/// aligned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunStructure {
    pub runs: Vec<Run>,
    pub lroots: Vec<RootOccurrence>,
    pub oroots: Vec<RootOccurrence>,
    pub assignments: Vec<Assignment>,
}

impl RunStructure {
    pub fn of(w: &[u8]) -> Self {
        let runs = runs_of(w);
        Self::from_runs(w, runs)
    }

    pub fn from_runs(w: &[u8], runs: Vec<Run>) -> Self {
        let lroots = runs.iter().map(|r| lroot_of(w, r)).collect();
        let oroots = runs.iter().map(|r| oroot_of(w, r)).collect();
        let assignments = assign_all_symbols(w, &runs);
        RunStructure {
            runs,
            lroots,
            oroots,
            assignments,
        }
    }

    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }
}
