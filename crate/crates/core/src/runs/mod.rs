//! Runs (maximal repetitions) and the root structures attached to them.
//!
//! A run is a maximal interval `[start..end]` whose factor has smallest
//! period `p` with `2p <= end - start + 1`. Every run carries an Lroot (the
//! first occurrence of the Lyndon conjugate of its root), an Oroot (a root
//! occurrence selected by the letter following the run) and an assigned
//! position (start of the greatest proper suffix under one of the two
//! orders).

mod assign;
mod enumerate;
mod naive;
mod roots;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::word::Interval;

pub use assign::{assign_all, assign_position, Assignment};
pub(crate) use assign::{assign_all_symbols, check_distinct};
pub use enumerate::{enumerate_runs, runs_of};
pub use naive::{enumerate_runs_naive, runs_naive_of, DEFAULT_ORACLE_CAP};
pub use roots::{lroot, lyndon_root_occurrences, oroot, RootKind, RootOccurrence, RunStructure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Run {
    pub start: usize,
    pub end: usize,
    pub period: usize,
}

impl Run {
    pub fn interval(&self) -> Interval {
        Interval {
            start: self.start,
            end: self.end,
        }
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Length at least three times the period.
    pub fn is_cubic(&self) -> bool {
        self.len() >= 3 * self.period
    }

    /// Whether the run's root is a single letter.
    pub fn is_unary(&self) -> bool {
        self.period == 1
    }
}

impl fmt::Display for Run {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}] p={}", self.start, self.end, self.period)
    }
}

/// Checks that `run` satisfies the run definition on `w`.
pub(crate) fn validate_run(w: &[u8], run: &Run) -> crate::Result<()> {
    use crate::word::{has_period, smallest_period};
    let bad = || crate::Error::NotARun {
        start: run.start,
        end: run.end,
    };
    if run.start >= run.end || run.end >= w.len() || run.period == 0 || 2 * run.period > run.len() {
        return Err(bad());
    }
    let factor = &w[run.start..=run.end];
    if smallest_period(factor)? != run.period {
        return Err(bad());
    }
    if run.start > 0 && has_period(&w[run.start - 1..=run.end], run.period) {
        return Err(bad());
    }
    if run.end + 1 < w.len() && has_period(&w[run.start..=run.end + 1], run.period) {
        return Err(bad());
    }
    Ok(())
}

pub fn count_cubic(runs: &[Run]) -> usize {
    runs.iter().filter(|r| r.is_cubic()).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_predicate() {
        let r = |start, end, period| Run { start, end, period };
        assert!(!r(0, 5, 3).is_cubic());
        assert!(!r(2, 3, 1).is_cubic());
        assert!(r(0, 2, 1).is_cubic());
        assert!(r(0, 3, 1).is_cubic());
        assert_eq!(count_cubic(&[r(0, 5, 3), r(0, 3, 1)]), 1);
    }
}
