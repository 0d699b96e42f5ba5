use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{greatest_proper_suffix, Order, Word};

use super::{runs_of, validate_run, Run};

/// Position assigned to a run: the start of the greatest proper suffix of
/// the run factor under `order`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Assignment {
    pub run: Run,
    pub k: usize,
    pub order: Order,
}

/// Uses the forward order when the letter after the run exceeds the letter
/// one period before it, and the reverse order otherwise (including runs
/// that end the word).
pub fn assign_position(w: &Word, run: &Run) -> Result<Assignment> {
    validate_run(w.symbols(), run)?;
    Ok(assign_of(w.symbols(), run))
}

pub(crate) fn assign_of(w: &[u8], run: &Run) -> Assignment {
    let forward = w
        .get(run.end + 1)
        .is_some_and(|&next| next > w[run.end + 1 - run.period]);
    let order = if forward {
        Order::Forward
    } else {
        Order::Reverse
    };
    let k = run.start + greatest_proper_suffix(&w[run.start..=run.end], order).unwrap();
    Assignment {
        run: *run,
        k,
        order,
    }
}

/// One assignment per run of `w`. Fails if two runs share a position or a
/// position is 0, which would contradict the fewer-runs-than-length bound.
pub fn assign_all(w: &Word) -> Result<Vec<Assignment>> {
    let runs = runs_of(w.symbols());
    let assignments = assign_all_symbols(w.symbols(), &runs);
    check_distinct(&assignments)?;
    Ok(assignments)
}

pub(crate) fn assign_all_symbols(w: &[u8], runs: &[Run]) -> Vec<Assignment> {
    runs.iter().map(|r| assign_of(w, r)).collect()
}

pub(crate) fn check_distinct(assignments: &[Assignment]) -> Result<()> {
    let mut seen: HashMap<usize, &Assignment> = HashMap::with_capacity(assignments.len());
    for a in assignments {
        if a.k == 0 {
            return Err(Error::InvariantViolation(format!(
                "run {} assigned position 0",
                a.run
            )));
        }
        if let Some(prev) = seen.insert(a.k, a) {
            return Err(Error::InvariantViolation(format!(
                "runs {} and {} both assigned position {}",
                prev.run, a.run, a.k
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::is_border_free;

    fn run(start: usize, end: usize, period: usize) -> Run {
        Run { start, end, period }
    }

    #[test]
    fn assign_examples() {
        let w = Word::parse("abaababbababb").unwrap();
        let a = assign_position(&w, &run(7, 11, 2)).unwrap();
        assert_eq!((a.k, a.order), (9, Order::Forward));
        let a = assign_position(&w, &run(0, 5, 3)).unwrap();
        assert_eq!((a.k, a.order), (1, Order::Forward));
        let aa = Word::parse("aa").unwrap();
        let a = assign_position(&aa, &run(0, 1, 1)).unwrap();
        assert_eq!((a.k, a.order), (1, Order::Reverse));
    }

    #[test]
    fn positions_of_eight_run_word() {
        let w = Word::parse("abaababbababb").unwrap();
        let got: Vec<(Run, usize)> = assign_all(&w)
            .unwrap()
            .into_iter()
            .map(|a| (a.run, a.k))
            .collect();
        let mut expected = vec![
            (run(2, 3, 1), 3),
            (run(0, 5, 3), 1),
            (run(3, 6, 2), 4),
            (run(6, 7, 1), 7),
            (run(4, 9, 3), 5),
            (run(3, 12, 5), 8),
            (run(7, 11, 2), 9),
            (run(11, 12, 1), 12),
        ];
        expected.sort();
        assert_eq!(got, expected);
        for a in assign_all(&w).unwrap() {
            assert!(a.run.end + 1 - a.k >= a.run.period);
            assert!(is_border_free(&w.symbols()[a.k..a.k + a.run.period]).unwrap());
        }
    }

    #[test]
    fn distinctness_violation_is_reported() {
        let a = Assignment {
            run: run(0, 1, 1),
            k: 1,
            order: Order::Forward,
        };
        let b = Assignment {
            run: run(0, 3, 2),
            ..a
        };
        assert!(matches!(
            check_distinct(&[a, b]),
            Err(Error::InvariantViolation(_))
        ));
        assert!(check_distinct(&[Assignment { k: 0, ..a }]).is_err());
        assert!(check_distinct(&[a]).is_ok());
    }
}
