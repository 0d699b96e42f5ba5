use crate::error::{Error, Result};
use crate::word::{border_table, Word};

use super::Run;

/// Default length cap for the definitional enumerator.
pub const DEFAULT_ORACLE_CAP: usize = 512;

/// Reference enumerator: checks every interval against the run definition.
pub fn enumerate_runs_naive(w: &Word, cap: usize) -> Result<Vec<Run>> {
    if w.len() > cap {
        return Err(Error::CapExceeded { len: w.len(), cap });
    }
    Ok(runs_naive_of(w.symbols()))
}

/// Smallest periods of all factors come from one failure function per start
/// position; each interval is then tested for periodicity and for both
/// maximality conditions.
pub fn runs_naive_of(w: &[u8]) -> Vec<Run> {
    let n = w.len();
    // period[i][l] = smallest period of w[i..i + l], l in 1..=n - i.
    let period: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let border = border_table(&w[i..]);
            (0..=n - i).map(|l| l - border[l]).collect()
        })
        .collect();
    let mut runs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let len = j - i + 1;
            let p = period[i][len];
            if 2 * p > len {
                continue;
            }
            let left_maximal = i == 0 || period[i - 1][len + 1] > p;
            let right_maximal = j + 1 == n || period[i][len + 1] > p;
            if left_maximal && right_maximal {
                runs.push(Run {
                    start: i,
                    end: j,
                    period: p,
                });
            }
        }
    }
    runs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;

    #[test]
    fn unary_word_has_one_run() {
        assert_eq!(
            runs_naive_of(&[0, 0, 0, 0]),
            vec![Run {
                start: 0,
                end: 3,
                period: 1
            }]
        );
    }

    #[test]
    fn single_letter_has_none() {
        assert!(runs_naive_of(&[0]).is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        let w = Word::new(vec![0; 20], Alphabet::BINARY).unwrap();
        assert_eq!(
            enumerate_runs_naive(&w, 10),
            Err(Error::CapExceeded { len: 20, cap: 10 })
        );
        assert_eq!(enumerate_runs_naive(&w, 20).unwrap().len(), 1);
    }
}
