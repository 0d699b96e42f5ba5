use crate::index::SuffixIndex;
use crate::word::{Order, Word};

use super::Run;

/// All runs of `w`, sorted by `(start, end)`.
pub fn enumerate_runs(w: &Word) -> Vec<Run> {
    runs_of(w.symbols())
}

/// Every run has, for one of the two orders, a Lyndon root that is the
/// longest Lyndon word starting at its position. So each entry `p` of the
/// two Lyndon arrays is a candidate period: extend the square candidate left
/// and right with LCE queries and keep it when it spans at least `2p`.
pub fn runs_of(w: &[u8]) -> Vec<Run> {
    let n = w.len();
    if n < 2 {
        return Vec::new();
    }
    let forward = SuffixIndex::from_symbols(w, Order::Forward).unwrap();
    let reverse = SuffixIndex::from_symbols(w, Order::Reverse).unwrap();
    let mirrored: Vec<u8> = w.iter().rev().copied().collect();
    let backward = SuffixIndex::from_symbols(&mirrored, Order::Forward).unwrap();

    let mut runs = Vec::new();
    for lyndon in [forward.lyndon_array(), reverse.lyndon_array()] {
        for (i, &p) in lyndon.iter().enumerate() {
            if i + p >= n {
                continue;
            }
            let right = forward.lce_unchecked(i, i + p);
            // Common suffix of w[..i] and w[..i + p], read on the mirror.
            let left = if i == 0 {
                0
            } else {
                backward.lce_unchecked(n - i, n - i - p)
            };
            if left + p + right >= 2 * p {
                runs.push(Run {
                    start: i - left,
                    end: i + p + right - 1,
                    period: p,
                });
            }
        }
    }
    runs.sort_unstable();
    runs.dedup();
    runs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::runs::runs_naive_of;
    use crate::word::sym;

    fn r(start: usize, end: usize, period: usize) -> Run {
        Run { start, end, period }
    }

    #[test]
    fn eight_run_word() {
        let runs = runs_of(&sym("abaababbababb"));
        let mut expected = vec![
            r(2, 3, 1),
            r(0, 5, 3),
            r(3, 6, 2),
            r(6, 7, 1),
            r(4, 9, 3),
            r(3, 12, 5),
            r(7, 11, 2),
            r(11, 12, 1),
        ];
        expected.sort();
        assert_eq!(runs, expected);
        assert_eq!(runs_naive_of(&sym("abaababbababb")), expected);
    }

    #[test]
    fn tiny_words() {
        assert!(runs_of(&sym("ab")).is_empty());
        assert!(runs_of(&sym("a")).is_empty());
        assert!(runs_of(&[]).is_empty());
        assert_eq!(runs_of(&sym("aa")), vec![r(0, 1, 1)]);
        assert_eq!(runs_of(&sym("aaaa")), vec![r(0, 3, 1)]);
    }

    #[test]
    fn matches_naive_on_all_binary_words_up_to_16() {
        for n in 1..=16usize {
            for code in 0u32..(1 << n) {
                let w: Vec<u8> = (0..n).map(|i| ((code >> i) & 1) as u8).collect();
                assert_eq!(runs_of(&w), runs_naive_of(&w), "{w:?}");
            }
        }
    }
}
