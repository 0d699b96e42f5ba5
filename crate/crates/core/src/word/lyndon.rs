use std::cmp::Ordering;

use crate::error::{Error, Result};

use super::{is_primitive, require_non_empty, Interval, Order};

/// Lyndon test in linear time: `w` is Lyndon iff its Lyndon factorization
/// has a single factor.
pub fn is_lyndon(w: &[u8], ord: Order) -> Result<bool> {
    require_non_empty(w)?;
    let (first_len, _) = duval_step(w, 0, ord);
    Ok(first_len == w.len())
}

/// `w` is strictly smaller than each of its proper suffixes.
pub fn is_lyndon_by_suffixes(w: &[u8], ord: Order) -> Result<bool> {
    require_non_empty(w)?;
    Ok((1..w.len()).all(|k| ord.compare(w, &w[k..]) == Ordering::Less))
}

/// `w` is primitive and not larger than any of its rotations.
pub fn is_lyndon_by_conjugates(w: &[u8], ord: Order) -> Result<bool> {
    if !is_primitive(w)? {
        return Ok(false);
    }
    let n = w.len();
    let mut rotation = Vec::with_capacity(n);
    for r in 1..n {
        rotation.clear();
        rotation.extend_from_slice(&w[r..]);
        rotation.extend_from_slice(&w[..r]);
        if ord.compare(w, &rotation) == Ordering::Greater {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rotation offset `r` such that `w[r..] w[..r]` is Lyndon under `ord`.
pub fn lyndon_conjugate(w: &[u8], ord: Order) -> Result<usize> {
    if !is_primitive(w)? {
        return Err(Error::NotPrimitive);
    }
    Ok(least_rotation(w, ord))
}

/// Start of the least rotation (two-pointer minimum expression scan).
pub(crate) fn least_rotation(w: &[u8], ord: Order) -> usize {
    let n = w.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = w[(i + k) % n];
        let b = w[(j + k) % n];
        match ord.cmp_symbols(a, b) {
            Ordering::Equal => k += 1,
            Ordering::Greater => {
                i += k + 1;
                if i <= j {
                    i = j + 1;
                }
                k = 0;
            }
            Ordering::Less => {
                j += k + 1;
                if j <= i {
                    j = i + 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}

/// Start of the lexicographically greatest non-empty suffix of `w`.
///
/// Crochemore-Perrin scan; since a proper prefix compares smaller, the
/// greatest suffix is the longest among those sharing its maximal prefix.
pub fn max_suffix(w: &[u8], ord: Order) -> Result<usize> {
    require_non_empty(w)?;
    let n = w.len();
    // `best` is the current candidate, `cand` the challenger, `k` the
    // matched offset and `period` the period of w[best..cand + k].
    let (mut best, mut cand, mut k, mut period) = (0usize, 1usize, 0usize, 1usize);
    while cand + k < n {
        match ord.cmp_symbols(w[cand + k], w[best + k]) {
            Ordering::Less => {
                cand += k + 1;
                k = 0;
                period = cand - best;
            }
            Ordering::Equal => {
                if k + 1 == period {
                    cand += period;
                    k = 0;
                } else {
                    k += 1;
                }
            }
            Ordering::Greater => {
                best = cand;
                cand = best + 1;
                k = 0;
                period = 1;
            }
        }
    }
    Ok(best)
}

/// Start `k` (`1 <= k < |w|`) of the greatest proper suffix of `w`.
pub fn greatest_proper_suffix(w: &[u8], ord: Order) -> Result<usize> {
    if w.len() < 2 {
        return Err(Error::WordTooShort {
            len: w.len(),
            min: 2,
        });
    }
    Ok(1 + max_suffix(&w[1..], ord)?)
}

/// Duval's algorithm. Factors are non-increasing under `ord`.
pub fn lyndon_factorization(w: &[u8], ord: Order) -> Result<Vec<Interval>> {
    require_non_empty(w)?;
    let mut factors = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let (len, repeats) = duval_step(w, i, ord);
        for _ in 0..repeats {
            factors.push(Interval::with_len(i, len));
            i += len;
        }
    }
    Ok(factors)
}

/// Every interval of `w` whose factor is Lyndon under `ord`, by start then
/// end. Each start is scanned once: a factor is Lyndon exactly when the
/// Duval scan from its start has just reset its period to the full length,
/// and no extension survives a descent.
pub fn lyndon_intervals(w: &[u8], ord: Order) -> Vec<Interval> {
    let n = w.len();
    let mut out = Vec::new();
    for start in 0..n {
        out.push(Interval::with_len(start, 1));
        let mut k = start;
        for j in start + 1..n {
            match ord.cmp_symbols(w[k], w[j]) {
                Ordering::Less => {
                    k = start;
                    out.push(Interval { start, end: j });
                }
                Ordering::Equal => k += 1,
                Ordering::Greater => break,
            }
        }
    }
    out
}

/// From `start`, returns the length of the next Lyndon factor and how many
/// consecutive copies of it the factorization emits.
fn duval_step(w: &[u8], start: usize, ord: Order) -> (usize, usize) {
    let n = w.len();
    let (mut j, mut k) = (start + 1, start);
    while j < n {
        match ord.cmp_symbols(w[k], w[j]) {
            Ordering::Less => k = start,
            Ordering::Equal => k += 1,
            Ordering::Greater => break,
        }
        j += 1;
    }
    let len = j - k;
    let repeats = (k - start) / len + 1;
    (len, repeats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{is_border_free, sym};

    fn words(sigma: u8, n: usize) -> impl Iterator<Item = Vec<u8>> {
        let total = (sigma as usize).pow(n as u32);
        (0..total).map(move |mut code| {
            (0..n)
                .map(|_| {
                    let s = (code % sigma as usize) as u8;
                    code /= sigma as usize;
                    s
                })
                .collect()
        })
    }

    #[test]
    fn lyndon_intervals_match_per_factor_test() {
        for sigma in [2u8, 3] {
            for n in 1..=if sigma == 2 { 10 } else { 6 } {
                for w in words(sigma, n) {
                    for ord in Order::BOTH {
                        let mut expected = Vec::new();
                        for i in 0..n {
                            for j in i..n {
                                if is_lyndon_by_suffixes(&w[i..=j], ord).unwrap() {
                                    expected.push(Interval { start: i, end: j });
                                }
                            }
                        }
                        assert_eq!(lyndon_intervals(&w, ord), expected, "{w:?} {ord}");
                    }
                }
            }
        }
    }

    #[test]
    fn lyndon_examples() {
        assert_eq!(is_lyndon(&sym("aab"), Order::Forward), Ok(true));
        assert_eq!(is_lyndon(&sym("aba"), Order::Forward), Ok(false));
        assert_eq!(is_lyndon(&sym("ba"), Order::Reverse), Ok(true));
        assert_eq!(is_lyndon(&sym("ba"), Order::Forward), Ok(false));
        assert_eq!(is_lyndon(&sym("a"), Order::Forward), Ok(true));
        assert_eq!(is_lyndon(&sym("aa"), Order::Forward), Ok(false));
        assert_eq!(is_lyndon(&[], Order::Forward), Err(Error::EmptyWord));
    }

    #[test]
    fn lyndon_characterizations_agree() {
        for sigma in [2u8, 3] {
            let max_n = 12;
            for n in 1..=max_n {
                for w in words(sigma, n) {
                    for ord in Order::BOTH {
                        let by_conj = is_lyndon_by_conjugates(&w, ord).unwrap();
                        assert_eq!(by_conj, is_lyndon_by_suffixes(&w, ord).unwrap(), "{w:?}");
                        assert_eq!(by_conj, is_lyndon(&w, ord).unwrap(), "{w:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn lyndon_words_are_border_free() {
        for n in 1..=14 {
            for w in words(2, n) {
                if is_lyndon(&w, Order::Forward).unwrap() {
                    assert!(is_border_free(&w).unwrap(), "{w:?}");
                }
            }
        }
    }

    #[test]
    fn lyndon_conjugate_examples() {
        assert_eq!(lyndon_conjugate(&sym("ba"), Order::Forward), Ok(1));
        assert_eq!(lyndon_conjugate(&sym("bab"), Order::Forward), Ok(1));
        assert_eq!(lyndon_conjugate(&sym("aab"), Order::Forward), Ok(0));
        assert_eq!(lyndon_conjugate(&sym("aab"), Order::Reverse), Ok(2));
        assert_eq!(
            lyndon_conjugate(&sym("abab"), Order::Forward),
            Err(Error::NotPrimitive)
        );
    }

    #[test]
    fn lyndon_conjugate_is_lyndon() {
        for n in 1..=10 {
            for w in words(3, n) {
                if !is_primitive(&w).unwrap() {
                    continue;
                }
                for ord in Order::BOTH {
                    let r = lyndon_conjugate(&w, ord).unwrap();
                    let rot: Vec<u8> = w[r..].iter().chain(&w[..r]).copied().collect();
                    assert!(is_lyndon_by_suffixes(&rot, ord).unwrap(), "{w:?} {ord}");
                }
            }
        }
    }

    #[test]
    fn greatest_proper_suffix_examples() {
        assert_eq!(greatest_proper_suffix(&sym("babab"), Order::Forward), Ok(2));
        assert_eq!(greatest_proper_suffix(&sym("aaa"), Order::Forward), Ok(1));
        assert_eq!(greatest_proper_suffix(&sym("ab"), Order::Reverse), Ok(1));
        assert_eq!(
            greatest_proper_suffix(&sym("abaaba"), Order::Forward),
            Ok(1)
        );
        assert_eq!(
            greatest_proper_suffix(&sym("abaaba"), Order::Reverse),
            Ok(2)
        );
        assert_eq!(
            greatest_proper_suffix(&sym("a"), Order::Forward),
            Err(Error::WordTooShort { len: 1, min: 2 })
        );
    }

    fn greatest_proper_suffix_naive(w: &[u8], ord: Order) -> usize {
        (1..w.len())
            .max_by(|&a, &b| ord.compare(&w[a..], &w[b..]))
            .unwrap()
    }

    #[test]
    fn greatest_proper_suffix_matches_all_suffix_comparison() {
        for sigma in [2u8, 3] {
            for n in 2..=(if sigma == 2 { 13 } else { 8 }) {
                for w in words(sigma, n) {
                    for ord in Order::BOTH {
                        let k = greatest_proper_suffix(&w, ord).unwrap();
                        assert_eq!(k, greatest_proper_suffix_naive(&w, ord), "{w:?} {ord}");
                        for other in 1..w.len() {
                            if other != k {
                                assert_eq!(ord.compare(&w[k..], &w[other..]), Ordering::Greater);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lyndon_factorization_examples() {
        let iv = |s, e| Interval::new(s, e).unwrap();
        assert_eq!(
            lyndon_factorization(&sym("abab"), Order::Forward),
            Ok(vec![iv(0, 1), iv(2, 3)])
        );
        assert_eq!(
            lyndon_factorization(&sym("bbaa"), Order::Forward),
            Ok(vec![iv(0, 0), iv(1, 1), iv(2, 2), iv(3, 3)])
        );
        assert_eq!(
            lyndon_factorization(&sym("aababb"), Order::Forward),
            Ok(vec![iv(0, 5)])
        );
    }

    #[test]
    fn lyndon_factorization_properties() {
        for n in 1..=11 {
            for w in words(3, n.min(8)).chain(words(2, n)) {
                for ord in Order::BOTH {
                    let factors = lyndon_factorization(&w, ord).unwrap();
                    let mut next = 0;
                    for f in &factors {
                        assert_eq!(f.start, next);
                        next = f.end + 1;
                        assert!(is_lyndon_by_suffixes(&w[f.start..=f.end], ord).unwrap());
                    }
                    assert_eq!(next, w.len());
                    for pair in factors.windows(2) {
                        let a = &w[pair[0].start..=pair[0].end];
                        let b = &w[pair[1].start..=pair[1].end];
                        assert_ne!(ord.compare(a, b), Ordering::Less, "{w:?}");
                    }
                }
            }
        }
    }
}
