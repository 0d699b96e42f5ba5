use crate::error::{Error, Result};

use super::require_non_empty;

/// Failure function: `border[k]` is the length of the longest proper border
/// of `w[..k]`, for `k` in `0..=n`.
pub fn border_table(w: &[u8]) -> Vec<usize> {
    let n = w.len();
    let mut border = vec![0usize; n + 1];
    let mut b = 0usize;
    for k in 1..n {
        while b > 0 && w[k] != w[b] {
            b = border[b];
        }
        if w[k] == w[b] {
            b += 1;
        }
        border[k + 1] = b;
    }
    border
}

/// Smallest `p >= 1` with `w[i] == w[i + p]` wherever both are defined.
pub fn smallest_period(w: &[u8]) -> Result<usize> {
    require_non_empty(w)?;
    Ok(w.len() - border_table(w)[w.len()])
}

/// Direct scan over candidate periods; reference for [`smallest_period`].
pub fn smallest_period_naive(w: &[u8]) -> Result<usize> {
    require_non_empty(w)?;
    Ok((1..=w.len()).find(|&p| has_period(w, p)).unwrap())
}

#[inline]
pub fn has_period(w: &[u8], p: usize) -> bool {
    p >= 1 && w.iter().zip(w.iter().skip(p)).all(|(a, b)| a == b)
}

/// A word is primitive when it is not `u^k` for some shorter `u`.
pub fn is_primitive(w: &[u8]) -> Result<bool> {
    let p = smallest_period(w)?;
    Ok(p == w.len() || !w.len().is_multiple_of(p))
}

pub fn is_border_free(w: &[u8]) -> Result<bool> {
    require_non_empty(w)?;
    Ok(border_table(w)[w.len()] == 0)
}

/// Number of possibly overlapping occurrences of `pattern` in `w`.
pub fn occurrences(w: &[u8], pattern: &[u8]) -> Result<usize> {
    if pattern.is_empty() {
        return Err(Error::InvalidParameter("empty pattern".into()));
    }
    if pattern.len() > w.len() {
        return Ok(0);
    }
    Ok(w.windows(pattern.len())
        .filter(|win| *win == pattern)
        .count())
}

/// Outcome of checking the periodicity lemma on one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FineWilf {
    /// `w` has periods `p`, `q`, is long enough, and has period `gcd(p, q)`.
    Holds,
    /// Preconditions met but `gcd(p, q)` is not a period.
    Violated,
    /// `w` lacks one of the periods or is shorter than `p + q`.
    PreconditionFailed,
}

/// Weak periodicity lemma: periods `p` and `q` with `|w| >= p + q` imply
/// period `gcd(p, q)`.
pub fn fine_wilf_holds(w: &[u8], p: usize, q: usize) -> FineWilf {
    if p == 0 || q == 0 || w.len() < p + q || !has_period(w, p) || !has_period(w, q) {
        return FineWilf::PreconditionFailed;
    }
    if has_period(w, gcd(p, q)) {
        FineWilf::Holds
    } else {
        FineWilf::Violated
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::sym;

    #[test]
    fn smallest_period_examples() {
        assert_eq!(smallest_period(&sym("abab")), Ok(2));
        assert_eq!(smallest_period(&sym("aaaa")), Ok(1));
        // p = 1, 2 fail; p = 3 holds since "ab" is a prefix of "aba".
        assert_eq!(smallest_period_naive(&sym("abaab")), Ok(3));
        assert_eq!(smallest_period(&sym("abaab")), Ok(3));
        assert_eq!(smallest_period(&sym("aab")), Ok(3));
        assert_eq!(smallest_period(&[]), Err(Error::EmptyWord));
    }

    #[test]
    fn smallest_period_matches_naive_on_all_binary_words_up_to_16() {
        for n in 1..=16usize {
            for code in 0u32..(1 << n) {
                let w: Vec<u8> = (0..n).map(|i| ((code >> i) & 1) as u8).collect();
                assert_eq!(smallest_period(&w), smallest_period_naive(&w), "{w:?}");
            }
        }
    }

    #[test]
    fn primitivity() {
        assert_eq!(is_primitive(&sym("abab")), Ok(false));
        assert_eq!(is_primitive(&sym("aab")), Ok(true));
        assert_eq!(is_primitive(&sym("a")), Ok(true));
        assert_eq!(is_primitive(&sym("aa")), Ok(false));
        assert_eq!(is_primitive(&sym("abaab")), Ok(true));
        assert!(is_primitive(&[]).is_err());
    }

    #[test]
    fn border_freeness() {
        assert_eq!(is_border_free(&sym("ab")), Ok(true));
        assert_eq!(is_border_free(&sym("aba")), Ok(false));
        assert_eq!(is_border_free(&sym("aab")), Ok(true));
        assert_eq!(is_border_free(&sym("a")), Ok(true));
        assert!(is_border_free(&[]).is_err());
    }

    #[test]
    fn occurrence_counts() {
        assert_eq!(occurrences(&sym("aaa"), &sym("aa")), Ok(2));
        assert_eq!(occurrences(&sym("ababab"), &sym("ab")), Ok(3));
        assert_eq!(occurrences(&sym("abaababb"), &sym("ba")), Ok(2));
        assert_eq!(occurrences(&sym("ab"), &sym("abc")), Ok(0));
        assert!(occurrences(&sym("ab"), &[]).is_err());
    }

    #[test]
    fn fine_wilf_examples() {
        // Periods 5 and 8 both hold but 11 < 13.
        let fib = sym("abaababaaba");
        assert!(has_period(&fib, 5) && has_period(&fib, 8));
        assert_eq!(fine_wilf_holds(&fib, 5, 8), FineWilf::PreconditionFailed);
        assert_eq!(
            fine_wilf_holds(&sym("aaaa"), 2, 3),
            FineWilf::PreconditionFailed
        );
        assert_eq!(fine_wilf_holds(&sym("aaaaa"), 2, 3), FineWilf::Holds);
        assert_eq!(fine_wilf_holds(&sym("abababab"), 2, 4), FineWilf::Holds);
        assert_eq!(
            fine_wilf_holds(&sym("abaab"), 2, 3),
            FineWilf::PreconditionFailed
        );
    }
}
