//! Suffix array, inverse suffix array and longest-common-extension queries.
//!
//! The suffix array is built by prefix doubling with radix passes, which is
//! O(n log n). The LCP array comes from Kasai's algorithm and LCE queries are
//! answered with a sparse table over it.

mod rmq;

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::word::{Order, Word};

pub use rmq::SparseTable;

#[derive(Debug, Clone)]
pub struct SuffixIndex<'w> {
    text: &'w [u8],
    order: Order,
    sa: Vec<usize>,
    rank: Vec<usize>,
    lcp: SparseTable,
}

impl<'w> SuffixIndex<'w> {
    pub fn build(w: &'w Word, order: Order) -> Result<Self> {
        Self::from_symbols(w.symbols(), order)
    }

    pub fn from_symbols(text: &'w [u8], order: Order) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::EmptyWord);
        }
        let keys: Vec<u8> = match order {
            Order::Forward => text.to_vec(),
            Order::Reverse => text.iter().map(|&s| u8::MAX - s).collect(),
        };
        let sa = suffix_array(&keys);
        let mut rank = vec![0usize; text.len()];
        for (r, &pos) in sa.iter().enumerate() {
            rank[pos] = r;
        }
        let lcp = kasai(text, &sa, &rank);
        Ok(SuffixIndex {
            text,
            order,
            sa,
            rank,
            lcp: SparseTable::new(&lcp),
        })
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn text(&self) -> &'w [u8] {
        self.text
    }

    pub fn suffix_array(&self) -> &[usize] {
        &self.sa
    }

    /// Inverse suffix array.
    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    fn check(&self, pos: usize) -> Result<()> {
        if pos >= self.len() {
            Err(Error::PositionOutOfRange {
                pos,
                len: self.len(),
            })
        } else {
            Ok(())
        }
    }

    /// Length of the longest common prefix of the suffixes at `i` and `j`.
    pub fn lce(&self, i: usize, j: usize) -> Result<usize> {
        self.check(i)?;
        self.check(j)?;
        Ok(self.lce_unchecked(i, j))
    }

    #[inline]
    pub(crate) fn lce_unchecked(&self, i: usize, j: usize) -> usize {
        if i == j {
            return self.len() - i;
        }
        let (a, b) = (self.rank[i], self.rank[j]);
        let (lo, hi) = if a < b { (a + 1, b) } else { (b + 1, a) };
        self.lcp.min(lo, hi) as usize
    }

    pub fn compare_suffixes(&self, i: usize, j: usize) -> Result<Ordering> {
        self.check(i)?;
        self.check(j)?;
        Ok(self.rank[i].cmp(&self.rank[j]))
    }

    /// For each position `i`, the length of the longest Lyndon word (under
    /// this index's order) starting at `i`. It ends right before the next
    /// suffix that is smaller than the suffix at `i`.
    pub fn lyndon_array(&self) -> Vec<usize> {
        let n = self.len();
        let mut lengths = vec![0usize; n];
        let mut stack: Vec<usize> = Vec::new();
        for j in 0..n {
            while let Some(&top) = stack.last() {
                if self.rank[j] < self.rank[top] {
                    lengths[top] = j - top;
                    stack.pop();
                } else {
                    break;
                }
            }
            stack.push(j);
        }
        for top in stack {
            lengths[top] = n - top;
        }
        lengths
    }
}

/// Prefix doubling with two stable counting-sort passes per round. Suffixes
/// that run out of symbols sort first, so a proper prefix precedes its
/// extensions.
fn suffix_array(keys: &[u8]) -> Vec<usize> {
    let n = keys.len();
    let mut sa: Vec<usize> = (0..n).collect();
    sa.sort_by_key(|&i| keys[i]);
    let mut rank = vec![0usize; n];
    for w in 1..n {
        rank[sa[w]] = rank[sa[w - 1]] + usize::from(keys[sa[w]] != keys[sa[w - 1]]);
    }
    let mut buckets = vec![0usize; n + 1];
    let mut by_second = vec![0usize; n];
    let mut next_rank = vec![0usize; n];
    let mut k = 1;
    while k < n && rank[sa[n - 1]] < n - 1 {
        // Order by second key: suffixes without a second half first.
        let mut fill = 0;
        for i in n - k..n {
            by_second[fill] = i;
            fill += 1;
        }
        for &pos in &sa {
            if pos >= k {
                by_second[fill] = pos - k;
                fill += 1;
            }
        }
        // Stable counting sort on the first key.
        buckets.iter_mut().for_each(|b| *b = 0);
        for &r in &rank {
            buckets[r + 1] += 1;
        }
        for r in 1..=n {
            buckets[r] += buckets[r - 1];
        }
        for &pos in &by_second {
            let slot = &mut buckets[rank[pos]];
            sa[*slot] = pos;
            *slot += 1;
        }
        let second = |i: usize| if i + k < n { Some(rank[i + k]) } else { None };
        next_rank[sa[0]] = 0;
        for w in 1..n {
            let (a, b) = (sa[w - 1], sa[w]);
            let same = rank[a] == rank[b] && second(a) == second(b);
            next_rank[b] = next_rank[a] + usize::from(!same);
        }
        std::mem::swap(&mut rank, &mut next_rank);
        k *= 2;
    }
    sa
}

/// `lcp[r]` is the LCP of suffixes `sa[r - 1]` and `sa[r]`; `lcp[0] = 0`.
fn kasai(text: &[u8], sa: &[usize], rank: &[usize]) -> Vec<u32> {
    let n = text.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        if rank[i] == 0 {
            h = 0;
            continue;
        }
        let j = sa[rank[i] - 1];
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[rank[i]] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::sym;

    fn naive_sa(w: &[u8], ord: Order) -> Vec<usize> {
        let mut sa: Vec<usize> = (0..w.len()).collect();
        sa.sort_by(|&a, &b| ord.compare(&w[a..], &w[b..]));
        sa
    }

    fn naive_lce(w: &[u8], i: usize, j: usize) -> usize {
        w[i..]
            .iter()
            .zip(&w[j..])
            .take_while(|(a, b)| a == b)
            .count()
    }

    #[test]
    fn build_examples() {
        let w = sym("abaab");
        let idx = SuffixIndex::from_symbols(&w, Order::Forward).unwrap();
        assert_eq!(idx.suffix_array(), &[2, 3, 0, 4, 1]);
        let w = sym("aaa");
        let idx = SuffixIndex::from_symbols(&w, Order::Forward).unwrap();
        assert_eq!(idx.suffix_array(), &[2, 1, 0]);
        let w = sym("ab");
        let idx = SuffixIndex::from_symbols(&w, Order::Reverse).unwrap();
        assert_eq!(idx.suffix_array(), &[1, 0]);
        assert!(SuffixIndex::from_symbols(&[], Order::Forward).is_err());
    }

    #[test]
    fn lce_examples() {
        let w = sym("abaab");
        let idx = SuffixIndex::from_symbols(&w, Order::Forward).unwrap();
        assert_eq!(idx.lce(0, 3), Ok(2));
        assert_eq!(idx.lce(2, 2), Ok(3));
        assert_eq!(
            idx.lce(0, 5),
            Err(Error::PositionOutOfRange { pos: 5, len: 5 })
        );
        let w = sym("aaaa");
        let idx = SuffixIndex::from_symbols(&w, Order::Forward).unwrap();
        assert_eq!(idx.lce(0, 2), Ok(2));
    }

    #[test]
    fn compare_examples() {
        let w = sym("abaab");
        let idx = SuffixIndex::from_symbols(&w, Order::Forward).unwrap();
        assert_eq!(idx.compare_suffixes(1, 4), Ok(Ordering::Greater));
        assert_eq!(idx.compare_suffixes(3, 3), Ok(Ordering::Equal));
        let w = sym("abab");
        let idx = SuffixIndex::from_symbols(&w, Order::Forward).unwrap();
        assert_eq!(idx.compare_suffixes(0, 2), Ok(Ordering::Greater));
    }

    #[test]
    fn agrees_with_naive_sort_exhaustively() {
        for sigma in [2usize, 3] {
            let max_n = if sigma == 2 { 12 } else { 8 };
            for n in 1..=max_n {
                for mut code in 0..sigma.pow(n as u32) {
                    let w: Vec<u8> = (0..n)
                        .map(|_| {
                            let s = (code % sigma) as u8;
                            code /= sigma;
                            s
                        })
                        .collect();
                    for ord in Order::BOTH {
                        let idx = SuffixIndex::from_symbols(&w, ord).unwrap();
                        assert_eq!(idx.suffix_array(), naive_sa(&w, ord).as_slice());
                        for i in 0..n {
                            for j in 0..n {
                                assert_eq!(idx.lce_unchecked(i, j), naive_lce(&w, i, j));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lyndon_array_matches_definition() {
        use crate::word::is_lyndon_by_suffixes;
        for n in 1..=10usize {
            for code in 0u32..(1 << n) {
                let w: Vec<u8> = (0..n).map(|i| ((code >> i) & 1) as u8).collect();
                for ord in Order::BOTH {
                    let idx = SuffixIndex::from_symbols(&w, ord).unwrap();
                    let lam = idx.lyndon_array();
                    for i in 0..n {
                        let longest = (1..=n - i)
                            .rev()
                            .find(|&l| is_lyndon_by_suffixes(&w[i..i + l], ord).unwrap())
                            .unwrap();
                        assert_eq!(lam[i], longest, "{w:?} {ord} at {i}");
                    }
                }
            }
        }
    }
}
