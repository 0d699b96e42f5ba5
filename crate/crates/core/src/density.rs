//! Counting Lroots and Oroots inside position intervals.
//!
//! An Lroot is "in" an interval when its occurrence interval is contained in
//! it; the run itself may extend outside.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::runs::{RootOccurrence, RunStructure};
use crate::word::{lyndon_intervals, occurrences, to_text, Alphabet, Interval, Order, Word};

/// Number of root occurrences inside every interval `[i..j]` of a word,
/// from a 2-D suffix/prefix sum over `(start, end)` pairs.
#[derive(Debug, Clone)]
pub struct IntervalCounts {
    n: usize,
    table: Vec<u32>,
}

impl IntervalCounts {
    pub fn new(n: usize, roots: impl IntoIterator<Item = Interval>) -> Self {
        let mut table = vec![0u32; n * n];
        for iv in roots {
            table[iv.start * n + iv.end] += 1;
        }
        // table[i][j] = #roots with start >= i and end <= j.
        for i in (0..n).rev() {
            for j in 0..n {
                let mut v = table[i * n + j];
                if i + 1 < n {
                    v += table[(i + 1) * n + j];
                }
                if j > 0 {
                    v += table[i * n + j - 1];
                }
                if i + 1 < n && j > 0 {
                    v -= table[(i + 1) * n + j - 1];
                }
                table[i * n + j] = v;
            }
        }
        IntervalCounts { n, table }
    }

    #[inline]
    pub fn get(&self, iv: Interval) -> usize {
        debug_assert!(iv.end < self.n);
        self.table[iv.start * self.n + iv.end] as usize
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}

/// Iterates all intervals of a word of length `n`, by start then end.
pub fn all_intervals(n: usize) -> impl Iterator<Item = Interval> {
    (0..n).flat_map(move |start| (start..n).map(move |end| Interval { start, end }))
}

fn check_interval(w: &Word, iv: Interval) -> Result<()> {
    iv.check_within(w.len())
}

pub fn count_lroots_in(w: &Word, iv: Interval) -> Result<usize> {
    check_interval(w, iv)?;
    let rs = RunStructure::of(w.symbols());
    Ok(rs
        .lroots
        .iter()
        .filter(|r| iv.contains(&r.interval))
        .count())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityReport {
    pub word: String,
    pub start: usize,
    pub end: usize,
    pub count: usize,
    pub ratio: f64,
    pub factor: String,
}

impl DensityReport {
    pub fn interval(&self) -> Interval {
        Interval {
            start: self.start,
            end: self.end,
        }
    }

    fn new(w: &[u8], iv: Interval, count: usize) -> Self {
        DensityReport {
            word: to_text(w),
            start: iv.start,
            end: iv.end,
            count,
            ratio: count as f64 / iv.len() as f64,
            factor: to_text(&w[iv.start..=iv.end]),
        }
    }
}

/// Compares `(count, interval)` candidates: higher ratio wins, then higher
/// count, then the earlier start.
pub(crate) fn density_cmp(a: (usize, Interval), b: (usize, Interval)) -> Ordering {
    let ratio = (a.0 * b.1.len()).cmp(&(b.0 * a.1.len()));
    ratio.then(a.0.cmp(&b.0)).then(b.1.start.cmp(&a.1.start))
}

pub fn lroot_report(w: &Word, iv: Interval) -> Result<DensityReport> {
    let count = count_lroots_in(w, iv)?;
    Ok(DensityReport::new(w.symbols(), iv, count))
}

/// Interval of highest Lroot density.
pub fn max_lroot_density(w: &Word) -> Result<DensityReport> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let rs = RunStructure::of(w.symbols());
    let counts = IntervalCounts::new(w.len(), rs.lroots.iter().map(|r| r.interval));
    let (count, iv) = all_intervals(w.len())
        .map(|iv| (counts.get(iv), iv))
        .max_by(|&a, &b| density_cmp(a, b))
        .unwrap();
    Ok(DensityReport::new(w.symbols(), iv, count))
}

/// `(ab)^k a (ab)^k b (ab)^k b` with the interval `[2k..4k+1]`, whose factor
/// `a (ab)^k b` contains `2(k+1)` Lroots.
pub fn witness_word(k: usize) -> Result<(Word, Interval)> {
    if k < 1 {
        return Err(Error::InvalidParameter(format!(
            "witness index must be at least 1, got {k}"
        )));
    }
    let ab = [0u8, 1].repeat(k);
    let mut symbols = Vec::with_capacity(6 * k + 3);
    symbols.extend_from_slice(&ab);
    symbols.push(0);
    symbols.extend_from_slice(&ab);
    symbols.push(1);
    symbols.extend_from_slice(&ab);
    symbols.push(1);
    let word = Word::new(symbols, Alphabet::BINARY)?;
    Ok((word, Interval::new(2 * k, 4 * k + 1)?))
}

/// `x (xy)^m y` with `x < y` and length at least 4.
pub fn is_extremal_form(factor: &[u8]) -> bool {
    let l = factor.len();
    if l < 4 || !l.is_multiple_of(2) {
        return false;
    }
    let (x, y) = (factor[0], factor[l - 1]);
    x < y
        && factor[1..l - 1]
            .iter()
            .enumerate()
            .all(|(t, &s)| s == if t % 2 == 0 { x } else { y })
}

fn require_binary(w: &Word) -> Result<()> {
    if w.is_binary() {
        Ok(())
    } else {
        Err(Error::NotBinary)
    }
}

/// On binary words an Oroot is attributed to the forward order when it
/// starts with `a` and to the reverse order when it starts with `b`.
#[inline]
pub fn binary_oroot_order(w: &[u8], root: &RootOccurrence) -> Order {
    if w[root.interval.start] == 0 {
        Order::Forward
    } else {
        Order::Reverse
    }
}

pub fn count_oroots_same_order_in(w: &Word, iv: Interval, ord: Order) -> Result<usize> {
    require_binary(w)?;
    check_interval(w, iv)?;
    let rs = RunStructure::of(w.symbols());
    Ok(rs
        .oroots
        .iter()
        .filter(|o| iv.contains(&o.interval) && binary_oroot_order(w.symbols(), o) == ord)
        .count())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonUnaryOrootBound {
    pub count: usize,
    pub ab: usize,
    pub ba: usize,
}

impl NonUnaryOrootBound {
    pub fn bound(&self) -> usize {
        self.ab.min(self.ba)
    }

    pub fn holds(&self) -> bool {
        self.count <= self.bound()
    }
}

/// Non-unary same-order Oroots inside `iv`, against `min(|f|_ab, |f|_ba)`
/// for the factor `f` at `iv`.
pub fn count_nonunary_oroots_in(w: &Word, iv: Interval, ord: Order) -> Result<NonUnaryOrootBound> {
    require_binary(w)?;
    check_interval(w, iv)?;
    let rs = RunStructure::of(w.symbols());
    let count = rs
        .oroots
        .iter()
        .filter(|o| {
            o.run.period > 1
                && iv.contains(&o.interval)
                && binary_oroot_order(w.symbols(), o) == ord
        })
        .count();
    let f = w.factor(iv)?;
    Ok(NonUnaryOrootBound {
        count,
        ab: occurrences(f, &[0, 1])?,
        ba: occurrences(f, &[1, 0])?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnaryOrootBound {
    pub count: usize,
    /// Maximal unary blocks of the factor, any length.
    pub blocks: usize,
    /// Maximal unary blocks of length at least 2.
    pub long_blocks: usize,
}

impl UnaryOrootBound {
    pub fn holds_counting_all_blocks(&self) -> bool {
        self.count <= self.blocks + 1
    }

    pub fn holds_counting_long_blocks(&self) -> bool {
        self.count <= self.long_blocks + 1
    }
}

/// Maximal unary blocks of `f` as `(count, count of length >= 2)`.
pub fn unary_blocks(f: &[u8]) -> (usize, usize) {
    let mut all = 0;
    let mut long = 0;
    for block in f.chunk_by(|a, b| a == b) {
        all += 1;
        if block.len() >= 2 {
            long += 1;
        }
    }
    (all, long)
}

/// Oroots of period-1 runs inside `iv`, with both readings of the block
/// count bound.
pub fn count_unary_oroots_in(w: &Word, iv: Interval) -> Result<UnaryOrootBound> {
    require_binary(w)?;
    check_interval(w, iv)?;
    let rs = RunStructure::of(w.symbols());
    let count = rs
        .oroots
        .iter()
        .filter(|o| o.run.period == 1 && iv.contains(&o.interval))
        .count();
    let (blocks, long_blocks) = unary_blocks(w.factor(iv)?);
    Ok(UnaryOrootBound {
        count,
        blocks,
        long_blocks,
    })
}

/// How an Oroot that leaves a Lyndon interval sits relative to its Lroot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Displacement {
    /// The Lroot ends the interval and the Oroot starts right after it.
    After,
    /// The Lroot starts the interval and the Oroot starts before it.
    Before,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisplacedRoot {
    pub lyndon_interval: Interval,
    pub lroot: Interval,
    pub oroot: Interval,
    pub case: Displacement,
}

/// Classifies every run whose Lroot lies in a forward-Lyndon interval while
/// its Oroot starts outside it. Fails on an unclassifiable pair or on an
/// interval with two runs of the `After` kind.
pub fn check_lroot_oroot_displacement(w: &Word) -> Result<Vec<DisplacedRoot>> {
    let s = w.symbols();
    let rs = RunStructure::of(s);
    displacement_of(s, &rs)
}

pub(crate) fn displacement_of(s: &[u8], rs: &RunStructure) -> Result<Vec<DisplacedRoot>> {
    let mut out = Vec::new();
    if rs.is_empty() {
        return Ok(out);
    }
    for iv in lyndon_intervals(s, Order::Forward) {
        let mut after = 0;
        for (l, o) in rs.lroots.iter().zip(&rs.oroots) {
            if !iv.contains(&l.interval) || iv.contains_pos(o.interval.start) {
                continue;
            }
            let case = if l.interval.end == iv.end && o.interval.start == iv.end + 1 {
                Displacement::After
            } else if l.interval.start == iv.start && o.interval.start < iv.start {
                Displacement::Before
            } else {
                return Err(Error::InvariantViolation(format!(
                    "run {}: Lroot {} in Lyndon interval {} but Oroot {} is neither right after nor before it",
                    l.run, l.interval, iv, o.interval
                )));
            };
            if case == Displacement::After {
                after += 1;
                if after > 1 {
                    return Err(Error::InvariantViolation(format!(
                        "two runs in Lyndon interval {iv} have their Oroot right after it"
                    )));
                }
            }
            out.push(DisplacedRoot {
                lyndon_interval: iv,
                lroot: l.interval,
                oroot: o.interval,
                case,
            });
        }
    }
    Ok(out)
}

/// Pairs of same-order Oroots that overlap without one containing the other.
pub fn oroot_overlap_violations(rs: &RunStructure) -> Vec<(RootOccurrence, RootOccurrence)> {
    let mut bad = Vec::new();
    for (a_idx, a) in rs.oroots.iter().enumerate() {
        for b in &rs.oroots[a_idx + 1..] {
            if a.order != b.order || a.interval == b.interval {
                continue;
            }
            if let Some(overlap) = a.interval.intersection(&b.interval) {
                let shorter = if a.interval.len() <= b.interval.len() {
                    a.interval
                } else {
                    b.interval
                };
                if overlap != shorter {
                    bad.push((*a, *b));
                }
            }
        }
    }
    bad
}

/// True when any two overlapping same-order Oroots overlap exactly on the
/// shorter one.
pub fn check_oroot_overlap(w: &Word) -> bool {
    oroot_overlap_violations(&RunStructure::of(w.symbols())).is_empty()
}

/// Shortest interval covering every run whose Lroot lies in `iv`, or `None`
/// when there is no such run.
pub fn context_interval(w: &Word, iv: Interval) -> Result<Option<Interval>> {
    check_interval(w, iv)?;
    let rs = RunStructure::of(w.symbols());
    Ok(rs
        .lroots
        .iter()
        .filter(|l| iv.contains(&l.interval))
        .map(|l| l.run.interval())
        .reduce(|a, b| Interval {
            start: a.start.min(b.start),
            end: a.end.max(b.end),
        })
        .map(|runs| Interval {
            start: runs.start.min(iv.start),
            end: runs.end.max(iv.end),
        }))
}
