use std::cell::OnceCell;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::critical::{check_square_lemma, critical_from_orderings, local_periods};
use crate::density::{
    density_cmp, displacement_of, is_extremal_form, oroot_overlap_violations, unary_blocks,
    IntervalCounts,
};
use crate::error::{Error, Result};
use crate::runs::{count_cubic, RunStructure};
use crate::word::{
    is_border_free, is_lyndon, lyndon_intervals, smallest_period, to_text, Interval, Order,
};

/// Whether a failing check refutes a proven statement or an open one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckClass {
    Theorem,
    Conjecture,
}

macro_rules! checks {
    ($($variant:ident => $name:literal, $class:ident, $about:literal;)*) => {
        /// Named per-word checks a sweep can run.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum Check {
            $(
                #[serde(rename = $name)]
                $variant,
            )*
        }

        impl Check {
            pub const ALL: &'static [Check] = &[$(Check::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Check::$variant => $name,)*
                }
            }

            pub fn class(self) -> CheckClass {
                match self {
                    $(Check::$variant => CheckClass::$class,)*
                }
            }

            pub fn about(self) -> &'static str {
                match self {
                    $(Check::$variant => $about,)*
                }
            }
        }
    };
}

checks! {
    RunsLtN => "runs-lt-n", Theorem,
        "fewer runs than the word length";
    CubicRuns => "cubic-runs", Theorem,
        "runs < n - cubic runs, and cubic runs < n/2";
    AssignDistinct => "assign-distinct", Theorem,
        "assigned positions are positive and pairwise distinct";
    RootStructure => "root-structure", Theorem,
        "Lroot/Oroot placement, Lyndon-ness, distinct Oroot starts, assigned position = Oroot start";
    CriticalCut => "critical-cut", Theorem,
        "local periods <= period, a critical cut in 1..=p, the later greatest suffix start is critical";
    SquareCritical => "square-critical", Theorem,
        "for x = vu with uv border-free, cut |v| or |vuv| of x^2 is critical";
    LrootDensity => "lroot-density", Conjecture,
        "every interval holds at most as many Lroots as its length";
    LrootExtremalShape => "lroot-extremal-shape", Conjecture,
        "saturated intervals of length >= 4 read x(xy)^m y; lengths 1, 2, 3 hold at most 1, 1, 3 Lroots";
    LyndonLrootBound => "lyndon-lroot-bound", Theorem,
        "a Lyndon interval of length l holds at most 3l/2 Lroots";
    OrootSameOrder => "oroot-same-order", Theorem,
        "binary: an interval of length l holds at most (l-1)/2 Oroots starting with the same letter";
    OrootNonunary => "oroot-nonunary", Theorem,
        "binary: non-unary same-letter Oroots in f number at most min(|f|_ab, |f|_ba)";
    OrootUnary => "oroot-unary", Theorem,
        "binary: unary Oroots in f number at most one more than the unary blocks of f (both block readings)";
    LrootOrootDisplacement => "lroot-oroot-displacement", Theorem,
        "an Oroot leaving a Lyndon interval sits right after it or before it, at most one right after";
    OrootOverlap => "oroot-overlap", Theorem,
        "overlapping same-order Oroots overlap on the shorter one";
    LyndonIntervalMax => "lyndon-interval-max", Theorem,
        "the highest Lroot density is reached on a Lyndon interval";
}

impl Check {
    /// Checks defined only on words over `a` and `b`.
    pub fn binary_only(self) -> bool {
        matches!(
            self,
            Check::OrootSameOrder | Check::OrootNonunary | Check::OrootUnary
        )
    }

    pub(crate) fn uses_lroot_counts(self) -> bool {
        matches!(
            self,
            Check::LrootDensity
                | Check::LrootExtremalShape
                | Check::LyndonLrootBound
                | Check::LyndonIntervalMax
        )
    }

    pub fn applies_to(self, w: &[u8]) -> bool {
        !self.binary_only() || w.iter().all(|&s| s < 2)
    }

    /// Parses `all` or a comma separated list of names.
    pub fn parse_list(text: &str) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend_from_slice(Check::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::UnknownCheck(text.to_string()));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A word on which a check failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub check: Check,
    pub word: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interval: Option<Interval>,
    pub detail: String,
}

impl Violation {
    fn key(&self) -> (usize, &str, Option<Interval>, &str) {
        (self.word.len(), &self.word, self.interval, &self.detail)
    }
}

/// Shorter words first, then lexicographic.
impl Ord for Violation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key()
            .cmp(&other.key())
            .then(self.check.cmp(&other.check))
    }
}

impl PartialOrd for Violation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Per-word analysis shared by all checks.
pub(crate) struct WordContext<'a> {
    pub w: &'a [u8],
    pub rs: RunStructure,
    lroot_counts: OnceCell<IntervalCounts>,
    lyndon: OnceCell<Vec<Interval>>,
}

impl<'a> WordContext<'a> {
    pub fn new(w: &'a [u8]) -> Self {
        WordContext {
            w,
            rs: RunStructure::of(w),
            lroot_counts: OnceCell::new(),
            lyndon: OnceCell::new(),
        }
    }

    pub fn lroot_counts(&self) -> &IntervalCounts {
        self.lroot_counts.get_or_init(|| {
            IntervalCounts::new(self.w.len(), self.rs.lroots.iter().map(|r| r.interval))
        })
    }

    pub fn lyndon_intervals(&self) -> &[Interval] {
        self.lyndon
            .get_or_init(|| lyndon_intervals(self.w, Order::Forward))
    }

    fn all_intervals(&self) -> impl Iterator<Item = Interval> {
        crate::density::all_intervals(self.w.len())
    }

    /// Interval of highest Lroot density over `candidates`.
    pub fn densest(&self, candidates: impl Iterator<Item = Interval>) -> Option<(usize, Interval)> {
        let counts = self.lroot_counts();
        candidates
            .map(|iv| (counts.get(iv), iv))
            .max_by(|&a, &b| density_cmp(a, b))
    }
}

type Finding = Option<(Option<Interval>, String)>;

fn fail(detail: String) -> Finding {
    Some((None, detail))
}

fn fail_at(iv: Interval, detail: String) -> Finding {
    Some((Some(iv), detail))
}

pub(crate) fn evaluate(check: Check, ctx: &WordContext) -> Option<Violation> {
    let finding = match check {
        Check::RunsLtN => runs_lt_n(ctx),
        Check::CubicRuns => cubic_runs(ctx),
        Check::AssignDistinct => crate::runs::check_distinct(&ctx.rs.assignments)
            .err()
            .and_then(|e| fail(e.to_string())),
        Check::RootStructure => root_structure(ctx),
        Check::CriticalCut => critical_cut(ctx),
        Check::SquareCritical => square_critical(ctx),
        Check::LrootDensity => lroot_density(ctx),
        Check::LrootExtremalShape => lroot_extremal_shape(ctx),
        Check::LyndonLrootBound => lyndon_lroot_bound(ctx),
        Check::OrootSameOrder => oroot_same_order(ctx),
        Check::OrootNonunary => oroot_nonunary(ctx),
        Check::OrootUnary => oroot_unary(ctx),
        Check::LrootOrootDisplacement => displacement_of(ctx.w, &ctx.rs)
            .err()
            .and_then(|e| fail(e.to_string())),
        Check::OrootOverlap => oroot_overlap_violations(&ctx.rs)
            .first()
            .and_then(|(a, b)| {
                fail(format!(
                    "Oroots {} and {} of runs {} and {} overlap on neither",
                    a.interval, b.interval, a.run, b.run
                ))
            }),
        Check::LyndonIntervalMax => lyndon_interval_max(ctx),
    };
    finding.map(|(interval, detail)| Violation {
        check,
        word: to_text(ctx.w),
        interval,
        detail,
    })
}

fn runs_lt_n(ctx: &WordContext) -> Finding {
    let (runs, n) = (ctx.rs.len(), ctx.w.len());
    (runs >= n).then(|| (None, format!("{runs} runs in a word of length {n}")))
}

fn cubic_runs(ctx: &WordContext) -> Finding {
    let (runs, n) = (ctx.rs.len(), ctx.w.len());
    let cubic = count_cubic(&ctx.rs.runs);
    if runs + cubic >= n {
        return fail(format!("{runs} runs and {cubic} cubic runs, length {n}"));
    }
    if 2 * cubic >= n {
        return fail(format!("{cubic} cubic runs, length {n}"));
    }
    None
}

fn root_structure(ctx: &WordContext) -> Finding {
    let w = ctx.w;
    let rs = &ctx.rs;
    let mut starts: Vec<usize> = Vec::with_capacity(rs.len());
    for ((l, o), a) in rs.lroots.iter().zip(&rs.oroots).zip(&rs.assignments) {
        let run = l.run;
        let p = run.period;
        let (li, oi) = (l.interval, o.interval);
        if li.len() != p || oi.len() != p || li.end > run.end || oi.end > run.end {
            return fail(format!("run {run}: roots {li}, {oi} do not fit"));
        }
        if li.start - run.start >= p || oi.start - run.start > p || oi.start == run.start {
            return fail(format!(
                "run {run}: Lroot {li} or Oroot {oi} starts too late or at the run start"
            ));
        }
        let lf = &w[li.start..=li.end];
        let of = &w[oi.start..=oi.end];
        if !is_lyndon(lf, Order::Forward).unwrap() {
            return fail(format!("run {run}: Lroot {li} is not Lyndon"));
        }
        if !is_lyndon(of, o.order).unwrap() {
            return fail(format!(
                "run {run}: Oroot {oi} is not Lyndon under the {} order",
                o.order
            ));
        }
        if is_lyndon(of, Order::Forward).unwrap()
            && !(lf == of
                && (oi.start == li.start || (run.start == li.start && li.start + p == oi.start)))
        {
            return fail(format!(
                "run {run}: forward-Lyndon Oroot {oi} is not placed by its Lroot {li}"
            ));
        }
        if a.k != oi.start || a.order != o.order.flip() {
            return fail(format!(
                "run {run}: assigned position {} differs from Oroot {oi}",
                a.k
            ));
        }
        if !is_border_free(of).unwrap() {
            return fail(format!("run {run}: Oroot {oi} has a border"));
        }
        starts.push(oi.start);
    }
    starts.sort_unstable();
    if let Some(pair) = starts.windows(2).find(|p| p[0] == p[1]) {
        return fail(format!("two Oroots start at position {}", pair[0]));
    }
    None
}

fn critical_cut(ctx: &WordContext) -> Finding {
    let w = ctx.w;
    let p = smallest_period(w).unwrap();
    let reports = local_periods(w).unwrap();
    if let Some(r) = reports.iter().find(|r| r.local_period > p) {
        return fail(format!(
            "local period {} at cut {} exceeds the period {p}",
            r.local_period, r.cut
        ));
    }
    if !reports[1..=p].iter().any(|r| r.critical) {
        return fail(format!("no critical cut among 1..={p}"));
    }
    if w.len() >= 2 {
        if let Err(e) = critical_from_orderings(w) {
            return fail(e.to_string());
        }
    }
    None
}

fn square_critical(ctx: &WordContext) -> Finding {
    let x = ctx.w;
    for split in 0..x.len() {
        let (v, u) = x.split_at(split);
        match check_square_lemma(v, u) {
            Ok(_) | Err(Error::NotBorderFree) => {}
            Err(e) => return fail(format!("split |v| = {split}: {e}")),
        }
    }
    None
}

fn lroot_density(ctx: &WordContext) -> Finding {
    let counts = ctx.lroot_counts();
    ctx.all_intervals()
        .find(|&iv| counts.get(iv) > iv.len())
        .and_then(|iv| {
            fail_at(
                iv,
                format!(
                    "{} Lroots in an interval of length {}",
                    counts.get(iv),
                    iv.len()
                ),
            )
        })
}

/// Largest Lroot count on intervals of length 1, 2, 3.
pub const SHORT_INTERVAL_MAX: [usize; 3] = [1, 1, 3];

fn lroot_extremal_shape(ctx: &WordContext) -> Finding {
    let counts = ctx.lroot_counts();
    for iv in ctx.all_intervals() {
        let (l, c) = (iv.len(), counts.get(iv));
        if l <= 3 {
            if c > SHORT_INTERVAL_MAX[l - 1] {
                return fail_at(iv, format!("{c} Lroots in an interval of length {l}"));
            }
        } else if c == l && !is_extremal_form(&ctx.w[iv.start..=iv.end]) {
            return fail_at(
                iv,
                format!(
                    "saturated interval with factor {}",
                    to_text(&ctx.w[iv.start..=iv.end])
                ),
            );
        }
    }
    None
}

fn lyndon_lroot_bound(ctx: &WordContext) -> Finding {
    let counts = ctx.lroot_counts();
    ctx.lyndon_intervals()
        .iter()
        .find(|iv| 2 * counts.get(**iv) > 3 * iv.len())
        .and_then(|&iv| {
            fail_at(
                iv,
                format!(
                    "{} Lroots in a Lyndon interval of length {}",
                    counts.get(iv),
                    iv.len()
                ),
            )
        })
}

/// Oroot counts per interval, split by the first letter of the Oroot.
fn oroot_counts_by_letter(ctx: &WordContext, keep: impl Fn(usize) -> bool) -> [IntervalCounts; 2] {
    let n = ctx.w.len();
    let by_letter = |letter: u8| {
        IntervalCounts::new(
            n,
            ctx.rs
                .oroots
                .iter()
                .filter(|o| ctx.w[o.interval.start] == letter && keep(o.run.period))
                .map(|o| o.interval),
        )
    };
    [by_letter(0), by_letter(1)]
}

const LETTER_ORDER: [Order; 2] = [Order::Forward, Order::Reverse];

fn oroot_same_order(ctx: &WordContext) -> Finding {
    let counts = oroot_counts_by_letter(ctx, |_| true);
    for iv in ctx.all_intervals() {
        for (letter, c) in counts.iter().enumerate() {
            let c = c.get(iv);
            if 2 * c + 1 > iv.len() {
                return fail_at(
                    iv,
                    format!(
                        "{c} {} Oroots in an interval of length {}",
                        LETTER_ORDER[letter],
                        iv.len()
                    ),
                );
            }
        }
    }
    None
}

fn oroot_nonunary(ctx: &WordContext) -> Finding {
    let w = ctx.w;
    let counts = oroot_counts_by_letter(ctx, |p| p > 1);
    // pairs[t]: occurrences of ab (resp. ba) starting before t.
    let mut ab = vec![0usize; w.len() + 1];
    let mut ba = vec![0usize; w.len() + 1];
    for t in 0..w.len() {
        let next = w.get(t + 1);
        ab[t + 1] = ab[t] + usize::from(w[t] == 0 && next == Some(&1));
        ba[t + 1] = ba[t] + usize::from(w[t] == 1 && next == Some(&0));
    }
    for iv in ctx.all_intervals() {
        // Pairs starting in start..end lie inside the factor.
        let nab = ab[iv.end] - ab[iv.start];
        let nba = ba[iv.end] - ba[iv.start];
        let bound = nab.min(nba);
        for (letter, c) in counts.iter().enumerate() {
            let c = c.get(iv);
            if c > bound {
                return fail_at(
                    iv,
                    format!(
                        "{c} non-unary {} Oroots, |f|_ab = {nab}, |f|_ba = {nba}",
                        LETTER_ORDER[letter]
                    ),
                );
            }
        }
    }
    None
}

fn oroot_unary(ctx: &WordContext) -> Finding {
    let counts = IntervalCounts::new(
        ctx.w.len(),
        ctx.rs
            .oroots
            .iter()
            .filter(|o| o.run.period == 1)
            .map(|o| o.interval),
    );
    for iv in ctx.all_intervals() {
        let c = counts.get(iv);
        if c == 0 {
            continue;
        }
        let (blocks, long_blocks) = unary_blocks(&ctx.w[iv.start..=iv.end]);
        if c > long_blocks + 1 {
            return fail_at(
                iv,
                format!(
                    "{c} unary Oroots, {blocks} blocks of which {long_blocks} have length >= 2"
                ),
            );
        }
    }
    None
}

fn lyndon_interval_max(ctx: &WordContext) -> Finding {
    let best = ctx.densest(ctx.all_intervals())?;
    let best_lyndon = ctx.densest(ctx.lyndon_intervals().iter().copied())?;
    let (c, iv) = best;
    let (cl, ivl) = best_lyndon;
    (c * ivl.len() != cl * iv.len()).then(|| {
        (
            Some(iv),
            format!(
                "density {c}/{} exceeds the best Lyndon interval {ivl} with {cl}/{}",
                iv.len(),
                ivl.len()
            ),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::sym;

    fn run_check(check: Check, text: &str) -> Option<Violation> {
        let w = sym(text);
        evaluate(check, &WordContext::new(&w))
    }

    #[test]
    fn names_round_trip() {
        for &c in Check::ALL {
            assert_eq!(c.name().parse::<Check>(), Ok(c));
            let json = serde_json::to_string(&c).unwrap();
            assert_eq!(json, format!("\"{}\"", c.name()));
        }
        assert_eq!(Check::parse_list("all").unwrap().len(), Check::ALL.len());
        assert_eq!(
            Check::parse_list("runs-lt-n, runs-lt-n,critical-cut").unwrap(),
            vec![Check::RunsLtN, Check::CriticalCut]
        );
        assert!(matches!(
            Check::parse_list("bogus"),
            Err(Error::UnknownCheck(_))
        ));
        assert!(Check::parse_list("").is_err());
    }

    #[test]
    fn saturated_interval_outside_the_extremal_shape() {
        let v = run_check(Check::LrootExtremalShape, "ababbabaababbababb").unwrap();
        assert_eq!(v.interval, Some(Interval::new(7, 14).unwrap()));
        assert!(v.detail.contains("aababbab"));
        assert_eq!(run_check(Check::LrootDensity, "ababbabaababbababb"), None);
    }

    #[test]
    fn clean_words_pass_everything() {
        for text in ["abaababbababb", "ababaababbababb", "a", "ab", "aabb"] {
            for &c in Check::ALL {
                if c == Check::OrootSameOrder || c == Check::OrootNonunary {
                    continue;
                }
                assert_eq!(run_check(c, text), None, "{c} on {text}");
            }
        }
    }

    #[test]
    fn known_failures_of_the_oroot_bounds() {
        // Oroot [1..1] of "aa": 1 > 1/2 on [0..1], found before [1..1].
        let v = run_check(Check::OrootSameOrder, "aa").unwrap();
        assert_eq!(v.interval, Some(Interval { start: 0, end: 1 }));
        let v = run_check(Check::OrootNonunary, "abab").unwrap();
        assert_eq!(v.interval, Some(Interval { start: 2, end: 3 }));
        assert_eq!(run_check(Check::OrootNonunary, "aabb"), None);
        assert_eq!(run_check(Check::OrootSameOrder, "ab"), None);
    }

    #[test]
    fn violations_order_shortest_first() {
        let v = |word: &str| Violation {
            check: Check::RunsLtN,
            word: word.into(),
            interval: None,
            detail: String::new(),
        };
        let mut list = [v("ba"), v("aaa"), v("ab")];
        list.sort();
        let words: Vec<&str> = list.iter().map(|x| x.word.as_str()).collect();
        assert_eq!(words, ["ab", "ba", "aaa"]);
    }
}
