//! Randomised agreement between the fast routines and direct definitions.

use std::cmp::Ordering;

use proptest::collection::vec;
use proptest::prelude::*;

use maxrep::critical::{local_period, local_period_by_definition};
use maxrep::index::SuffixIndex;
use maxrep::runs::{runs_naive_of, runs_of, RunStructure};
use maxrep::word::{
    greatest_proper_suffix, is_lyndon_by_conjugates, is_lyndon_by_suffixes, lyndon_factorization,
    smallest_period, smallest_period_naive,
};
use maxrep::Order;

fn word(max_sigma: u8, len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<u8>> {
    (1..=max_sigma).prop_flat_map(move |sigma| vec(0..sigma, len.clone()))
}

fn order() -> impl Strategy<Value = Order> {
    prop_oneof![Just(Order::Forward), Just(Order::Reverse)]
}

proptest! {
    #[test]
    fn gps_is_the_greatest_proper_suffix(w in word(4, 2..=200), ord in order()) {
        let k = greatest_proper_suffix(&w, ord).unwrap();
        prop_assert!(k >= 1 && k < w.len());
        for j in 1..w.len() {
            if j != k {
                prop_assert_eq!(ord.compare(&w[k..], &w[j..]), Ordering::Greater, "j = {}", j);
            }
        }
    }

    #[test]
    fn local_period_matches_definition(w in word(3, 1..=100)) {
        for cut in 0..=w.len() {
            prop_assert_eq!(
                local_period(&w, cut).unwrap(),
                local_period_by_definition(&w, cut).unwrap(),
                "cut {}", cut
            );
        }
    }

    #[test]
    fn runs_match_the_quadratic_enumeration(w in word(3, 1..=120)) {
        prop_assert_eq!(runs_of(&w), runs_naive_of(&w));
    }

    #[test]
    fn smallest_period_matches_scan(w in word(3, 1..=150)) {
        prop_assert_eq!(smallest_period(&w).unwrap(), smallest_period_naive(&w).unwrap());
    }

    #[test]
    fn lyndon_characterisations_agree(w in word(3, 1..=40), ord in order()) {
        prop_assert_eq!(
            is_lyndon_by_suffixes(&w, ord).unwrap(),
            is_lyndon_by_conjugates(&w, ord).unwrap()
        );
    }

    #[test]
    fn factorization_is_non_increasing_lyndon(w in word(4, 1..=150), ord in order()) {
        let f = lyndon_factorization(&w, ord).unwrap();
        prop_assert_eq!(f.first().unwrap().start, 0);
        prop_assert_eq!(f.last().unwrap().end, w.len() - 1);
        for pair in f.windows(2) {
            prop_assert_eq!(pair[0].end + 1, pair[1].start);
            let a = &w[pair[0].start..=pair[0].end];
            let b = &w[pair[1].start..=pair[1].end];
            prop_assert_ne!(ord.compare(a, b), Ordering::Less);
        }
        for iv in &f {
            prop_assert!(is_lyndon_by_suffixes(&w[iv.start..=iv.end], ord).unwrap());
        }
    }

    #[test]
    fn assigned_positions_are_distinct(w in word(4, 1..=150)) {
        let rs = RunStructure::of(&w);
        let mut ks: Vec<usize> = rs.assignments.iter().map(|a| a.k).collect();
        ks.sort_unstable();
        ks.dedup();
        prop_assert_eq!(ks.len(), rs.runs.len());
        prop_assert!(rs.runs.len() < w.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// About 250 random suffix pairs per word, 10^4 in total.
    #[test]
    fn suffix_comparisons_match_direct(
        w in word(4, 1..=500),
        ord in order(),
        picks in vec((any::<usize>(), any::<usize>()), 250),
    ) {
        let idx = SuffixIndex::from_symbols(&w, ord).unwrap();
        let n = w.len();
        for (a, b) in picks {
            let (i, j) = (a % n, b % n);
            prop_assert_eq!(idx.compare_suffixes(i, j).unwrap(), ord.compare(&w[i..], &w[j..]));
            let scan = w[i..].iter().zip(&w[j..]).take_while(|(x, y)| x == y).count();
            prop_assert_eq!(idx.lce(i, j).unwrap(), scan);
        }
    }
}
