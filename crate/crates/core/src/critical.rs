//! Local periods and critical positions.
//!
//! The local period at cut `c` of `w = uv` (`|u| = c`) is the length of the
//! shortest non-empty `z` such that `z` and `u` are suffix-comparable and `z`
//! and `v` are prefix-comparable. A cut is critical when its local period
//! equals the smallest period of `w`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{greatest_proper_suffix, is_border_free, smallest_period, Order};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalPeriodReport {
    pub cut: usize,
    pub local_period: usize,
    pub critical: bool,
}

fn check_cut(w: &[u8], cut: usize) -> Result<()> {
    if cut > w.len() {
        return Err(Error::PositionOutOfRange {
            pos: cut,
            len: w.len(),
        });
    }
    Ok(())
}

/// Shortest `L >= 1` such that `w[c + t] == w[c + t - L]` wherever both
/// sides exist.
pub fn local_period(w: &[u8], cut: usize) -> Result<usize> {
    check_cut(w, cut)?;
    Ok(local_period_unchecked(w, cut))
}

fn local_period_unchecked(w: &[u8], cut: usize) -> usize {
    let n = w.len();
    (1..=n.max(1))
        .find(|&len| {
            let lo = len.saturating_sub(cut);
            let hi = len.min(n - cut);
            (lo..hi).all(|t| w[cut + t] == w[cut + t - len])
        })
        .unwrap()
}

/// Literal reading of the definition: for each length build the only
/// candidate `z` forced by `u` and `v` and test the four prefix/suffix
/// conditions. Quadratic per length; used as a test oracle.
pub fn local_period_by_definition(w: &[u8], cut: usize) -> Result<usize> {
    check_cut(w, cut)?;
    let (u, v) = w.split_at(cut);
    for len in 1..=w.len().max(1) {
        let mut z: Vec<Option<u8>> = vec![None; len];
        for (t, &s) in v.iter().take(len).enumerate() {
            z[t] = Some(s);
        }
        let m = len.min(u.len());
        let mut consistent = true;
        for (t, &s) in u[u.len() - m..].iter().enumerate() {
            let slot = &mut z[len - m + t];
            match *slot {
                Some(existing) if existing != s => consistent = false,
                _ => *slot = Some(s),
            }
        }
        if !consistent {
            continue;
        }
        let z: Vec<u8> = z.into_iter().map(|s| s.unwrap_or(0)).collect();
        let left = z.ends_with(u) || u.ends_with(&z);
        let right = v.starts_with(&z) || z.starts_with(v);
        if left && right {
            return Ok(len);
        }
    }
    unreachable!("vu always satisfies both conditions")
}

pub fn local_period_report(w: &[u8], cut: usize) -> Result<LocalPeriodReport> {
    check_cut(w, cut)?;
    let period = smallest_period(w)?;
    let local = local_period_unchecked(w, cut);
    Ok(LocalPeriodReport {
        cut,
        local_period: local,
        critical: local == period,
    })
}

/// Reports for every cut `0..=|w|`.
pub fn local_periods(w: &[u8]) -> Result<Vec<LocalPeriodReport>> {
    let period = smallest_period(w)?;
    Ok((0..=w.len())
        .map(|cut| {
            let local = local_period_unchecked(w, cut);
            LocalPeriodReport {
                cut,
                local_period: local,
                critical: local == period,
            }
        })
        .collect())
}

/// Critical cuts of `w`. Cuts `0` and `|w|` are only considered when
/// `include_ends` is set.
pub fn critical_positions(w: &[u8], include_ends: bool) -> Result<Vec<usize>> {
    if w.len() < 2 {
        return Err(Error::WordTooShort {
            len: w.len(),
            min: 2,
        });
    }
    let period = smallest_period(w)?;
    let cuts = if include_ends {
        0..=w.len()
    } else {
        1..=w.len() - 1
    };
    Ok(cuts
        .filter(|&c| local_period_unchecked(w, c) == period)
        .collect())
}

/// The later of the two greatest-proper-suffix starts (forward and reverse
/// order) is a critical cut.
pub fn critical_from_orderings(w: &[u8]) -> Result<usize> {
    if w.len() < 2 {
        return Err(Error::WordTooShort {
            len: w.len(),
            min: 2,
        });
    }
    let cut =
        greatest_proper_suffix(w, Order::Forward)?.max(greatest_proper_suffix(w, Order::Reverse)?);
    if local_period_unchecked(w, cut) != smallest_period(w)? {
        return Err(Error::InvariantViolation(format!(
            "cut {cut} from the two greatest suffixes is not critical"
        )));
    }
    Ok(cut)
}

/// For a square `x^2 = (vu)^2` whose conjugate `uv` is border-free, returns
/// which of the cuts `|v|` and `|vuv|` are critical on `x^2`. At least one
/// always is.
pub fn check_square_lemma(v: &[u8], u: &[u8]) -> Result<Vec<usize>> {
    let uv: Vec<u8> = u.iter().chain(v).copied().collect();
    if !is_border_free(&uv)? {
        return Err(Error::NotBorderFree);
    }
    let x: Vec<u8> = v.iter().chain(u).copied().collect();
    let square: Vec<u8> = x.iter().chain(&x).copied().collect();
    let period = x.len();
    debug_assert_eq!(smallest_period(&square)?, period);
    let mut cuts = vec![v.len(), 2 * v.len() + u.len()];
    cuts.dedup();
    let critical: Vec<usize> = cuts
        .into_iter()
        .filter(|&c| local_period_unchecked(&square, c) == period)
        .collect();
    if critical.is_empty() {
        return Err(Error::InvariantViolation(format!(
            "neither cut {} nor {} is critical on the square",
            v.len(),
            2 * v.len() + u.len()
        )));
    }
    Ok(critical)
}
