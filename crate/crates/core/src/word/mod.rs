//! Words over small integer alphabets, lexicographic orders and the
//! periodicity / Lyndon primitives the rest of the crate builds on.
//!
//! Symbols are `u8` values `0..size`. Textual input maps `'a'` to 0,
//! `'b'` to 1 and so on, so the reverse order is a plain flip of the
//! symbol comparison.

pub(crate) mod lyndon;
mod periodicity;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use lyndon::{
    greatest_proper_suffix, is_lyndon, is_lyndon_by_conjugates, is_lyndon_by_suffixes,
    lyndon_conjugate, lyndon_factorization, lyndon_intervals, max_suffix,
};
pub use periodicity::{
    border_table, fine_wilf_holds, has_period, is_border_free, is_primitive, occurrences,
    smallest_period, smallest_period_naive, FineWilf,
};

/// Largest alphabet the textual form can express (`a..=z`).
pub const MAX_ALPHABET: usize = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    size: u8,
}

impl Alphabet {
    pub const BINARY: Alphabet = Alphabet { size: 2 };
    pub const TERNARY: Alphabet = Alphabet { size: 3 };
    pub const LATIN: Alphabet = Alphabet { size: 26 };

    pub fn new(size: usize) -> Result<Self> {
        if size == 0 || size > MAX_ALPHABET {
            return Err(Error::InvalidAlphabet {
                size,
                max: MAX_ALPHABET,
            });
        }
        Ok(Alphabet { size: size as u8 })
    }

    pub fn size(self) -> usize {
        self.size as usize
    }

    pub fn contains(self, symbol: u8) -> bool {
        symbol < self.size
    }
}

/// Lexicographic order on words.
///
/// `Forward` extends the numeric symbol order, `Reverse` extends its
/// inverse. Under both a proper prefix is smaller than its extensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    Forward,
    Reverse,
}

impl Order {
    pub const BOTH: [Order; 2] = [Order::Forward, Order::Reverse];

    #[inline]
    pub fn cmp_symbols(self, a: u8, b: u8) -> Ordering {
        match self {
            Order::Forward => a.cmp(&b),
            Order::Reverse => b.cmp(&a),
        }
    }

    /// Lexicographic comparison of two symbol slices.
    pub fn compare(self, a: &[u8], b: &[u8]) -> Ordering {
        for (&x, &y) in a.iter().zip(b) {
            match self.cmp_symbols(x, y) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        a.len().cmp(&b.len())
    }

    pub fn flip(self) -> Order {
        match self {
            Order::Forward => Order::Reverse,
            Order::Reverse => Order::Forward,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Order::Forward => "forward",
            Order::Reverse => "reverse",
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Closed interval `[start..end]` of 0-based positions; never empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub start: usize,
    pub end: usize,
}

impl Interval {
    pub fn new(start: usize, end: usize) -> Result<Self> {
        if start > end {
            return Err(Error::InvalidInterval { start, end, len: 0 });
        }
        Ok(Interval { start, end })
    }

    /// Interval of `len >= 1` positions starting at `start`.
    #[inline]
    pub(crate) fn with_len(start: usize, len: usize) -> Self {
        debug_assert!(len >= 1);
        Interval {
            start,
            end: start + len - 1,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn contains(&self, other: &Interval) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    #[inline]
    pub fn contains_pos(&self, pos: usize) -> bool {
        self.start <= pos && pos <= self.end
    }

    pub fn intersection(&self, other: &Interval) -> Option<Interval> {
        let start = self.start.max(other.start);
        let end = self.end.min(other.end);
        (start <= end).then_some(Interval { start, end })
    }

    /// Checks that the interval fits in a word of length `len`.
    pub fn check_within(&self, len: usize) -> Result<()> {
        if self.end >= len {
            return Err(Error::InvalidInterval {
                start: self.start,
                end: self.end,
                len,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]", self.start, self.end)
    }
}

/// Immutable word over an [`Alphabet`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    alphabet: Alphabet,
    symbols: Vec<u8>,
}

impl Word {
    pub fn new(symbols: Vec<u8>, alphabet: Alphabet) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| !alphabet.contains(s)) {
            return Err(Error::SymbolOutOfAlphabet {
                symbol: bad,
                size: alphabet.size(),
            });
        }
        Ok(Word { alphabet, symbols })
    }

    /// Parses lowercase ASCII letters over the 26-letter alphabet.
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with(text, Alphabet::LATIN)
    }

    pub fn parse_with(text: &str, alphabet: Alphabet) -> Result<Self> {
        let mut symbols = Vec::with_capacity(text.len());
        for (offset, ch) in text.chars().enumerate() {
            if !ch.is_ascii_lowercase() {
                return Err(Error::InvalidCharacter { ch, offset });
            }
            symbols.push(ch as u8 - b'a');
        }
        Word::new(symbols, alphabet)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Symbols `w[start..=end]`.
    pub fn factor(&self, iv: Interval) -> Result<&[u8]> {
        iv.check_within(self.len())?;
        Ok(&self.symbols[iv.start..=iv.end])
    }

    /// Whether every symbol is `a` or `b`.
    pub fn is_binary(&self) -> bool {
        self.symbols.iter().all(|&s| s < 2)
    }

    pub fn reversed(&self) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Word {
            alphabet: self.alphabet,
            symbols,
        }
    }

    /// Applies a symbol renaming; `perm[s]` is the new name of `s`.
    pub fn renamed(&self, perm: &[u8]) -> Result<Word> {
        Word::new(
            self.symbols.iter().map(|&s| perm[s as usize]).collect(),
            self.alphabet,
        )
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_text(&self.symbols))
    }
}

impl AsRef<[u8]> for Word {
    fn as_ref(&self) -> &[u8] {
        &self.symbols
    }
}

/// Renders symbols as letters.
pub fn to_text(symbols: &[u8]) -> String {
    symbols.iter().map(|&s| (b'a' + s) as char).collect()
}

/// Compares two words under `ord`; both must share an alphabet.
pub fn compare(a: &Word, b: &Word, ord: Order) -> Result<Ordering> {
    if a.alphabet != b.alphabet {
        return Err(Error::AlphabetMismatch {
            left: a.alphabet.size(),
            right: b.alphabet.size(),
        });
    }
    Ok(ord.compare(a.symbols(), b.symbols()))
}

pub(crate) fn require_non_empty(w: &[u8]) -> Result<()> {
    if w.is_empty() {
        Err(Error::EmptyWord)
    } else {
        Ok(())
    }
}

#[cfg(test)]
pub(crate) fn sym(text: &str) -> Vec<u8> {
    text.bytes().map(|b| b - b'a').collect()
}
