use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

/// Largest number of words of a single length a sweep will enumerate.
pub const DEFAULT_SPACE_CAP: u64 = 1 << 26;

/// All words of one length over `sigma` letters, or only their
/// restricted-growth representatives (each new letter is the smallest unused
/// one) when `canonical` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordSpace {
    pub sigma: usize,
    pub len: usize,
    pub canonical: bool,
}

impl WordSpace {
    pub fn new(sigma: usize, len: usize, canonical: bool, cap: u64) -> Result<Self> {
        Alphabet::new(sigma)?;
        if len == 0 {
            return Err(Error::InvalidParameter(
                "word length must be at least 1".into(),
            ));
        }
        let count = (sigma as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
        if count > cap as u128 {
            return Err(Error::SpaceTooLarge {
                alphabet: sigma,
                len,
                count,
                cap,
            });
        }
        Ok(WordSpace {
            sigma,
            len,
            canonical,
        })
    }

    /// Fixed-length prefixes splitting the space into independent blocks, in
    /// enumeration order. The prefix length grows until there are at least
    /// `min_blocks` blocks or it reaches the word length.
    pub fn blocks(&self, min_blocks: usize) -> Vec<Vec<u8>> {
        let mut prefix_len = 0;
        let mut blocks = vec![Vec::new()];
        while blocks.len() < min_blocks && prefix_len < self.len {
            prefix_len += 1;
            blocks = Odometer::new(self.sigma, prefix_len, 0, Vec::new(), self.canonical).collect();
        }
        blocks
    }

    /// Calls `f` on every word of the space that starts with `prefix`.
    pub fn for_each_in_block(&self, prefix: &[u8], mut f: impl FnMut(&[u8])) {
        let mut odo = Odometer::new(
            self.sigma,
            self.len,
            prefix.len(),
            prefix.to_vec(),
            self.canonical,
        );
        while let Some(w) = odo.advance() {
            f(w);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Vec<u8>> {
        Odometer::new(self.sigma, self.len, 0, Vec::new(), self.canonical)
    }
}

/// Whether every letter's first occurrence comes after that of all smaller
/// letters, with `a` first.
pub fn is_restricted_growth(w: &[u8]) -> bool {
    let mut next = 0u8;
    for &s in w {
        if s > next {
            return false;
        }
        if s == next {
            next += 1;
        }
    }
    true
}

/// Lexicographic counter over the positions `fixed..len` of a buffer whose
/// first `fixed` symbols are held constant.
struct Odometer {
    sigma: u8,
    fixed: usize,
    canonical: bool,
    buf: Vec<u8>,
    started: bool,
    done: bool,
}

impl Odometer {
    fn new(sigma: usize, len: usize, fixed: usize, mut prefix: Vec<u8>, canonical: bool) -> Self {
        debug_assert_eq!(prefix.len(), fixed);
        prefix.resize(len, 0);
        Odometer {
            sigma: sigma as u8,
            fixed,
            canonical,
            buf: prefix,
            started: false,
            done: false,
        }
    }

    /// Largest symbol allowed at `pos` given the symbols before it.
    fn limit(&self, pos: usize) -> u8 {
        if !self.canonical {
            return self.sigma - 1;
        }
        let next_new = self.buf[..pos].iter().max().map_or(0, |&m| m + 1);
        next_new.min(self.sigma - 1)
    }

    fn advance(&mut self) -> Option<&[u8]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.buf);
        }
        let mut pos = self.buf.len();
        while pos > self.fixed {
            pos -= 1;
            if self.buf[pos] < self.limit(pos) {
                self.buf[pos] += 1;
                self.buf[pos + 1..].fill(0);
                return Some(&self.buf);
            }
        }
        self.done = true;
        None
    }
}

impl Iterator for Odometer {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        self.advance().map(<[u8]>::to_vec)
    }
}

/// Words of length `len` over `sigma` letters in lexicographic order, or
/// their restricted-growth representatives when `canonical` is set.
pub fn enumerate_words(
    sigma: usize,
    len: usize,
    canonical: bool,
) -> Result<impl Iterator<Item = Word>> {
    let space = WordSpace::new(sigma, len, canonical, DEFAULT_SPACE_CAP)?;
    let alphabet = Alphabet::new(sigma)?;
    Ok(space.iter().map(move |symbols| {
        Word::new(symbols, alphabet).expect("odometer stays inside the alphabet")
    }))
}
