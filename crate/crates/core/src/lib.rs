//! Runs (maximal repetitions), Lyndon roots, local periods and critical
//! positions of words, together with exhaustive sweeps that check the
//! counting bounds relating them.

pub mod critical;
pub mod density;
pub mod error;
pub mod harness;
pub mod index;
pub mod runs;
pub mod word;

pub use error::{Error, Result};
pub use word::{Alphabet, Interval, Order, Word};
