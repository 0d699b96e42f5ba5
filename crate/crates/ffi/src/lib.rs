//! C interface to `maxrep`.
//!
//! Words and run lists are opaque handles created and freed by this
//! library. Every fallible function returns a `MaxrepStatus`; on failure a
//! message for the calling thread is available from
//! `maxrep_last_error_message`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use maxrep::critical::local_period;
use maxrep::density::count_lroots_in;
use maxrep::runs::{assign_all, enumerate_runs, Run};
use maxrep::word::smallest_period;
use maxrep::{Error, Interval, Order, Word};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaxrepStatus {
    Ok = 0,
    NullPointer = 1,
    /// Text is not valid UTF-8 or has a character outside `a-z`, or the
    /// operation needs a non-empty word.
    InvalidWord = 2,
    /// A position, cut or interval lies outside the word.
    OutOfRange = 3,
    InvalidArgument = 4,
    /// The output buffer is too small; the required size was still written.
    BufferTooSmall = 5,
    /// A property that always holds failed. Indicates a bug.
    InvariantViolation = 6,
    /// A panic was caught at the boundary.
    Internal = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaxrepOrdering {
    Forward = 0,
    Reverse = 1,
}

/// A maximal repetition `[start..end]` with smallest period `period`,
/// 0-based and inclusive.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaxrepRun {
    pub start: usize,
    pub end: usize,
    pub period: usize,
}

/// A run together with its assigned position `k` and the ordering under
/// which `k` starts the greatest proper suffix of the run.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaxrepAssignment {
    pub run: MaxrepRun,
    pub k: usize,
    pub ordering: MaxrepOrdering,
}

/// Opaque word handle.
pub struct MaxrepWord(Word);

/// Opaque list of runs.
pub struct MaxrepRuns(Vec<MaxrepRun>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> MaxrepStatus {
    match e {
        Error::EmptyWord
        | Error::InvalidCharacter { .. }
        | Error::SymbolOutOfAlphabet { .. }
        | Error::InvalidAlphabet { .. }
        | Error::WordTooShort { .. } => MaxrepStatus::InvalidWord,
        Error::PositionOutOfRange { .. } | Error::InvalidInterval { .. } => {
            MaxrepStatus::OutOfRange
        }
        Error::InvariantViolation(_) | Error::OracleMismatch { .. } => {
            MaxrepStatus::InvariantViolation
        }
        _ => MaxrepStatus::InvalidArgument,
    }
}

fn fail(status: MaxrepStatus, msg: impl Into<String>) -> MaxrepStatus {
    set_error(msg.into());
    status
}

fn from_core(e: Error) -> MaxrepStatus {
    fail(status_of(&e), e.to_string())
}

/// Runs `f`, turning panics into `Internal`. Outputs are only written on
/// success, so a caught panic leaves nothing half-updated that the caller
/// would read.
fn guard(f: impl FnOnce() -> MaxrepStatus) -> MaxrepStatus {
    catch_unwind(AssertUnwindSafe(f))
        .unwrap_or_else(|_| fail(MaxrepStatus::Internal, "panic in maxrep"))
}

fn convert_run(r: &Run) -> MaxrepRun {
    MaxrepRun {
        start: r.start,
        end: r.end,
        period: r.period,
    }
}

unsafe fn word_ref<'a>(w: *const MaxrepWord) -> Option<&'a Word> {
    w.as_ref().map(|w| &w.0)
}

/// Message describing the most recent failure on this thread, or NULL if
/// none. Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn maxrep_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a NUL-terminated word over `a-z` into `*out`.
///
/// # Safety
/// `text` must be NULL or a valid NUL-terminated string; `out` must be NULL
/// or writable.
#[no_mangle]
pub unsafe extern "C" fn maxrep_word_new(
    text: *const c_char,
    out: *mut *mut MaxrepWord,
) -> MaxrepStatus {
    if text.is_null() || out.is_null() {
        return fail(MaxrepStatus::NullPointer, "null argument");
    }
    let text = CStr::from_ptr(text);
    guard(move || {
        let Ok(text) = text.to_str() else {
            return fail(MaxrepStatus::InvalidWord, "word is not valid UTF-8");
        };
        match Word::parse(text) {
            Ok(w) => {
                *out = Box::into_raw(Box::new(MaxrepWord(w)));
                MaxrepStatus::Ok
            }
            Err(e) => from_core(e),
        }
    })
}

/// # Safety
/// `w` must be NULL or a handle from `maxrep_word_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn maxrep_word_free(w: *mut MaxrepWord) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Length of the word, 0 for NULL.
///
/// # Safety
/// `w` must be NULL or a live word handle.
#[no_mangle]
pub unsafe extern "C" fn maxrep_word_len(w: *const MaxrepWord) -> usize {
    word_ref(w).map_or(0, Word::len)
}

/// Computes all runs of `w`, sorted by start then end.
///
/// # Safety
/// `w` must be NULL or a live word handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn maxrep_runs_new(
    w: *const MaxrepWord,
    out: *mut *mut MaxrepRuns,
) -> MaxrepStatus {
    let Some(word) = word_ref(w) else {
        return fail(MaxrepStatus::NullPointer, "null word");
    };
    if out.is_null() {
        return fail(MaxrepStatus::NullPointer, "null output");
    }
    guard(move || {
        let runs = enumerate_runs(word).iter().map(convert_run).collect();
        *out = Box::into_raw(Box::new(MaxrepRuns(runs)));
        MaxrepStatus::Ok
    })
}

/// # Safety
/// `runs` must be NULL or a live run-list handle.
#[no_mangle]
pub unsafe extern "C" fn maxrep_runs_len(runs: *const MaxrepRuns) -> usize {
    runs.as_ref().map_or(0, |r| r.0.len())
}

/// # Safety
/// `runs` must be NULL or a live run-list handle; `out` must be NULL or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn maxrep_runs_get(
    runs: *const MaxrepRuns,
    index: usize,
    out: *mut MaxrepRun,
) -> MaxrepStatus {
    let (Some(runs), false) = (runs.as_ref(), out.is_null()) else {
        return fail(MaxrepStatus::NullPointer, "null argument");
    };
    match runs.0.get(index) {
        Some(r) => {
            *out = *r;
            MaxrepStatus::Ok
        }
        None => fail(
            MaxrepStatus::OutOfRange,
            format!("run index {index} out of range for {} runs", runs.0.len()),
        ),
    }
}

/// # Safety
/// `runs` must be NULL or a handle from `maxrep_runs_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn maxrep_runs_free(runs: *mut MaxrepRuns) {
    if !runs.is_null() {
        drop(Box::from_raw(runs));
    }
}

unsafe fn with_word(
    w: *const MaxrepWord,
    out: *mut usize,
    f: impl FnOnce(&Word) -> Result<usize, Error>,
) -> MaxrepStatus {
    let Some(word) = word_ref(w) else {
        return fail(MaxrepStatus::NullPointer, "null word");
    };
    if out.is_null() {
        return fail(MaxrepStatus::NullPointer, "null output");
    }
    let out = &mut *out;
    let word: &Word = word;
    guard(move || match f(word) {
        Ok(v) => {
            *out = v;
            MaxrepStatus::Ok
        }
        Err(e) => from_core(e),
    })
}

/// Smallest period of the whole word.
///
/// # Safety
/// `w` must be NULL or a live word handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn maxrep_smallest_period(
    w: *const MaxrepWord,
    out: *mut usize,
) -> MaxrepStatus {
    with_word(w, out, |w| smallest_period(w.symbols()))
}

/// Local period at `cut`, where `0 <= cut <= len`.
///
/// # Safety
/// `w` must be NULL or a live word handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn maxrep_local_period(
    w: *const MaxrepWord,
    cut: usize,
    out: *mut usize,
) -> MaxrepStatus {
    with_word(w, out, move |w| local_period(w.symbols(), cut))
}

/// Number of Lyndon roots lying inside `[start..end]`.
///
/// # Safety
/// `w` must be NULL or a live word handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn maxrep_count_lroots_in(
    w: *const MaxrepWord,
    start: usize,
    end: usize,
    out: *mut usize,
) -> MaxrepStatus {
    with_word(w, out, move |w| {
        count_lroots_in(w, Interval::new(start, end)?)
    })
}

/// Writes the assignment of every run into `buf` (capacity `cap`) and the
/// number of runs into `*count`. With a short buffer nothing is written to
/// `buf`, `*count` still holds the required size and `BufferTooSmall` is
/// returned, so `cap = 0` queries the size.
///
/// # Safety
/// `w` must be NULL or a live word handle; `buf` must be NULL or point to
/// `cap` writable elements; `count` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn maxrep_assignments(
    w: *const MaxrepWord,
    buf: *mut MaxrepAssignment,
    cap: usize,
    count: *mut usize,
) -> MaxrepStatus {
    let Some(word) = word_ref(w) else {
        return fail(MaxrepStatus::NullPointer, "null word");
    };
    if count.is_null() || (buf.is_null() && cap > 0) {
        return fail(MaxrepStatus::NullPointer, "null output");
    }
    let count = &mut *count;
    let word: &Word = word;
    guard(move || {
        let assigned = match assign_all(word) {
            Ok(a) => a,
            Err(e) => return from_core(e),
        };
        *count = assigned.len();
        if assigned.len() > cap {
            return fail(
                MaxrepStatus::BufferTooSmall,
                format!("{} assignments, buffer holds {cap}", assigned.len()),
            );
        }
        for (i, a) in assigned.iter().enumerate() {
            *buf.add(i) = MaxrepAssignment {
                run: convert_run(&a.run),
                k: a.k,
                ordering: match a.order {
                    Order::Forward => MaxrepOrdering::Forward,
                    Order::Reverse => MaxrepOrdering::Reverse,
                },
            };
        }
        MaxrepStatus::Ok
    })
}
