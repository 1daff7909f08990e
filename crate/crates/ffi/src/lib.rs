//! C ABI over the `peadyn` library.
//!
//! Every object crosses the boundary as an opaque heap handle created by a
//! `peadyn_*` constructor and released by the matching `*_free` function.
//! Fallible calls return a [`PeadynStatus`] and write their result through
//! an out-pointer; on failure a message is available from
//! [`peadyn_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use peadyn::search::{enumerate_cycles_with, enumerate_fixed_points_with, SearchConfig};
use peadyn::{length_bound, orbit, Base, CycleRecord, Error, OrbitResult, Word};

/// Result codes. Nonzero values other than the last two match the exit
/// codes of the command-line tool.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeadynStatus {
    Ok = 0,
    InvalidInput = 2,
    OrbitLimitExceeded = 3,
    BudgetExceeded = 4,
    NullPointer = 5,
    Panic = 6,
}

pub struct PeadynWord {
    inner: Word,
}

pub struct PeadynOrbit {
    inner: OrbitResult,
    cycle: Vec<PeadynWord>,
}

pub struct PeadynWordList {
    words: Vec<PeadynWord>,
}

pub struct PeadynCycleList {
    cycles: Vec<Vec<PeadynWord>>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> PeadynStatus {
    match e {
        Error::OrbitLimitExceeded { .. } => PeadynStatus::OrbitLimitExceeded,
        Error::BudgetExceeded { .. } => PeadynStatus::BudgetExceeded,
        _ => PeadynStatus::InvalidInput,
    }
}

/// Runs `f`, converting errors and panics into a status.
fn guard<F>(f: F) -> PeadynStatus
where
    F: FnOnce() -> Result<(), PeadynStatus>,
{
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PeadynStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_error("internal panic");
            PeadynStatus::Panic
        }
    }
}

fn fail(e: Error) -> PeadynStatus {
    set_error(e.to_string());
    status_of(&e)
}

fn invalid(msg: &str) -> PeadynStatus {
    set_error(msg);
    PeadynStatus::InvalidInput
}

fn null(what: &str) -> PeadynStatus {
    set_error(format!("{what} is null"));
    PeadynStatus::NullPointer
}

fn base_arg(k: u32) -> Result<Base, PeadynStatus> {
    Base::new(k).map_err(fail)
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

fn wrap(words: impl IntoIterator<Item = Word>) -> Vec<PeadynWord> {
    words
        .into_iter()
        .map(|inner| PeadynWord { inner })
        .collect()
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next `peadyn_*` call on the same thread.
#[no_mangle]
pub extern "C" fn peadyn_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be NULL or a pointer returned by `peadyn_word_to_string` or
/// `peadyn_length_bound`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn peadyn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a NUL-terminated `0-9a-z` word in base `base`.
///
/// # Safety
/// `text` must be a valid C string and `out` a valid pointer to write to.
#[no_mangle]
pub unsafe extern "C" fn peadyn_word_parse(
    base: u32,
    text: *const c_char,
    out: *mut *mut PeadynWord,
) -> PeadynStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let base = base_arg(base)?;
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| invalid("text is not UTF-8"))?;
        let inner = Word::parse(s, base).map_err(fail)?;
        *out = boxed(PeadynWord { inner });
        Ok(())
    })
}

/// # Safety
/// `word` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn peadyn_word_free(word: *mut PeadynWord) {
    if !word.is_null() {
        drop(Box::from_raw(word));
    }
}

/// Number of letters; 0 for NULL.
///
/// # Safety
/// `word` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn peadyn_word_len(word: *const PeadynWord) -> usize {
    word.as_ref().map_or(0, |w| w.inner.len())
}

/// Base of the word; 0 for NULL.
///
/// # Safety
/// `word` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn peadyn_word_base(word: *const PeadynWord) -> u32 {
    word.as_ref().map_or(0, |w| w.inner.base().get())
}

/// Text form of the word, to be released with `peadyn_string_free`.
/// NULL for a NULL handle.
///
/// # Safety
/// `word` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn peadyn_word_to_string(word: *const PeadynWord) -> *mut c_char {
    match word.as_ref() {
        Some(w) => CString::new(w.inner.to_string()).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

/// One application of the step map.
///
/// # Safety
/// `word` must be a live handle and `out` a valid pointer to write to.
#[no_mangle]
pub unsafe extern "C" fn peadyn_word_step(
    word: *const PeadynWord,
    out: *mut *mut PeadynWord,
) -> PeadynStatus {
    guard(|| {
        let w = word.as_ref().ok_or_else(|| null("word"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = boxed(PeadynWord {
            inner: w.inner.step(),
        });
        Ok(())
    })
}

/// # Safety
/// `word` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn peadyn_word_is_fixed_point(word: *const PeadynWord) -> bool {
    word.as_ref().is_some_and(|w| w.inner.is_fixed_point())
}

/// Follows `word` until a word repeats, taking at most `max_steps` steps.
///
/// # Safety
/// `word` must be a live handle and `out` a valid pointer to write to.
#[no_mangle]
pub unsafe extern "C" fn peadyn_orbit(
    word: *const PeadynWord,
    max_steps: usize,
    out: *mut *mut PeadynOrbit,
) -> PeadynStatus {
    guard(|| {
        let w = word.as_ref().ok_or_else(|| null("word"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let inner = orbit(&w.inner, max_steps).map_err(fail)?;
        let cycle = wrap(inner.cycle.iter().cloned());
        *out = boxed(PeadynOrbit { inner, cycle });
        Ok(())
    })
}

/// # Safety
/// `o` must be NULL or a live orbit handle.
#[no_mangle]
pub unsafe extern "C" fn peadyn_orbit_transient(o: *const PeadynOrbit) -> usize {
    o.as_ref().map_or(0, |o| o.inner.transient)
}

/// # Safety
/// `o` must be NULL or a live orbit handle.
#[no_mangle]
pub unsafe extern "C" fn peadyn_orbit_period(o: *const PeadynOrbit) -> usize {
    o.as_ref().map_or(0, |o| o.inner.period)
}

/// # Safety
/// `o` must be NULL or a live orbit handle.
#[no_mangle]
pub unsafe extern "C" fn peadyn_orbit_steps_taken(o: *const PeadynOrbit) -> usize {
    o.as_ref().map_or(0, |o| o.inner.steps_taken)
}

/// Borrowed cycle word `index`, owned by the orbit; NULL when out of range.
///
/// # Safety
/// `o` must be NULL or a live orbit handle.
#[no_mangle]
pub unsafe extern "C" fn peadyn_orbit_cycle_word(
    o: *const PeadynOrbit,
    index: usize,
) -> *const PeadynWord {
    o.as_ref()
        .and_then(|o| o.cycle.get(index))
        .map_or(ptr::null(), |w| w as *const PeadynWord)
}

/// # Safety
/// `o` must be NULL or a live orbit handle.
#[no_mangle]
pub unsafe extern "C" fn peadyn_orbit_free(o: *mut PeadynOrbit) {
    if !o.is_null() {
        drop(Box::from_raw(o));
    }
}

/// All fixed points of `base`, sorted by length then lexicographically.
///
/// # Safety
/// `out` must be a valid pointer to write to.
#[no_mangle]
pub unsafe extern "C" fn peadyn_fixed_points(
    base: u32,
    out: *mut *mut PeadynWordList,
) -> PeadynStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let base = base_arg(base)?;
        let words = enumerate_fixed_points_with(base, &SearchConfig::default()).map_err(fail)?;
        *out = boxed(PeadynWordList { words: wrap(words) });
        Ok(())
    })
}

/// # Safety
/// `list` must be NULL or a live list handle.
#[no_mangle]
pub unsafe extern "C" fn peadyn_word_list_len(list: *const PeadynWordList) -> usize {
    list.as_ref().map_or(0, |l| l.words.len())
}

/// Borrowed word `index`, owned by the list; NULL when out of range.
///
/// # Safety
/// `list` must be NULL or a live list handle.
#[no_mangle]
pub unsafe extern "C" fn peadyn_word_list_get(
    list: *const PeadynWordList,
    index: usize,
) -> *const PeadynWord {
    list.as_ref()
        .and_then(|l| l.words.get(index))
        .map_or(ptr::null(), |w| w as *const PeadynWord)
}

/// # Safety
/// `list` must be NULL or a live list handle.
#[no_mangle]
pub unsafe extern "C" fn peadyn_word_list_free(list: *mut PeadynWordList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// All cycles of period two or more whose words fit in `length_limit`
/// letters; 0 selects the eventual length bound of the base.
///
/// # Safety
/// `out` must be a valid pointer to write to.
#[no_mangle]
pub unsafe extern "C" fn peadyn_cycles(
    base: u32,
    length_limit: usize,
    out: *mut *mut PeadynCycleList,
) -> PeadynStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let base = base_arg(base)?;
        let config = SearchConfig {
            length_limit: (length_limit > 0).then_some(length_limit),
            ..SearchConfig::default()
        };
        let cycles = enumerate_cycles_with(base, &config).map_err(fail)?;
        *out = boxed(PeadynCycleList {
            cycles: cycles
                .into_iter()
                .map(|c| wrap(CycleRecord::into_words(c)))
                .collect(),
        });
        Ok(())
    })
}

/// # Safety
/// `list` must be NULL or a live cycle list handle.
#[no_mangle]
pub unsafe extern "C" fn peadyn_cycle_list_len(list: *const PeadynCycleList) -> usize {
    list.as_ref().map_or(0, |l| l.cycles.len())
}

/// Period of cycle `index`; 0 when out of range.
///
/// # Safety
/// `list` must be NULL or a live cycle list handle.
#[no_mangle]
pub unsafe extern "C" fn peadyn_cycle_list_period(
    list: *const PeadynCycleList,
    index: usize,
) -> usize {
    list.as_ref()
        .and_then(|l| l.cycles.get(index))
        .map_or(0, Vec::len)
}

/// Borrowed word `position` of cycle `index`; NULL when out of range.
///
/// # Safety
/// `list` must be NULL or a live cycle list handle.
#[no_mangle]
pub unsafe extern "C" fn peadyn_cycle_list_word(
    list: *const PeadynCycleList,
    index: usize,
    position: usize,
) -> *const PeadynWord {
    list.as_ref()
        .and_then(|l| l.cycles.get(index))
        .and_then(|c| c.get(position))
        .map_or(ptr::null(), |w| w as *const PeadynWord)
}

/// # Safety
/// `list` must be NULL or a live cycle list handle.
#[no_mangle]
pub unsafe extern "C" fn peadyn_cycle_list_free(list: *mut PeadynCycleList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// Eventual length bound of `base`, and the number of words at or below
/// it as a decimal string (it overflows 64 bits for larger bases). Free
/// the string with `peadyn_string_free`.
///
/// # Safety
/// Both out-pointers must be valid to write to.
#[no_mangle]
pub unsafe extern "C" fn peadyn_length_bound(
    base: u32,
    out_length_bound: *mut usize,
    out_word_count: *mut *mut c_char,
) -> PeadynStatus {
    guard(|| {
        if out_length_bound.is_null() || out_word_count.is_null() {
            return Err(null("out"));
        }
        let info = length_bound(base_arg(base)?);
        *out_length_bound = info.length_bound;
        *out_word_count = CString::new(info.words_up_to_bound.to_string())
            .expect("decimal digits")
            .into_raw();
        Ok(())
    })
}
