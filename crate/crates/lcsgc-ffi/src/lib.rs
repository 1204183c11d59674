//! C ABI for the gap-constrained LCS solvers.
//!
//! Instances and results are opaque handles; every fallible call returns a
//! status code and stores a message retrievable with
//! `lcsgc_last_error_message`. All handles must be released with the matching
//! `_free` function.

use std::cell::RefCell;
use std::ffi::{CStr, CString};

use libc::{c_char, c_int};

use lcsgc::json::parse_instance;
use lcsgc::{oracle, Algorithm, Error, ProblemInstance, SolveResult};

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcsgcStatus {
    LcsgcOk = 0,
    /// A pointer argument was null or a string was not valid UTF-8.
    LcsgcBadArgument = 1,
    /// The instance JSON or its fields failed validation.
    LcsgcBadInstance = 2,
    /// The algorithm does not apply to the instance's variant.
    LcsgcUnsupportedAlgorithm = 3,
    /// The instance exceeds the oracle size cap.
    LcsgcCapExceeded = 4,
    /// Any other solver error.
    LcsgcSolverError = 5,
}

/// An opaque, validated problem instance.
pub struct LcsgcInstance {
    inner: ProblemInstance,
}

/// An opaque solve outcome: a length and an optional witness.
pub struct LcsgcResult {
    inner: SolveResult,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> LcsgcStatus {
    match e {
        Error::UnsupportedAlgorithm { .. } => LcsgcStatus::LcsgcUnsupportedAlgorithm,
        Error::CapExceeded { .. } => LcsgcStatus::LcsgcCapExceeded,
        Error::Json(_)
        | Error::MissingField { .. }
        | Error::BadConstraint { .. }
        | Error::BadTupleLength { .. }
        | Error::BadLetter { .. }
        | Error::NotIncreasing
        | Error::NotSynchronized
        | Error::BadRangeBound { .. } => LcsgcStatus::LcsgcBadInstance,
        _ => LcsgcStatus::LcsgcSolverError,
    }
}

fn fail(e: &Error) -> LcsgcStatus {
    set_error(&e.to_string());
    status_of(e)
}

fn bad_argument(msg: &str) -> LcsgcStatus {
    set_error(msg);
    LcsgcStatus::LcsgcBadArgument
}

/// Message for the most recent error on this thread. The pointer stays valid
/// until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn lcsgc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

unsafe fn cstr<'a>(ptr: *const c_char) -> Option<&'a str> {
    if ptr.is_null() {
        return None;
    }
    CStr::from_ptr(ptr).to_str().ok()
}

/// Parses and validates an instance from JSON. On success writes a handle to
/// `out`; release it with `lcsgc_instance_free`.
///
/// # Safety
/// `json` must be a valid nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lcsgc_instance_from_json(
    json: *const c_char,
    out: *mut *mut LcsgcInstance,
) -> LcsgcStatus {
    if out.is_null() {
        return bad_argument("out pointer is null");
    }
    let Some(text) = cstr(json) else {
        return bad_argument("json pointer is null or not UTF-8");
    };
    let inst = match parse_instance(text).and_then(ProblemInstance::validate) {
        Ok(i) => i,
        Err(e) => return fail(&e),
    };
    *out = Box::into_raw(Box::new(LcsgcInstance { inner: inst }));
    LcsgcStatus::LcsgcOk
}

/// Releases an instance handle. Null is a no-op.
///
/// # Safety
/// `inst` must come from `lcsgc_instance_from_json` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn lcsgc_instance_free(inst: *mut LcsgcInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Solves an instance. `algorithm` is one of "auto", "layered", "segtree",
/// "deque", "rmq", "naive", "blocked" (null means "auto"). On success writes
/// a result handle to `out`; release it with `lcsgc_result_free`.
///
/// # Safety
/// `inst` and `out` must be valid; `algorithm` null or nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn lcsgc_solve(
    inst: *const LcsgcInstance,
    algorithm: *const c_char,
    want_witness: bool,
    out: *mut *mut LcsgcResult,
) -> LcsgcStatus {
    let (Some(inst), false) = (inst.as_ref(), out.is_null()) else {
        return bad_argument("instance or out pointer is null");
    };
    let algorithm = if algorithm.is_null() {
        Algorithm::Auto
    } else {
        let Some(name) = cstr(algorithm) else {
            return bad_argument("algorithm string is not UTF-8");
        };
        match Algorithm::parse(name) {
            Some(a) => a,
            None => return bad_argument("unknown algorithm name"),
        }
    };
    match lcsgc::solve(&inst.inner, algorithm, want_witness) {
        Ok(res) => {
            *out = Box::into_raw(Box::new(LcsgcResult { inner: res }));
            LcsgcStatus::LcsgcOk
        }
        Err(e) => fail(&e),
    }
}

/// Solves an instance exhaustively with the reference oracle; `cap` of 0
/// means the default size cap.
///
/// # Safety
/// As `lcsgc_solve`.
#[no_mangle]
pub unsafe extern "C" fn lcsgc_oracle_solve(
    inst: *const LcsgcInstance,
    cap: usize,
    out: *mut *mut LcsgcResult,
) -> LcsgcStatus {
    let (Some(inst), false) = (inst.as_ref(), out.is_null()) else {
        return bad_argument("instance or out pointer is null");
    };
    let cap = if cap == 0 { oracle::DEFAULT_CAP } else { cap };
    match oracle::oracle_solve(&inst.inner, cap) {
        Ok(res) => {
            let res = if inst.inner.swapped() {
                res.swap_words()
            } else {
                res
            };
            *out = Box::into_raw(Box::new(LcsgcResult { inner: res }));
            LcsgcStatus::LcsgcOk
        }
        Err(e) => fail(&e),
    }
}

/// Releases a result handle. Null is a no-op.
///
/// # Safety
/// `res` must come from a solve call and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn lcsgc_result_free(res: *mut LcsgcResult) {
    if !res.is_null() {
        drop(Box::from_raw(res));
    }
}

/// Answer length of a result; 0 for a null handle.
///
/// # Safety
/// `res` must be a valid result handle or null.
#[no_mangle]
pub unsafe extern "C" fn lcsgc_result_length(res: *const LcsgcResult) -> usize {
    res.as_ref().map_or(0, |r| r.inner.length)
}

/// 1 if the result carries a witness, else 0.
///
/// # Safety
/// `res` must be a valid result handle or null.
#[no_mangle]
pub unsafe extern "C" fn lcsgc_result_has_witness(res: *const LcsgcResult) -> c_int {
    res.as_ref()
        .map_or(0, |r| r.inner.witness.is_some() as c_int)
}

/// Copies the witness into caller buffers of capacity `cap` entries each:
/// letters into `symbols`, 1-based positions into `v_positions` and
/// `w_positions`. Null buffers are skipped. Returns the number of entries
/// written (0 when there is no witness or `cap` is too small).
///
/// # Safety
/// Non-null buffers must have at least `cap` writable entries.
#[no_mangle]
pub unsafe extern "C" fn lcsgc_result_witness(
    res: *const LcsgcResult,
    symbols: *mut u32,
    v_positions: *mut usize,
    w_positions: *mut usize,
    cap: usize,
) -> usize {
    let Some(w) = res.as_ref().and_then(|r| r.inner.witness.as_ref()) else {
        return 0;
    };
    let k = w.subsequence.len();
    if k > cap {
        return 0;
    }
    for p in 0..k {
        if !symbols.is_null() {
            *symbols.add(p) = w.subsequence.get(p + 1);
        }
        if !v_positions.is_null() {
            *v_positions.add(p) = w.into_v.get(p + 1);
        }
        if !w_positions.is_null() {
            *w_positions.add(p) = w.into_w.get(p + 1);
        }
    }
    k
}
