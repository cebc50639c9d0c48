//! C ABI over `degcond`.
//!
//! Every fallible call returns a [`DcStatus`]; on failure the message is
//! available from [`dc_last_error`] on the same thread. Sequences and graphs
//! are opaque handles released with their `_free` function. Strings returned
//! through `char **` are owned by the caller and released with
//! [`dc_string_free`].

use degcond::catalog::{Condition, ConditionId, Params};
use degcond::oracles::{forcibly_report, OracleLimits, PropertyId, Requirement};
use degcond::sinks::{sinks, SinkOptions};
use degcond::witness::{verify_weak_optimality, VerifyOptions};
use degcond::{DegreeSequence, Error, Graph};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DcStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    NotGraphical = 4,
    OutOfDomain = 5,
    ScaleExceeded = 6,
    NoWitness = 7,
    Overflow = 8,
    Internal = 9,
    Panic = 10,
    BufferTooSmall = 11,
}

/// Opaque degree sequence.
pub struct DcSequence(DegreeSequence);

/// Opaque simple graph.
pub struct DcGraph(Graph);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(DcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::EmptyInput | Error::MalformedToken(_) | Error::NegativeDegree(_) | Error::UnknownName(_) => {
                DcStatus::ParseError
            }
            Error::NotGraphical => DcStatus::NotGraphical,
            Error::ScaleExceeded { .. } => DcStatus::ScaleExceeded,
            Error::NoWitness(_) => DcStatus::NoWitness,
            Error::Overflow(_) => DcStatus::Overflow,
            Error::Internal(_) => DcStatus::Internal,
            _ => DcStatus::OutOfDomain,
        };
        Failure(status, e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure(DcStatus::Internal, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(DcStatus::NullArgument, format!("`{what}` is null"))
}

/// Runs `f`, records its error or panic, and returns the status.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> DcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            DcStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&msg);
            DcStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(DcStatus::InvalidUtf8, format!("`{what}` is not UTF-8")))
}

unsafe fn seq_ref<'a>(p: *const DcSequence, what: &str) -> Result<&'a DegreeSequence, Failure> {
    p.as_ref().map(|s| &s.0).ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, v: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|e| Failure(DcStatus::Internal, e.to_string()))?;
    put(out, c.into_raw(), "out")
}

unsafe fn params(id: ConditionId, value: *const c_char) -> Result<Params, Failure> {
    if value.is_null() {
        return Ok(Params::none());
    }
    Ok(Params::parse_for(id, text(value, "param")?)?)
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn dc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn dc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn dc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `"1,2,2,3"`, `"1 2 2 3"` or `"1^1 2^2 3"`.
///
/// # Safety
/// `input` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_sequence_parse(input: *const c_char, out: *mut *mut DcSequence) -> DcStatus {
    guard(|| {
        let s = DegreeSequence::parse(text(input, "input")?)?;
        put(out, Box::into_raw(Box::new(DcSequence(s))), "out")
    })
}

/// # Safety
/// `degrees` must point to `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_sequence_from_degrees(
    degrees: *const usize,
    len: usize,
    out: *mut *mut DcSequence,
) -> DcStatus {
    guard(|| {
        if degrees.is_null() {
            return Err(null("degrees"));
        }
        if len == 0 {
            return Err(Error::EmptyInput.into());
        }
        let v = std::slice::from_raw_parts(degrees, len).to_vec();
        put(out, Box::into_raw(Box::new(DcSequence(DegreeSequence::new(v)))), "out")
    })
}

/// # Safety
/// `seq` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn dc_sequence_free(seq: *mut DcSequence) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// Number of entries, 0 for a null handle.
///
/// # Safety
/// `seq` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn dc_sequence_len(seq: *const DcSequence) -> usize {
    seq.as_ref().map_or(0, |s| s.0.len())
}

/// Copies the nondecreasing degrees into `buf`. Fails with
/// `BufferTooSmall` when `cap` is below the length.
///
/// # Safety
/// `buf` must have room for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn dc_sequence_degrees(seq: *const DcSequence, buf: *mut usize, cap: usize) -> DcStatus {
    guard(|| {
        let s = seq_ref(seq, "seq")?;
        if buf.is_null() {
            return Err(null("buf"));
        }
        if cap < s.len() {
            return Err(Failure(DcStatus::BufferTooSmall, format!("need {} entries, got {cap}", s.len())));
        }
        ptr::copy_nonoverlapping(s.degrees().as_ptr(), buf, s.len());
        Ok(())
    })
}

/// Run-length text such as `1^1 2^2 3^1`.
///
/// # Safety
/// `seq` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_sequence_render(seq: *const DcSequence, out: *mut *mut c_char) -> DcStatus {
    guard(|| put_string(out, seq_ref(seq, "seq")?.render()))
}

/// # Safety
/// `seq` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_sequence_is_graphical(seq: *const DcSequence, out: *mut bool) -> DcStatus {
    guard(|| put(out, seq_ref(seq, "seq")?.is_graphical(), "out"))
}

/// Whether `a` is componentwise at least `b`.
///
/// # Safety
/// `a`, `b` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_sequence_majorizes(a: *const DcSequence, b: *const DcSequence, out: *mut bool) -> DcStatus {
    guard(|| put(out, seq_ref(a, "a")?.majorizes(seq_ref(b, "b")?)?, "out"))
}

/// # Safety
/// `seq` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_sequence_realize(seq: *const DcSequence, out: *mut *mut DcGraph) -> DcStatus {
    guard(|| {
        let g = seq_ref(seq, "seq")?.realize()?;
        put(out, Box::into_raw(Box::new(DcGraph(g))), "out")
    })
}

/// # Safety
/// `g` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_free(g: *mut DcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be live or null.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_order(g: *const DcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// # Safety
/// `g` must be live or null.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_edge_count(g: *const DcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// False for a null handle or out-of-range vertices.
///
/// # Safety
/// `g` must be live or null.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_has_edge(g: *const DcGraph, u: usize, v: usize) -> bool {
    g.as_ref().is_some_and(|g| u < g.0.n() && v < g.0.n() && g.0.has_edge(u, v))
}

/// `{"n": .., "edges": [[u, v], ..]}`.
///
/// # Safety
/// `g` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_to_json(g: *const DcGraph, out: *mut *mut c_char) -> DcStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| null("g"))?;
        put_string(out, serde_json::to_string(&g.0)?)
    })
}

/// Evaluates a registry row (e.g. `"ham"`, `"tough"` with `param` `"3/2"`;
/// `param` may be null for rows without one). `report`, if non-null,
/// receives the verdict as JSON.
///
/// # Safety
/// Strings must be NUL-terminated; `seq` live; `declared` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_condition_check(
    cond: *const c_char,
    param: *const c_char,
    seq: *const DcSequence,
    declared: *mut bool,
    report: *mut *mut c_char,
) -> DcStatus {
    guard(|| {
        let id: ConditionId = text(cond, "cond")?.parse()?;
        let p = params(id, param)?;
        let pi = seq_ref(seq, "seq")?;
        let verdict = Condition::new(id, &p, pi.len())?.evaluate(pi)?;
        put(declared, verdict.declared, "declared")?;
        if !report.is_null() {
            put_string(report, serde_json::to_string(&verdict.without_trace())?)?;
        }
        Ok(())
    })
}

/// Decides whether every realization has `prop` (`"hamiltonian"`,
/// `"k-connected:2"`, ...). When it does not and `counterexample` is
/// non-null, a violating realization is stored there.
///
/// # Safety
/// `prop` NUL-terminated; `seq` live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_forcibly(
    seq: *const DcSequence,
    prop: *const c_char,
    out: *mut bool,
    counterexample: *mut *mut DcGraph,
) -> DcStatus {
    guard(|| {
        let p: PropertyId = text(prop, "prop")?.parse()?;
        let r = forcibly_report(Requirement::has(p), seq_ref(seq, "seq")?, &OracleLimits::default())?;
        put(out, r.holds, "out")?;
        if !counterexample.is_null() {
            let g = r.counterexample.map_or(ptr::null_mut(), |g| Box::into_raw(Box::new(DcGraph(g))));
            counterexample.write(g);
        }
        Ok(())
    })
}

/// Weak-optimality check of a best-monotone row at one length; the full
/// report goes to `report` as JSON when non-null.
///
/// # Safety
/// Strings NUL-terminated; `passed` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_verify(
    cond: *const c_char,
    param: *const c_char,
    n: usize,
    passed: *mut bool,
    report: *mut *mut c_char,
) -> DcStatus {
    guard(|| {
        let id: ConditionId = text(cond, "cond")?.parse()?;
        let r = verify_weak_optimality(id, &params(id, param)?, n, &VerifyOptions::default())?;
        put(passed, r.passed, "passed")?;
        if !report.is_null() {
            put_string(report, serde_json::to_string(&r)?)?;
        }
        Ok(())
    })
}

/// Sink report for `prop` at length `n` (at most 7), as JSON.
///
/// # Safety
/// `prop` NUL-terminated; `report` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_sinks(prop: *const c_char, n: usize, report: *mut *mut c_char) -> DcStatus {
    guard(|| {
        let p: PropertyId = text(prop, "prop")?.parse()?;
        let r = sinks(Requirement::has(p), n, &SinkOptions::default())?;
        put_string(report, serde_json::to_string(&r)?)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    fn last_error() -> String {
        unsafe { CStr::from_ptr(dc_last_error()) }.to_string_lossy().into_owned()
    }

    #[test]
    fn parse_and_read_back() {
        unsafe {
            let mut s = ptr::null_mut();
            assert_eq!(dc_sequence_parse(c("3,1,2,2").as_ptr(), &mut s), DcStatus::Ok);
            assert_eq!(dc_sequence_len(s), 4);
            let mut buf = [0usize; 4];
            assert_eq!(dc_sequence_degrees(s, buf.as_mut_ptr(), 3), DcStatus::BufferTooSmall);
            assert_eq!(dc_sequence_degrees(s, buf.as_mut_ptr(), 4), DcStatus::Ok);
            assert_eq!(buf, [1, 2, 2, 3]);
            dc_sequence_free(s);
        }
    }

    #[test]
    fn errors_are_reported() {
        unsafe {
            let mut s = ptr::null_mut();
            assert_eq!(dc_sequence_parse(c("1,x").as_ptr(), &mut s), DcStatus::ParseError);
            assert!(last_error().contains("x"));
            assert!(s.is_null());
            assert_eq!(dc_sequence_parse(ptr::null(), &mut s), DcStatus::NullArgument);
            assert_eq!(dc_sequence_len(ptr::null()), 0);
            dc_sequence_free(ptr::null_mut());
            dc_string_free(ptr::null_mut());
        }
    }

    #[test]
    fn status_mapping() {
        let f: Failure = Error::ScaleExceeded { n: 9, limit: 8 }.into();
        assert_eq!(f.0, DcStatus::ScaleExceeded);
        let f: Failure = Error::SequenceTooShort { n: 2, min: 3 }.into();
        assert_eq!(f.0, DcStatus::OutOfDomain);
        assert_eq!(guard(|| panic!("boom")), DcStatus::Panic);
        assert_eq!(last_error(), "boom");
    }
}
