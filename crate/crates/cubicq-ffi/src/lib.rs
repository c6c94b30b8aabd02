//! C interface to the cubic quotient library: elements, rewriting systems, ideal membership and
//! the verification suites, behind opaque handles and integer status codes.
//!
//! Every function returns a [`CqStatus`]. On failure a description is available from
//! [`cq_last_error`] on the same thread. Strings returned through out-parameters are owned by the
//! caller and released with [`cq_string_free`]; handles are released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use cubicq::expr::eval_elem;
use cubicq::freealg::AlgElem;
use cubicq::h3reps::ideal_membership;
use cubicq::rewrite::{build_system, RewriteSystem, SystemKind};
use cubicq::verify::{run_suites, Suite, VerifyOptions};

/// Status codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    ComputationError = 4,
    VerificationFailed = 5,
    InvalidArgument = 6,
    Panic = 7,
}

/// The three rewriting systems on three strands.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CqSystemKind {
    Positive = 0,
    Signed1 = 1,
    Signed2 = 2,
}

/// Opaque element of the free algebra on the braid generators.
pub struct CqElement(AlgElem);

/// Opaque rewriting system.
pub struct CqSystem(RewriteSystem);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("interior nul removed"));
}

fn fail(status: CqStatus, msg: impl Into<String>) -> CqStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> CqStatus) -> CqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == CqStatus::Ok {
                set_error("");
            }
            s
        }
        Err(_) => fail(CqStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, CqStatus> {
    if s.is_null() {
        return Err(fail(CqStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(CqStatus::InvalidUtf8, "argument is not UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> CqStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            CqStatus::Ok
        }
        Err(_) => fail(CqStatus::ComputationError, "output contains a nul byte"),
    }
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Description of the last failure on this thread; empty after a success. The pointer stays valid
/// until the next call on the same thread.
#[no_mangle]
pub extern "C" fn cq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string returned by this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an element expression such as `"[1 2] - a*[2 -1]"` on `strands` strands.
///
/// # Safety
/// `src` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cq_element_parse(src: *const c_char, strands: usize, out: *mut *mut CqElement) -> CqStatus {
    guard(|| {
        if out.is_null() {
            return fail(CqStatus::NullPointer, "null output pointer");
        }
        let src = try_status!(read_str(src));
        if strands < 2 {
            return fail(CqStatus::InvalidArgument, "at least two strands are required");
        }
        match eval_elem(src, strands) {
            Ok(x) => {
                *out = Box::into_raw(Box::new(CqElement(x)));
                CqStatus::Ok
            }
            Err(e) => fail(CqStatus::ParseError, e.to_string()),
        }
    })
}

/// Reads an element in the JSON element format.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cq_element_from_json(json: *const c_char, out: *mut *mut CqElement) -> CqStatus {
    guard(|| {
        if out.is_null() {
            return fail(CqStatus::NullPointer, "null output pointer");
        }
        let json = try_status!(read_str(json));
        match AlgElem::parse_json(json) {
            Ok(x) => {
                *out = Box::into_raw(Box::new(CqElement(x)));
                CqStatus::Ok
            }
            Err(e) => fail(CqStatus::ParseError, e.to_string()),
        }
    })
}

/// Writes an element in the JSON element format.
///
/// # Safety
/// `el` must be a live element handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cq_element_to_json(el: *const CqElement, out: *mut *mut c_char) -> CqStatus {
    guard(|| {
        if el.is_null() || out.is_null() {
            return fail(CqStatus::NullPointer, "null argument");
        }
        match serde_json::to_string(&(*el).0.to_json()) {
            Ok(s) => write_string(out, s),
            Err(e) => fail(CqStatus::ComputationError, e.to_string()),
        }
    })
}

/// Whether the element is zero.
///
/// # Safety
/// `el` must be a live element handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cq_element_is_zero(el: *const CqElement, out: *mut bool) -> CqStatus {
    guard(|| {
        if el.is_null() || out.is_null() {
            return fail(CqStatus::NullPointer, "null argument");
        }
        *out = (*el).0.is_zero();
        CqStatus::Ok
    })
}

/// Releases an element handle.
///
/// # Safety
/// `el` must be null or a handle from this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cq_element_free(el: *mut CqElement) {
    if !el.is_null() {
        drop(Box::from_raw(el));
    }
}

/// Builds one of the rewriting systems.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cq_system_new(kind: CqSystemKind, out: *mut *mut CqSystem) -> CqStatus {
    guard(|| {
        if out.is_null() {
            return fail(CqStatus::NullPointer, "null output pointer");
        }
        let kind = match kind {
            CqSystemKind::Positive => SystemKind::Positive,
            CqSystemKind::Signed1 => SystemKind::Signed1,
            CqSystemKind::Signed2 => SystemKind::Signed2,
        };
        match build_system(kind) {
            Ok(s) => {
                *out = Box::into_raw(Box::new(CqSystem(s)));
                CqStatus::Ok
            }
            Err(e) => fail(CqStatus::ComputationError, e.to_string()),
        }
    })
}

/// Normal form of a three-strand element; the result is a new handle.
///
/// # Safety
/// `sys` and `el` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cq_system_normal_form(
    sys: *const CqSystem,
    el: *const CqElement,
    out: *mut *mut CqElement,
) -> CqStatus {
    guard(|| {
        if sys.is_null() || el.is_null() || out.is_null() {
            return fail(CqStatus::NullPointer, "null argument");
        }
        match (*sys).0.normal_form(&(*el).0) {
            Ok(x) => {
                *out = Box::into_raw(Box::new(CqElement(x)));
                CqStatus::Ok
            }
            Err(e) => fail(CqStatus::ComputationError, e.to_string()),
        }
    })
}

/// Releases a rewriting system.
///
/// # Safety
/// `sys` must be null or a handle from this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cq_system_free(sys: *mut CqSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// Decides whether a three-strand element lies in the defining ideal of the cubic quotient.
///
/// # Safety
/// `el` must be a live element handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cq_ideal_member(el: *const CqElement, out: *mut bool) -> CqStatus {
    guard(|| {
        if el.is_null() || out.is_null() {
            return fail(CqStatus::NullPointer, "null argument");
        }
        match ideal_membership(&(*el).0) {
            Ok(m) => {
                *out = m.member;
                CqStatus::Ok
            }
            Err(e) => fail(CqStatus::ComputationError, e.to_string()),
        }
    })
}

/// Runs a verification suite (or `"all"`) and writes its JSON report to `out`. Returns
/// `VerificationFailed` when some check fails; the report is written in that case too.
///
/// # Safety
/// `suite` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cq_verify(suite: *const c_char, seed: u64, out: *mut *mut c_char) -> CqStatus {
    guard(|| {
        if out.is_null() {
            return fail(CqStatus::NullPointer, "null output pointer");
        }
        let name = try_status!(read_str(suite));
        let suites = if name == "all" {
            Suite::ALL.to_vec()
        } else {
            match Suite::from_name(name) {
                Some(s) => vec![s],
                None => return fail(CqStatus::InvalidArgument, format!("unknown suite '{name}'")),
            }
        };
        let report = run_suites(&suites, &VerifyOptions { seed, ..VerifyOptions::default() });
        let json = match serde_json::to_string(&report) {
            Ok(s) => s,
            Err(e) => return fail(CqStatus::ComputationError, e.to_string()),
        };
        let status = write_string(out, json);
        if status != CqStatus::Ok {
            return status;
        }
        if report.passed() {
            CqStatus::Ok
        } else {
            let failing: Vec<String> = report.suites.iter().flat_map(|s| s.failures()).map(|c| c.topic.clone()).collect();
            fail(CqStatus::VerificationFailed, format!("failing: {}", failing.join("; ")))
        }
    })
}
