//! C ABI over the cobordism calculator.
//!
//! Classes are opaque `CcClass` handles owned by the caller and released
//! with `cc_class_free`. Strings returned through out-parameters are
//! NUL-terminated UTF-8 and released with `cc_string_free`. Every entry
//! point returns a `CcStatus`; on failure `cc_last_error` describes the
//! most recent error on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cobordism_calc::cli::{parse_class_spec, Params};
use cobordism_calc::genus::chi_y;
use cobordism_calc::json::{from_json, poly_to_strings, to_json};
use cobordism_calc::rational::to_pq;
use cobordism_calc::verifier::{verify_theorem, IdealKind};
use cobordism_calc::{cobordism, CobordismClass, Error};

/// Opaque handle to a cobordism class.
pub struct CcClass(CobordismClass);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    DimensionMismatch = 3,
    Parse = 4,
    /// The call completed but the theorem check did not pass.
    VerificationFailed = 5,
    Internal = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> CcStatus {
    match e {
        Error::DimensionMismatch { .. } => CcStatus::DimensionMismatch,
        Error::Parse(_) | Error::MalformedRational(_) => CcStatus::Parse,
        _ => CcStatus::InvalidInput,
    }
}

/// Runs `f`, recording errors and converting panics into `Internal`.
fn guard(f: impl FnOnce() -> Result<CcStatus, (CcStatus, String)>) -> CcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CcStatus::Internal
        }
    }
}

fn lift(e: Error) -> (CcStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (CcStatus, String) {
    (CcStatus::NullPointer, "null pointer argument".into())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, (CcStatus, String)> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (CcStatus::InvalidInput, "argument is not valid UTF-8".into()))
}

unsafe fn class_ref<'a>(c: *const CcClass) -> Result<&'a CobordismClass, (CcStatus, String)> {
    c.as_ref().map(|c| &c.0).ok_or_else(null)
}

unsafe fn put_class(
    out: *mut *mut CcClass,
    x: CobordismClass,
) -> Result<CcStatus, (CcStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    *out = Box::into_raw(Box::new(CcClass(x)));
    Ok(CcStatus::Ok)
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (CcStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    let c = CString::new(s).map_err(|_| (CcStatus::Internal, "interior NUL".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a class from `cp:<n>`, `surface:<a>,<b>`, `pbundle:<a>,<b>,<c>,<rank>`,
/// `abelian:<c>,<rank>` or `file:<path>`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_class_from_spec(
    spec: *const c_char,
    out: *mut *mut CcClass,
) -> CcStatus {
    guard(|| {
        let spec = read_str(spec)?;
        put_class(out, parse_class_spec(spec).map_err(lift)?)
    })
}

/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_class_from_json(
    json: *const c_char,
    out: *mut *mut CcClass,
) -> CcStatus {
    guard(|| {
        let text = read_str(json)?;
        put_class(out, from_json(text).map_err(lift)?)
    })
}

/// # Safety
/// `c` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cc_class_free(c: *mut CcClass) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_class_dim(c: *const CcClass, out: *mut usize) -> CcStatus {
    guard(|| {
        let x = class_ref(c)?;
        if out.is_null() {
            return Err(null());
        }
        *out = x.dim();
        Ok(CcStatus::Ok)
    })
}

/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_class_product(
    a: *const CcClass,
    b: *const CcClass,
    out: *mut *mut CcClass,
) -> CcStatus {
    guard(|| {
        let (a, b) = (class_ref(a)?, class_ref(b)?);
        put_class(out, cobordism::product(a, b))
    })
}

/// The s-number as a `"p/q"` string.
///
/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_class_s_number(c: *const CcClass, out: *mut *mut c_char) -> CcStatus {
    guard(|| {
        let s = cobordism::s_number(class_ref(c)?).map_err(lift)?;
        put_string(out, to_pq(&s))?;
        Ok(CcStatus::Ok)
    })
}

/// `χ_y` as a JSON array of `"p/q"` coefficients, constant term first.
///
/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_class_chi_y(c: *const CcClass, out: *mut *mut c_char) -> CcStatus {
    guard(|| {
        let p = chi_y(class_ref(c)?).map_err(lift)?;
        put_string(out, to_json(&poly_to_strings(&p)))?;
        Ok(CcStatus::Ok)
    })
}

/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_class_to_json(c: *const CcClass, out: *mut *mut c_char) -> CcStatus {
    guard(|| {
        let x = class_ref(c)?;
        put_string(out, to_json(x))?;
        Ok(CcStatus::Ok)
    })
}

/// Runs one theorem check with the default generators. `kind` is one of
/// `do`, `d`, `h`, `betti`. The JSON report is written to `out` whether or
/// not the check passes; a failing check returns `VerificationFailed`.
///
/// # Safety
/// `kind` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_verify_theorem(
    kind: *const c_char,
    dim: usize,
    out: *mut *mut c_char,
) -> CcStatus {
    guard(|| {
        let kind: IdealKind = read_str(kind)?.parse().map_err(lift)?;
        if dim == 0 {
            return Err((CcStatus::InvalidInput, "dim must be positive".into()));
        }
        let g = Params::default().sequence(kind, dim).map_err(lift)?;
        let report = verify_theorem(kind, dim, &g).map_err(lift)?;
        put_string(out, to_json(&report))?;
        if report.passed() {
            Ok(CcStatus::Ok)
        } else {
            set_error("annihilator differs from the expected span");
            Ok(CcStatus::VerificationFailed)
        }
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
