//! C ABI over `parapath`.
//!
//! Every function returns a [`PpStatus`]. On failure the message is kept per
//! thread and read with [`pp_last_error_message`]. Strings handed out by the
//! library are freed with [`pp_string_free`], handles with their `_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use parapath::brauer::{invariant_report, parse_brauer};
use parapath::cli::{algebra, bga_report_entries, hh_report, parse_algebra, Caps};
use parapath::ppcomplex::ParallelPaths;
use parapath::quotient::QuotientAlgebra;
use parapath::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PpStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidInput = 4,
    CapExceeded = 5,
    Panic = 6,
}

/// A finite-dimensional quotient algebra with its Groebner basis.
pub struct PpAlgebra {
    inner: QuotientAlgebra,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> PpStatus {
    match e {
        Error::Parse { .. } | Error::ShortRelation(_) | Error::InvalidField(_) => PpStatus::ParseError,
        Error::Incomplete { .. } | Error::InfiniteDimensional { .. } => PpStatus::CapExceeded,
        _ => PpStatus::InvalidInput,
    }
}

fn fail(e: Error) -> PpStatus {
    let s = status_of(&e);
    set_error(e.to_string());
    s
}

fn guard(f: impl FnOnce() -> PpStatus) -> PpStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic".into());
            PpStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, PpStatus> {
    if text.is_null() {
        set_error("null argument".into());
        return Err(PpStatus::NullArgument);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_error("input is not valid UTF-8".into());
        PpStatus::InvalidUtf8
    })
}

fn caps(max_tip_length: usize, max_basis: usize) -> Caps {
    let d = Caps::default();
    Caps {
        max_tip_length: if max_tip_length == 0 { d.max_tip_length } else { max_tip_length },
        max_basis: if max_basis == 0 { d.max_basis } else { max_basis },
    }
}

fn hand_out(s: String, out: *mut *mut c_char) {
    let c = CString::new(s.replace('\0', " ")).unwrap();
    unsafe { *out = c.into_raw() };
}

/// Parses an algebra file and builds the quotient algebra. A cap of 0 uses
/// the default (tip length 50, basis size 100000).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_algebra_parse(
    text: *const c_char,
    max_tip_length: usize,
    max_basis: usize,
    out: *mut *mut PpAlgebra,
) -> PpStatus {
    guard(|| {
        if out.is_null() {
            set_error("null argument".into());
            return PpStatus::NullArgument;
        }
        *out = ptr::null_mut();
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let built = parse_algebra(text).and_then(|f| algebra(&f, caps(max_tip_length, max_basis)));
        match built {
            Ok(a) => {
                *out = Box::into_raw(Box::new(PpAlgebra { inner: a }));
                PpStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `algebra` must come from [`pp_algebra_parse`] or be null.
#[no_mangle]
pub unsafe extern "C" fn pp_algebra_free(algebra: *mut PpAlgebra) {
    if !algebra.is_null() {
        drop(Box::from_raw(algebra));
    }
}

/// # Safety
/// `algebra` must be a live handle and `dim` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_algebra_dim(algebra: *const PpAlgebra, dim: *mut usize) -> PpStatus {
    guard(|| {
        if algebra.is_null() || dim.is_null() {
            set_error("null argument".into());
            return PpStatus::NullArgument;
        }
        *dim = (*algebra).inner.dim();
        PpStatus::Ok
    })
}

/// Dimensions of HH^0 and HH^1.
///
/// # Safety
/// `algebra` must be a live handle; `hh0` and `hh1` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pp_algebra_hh_dims(algebra: *const PpAlgebra, hh0: *mut usize, hh1: *mut usize) -> PpStatus {
    guard(|| {
        if algebra.is_null() || hh0.is_null() || hh1.is_null() {
            set_error("null argument".into());
            return PpStatus::NullArgument;
        }
        let pp = ParallelPaths::new(&(*algebra).inner);
        *hh0 = pp.hh0_dim();
        *hh1 = pp.hh1_dim();
        PpStatus::Ok
    })
}

/// The `hh` report as `key=value` lines.
///
/// # Safety
/// `algebra` must be a live handle and `out` a valid pointer; free the
/// result with [`pp_string_free`].
#[no_mangle]
pub unsafe extern "C" fn pp_algebra_hh_report(algebra: *const PpAlgebra, out: *mut *mut c_char) -> PpStatus {
    guard(|| {
        if algebra.is_null() || out.is_null() {
            set_error("null argument".into());
            return PpStatus::NullArgument;
        }
        hand_out(hh_report(&(*algebra).inner).render_machine(), out);
        PpStatus::Ok
    })
}

/// Invariant report of a Brauer graph algebra and its associated graded
/// algebra as `key=value` lines. `passed` is set to 1 when no identity check
/// failed.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` and `passed` valid
/// pointers. Free the result with [`pp_string_free`].
#[no_mangle]
pub unsafe extern "C" fn pp_brauer_report(
    text: *const c_char,
    max_tip_length: usize,
    max_basis: usize,
    out: *mut *mut c_char,
    passed: *mut i32,
) -> PpStatus {
    guard(|| {
        if out.is_null() || passed.is_null() {
            set_error("null argument".into());
            return PpStatus::NullArgument;
        }
        *out = ptr::null_mut();
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let c = caps(max_tip_length, max_basis);
        match parse_brauer(text).and_then(|(field, g)| invariant_report(&g, field, c.max_tip_length, c.max_basis)) {
            Ok(r) => {
                *passed = r.passed() as i32;
                hand_out(bga_report_entries(&r).render_machine(), out);
                PpStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn pp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn pp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
