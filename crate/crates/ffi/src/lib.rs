//! C interface over the avoidance library.
//!
//! Patterns travel as opaque handles, reports as heap-allocated JSON strings.
//! Every fallible call returns an [`AvdStatus`] and writes its result through
//! an out pointer, which is left null on failure. Strings returned by this
//! library belong to it: release them with [`avd_string_free`], and handles
//! with [`avd_pattern_free`]. No call unwinds across the boundary.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use serde::Serialize;

use avoidance::{
    analyze, certify, contains_instance, golod_series, instance_series, min_growth_ratio,
    text_to_word, Error, Pattern,
};

/// Opaque pattern handle. Create with `avd_pattern_parse` or
/// `avd_pattern_zimin`, release with `avd_pattern_free`.
pub struct AvdPattern(Pattern);

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AvdStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The pattern or word text does not parse.
    ParseError = 3,
    /// Arguments were structurally valid but out of range for the call.
    InvalidArgument = 4,
    /// Enumeration hit its node budget before finishing.
    BudgetExceeded = 5,
    /// An internal invariant failed; the result cannot be trusted.
    InternalError = 6,
}

fn status_of(e: &Error) -> AvdStatus {
    match e {
        Error::EmptyPattern | Error::BadSymbol(_) => AvdStatus::ParseError,
        Error::InvalidArgument(_)
        | Error::InvalidTarget(_)
        | Error::OutOfRange { .. }
        | Error::NotInvertible
        | Error::BadCountSeries
        | Error::NotApplicable(_) => AvdStatus::InvalidArgument,
        Error::BudgetExceeded { .. } => AvdStatus::BudgetExceeded,
        Error::Internal(_) => AvdStatus::InternalError,
    }
}

/// Runs a body that may touch arbitrary library code, converting panics to
/// `InternalError` instead of unwinding into the caller.
fn guarded(f: impl FnOnce() -> AvdStatus) -> AvdStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(AvdStatus::InternalError)
}

/// The out pointer is assumed non-null; the string contains no interior nul
/// because every producer emits ASCII text.
unsafe fn export_string(s: String, out: *mut *mut c_char) -> AvdStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            AvdStatus::Ok
        }
        Err(_) => AvdStatus::InternalError,
    }
}

/// Parses pattern text (lowercase variable letters) into a new handle.
///
/// On success writes the handle to `out` and returns `Ok`; on failure leaves
/// `out` null.
///
/// # Safety
/// `text` must point to a nul-terminated string; `out` must be valid for one
/// pointer write.
#[no_mangle]
pub unsafe extern "C" fn avd_pattern_parse(
    text: *const c_char,
    out: *mut *mut AvdPattern,
) -> AvdStatus {
    if text.is_null() || out.is_null() {
        return AvdStatus::NullArgument;
    }
    *out = ptr::null_mut();
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return AvdStatus::InvalidUtf8;
    };
    guarded(|| match Pattern::parse(text) {
        Ok(p) => {
            *out = Box::into_raw(Box::new(AvdPattern(p)));
            AvdStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Builds the k-th sesquipower (the canonical unavoidable pattern of length
/// 2^k - 1) as a new handle.
///
/// # Safety
/// `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn avd_pattern_zimin(k: u32, out: *mut *mut AvdPattern) -> AvdStatus {
    if out.is_null() {
        return AvdStatus::NullArgument;
    }
    *out = ptr::null_mut();
    guarded(|| match Pattern::zimin(k) {
        Ok(p) => {
            *out = Box::into_raw(Box::new(AvdPattern(p)));
            AvdStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Releases a pattern handle. Null is ignored.
///
/// # Safety
/// `p` must have come from this library and not been freed already.
#[no_mangle]
pub unsafe extern "C" fn avd_pattern_free(p: *mut AvdPattern) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Returns the canonical text of the pattern as a new string, or null if the
/// handle is null. Release with `avd_string_free`.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn avd_pattern_canonical(p: *const AvdPattern) -> *mut c_char {
    let Some(p) = p.as_ref() else {
        return ptr::null_mut();
    };
    CString::new(p.0.render()).map_or(ptr::null_mut(), CString::into_raw)
}

/// Number of distinct variables, or 0 if the handle is null.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn avd_pattern_variables(p: *const AvdPattern) -> usize {
    p.as_ref().map_or(0, |p| p.0.variable_count())
}

/// Pattern length in symbols, or 0 if the handle is null.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn avd_pattern_length(p: *const AvdPattern) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Smallest number of times any variable occurs, or 0 if the handle is null.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn avd_pattern_min_occurrence(p: *const AvdPattern) -> usize {
    p.as_ref().map_or(0, |p| p.0.min_occurrence())
}

/// Writes the structural report for a pattern as a JSON document.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn avd_analyze_json(
    p: *const AvdPattern,
    out: *mut *mut c_char,
) -> AvdStatus {
    if p.is_null() || out.is_null() {
        return AvdStatus::NullArgument;
    }
    *out = ptr::null_mut();
    let p = &(*p).0;
    guarded(|| export_string(analyze(p).to_json(), out))
}

/// Runs the certification pipeline for a pattern against `target_m` letters,
/// checking the bound series through `order`, and writes the certificate as
/// a JSON document.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn avd_certify_json(
    p: *const AvdPattern,
    target_m: u32,
    order: usize,
    out: *mut *mut c_char,
) -> AvdStatus {
    if p.is_null() || out.is_null() {
        return AvdStatus::NullArgument;
    }
    *out = ptr::null_mut();
    let p = &(*p).0;
    guarded(|| match certify(p, target_m, order) {
        Ok(cert) => export_string(cert.to_json(), out),
        Err(e) => status_of(&e),
    })
}

#[derive(Serialize)]
struct GolodDocument {
    pattern: String,
    m: u32,
    order: usize,
    coefficients: Vec<String>,
    first_negative: Option<usize>,
    min_growth: Option<GolodGrowth>,
}

#[derive(Serialize)]
struct GolodGrowth {
    num: String,
    den: String,
}

/// Computes the lower-bound series for a pattern over `m` letters through
/// `order` and writes it, with its first sign change and minimum growth
/// ratio, as a JSON document.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn avd_golod_json(
    p: *const AvdPattern,
    m: u32,
    order: usize,
    out: *mut *mut c_char,
) -> AvdStatus {
    if p.is_null() || out.is_null() {
        return AvdStatus::NullArgument;
    }
    *out = ptr::null_mut();
    let p = &(*p).0;
    guarded(|| {
        let series = instance_series(p.occurrence_counts(), m, order)
            .and_then(|c| golod_series(m, &c, order));
        let b = match series {
            Ok(b) => b,
            Err(e) => return status_of(&e),
        };
        let doc = GolodDocument {
            pattern: p.render(),
            m,
            order,
            coefficients: b.coeffs().iter().map(|c| c.to_string()).collect(),
            first_negative: b.first_negative(),
            min_growth: min_growth_ratio(&b).ok().map(|r| GolodGrowth {
                num: r.numer().to_string(),
                den: r.denom().to_string(),
            }),
        };
        export_string(serde_json::to_string(&doc).expect("serialization"), out)
    })
}

/// Tests whether a word (lowercase letters) contains any instance of the
/// pattern, writing the answer to `out`.
///
/// # Safety
/// `word` must point to a nul-terminated string; `p` must be a live handle;
/// `out` must be valid for one bool write.
#[no_mangle]
pub unsafe extern "C" fn avd_contains_instance(
    word: *const c_char,
    p: *const AvdPattern,
    out: *mut bool,
) -> AvdStatus {
    if word.is_null() || p.is_null() || out.is_null() {
        return AvdStatus::NullArgument;
    }
    let Ok(text) = CStr::from_ptr(word).to_str() else {
        return AvdStatus::InvalidUtf8;
    };
    let p = &(*p).0;
    guarded(|| match text_to_word(text) {
        Ok(w) => {
            *out = contains_instance(&w, p);
            AvdStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must have come from this library and not been freed already.
#[no_mangle]
pub unsafe extern "C" fn avd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Static description of a status code. Never null; do not free.
#[no_mangle]
pub extern "C" fn avd_status_message(status: AvdStatus) -> *const c_char {
    let msg: &'static CStr = match status {
        AvdStatus::Ok => c"ok",
        AvdStatus::NullArgument => c"required pointer argument was null",
        AvdStatus::InvalidUtf8 => c"string argument was not valid utf-8",
        AvdStatus::ParseError => c"pattern or word text does not parse",
        AvdStatus::InvalidArgument => c"argument out of range for this call",
        AvdStatus::BudgetExceeded => c"enumeration budget exceeded",
        AvdStatus::InternalError => c"internal invariant failed",
    };
    msg.as_ptr()
}

/// Library version as a static string. Do not free.
#[no_mangle]
pub extern "C" fn avd_version() -> *const c_char {
    const VERSION: &CStr = {
        const BYTES: &[u8] = concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes();
        match CStr::from_bytes_with_nul(BYTES) {
            Ok(v) => v,
            Err(_) => unreachable!(),
        }
    };
    VERSION.as_ptr()
}
