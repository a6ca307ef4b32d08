//! C ABI for the divisor-class calculator.
//!
//! Conventions: every function returns a [`DpStatus`]; results come back
//! through out-pointers. Divisor classes are opaque handles created with
//! [`dp_class_new`] and released with [`dp_class_free`]. Rational values
//! cross the boundary as NUL-terminated ASCII strings in lowest terms
//! (`"p"` or `"p/q"`), allocated by Rust and released with
//! [`dp_string_free`]. Panics never unwind across the boundary.

use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use doublepoint::brill_noether::{self, RamificationSeq};
use doublepoint::divisor::{self, DivisorClass};
use doublepoint::report;
use doublepoint::{rational_str, Error};

/// Status code of every C-ABI call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DpStatus {
    /// The call succeeded.
    Ok = 0,
    /// Arguments were malformed or out of range.
    InvalidInput = 1,
    /// An internal consistency check against a known closed form failed.
    VerificationFailed = 2,
    /// The engine itself misbehaved.
    InternalError = 3,
    /// A required pointer argument was NULL.
    NullArgument = 4,
    /// A panic was caught at the boundary.
    Panic = 5,
}

fn status_of(e: &Error) -> DpStatus {
    match e {
        Error::InvalidInput(_) => DpStatus::InvalidInput,
        Error::Verification(_) => DpStatus::VerificationFailed,
        Error::Internal(_) => DpStatus::InternalError,
    }
}

fn guarded<F: FnOnce() -> DpStatus + UnwindSafe>(f: F) -> DpStatus {
    catch_unwind(f).unwrap_or(DpStatus::Panic)
}

fn export_string(s: String, out: *mut *mut c_char) -> DpStatus {
    match CString::new(s) {
        Ok(cs) => {
            unsafe { *out = cs.into_raw() };
            DpStatus::Ok
        }
        Err(_) => DpStatus::InternalError,
    }
}

/// Opaque handle to a computed divisor class.
pub struct DpClass {
    s: u32,
    class: DivisorClass,
}

/// Compute the divisor class at parameter `s` (genus `3s`) and return an
/// opaque handle through `out`.
///
/// # Safety
/// `out` must be NULL or point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn dp_class_new(s: u32, out: *mut *mut DpClass) -> DpStatus {
    if out.is_null() {
        return DpStatus::NullArgument;
    }
    guarded(|| match divisor::full_class(s) {
        Ok(class) => {
            let handle = Box::new(DpClass { s, class });
            unsafe { *out = Box::into_raw(handle) };
            DpStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Release a handle returned by `dp_class_new`. NULL is ignored.
///
/// # Safety
/// `handle` must be NULL or a pointer returned by `dp_class_new` that has
/// not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn dp_class_free(handle: *mut DpClass) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Genus of the class held by the handle.
///
/// # Safety
/// `handle` must be a live pointer from `dp_class_new`.
#[no_mangle]
pub unsafe extern "C" fn dp_class_genus(handle: *const DpClass, out: *mut u32) -> DpStatus {
    if handle.is_null() || out.is_null() {
        return DpStatus::NullArgument;
    }
    unsafe { *out = (*handle).class.genus as u32 };
    DpStatus::Ok
}

/// Coefficient of the Hodge class, as a rational string.
///
/// # Safety
/// `handle` must be a live pointer from `dp_class_new`.
#[no_mangle]
pub unsafe extern "C" fn dp_class_lambda(
    handle: *const DpClass,
    out: *mut *mut c_char,
) -> DpStatus {
    if handle.is_null() || out.is_null() {
        return DpStatus::NullArgument;
    }
    let text = rational_str(&unsafe { &*handle }.class.lambda);
    export_string(text, out)
}

/// Coefficient of the cotangent class at the marked point.
///
/// # Safety
/// `handle` must be a live pointer from `dp_class_new`.
#[no_mangle]
pub unsafe extern "C" fn dp_class_psi(handle: *const DpClass, out: *mut *mut c_char) -> DpStatus {
    if handle.is_null() || out.is_null() {
        return DpStatus::NullArgument;
    }
    let text = rational_str(&unsafe { &*handle }.class.psi);
    export_string(text, out)
}

/// Coefficient of the boundary class `delta_i`. For interior coefficients
/// the computation does not determine (genus other than six), `*out` is set
/// to NULL and the call still succeeds.
///
/// # Safety
/// `handle` must be a live pointer from `dp_class_new`.
#[no_mangle]
pub unsafe extern "C" fn dp_class_delta(
    handle: *const DpClass,
    index: u32,
    out: *mut *mut c_char,
) -> DpStatus {
    if handle.is_null() || out.is_null() {
        return DpStatus::NullArgument;
    }
    let class = &unsafe { &*handle }.class;
    let Some(slot) = class.deltas.get(index as usize) else {
        return DpStatus::InvalidInput;
    };
    match slot {
        Some(q) => export_string(rational_str(q), out),
        None => {
            unsafe { *out = ptr::null_mut() };
            DpStatus::Ok
        }
    }
}

/// Full JSON report for the class held by the handle (same schema as the
/// command-line `class --json` output).
///
/// # Safety
/// `handle` must be a live pointer from `dp_class_new`.
#[no_mangle]
pub unsafe extern "C" fn dp_class_json(handle: *const DpClass, out: *mut *mut c_char) -> DpStatus {
    if handle.is_null() || out.is_null() {
        return DpStatus::NullArgument;
    }
    let s = unsafe { &*handle }.s;
    guarded(
        || match report::class_report(s, false).and_then(|r| report::to_json(&r)) {
            Ok(json) => export_string(json, out),
            Err(e) => status_of(&e),
        },
    )
}

/// Release a string allocated by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a pointer previously returned through one of the
/// string out-parameters, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Castelnuovo count of series of type `(r, d)` on a general genus-`g`
/// curve, as a rational string.
///
/// # Safety
/// `out` must be NULL or point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn dp_castelnuovo(g: i64, r: i64, d: i64, out: *mut *mut c_char) -> DpStatus {
    if out.is_null() {
        return DpStatus::NullArgument;
    }
    if g < 0 || r < 0 || d < 0 {
        return DpStatus::InvalidInput;
    }
    guarded(|| export_string(rational_str(&brill_noether::castelnuovo(g, r, d)), out))
}

/// Count of series with the prescribed ramification sequence
/// `alpha[0..alpha_len]` at a general point.
///
/// # Safety
/// `alpha` must point to `alpha_len` readable `int64_t` values.
#[no_mangle]
pub unsafe extern "C" fn dp_count_ramified(
    g: i64,
    r: i64,
    d: i64,
    alpha: *const i64,
    alpha_len: usize,
    out: *mut *mut c_char,
) -> DpStatus {
    if alpha.is_null() || out.is_null() {
        return DpStatus::NullArgument;
    }
    let alphas = unsafe { std::slice::from_raw_parts(alpha, alpha_len) }.to_vec();
    guarded(|| {
        let seq = match RamificationSeq::new(alphas.clone()) {
            Ok(seq) => seq,
            Err(e) => return status_of(&e),
        };
        match brill_noether::count_ramified(g, r, d, &seq) {
            Ok(n) => export_string(rational_str(&n), out),
            Err(e) => status_of(&e),
        }
    })
}

/// Pluecker count of double points of a degree-`d` plane model of a
/// genus-`g` curve.
///
/// # Safety
/// `out` must be NULL or point to writable storage for one `int64_t`.
#[no_mangle]
pub unsafe extern "C" fn dp_plucker_double_points(g: i64, d: i64, out: *mut i64) -> DpStatus {
    if out.is_null() {
        return DpStatus::NullArgument;
    }
    if d < 2 {
        return DpStatus::InvalidInput;
    }
    unsafe { *out = brill_noether::plucker_double_points(g, d) };
    DpStatus::Ok
}

/// Degree of the rank-one degeneracy locus on the triple product, as a
/// rational string; runs the full symbolic pipeline with all of its
/// internal golden checks.
///
/// # Safety
/// `out` must be NULL or point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn dp_y_locus_degree(s: u32, out: *mut *mut c_char) -> DpStatus {
    if out.is_null() {
        return DpStatus::NullArgument;
    }
    guarded(|| match divisor::y_locus_degree(s) {
        Ok(q) => export_string(rational_str(&q), out),
        Err(e) => status_of(&e),
    })
}

/// Run the complete verification suite for every parameter from 1 to
/// `max_s`. Returns `Ok` exactly when every check passes.
#[no_mangle]
pub extern "C" fn dp_verify(max_s: u32) -> DpStatus {
    guarded(|| {
        let s_values: Vec<u32> = (1..=max_s).collect();
        if s_values.is_empty() {
            return DpStatus::InvalidInput;
        }
        match report::verify_report(&s_values) {
            Ok(r) if r.outputs.all_pass => DpStatus::Ok,
            Ok(_) => DpStatus::VerificationFailed,
            Err(e) => status_of(&e),
        }
    })
}
