//! Drive the C ABI end to end: handle lifecycle, string ownership, status
//! codes and the verification entry point.

use std::ffi::{c_char, CStr};
use std::ptr;

use doublepoint_capi::{
    dp_castelnuovo, dp_class_delta, dp_class_free, dp_class_genus, dp_class_json, dp_class_lambda,
    dp_class_new, dp_class_psi, dp_count_ramified, dp_plucker_double_points, dp_string_free,
    dp_verify, dp_y_locus_degree, DpClass, DpStatus,
};

fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let s = unsafe { CStr::from_ptr(ptr) }
        .to_string_lossy()
        .into_owned();
    unsafe { dp_string_free(ptr) };
    s
}

#[test]
fn class_handle_lifecycle() {
    let mut handle: *mut DpClass = ptr::null_mut();
    assert_eq!(unsafe { dp_class_new(2, &mut handle) }, DpStatus::Ok);
    assert!(!handle.is_null());

    let mut genus = 0u32;
    assert_eq!(unsafe { dp_class_genus(handle, &mut genus) }, DpStatus::Ok);
    assert_eq!(genus, 6);

    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { dp_class_lambda(handle, &mut text) }, DpStatus::Ok);
    assert_eq!(take_string(text), "62");

    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { dp_class_psi(handle, &mut text) }, DpStatus::Ok);
    assert_eq!(take_string(text), "4");

    let expected = ["-8", "-30", "-52", "-60", "-54", "-34"];
    for (i, want) in expected.iter().enumerate() {
        let mut text: *mut c_char = ptr::null_mut();
        assert_eq!(
            unsafe { dp_class_delta(handle, i as u32, &mut text) },
            DpStatus::Ok
        );
        assert_eq!(&take_string(text), want);
    }
    // out-of-range boundary index
    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { dp_class_delta(handle, 6, &mut text) },
        DpStatus::InvalidInput
    );

    let mut json: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { dp_class_json(handle, &mut json) }, DpStatus::Ok);
    let json = take_string(json);
    assert!(json.contains("\"lambda\": \"62\""));

    unsafe { dp_class_free(handle) };
}

#[test]
fn unknown_interior_comes_back_null() {
    let mut handle: *mut DpClass = ptr::null_mut();
    assert_eq!(unsafe { dp_class_new(3, &mut handle) }, DpStatus::Ok);
    let mut text: *mut c_char = ptr::null_mut();
    // delta_4 at genus 9 is not determined: NULL, status Ok
    assert_eq!(
        unsafe { dp_class_delta(handle, 4, &mut text) },
        DpStatus::Ok
    );
    assert!(text.is_null());
    // delta_8 is determined
    assert_eq!(
        unsafe { dp_class_delta(handle, 8, &mut text) },
        DpStatus::Ok
    );
    assert_eq!(take_string(text), "-471");
    unsafe { dp_class_free(handle) };
}

#[test]
fn invalid_and_null_arguments() {
    let mut handle: *mut DpClass = ptr::null_mut();
    assert_eq!(
        unsafe { dp_class_new(0, &mut handle) },
        DpStatus::InvalidInput
    );
    assert_eq!(
        unsafe { dp_class_new(2, ptr::null_mut()) },
        DpStatus::NullArgument
    );
    assert_eq!(
        unsafe { dp_class_genus(ptr::null(), &mut 0u32) },
        DpStatus::NullArgument
    );
    assert_eq!(
        unsafe { dp_castelnuovo(-1, 2, 6, &mut ptr::null_mut()) },
        DpStatus::InvalidInput
    );
    assert_eq!(
        unsafe { dp_plucker_double_points(6, 1, &mut 0i64) },
        DpStatus::InvalidInput
    );
    // freeing NULL is a no-op
    unsafe { dp_string_free(ptr::null_mut()) };
    unsafe { dp_class_free(ptr::null_mut()) };
}

#[test]
fn counting_functions() {
    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { dp_castelnuovo(6, 2, 6, &mut text) }, DpStatus::Ok);
    assert_eq!(take_string(text), "5");

    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { dp_castelnuovo(9, 2, 8, &mut text) }, DpStatus::Ok);
    assert_eq!(take_string(text), "42");

    let alpha = [0i64, 0, 1];
    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { dp_count_ramified(4, 2, 5, alpha.as_ptr(), alpha.len(), &mut text) },
        DpStatus::Ok
    );
    assert_eq!(take_string(text), "3");

    // a decreasing sequence is invalid
    let bad = [2i64, 1, 0];
    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { dp_count_ramified(4, 2, 5, bad.as_ptr(), bad.len(), &mut text) },
        DpStatus::InvalidInput
    );

    let mut n = 0i64;
    assert_eq!(
        unsafe { dp_plucker_double_points(6, 6, &mut n) },
        DpStatus::Ok
    );
    assert_eq!(n, 4);
}

#[test]
fn pipeline_and_verification() {
    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { dp_y_locus_degree(3, &mut text) }, DpStatus::Ok);
    assert_eq!(take_string(text), "1848");

    assert_eq!(dp_verify(2), DpStatus::Ok);
    assert_eq!(dp_verify(0), DpStatus::InvalidInput);
}
