use std::ffi::{CStr, CString};
use std::ptr;

use hexcactus_ffi::*;

fn take(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { hc_string_free(p) };
    s
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(hc_last_error()) }.to_str().unwrap().to_owned()
}

fn probs(text: &str) -> *mut HcProbs {
    let text = CString::new(text).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { hc_probs_parse(text.as_ptr(), &mut p) }, HcStatus::Ok);
    p
}

#[test]
fn count_and_errors() {
    let seq = CString::new("o").unwrap();
    let mut out = ptr::null_mut();
    let st = unsafe { hc_count(seq.as_ptr(), 3, HcKind::Hosoya, HcEngine::Chain, &mut out) };
    assert_eq!(st, HcStatus::Ok);
    assert_eq!(take(out), "2932");

    let st = unsafe { hc_count(seq.as_ptr(), 4, HcKind::Hosoya, HcEngine::Chain, &mut out) };
    assert_eq!(st, HcStatus::InvalidInput);
    assert!(!last_error().is_empty());

    let long = CString::new("pppppppp").unwrap();
    let st = unsafe { hc_count(long.as_ptr(), 10, HcKind::MerrifieldSimmons, HcEngine::Brute, &mut out) };
    assert_eq!(st, HcStatus::Computation);
    assert!(last_error().contains("limit"));

    let st = unsafe { hc_count(ptr::null(), 3, HcKind::Hosoya, HcEngine::Chain, &mut out) };
    assert_eq!(st, HcStatus::NullPointer);
    let st = unsafe { hc_count(seq.as_ptr(), 3, HcKind::Hosoya, HcEngine::Chain, ptr::null_mut()) };
    assert_eq!(st, HcStatus::NullPointer);
}

#[test]
fn probabilities_and_expectation() {
    let bad = CString::new("0.3,0.3,0.3").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { hc_probs_parse(bad.as_ptr(), &mut p) }, HcStatus::InvalidInput);
    assert!(p.is_null());

    let p = probs("1/2,1/4,1/4");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hc_expectation(p, 2, HcKind::Hosoya, &mut out) }, HcStatus::Ok);
    assert_eq!(take(out), "224");
    assert_eq!(unsafe { hc_expectation(p, 0, HcKind::MerrifieldSimmons, &mut out) }, HcStatus::Ok);
    assert_eq!(take(out), "1");
    unsafe { hc_probs_free(p) };
    unsafe { hc_probs_free(ptr::null_mut()) };
}

#[test]
fn series_handles() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { hc_probs_pure(HcAttachment::Ortho, &mut p) }, HcStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { hc_series_new(p, HcKind::Hosoya, 5, &mut s) }, HcStatus::Ok);
    assert_eq!(unsafe { hc_series_len(s) }, 5);
    let got: Vec<_> = (0..5)
        .map(|i| unsafe { CStr::from_ptr(hc_series_get(s, i)) }.to_str().unwrap().to_owned())
        .collect();
    assert_eq!(got, ["1", "18", "224", "2932", "38076"]);
    assert!(unsafe { hc_series_get(s, 5) }.is_null());
    unsafe { hc_series_free(s) };

    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { hc_series_published(HcAttachment::Ortho, HcKind::MerrifieldSimmons, 3, &mut s) },
        HcStatus::Ok
    );
    assert_eq!(unsafe { CStr::from_ptr(hc_series_get(s, 0)) }.to_str().unwrap(), "2");
    unsafe { hc_series_free(s) };
    unsafe { hc_probs_free(p) };
    assert_eq!(unsafe { hc_series_len(ptr::null()) }, 0);
}

#[test]
fn graph_export() {
    let seq = CString::new("m").unwrap();
    let mut out = ptr::null_mut();
    let st = unsafe { hc_graph_dot(seq.as_ptr(), 3, -1, HcAttachment::Para, &mut out) };
    assert_eq!(st, HcStatus::Ok);
    let dot = take(out);
    assert!(dot.starts_with("graph cactus {"));
    assert_eq!(dot.matches(" -- ").count(), 18);
    let st = unsafe { hc_graph_dot(seq.as_ptr(), 3, 2, HcAttachment::Meta, &mut out) };
    assert_eq!(st, HcStatus::Ok);
    assert_eq!(take(out).matches(" -- ").count(), 22);
    let st = unsafe { hc_graph_dot(seq.as_ptr(), 3, 7, HcAttachment::Meta, &mut out) };
    assert_eq!(st, HcStatus::InvalidInput);
}

#[test]
fn monte_carlo_and_asymptotics() {
    let p = probs("1/3,1/3,1/3");
    let mut est = HcMcEstimate::default();
    assert_eq!(unsafe { hc_monte_carlo(p, 1, 10, 7, HcKind::Hosoya, &mut est) }, HcStatus::Ok);
    assert_eq!(est.mean, 18.0);
    assert_eq!(est.std_dev, 0.0);
    assert_eq!(est.trials, 10);
    assert_eq!(unsafe { hc_monte_carlo(p, 1, 0, 7, HcKind::Hosoya, &mut est) }, HcStatus::InvalidInput);
    unsafe { hc_probs_free(p) };

    let mut p = ptr::null_mut();
    unsafe { hc_probs_pure(HcAttachment::Ortho, &mut p) };
    let mut a = HcAsymptotic::default();
    assert_eq!(unsafe { hc_asymptotic(p, 60, HcKind::Hosoya, &mut a) }, HcStatus::Ok);
    assert!((a.growth_rate - 13.0).abs() < 1e-12);
    assert!((a.amplitude - 4.0 / 3.0).abs() < 1e-12);
    assert!(a.rel_err_pole < 1e-6);
    assert_eq!(unsafe { hc_asymptotic(p, 1, HcKind::Hosoya, &mut a) }, HcStatus::InvalidInput);
    unsafe { hc_probs_free(p) };
}

#[test]
fn verify_and_version() {
    let mut passed = false;
    assert_eq!(unsafe { hc_verify(&mut passed) }, HcStatus::Ok);
    assert!(passed);
    let v = unsafe { CStr::from_ptr(hc_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_the_api() {
    let header = include_str!("../include/hexcactus.h");
    for name in ["hc_count", "hc_probs_parse", "hc_series_get", "hc_monte_carlo", "HC_STATUS_OK", "HcMcEstimate"] {
        assert!(header.contains(name), "{name}");
    }
}
