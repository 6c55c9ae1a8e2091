//! Exercises the C surface from Rust: handle lifecycle, status codes,
//! and agreement with the underlying library.

use std::ffi::{CStr, CString};
use std::ptr;

use bsts_ffi::*;

fn family(name: &str, parameter: u32) -> *mut BstsConfiguration {
    let name = CString::new(name).unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { bsts_configuration_family(name.as_ptr(), parameter, &mut out) };
    assert_eq!(status, BstsStatus::Ok);
    assert!(!out.is_null());
    out
}

#[test]
fn family_counts_round_trip() {
    let cfg = family("desargues", 5);
    unsafe {
        assert_eq!(bsts_configuration_points(cfg), 10);
        assert_eq!(bsts_configuration_lines(cfg), 10);
        let mut psts = false;
        assert_eq!(bsts_configuration_is_psts(cfg, &mut psts), BstsStatus::Ok);
        assert!(psts);
        let mut order = 0;
        assert_eq!(
            bsts_configuration_binomial_order(cfg, &mut order),
            BstsStatus::Ok
        );
        assert_eq!(order, 5);
        let mut count = 0u64;
        assert_eq!(bsts_hyperplane_count(cfg, &mut count), BstsStatus::Ok);
        assert_eq!(count, 15);
        let mut dim = 0i32;
        assert_eq!(bsts_veldkamp_dimension(cfg, &mut dim), BstsStatus::Ok);
        assert_eq!(dim, 3);
        let mut free = 0u64;
        assert_eq!(bsts_free_graph_count(cfg, 4, &mut free), BstsStatus::Ok);
        assert_eq!(free, 5);
        bsts_configuration_free(cfg);
    }
}

#[test]
fn serialize_then_parse_preserves_the_configuration() {
    let cfg = family("veronesian", 3);
    unsafe {
        let name = CString::new("veronesian-3").unwrap();
        let mut text = ptr::null_mut();
        assert_eq!(
            bsts_configuration_serialize(cfg, name.as_ptr(), &mut text),
            BstsStatus::Ok
        );
        let mut reparsed = ptr::null_mut();
        assert_eq!(
            bsts_configuration_parse(text as *const _, &mut reparsed),
            BstsStatus::Ok
        );
        let mut iso = false;
        assert_eq!(bsts_is_isomorphic(cfg, reparsed, &mut iso), BstsStatus::Ok);
        assert!(iso);
        bsts_string_free(text);
        bsts_configuration_free(reparsed);
        bsts_configuration_free(cfg);
    }
}

#[test]
fn isomorphism_and_certificates_agree() {
    // V(3,2) and G(4,2) are the same configuration
    let a = family("veronesian", 2);
    let b = family("desargues", 4);
    unsafe {
        let mut iso = false;
        assert_eq!(bsts_is_isomorphic(a, b, &mut iso), BstsStatus::Ok);
        assert!(iso);
        let (mut ca, mut cb) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(bsts_certificate_hex(a, &mut ca), BstsStatus::Ok);
        assert_eq!(bsts_certificate_hex(b, &mut cb), BstsStatus::Ok);
        assert_eq!(CStr::from_ptr(ca).to_str(), CStr::from_ptr(cb).to_str());
        bsts_string_free(ca);
        bsts_string_free(cb);
        bsts_configuration_free(a);
        bsts_configuration_free(b);
    }
}

#[test]
fn dot_export_carries_labels() {
    let cfg = family("desargues", 5);
    unsafe {
        let mut text = ptr::null_mut();
        assert_eq!(bsts_veldkamp_dot(cfg, true, &mut text), BstsStatus::Ok);
        let dot = CStr::from_ptr(text).to_str().unwrap();
        assert_eq!(dot.matches("B(4,0)").count(), 5);
        bsts_string_free(text);
        bsts_configuration_free(cfg);
    }
}

#[test]
fn error_paths_set_messages() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(
            bsts_configuration_parse(ptr::null(), &mut out),
            BstsStatus::NullArgument
        );
        let bad = CString::new("{not json").unwrap();
        assert_eq!(
            bsts_configuration_parse(bad.as_ptr(), &mut out),
            BstsStatus::ParseError
        );
        let msg = bsts_last_error();
        assert!(!msg.is_null());
        assert!(CStr::from_ptr(msg).to_str().unwrap().contains("parse"));

        let unknown = CString::new("heptagon").unwrap();
        assert_eq!(
            bsts_configuration_family(unknown.as_ptr(), 5, &mut out),
            BstsStatus::ValidationError
        );

        // a Fano-plane document is a PSTS but not binomial
        let fano = r#"{
  "lines": [
    [0, 1, 2],
    [0, 3, 4],
    [0, 5, 6],
    [1, 3, 5],
    [1, 4, 6],
    [2, 3, 6],
    [2, 4, 5]
  ],
  "name": "fano",
  "points": [
    {"id": 0, "label": "p0"},
    {"id": 1, "label": "p1"},
    {"id": 2, "label": "p2"},
    {"id": 3, "label": "p3"},
    {"id": 4, "label": "p4"},
    {"id": 5, "label": "p5"},
    {"id": 6, "label": "p6"}
  ]
}"#;
        let text = CString::new(fano).unwrap();
        let mut cfg = ptr::null_mut();
        assert_eq!(
            bsts_configuration_parse(text.as_ptr(), &mut cfg),
            BstsStatus::Ok
        );
        let mut order = 0;
        assert_eq!(
            bsts_configuration_binomial_order(cfg, &mut order),
            BstsStatus::NotBinomial
        );
        bsts_configuration_free(cfg);

        let message = bsts_status_message(BstsStatus::BudgetExceeded);
        assert_eq!(
            CStr::from_ptr(message).to_str().unwrap(),
            "search budget exceeded"
        );
    }
}
