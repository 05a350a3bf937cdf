use std::ffi::{CStr, CString};
use std::ptr;

use hcseries_ffi::*;

fn cs(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    hc_string_free(s);
    out
}

#[test]
fn datum_roundtrip() {
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(hc_datum_new(cs("F4").as_ptr(), &mut d), HcStatus::Ok);
        assert_eq!(hc_datum_rank(d), 4);
        assert_eq!(hc_datum_order(d), 1152);
        hc_datum_free(d);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(hc_datum_new(cs("Q7").as_ptr(), &mut d), HcStatus::Usage);
        assert!(d.is_null());
        let msg = CStr::from_ptr(hc_last_error()).to_str().unwrap();
        assert!(msg.contains("Q7"), "{msg}");
        assert_eq!(hc_datum_new(ptr::null(), &mut d), HcStatus::NullArgument);

        assert_eq!(hc_datum_new(cs("F4").as_ptr(), &mut d), HcStatus::Ok);
        let mut counts = HcCounts::default();
        assert_eq!(hc_count_simples(d, cs("1/2,1/3").as_ptr(), 0, false, &mut counts), HcStatus::Resource);
        hc_datum_free(d);
    }
}

#[test]
fn qparam_and_counts() {
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(hc_datum_new(cs("D5").as_ptr(), &mut d), HcStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(hc_qparam(d, cs("D4").as_ptr(), cs("1/6").as_ptr(), cs("triv").as_ptr(), &mut s), HcStatus::Ok);
        assert_eq!(take(s), "q^2");
        hc_datum_free(d);

        assert_eq!(hc_datum_new(cs("A2").as_ptr(), &mut d), HcStatus::Ok);
        let mut counts = HcCounts::default();
        assert_eq!(hc_count_simples(d, cs("1/3").as_ptr(), 0, false, &mut counts), HcStatus::Ok);
        assert_eq!((counts.dim, counts.simples), (6, 2));
        hc_datum_free(d);
    }
}

#[test]
fn support_table_handle() {
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(hc_datum_new(cs("H3").as_ptr(), &mut d), HcStatus::Ok);
        let mut t = ptr::null_mut();
        assert_eq!(hc_count_supports(d, cs("1/2").as_ptr(), ptr::null(), false, &mut t), HcStatus::Ok);
        assert_eq!(hc_support_table_count(t, cs("1").as_ptr()), 5);
        assert_eq!(hc_support_table_count(t, cs("H3").as_ptr()), 3);
        let mut s = ptr::null_mut();
        assert_eq!(hc_support_table_render(t, true, &mut s), HcStatus::Ok);
        assert!(take(s).starts_with("parabolic_class,count,provenance_note"));
        hc_support_table_free(t);
        hc_datum_free(d);
    }
}

#[test]
fn header_declares_the_api() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/hcseries.h")).unwrap();
    for f in ["hc_datum_new", "hc_datum_free", "hc_qparam", "hc_count_simples", "hc_count_supports", "hc_support_table_render", "hc_last_error", "HC_STATUS_RESOURCE"] {
        assert!(h.contains(f), "{f} missing from header");
    }
}
