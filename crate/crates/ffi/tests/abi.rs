use std::ffi::{CStr, CString};
use std::ptr;

use easycat_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn parse(s: &str) -> *mut EcDiagram {
    let mut d = ptr::null_mut();
    assert_eq!(ec_diagram_parse(cstr(s).as_ptr(), &mut d), EcStatus::Ok);
    d
}

unsafe fn text(d: *const EcDiagram) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(ec_diagram_to_string(d, &mut s), EcStatus::Ok);
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    ec_string_free(s);
    out
}

#[test]
fn diagram_operations() {
    unsafe {
        let x = parse("www|www;u1-l3,u2-l2,u3-l1");
        let mut xx = ptr::null_mut();
        let mut loops = 99;
        assert_eq!(ec_diagram_compose(x, x, &mut xx, &mut loops), EcStatus::Ok);
        assert_eq!(loops, 0);
        assert_eq!(text(xx), "www|www;u1-l1,u2-l2,u3-l3");

        let (mut points, mut blocks) = (0, 0);
        assert_eq!(ec_diagram_shape(x, &mut points, &mut blocks), EcStatus::Ok);
        assert_eq!((points, blocks), (6, 3));

        let mut inside = false;
        assert_eq!(ec_diagram_in_class(x, cstr("P2star").as_ptr(), &mut inside), EcStatus::Ok);
        assert!(inside);
        assert_eq!(ec_diagram_in_class(x, cstr("NC2").as_ptr(), &mut inside), EcStatus::Ok);
        assert!(!inside);

        let mut t = ptr::null_mut();
        assert_eq!(ec_diagram_tensor(x, x, &mut t), EcStatus::Ok);
        assert_eq!(ec_diagram_shape(t, &mut points, ptr::null_mut()), EcStatus::Ok);
        assert_eq!(points, 12);

        let mut r = ptr::null_mut();
        assert_eq!(ec_diagram_rotate(x, &mut r), EcStatus::Ok);
        assert!(text(r).starts_with("ww|bwww;"));
        let mut inv = ptr::null_mut();
        assert_eq!(ec_diagram_involute(x, &mut inv), EcStatus::Ok);
        assert_eq!(text(inv), text(x));

        for d in [x, xx, t, r, inv] {
            ec_diagram_free(d);
        }
    }
}

#[test]
fn t_matrix_buffer() {
    unsafe {
        let cap = parse("|ww;l1-l2");
        let (mut rows, mut cols) = (0, 0);
        assert_eq!(
            ec_diagram_t_matrix(cap, 3, ptr::null_mut(), 0, &mut rows, &mut cols),
            EcStatus::BufferTooSmall
        );
        assert_eq!((rows, cols), (9, 1));
        let mut buf = vec![7u8; rows * cols];
        assert_eq!(
            ec_diagram_t_matrix(cap, 3, buf.as_mut_ptr(), buf.len(), &mut rows, &mut cols),
            EcStatus::Ok
        );
        assert_eq!(buf, [1, 0, 0, 0, 1, 0, 0, 0, 1]);
        ec_diagram_free(cap);
    }
}

#[test]
fn closure_handle() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(ec_closure_new(cstr("O_N*").as_ptr(), 6, &mut c), EcStatus::Ok);
        let mut n = 0;
        assert_eq!(ec_closure_size(c, &mut n), EcStatus::Ok);
        assert!(n > 0);

        let x = parse("www|www;u1-l3,u2-l2,u3-l1");
        let swap = parse("ww|ww;u1-l2,u2-l1");
        let mut m = EcMembership::NotFoundWithinBudget;
        assert_eq!(ec_closure_contains(c, x, &mut m), EcStatus::Ok);
        assert_eq!(m, EcMembership::In);
        assert_eq!(ec_closure_contains(c, swap, &mut m), EcStatus::Ok);
        assert_eq!(m, EcMembership::NotFoundWithinBudget);

        let mut json = ptr::null_mut();
        assert_eq!(ec_closure_to_json(c, &mut json), EcStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(CStr::from_ptr(json).to_str().unwrap()).unwrap();
        assert_eq!(v["saturated"], true);
        ec_string_free(json);

        ec_diagram_free(x);
        ec_diagram_free(swap);
        ec_closure_free(c);
    }
}

#[test]
fn brauer_report() {
    unsafe {
        let seeds = [1u64, 1001];
        let mut json = ptr::null_mut();
        let st = ec_brauer_json(cstr("U_N").as_ptr(), 2, 2, seeds.as_ptr(), seeds.len(), &mut json);
        assert_eq!(st, EcStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(CStr::from_ptr(json).to_str().unwrap()).unwrap();
        assert!(v["entries"].as_array().unwrap().iter().all(|e| e["verdict"] == "EQUAL"));
        ec_string_free(json);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(ec_diagram_parse(cstr("ww|;u1-u3").as_ptr(), &mut d), EcStatus::Parse);
        assert!(d.is_null());
        assert!(!ec_last_error().is_null());

        assert_eq!(ec_diagram_parse(ptr::null(), &mut d), EcStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(ec_diagram_parse(bad.as_ptr().cast(), &mut d), EcStatus::InvalidUtf8);

        let a = parse("w|w;u1-l1");
        let b = parse("b|b;u1-l1");
        let mut out = ptr::null_mut();
        assert_eq!(ec_diagram_compose(a, b, &mut out, ptr::null_mut()), EcStatus::ColorMismatch);
        let msg = CStr::from_ptr(ec_last_error()).to_str().unwrap();
        assert!(msg.contains("color mismatch"));

        let mut empty = ptr::null_mut();
        let e = parse("|w;l1");
        assert_eq!(ec_diagram_rotate(e, &mut empty), EcStatus::InvalidArgument);

        let mut c = ptr::null_mut();
        assert_eq!(ec_closure_new(cstr("nope").as_ptr(), 6, &mut c), EcStatus::UnknownName);
        assert_eq!(ec_closure_new(cstr("O_N").as_ptr(), 40, &mut c), EcStatus::SizeOverflow);

        assert_eq!(ec_diagram_parse(cstr("w|w;u1-l1").as_ptr(), &mut d), EcStatus::Ok);
        assert!(ec_last_error().is_null());
        assert_eq!(CStr::from_ptr(ec_status_name(EcStatus::Parse)).to_str().unwrap(), "parse error");

        for h in [a, b, e, d] {
            ec_diagram_free(h);
        }
        ec_diagram_free(ptr::null_mut());
        ec_closure_free(ptr::null_mut());
        ec_string_free(ptr::null_mut());
    }
}
