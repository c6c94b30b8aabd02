use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use cubicq_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(cq_last_error()) }.to_str().unwrap().to_owned()
}

fn parse(src: &str) -> *mut CqElement {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cq_element_parse(c(src).as_ptr(), 3, &mut out) }, CqStatus::Ok, "{}", last_error());
    out
}

fn to_json(el: *const CqElement) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { cq_element_to_json(el, &mut s) }, CqStatus::Ok);
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { cq_string_free(s) };
    out
}

#[test]
fn normal_form_through_handles() {
    let x = parse("[2 1 2] - [1 2 1] + a*[1 1 1]");
    let mut sys = ptr::null_mut();
    assert_eq!(unsafe { cq_system_new(CqSystemKind::Positive, &mut sys) }, CqStatus::Ok);
    let mut nf = ptr::null_mut();
    assert_eq!(unsafe { cq_system_normal_form(sys, x, &mut nf) }, CqStatus::Ok);
    let expected = cubicq::rewrite::build_system(cubicq::rewrite::SystemKind::Positive)
        .unwrap()
        .normal_form(&cubicq::expr::eval_elem("a*[1 1 1]", 3).unwrap())
        .unwrap();
    assert_eq!(to_json(nf), serde_json::to_string(&expected.to_json()).unwrap());
    unsafe {
        cq_element_free(nf);
        cq_element_free(x);
        cq_system_free(sys);
    }
}

#[test]
fn json_round_trip_and_zero_test() {
    let x = parse("[1 -2] - [1 -2]");
    let mut zero = false;
    assert_eq!(unsafe { cq_element_is_zero(x, &mut zero) }, CqStatus::Ok);
    assert!(zero);
    let y = parse("b*[1 2] - [2]");
    let json = to_json(y);
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { cq_element_from_json(c(&json).as_ptr(), &mut back) }, CqStatus::Ok);
    assert_eq!(to_json(back), json);
    unsafe {
        cq_element_free(x);
        cq_element_free(y);
        cq_element_free(back);
    }
}

#[test]
fn membership_of_the_defining_relations() {
    let r1 = cubicq::freealg::defining_relations().0;
    let mut el = ptr::null_mut();
    let json = c(&serde_json::to_string(&r1.to_json()).unwrap());
    assert_eq!(unsafe { cq_element_from_json(json.as_ptr(), &mut el) }, CqStatus::Ok);
    let mut member = false;
    assert_eq!(unsafe { cq_ideal_member(el, &mut member) }, CqStatus::Ok);
    assert!(member);
    let other = parse("[1] - [2]");
    assert_eq!(unsafe { cq_ideal_member(other, &mut member) }, CqStatus::Ok);
    assert!(!member);
    unsafe {
        cq_element_free(el);
        cq_element_free(other);
    }
}

#[test]
fn error_codes() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cq_element_parse(c("[1 2").as_ptr(), 3, &mut out) }, CqStatus::ParseError);
    assert!(last_error().contains("parse error"), "{}", last_error());
    assert!(out.is_null());
    assert_eq!(unsafe { cq_element_parse(ptr::null(), 3, &mut out) }, CqStatus::NullPointer);
    assert_eq!(unsafe { cq_element_parse(c("[1]").as_ptr(), 1, &mut out) }, CqStatus::InvalidArgument);
    assert_eq!(unsafe { cq_element_parse(c("[1]").as_ptr(), 3, ptr::null_mut()) }, CqStatus::NullPointer);
    let bad = [0xffu8, 0];
    assert_eq!(unsafe { cq_element_parse(bad.as_ptr().cast(), 3, &mut out) }, CqStatus::InvalidUtf8);
    assert_eq!(unsafe { cq_element_from_json(c("{").as_ptr(), &mut out) }, CqStatus::ParseError);
    let mut zero = false;
    assert_eq!(unsafe { cq_element_is_zero(ptr::null(), &mut zero) }, CqStatus::NullPointer);
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { cq_verify(c("nothing").as_ptr(), 1, &mut report) }, CqStatus::InvalidArgument);
    // Success clears the message.
    let x = parse("[1]");
    assert_eq!(last_error(), "");
    unsafe {
        cq_element_free(x);
        cq_element_free(ptr::null_mut());
        cq_string_free(ptr::null_mut());
    }
}

#[test]
fn verification_reports() {
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { cq_verify(c("handles").as_ptr(), 7, &mut report) }, CqStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(unsafe { CStr::from_ptr(report) }.to_str().unwrap()).unwrap();
    assert_eq!(v["suites"][0]["suite"], "handles");
    unsafe { cq_string_free(report) };
    assert_eq!(unsafe { cq_verify(c("weights").as_ptr(), 7, &mut report) }, CqStatus::VerificationFailed);
    assert!(!report.is_null());
    assert!(last_error().starts_with("failing:"));
    unsafe { cq_string_free(report) };
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/cubicq.h")).unwrap();
    for name in [
        "cq_last_error",
        "cq_string_free",
        "cq_element_parse",
        "cq_element_from_json",
        "cq_element_to_json",
        "cq_element_is_zero",
        "cq_element_free",
        "cq_system_new",
        "cq_system_normal_form",
        "cq_system_free",
        "cq_ideal_member",
        "cq_verify",
        "typedef struct CqElement CqElement",
        "CQ_STATUS_VERIFICATION_FAILED = 5",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

/// Compiles a C program against the header and the static library and runs it.
#[test]
fn c_program_links_against_the_static_library() {
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap();
    let lib = profile_dir.join("libcubicq_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let out = std::env::temp_dir().join(format!("cubicq_smoke_{}", std::process::id()));
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .expect("a C compiler is available");
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(run.status.success(), "exit {:?}", run.status.code());
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
