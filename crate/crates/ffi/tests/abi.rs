use std::ffi::{c_char, CStr, CString};
use std::ptr;

use reflexa_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn take(s: *mut c_char) -> serde_json::Value {
    let v = serde_json::from_str(unsafe { CStr::from_ptr(s) }.to_str().unwrap()).unwrap();
    unsafe { reflexa_string_free(s) };
    v
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(reflexa_last_error()) }.to_string_lossy().into_owned()
}

fn algebra(name: &str) -> *mut ReflexaAlgebra {
    let mut alg = ptr::null_mut();
    assert_eq!(unsafe { reflexa_algebra_new(c(name).as_ptr(), &mut alg) }, ReflexaStatus::Ok);
    alg
}

fn module(alg: *const ReflexaAlgebra, text: &str) -> *mut ReflexaModule {
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { reflexa_module_new(alg, c(text).as_ptr(), &mut m) }, ReflexaStatus::Ok, "{}", last_error());
    m
}

#[test]
fn duals_of_the_maximal_ideal() {
    let alg = algebra("lam");
    let m = module(alg, "m");
    let mut d = ptr::null_mut();
    let mut dd = ptr::null_mut();
    let (mut len, mut mu) = (0, 0);
    unsafe {
        assert_eq!(reflexa_module_dual(m, &mut d), ReflexaStatus::Ok);
        assert_eq!(reflexa_module_dual(d, &mut dd), ReflexaStatus::Ok);
        assert_eq!(reflexa_module_size(d, &mut len, &mut mu), ReflexaStatus::Ok);
        assert_eq!((len, mu), (4, 4));
        assert_eq!(reflexa_module_size(dd, &mut len, &mut mu), ReflexaStatus::Ok);
        assert_eq!(len, 8);
        let (mut tl, mut refl) = (false, true);
        assert_eq!(reflexa_module_reflexivity(m, &mut tl, &mut refl), ReflexaStatus::Ok);
        assert!(tl && !refl);
        for h in [dd, d, m] {
            reflexa_module_free(h);
        }
        reflexa_algebra_free(alg);
    }
}

#[test]
fn json_reports() {
    let alg = algebra(r#"{"vars":["x","y"],"ideal":["x^2","x*y","y^3"]}"#);
    let mut out = ptr::null_mut();
    unsafe {
        let mut len = 0;
        assert_eq!(reflexa_algebra_length(alg, &mut len), ReflexaStatus::Ok);
        assert_eq!(len, 4);
        assert_eq!(reflexa_algebra_report_json(alg, &mut out), ReflexaStatus::Ok);
        assert_eq!(take(out)["bnsi"]["rule"], "m3=0,m2!=soc");
        let k = module(alg, "k");
        assert_eq!(reflexa_classify_json(k, 4, 10_000, &mut out), ReflexaStatus::Ok);
        let rep = take(out);
        assert_eq!(rep["reflexive"]["status"], "certified_false");
        assert_eq!(reflexa_resolve_json(k, 4, 10_000, &mut out), ReflexaStatus::Ok);
        assert_eq!(take(out)["betti"], serde_json::json!([1, 2, 4, 8, 16]));
        let m = module(alg, "m");
        assert_eq!(reflexa_tower_json(m, 3, 10_000, &mut out), ReflexaStatus::Ok);
        assert_eq!(take(out)["lengths"], serde_json::json!([3, 5, 9, 17]));
        reflexa_module_free(k);
        reflexa_module_free(m);
        reflexa_algebra_free(alg);
    }
}

#[test]
fn errors_are_reported_as_codes() {
    let mut alg = ptr::null_mut();
    unsafe {
        assert_eq!(reflexa_algebra_new(c("nope").as_ptr(), &mut alg), ReflexaStatus::InvalidInput);
        assert!(last_error().contains("unknown ring"));
        assert_eq!(reflexa_algebra_new(ptr::null(), &mut alg), ReflexaStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(reflexa_algebra_new(bad.as_ptr().cast(), &mut alg), ReflexaStatus::InvalidUtf8);
        assert!(alg.is_null());

        let alg = algebra("ex56");
        let mut m = ptr::null_mut();
        assert_eq!(reflexa_module_new(alg, c("q").as_ptr(), &mut m), ReflexaStatus::InvalidInput);
        let m = module(alg, "m");
        let mut out = ptr::null_mut();
        assert_eq!(reflexa_classify_json(m, 1, 10_000, &mut out), ReflexaStatus::InvalidInput);
        assert_eq!(reflexa_tower_json(m, 8, 20, &mut out), ReflexaStatus::BudgetExceeded);
        assert_eq!(take(out)["partial"], true);
        let mut len = 0;
        assert_eq!(reflexa_module_size(ptr::null(), &mut len, ptr::null_mut()), ReflexaStatus::NullPointer);
        assert_eq!(reflexa_module_size(m, ptr::null_mut(), ptr::null_mut()), ReflexaStatus::NullPointer);
        reflexa_module_free(m);
        reflexa_module_free(ptr::null_mut());
        reflexa_algebra_free(alg);
    }
}

#[test]
fn version_is_the_crate_version() {
    let v = unsafe { CStr::from_ptr(reflexa_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
