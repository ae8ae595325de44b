use std::ffi::{CStr, CString};
use std::ptr;

use n4lp_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    n4_string_free(s);
    out
}

unsafe fn parse(text: &str) -> *mut N4Program {
    let mut p = ptr::null_mut();
    assert_eq!(n4_program_parse(c(text).as_ptr(), -1, &mut p), N4Status::Ok);
    p
}

#[test]
fn minimal_models_of_even_loop() {
    unsafe {
        let p = parse("a :- not b. b :- not a.");
        assert_eq!(n4_program_atom_count(p), 2);
        let mut m = ptr::null_mut();
        assert_eq!(n4_program_models(p, N4ModelFilter::Minimal, 0, &mut m), N4Status::Ok);
        assert_eq!(n4_model_set_len(m), 3);
        // descending order: {a, ¬²a, ¬²b}, {¬²a, ¬²b}, {¬²a, b, ¬²b}
        let mut state = 9;
        assert_eq!(n4_model_set_state(m, 0, 0, &mut state), N4Status::Ok);
        assert_eq!(state, 2);
        assert_eq!(n4_model_set_state(m, 1, 1, &mut state), N4Status::Ok);
        assert_eq!(state, 1);
        assert_eq!(n4_model_set_state(m, 3, 0, &mut state), N4Status::OutOfRange);

        let mut json = ptr::null_mut();
        assert_eq!(n4_model_set_json(m, &mut json), N4Status::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(v["stable"], serde_json::json!([["a"], ["b"]]));
        n4_model_set_free(m);
        n4_program_free(p);
    }
}

#[test]
fn both_stable_methods_agree() {
    unsafe {
        let p = parse("p :- not p, not a. a :- not b. b :- not a.");
        for method in [N4StableMethod::Reduct, N4StableMethod::Minimal] {
            let mut s = ptr::null_mut();
            assert_eq!(n4_program_stable_json(p, method, 0, &mut s), N4Status::Ok);
            assert_eq!(take(s), r#"[["a"]]"#);
        }
        n4_program_free(p);
    }
}

#[test]
fn atom_names_and_ground_text() {
    unsafe {
        let p = parse("q(X) :- r(X), not s. r(k).");
        let mut name = ptr::null_mut();
        assert_eq!(n4_program_atom_name(p, 0, &mut name), N4Status::Ok);
        assert_eq!(take(name), "q(k)");
        let mut text = ptr::null_mut();
        assert_eq!(n4_program_ground_text(p, &mut text), N4Status::Ok);
        assert!(take(text).contains("q(k) :- r(k), not s."));
        n4_program_free(p);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(n4_program_parse(c("p :- ").as_ptr(), -1, &mut p), N4Status::Parse);
        assert!(p.is_null());
        assert!(!n4_last_error().is_null());

        assert_eq!(n4_program_parse(c("p(f(X)) :- p(X). p(a).").as_ptr(), -1, &mut p), N4Status::InfiniteUniverse);
        assert_eq!(n4_program_parse(ptr::null(), -1, &mut p), N4Status::NullArgument);

        let wide: String = (0..13).map(|i| format!("a{i}. ")).collect();
        let p = parse(&wide);
        let mut m = ptr::null_mut();
        assert_eq!(n4_program_models(p, N4ModelFilter::All, 0, &mut m), N4Status::SearchSpaceTooLarge);
        let msg = CStr::from_ptr(n4_last_error()).to_str().unwrap();
        assert!(msg.contains("13"), "{msg}");
        n4_program_free(p);
        n4_program_free(ptr::null_mut());
        n4_model_set_free(ptr::null_mut());
        n4_string_free(ptr::null_mut());
    }
}

#[test]
fn eval_formula() {
    let interp = c(r#"{"domain": ["d"], "preds": {"p": {"arity": 0, "pos": [], "dneg": [[]]}}}"#);
    let mut v = false;
    unsafe {
        assert_eq!(n4_eval(c("~p & ~~p").as_ptr(), interp.as_ptr(), false, &mut v), N4Status::Ok);
        assert!(v);
        assert_eq!(n4_eval(c("p | ~~~p").as_ptr(), interp.as_ptr(), false, &mut v), N4Status::Ok);
        assert!(!v);
        assert_eq!(n4_eval(c("p &").as_ptr(), interp.as_ptr(), false, &mut v), N4Status::Parse);
        assert_eq!(n4_eval(c("p").as_ptr(), c("{").as_ptr(), false, &mut v), N4Status::Interpretation);
    }
}

#[test]
fn header_is_current() {
    let header = include_str!("../include/n4lp.h");
    for sym in ["n4_program_parse", "n4_model_set_json", "n4_eval", "N4_STATUS_SEARCH_SPACE_TOO_LARGE", "typedef struct N4Program N4Program"] {
        assert!(header.contains(sym), "{sym}");
    }
}

#[test]
fn c_smoke() {
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler; skipping");
        return;
    };
    let dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = dir.join("libn4lp_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; skipping", lib.display());
        return;
    }
    let manifest = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::temp_dir().join(format!("n4lp_smoke_{}", std::process::id()));
    let status = std::process::Command::new(cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = std::process::Command::new(&exe).output().unwrap();
    let _ = std::fs::remove_file(&exe);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "atoms=2 minimal=3 stable=[[\"a\"],[\"b\"]]\nbad=3 null=1\n");
}

fn which_cc() -> Result<String, ()> {
    for cc in ["cc", "gcc", "clang"] {
        if std::process::Command::new(cc).arg("--version").output().is_ok_and(|o| o.status.success()) {
            return Ok(cc.to_string());
        }
    }
    Err(())
}
