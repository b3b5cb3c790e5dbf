use std::ffi::{CStr, CString};
use std::ptr;

use tiling_forge_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    tf_string_free(p);
    s
}

unsafe fn last_error() -> String {
    CStr::from_ptr(tf_last_error()).to_str().unwrap().to_string()
}

#[test]
fn search_check_render() {
    unsafe {
        let mut tile = ptr::null_mut();
        assert_eq!(tf_tile_new(c("1,1,sqrt3").as_ptr(), &mut tile), TfStatus::Ok);
        let (mut outcome, mut nodes, mut cert) = (TfOutcome::ExhaustedNone, 0u64, ptr::null_mut());
        let st = tf_search(tile, c("equilateral:2*sqrt3").as_ptr(), 1_000_000, 2, true, &mut outcome, &mut nodes, &mut cert);
        assert_eq!(st, TfStatus::Ok);
        assert_eq!(outcome, TfOutcome::Found);
        assert!(nodes > 0);
        assert_eq!(tf_certificate_count(cert), 12);

        let (mut valid, mut report) = (false, ptr::null_mut());
        assert_eq!(tf_certificate_check(cert, &mut valid, &mut report), TfStatus::Ok);
        assert!(valid);
        assert!(take(report).contains("\"relations\":[]"));

        let mut json = ptr::null_mut();
        assert_eq!(tf_certificate_to_json(cert, &mut json), TfStatus::Ok);
        let json = take(json);
        let mut back = ptr::null_mut();
        assert_eq!(tf_certificate_from_json(c(&json).as_ptr(), &mut back), TfStatus::Ok);
        assert_eq!(tf_certificate_count(back), 12);

        let mut svg = ptr::null_mut();
        assert_eq!(tf_certificate_render_svg(back, &mut svg), TfStatus::Ok);
        assert_eq!(take(svg).matches("<polygon").count(), 12);

        let st = tf_search(tile, c("equilateral:2*sqrt3").as_ptr(), 2, 1, true, &mut outcome, &mut nodes, &mut cert);
        assert_eq!(st, TfStatus::Ok);
        assert_eq!(outcome, TfOutcome::BudgetExceeded);
        assert!(cert.is_null());

        tf_certificate_free(back);
        tf_tile_free(tile);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut tile = ptr::null_mut();
        assert_eq!(tf_tile_new(c("3,5,6").as_ptr(), &mut tile), TfStatus::InvalidArgument);
        assert!(tile.is_null());
        assert!(last_error().contains("c^2"));
        assert_eq!(tf_tile_new(ptr::null(), &mut tile), TfStatus::NullArgument);

        let mut cert = ptr::null_mut();
        assert_eq!(tf_certificate_from_json(c("{\"schema\":").as_ptr(), &mut cert), TfStatus::ParseError);
        assert!(cert.is_null());

        let (mut ok, mut out) = (true, ptr::null_mut());
        assert_eq!(tf_lemmas_verify_json(c("nope").as_ptr(), &mut ok, &mut out), TfStatus::InvalidArgument);
        assert!(last_error().contains("unknown lemma id"));
        assert_eq!(tf_lemmas_verify_json(c("norm-table-15, prime-splitting").as_ptr(), &mut ok, &mut out), TfStatus::Ok);
        assert!(ok);
        assert!(take(out).contains("prime-splitting"));

        // Free functions accept null.
        tf_tile_free(ptr::null_mut());
        tf_certificate_free(ptr::null_mut());
        tf_string_free(ptr::null_mut());
        assert_eq!(tf_certificate_count(ptr::null()), 0);
    }
}

#[test]
fn header_is_current() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/tiling_forge.h")).unwrap();
    for f in [
        "tf_last_error",
        "tf_string_free",
        "tf_tile_new",
        "tf_search",
        "tf_certificate_from_json",
        "tf_certificate_check",
        "tf_certificate_render_svg",
        "tf_lemmas_verify_json",
        "TF_STATUS_OK",
        "TF_OUTCOME_EXHAUSTED_NONE",
        "typedef struct TfTile TfTile",
    ] {
        assert!(h.contains(f), "header lacks {f}");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which("cc") else { return };
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("t.c");
    std::fs::write(
        &src,
        "#include \"tiling_forge.h\"\nint main(void) { TfTile *t = 0; TfStatus s = tf_tile_new(\"3,5,7\", &t); tf_tile_free(t); return (int)s; }\n",
    )
    .unwrap();
    let st = std::process::Command::new(cc)
        .args(["-fsyntax-only", "-Wall", "-Werror", "-I", concat!(env!("CARGO_MANIFEST_DIR"), "/include")])
        .arg(&src)
        .status()
        .unwrap();
    assert!(st.success());
}

fn which(name: &str) -> Result<std::path::PathBuf, ()> {
    let path = std::env::var_os("PATH").ok_or(())?;
    std::env::split_paths(&path).map(|d| d.join(name)).find(|p| p.is_file()).ok_or(())
}
