//! C interface. Objects are opaque handles created and freed through this
//! API; strings returned to the caller must be released with
//! `tf_string_free`. On any status other than `TF_STATUS_OK` the message is
//! available from `tf_last_error` on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tiling_forge::cli::parse_sides;
use tiling_forge::constraints::TriangleSpec;
use tiling_forge::lemmalab::{verify_all, verify_ids};
use tiling_forge::search::{self, check_certificate, svg_string, Certificate, Config, Outcome};
use tiling_forge::tilealgebra::TileShape;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TfStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    ParseError = 3,
    Internal = 4,
}

/// Search outcomes, numbered like the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TfOutcome {
    Found = 0,
    BudgetExceeded = 3,
    ExhaustedNone = 4,
}

/// A validated tile.
pub struct TfTile(TileShape);

/// A parsed, not necessarily valid, certificate.
pub struct TfCertificate(Certificate);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(s).expect("no interior nul"));
}

type Res<T> = Result<T, (TfStatus, String)>;

/// Runs `f`, turning errors and panics into a status plus message.
fn guard(f: impl FnOnce() -> Res<()>) -> TfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TfStatus::Ok,
        Ok(Err((st, msg))) => {
            set_error(msg);
            st
        }
        Err(p) => {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            set_error(format!("internal error: {}", msg.unwrap_or_default()));
            TfStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Res<&'a str> {
    if p.is_null() {
        return Err((TfStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (TfStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Res<&'a mut T> {
    p.as_mut().ok_or((TfStatus::NullArgument, format!("{what} is null")))
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

fn invalid(e: impl ToString) -> (TfStatus, String) {
    (TfStatus::InvalidArgument, e.to_string())
}

/// Message for the last failed call on this thread. Owned by the library;
/// valid until the next call that fails.
#[no_mangle]
pub extern "C" fn tf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn tf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `"a,b,c"` in the exact-number grammar and checks the 120° law.
///
/// # Safety
/// `sides` must be a nul-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tf_tile_new(sides: *const c_char, out: *mut *mut TfTile) -> TfStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let t = parse_sides(text(sides, "sides")?).map_err(invalid)?;
        *out = Box::into_raw(Box::new(TfTile(t)));
        Ok(())
    })
}

/// # Safety
/// `tile` must come from `tf_tile_new` or be null.
#[no_mangle]
pub unsafe extern "C" fn tf_tile_free(tile: *mut TfTile) {
    if !tile.is_null() {
        drop(Box::from_raw(tile));
    }
}

/// Exhaustive search. `*cert` is set only when the outcome is found.
///
/// # Safety
/// Pointers must be valid; `target` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn tf_search(
    tile: *const TfTile,
    target: *const c_char,
    node_budget: u64,
    workers: u32,
    allow_mirror: bool,
    outcome: *mut TfOutcome,
    nodes: *mut u64,
    cert: *mut *mut TfCertificate,
) -> TfStatus {
    guard(|| {
        let tile = &tile.as_ref().ok_or((TfStatus::NullArgument, "tile is null".to_string()))?.0;
        let outcome = out_ptr(outcome, "outcome")?;
        let nodes = out_ptr(nodes, "nodes")?;
        let cert = out_ptr(cert, "cert")?;
        *cert = ptr::null_mut();
        let tri = TriangleSpec::parse(text(target, "target")?, tile).map_err(invalid)?;
        let cfg = Config { node_budget, workers: workers as usize, allow_mirror, ..Config::default() };
        let r = search::search(tile, &tri, &cfg).map_err(invalid)?;
        *nodes = r.stats.nodes;
        *outcome = match r.outcome {
            Outcome::Found(c) => {
                *cert = Box::into_raw(Box::new(TfCertificate(c)));
                TfOutcome::Found
            }
            Outcome::BudgetExceeded => TfOutcome::BudgetExceeded,
            Outcome::ExhaustedNone => TfOutcome::ExhaustedNone,
        };
        Ok(())
    })
}

/// # Safety
/// `json` nul-terminated; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn tf_certificate_from_json(json: *const c_char, out: *mut *mut TfCertificate) -> TfStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let c = Certificate::from_json(text(json, "json")?).map_err(|e| (TfStatus::ParseError, e.to_string()))?;
        *out = Box::into_raw(Box::new(TfCertificate(c)));
        Ok(())
    })
}

/// # Safety
/// `cert` from this library; `out` valid. Free the string with `tf_string_free`.
#[no_mangle]
pub unsafe extern "C" fn tf_certificate_to_json(cert: *const TfCertificate, out: *mut *mut c_char) -> TfStatus {
    guard(|| {
        let c = &cert.as_ref().ok_or((TfStatus::NullArgument, "cert is null".to_string()))?.0;
        *out_ptr(out, "out")? = to_c(c.to_json());
        Ok(())
    })
}

/// Number of placements, 0 for a null handle.
///
/// # Safety
/// `cert` from this library or null.
#[no_mangle]
pub unsafe extern "C" fn tf_certificate_count(cert: *const TfCertificate) -> u64 {
    cert.as_ref().map_or(0, |c| c.0.placements.len() as u64)
}

/// Runs the independent checker. `*report` receives a JSON report.
///
/// # Safety
/// `cert` from this library; `valid` and `report` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tf_certificate_check(cert: *const TfCertificate, valid: *mut bool, report: *mut *mut c_char) -> TfStatus {
    guard(|| {
        let c = &cert.as_ref().ok_or((TfStatus::NullArgument, "cert is null".to_string()))?.0;
        let valid = out_ptr(valid, "valid")?;
        let report = out_ptr(report, "report")?;
        let rep = check_certificate(c);
        *valid = rep.valid;
        let v = serde_json::json!({
            "schema": "v1",
            "valid": rep.valid,
            "violations": rep.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "relations": rep.relations.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "warnings": rep.warnings,
        });
        *report = to_c(v.to_string());
        Ok(())
    })
}

/// # Safety
/// `cert` from this library; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn tf_certificate_render_svg(cert: *const TfCertificate, out: *mut *mut c_char) -> TfStatus {
    guard(|| {
        let c = &cert.as_ref().ok_or((TfStatus::NullArgument, "cert is null".to_string()))?.0;
        let out = out_ptr(out, "out")?;
        *out = to_c(svg_string(c).map_err(invalid)?);
        Ok(())
    })
}

/// # Safety
/// `cert` from this library or null.
#[no_mangle]
pub unsafe extern "C" fn tf_certificate_free(cert: *mut TfCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}

/// Runs the lemma checks named in the comma-separated `ids`, or all of them
/// when `ids` is null.
///
/// # Safety
/// `ids` nul-terminated or null; `all_pass` and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn tf_lemmas_verify_json(ids: *const c_char, all_pass: *mut bool, out: *mut *mut c_char) -> TfStatus {
    guard(|| {
        let all_pass = out_ptr(all_pass, "all_pass")?;
        let out = out_ptr(out, "out")?;
        let checks = if ids.is_null() {
            verify_all()
        } else {
            let list: Vec<&str> = text(ids, "ids")?.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            verify_ids(&list).map_err(invalid)?
        };
        *all_pass = checks.iter().all(|c| c.passed());
        *out = to_c(serde_json::json!({"schema": "v1", "checks": checks}).to_string());
        Ok(())
    })
}
