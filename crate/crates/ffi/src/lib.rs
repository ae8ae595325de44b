//! C ABI over the `n4lp` engine.
//!
//! Programs and model sets are opaque handles. Every fallible call returns an
//! [`N4Status`]; the message of the last failure on the calling thread is
//! available from [`n4_last_error`]. Strings handed out by this library must
//! be released with [`n4_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use n4lp::herbrand::{ground, AtomState, GroundProgram};
use n4lp::models::{self, ModelSet, SearchLimits};
use n4lp::parser::{parse_formula, parse_program};
use n4lp::report::{render_table, ModelReport, Style};
use n4lp::semantics::{evaluate, is_model, Interpretation, VariableAssignment};
use n4lp::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum N4Status {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Interpretation = 4,
    Eval = 5,
    InfiniteUniverse = 6,
    Herbrand = 7,
    SearchSpaceTooLarge = 8,
    Model = 9,
    OutOfRange = 10,
    Internal = 11,
}

/// Which models [`n4_program_models`] keeps.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum N4ModelFilter {
    All = 0,
    Minimal = 1,
    CompleteMinimal = 2,
}

/// Stable-model procedure for [`n4_program_stable_json`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum N4StableMethod {
    /// Reduct-based check over all complete candidates.
    Reduct = 0,
    /// Complete minimal N⁴ models.
    Minimal = 1,
}

/// A grounded program.
pub struct N4Program {
    source: String,
    ground: GroundProgram,
}

/// A set of closed Herbrand models of a program.
pub struct N4ModelSet {
    source: String,
    set: ModelSet,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: N4Status, message: impl Into<String>) -> N4Status {
    set_error(message.into());
    status
}

fn status_of(e: &Error) -> N4Status {
    match e.kind() {
        "parse" => N4Status::Parse,
        "interpretation" => N4Status::Interpretation,
        "eval" => N4Status::Eval,
        "infinite-universe" => N4Status::InfiniteUniverse,
        "herbrand" => N4Status::Herbrand,
        "search-space-too-large" => N4Status::SearchSpaceTooLarge,
        "model" => N4Status::Model,
        _ => N4Status::Internal,
    }
}

fn report(e: impl Into<Error>) -> N4Status {
    let e = e.into();
    fail(status_of(&e), e.to_string())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, N4Status> {
    if s.is_null() {
        return Err(fail(N4Status::NullArgument, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(N4Status::InvalidUtf8, "argument is not valid UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> N4Status {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            N4Status::Ok
        }
        Err(_) => fail(N4Status::Internal, "output contains a NUL byte"),
    }
}

fn limits(max_atoms: usize) -> SearchLimits {
    if max_atoms == 0 {
        SearchLimits::default()
    } else {
        SearchLimits::with_max_atoms(max_atoms)
    }
}

macro_rules! try_ffi {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message of the last failure on this thread, or NULL. Owned by the library;
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn n4_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn n4_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn n4_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and grounds a program. `depth < 0` requires a finite Herbrand
/// universe; otherwise terms are cut at that nesting depth.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn n4_program_parse(text: *const c_char, depth: i32, out: *mut *mut N4Program) -> N4Status {
    if out.is_null() {
        return fail(N4Status::NullArgument, "null output pointer");
    }
    *out = ptr::null_mut();
    let text = try_ffi!(read_str(text));
    let p = match parse_program(text) {
        Ok(p) => p,
        Err(e) => return report(e),
    };
    let depth = usize::try_from(depth).ok();
    match ground(&p, depth) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(N4Program { source: text.trim().to_string(), ground: g }));
            N4Status::Ok
        }
        Err(e) => report(e),
    }
}

/// # Safety
/// `p` must be NULL or a handle from [`n4_program_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn n4_program_free(p: *mut N4Program) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of ground atoms, or 0 for NULL.
///
/// # Safety
/// `p` must be NULL or a live program handle.
#[no_mangle]
pub unsafe extern "C" fn n4_program_atom_count(p: *const N4Program) -> usize {
    p.as_ref().map_or(0, |p| p.ground.base().len())
}

/// Name of ground atom `index` as a new string.
///
/// # Safety
/// `p` must be a live program handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn n4_program_atom_name(p: *const N4Program, index: usize, out: *mut *mut c_char) -> N4Status {
    let (Some(p), false) = (p.as_ref(), out.is_null()) else {
        return fail(N4Status::NullArgument, "null argument");
    };
    if index >= p.ground.base().len() {
        return fail(N4Status::OutOfRange, format!("atom index {index} out of range"));
    }
    write_string(out, p.ground.base().atom(index).to_string())
}

/// The ground program as text.
///
/// # Safety
/// `p` must be a live program handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn n4_program_ground_text(p: *const N4Program, out: *mut *mut c_char) -> N4Status {
    let (Some(p), false) = (p.as_ref(), out.is_null()) else {
        return fail(N4Status::NullArgument, "null argument");
    };
    write_string(out, p.ground.to_string())
}

/// Enumerates closed Herbrand models. `max_atoms == 0` keeps the default limit.
///
/// # Safety
/// `p` must be a live program handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn n4_program_models(
    p: *const N4Program,
    filter: N4ModelFilter,
    max_atoms: usize,
    out: *mut *mut N4ModelSet,
) -> N4Status {
    let (Some(p), false) = (p.as_ref(), out.is_null()) else {
        return fail(N4Status::NullArgument, "null argument");
    };
    *out = ptr::null_mut();
    let all = match models::all_models(&p.ground, &limits(max_atoms)) {
        Ok(m) => m,
        Err(e) => return report(e),
    };
    let set = match filter {
        N4ModelFilter::All => all,
        N4ModelFilter::Minimal => all.minimal(),
        N4ModelFilter::CompleteMinimal => all.complete_minimal(),
    };
    *out = Box::into_raw(Box::new(N4ModelSet { source: p.source.clone(), set }));
    N4Status::Ok
}

/// # Safety
/// `m` must be NULL or a handle from [`n4_program_models`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn n4_model_set_free(m: *mut N4ModelSet) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of models, or 0 for NULL.
///
/// # Safety
/// `m` must be NULL or a live model-set handle.
#[no_mangle]
pub unsafe extern "C" fn n4_model_set_len(m: *const N4ModelSet) -> usize {
    m.as_ref().map_or(0, |m| m.set.len())
}

/// State of `atom` in model `index`: 0 neither `A` nor `¬²A`, 1 only `¬²A`,
/// 2 both.
///
/// # Safety
/// `m` must be a live model-set handle; `state` must be writable.
#[no_mangle]
pub unsafe extern "C" fn n4_model_set_state(m: *const N4ModelSet, index: usize, atom: usize, state: *mut u8) -> N4Status {
    let (Some(m), false) = (m.as_ref(), state.is_null()) else {
        return fail(N4Status::NullArgument, "null argument");
    };
    let Some(entry) = m.set.members.get(index) else {
        return fail(N4Status::OutOfRange, format!("model index {index} out of range"));
    };
    if atom >= m.set.base.len() {
        return fail(N4Status::OutOfRange, format!("atom index {atom} out of range"));
    }
    *state = match entry.set.state(atom) {
        AtomState::Absent => 0,
        AtomState::DnegOnly => 1,
        AtomState::Both => 2,
    };
    N4Status::Ok
}

/// The model set in the CLI's JSON schema.
///
/// # Safety
/// `m` must be a live model-set handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn n4_model_set_json(m: *const N4ModelSet, out: *mut *mut c_char) -> N4Status {
    let (Some(m), false) = (m.as_ref(), out.is_null()) else {
        return fail(N4Status::NullArgument, "null argument");
    };
    let r = ModelReport::new(&m.set, m.source.clone());
    write_string(out, render_table(&r, Style::Json, false))
}

/// Stable models as a JSON array of atom-name arrays.
///
/// # Safety
/// `p` must be a live program handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn n4_program_stable_json(
    p: *const N4Program,
    method: N4StableMethod,
    max_atoms: usize,
    out: *mut *mut c_char,
) -> N4Status {
    let (Some(p), false) = (p.as_ref(), out.is_null()) else {
        return fail(N4Status::NullArgument, "null argument");
    };
    let lim = limits(max_atoms);
    let sets = match method {
        N4StableMethod::Reduct => models::stable_models_gl(&p.ground, &lim),
        N4StableMethod::Minimal => models::stable_models_n4(&p.ground, &lim),
    };
    let sets = match sets {
        Ok(s) => s,
        Err(e) => return report(e),
    };
    let base = p.ground.base();
    let names: Vec<Vec<String>> = sets.iter().map(|s| s.iter().map(|&a| base.atom(a).to_string()).collect()).collect();
    write_string(out, serde_json::to_string(&names).expect("plain data serializes"))
}

/// Evaluates a formula in an interpretation given as JSON. With `closed`, or
/// when the formula has free variables, tests truth under every assignment.
///
/// # Safety
/// `formula` and `interpretation_json` must be NUL-terminated strings;
/// `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn n4_eval(
    formula: *const c_char,
    interpretation_json: *const c_char,
    closed: bool,
    value: *mut bool,
) -> N4Status {
    if value.is_null() {
        return fail(N4Status::NullArgument, "null output pointer");
    }
    let f = try_ffi!(read_str(formula));
    let i = try_ffi!(read_str(interpretation_json));
    let f = match parse_formula(f) {
        Ok(f) => f,
        Err(e) => return report(e),
    };
    let i = match Interpretation::from_json_str(i) {
        Ok(i) => i,
        Err(e) => return report(e),
    };
    let result = if closed || !f.free_variables().is_empty() {
        let f = if closed { f.universal_closure() } else { f };
        is_model(&i, &f)
    } else {
        evaluate(&i, &VariableAssignment::new(), &f).map(|v| v.is_true())
    };
    match result {
        Ok(v) => {
            *value = v;
            N4Status::Ok
        }
        Err(e) => report(e),
    }
}
