//! C ABI over `reflexa`.
//!
//! Handles are opaque heap objects owned by the caller and released with the
//! matching `*_free`. Every fallible call returns a [`ReflexaStatus`]; on
//! failure the message is available from [`reflexa_last_error`] on the same
//! thread until the next failing call. Strings handed out by the library are
//! NUL-terminated UTF-8 and released with [`reflexa_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use serde_json::json;

use reflexa::{
    classify, classify_ring, dual, dual_tower, ext_lengths, min_resolution, reflexivity_flags, ArtinianAlgebra, Error,
    ModuleSpec, RealizedModule, RingSpec,
};

/// Result of every fallible call. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReflexaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed ring, module or polynomial input.
    InvalidInput = 3,
    /// Modules over different algebras, or mismatched dimensions.
    Mismatch = 4,
    BudgetExceeded = 5,
    /// Certified verdicts contradicted each other.
    Inconsistent = 6,
    /// A Rust panic was caught at the boundary.
    Internal = 7,
}

/// A ring `k[x…]/I`.
pub struct ReflexaAlgebra {
    inner: Arc<ArtinianAlgebra>,
}

/// A finitely generated module over a [`ReflexaAlgebra`].
pub struct ReflexaModule {
    inner: Arc<RealizedModule>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

struct Failure(ReflexaStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::BudgetExceeded { .. } => ReflexaStatus::BudgetExceeded,
            Error::Inconsistent { .. } => ReflexaStatus::Inconsistent,
            Error::AlgebraMismatch | Error::Dimension(_) | Error::FieldMismatch(..) | Error::VariableMismatch => {
                ReflexaStatus::Mismatch
            }
            _ => ReflexaStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

/// Runs `body`, translating errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> ReflexaStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => ReflexaStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            ReflexaStatus::Internal
        }
    }
}

/// # Safety
/// `p` is null or a valid NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(ReflexaStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(ReflexaStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

/// # Safety
/// `p` is null or points to a live handle.
unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure(ReflexaStatus::NullPointer, format!("{what} is null")))
}

/// # Safety
/// `out` is null or writable.
unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(ReflexaStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

fn json_string(value: &serde_json::Value) -> Result<*mut c_char, Failure> {
    let text = serde_json::to_string(value).map_err(|e| Failure(ReflexaStatus::Internal, e.to_string()))?;
    Ok(CString::new(text).map_err(|e| Failure(ReflexaStatus::Internal, e.to_string()))?.into_raw())
}

/// Message of the last failure on this thread, or null. Valid until the next
/// failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn reflexa_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version, static.
#[no_mangle]
pub extern "C" fn reflexa_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn reflexa_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a ring from a name (`lam`, `ex56`, `gor415`, `kxn:N`, `power:M,N`)
/// or from JSON `{"field": "Q", "vars": [...], "ideal": [...], "order": "grevlex"}`.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn reflexa_algebra_new(text: *const c_char, out: *mut *mut ReflexaAlgebra) -> ReflexaStatus {
    guard(|| {
        let text = read_str(text, "ring")?.trim();
        let spec = if text.starts_with('{') {
            serde_json::from_str(text).map_err(|e| Failure(ReflexaStatus::InvalidInput, format!("ring spec: {e}")))?
        } else {
            RingSpec::named(text)?
        };
        let alg = spec.build()?;
        write_out(out, Box::into_raw(Box::new(ReflexaAlgebra { inner: alg })))
    })
}

/// # Safety
/// `alg` is null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn reflexa_algebra_free(alg: *mut ReflexaAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// `k`-dimension of the ring.
///
/// # Safety
/// `alg` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn reflexa_algebra_length(alg: *const ReflexaAlgebra, out: *mut usize) -> ReflexaStatus {
    guard(|| write_out(out, borrow(alg, "algebra")?.inner.length()))
}

/// Invariants, certificate and standard monomials as JSON.
///
/// # Safety
/// `alg` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn reflexa_algebra_report_json(
    alg: *const ReflexaAlgebra,
    out: *mut *mut c_char,
) -> ReflexaStatus {
    guard(|| {
        let rep = classify_ring(&borrow(alg, "algebra")?.inner)?;
        write_out(out, json_string(&json!(rep))?)
    })
}

/// Builds a module over `alg` from `k`, `m`, `R`, `R:n`, `omega`, or a JSON
/// module description such as
/// `{"builder": "presentation", "rows": 1, "matrix": [["x", "y"]]}`.
///
/// # Safety
/// `alg` is a live handle; `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn reflexa_module_new(
    alg: *const ReflexaAlgebra,
    text: *const c_char,
    out: *mut *mut ReflexaModule,
) -> ReflexaStatus {
    guard(|| {
        let alg = borrow(alg, "algebra")?;
        let spec = ModuleSpec::parse_short(read_str(text, "module")?)?;
        let m = spec.build(&alg.inner)?;
        write_out(out, Box::into_raw(Box::new(ReflexaModule { inner: m })))
    })
}

/// # Safety
/// `m` is null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn reflexa_module_free(m: *mut ReflexaModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Length and minimal number of generators.
///
/// # Safety
/// `m` is a live handle; `length` and `mu` are writable.
#[no_mangle]
pub unsafe extern "C" fn reflexa_module_size(
    m: *const ReflexaModule,
    length: *mut usize,
    mu: *mut usize,
) -> ReflexaStatus {
    guard(|| {
        let m = &borrow(m, "module")?.inner;
        write_out(length, m.length())?;
        write_out(mu, m.mu())
    })
}

/// `Hom_R(M, R)` as a new module handle.
///
/// # Safety
/// `m` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn reflexa_module_dual(m: *const ReflexaModule, out: *mut *mut ReflexaModule) -> ReflexaStatus {
    guard(|| {
        let d = dual(&borrow(m, "module")?.inner).module().clone();
        write_out(out, Box::into_raw(Box::new(ReflexaModule { inner: d })))
    })
}

/// Whether the natural map into the bidual is injective and surjective.
///
/// # Safety
/// `m` is a live handle; `torsionless` and `reflexive` are writable.
#[no_mangle]
pub unsafe extern "C" fn reflexa_module_reflexivity(
    m: *const ReflexaModule,
    torsionless: *mut bool,
    reflexive: *mut bool,
) -> ReflexaStatus {
    guard(|| {
        let flags = reflexivity_flags(&borrow(m, "module")?.inner);
        write_out(torsionless, flags.torsionless)?;
        write_out(reflexive, flags.reflexive)
    })
}

/// Verdicts for every predicate, scanning Ext up to `bound` (at least 2).
///
/// # Safety
/// `m` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn reflexa_classify_json(
    m: *const ReflexaModule,
    bound: usize,
    budget: usize,
    out: *mut *mut c_char,
) -> ReflexaStatus {
    guard(|| {
        let rep = classify(&borrow(m, "module")?.inner, bound, budget)?;
        write_out(out, json_string(&json!(rep))?)
    })
}

/// Betti numbers through `steps` and Ext lengths through `steps - 1`.
/// Returns `BudgetExceeded`, with the partial report still written, when the
/// budget cut the resolution short.
///
/// # Safety
/// `m` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn reflexa_resolve_json(
    m: *const ReflexaModule,
    steps: usize,
    budget: usize,
    out: *mut *mut c_char,
) -> ReflexaStatus {
    let mut partial = false;
    let status = guard(|| {
        let m = &borrow(m, "module")?.inner;
        let res = min_resolution(m, steps, budget);
        let ext = ext_lengths(m, steps.saturating_sub(1), budget);
        partial = res.partial;
        write_out(out, json_string(&json!({"betti": res.betti, "ext_lengths": ext.lengths, "partial": res.partial}))?)
    });
    partial_status(status, partial)
}

/// Lengths of `M, M*, M**, …` through `depth`; `BudgetExceeded` as for
/// [`reflexa_resolve_json`].
///
/// # Safety
/// `m` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn reflexa_tower_json(
    m: *const ReflexaModule,
    depth: usize,
    budget: usize,
    out: *mut *mut c_char,
) -> ReflexaStatus {
    let mut partial = false;
    let status = guard(|| {
        let t = dual_tower(&borrow(m, "module")?.inner, depth, budget);
        partial = t.partial;
        write_out(out, json_string(&json!(t))?)
    });
    partial_status(status, partial)
}

fn partial_status(status: ReflexaStatus, partial: bool) -> ReflexaStatus {
    if status == ReflexaStatus::Ok && partial {
        set_error("dimension budget reached; report is partial");
        ReflexaStatus::BudgetExceeded
    } else {
        status
    }
}
