//! C interface to `nsgff`.
//!
//! Every function returns an [`NsgffStatus`] and writes results through out
//! pointers. Semigroups are opaque handles created by
//! [`nsgff_semigroup_new`] and released by [`nsgff_semigroup_free`].
//! After a non-`Ok` status, [`nsgff_last_error`] describes the failure on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use nsgff::{Error, FfgRoute, NumericalSemigroup};

/// Opaque semigroup handle.
pub struct NsgffSemigroup {
    inner: NumericalSemigroup,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NsgffStatus {
    Ok = 0,
    NullPointer = 1,
    EmptyGenerators = 2,
    NonPositiveGenerator = 3,
    GcdNotOne = 4,
    InputTooLarge = 5,
    BufferTooSmall = 6,
    BadParameters = 7,
    OutOfTable = 8,
    BudgetExceeded = 9,
    InvalidRoute = 10,
    Internal = 99,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NsgffRoute {
    Definition = 0,
    Square = 1,
    Sumset = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> NsgffStatus {
    match e {
        Error::EmptyGenerators => NsgffStatus::EmptyGenerators,
        Error::NonPositiveGenerator(_) => NsgffStatus::NonPositiveGenerator,
        Error::GcdNotOne(_) => NsgffStatus::GcdNotOne,
        Error::InputTooLarge(_) => NsgffStatus::InputTooLarge,
        Error::OutOfTable(_) => NsgffStatus::OutOfTable,
        Error::BudgetExceeded { .. } => NsgffStatus::BudgetExceeded,
        Error::BadParameters(_) => NsgffStatus::BadParameters,
        _ => NsgffStatus::Internal,
    }
}

fn fail(e: Error) -> NsgffStatus {
    set_last_error(&e.to_string());
    status_of(&e)
}

fn null() -> NsgffStatus {
    set_last_error("null pointer argument");
    NsgffStatus::NullPointer
}

fn guard(f: impl FnOnce() -> NsgffStatus) -> NsgffStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == NsgffStatus::Ok {
                set_last_error("");
            }
            s
        }
        Err(_) => {
            set_last_error("internal panic");
            NsgffStatus::Internal
        }
    }
}

unsafe fn handle<'a>(h: *const NsgffSemigroup) -> Option<&'a NumericalSemigroup> {
    h.as_ref().map(|h| &h.inner)
}

/// Builds a semigroup from `len` generators.
///
/// # Safety
/// `gens` must point to `len` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nsgff_semigroup_new(
    gens: *const i64,
    len: usize,
    out: *mut *mut NsgffSemigroup,
) -> NsgffStatus {
    guard(|| {
        if out.is_null() || (gens.is_null() && len > 0) {
            return null();
        }
        let slice = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(gens, len)
        };
        match NumericalSemigroup::from_generators(slice) {
            Ok(h) => {
                *out = Box::into_raw(Box::new(NsgffSemigroup { inner: h }));
                NsgffStatus::Ok
            }
            Err(e) => {
                *out = ptr::null_mut();
                fail(e)
            }
        }
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `h` must come from [`nsgff_semigroup_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn nsgff_semigroup_free(h: *mut NsgffSemigroup) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

unsafe fn scalar(
    h: *const NsgffSemigroup,
    out: *mut i64,
    f: impl FnOnce(&NumericalSemigroup) -> i64,
) -> NsgffStatus {
    guard(|| match (handle(h), out.is_null()) {
        (Some(h), false) => {
            *out = f(h);
            NsgffStatus::Ok
        }
        _ => null(),
    })
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nsgff_semigroup_frobenius(h: *const NsgffSemigroup, out: *mut i64) -> NsgffStatus {
    scalar(h, out, |h| h.frobenius())
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nsgff_semigroup_multiplicity(h: *const NsgffSemigroup, out: *mut i64) -> NsgffStatus {
    scalar(h, out, |h| h.multiplicity())
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nsgff_semigroup_embedding_dimension(
    h: *const NsgffSemigroup,
    out: *mut i64,
) -> NsgffStatus {
    scalar(h, out, |h| h.embedding_dimension() as i64)
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nsgff_semigroup_type(h: *const NsgffSemigroup, out: *mut i64) -> NsgffStatus {
    scalar(h, out, |h| h.ty() as i64)
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nsgff_semigroup_genus(h: *const NsgffSemigroup, out: *mut i64) -> NsgffStatus {
    scalar(h, out, |h| h.genus() as i64)
}

unsafe fn copy_out(src: &[i64], buf: *mut i64, cap: usize, len: *mut usize) -> NsgffStatus {
    if len.is_null() {
        return null();
    }
    *len = src.len();
    if cap < src.len() {
        set_last_error(&format!("buffer holds {cap} values, {} needed", src.len()));
        return NsgffStatus::BufferTooSmall;
    }
    if !src.is_empty() {
        if buf.is_null() {
            return null();
        }
        ptr::copy_nonoverlapping(src.as_ptr(), buf, src.len());
    }
    NsgffStatus::Ok
}

/// Copies the minimal generators into `buf`. `*len` receives the count
/// even when the status is `BufferTooSmall`.
///
/// # Safety
/// `buf` must hold `cap` writable values and `len` be writable.
#[no_mangle]
pub unsafe extern "C" fn nsgff_semigroup_min_gens(
    h: *const NsgffSemigroup,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> NsgffStatus {
    guard(|| match handle(h) {
        Some(h) => copy_out(h.min_gens(), buf, cap, len),
        None => null(),
    })
}

/// Copies the pseudo-Frobenius numbers, ascending, into `buf`.
///
/// # Safety
/// As for [`nsgff_semigroup_min_gens`].
#[no_mangle]
pub unsafe extern "C" fn nsgff_semigroup_pseudo_frobenius(
    h: *const NsgffSemigroup,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> NsgffStatus {
    guard(|| match handle(h) {
        Some(h) => copy_out(h.pseudo_frobenius(), buf, cap, len),
        None => null(),
    })
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nsgff_semigroup_contains(
    h: *const NsgffSemigroup,
    z: i64,
    out: *mut bool,
) -> NsgffStatus {
    guard(|| match (handle(h), out.is_null()) {
        (Some(h), false) => {
            *out = h.contains(z);
            NsgffStatus::Ok
        }
        _ => null(),
    })
}

/// Far-flung Gorenstein test along one of the three equivalent routes;
/// `route` is an [`NsgffRoute`] value.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nsgff_semigroup_is_far_flung(
    h: *const NsgffSemigroup,
    route: i32,
    out: *mut bool,
) -> NsgffStatus {
    guard(|| {
        let route = match route {
            0 => FfgRoute::Definition,
            1 => FfgRoute::Square,
            2 => FfgRoute::Sumset,
            _ => {
                set_last_error("unknown route");
                return NsgffStatus::InvalidRoute;
            }
        };
        match (handle(h), out.is_null()) {
            (Some(h), false) => {
                *out = nsgff::is_far_flung(h, route);
                NsgffStatus::Ok
            }
            _ => null(),
        }
    })
}

/// Full report as a JSON string, to be released with [`nsgff_string_free`].
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nsgff_semigroup_report_json(
    h: *const NsgffSemigroup,
    out: *mut *mut c_char,
) -> NsgffStatus {
    guard(|| {
        let (Some(h), false) = (handle(h), out.is_null()) else {
            return null();
        };
        let json = serde_json::to_string(&nsgff::classify(h)).expect("report serializes");
        *out = CString::new(json).expect("json has no NUL").into_raw();
        NsgffStatus::Ok
    })
}

/// # Safety
/// `s` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn nsgff_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Exact Rohrbach value for `r` elements within `budget` search nodes.
/// On `BudgetExceeded`, `*value` holds the best value found so far.
/// The witness set is copied into `witness` when it is non-null.
///
/// # Safety
/// `value` must be writable; `witness` must hold `cap` values and
/// `witness_len` be writable when `witness` is non-null.
#[no_mangle]
pub unsafe extern "C" fn nsgff_rohrbach_max(
    r: usize,
    budget: u64,
    value: *mut i64,
    witness: *mut i64,
    cap: usize,
    witness_len: *mut usize,
) -> NsgffStatus {
    guard(|| {
        if value.is_null() {
            return null();
        }
        let (v, w, status) = match nsgff::rohrbach_max(r, budget) {
            Ok(s) => (
                s.value,
                s.witness.elements().iter().map(|&x| x as i64).collect::<Vec<_>>(),
                NsgffStatus::Ok,
            ),
            Err(e @ Error::BudgetExceeded { .. }) => {
                let Error::BudgetExceeded {
                    lower_bound,
                    witness,
                    ..
                } = &e
                else {
                    unreachable!()
                };
                let out = (*lower_bound, witness.clone(), status_of(&e));
                set_last_error(&e.to_string());
                out
            }
            Err(e) => return fail(e),
        };
        *value = v;
        if !witness.is_null() {
            let s = copy_out(&w, witness, cap, witness_len);
            if s != NsgffStatus::Ok {
                return s;
            }
        }
        status
    })
}

/// Tabulated Rohrbach value, `1 <= r <= 25`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nsgff_rohrbach_table(r: usize, out: *mut i64) -> NsgffStatus {
    guard(|| {
        if out.is_null() {
            return null();
        }
        match nsgff::known_table(r) {
            Ok(v) => {
                *out = v;
                NsgffStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Static description of an [`NsgffStatus`] value.
#[no_mangle]
pub extern "C" fn nsgff_status_message(status: i32) -> *const c_char {
    let s: &'static CStr = match status {
        0 => c"ok",
        1 => c"null pointer argument",
        2 => c"empty generator list",
        3 => c"generator is not positive",
        4 => c"generators are not coprime",
        5 => c"input too large",
        6 => c"buffer too small",
        7 => c"bad parameters",
        8 => c"outside the tabulated range",
        9 => c"search budget exhausted",
        10 => c"unknown route",
        _ => c"internal error",
    };
    s.as_ptr()
}

/// Message for the last failure on this thread; empty after success.
/// Valid until the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn nsgff_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
