//! C ABI over `torus-vassiliev`.
//!
//! Tables and series are returned as opaque heap handles that the caller
//! releases with the matching `*_free` function. Exact values cross the
//! boundary as `"num/den"` strings (or `"num"` for integers) allocated here
//! and released with [`tv_string_free`]. Every fallible call returns a
//! [`TvStatus`]; on failure [`tv_last_error`] describes the cause.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use torus_vassiliev::closed_form::{closed_form_alpha, closed_form_alpha_tilde, closed_form_beta};
use torus_vassiliev::extract::solve_invariants;
use torus_vassiliev::polynomials::{normalized_series, unnormalized_series, Precision};
use torus_vassiliev::rational::to_fraction_string;
use torus_vassiliev::{Error, GroupInstance, InvariantTable, Rational, TorusKnot, DEFAULT_GUARD, MAX_ORDER};

/// Result codes. `TV_STATUS_NOT_A_KNOT` and `TV_STATUS_UNSUPPORTED` match
/// the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TvStatus {
    Ok = 0,
    /// Solver or numeric failure (rank deficiency, inconsistency, ...).
    Computation = 1,
    NotAKnot = 2,
    /// Order out of range, invalid group parameters, guard too small.
    Unsupported = 3,
    NullArgument = 4,
    /// Requested slot or degree is not present in the handle.
    OutOfRange = 5,
    /// A panic was caught at the boundary.
    Internal = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TvKind {
    AlphaTilde = 0,
    Alpha = 1,
    Beta = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TvMethod {
    ClosedForm = 0,
    Solve = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TvFamily {
    SuN = 0,
    SoN = 1,
    Su2 = 2,
    SuNxSu2 = 3,
}

/// Opaque table of invariants for one knot.
pub struct TvTable {
    inner: InvariantTable,
}

/// Opaque truncated series `x^0..=x^order`.
pub struct TvSeries {
    coefficients: Vec<Rational>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let text = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> TvStatus {
    match e {
        Error::NotAKnot { .. } => TvStatus::NotAKnot,
        Error::Unsupported(_)
        | Error::InvalidGroup(_)
        | Error::SingularBracket { .. }
        | Error::GuardInsufficient { .. }
        | Error::ZeroCasimirDivision { .. } => TvStatus::Unsupported,
        _ => TvStatus::Computation,
    }
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guarded(f: impl FnOnce() -> Result<(), (TvStatus, String)>) -> TvStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TvStatus::Ok,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {message}"));
            TvStatus::Internal
        }
    }
}

fn lib(e: Error) -> (TvStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(name: &str) -> (TvStatus, String) {
    (TvStatus::NullArgument, format!("{name} is null"))
}

fn check_order(order: u32) -> Result<(), (TvStatus, String)> {
    if order > MAX_ORDER as u32 {
        return Err((TvStatus::Unsupported, format!("order {order} is not supported (0..={MAX_ORDER})")));
    }
    Ok(())
}

fn string_out(value: &Rational, out: *mut *mut c_char) -> Result<(), (TvStatus, String)> {
    let text = CString::new(to_fraction_string(value)).expect("fractions have no nul bytes");
    // SAFETY: the caller checked `out` for null.
    unsafe { *out = text.into_raw() };
    Ok(())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn tv_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn tv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Computes one invariant table for the torus knot `(n, m)` through
/// `order` (at most 6). `TV_METHOD_SOLVE` runs the series solver,
/// `TV_METHOD_CLOSED_FORM` evaluates the closed forms.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn tv_invariants(
    n: i64,
    m: i64,
    kind: TvKind,
    method: TvMethod,
    order: u32,
    out: *mut *mut TvTable,
) -> TvStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let k = TorusKnot::new(n, m).map_err(lib)?;
        check_order(order)?;
        let table = match method {
            TvMethod::ClosedForm => match kind {
                TvKind::AlphaTilde => closed_form_alpha_tilde(&k),
                TvKind::Alpha => closed_form_alpha(&k),
                TvKind::Beta => closed_form_beta(&k),
            }
            .restricted(order as u8),
            TvMethod::Solve => {
                let s = solve_invariants(&k, Precision::new(order as i64, DEFAULT_GUARD)).map_err(lib)?;
                match kind {
                    TvKind::AlphaTilde => s.alpha_tilde,
                    TvKind::Alpha => s.alpha,
                    TvKind::Beta => s.beta,
                }
            }
        };
        // SAFETY: checked non-null above; the caller guarantees validity.
        unsafe { *out = Box::into_raw(Box::new(TvTable { inner: table })) };
        Ok(())
    })
}

/// Number of entries in the table.
///
/// # Safety
/// `table` must be null or a handle from [`tv_invariants`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tv_table_len(table: *const TvTable) -> usize {
    // SAFETY: per the contract above.
    unsafe { table.as_ref() }.map_or(0, |t| t.inner.entries.len())
}

/// Slot `(order, index)` of the `position`-th entry, in ascending order.
///
/// # Safety
/// `table` must be a live handle; `order` and `index` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tv_table_slot(
    table: *const TvTable,
    position: usize,
    order: *mut u8,
    index: *mut u8,
) -> TvStatus {
    guarded(|| {
        // SAFETY: per the contract above.
        let t = unsafe { table.as_ref() }.ok_or_else(|| null("table"))?;
        if order.is_null() || index.is_null() {
            return Err(null("order/index"));
        }
        let (slot, _) = t
            .inner
            .entries
            .iter()
            .nth(position)
            .ok_or_else(|| (TvStatus::OutOfRange, format!("position {position} out of range")))?;
        // SAFETY: checked non-null above.
        unsafe {
            *order = slot.order;
            *index = slot.index;
        }
        Ok(())
    })
}

/// Value at `(order, index)` as a newly allocated fraction string.
///
/// # Safety
/// `table` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tv_table_get(table: *const TvTable, order: u8, index: u8, out: *mut *mut c_char) -> TvStatus {
    guarded(|| {
        // SAFETY: per the contract above.
        let t = unsafe { table.as_ref() }.ok_or_else(|| null("table"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let slot = torus_vassiliev::Slot::new(order, index);
        let value = t
            .inner
            .entries
            .get(&slot)
            .ok_or_else(|| (TvStatus::OutOfRange, format!("no entry at ({order},{index})")))?;
        string_out(value, out)
    })
}

/// Releases a table handle. Null is ignored.
///
/// # Safety
/// `table` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tv_table_free(table: *mut TvTable) {
    if !table.is_null() {
        // SAFETY: created by Box::into_raw in tv_invariants.
        drop(unsafe { Box::from_raw(table) });
    }
}

/// Expands the invariant of `(n, m)` for a group, normalized unless
/// `unnormalized` is set. `big_n` is read for SU(N), SO(N) and the
/// product, `j` for SU(2) and the product.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tv_expand(
    family: TvFamily,
    big_n: i64,
    j: i64,
    n: i64,
    m: i64,
    order: u32,
    unnormalized: bool,
    out: *mut *mut TvSeries,
) -> TvStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let k = TorusKnot::new(n, m).map_err(lib)?;
        check_order(order)?;
        let group = match family {
            TvFamily::SuN => GroupInstance::su_n(big_n),
            TvFamily::SoN => GroupInstance::so_n(big_n),
            TvFamily::Su2 => GroupInstance::su2(j),
            TvFamily::SuNxSu2 => GroupInstance::su_n_x_su2(big_n, j),
        }
        .map_err(lib)?;
        let precision = Precision::new(order as i64, DEFAULT_GUARD);
        let series = if unnormalized {
            unnormalized_series(&k, &group, precision)
        } else {
            normalized_series(&k, &group, precision)
        }
        .map_err(lib)?;
        let coefficients = series.power_coefficients(order as i64).map_err(lib)?;
        // SAFETY: checked non-null above.
        unsafe { *out = Box::into_raw(Box::new(TvSeries { coefficients })) };
        Ok(())
    })
}

/// Highest degree held by the series, or -1 for null.
///
/// # Safety
/// `series` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tv_series_order(series: *const TvSeries) -> i64 {
    // SAFETY: per the contract above.
    unsafe { series.as_ref() }.map_or(-1, |s| s.coefficients.len() as i64 - 1)
}

/// Coefficient of `x^degree` as a newly allocated fraction string.
///
/// # Safety
/// `series` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tv_series_coefficient(
    series: *const TvSeries,
    degree: u32,
    out: *mut *mut c_char,
) -> TvStatus {
    guarded(|| {
        // SAFETY: per the contract above.
        let s = unsafe { series.as_ref() }.ok_or_else(|| null("series"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let value = s
            .coefficients
            .get(degree as usize)
            .ok_or_else(|| (TvStatus::OutOfRange, format!("degree {degree} beyond the expansion")))?;
        string_out(value, out)
    })
}

/// # Safety
/// `series` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tv_series_free(series: *mut TvSeries) {
    if !series.is_null() {
        // SAFETY: created by Box::into_raw in tv_expand.
        drop(unsafe { Box::from_raw(series) });
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `text` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tv_string_free(text: *mut c_char) {
    if !text.is_null() {
        // SAFETY: created by CString::into_raw.
        drop(unsafe { CString::from_raw(text) });
    }
}

/// Copies a library string into Rust and frees it. For tests and Rust
/// callers of the C surface.
///
/// # Safety
/// `text` must be a string returned by this library.
pub unsafe fn take_string(text: *mut c_char) -> String {
    // SAFETY: per the contract above.
    let s = unsafe { CStr::from_ptr(text) }.to_string_lossy().into_owned();
    unsafe { tv_string_free(text) };
    s
}
