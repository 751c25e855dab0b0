//! C ABI over `dualcech`. Every fallible call returns a [`DcStatus`]; the
//! message of the last failure on the calling thread is available from
//! [`dc_last_error_message`]. Handles are opaque and must be released with
//! the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use dualcech::bifiltration::{ambient_dc_finite, ambient_dc_planar, intrinsic_dc};
use dualcech::homology::betti;
use dualcech::interleaving::prohorov_distance;
use dualcech::{validate_metric, BifilteredComplex, DiscreteMeasure, Error, FiniteMetricSpace, Simplex};

/// Opaque finite metric space.
pub struct DcSpace(FiniteMetricSpace);

/// Opaque discrete measure.
pub struct DcMeasure(DiscreteMeasure);

/// Opaque bifiltered complex.
pub struct DcBifiltration(BifilteredComplex);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidMetric = 2,
    InvalidMeasure = 3,
    InvalidArgument = 4,
    MissingCoordinates = 5,
    DegenerateConfiguration = 6,
    SupportTooLarge = 7,
    Panic = 8,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> DcStatus {
    match err {
        Error::NotSquare { .. }
        | Error::NonzeroDiagonal(..)
        | Error::NegativeDistance { .. }
        | Error::Asymmetry { .. }
        | Error::TriangleViolation { .. }
        | Error::CoordMismatch { .. }
        | Error::CoordCount { .. } => DcStatus::InvalidMetric,
        Error::InvalidWeight { .. } | Error::EmptySupport => DcStatus::InvalidMeasure,
        Error::MissingCoordinates => DcStatus::MissingCoordinates,
        Error::DegenerateConfiguration { .. } => DcStatus::DegenerateConfiguration,
        Error::SupportTooLarge { .. } => DcStatus::SupportTooLarge,
        _ => DcStatus::InvalidArgument,
    }
}

/// Run `f`, translating errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), (DcStatus, String)>) -> DcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DcStatus::Ok,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".to_string());
            DcStatus::Panic
        }
    }
}

fn lift<T>(r: dualcech::Result<T>) -> Result<T, (DcStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (DcStatus, String) {
    (DcStatus::NullPointer, format!("{what} is null"))
}

unsafe fn as_ref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (DcStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn as_slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], (DcStatus, String)> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(slice::from_raw_parts(p, len))
}

fn emit<T>(out: *mut *mut T, value: T) -> Result<(), (DcStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    unsafe { *out = Box::into_raw(Box::new(value)) };
    Ok(())
}

/// Message of the last failed call on this thread, or null if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn dc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Metric space from a row-major `n * n` distance matrix.
///
/// # Safety
/// `dist` must point to `n * n` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_space_from_matrix(dist: *const f64, n: usize, out: *mut *mut DcSpace) -> DcStatus {
    guard(|| {
        let len = n.checked_mul(n).ok_or((DcStatus::InvalidArgument, "matrix too large".to_string()))?;
        let flat = as_slice(dist, len, "dist")?;
        let matrix = flat.chunks(n.max(1)).map(<[f64]>::to_vec).collect();
        emit(out, DcSpace(lift(validate_metric(matrix, None))?))
    })
}

/// Euclidean space on `n` planar points given as interleaved `x, y` pairs.
///
/// # Safety
/// `xy` must point to `2 * n` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_space_from_points(xy: *const f64, n: usize, out: *mut *mut DcSpace) -> DcStatus {
    guard(|| {
        let flat = as_slice(xy, 2 * n, "xy")?;
        let pts = flat.chunks(2).map(|c| [c[0], c[1]]).collect();
        emit(out, DcSpace(lift(FiniteMetricSpace::from_points(pts))?))
    })
}

/// Number of points, or 0 for a null handle.
///
/// # Safety
/// `space` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dc_space_len(space: *const DcSpace) -> usize {
    space.as_ref().map_or(0, |s| s.0.len())
}

/// # Safety
/// `space` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dc_space_free(space: *mut DcSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// Discrete measure from `n` nonnegative weights.
///
/// # Safety
/// `weights` must point to `n` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_measure_new(weights: *const f64, n: usize, out: *mut *mut DcMeasure) -> DcStatus {
    guard(|| {
        let w = as_slice(weights, n, "weights")?;
        emit(out, DcMeasure(lift(DiscreteMeasure::new(w.to_vec()))?))
    })
}

/// # Safety
/// `mu` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dc_measure_free(mu: *mut DcMeasure) {
    if !mu.is_null() {
        drop(Box::from_raw(mu));
    }
}

#[derive(Clone, Copy)]
enum Builder {
    Intrinsic,
    AmbientFinite,
    AmbientPlanar,
}

unsafe fn build(
    kind: Builder,
    space: *const DcSpace,
    mu: *const DcMeasure,
    dim_cap: usize,
    out: *mut *mut DcBifiltration,
) -> DcStatus {
    guard(|| {
        let space = &as_ref(space, "space")?.0;
        let mu = &as_ref(mu, "measure")?.0;
        let k = match kind {
            Builder::Intrinsic => intrinsic_dc(space, mu, dim_cap),
            Builder::AmbientFinite => ambient_dc_finite(space, mu, dim_cap),
            Builder::AmbientPlanar => ambient_dc_planar(space, mu, dim_cap, None),
        };
        emit(out, DcBifiltration(lift(k)?))
    })
}

/// Dual degree Čech bifiltration with witnesses in the support of `mu`.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_intrinsic_dc(
    space: *const DcSpace,
    mu: *const DcMeasure,
    dim_cap: usize,
    out: *mut *mut DcBifiltration,
) -> DcStatus {
    build(Builder::Intrinsic, space, mu, dim_cap, out)
}

/// Dual degree Čech bifiltration with witnesses anywhere in the finite space.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_ambient_dc_finite(
    space: *const DcSpace,
    mu: *const DcMeasure,
    dim_cap: usize,
    out: *mut *mut DcBifiltration,
) -> DcStatus {
    build(Builder::AmbientFinite, space, mu, dim_cap, out)
}

/// Dual degree Čech bifiltration with witnesses anywhere in the plane.
/// The space must have been built from points.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_ambient_dc_planar(
    space: *const DcSpace,
    mu: *const DcMeasure,
    dim_cap: usize,
    out: *mut *mut DcBifiltration,
) -> DcStatus {
    build(Builder::AmbientPlanar, space, mu, dim_cap, out)
}

/// Number of simplices with a staircase, or 0 for a null handle.
///
/// # Safety
/// `k` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dc_bifiltration_len(k: *const DcBifiltration) -> usize {
    k.as_ref().map_or(0, |k| k.0.len())
}

/// Whether the simplex on `vertices` (any order) is present at `(m, r)`.
///
/// # Safety
/// `vertices` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_bifiltration_present(
    k: *const DcBifiltration,
    vertices: *const usize,
    len: usize,
    m: f64,
    r: f64,
    out: *mut bool,
) -> DcStatus {
    guard(|| {
        let k = &as_ref(k, "bifiltration")?.0;
        let s = lift(Simplex::from_unsorted(as_slice(vertices, len, "vertices")?.to_vec()))?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = k.present(&s, m, r);
        Ok(())
    })
}

/// Betti numbers over GF(2) in degrees `0..out_len` of the complex at `(m, r)`.
/// Degrees at or above the dimension cap are not meaningful.
///
/// # Safety
/// `out` must point to `out_len` writable values.
#[no_mangle]
pub unsafe extern "C" fn dc_betti_at(k: *const DcBifiltration, m: f64, r: f64, out: *mut usize, out_len: usize) -> DcStatus {
    guard(|| {
        let k = &as_ref(k, "bifiltration")?.0;
        if out_len == 0 {
            return Ok(());
        }
        if out.is_null() {
            return Err(null("output buffer"));
        }
        let b = betti(&k.complex_at(m, r), out_len - 1);
        slice::from_raw_parts_mut(out, out_len).copy_from_slice(&b[..out_len]);
        Ok(())
    })
}

/// # Safety
/// `k` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dc_bifiltration_free(k: *mut DcBifiltration) {
    if !k.is_null() {
        drop(Box::from_raw(k));
    }
}

/// Exact Prohorov distance of two measures on the same space.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_prohorov_distance(
    space: *const DcSpace,
    mu0: *const DcMeasure,
    mu1: *const DcMeasure,
    out: *mut f64,
) -> DcStatus {
    guard(|| {
        let space = &as_ref(space, "space")?.0;
        let (mu0, mu1) = (&as_ref(mu0, "mu0")?.0, &as_ref(mu1, "mu1")?.0);
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = lift(prohorov_distance(space, mu0, mu1))?;
        Ok(())
    })
}
