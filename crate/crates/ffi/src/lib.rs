//! C ABI over the partialwave library.
//!
//! Objects are opaque heap handles released with their `*_free` function.
//! Every fallible call returns a [`PwStatus`]; on failure the message is
//! available from [`pw_last_error_message`] on the same thread.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use partialwave::model_l2::eigenvalues_tk;
use partialwave::potentials::{chi_hash, DoubleWellConfig, RadialPotential};
use partialwave::radial::{RadialProblem, RadialSolver};
use partialwave::scattering::phase_shift_mod_pi;
use partialwave::specfun::{bessel_jy, BesselOrder};
use partialwave::transparency::{
    certify_non_transparency, wronskian_d, CertifyOptions, TransparencyCertificate, Verdict,
};
use partialwave::Error;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Domain = 3,
    Overflow = 4,
    NoConvergence = 5,
    Integration = 6,
    IdenticallyZero = 7,
    BoundaryZero = 8,
    BufferTooSmall = 9,
    Internal = 10,
    Panic = 11,
}

/// Opaque radial well.
pub struct PwPotential {
    inner: RadialPotential,
}

/// Opaque transparency certificate.
pub struct PwCertificate {
    inner: TransparencyCertificate,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).expect("nul bytes removed"));
}

fn status_of(e: &Error) -> PwStatus {
    match e {
        Error::InvalidParameter { .. } | Error::Parse(_) => PwStatus::InvalidArgument,
        Error::Domain(_) | Error::Divergent(_) => PwStatus::Domain,
        Error::Overflow(_) => PwStatus::Overflow,
        Error::NoConvergence(_) | Error::RefinementExhausted { .. } => PwStatus::NoConvergence,
        Error::Integration { .. } => PwStatus::Integration,
        Error::IdenticallyZero(_) => PwStatus::IdenticallyZero,
        Error::BoundaryZero { .. } => PwStatus::BoundaryZero,
        Error::Internal(_) => PwStatus::Internal,
    }
}

fn guard<F>(f: F) -> PwStatus
where
    F: FnOnce() -> Result<(), (PwStatus, String)>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            PwStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside partialwave");
            PwStatus::Panic
        }
    }
}

fn lib<T>(r: partialwave::Result<T>) -> Result<T, (PwStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (PwStatus, String) {
    (PwStatus::NullPointer, format!("{what} is null"))
}

unsafe fn out_ref<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, (PwStatus, String)> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn well_ref<'a>(p: *const PwPotential) -> Result<&'a RadialPotential, (PwStatus, String)> {
    p.as_ref().map(|w| &w.inner).ok_or_else(|| null("potential"))
}

fn boxed_potential(out: *mut *mut PwPotential, w: RadialPotential) -> Result<(), (PwStatus, String)> {
    let slot = unsafe { out_ref(out, "out")? };
    *slot = Box::into_raw(Box::new(PwPotential { inner: w }));
    Ok(())
}

/// Message of the last failed call on this thread; empty after a success.
/// Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn pw_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn pw_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Writes the hex hash of the bump definition (64 chars plus NUL) into `buf`.
#[no_mangle]
pub unsafe extern "C" fn pw_chi_hash(buf: *mut c_char, len: usize) -> PwStatus {
    guard(|| {
        if buf.is_null() {
            return Err(null("buf"));
        }
        let h = chi_hash();
        if len < h.len() + 1 {
            return Err((PwStatus::BufferTooSmall, format!("need {} bytes", h.len() + 1)));
        }
        ptr::copy_nonoverlapping(h.as_ptr().cast::<c_char>(), buf, h.len());
        *buf.add(h.len()) = 0;
        Ok(())
    })
}

/// Smooth bump well of radius `r`.
#[no_mangle]
pub unsafe extern "C" fn pw_potential_chi_well(r: f64, out: *mut *mut PwPotential) -> PwStatus {
    guard(|| boxed_potential(out, lib(RadialPotential::single_well(r))?))
}

#[no_mangle]
pub unsafe extern "C" fn pw_potential_step(depth: f64, radius: f64, out: *mut *mut PwPotential) -> PwStatus {
    guard(|| boxed_potential(out, lib(RadialPotential::step_well(depth, radius))?))
}

/// Parses `chi:R=<r>` or `step:depth=<d>,radius=<a>`.
#[no_mangle]
pub unsafe extern "C" fn pw_potential_parse(spec: *const c_char, out: *mut *mut PwPotential) -> PwStatus {
    guard(|| {
        if spec.is_null() {
            return Err(null("spec"));
        }
        let text = CStr::from_ptr(spec)
            .to_str()
            .map_err(|_| (PwStatus::InvalidArgument, "spec is not UTF-8".to_string()))?;
        boxed_potential(out, lib(text.parse())?)
    })
}

#[no_mangle]
pub unsafe extern "C" fn pw_potential_free(p: *mut PwPotential) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

#[no_mangle]
pub unsafe extern "C" fn pw_potential_support_radius(p: *const PwPotential, out: *mut f64) -> PwStatus {
    guard(|| {
        let w = well_ref(p)?;
        *out_ref(out, "out")? = w.support_radius();
        Ok(())
    })
}

/// `J_ν(x), J'_ν(x), Y_ν(x), Y'_ν(x)`.
#[no_mangle]
pub unsafe extern "C" fn pw_bessel_jy(
    nu: f64,
    x: f64,
    j: *mut f64,
    jp: *mut f64,
    y: *mut f64,
    yp: *mut f64,
) -> PwStatus {
    guard(|| {
        let (j, jp, y, yp) = (
            out_ref(j, "j")?,
            out_ref(jp, "jp")?,
            out_ref(y, "y")?,
            out_ref(yp, "yp")?,
        );
        let v = lib(bessel_jy(lib(BesselOrder::new(nu))?, x))?;
        (*j, *jp, *y, *yp) = (v.j, v.jp, v.y, v.yp);
        Ok(())
    })
}

/// Phase shift in `(−π/2, π/2]` for the well `p` at coupling `lambda`.
#[no_mangle]
pub unsafe extern "C" fn pw_phase_shift(
    p: *const PwPotential,
    l: u32,
    n: u32,
    k: f64,
    lambda: f64,
    out: *mut f64,
) -> PwStatus {
    guard(|| {
        let w = well_ref(p)?;
        let out = out_ref(out, "out")?;
        let prob = lib(RadialProblem::new(l, n, k, lambda, *w))?;
        *out = lib(phase_shift_mod_pi(&prob))?;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn pw_count_bound_states(
    p: *const PwPotential,
    l: u32,
    n: u32,
    lambda: f64,
    out: *mut usize,
) -> PwStatus {
    guard(|| {
        let w = well_ref(p)?;
        let out = out_ref(out, "out")?;
        *out = lib(RadialSolver::default().count_bound_states(l, n, lambda, w))?;
        Ok(())
    })
}

/// Determinant of the free Bessel pair and the regular solution of the
/// bump well of radius `r`, evaluated at `r_eval`.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn pw_wronskian_d(
    l: u32,
    n: u32,
    k: f64,
    lambda: f64,
    r: f64,
    r_eval: f64,
    raw: *mut f64,
    normalized: *mut f64,
) -> PwStatus {
    guard(|| {
        let (raw, normalized) = (out_ref(raw, "raw")?, out_ref(normalized, "normalized")?);
        let v = lib(wronskian_d(&RadialSolver::default(), l, n, k, lambda, r, r_eval))?;
        (*raw, *normalized) = (v.raw, v.normalized);
        Ok(())
    })
}

/// Sorted eigenvalues of the `N × N` model operator into `buf[0..N]`.
#[no_mangle]
pub unsafe extern "C" fn pw_model_eigenvalues(n: usize, k: f64, buf: *mut f64, len: usize) -> PwStatus {
    guard(|| {
        if buf.is_null() {
            return Err(null("buf"));
        }
        if len < n {
            return Err((PwStatus::BufferTooSmall, format!("need {n} slots, got {len}")));
        }
        let ev = lib(eigenvalues_tk(n, k))?;
        ptr::copy_nonoverlapping(ev.as_ptr(), buf, ev.len());
        Ok(())
    })
}

/// Non-transparency certificate with default grid and threshold, `n = 3`.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn pw_certify(
    lambda: f64,
    r: f64,
    x0_norm: f64,
    l_max: u32,
    lt_max: u32,
    k_lo: f64,
    k_hi: f64,
    out: *mut *mut PwCertificate,
) -> PwStatus {
    guard(|| {
        let slot = out_ref(out, "out")?;
        let cfg = lib(DoubleWellConfig::new(r, x0_norm, lambda))?;
        let cert = lib(certify_non_transparency(
            &RadialSolver::default(),
            cfg,
            l_max,
            lt_max,
            (k_lo, k_hi),
            &CertifyOptions::default(),
        ))?;
        *slot = Box::into_raw(Box::new(PwCertificate { inner: cert }));
        Ok(())
    })
}

/// `*passed` is 1 for a pass verdict, 0 for fail.
#[no_mangle]
pub unsafe extern "C" fn pw_certificate_passed(c: *const PwCertificate, passed: *mut i32) -> PwStatus {
    guard(|| {
        let c = c.as_ref().ok_or_else(|| null("certificate"))?;
        *out_ref(passed, "passed")? = i32::from(c.inner.verdict == Verdict::Pass);
        Ok(())
    })
}

/// `*has_margin` is 0 when the unit well has no zeros (unbounded margin).
#[no_mangle]
pub unsafe extern "C" fn pw_certificate_margin(
    c: *const PwCertificate,
    margin: *mut f64,
    has_margin: *mut i32,
) -> PwStatus {
    guard(|| {
        let c = c.as_ref().ok_or_else(|| null("certificate"))?;
        let (margin, has_margin) = (out_ref(margin, "margin")?, out_ref(has_margin, "has_margin")?);
        *has_margin = i32::from(c.inner.margin.is_some());
        *margin = c.inner.margin.unwrap_or(f64::INFINITY);
        Ok(())
    })
}

/// JSON text of the certificate; release with [`pw_string_free`].
#[no_mangle]
pub unsafe extern "C" fn pw_certificate_json(c: *const PwCertificate, out: *mut *mut c_char) -> PwStatus {
    guard(|| {
        let c = c.as_ref().ok_or_else(|| null("certificate"))?;
        let slot = out_ref(out, "out")?;
        let text = serde_json::to_string(&c.inner).map_err(|e| (PwStatus::Internal, e.to_string()))?;
        *slot = CString::new(text)
            .map_err(|e| (PwStatus::Internal, e.to_string()))?
            .into_raw();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn pw_certificate_free(c: *mut PwCertificate) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

#[no_mangle]
pub unsafe extern "C" fn pw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
