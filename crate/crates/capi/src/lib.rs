//! C ABI for the starlike toolkit.
//!
//! Scalar queries (special-function evaluation, region margins, thresholds)
//! are plain functions over doubles. Analytic maps cross the boundary as
//! opaque [`SlMap`] handles created by the `sl_map_*` constructors and
//! released with [`sl_map_free`]. Every fallible call returns an
//! [`SlStatus`]; outputs are written through pointers only on `Ok`.
//!
//! The header `include/starlike.h` is generated at build time.

use std::ffi::{c_char, CStr};

use starlike::criteria::{bessel_alpha_min, kummer_alpha_min, min_beta_one_plus_k1};
use starlike::error::Error;
use starlike::presets;
use starlike::regions::{self, Region};
use starlike::series::PowerSeries;
use starlike::special::{
    bessel_u_eval, kummer_eval, ode_residual_bessel, ode_residual_kummer, pochhammer, BesselParams,
    KummerParams,
};
use starlike::subordination::{
    apply_transform, check_subordination, AnalyticMap, TransformSpec, Verdict,
};

use num_complex::Complex64;

/// Call outcome.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    PoleParameter = 3,
    NotApplicable = 4,
    EvaluationFailed = 5,
}

/// Target region selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlRegion {
    HalfPlane = 0,
    Sector = 1,
    Cardioid = 2,
}

/// Transform selector for [`sl_map_transform`]; `k` and `beta` are read only
/// by the last two kinds.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlTransform {
    ZFprimeOverF = 0,
    Fprime = 1,
    Z2FprimeOverF2 = 2,
    OnePlusBeta = 3,
    PPlusBeta = 4,
}

/// Verdict of a subordination sweep.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlVerdict {
    Holds = 0,
    Counterexample = 1,
    Inconclusive = 2,
}

/// Flattened subordination evidence record.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct SlReport {
    pub min_margin: f64,
    pub witness_z_re: f64,
    pub witness_z_im: f64,
    pub witness_w_re: f64,
    pub witness_w_im: f64,
    pub tail_bound: f64,
    pub samples_per_circle: usize,
    pub verdict: SlVerdict,
}

/// Opaque analytic-map handle.
pub struct SlMap {
    inner: AnalyticMap,
}

fn status_of(err: &Error) -> SlStatus {
    match err {
        Error::PoleParameter { .. } => SlStatus::PoleParameter,
        Error::NotApplicable { .. } => SlStatus::NotApplicable,
        Error::EvaluationFailure { .. }
        | Error::ZeroOnCircle { .. }
        | Error::ZeroDenominator { .. }
        | Error::ZeroDerivative { .. }
        | Error::ZeroConstantTerm { .. } => SlStatus::EvaluationFailed,
        _ => SlStatus::InvalidArgument,
    }
}

unsafe fn write_out(ptr: *mut f64, value: f64) -> SlStatus {
    if ptr.is_null() {
        return SlStatus::NullPointer;
    }
    unsafe { *ptr = value };
    SlStatus::Ok
}

/// Rising factorial `(lambda)_n`.
#[no_mangle]
pub extern "C" fn sl_pochhammer(lambda: f64, n: u32) -> f64 {
    pochhammer(lambda, n)
}

/// Kummer function value at `z`; also reports the number of series terms.
///
/// # Safety
/// Output pointers must be valid for writes or null (null fails the call).
#[no_mangle]
pub unsafe extern "C" fn sl_kummer_eval(
    a: f64,
    c: f64,
    z_re: f64,
    z_im: f64,
    out_re: *mut f64,
    out_im: *mut f64,
    out_terms: *mut u32,
) -> SlStatus {
    if out_re.is_null() || out_im.is_null() {
        return SlStatus::NullPointer;
    }
    let params = match KummerParams::new(a, c) {
        Ok(p) => p,
        Err(e) => return status_of(&e),
    };
    let value = kummer_eval(&params, Complex64::new(z_re, z_im));
    unsafe {
        *out_re = value.value.re;
        *out_im = value.value.im;
        if !out_terms.is_null() {
            *out_terms = value.terms as u32;
        }
    }
    SlStatus::Ok
}

/// Generalized normalized Bessel function value at `z`.
///
/// # Safety
/// Same pointer contract as [`sl_kummer_eval`].
#[no_mangle]
pub unsafe extern "C" fn sl_bessel_eval(
    p: f64,
    b: f64,
    c: f64,
    z_re: f64,
    z_im: f64,
    out_re: *mut f64,
    out_im: *mut f64,
    out_terms: *mut u32,
) -> SlStatus {
    if out_re.is_null() || out_im.is_null() {
        return SlStatus::NullPointer;
    }
    let params = match BesselParams::new(p, b, c) {
        Ok(p) => p,
        Err(e) => return status_of(&e),
    };
    let value = bessel_u_eval(&params, Complex64::new(z_re, z_im));
    unsafe {
        *out_re = value.value.re;
        *out_im = value.value.im;
        if !out_terms.is_null() {
            *out_terms = value.terms as u32;
        }
    }
    SlStatus::Ok
}

/// Infimum of admissible sector orders for the Kummer function.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn sl_kummer_alpha_min(a: f64, c: f64, out: *mut f64) -> SlStatus {
    match kummer_alpha_min(a, c) {
        Ok(v) => unsafe { write_out(out, v) },
        Err(e) => status_of(&e),
    }
}

/// Infimum of admissible sector orders for the Bessel function.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn sl_bessel_alpha_min(p: f64, b: f64, c: f64, out: *mut f64) -> SlStatus {
    match bessel_alpha_min(p, b, c) {
        Ok(v) => unsafe { write_out(out, v) },
        Err(e) => status_of(&e),
    }
}

/// Signed sector margin of `w` (radians, positive inside).
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn sl_sector_margin(
    w_re: f64,
    w_im: f64,
    alpha: f64,
    out: *mut f64,
) -> SlStatus {
    match regions::sector_margin(Complex64::new(w_re, w_im), alpha) {
        Ok(v) => unsafe { write_out(out, v) },
        Err(e) => status_of(&e),
    }
}

/// Signed cardioid margin of `w` (positive inside).
#[no_mangle]
pub extern "C" fn sl_car_margin(w_re: f64, w_im: f64) -> f64 {
    regions::car_margin(Complex64::new(w_re, w_im))
}

/// Implicit cardioid quartic at `w` (negative inside).
#[no_mangle]
pub extern "C" fn sl_car_quartic(w_re: f64, w_im: f64) -> f64 {
    regions::car_quartic(Complex64::new(w_re, w_im))
}

/// Threshold of the `1 + beta z p'/p` cardioid premise: closed form, brute
/// bisection over `tgrid` boundary parameters and their gap.
///
/// # Safety
/// Output pointers must be valid for writes or null.
#[no_mangle]
pub unsafe extern "C" fn sl_threshold_one_plus_k1(
    alpha: f64,
    tgrid: u32,
    out_analytic: *mut f64,
    out_brute: *mut f64,
    out_gap: *mut f64,
) -> SlStatus {
    match min_beta_one_plus_k1(alpha, tgrid as usize) {
        Ok(r) => unsafe {
            if !out_analytic.is_null() {
                *out_analytic = r.analytic.unwrap_or(f64::NAN);
            }
            if !out_brute.is_null() {
                *out_brute = r.brute;
            }
            if !out_gap.is_null() {
                *out_gap = r.gap.unwrap_or(f64::NAN);
            }
            SlStatus::Ok
        },
        Err(e) => status_of(&e),
    }
}

/// Sup-norm residual of the Kummer series under its own equation.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn sl_ode_residual_kummer(
    a: f64,
    c: f64,
    order: u32,
    out: *mut f64,
) -> SlStatus {
    match KummerParams::new(a, c) {
        Ok(p) => unsafe { write_out(out, ode_residual_kummer(&p, order as usize)) },
        Err(e) => status_of(&e),
    }
}

/// Sup-norm residual of the Bessel series under its own equation.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn sl_ode_residual_bessel(
    p: f64,
    b: f64,
    c: f64,
    order: u32,
    out: *mut f64,
) -> SlStatus {
    match BesselParams::new(p, b, c) {
        Ok(params) => unsafe { write_out(out, ode_residual_bessel(&params, order as usize)) },
        Err(e) => status_of(&e),
    }
}

/// Map from interleaved `[re0, im0, re1, im1, ...]` Taylor coefficients.
/// Returns null when the input is empty, null or non-finite.
///
/// # Safety
/// `reim` must point to `2 * n_pairs` doubles.
#[no_mangle]
pub unsafe extern "C" fn sl_map_from_coeffs(reim: *const f64, n_pairs: usize) -> *mut SlMap {
    if reim.is_null() || n_pairs == 0 {
        return std::ptr::null_mut();
    }
    let data = unsafe { std::slice::from_raw_parts(reim, 2 * n_pairs) };
    if data.iter().any(|x| !x.is_finite()) {
        return std::ptr::null_mut();
    }
    let coeffs: Vec<Complex64> = data
        .chunks_exact(2)
        .map(|p| Complex64::new(p[0], p[1]))
        .collect();
    let map = AnalyticMap::Series(PowerSeries::new(coeffs));
    Box::into_raw(Box::new(SlMap { inner: map }))
}

/// Kummer function as a map handle (null on pole parameters).
#[no_mangle]
pub extern "C" fn sl_map_kummer(a: f64, c: f64) -> *mut SlMap {
    match KummerParams::new(a, c) {
        Ok(p) => Box::into_raw(Box::new(SlMap {
            inner: AnalyticMap::Kummer(p),
        })),
        Err(_) => std::ptr::null_mut(),
    }
}

/// Bessel function as a map handle (null on pole parameters).
#[no_mangle]
pub extern "C" fn sl_map_bessel(p: f64, b: f64, c: f64) -> *mut SlMap {
    match BesselParams::new(p, b, c) {
        Ok(params) => Box::into_raw(Box::new(SlMap {
            inner: AnalyticMap::Bessel(params),
        })),
        Err(_) => std::ptr::null_mut(),
    }
}

/// The sector extremal `((1+z)/(1-z))^alpha` as a map handle.
#[no_mangle]
pub extern "C" fn sl_map_sector_extremal(alpha: f64) -> *mut SlMap {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return std::ptr::null_mut();
    }
    Box::into_raw(Box::new(SlMap {
        inner: AnalyticMap::SectorPower { alpha },
    }))
}

/// Named example functions: "f1" or "f2".
///
/// # Safety
/// `name` must be a valid NUL-terminated string or null.
#[no_mangle]
pub unsafe extern "C" fn sl_map_preset(name: *const c_char) -> *mut SlMap {
    if name.is_null() {
        return std::ptr::null_mut();
    }
    let name = match unsafe { CStr::from_ptr(name) }.to_str() {
        Ok(s) => s,
        Err(_) => return std::ptr::null_mut(),
    };
    let map = match name {
        "f1" => presets::f1(),
        "f2" => presets::f2(),
        _ => return std::ptr::null_mut(),
    };
    Box::into_raw(Box::new(SlMap { inner: map }))
}

/// New handle holding the transformed map (null on error; the input handle
/// stays valid and owned by the caller).
///
/// # Safety
/// `map` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn sl_map_transform(
    map: *const SlMap,
    kind: SlTransform,
    k: u32,
    beta: f64,
) -> *mut SlMap {
    if map.is_null() {
        return std::ptr::null_mut();
    }
    let base = unsafe { &(*map).inner };
    let spec = match kind {
        SlTransform::ZFprimeOverF => TransformSpec::ZFprimeOverF,
        SlTransform::Fprime => TransformSpec::Fprime,
        SlTransform::Z2FprimeOverF2 => TransformSpec::Z2FprimeOverF2,
        SlTransform::OnePlusBeta => TransformSpec::OnePlusBeta { k: k as u8, beta },
        SlTransform::PPlusBeta => TransformSpec::PPlusBeta { k: k as u8, beta },
    };
    match apply_transform(base, spec) {
        Ok(out) => Box::into_raw(Box::new(SlMap { inner: out })),
        Err(_) => std::ptr::null_mut(),
    }
}

/// Evaluate a map handle at a point.
///
/// # Safety
/// `map` must be a live handle; output pointers valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sl_map_eval(
    map: *const SlMap,
    z_re: f64,
    z_im: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> SlStatus {
    if map.is_null() || out_re.is_null() || out_im.is_null() {
        return SlStatus::NullPointer;
    }
    match unsafe { &(*map).inner }.eval(Complex64::new(z_re, z_im)) {
        Ok(w) => {
            unsafe {
                *out_re = w.re;
                *out_im = w.im;
            }
            SlStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Sample the map on the radii ladder against the selected region and fill
/// the report. `alpha` is read only for `SlRegion::Sector`.
///
/// # Safety
/// `map` must be a live handle, `radii` must point to `n_radii` doubles and
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn sl_check_subordination(
    map: *const SlMap,
    region: SlRegion,
    alpha: f64,
    radii: *const f64,
    n_radii: usize,
    samples: usize,
    out: *mut SlReport,
) -> SlStatus {
    if map.is_null() || radii.is_null() || out.is_null() {
        return SlStatus::NullPointer;
    }
    let target = match region {
        SlRegion::HalfPlane => Region::HalfPlane,
        SlRegion::Cardioid => Region::CardioidCar,
        SlRegion::Sector => match Region::sector(alpha) {
            Ok(r) => r,
            Err(e) => return status_of(&e),
        },
    };
    let ladder = unsafe { std::slice::from_raw_parts(radii, n_radii) };
    match check_subordination(unsafe { &(*map).inner }, &target, ladder, samples) {
        Ok(report) => {
            unsafe {
                *out = SlReport {
                    min_margin: report.min_margin,
                    witness_z_re: report.witness_z.re,
                    witness_z_im: report.witness_z.im,
                    witness_w_re: report.witness_w.re,
                    witness_w_im: report.witness_w.im,
                    tail_bound: report.tail_bound,
                    samples_per_circle: report.samples_per_circle,
                    verdict: match report.verdict {
                        Verdict::Holds => SlVerdict::Holds,
                        Verdict::Counterexample => SlVerdict::Counterexample,
                        Verdict::Inconclusive => SlVerdict::Inconclusive,
                    },
                };
            }
            SlStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Release a map handle (null is a no-op).
///
/// # Safety
/// `map` must be a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sl_map_free(map: *mut SlMap) {
    if !map.is_null() {
        drop(unsafe { Box::from_raw(map) });
    }
}
