//! Exercises the C surface exactly as a foreign caller would: raw pointers,
//! status codes, opaque handles.

use std::ffi::CString;

use starlike_capi::*;

#[test]
fn scalar_functions() {
    assert_eq!(sl_pochhammer(6.0, 3), 336.0);
    assert_eq!(sl_car_margin(1.0, 0.0), 2.0);
    assert!((sl_car_quartic(1.0, 0.0) + 48.0).abs() < 1e-12);
    assert!(sl_car_margin(3.0, 0.0).abs() < 1e-12);
}

#[test]
fn special_function_eval_and_errors() {
    let (mut re, mut im, mut terms) = (0.0f64, 0.0f64, 0u32);
    let status = unsafe { sl_kummer_eval(2.0, 6.0, 0.0, 0.0, &mut re, &mut im, &mut terms) };
    assert_eq!(status, SlStatus::Ok);
    assert_eq!((re, im), (1.0, 0.0));
    assert!(terms >= 2);

    let status = unsafe { sl_kummer_eval(2.0, 0.0, 0.0, 0.0, &mut re, &mut im, &mut terms) };
    assert_eq!(status, SlStatus::PoleParameter);

    let status = unsafe {
        sl_kummer_eval(
            2.0,
            6.0,
            0.0,
            0.0,
            std::ptr::null_mut(),
            &mut im,
            &mut terms,
        )
    };
    assert_eq!(status, SlStatus::NullPointer);

    let status = unsafe { sl_bessel_eval(2.0, 2.0, 6.0, 0.5, 0.0, &mut re, &mut im, &mut terms) };
    assert_eq!(status, SlStatus::Ok);
    assert!(re < 1.0 && im == 0.0);
}

#[test]
fn alpha_thresholds() {
    let mut out = 0.0f64;
    assert_eq!(
        unsafe { sl_kummer_alpha_min(2.0, 6.0, &mut out) },
        SlStatus::Ok
    );
    assert!((out - 1.0 / 6.0f64.sqrt()).abs() < 1e-15);
    assert_eq!(
        unsafe { sl_bessel_alpha_min(2.0, 2.0, 6.0, &mut out) },
        SlStatus::Ok
    );
    assert!((out - 0.6).abs() < 1e-15);
    assert_eq!(
        unsafe { sl_bessel_alpha_min(0.0, 0.0, 6.0, &mut out) },
        SlStatus::NotApplicable
    );
}

#[test]
fn sector_margin_and_origin() {
    let mut out = 0.0f64;
    assert_eq!(
        unsafe { sl_sector_margin(1.0, 0.0, 0.5, &mut out) },
        SlStatus::Ok
    );
    assert!((out - 0.25 * std::f64::consts::PI).abs() < 1e-15);
    assert_eq!(
        unsafe { sl_sector_margin(0.0, 0.0, 0.5, &mut out) },
        SlStatus::InvalidArgument
    );
}

#[test]
fn threshold_solver() {
    let (mut analytic, mut brute, mut gap) = (0.0f64, 0.0f64, 0.0f64);
    let status =
        unsafe { sl_threshold_one_plus_k1(1.0, 2048, &mut analytic, &mut brute, &mut gap) };
    assert_eq!(status, SlStatus::Ok);
    assert!((analytic - 1.6949731712249416).abs() < 1e-12);
    assert!(gap < 1e-4);
}

#[test]
fn ode_residuals() {
    let mut out = f64::NAN;
    assert_eq!(
        unsafe { sl_ode_residual_kummer(2.0, 6.0, 50, &mut out) },
        SlStatus::Ok
    );
    assert!(out <= 1e-12);
    assert_eq!(
        unsafe { sl_ode_residual_bessel(7.0, 6.0, 10.0, 50, &mut out) },
        SlStatus::Ok
    );
    assert!(out <= 1e-12);
}

#[test]
fn map_handles_full_round_trip() {
    let name = CString::new("f1").unwrap();
    let f1 = unsafe { sl_map_preset(name.as_ptr()) };
    assert!(!f1.is_null());

    let q1 = unsafe { sl_map_transform(f1, SlTransform::ZFprimeOverF, 0, 0.0) };
    assert!(!q1.is_null());

    // q1(0.5) = (2 + 0.5)/(2 - 0.5)
    let (mut re, mut im) = (0.0f64, 0.0f64);
    assert_eq!(
        unsafe { sl_map_eval(q1, 0.5, 0.0, &mut re, &mut im) },
        SlStatus::Ok
    );
    assert!((re - 2.5 / 1.5).abs() < 1e-14 && im.abs() < 1e-14);

    let radii = [0.9, 0.99, 0.999];
    let mut report = SlReport {
        min_margin: 0.0,
        witness_z_re: 0.0,
        witness_z_im: 0.0,
        witness_w_re: 0.0,
        witness_w_im: 0.0,
        tail_bound: 0.0,
        samples_per_circle: 0,
        verdict: SlVerdict::Inconclusive,
    };
    let status = unsafe {
        sl_check_subordination(
            q1,
            SlRegion::Cardioid,
            0.0,
            radii.as_ptr(),
            radii.len(),
            512,
            &mut report,
        )
    };
    assert_eq!(status, SlStatus::Ok);
    assert_eq!(report.verdict, SlVerdict::Holds);
    assert!(report.min_margin > 0.0);
    assert_eq!(report.samples_per_circle, 512);

    unsafe {
        sl_map_free(q1);
        sl_map_free(f1);
        sl_map_free(std::ptr::null_mut()); // no-op
    }
}

#[test]
fn map_constructors_validate() {
    assert!(sl_map_kummer(2.0, -1.0).is_null());
    assert!(!sl_map_kummer(2.0, 6.0).is_null());
    assert!(sl_map_sector_extremal(1.5).is_null());
    let bad_name = CString::new("zzz").unwrap();
    assert!(unsafe { sl_map_preset(bad_name.as_ptr()) }.is_null());
    assert!(unsafe { sl_map_from_coeffs(std::ptr::null(), 3) }.is_null());
    let with_nan = [1.0, 0.0, f64::NAN, 0.0];
    assert!(unsafe { sl_map_from_coeffs(with_nan.as_ptr(), 2) }.is_null());

    let coeffs = [1.0, 0.0, 0.25, 0.0];
    let map = unsafe { sl_map_from_coeffs(coeffs.as_ptr(), 2) };
    assert!(!map.is_null());
    let (mut re, mut im) = (0.0f64, 0.0f64);
    assert_eq!(
        unsafe { sl_map_eval(map, 0.0, 0.0, &mut re, &mut im) },
        SlStatus::Ok
    );
    assert_eq!((re, im), (1.0, 0.0));
    unsafe { sl_map_free(map) };
}

#[test]
fn null_handles_are_rejected() {
    let (mut re, mut im) = (0.0f64, 0.0f64);
    assert_eq!(
        unsafe { sl_map_eval(std::ptr::null(), 0.0, 0.0, &mut re, &mut im) },
        SlStatus::NullPointer
    );
    assert!(unsafe { sl_map_transform(std::ptr::null(), SlTransform::Fprime, 0, 0.0) }.is_null());
}

#[test]
fn generated_header_covers_surface() {
    let header = std::fs::read_to_string(
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("include/starlike.h"),
    )
    .expect("header generated at build time");
    for symbol in [
        "sl_pochhammer",
        "sl_kummer_eval",
        "sl_bessel_eval",
        "sl_kummer_alpha_min",
        "sl_bessel_alpha_min",
        "sl_sector_margin",
        "sl_car_margin",
        "sl_car_quartic",
        "sl_threshold_one_plus_k1",
        "sl_ode_residual_kummer",
        "sl_ode_residual_bessel",
        "sl_map_from_coeffs",
        "sl_map_kummer",
        "sl_map_bessel",
        "sl_map_sector_extremal",
        "sl_map_preset",
        "sl_map_transform",
        "sl_map_eval",
        "sl_check_subordination",
        "sl_map_free",
        "typedef struct SlMap SlMap;",
    ] {
        assert!(header.contains(symbol), "header missing {symbol}");
    }
}
