//! Kummer's confluent hypergeometric function and the generalized normalized
//! Bessel function of the first kind.
//!
//! Both are entire functions given by hypergeometric-type series:
//!
//! ```text
//! Phi(a, c; z) = sum_n (a)_n / (c)_n * z^n / n!          (c not in {0,-1,-2,...})
//! u_p(z)       = sum_n (-c/4)^n / (k)_n * z^n / n!       (k = p + (b+1)/2)
//! ```
//!
//! `Phi` solves `z Phi'' + (c - z) Phi' - a Phi = 0` and `u_p` solves
//! `4 z^2 u'' + 4 k z u' + c z u = 0`; the `ode_residual_*` functions below
//! feed a series through the corresponding differential operator and report
//! the largest surviving coefficient, which doubles as a parameter check:
//! feeding a series built from perturbed parameters leaves a residual
//! proportional to the perturbation.
//!
//! Parameters are restricted to reals; every criterion in this toolkit
//! assumes real parameters.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series::PowerSeries;

/// Relative size under which two consecutive series terms stop the adaptive
/// evaluators. Alternating series need the two-term guard.
const TERM_EPS: f64 = 1e-15;

/// Hard cap on adaptive summation length.
const MAX_TERMS: usize = 2000;

/// Tolerance for detecting nonpositive-integer parameters.
const POLE_EPS: f64 = 1e-12;

fn is_nonpositive_integer(x: f64) -> bool {
    x < 0.5 && (x - x.round()).abs() <= POLE_EPS && x.round() <= 0.0
}

/// Rising factorial `(lambda)_n = lambda (lambda+1) ... (lambda+n-1)`.
pub fn pochhammer(lambda: f64, n: u32) -> f64 {
    let mut acc = 1.0;
    for j in 0..n {
        acc *= lambda + j as f64;
    }
    acc
}

/// Parameters of Kummer's function `Phi(a, c; z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerParams {
    pub a: f64,
    pub c: f64,
}

impl KummerParams {
    pub fn new(a: f64, c: f64) -> Result<Self> {
        if !a.is_finite() || !c.is_finite() {
            return Err(Error::BadInput("non-finite Kummer parameter".into()));
        }
        if is_nonpositive_integer(c) {
            return Err(Error::PoleParameter { value: c });
        }
        Ok(KummerParams { a, c })
    }
}

/// Parameters of the generalized normalized Bessel function `u_p`;
/// `k = p + (b+1)/2` is derived on construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselParams {
    pub p: f64,
    pub b: f64,
    pub c: f64,
    k: f64,
}

impl BesselParams {
    pub fn new(p: f64, b: f64, c: f64) -> Result<Self> {
        if !p.is_finite() || !b.is_finite() || !c.is_finite() {
            return Err(Error::BadInput("non-finite Bessel parameter".into()));
        }
        let k = p + (b + 1.0) / 2.0;
        if is_nonpositive_integer(k) {
            return Err(Error::PoleParameter { value: k });
        }
        Ok(BesselParams { p, b, c, k })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    /// Parameters with `p` raised by one (used by the derivative recursion
    /// `4 k u_p'(z) = -c u_{p+1}(z)`).
    pub fn raise_order(&self) -> BesselParams {
        BesselParams {
            p: self.p + 1.0,
            b: self.b,
            c: self.c,
            k: self.k + 1.0,
        }
    }
}

/// Value of an adaptive series evaluation together with the number of terms
/// that were summed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: Complex64,
    pub terms: usize,
}

/// Taylor coefficients of `Phi(a, c; .)` up to `order`; coefficient k is
/// `(a)_k / ((c)_k k!)`, computed by the term recurrence so parameters stay
/// exactly real.
pub fn kummer_series(params: &KummerParams, order: usize) -> PowerSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = 1.0f64;
    coeffs.push(Complex64::new(1.0, 0.0));
    for n in 1..=order {
        let nf = n as f64;
        term *= (params.a + nf - 1.0) / ((params.c + nf - 1.0) * nf);
        coeffs.push(Complex64::new(term, 0.0));
    }
    PowerSeries::new(coeffs)
}

/// Adaptive evaluation of `Phi(a, c; z)`; stops once two consecutive terms
/// fall below `1e-15` of the partial sum.
pub fn kummer_eval(params: &KummerParams, z: Complex64) -> SeriesValue {
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    let mut small_streak = 0;
    let mut terms = 1;
    for n in 1..MAX_TERMS {
        let nf = n as f64;
        term *= z * ((params.a + nf - 1.0) / ((params.c + nf - 1.0) * nf));
        sum += term;
        terms = n + 1;
        if term.norm() <= TERM_EPS * sum.norm() {
            small_streak += 1;
            if small_streak >= 2 {
                break;
            }
        } else {
            small_streak = 0;
        }
    }
    SeriesValue { value: sum, terms }
}

/// Taylor coefficients of `u_p` up to `order`; coefficient n is
/// `(-c/4)^n / ((k)_n n!)`.
pub fn bessel_u_series(params: &BesselParams, order: usize) -> PowerSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = 1.0f64;
    coeffs.push(Complex64::new(1.0, 0.0));
    for n in 1..=order {
        let nf = n as f64;
        term *= (-params.c / 4.0) / ((params.k + nf - 1.0) * nf);
        coeffs.push(Complex64::new(term, 0.0));
    }
    PowerSeries::new(coeffs)
}

/// Adaptive evaluation of `u_p(z)` with the same stop rule as
/// [`kummer_eval`].
pub fn bessel_u_eval(params: &BesselParams, z: Complex64) -> SeriesValue {
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    let mut small_streak = 0;
    let mut terms = 1;
    for n in 1..MAX_TERMS {
        let nf = n as f64;
        term *= z * ((-params.c / 4.0) / ((params.k + nf - 1.0) * nf));
        sum += term;
        terms = n + 1;
        if term.norm() <= TERM_EPS * sum.norm() {
            small_streak += 1;
            if small_streak >= 2 {
                break;
            }
        } else {
            small_streak = 0;
        }
    }
    SeriesValue { value: sum, terms }
}

/// Left side `z s'' + (c - z) s' - a s` of the Kummer equation applied to an
/// arbitrary series.
pub fn kummer_ode_lhs(series: &PowerSeries, params: &KummerParams) -> PowerSeries {
    let d1 = series.derivative();
    let d2 = d1.derivative();
    let c_minus_z = PowerSeries::polynomial_re(&[params.c, -1.0], d1.order());
    d2.mul_z()
        .add(&c_minus_z.mul(&d1))
        .sub(&series.scale(Complex64::new(params.a, 0.0)))
}

/// Left side `4 z^2 s'' + 4 k z s' + c z s` of the Bessel equation applied to
/// an arbitrary series.
pub fn bessel_ode_lhs(series: &PowerSeries, params: &BesselParams) -> PowerSeries {
    let d1 = series.derivative();
    let d2 = d1.derivative();
    d2.mul_z()
        .mul_z()
        .scale(Complex64::new(4.0, 0.0))
        .add(&d1.mul_z().scale(Complex64::new(4.0 * params.k, 0.0)))
        .add(&series.mul_z().scale(Complex64::new(params.c, 0.0)))
}

/// Residual of `kummer_series(params, order)` against its own differential
/// equation: the sup-norm of the operator output over coefficients
/// `0..=order-2`. Round-off-level for matching parameters.
pub fn ode_residual_kummer(params: &KummerParams, order: usize) -> f64 {
    let series = kummer_series(params, order);
    ode_residual_kummer_for(&series, params)
}

/// Residual of an arbitrary series against the Kummer equation with the
/// given parameters; mixing parameter sets detects mismatches.
pub fn ode_residual_kummer_for(series: &PowerSeries, params: &KummerParams) -> f64 {
    let lhs = kummer_ode_lhs(series, params);
    lhs.sup_coeff(series.order().saturating_sub(2))
}

pub fn ode_residual_bessel(params: &BesselParams, order: usize) -> f64 {
    let series = bessel_u_series(params, order);
    ode_residual_bessel_for(&series, params)
}

pub fn ode_residual_bessel_for(series: &PowerSeries, params: &BesselParams) -> f64 {
    let lhs = bessel_ode_lhs(series, params);
    lhs.sup_coeff(series.order().saturating_sub(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(3.7, 0), 1.0);
        assert_eq!(pochhammer(1.0, 5), 120.0);
        assert_eq!(pochhammer(6.0, 3), 336.0);
    }

    #[test]
    fn kummer_params_reject_poles() {
        assert!(KummerParams::new(2.0, 6.0).is_ok());
        assert!(matches!(
            KummerParams::new(2.0, 0.0),
            Err(Error::PoleParameter { .. })
        ));
        assert!(matches!(
            KummerParams::new(2.0, -3.0 + 1e-14),
            Err(Error::PoleParameter { .. })
        ));
        // a nonpositive *non-integer* c is fine
        assert!(KummerParams::new(2.0, -2.5).is_ok());
    }

    #[test]
    fn bessel_params_derive_k() {
        let p = BesselParams::new(2.0, 2.0, 6.0).unwrap();
        assert_eq!(p.k(), 3.5);
        assert!(matches!(
            BesselParams::new(-1.0, 1.0, 6.0), // k = 0
            Err(Error::PoleParameter { .. })
        ));
    }

    #[test]
    fn kummer_low_coefficients_by_hand() {
        // (2)_k / ((6)_k k!): k=1 -> 2/6 = 1/3, k=2 -> 6/(42*2) = 1/14
        let s = kummer_series(&KummerParams::new(2.0, 6.0).unwrap(), 4);
        assert_eq!(s.coeff(0).re, 1.0);
        assert!((s.coeff(1).re - 1.0 / 3.0).abs() < 1e-15);
        assert!((s.coeff(2).re - 1.0 / 14.0).abs() < 1e-15);
        assert!(s.coeffs().iter().all(|c| c.im == 0.0));
    }

    #[test]
    fn kummer_eval_at_zero_is_one() {
        let p = KummerParams::new(5.0, 10.0).unwrap();
        let v = kummer_eval(&p, Complex64::new(0.0, 0.0));
        assert_eq!(v.value, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn kummer_eval_agrees_with_series_eval() {
        let p = KummerParams::new(2.0, 6.0).unwrap();
        let s = kummer_series(&p, 64);
        for &(re, im) in &[(0.3, 0.0), (0.0, -0.5), (0.2, 0.6), (-0.9, 0.3)] {
            let z = Complex64::new(re, im);
            let a = kummer_eval(&p, z).value;
            let b = s.eval(z);
            assert!((a - b).norm() <= 1e-10, "z={z}");
        }
    }

    #[test]
    fn kummer_derivative_recursion() {
        // c Phi'(a, c; z) = a Phi(a+1, c+1; z)
        let p = KummerParams::new(2.0, 6.0).unwrap();
        let raised = KummerParams::new(3.0, 7.0).unwrap();
        let d = kummer_series(&p, 80).derivative();
        for &(re, im) in &[(0.3, 0.0), (0.0, -0.5), (0.2, 0.6)] {
            let z = Complex64::new(re, im);
            let lhs = d.eval(z) * p.c;
            let rhs = kummer_eval(&raised, z).value * p.a;
            assert!((lhs - rhs).norm() <= 1e-10, "z={z}");
        }
    }

    #[test]
    fn bessel_low_coefficients_by_hand() {
        // (p,b,c) = (2,2,6): k = 3.5, coefficient 1 = -6/(4*3.5) = -3/7
        let p = BesselParams::new(2.0, 2.0, 6.0).unwrap();
        let s = bessel_u_series(&p, 4);
        assert_eq!(s.coeff(0).re, 1.0);
        assert!((s.coeff(1).re + 3.0 / 7.0).abs() < 1e-15);
        assert!(s.coeffs().iter().all(|c| c.im == 0.0));
    }

    #[test]
    fn bessel_eval_at_zero_is_one() {
        let p = BesselParams::new(7.0, 6.0, 10.0).unwrap();
        let v = bessel_u_eval(&p, Complex64::new(0.0, 0.0));
        assert_eq!(v.value, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn bessel_derivative_recursion_coefficientwise() {
        // 4 k u_p'(z) = -c u_{p+1}(z)
        let p = BesselParams::new(2.0, 2.0, 6.0).unwrap();
        let lhs = bessel_u_series(&p, 40)
            .derivative()
            .scale(Complex64::new(4.0 * p.k(), 0.0));
        let rhs = bessel_u_series(&p.raise_order(), 40).scale(Complex64::new(-p.c, 0.0));
        assert!(lhs.coeff_distance(&rhs) <= 1e-12);
    }

    #[test]
    fn ode_residual_kummer_parameter_sets() {
        let p1 = KummerParams::new(2.0, 6.0).unwrap();
        let p2 = KummerParams::new(5.0, 10.0).unwrap();
        assert!(ode_residual_kummer(&p1, 50) <= 1e-12);
        assert!(ode_residual_kummer(&p2, 50) <= 1e-12);
    }

    #[test]
    fn ode_residual_kummer_detects_perturbed_parameter() {
        let good = KummerParams::new(2.0, 6.0).unwrap();
        let series = kummer_series(&good, 50);
        let perturbed = KummerParams::new(2.0 + 1e-3, 6.0).unwrap();
        assert!(ode_residual_kummer_for(&series, &perturbed) > 1e-5);
    }

    #[test]
    fn ode_residual_bessel_parameter_sets() {
        let p1 = BesselParams::new(2.0, 2.0, 6.0).unwrap();
        let p2 = BesselParams::new(7.0, 6.0, 10.0).unwrap();
        assert!(ode_residual_bessel(&p1, 50) <= 1e-12);
        assert!(ode_residual_bessel(&p2, 50) <= 1e-12);
    }

    #[test]
    fn ode_residual_bessel_detects_perturbed_parameter() {
        let good = BesselParams::new(2.0, 2.0, 6.0).unwrap();
        let series = bessel_u_series(&good, 50);
        let perturbed = BesselParams::new(2.0, 2.0, 6.0 + 1e-3).unwrap();
        assert!(ode_residual_bessel_for(&series, &perturbed) > 1e-5);
    }
}
