//! Hypothesis checkers, closed-form parameter thresholds and brute-force
//! threshold solvers for the subordination criteria.
//!
//! Three groups of results are covered.
//!
//! **Admissibility.** A function `p` annihilated by
//! `C z^2 p'' + D(z) z p' + E(z) p` lands in the sector `|arg w| < alpha*pi/2`
//! whenever `|Im E(z)| < n alpha (Re D(z) - C)` on the disc.
//! [`admissibility_margin`] measures the worst slack of that inequality on a
//! polar grid; [`kummer_alpha_min`] / [`bessel_alpha_min`] give the sharp
//! sector orders for the two special functions, and the `discriminant_check_*`
//! functions evaluate the quadratic-discriminant route to the same condition.
//!
//! **Cardioid premises.** For `p(0) = 1`, subordination of
//! `1 + beta z p'/p^k` (k = 1, 2) or `p + beta z p'/p^k` (k = 0, 2) to the
//! cardioid implies a sector or half-plane conclusion for `p` once `beta`
//! clears a threshold. The containment condition is that the boundary curve
//! of the comparison map stays outside the closed cardioid image, expressed
//! through [`boundary_exclusion`]; each family also has a reduced profile
//! `f(x)` in `x = sin t`, `cos(t/2)` or `sin(t/2)` whose nonnegativity on the
//! unit interval is equivalent (up to a positive factor) to the boundary
//! condition. Brute-force thresholds bisect on the boundary predicate and are
//! reported next to the closed forms.
//!
//! **Sector retention.** Subordination of `p + beta z p'/p^k` (k = 0, 1, 2)
//! to the sector extremal already forces `p` into the same sector for the
//! parameter ranges checked by [`sector_retention_check`].

use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::regions::Region;
use crate::special::{BesselParams, KummerParams};
use crate::subordination::{
    apply_transform, check_subordination, AnalyticMap, SubordinationReport, TransformSpec,
};

/// Polar evaluation grid for disc-wide hypothesis checks.
#[derive(Debug, Clone)]
pub struct DiscGrid {
    pub radii: Vec<f64>,
    pub angles: usize,
}

impl Default for DiscGrid {
    /// 16 rungs from 0.1 to 0.999, 512 angles: ample for the degree <= 4
    /// polynomials that appear in the applications.
    fn default() -> Self {
        let radii = (0..16)
            .map(|i| 0.1 + (0.999 - 0.1) * i as f64 / 15.0)
            .collect();
        DiscGrid { radii, angles: 512 }
    }
}

impl DiscGrid {
    pub fn new(radii: Vec<f64>, angles: usize) -> Self {
        DiscGrid { radii, angles }
    }

    pub fn points(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.radii.iter().flat_map(move |&r| {
            (0..self.angles)
                .map(move |j| Complex64::from_polar(r, 2.0 * PI * j as f64 / self.angles as f64))
        })
    }
}

/// The data `(C, D(z), E(z), n, alpha)` of the admissibility condition.
#[derive(Debug, Clone)]
pub struct AdmissibleTriple {
    pub c_const: f64,
    pub d: Polynomial,
    pub e: Polynomial,
    pub n: u32,
    pub alpha: f64,
}

impl AdmissibleTriple {
    pub fn new(c_const: f64, d: Polynomial, e: Polynomial, n: u32, alpha: f64) -> Result<Self> {
        if c_const < 0.0 {
            return Err(Error::BadInput(format!("C = {c_const} must be >= 0")));
        }
        if n < 1 {
            return Err(Error::BadInput("n must be a positive integer".into()));
        }
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::BadInput(format!("alpha {alpha} outside (0, 1]")));
        }
        Ok(AdmissibleTriple {
            c_const,
            d,
            e,
            n,
            alpha,
        })
    }

    /// Kummer's equation in admissibility form: `C = 1`, `D = c - z`,
    /// `E = -a z`.
    pub fn kummer(params: &KummerParams, alpha: f64) -> Result<Self> {
        Self::new(
            1.0,
            Polynomial::from_re(&[params.c, -1.0]),
            Polynomial::from_re(&[0.0, -params.a]),
            1,
            alpha,
        )
    }

    /// The Bessel equation in admissibility form: `C = 4`, `D = 4k`,
    /// `E = c z`.
    pub fn bessel(params: &BesselParams, alpha: f64) -> Result<Self> {
        Self::new(
            4.0,
            Polynomial::from_re(&[4.0 * params.k()]),
            Polynomial::from_re(&[0.0, params.c]),
            1,
            alpha,
        )
    }
}

/// Worst slack of `n alpha (Re D(z) - C) - |Im E(z)|` over the grid;
/// positive means the admissibility hypothesis holds on the sampled disc.
pub fn admissibility_margin(triple: &AdmissibleTriple, grid: &DiscGrid) -> f64 {
    let na = triple.n as f64 * triple.alpha;
    let mut min = f64::INFINITY;
    for z in grid.points() {
        let slack = na * (triple.d.eval(z).re - triple.c_const) - triple.e.eval(z).im.abs();
        if slack < min {
            min = slack;
        }
    }
    min
}

/// Infimum of sector orders admissible for `Phi(a, c; .)`:
/// `|a| / sqrt((c-1)^2 - 1)`, defined when `(c-1)^2 > 1`.
pub fn kummer_alpha_min(a: f64, c: f64) -> Result<f64> {
    let cm = (c - 1.0) * (c - 1.0);
    if cm <= 1.0 {
        return Err(Error::NotApplicable {
            reason: "(c-1)^2 <= 1: no admissible alpha",
        });
    }
    Ok(a.abs() / (cm - 1.0).sqrt())
}

/// Infimum of sector orders admissible for `u_p`: `|c| / (4(k-1))`, defined
/// when `k > 1`.
pub fn bessel_alpha_min(p: f64, b: f64, c: f64) -> Result<f64> {
    let k = p + (b + 1.0) / 2.0;
    if k <= 1.0 {
        return Err(Error::NotApplicable {
            reason: "k <= 1: no admissible alpha",
        });
    }
    Ok(c.abs() / (4.0 * (k - 1.0)))
}

/// Discriminant route to the Kummer sector condition: with
/// `p = -(a^2 + alpha^2)`, `q = 2 alpha^2 (c-1)`, `r = a^2 - (c-1)^2 alpha^2`
/// the hypothesis holds iff `q^2 - 4 p r < 0`.
///
/// At `a = 0` the discriminant degenerates to zero (the parabola
/// `-alpha^2 (x - (c-1))^2` touches zero at `x = c-1`), so the check falls
/// back to requiring that vertex outside the open interval: `(c-1)^2 > 1`.
pub fn discriminant_check_kummer(a: f64, c: f64, alpha: f64) -> bool {
    if a == 0.0 {
        return (c - 1.0) * (c - 1.0) > 1.0;
    }
    let p = -(a * a + alpha * alpha);
    let q = 2.0 * alpha * alpha * (c - 1.0);
    let r = a * a - (c - 1.0) * (c - 1.0) * alpha * alpha;
    q * q - 4.0 * p * r < 0.0
}

/// Discriminant route to the Bessel sector condition: with `P = -c^2`,
/// `Q = 0`, `R = c^2 - 16 (k-1)^2 alpha^2` the hypothesis holds iff
/// `Q^2 - 4 P R < 0`; at `c = 0` the quadratic collapses to the constant `R`
/// and the check is `R < 0`.
pub fn discriminant_check_bessel(p: f64, b: f64, c: f64, alpha: f64) -> bool {
    let k = p + (b + 1.0) / 2.0;
    let r_const = c * c - 16.0 * (k - 1.0) * (k - 1.0) * alpha * alpha;
    if c == 0.0 {
        return r_const < 0.0;
    }
    let p_coef = -c * c;
    -4.0 * p_coef * r_const < 0.0
}

/// Worst slack of `alpha - |Im(1 + z f''/f' - z f'/f)|` over the grid;
/// positive places `f` in the strongly starlike class of order `alpha`.
pub fn starlike_imag_margin(f: &AnalyticMap, alpha: f64, grid: &DiscGrid) -> Result<f64> {
    let mut min = f64::INFINITY;
    for z in grid.points() {
        let fz = f.eval(z)?;
        let df = f.deriv_eval(z)?;
        let ddf = f.second_deriv_eval(z)?;
        if df.norm() < 1e-12 {
            return Err(Error::ZeroDerivative { z });
        }
        if fz.norm() < 1e-12 {
            return Err(Error::ZeroDenominator { context: "f", z });
        }
        let expr = Complex64::new(1.0, 0.0) + z * ddf / df - z * df / fz;
        let slack = alpha - expr.im.abs();
        if slack < min {
            min = slack;
        }
    }
    Ok(min)
}

/// Product form of the imaginary-part criterion: the worst slack of
/// `alpha - |Im(1 + (z f'' g + 2 z f' g' + z g'' f)/(f' g + g' f)
/// - (z f'/f + z g'/g))|`; positive places `f g` in the strongly starlike
/// class of order `alpha`. Reduces to [`starlike_imag_margin`] for `g = 1`.
pub fn product_imag_margin(
    f: &AnalyticMap,
    g: &AnalyticMap,
    alpha: f64,
    grid: &DiscGrid,
) -> Result<f64> {
    let mut min = f64::INFINITY;
    for z in grid.points() {
        let fz = f.eval(z)?;
        let gz = g.eval(z)?;
        let df = f.deriv_eval(z)?;
        let dg = g.deriv_eval(z)?;
        let ddf = f.second_deriv_eval(z)?;
        let ddg = g.second_deriv_eval(z)?;
        let den = df * gz + dg * fz;
        if den.norm() < 1e-12 {
            return Err(Error::ZeroDenominator {
                context: "(fg)'",
                z,
            });
        }
        if fz.norm() < 1e-12 {
            return Err(Error::ZeroDenominator { context: "f", z });
        }
        if gz.norm() < 1e-12 {
            return Err(Error::ZeroDenominator { context: "g", z });
        }
        let num = z * (ddf * gz + df * dg * 2.0 + ddg * fz);
        let expr = Complex64::new(1.0, 0.0) + num / den - (z * df / fz + z * dg / gz);
        let slack = alpha - expr.im.abs();
        if slack < min {
            min = slack;
        }
    }
    Ok(min)
}

/// Cardioid-premise family: which transform of `p` is compared against the
/// cardioid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundaryFamily {
    /// `1 + beta z p'/p`
    OnePlusK1,
    /// `1 + beta z p'/p^2`
    OnePlusK2,
    /// `p + beta z p'`
    PPlusK0,
    /// `p + beta z p'/p^2`
    PPlusK2,
}

/// `(u^2 + v^2 - 8u)^2 - 64 (u^2 + v^2)`: nonnegative exactly when
/// `|sqrt(w) - 2| >= 2`, i.e. when `w` lies outside the open set whose
/// square root stays within distance 2 of 2.
fn sqrt_ring_form(u: f64, v: f64) -> f64 {
    let s = u * u + v * v;
    let a = s - 8.0 * u;
    a * a - 64.0 * s
}

/// Boundary-exclusion value of the family's comparison curve at parameter
/// `t`: nonnegative for all admissible `t` means the curve stays outside the
/// closed cardioid image, which is the containment the thresholds enforce.
///
/// The curves are conjugate-symmetric, so the value depends on `|t|` only.
pub fn boundary_exclusion(family: BoundaryFamily, alpha: f64, beta: f64, t: f64) -> Result<f64> {
    let ta = t.abs();
    if ta > PI {
        return Err(Error::Domain(format!("t = {t} outside [-pi, pi]")));
    }
    let sin_t = ta.sin();
    let half_sin = (ta / 2.0).sin();
    let half_cos = (ta / 2.0).cos();
    let (u, v) = match family {
        BoundaryFamily::OnePlusK1 => {
            if sin_t.abs() < 1e-9 {
                return Err(Error::SingularParameter { t });
            }
            (4.0, 6.0 * alpha * beta / sin_t)
        }
        BoundaryFamily::OnePlusK2 => {
            if sin_t.abs() < 1e-9 {
                return Err(Error::SingularParameter { t });
            }
            let s = 6.0 * alpha * beta * half_sin.powf(alpha) / (sin_t * half_cos.powf(alpha));
            (
                4.0 + s * (alpha * FRAC_PI_2).sin(),
                s * (alpha * FRAC_PI_2).cos(),
            )
        }
        BoundaryFamily::PPlusK0 => {
            if half_sin.abs() < 1e-9 {
                return Err(Error::SingularParameter { t });
            }
            (
                -2.0 - 3.0 * beta / (half_sin * half_sin),
                6.0 * half_cos / half_sin,
            )
        }
        BoundaryFamily::PPlusK2 => {
            if half_cos.abs() < 1e-9 || half_sin.abs() < 1e-9 {
                return Err(Error::SingularParameter { t });
            }
            (
                -2.0 + 3.0 * beta / (half_cos * half_cos),
                6.0 * half_cos / half_sin,
            )
        }
    };
    Ok(sqrt_ring_form(u, v))
}

/// Reduced profile of the `1 + beta z p'/p` premise in `x = sin t`:
/// `-16 x^4 - 72 alpha^2 beta^2 x^2 + 27 alpha^4 beta^4`. The boundary
/// exclusion equals `48/x^4` times this, so nonnegativity on `[0, 1]` is the
/// containment condition; the profile is decreasing, making `x = 1` decisive.
pub fn one_plus_k1_profile(x: f64, alpha: f64, beta: f64) -> f64 {
    let ab = alpha * alpha * beta * beta;
    -16.0 * x.powi(4) - 72.0 * ab * x * x + 27.0 * ab * ab
}

/// Uniform parameter grid on `(-pi, pi)` avoiding the parametrization
/// singularities by a guard band (midpoint placement keeps every point at
/// least half a step away from `0` and `+-pi`).
pub fn boundary_parameter_grid(n: usize) -> Vec<f64> {
    let n = n.max(16);
    (0..n)
        .map(|j| -PI + 2.0 * PI * (j as f64 + 0.5) / n as f64)
        .filter(|t| t.abs() > 1e-6 && (t.abs() - PI).abs() > 1e-6)
        .collect()
}

fn bisect(mut lo: f64, mut hi: f64, pred: impl Fn(f64) -> bool, iters: usize) -> f64 {
    for _ in 0..iters {
        let mid = 0.5 * (lo + hi);
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Closed threshold next to its brute-force confirmation.
#[derive(Debug, Clone, Serialize)]
pub struct ThresholdResult {
    /// Closed-form value, when the family has one.
    pub analytic: Option<f64>,
    /// Bisection root of the boundary predicate.
    pub brute: f64,
    /// `|analytic - brute|`, when both exist.
    pub gap: Option<f64>,
    /// Optional dump of the boundary predicate at the brute threshold.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicate_trace: Option<Vec<[f64; 2]>>,
}

/// Smallest `|beta|` for which `1 + beta z p'/p` subordinate to the cardioid
/// forces `p` into the sector of order `alpha`.
///
/// The closed form is `sqrt((4 sqrt 3 + 8)/(3 sqrt 3)) / alpha`; the brute
/// value bisects on "boundary exclusion holds at every grid parameter" with
/// the given grid size and 60 bisection steps.
pub fn min_beta_one_plus_k1(alpha: f64, grid_size: usize) -> Result<ThresholdResult> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::Domain(format!("alpha {alpha} outside (0, 1]")));
    }
    let s3 = 3.0f64.sqrt();
    let analytic = ((4.0 * s3 + 8.0) / (3.0 * s3)).sqrt() / alpha;

    let grid = boundary_parameter_grid(grid_size);
    let excluded_everywhere = |beta: f64| {
        grid.iter().all(|&t| {
            boundary_exclusion(BoundaryFamily::OnePlusK1, alpha, beta, t)
                .map(|q| q >= 0.0)
                .unwrap_or(true)
        })
    };
    let mut hi = 1.0;
    while !excluded_everywhere(hi) {
        hi *= 2.0;
        if hi > 1e6 {
            return Err(Error::Domain("bracket expansion failed".into()));
        }
    }
    let brute = bisect(0.0, hi, excluded_everywhere, 60);
    Ok(ThresholdResult {
        analytic: Some(analytic),
        brute,
        gap: Some((analytic - brute).abs()),
        predicate_trace: None,
    })
}

/// Predicate dump for a family at fixed parameters (used by the CLI trace
/// option).
pub fn boundary_trace(
    family: BoundaryFamily,
    alpha: f64,
    beta: f64,
    grid_size: usize,
) -> Vec<[f64; 2]> {
    boundary_parameter_grid(grid_size)
        .into_iter()
        .filter_map(|t| {
            boundary_exclusion(family, alpha, beta, t)
                .ok()
                .map(|q| [t, q])
        })
        .collect()
}

/// Profile of the `1 + beta z p'/p^2` premise in `x = cos(t/2)` on (0, 1)
/// (the boundary exclusion equals 48 times this):
///
/// ```text
/// f(x) = -16 + (alpha beta)/(2x sqrt(1-x^2)) (sqrt(1-x^2)/x)^alpha (
///            -64 sin(alpha pi/2)
///            + (9 alpha beta)/(2x sqrt(1-x^2)) (sqrt(1-x^2)/x)^alpha (
///                -8 + (3 alpha^2 beta^2)/(4x^2(1-x^2)) ((1-x^2)/x^2)^alpha))
/// ```
pub fn one_plus_k2_profile(x: f64, alpha: f64, beta: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain(format!("x = {x} outside (0, 1)")));
    }
    let s = (1.0 - x * x).sqrt();
    let ratio_a = (s / x).powf(alpha);
    let outer = alpha * beta / (2.0 * x * s) * ratio_a;
    let inner = -8.0
        + 3.0 * alpha * alpha * beta * beta / (4.0 * x * x * (1.0 - x * x))
            * ((1.0 - x * x) / (x * x)).powf(alpha);
    Ok(-16.0
        + outer
            * (-64.0 * (alpha * FRAC_PI_2).sin()
                + 9.0 * alpha * beta / (2.0 * x * s) * ratio_a * inner))
}

/// The `alpha = 1` reduction of [`one_plus_k2_profile`]:
/// `(4x^2 + 3 beta)^3 (beta - 4x^2) / (16 x^8)`, nonnegative on (0, 1]
/// exactly when `beta >= 4` or `beta <= -4/3`.
pub fn one_plus_k2_halfplane_profile(x: f64, beta: f64) -> Result<f64> {
    if x == 0.0 {
        return Err(Error::Domain("x = 0".into()));
    }
    let q = 4.0 * x * x;
    Ok((q + 3.0 * beta).powi(3) * (beta - q) / (16.0 * x.powi(8)))
}

/// Value of [`one_plus_k2_profile`] at its interior minimum
/// `x = sqrt((1+alpha)/2)` (valid for `beta > 0`, `0 < alpha < 1`), in the
/// closed form with `T = (1-alpha)/(1+alpha)`:
///
/// ```text
/// -16 + 9 alpha^2 beta^2 T^alpha (1-alpha^2)^-2 (-8 + alpha^2 (8 + 3 beta^2 T^alpha))
///     - 64 alpha beta (1-alpha^2)^-1/2 (sqrt T)^alpha sin(alpha pi/2)
/// ```
pub fn one_plus_k2_profile_min(alpha: f64, beta: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::Domain(format!(
            "alpha = {alpha}: closed form needs 0 < alpha < 1 (the (1-alpha^2)^-2 factor is singular at 1)"
        )));
    }
    let t_ratio = (1.0 - alpha) / (1.0 + alpha);
    let ta = t_ratio.powf(alpha);
    let one_m = 1.0 - alpha * alpha;
    let first = 9.0 * alpha * alpha * beta * beta * ta / (one_m * one_m)
        * (-8.0 + alpha * alpha * (8.0 + 3.0 * beta * beta * ta));
    let second =
        64.0 * alpha * beta / one_m.sqrt() * t_ratio.sqrt().powf(alpha) * (alpha * FRAC_PI_2).sin();
    Ok(-16.0 + first - second)
}

/// Outcome of the `1 + beta z p'/p^2` premise check. `None` marks a branch
/// whose side conditions do not apply to the queried parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OnePlusK2Outcome {
    /// Half-plane conclusion (`alpha = 1` branch): profile nonnegative on
    /// (0, 1], i.e. `beta >= 4` or `beta <= -4/3`.
    pub holds_halfplane: Option<bool>,
    /// Sector conclusion (`0 < alpha < 1`, `beta > 0` branch): profile
    /// minimum nonnegative.
    pub holds_sector: Option<bool>,
}

/// Check both branches of the `1 + beta z p'/p^2` premise at the given
/// parameters (1000-point profile grid for the half-plane branch).
pub fn check_one_plus_k2(alpha: f64, beta: f64) -> Result<OnePlusK2Outcome> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::Domain(format!("alpha {alpha} outside (0, 1]")));
    }
    let holds_halfplane = if alpha == 1.0 {
        let ok = (1..=1000).all(|i| {
            let x = i as f64 / 1000.0;
            one_plus_k2_halfplane_profile(x, beta)
                .map(|f| f >= -1e-9)
                .unwrap_or(false)
        });
        Some(ok)
    } else {
        None
    };
    let holds_sector = if alpha < 1.0 && beta > 0.0 {
        Some(one_plus_k2_profile_min(alpha, beta)? >= 0.0)
    } else {
        None
    };
    Ok(OnePlusK2Outcome {
        holds_halfplane,
        holds_sector,
    })
}

/// Numeric-only threshold for the sector branch of the `1 + beta z p'/p^2`
/// premise: the bisection root in `beta > 0` of "profile minimum = 0".
/// There is no closed form for this family.
pub fn min_beta_one_plus_k2(alpha: f64) -> Result<ThresholdResult> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::Domain(format!("alpha {alpha} outside (0, 1)")));
    }
    let pred = |beta: f64| {
        one_plus_k2_profile_min(alpha, beta)
            .map(|f| f >= 0.0)
            .unwrap_or(false)
    };
    let mut hi = 1.0;
    while !pred(hi) {
        hi *= 2.0;
        if hi > 1e9 {
            return Err(Error::Domain("bracket expansion failed".into()));
        }
    }
    let brute = bisect(0.0, hi, pred, 60);
    Ok(ThresholdResult {
        analytic: None,
        brute,
        gap: None,
        predicate_trace: None,
    })
}

/// Profile of the `p + beta z p'` premise in `x = sin(t/2)` on (0, 1]
/// (equal to the boundary exclusion, factor 1):
///
/// ```text
/// f(x) = 3/x^8 (27 b^4 + 216 b^2 (1+b) x^2 + 144 (3 + b(6+b)) x^4
///               + 128 (-9 - 5b + 6x^2) x^6)
/// ```
pub fn p_plus_k0_profile(x: f64, beta: f64) -> Result<f64> {
    if x == 0.0 {
        return Err(Error::Domain("x = 0".into()));
    }
    let b = beta;
    let x2 = x * x;
    let poly = 27.0 * b.powi(4)
        + 216.0 * b * b * (1.0 + b) * x2
        + 144.0 * (3.0 + b * (6.0 + b)) * x2 * x2
        + 128.0 * (-9.0 - 5.0 * b + 6.0 * x2) * x2 * x2 * x2;
    Ok(3.0 / x.powi(8) * poly)
}

/// `|f(1) - 3 (6+beta)(2+3 beta)^3|` for the `p + beta z p'` profile — the
/// factored endpoint value from which positivity for `beta >= 0` is read off.
pub fn p_plus_k0_endpoint_identity(beta: f64) -> f64 {
    let f1 = p_plus_k0_profile(1.0, beta).expect("x = 1 is in the domain");
    (f1 - 3.0 * (6.0 + beta) * (2.0 + 3.0 * beta).powi(3)).abs()
}

/// Profile of the `p + beta z p'/p^2` premise in `x = cos(t/2)` on (0, 1)
/// (the boundary exclusion equals 3 times this):
///
/// ```text
/// f(x) = (27 b^4 (1-x^2)^2 - 216 b^3 (1-x^2)^2 x^2 + 72 b^2 g(x) x^4
///         - 32 b (1-x^2)(20x^2+7) x^6 + 48 (1-4x^2)^2 x^8) / (x^8 (1-x^2)^2)
/// ```
///
/// with `g(x) = 2x^4 - 7x^2 + 5`; every term is nonnegative for `beta < 0`.
pub fn p_plus_k2_profile(x: f64, beta: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain(format!("x = {x} outside (0, 1)")));
    }
    let b = beta;
    let x2 = x * x;
    let m = 1.0 - x2;
    let poly = 27.0 * b.powi(4) * m * m - 216.0 * b.powi(3) * m * m * x2
        + 72.0 * b * b * p_plus_k2_gpoly(x) * x2 * x2
        - 32.0 * b * m * (20.0 * x2 + 7.0) * x2 * x2 * x2
        + 48.0 * (1.0 - 4.0 * x2) * (1.0 - 4.0 * x2) * x2 * x2 * x2 * x2;
    Ok(poly / (x.powi(8) * m * m))
}

/// `g(x) = 2x^4 - 7x^2 + 5`, nonnegative on [0, 1] with `g(1) = 0`.
pub fn p_plus_k2_gpoly(x: f64) -> f64 {
    2.0 * x.powi(4) - 7.0 * x * x + 5.0
}

/// Paired premise/conclusion evidence for sector retention.
#[derive(Debug, Clone, Serialize)]
pub struct RetentionReport {
    /// Whether the queried `(alpha, beta, k)` is covered by a retention
    /// guarantee; when false the reports are still computed but carry no
    /// guarantee.
    pub theorem_applies: bool,
    /// Evidence for `p + beta z p'/p^k` subordinate to the sector.
    pub premise: SubordinationReport,
    /// Evidence for `p` subordinate to the sector.
    pub conclusion: SubordinationReport,
    /// Premise positive implies conclusion positive (on the sampled ladder).
    pub implication_holds: bool,
}

/// Parameter ranges with a retention guarantee: `beta > 0` for k = 0, 1;
/// for k = 2 either `0 < alpha < 1/2, beta > 0` or `1/2 < alpha <= 1,
/// beta < 0`.
pub fn retention_parameters_covered(alpha: f64, beta: f64, k: u8) -> bool {
    match k {
        0 | 1 => beta > 0.0,
        2 => (alpha < 0.5 && beta > 0.0) || (alpha > 0.5 && beta < 0.0),
        _ => false,
    }
}

/// Check the sector-retention implication for `p`: compares
/// `p + beta z p'/p^k` and `p` against the sector of order `alpha` on the
/// same ladder.
pub fn sector_retention_check(
    p: &AnalyticMap,
    alpha: f64,
    beta: f64,
    k: u8,
    radii: &[f64],
    m: usize,
) -> Result<RetentionReport> {
    let sector = Region::sector(alpha)?;
    let transformed = apply_transform(p, TransformSpec::PPlusBeta { k, beta })?;
    let premise = check_subordination(&transformed, &sector, radii, m)?;
    let conclusion = check_subordination(p, &sector, radii, m)?;
    let implication_holds = premise.min_margin <= 0.0 || conclusion.min_margin > 0.0;
    Ok(RetentionReport {
        theorem_applies: retention_parameters_covered(alpha, beta, k),
        premise,
        conclusion,
        implication_holds,
    })
}
