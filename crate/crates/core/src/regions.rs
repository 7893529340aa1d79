//! Target regions with signed membership margins and boundary curves.
//!
//! Three targets appear in the criteria:
//!
//! * the right half-plane `Re w > 0`,
//! * the sector `|arg w| < alpha*pi/2` (image of the disc under
//!   `((1+z)/(1-z))^alpha`),
//! * the cardioid region, the image of the disc under
//!   `phi_car(z) = 1 + 4z/3 + 2z^2/3`.
//!
//! Every margin is a signed quantity: positive inside, zero on the boundary,
//! negative outside. Sector margins are in radians, cardioid and half-plane
//! margins in absolute units; margins are never compared across kinds.
//!
//! The cardioid has two equivalent characterizations: the square-root form
//! `|-2 + sqrt(6w - 2)| < 2` (with the principal branch) and an implicit
//! quartic in (u, v). The quartic does not come with a stated interior sign;
//! the test suite pins interior <=> negative by checking it against the
//! square-root form, which is the characterization every criterion here uses.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

/// The cardioid generating map `1 + 4z/3 + 2z^2/3`.
pub fn phi_car(z: Complex64) -> Complex64 {
    Complex64::new(1.0, 0.0) + z * (4.0 / 3.0) + z * z * (2.0 / 3.0)
}

/// Signed sector margin `alpha*pi/2 - |arg w|` (radians, positive inside).
pub fn sector_margin(w: Complex64, alpha: f64) -> Result<f64> {
    if w.norm() < 1e-300 {
        return Err(Error::OriginPoint);
    }
    Ok(alpha * FRAC_PI_2 - w.arg().abs())
}

/// Signed cardioid margin `2 - |-2 + sqrt(6w - 2)|` with the principal
/// square root (positive inside).
///
/// On the cardioid itself, `6w - 2 = 4(1+z)^2` for `w = phi_car(z)`, so the
/// margin of a boundary point `phi_car(e^{it})` is exactly `2 - 2 = 0`.
pub fn car_margin(w: Complex64) -> f64 {
    let s = (w * 6.0 - Complex64::new(2.0, 0.0)).sqrt();
    2.0 - (s - Complex64::new(2.0, 0.0)).norm()
}

/// The implicit quartic `(9u^2+9v^2-18u+5)^2 - 16(9u^2+9v^2-6u+1)` whose zero
/// set is the cardioid boundary. Used only as a cross-check on
/// [`car_margin`]; interior points give negative values (pinned by tests).
pub fn car_quartic(w: Complex64) -> f64 {
    let (u, v) = (w.re, w.im);
    let s = 9.0 * u * u + 9.0 * v * v;
    let a = s - 18.0 * u + 5.0;
    let b = s - 6.0 * u + 1.0;
    a * a - 16.0 * b
}

/// A target region in the w-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Region {
    /// Right half-plane `Re w > 0`; margin is `Re w`.
    HalfPlane,
    /// `|arg w| < alpha*pi/2` with `alpha` in (0, 1].
    Sector { alpha: f64 },
    /// Interior of the cardioid, margin via [`car_margin`].
    CardioidCar,
}

impl Region {
    pub fn sector(alpha: f64) -> Result<Region> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::BadInput(format!(
                "sector alpha {alpha} outside (0, 1]"
            )));
        }
        Ok(Region::Sector { alpha })
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Region::HalfPlane => "half-plane",
            Region::Sector { .. } => "sector",
            Region::CardioidCar => "cardioid",
        }
    }

    /// Signed membership margin of `w` (positive inside).
    pub fn margin(&self, w: Complex64) -> Result<f64> {
        match self {
            Region::HalfPlane => Ok(w.re),
            Region::Sector { alpha } => sector_margin(w, *alpha),
            Region::CardioidCar => Ok(car_margin(w)),
        }
    }

    /// Boundary curve samples `(t, w(t))`.
    ///
    /// * cardioid: `w = phi_car(e^{it})`, `t` uniform on `[-pi, pi]`;
    /// * sector: the two rays `r e^{+-i alpha pi/2}` with `r` on a log grid
    ///   spanning `10^-2 .. 10^2` (half the samples per ray, `t = +-r`);
    /// * half-plane: the imaginary axis `w = is`, `s` uniform on `[-10, 10]`.
    pub fn boundary(&self, samples: usize) -> Vec<(f64, Complex64)> {
        let n = samples.max(2);
        match self {
            Region::CardioidCar => (0..n)
                .map(|j| {
                    let t = -PI + 2.0 * PI * j as f64 / (n - 1) as f64;
                    (t, phi_car(Complex64::from_polar(1.0, t)))
                })
                .collect(),
            Region::Sector { alpha } => {
                let per_ray = (n / 2).max(2);
                let mut pts = Vec::with_capacity(2 * per_ray);
                for j in (0..per_ray).rev() {
                    let r = 10f64.powf(-2.0 + 4.0 * j as f64 / (per_ray - 1) as f64);
                    pts.push((-r, Complex64::from_polar(r, -alpha * FRAC_PI_2)));
                }
                for j in 0..per_ray {
                    let r = 10f64.powf(-2.0 + 4.0 * j as f64 / (per_ray - 1) as f64);
                    pts.push((r, Complex64::from_polar(r, alpha * FRAC_PI_2)));
                }
                pts
            }
            Region::HalfPlane => (0..n)
                .map(|j| {
                    let s = -10.0 + 20.0 * j as f64 / (n - 1) as f64;
                    (s, Complex64::new(0.0, s))
                })
                .collect(),
        }
    }
}
