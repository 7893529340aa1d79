//! Analytic maps on the unit disc, the composite transforms built from them,
//! and the sampling procedure that tests subordination to a target region.
//!
//! `check_subordination` is an evidence procedure, not a proof: it sweeps
//! circles `|z| = r` on a radii ladder, evaluates the map at `m` equispaced
//! points per circle and reports the minimum signed target margin together
//! with the witness point. A positive minimum on the ladder (default
//! `r in {0.9, 0.99, 0.999}`, `m = 2048`) is accepted as evidence for the
//! subordination; a negative minimum is a concrete counterexample point.
//!
//! Maps carry their representation: truncated series, exact rational,
//! sector extremal `((1+z)/(1-z))^alpha`, or the special functions. Closed
//! forms are preferred wherever available because a truncated series loses
//! accuracy near `r = 0.999`; series-backed reports carry a tail bound and
//! are flagged inconclusive when the bound is not far below the margin.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};
use crate::regions::Region;
use crate::series::{PowerSeries, DEFAULT_ORDER, ZERO_CONST_EPS};
use crate::special::{
    bessel_u_eval, bessel_u_series, kummer_eval, kummer_series, BesselParams, KummerParams,
};

/// Composite transforms of a base function.
///
/// The first three act on a normalized function `f` (class A); the last two
/// act on a function `p` with `p(0) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum TransformSpec {
    /// `z f'(z) / f(z)`
    ZFprimeOverF,
    /// `f'(z)`
    Fprime,
    /// `z^2 f'(z) / f(z)^2`
    Z2FprimeOverF2,
    /// `1 + beta z p'(z) / p(z)^k`, k in {1, 2}
    OnePlusBeta { k: u8, beta: f64 },
    /// `p(z) + beta z p'(z) / p(z)^k`, k in {0, 1, 2}
    PPlusBeta { k: u8, beta: f64 },
}

impl TransformSpec {
    fn validate(&self) -> Result<()> {
        match *self {
            TransformSpec::OnePlusBeta { k, beta } => {
                if !(k == 1 || k == 2) {
                    return Err(Error::BadInput(format!("OnePlusBeta k={k} not in {{1,2}}")));
                }
                if !beta.is_finite() {
                    return Err(Error::BadInput("beta must be finite".into()));
                }
            }
            TransformSpec::PPlusBeta { k, beta } => {
                if k > 2 {
                    return Err(Error::BadInput(format!("PPlusBeta k={k} not in {{0,1,2}}")));
                }
                if !beta.is_finite() {
                    return Err(Error::BadInput("beta must be finite".into()));
                }
            }
            _ => {}
        }
        Ok(())
    }
}

/// A function on the unit disc in one of several representations.
#[derive(Debug, Clone, PartialEq)]
pub enum AnalyticMap {
    /// Truncated Taylor series (the only representation with truncation
    /// error; reports based on it carry a tail bound).
    Series(PowerSeries),
    /// Exact rational map.
    Rational(Rational),
    /// The sector extremal `((1+z)/(1-z))^alpha` (principal branch).
    SectorPower { alpha: f64 },
    /// Kummer's function of the given parameters.
    Kummer(KummerParams),
    /// Generalized normalized Bessel function of the given parameters.
    Bessel(BesselParams),
    /// A transform applied pointwise on top of a closed-form base.
    Transformed {
        base: Box<AnalyticMap>,
        spec: TransformSpec,
    },
}

impl AnalyticMap {
    pub fn rational(num: Polynomial, den: Polynomial) -> Self {
        AnalyticMap::Rational(Rational::new(num, den))
    }

    pub fn polynomial(p: Polynomial) -> Self {
        AnalyticMap::Rational(Rational::from_polynomial(p))
    }

    /// Value at a point.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        match self {
            AnalyticMap::Series(s) => Ok(s.eval(z)),
            AnalyticMap::Rational(r) => r.eval(z),
            AnalyticMap::SectorPower { alpha } => {
                let den = Complex64::new(1.0, 0.0) - z;
                if den.norm() < 1e-300 {
                    return Err(Error::EvaluationFailure {
                        z,
                        what: "pole of (1+z)/(1-z)",
                    });
                }
                Ok(((Complex64::new(1.0, 0.0) + z) / den).powf(*alpha))
            }
            AnalyticMap::Kummer(p) => Ok(kummer_eval(p, z).value),
            AnalyticMap::Bessel(p) => Ok(bessel_u_eval(p, z).value),
            AnalyticMap::Transformed { base, spec } => {
                if z.norm() == 0.0 {
                    // removable point: take the constant term of the local expansion
                    return Ok(self.to_series(8)?.coeff(0));
                }
                let p = base.eval(z)?;
                let dp = base.deriv_eval(z)?;
                combine_pointwise(*spec, z, p, dp)
            }
        }
    }

    /// Derivative value at a point. Exact for every representation except
    /// `Transformed`, which falls back to its truncated series.
    pub fn deriv_eval(&self, z: Complex64) -> Result<Complex64> {
        match self {
            AnalyticMap::Series(s) => Ok(s.derivative().eval(z)),
            AnalyticMap::Rational(r) => r.derivative().eval(z),
            AnalyticMap::SectorPower { alpha } => {
                let one = Complex64::new(1.0, 0.0);
                let den = one - z * z;
                if den.norm() < 1e-300 {
                    return Err(Error::EvaluationFailure {
                        z,
                        what: "pole of 1/(1-z^2)",
                    });
                }
                Ok(self.eval(z)? * (2.0 * alpha) / den)
            }
            AnalyticMap::Kummer(p) => {
                // c Phi'(a, c; z) = a Phi(a+1, c+1; z)
                let raised = KummerParams::new(p.a + 1.0, p.c + 1.0).expect("c+1 cannot be a pole");
                Ok(kummer_eval(&raised, z).value * (p.a / p.c))
            }
            AnalyticMap::Bessel(p) => {
                // 4 k u_p'(z) = -c u_{p+1}(z)
                Ok(bessel_u_eval(&p.raise_order(), z).value * (-p.c / (4.0 * p.k())))
            }
            AnalyticMap::Transformed { .. } => {
                Ok(self.to_series(DEFAULT_ORDER)?.derivative().eval(z))
            }
        }
    }

    /// Second derivative at a point (same exactness caveats as
    /// [`AnalyticMap::deriv_eval`]).
    pub fn second_deriv_eval(&self, z: Complex64) -> Result<Complex64> {
        match self {
            AnalyticMap::Series(s) => Ok(s.derivative().derivative().eval(z)),
            AnalyticMap::Rational(r) => r.derivative().derivative().eval(z),
            AnalyticMap::SectorPower { alpha } => {
                let one = Complex64::new(1.0, 0.0);
                let den = one - z * z;
                if den.norm() < 1e-300 {
                    return Err(Error::EvaluationFailure {
                        z,
                        what: "pole of 1/(1-z^2)",
                    });
                }
                // q''/q = (q'/q)' + (q'/q)^2 = 4 alpha (z + alpha) / (1-z^2)^2
                Ok(self.eval(z)? * (4.0 * alpha) * (z + alpha) / (den * den))
            }
            AnalyticMap::Kummer(p) => {
                let r2 = KummerParams::new(p.a + 2.0, p.c + 2.0).expect("c+2 cannot be a pole");
                Ok(kummer_eval(&r2, z).value * (p.a / p.c) * ((p.a + 1.0) / (p.c + 1.0)))
            }
            AnalyticMap::Bessel(p) => {
                let up1 = p.raise_order();
                let factor = (-p.c / (4.0 * p.k())) * (-p.c / (4.0 * up1.k()));
                Ok(bessel_u_eval(&up1.raise_order(), z).value * factor)
            }
            AnalyticMap::Transformed { .. } => Ok(self
                .to_series(DEFAULT_ORDER)?
                .derivative()
                .derivative()
                .eval(z)),
        }
    }

    /// Taylor expansion about 0, truncated at `order` (or at the stored
    /// order for series-backed maps, whichever is smaller).
    pub fn to_series(&self, order: usize) -> Result<PowerSeries> {
        match self {
            AnalyticMap::Series(s) => Ok(s.truncated(order)),
            AnalyticMap::Rational(r) => r.to_series(order),
            AnalyticMap::SectorPower { alpha } => {
                let num = PowerSeries::polynomial_re(&[1.0, 1.0], order);
                let den = PowerSeries::polynomial_re(&[1.0, -1.0], order);
                num.div(&den)?.powf(*alpha)
            }
            AnalyticMap::Kummer(p) => Ok(kummer_series(p, order)),
            AnalyticMap::Bessel(p) => Ok(bessel_u_series(p, order)),
            AnalyticMap::Transformed { base, spec } => {
                series_transform(&base.to_series(order)?, *spec)
            }
        }
    }

    /// The order at which values carry truncation error, or `None` for
    /// representations evaluated in closed form.
    ///
    /// A transform stacked on another transform is series-backed even over a
    /// closed-form base: its derivative route goes through the expansion at
    /// [`DEFAULT_ORDER`].
    pub fn truncation_order(&self) -> Option<usize> {
        match self {
            AnalyticMap::Series(s) => Some(s.order()),
            AnalyticMap::Transformed { base, .. } => match &**base {
                AnalyticMap::Transformed { .. } => {
                    Some(base.truncation_order().unwrap_or(DEFAULT_ORDER).min(DEFAULT_ORDER))
                }
                _ => base.truncation_order(),
            },
            _ => None,
        }
    }

    /// True when values carry truncation error (series-backed
    /// representation).
    pub fn is_series_backed(&self) -> bool {
        self.truncation_order().is_some()
    }
}

fn combine_pointwise(
    spec: TransformSpec,
    z: Complex64,
    p: Complex64,
    dp: Complex64,
) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    match spec {
        TransformSpec::ZFprimeOverF => {
            if p.norm() < 1e-300 {
                return Err(Error::ZeroDenominator { context: "f", z });
            }
            Ok(z * dp / p)
        }
        TransformSpec::Fprime => Ok(dp),
        TransformSpec::Z2FprimeOverF2 => {
            if p.norm() < 1e-300 {
                return Err(Error::ZeroDenominator { context: "f^2", z });
            }
            Ok(z * z * dp / (p * p))
        }
        TransformSpec::OnePlusBeta { k, beta } => {
            let pk = if k == 1 { p } else { p * p };
            if pk.norm() < 1e-300 {
                return Err(Error::ZeroDenominator { context: "p^k", z });
            }
            Ok(one + z * dp * beta / pk)
        }
        TransformSpec::PPlusBeta { k, beta } => {
            let pk = match k {
                0 => one,
                1 => p,
                _ => p * p,
            };
            if pk.norm() < 1e-300 {
                return Err(Error::ZeroDenominator { context: "p^k", z });
            }
            Ok(p + z * dp * beta / pk)
        }
    }
}

/// Series route of [`apply_transform`].
pub fn series_transform(f: &PowerSeries, spec: TransformSpec) -> Result<PowerSeries> {
    spec.validate()?;
    let vanishes = f.coeff(0).norm() <= ZERO_CONST_EPS;
    match spec {
        TransformSpec::ZFprimeOverF => {
            if vanishes {
                // f = z h: z f'/f = 1 + z h'/h
                let h = f.div_z()?;
                let zhp = h.derivative().mul_z();
                Ok(PowerSeries::one(zhp.order().min(h.order())).add(&zhp.div(&h)?))
            } else {
                f.derivative().mul_z().div(f)
            }
        }
        TransformSpec::Fprime => Ok(f.derivative()),
        TransformSpec::Z2FprimeOverF2 => {
            if vanishes {
                // f = z h: z^2 f'/f^2 = (h + z h')/h^2
                let h = f.div_z()?;
                let num = h.add(&h.derivative().mul_z());
                num.div(&h.mul(&h))
            } else {
                f.derivative().mul_z().mul_z().div(&f.mul(f))
            }
        }
        TransformSpec::OnePlusBeta { k, beta } => {
            if vanishes {
                return Err(Error::ZeroConstantTerm {
                    context: "p (OnePlusBeta divisor)",
                    magnitude: f.coeff(0).norm(),
                });
            }
            let num = f.derivative().mul_z().scale(Complex64::new(beta, 0.0));
            let den = if k == 1 { f.clone() } else { f.mul(f) };
            let ratio = num.div(&den)?;
            Ok(PowerSeries::one(ratio.order()).add(&ratio))
        }
        TransformSpec::PPlusBeta { k, beta } => {
            let zdp = f.derivative().mul_z().scale(Complex64::new(beta, 0.0));
            if k == 0 {
                return Ok(f.add(&zdp));
            }
            if vanishes {
                return Err(Error::ZeroConstantTerm {
                    context: "p (PPlusBeta divisor)",
                    magnitude: f.coeff(0).norm(),
                });
            }
            let den = if k == 1 { f.clone() } else { f.mul(f) };
            Ok(f.add(&zdp.div(&den)?))
        }
    }
}

/// Exact rational route of [`apply_transform`]. With `f = n/d` and
/// `w = n'd - n d'` (so `f' = w/d^2`) every transform is again rational.
fn rational_transform(r: &Rational, spec: TransformSpec) -> Result<Rational> {
    spec.validate()?;
    let n = &r.num;
    let d = &r.den;
    let w = n.derivative().mul(d).sub(&n.mul(&d.derivative()));
    let nonzero_p = |context: &'static str| -> Result<()> {
        if n.vanishes_at_zero() {
            return Err(Error::ZeroConstantTerm {
                context,
                magnitude: n.coeffs()[0].norm(),
            });
        }
        Ok(())
    };
    let out = match spec {
        TransformSpec::ZFprimeOverF => Rational::new(w.mul_z(), n.mul(d)),
        TransformSpec::Fprime => Rational::new(w, d.mul(d)),
        TransformSpec::Z2FprimeOverF2 => Rational::new(w.mul_z().mul_z(), n.mul(n)),
        TransformSpec::OnePlusBeta { k, beta } => {
            nonzero_p("p (OnePlusBeta divisor)")?;
            let bzw = w.mul_z().scale(Complex64::new(beta, 0.0));
            if k == 1 {
                let nd = n.mul(d);
                Rational::new(nd.add(&bzw), nd)
            } else {
                let nn = n.mul(n);
                Rational::new(nn.add(&bzw), nn)
            }
        }
        TransformSpec::PPlusBeta { k, beta } => {
            let bzw = w.mul_z().scale(Complex64::new(beta, 0.0));
            match k {
                0 => Rational::new(n.mul(d).add(&bzw), d.mul(d)),
                1 => {
                    nonzero_p("p (PPlusBeta divisor)")?;
                    Rational::new(n.mul(n).add(&bzw), n.mul(d))
                }
                _ => {
                    nonzero_p("p (PPlusBeta divisor)")?;
                    Rational::new(n.mul(n).mul(n).add(&bzw.mul(d)), n.mul(n).mul(d))
                }
            }
        }
    };
    Ok(out)
}

/// Apply a transform to a base map.
///
/// Rational bases stay rational (exact route); series bases go through the
/// series ops at their stored order; the remaining closed forms are wrapped
/// for pointwise evaluation.
pub fn apply_transform(base: &AnalyticMap, spec: TransformSpec) -> Result<AnalyticMap> {
    spec.validate()?;
    match base {
        AnalyticMap::Rational(r) => Ok(AnalyticMap::Rational(rational_transform(r, spec)?)),
        AnalyticMap::Series(s) => Ok(AnalyticMap::Series(series_transform(s, spec)?)),
        other => Ok(AnalyticMap::Transformed {
            base: Box::new(other.clone()),
            spec,
        }),
    }
}

/// Outcome of a subordination check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Positive margin everywhere on the ladder.
    Holds,
    /// A sampled point left the target region.
    Counterexample,
    /// Truncation tail too large relative to the margin.
    Inconclusive,
}

fn ser_c<S: serde::Serializer>(c: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    [c.re, c.im].serialize(s)
}

/// Evidence record of one subordination sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SubordinationReport {
    pub region: &'static str,
    pub min_margin: f64,
    #[serde(serialize_with = "ser_c")]
    pub witness_z: Complex64,
    #[serde(serialize_with = "ser_c")]
    pub witness_w: Complex64,
    pub radii: Vec<f64>,
    pub samples_per_circle: usize,
    /// Minimum margin per ladder rung (same order as `radii`).
    pub per_radius_min: Vec<f64>,
    /// `|c_N| r^N N` for series-backed maps, 0 for closed forms.
    pub tail_bound: f64,
    pub conclusive: bool,
    pub verdict: Verdict,
}

/// Sample the map on the radii ladder and report the minimum target margin.
///
/// Requires strictly increasing radii in (0, 1), at least 64 samples per
/// circle, and `p(0) = 1` (the normalization under which positive margin is
/// evidence for `p` subordinate to the target's extremal function).
pub fn check_subordination(
    p: &AnalyticMap,
    target: &Region,
    radii: &[f64],
    m: usize,
) -> Result<SubordinationReport> {
    if radii.is_empty() || radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadInput("radii must be strictly increasing".into()));
    }
    if !(radii[0] > 0.0 && *radii.last().unwrap() < 1.0) {
        return Err(Error::BadInput("radii must lie in (0, 1)".into()));
    }
    if m < 64 {
        return Err(Error::BadInput(format!("samples per circle {m} < 64")));
    }
    let at_zero = p.eval(Complex64::default())?;
    if (at_zero - Complex64::new(1.0, 0.0)).norm() > 1e-8 {
        return Err(Error::BadInput(format!(
            "map value at 0 is {at_zero}, expected 1"
        )));
    }

    let mut min_margin = f64::INFINITY;
    let mut witness_z = Complex64::default();
    let mut witness_w = Complex64::new(1.0, 0.0);
    let mut per_radius_min = Vec::with_capacity(radii.len());
    for &r in radii {
        let mut circle_min = f64::INFINITY;
        for j in 0..m {
            let t = 2.0 * std::f64::consts::PI * j as f64 / m as f64;
            let z = Complex64::from_polar(r, t);
            let w = p.eval(z)?;
            let margin = target.margin(w)?;
            if margin < circle_min {
                circle_min = margin;
            }
            if margin < min_margin {
                min_margin = margin;
                witness_z = z;
                witness_w = w;
            }
        }
        per_radius_min.push(circle_min);
    }

    let tail_bound = match p.truncation_order() {
        Some(order) => p
            .to_series(order)
            .map(|s| s.tail_bound(*radii.last().unwrap()))
            .unwrap_or(f64::INFINITY),
        None => 0.0,
    };
    let conclusive = tail_bound <= 0.01 * min_margin.abs();
    let verdict = if !conclusive {
        Verdict::Inconclusive
    } else if min_margin > 0.0 {
        Verdict::Holds
    } else {
        Verdict::Counterexample
    };

    Ok(SubordinationReport {
        region: target.kind_name(),
        min_margin,
        witness_z,
        witness_w,
        radii: radii.to_vec(),
        samples_per_circle: m,
        per_radius_min,
        tail_bound,
        conclusive,
        verdict,
    })
}

/// What [`min_real_part`] minimizes on the circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealPartMode {
    /// `Re(map(z))`
    Plain,
    /// `Re(z map'(z) / map(z))` (starlikeness of the image curve)
    Starlike,
}

/// Minimum of the selected real part over `m` points on `|z| = r`.
pub fn min_real_part(map: &AnalyticMap, r: f64, m: usize, mode: RealPartMode) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::BadInput(format!("radius {r} outside (0, 1)")));
    }
    let mut min = f64::INFINITY;
    for j in 0..m {
        let t = 2.0 * std::f64::consts::PI * j as f64 / m as f64;
        let z = Complex64::from_polar(r, t);
        let value = match mode {
            RealPartMode::Plain => map.eval(z)?.re,
            RealPartMode::Starlike => {
                let w = map.eval(z)?;
                if w.norm() < 1e-12 {
                    return Err(Error::ZeroOnCircle { z });
                }
                (z * map.deriv_eval(z)? / w).re
            }
        };
        if value < min {
            min = value;
        }
    }
    Ok(min)
}
