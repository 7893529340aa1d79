//! Truncated Taylor series about 0 with complex coefficients.
//!
//! A [`PowerSeries`] holds coefficients `c_0..c_N` (index = power of z) and is
//! exact to its truncation order: every arithmetic operation below produces
//! coefficients that agree with the infinite-series result up to round-off.
//! Binary operations truncate to the smaller of the two orders.
//!
//! Division, logarithm and exponential use the classical recursive
//! coefficient solves (no Newton iteration), so a `div`/`mul` round trip is
//! exact to truncation.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Constant terms smaller than this are treated as structural zeros.
pub const ZERO_CONST_EPS: f64 = 1e-13;

/// Default truncation order used across the toolkit.
pub const DEFAULT_ORDER: usize = 64;

/// Truncated Taylor series around 0; `coeffs[k]` is the coefficient of `z^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    /// Series from explicit coefficients. The vector must be nonempty and all
    /// entries finite.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one coefficient");
        assert!(
            coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite()),
            "series coefficients must be finite"
        );
        PowerSeries { coeffs }
    }

    /// Embed a polynomial (given by its low-degree coefficients) at `order`,
    /// padding with zeros.
    pub fn polynomial(low: &[Complex64], order: usize) -> Self {
        let mut coeffs = vec![Complex64::default(); order + 1];
        for (k, c) in low.iter().enumerate().take(order + 1) {
            coeffs[k] = *c;
        }
        PowerSeries { coeffs }
    }

    /// Polynomial embedding with real coefficients.
    pub fn polynomial_re(low: &[f64], order: usize) -> Self {
        let low: Vec<Complex64> = low.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::polynomial(&low, order)
    }

    pub fn constant(c: Complex64, order: usize) -> Self {
        Self::polynomial(&[c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Complex64::new(1.0, 0.0), order)
    }

    /// Truncation order N (degree of the last stored coefficient).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^k`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Drop coefficients above `order` (no-op if already shorter).
    pub fn truncated(&self, order: usize) -> Self {
        let n = order.saturating_add(1).min(self.coeffs.len());
        PowerSeries {
            coeffs: self.coeffs[..n].to_vec(),
        }
    }

    pub fn neg(&self) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeffs[k] + other.coeffs[k]).collect();
        PowerSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut coeffs = vec![Complex64::default(); n];
        for (j, &a) in self.coeffs.iter().enumerate().take(n) {
            for (k, &b) in other.coeffs.iter().enumerate().take(n - j) {
                coeffs[j + k] += a * b;
            }
        }
        PowerSeries { coeffs }
    }

    /// Quotient q with `q * divisor == self` to truncation order.
    ///
    /// Fails with [`Error::ZeroConstantTerm`] when `|divisor(0)|` is below
    /// [`ZERO_CONST_EPS`].
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        let b0 = divisor.coeffs[0];
        if b0.norm() < ZERO_CONST_EPS {
            return Err(Error::ZeroConstantTerm {
                context: "series division",
                magnitude: b0.norm(),
            });
        }
        let n = self.coeffs.len().min(divisor.coeffs.len());
        let mut q = vec![Complex64::default(); n];
        for k in 0..n {
            let mut acc = self.coeffs[k];
            for j in 0..k {
                acc -= q[j] * divisor.coeff(k - j);
            }
            q[k] = acc / b0;
        }
        Ok(PowerSeries { coeffs: q })
    }

    /// Termwise derivative; order drops by one.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return PowerSeries {
                coeffs: vec![Complex64::default()],
            };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * (k as f64))
            .collect();
        PowerSeries { coeffs }
    }

    /// Multiply by z (shift up); order grows by one.
    pub fn mul_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::default());
        coeffs.extend_from_slice(&self.coeffs);
        PowerSeries { coeffs }
    }

    /// Divide by z, requiring a structural zero at 0; order drops by one.
    pub fn div_z(&self) -> Result<Self> {
        if self.coeffs[0].norm() > ZERO_CONST_EPS {
            return Err(Error::ZeroConstantTerm {
                context: "division by z (constant term not zero)",
                magnitude: self.coeffs[0].norm(),
            });
        }
        if self.coeffs.len() == 1 {
            return Ok(PowerSeries {
                coeffs: vec![Complex64::default()],
            });
        }
        Ok(PowerSeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Principal-branch logarithm via `log(a)' = a'/a`.
    pub fn log(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0.norm() < ZERO_CONST_EPS {
            return Err(Error::ZeroConstantTerm {
                context: "series log",
                magnitude: a0.norm(),
            });
        }
        let n = self.coeffs.len();
        let mut l = vec![Complex64::default(); n];
        l[0] = a0.ln();
        for k in 1..n {
            let mut acc = self.coeffs[k] * (k as f64);
            for j in 1..k {
                acc -= l[j] * (j as f64) * self.coeffs[k - j];
            }
            l[k] = acc / (a0 * k as f64);
        }
        Ok(PowerSeries { coeffs: l })
    }

    /// Exponential via `exp(a)' = a' exp(a)`.
    pub fn exp(&self) -> Self {
        let n = self.coeffs.len();
        let mut e = vec![Complex64::default(); n];
        e[0] = self.coeffs[0].exp();
        for k in 1..n {
            let mut acc = Complex64::default();
            for j in 1..=k {
                acc += self.coeffs[j] * (j as f64) * e[k - j];
            }
            e[k] = acc / (k as f64);
        }
        PowerSeries { coeffs: e }
    }

    /// Principal power `self^alpha = exp(alpha log self)`, anchored at
    /// constant term 1 so the branch is unambiguous.
    pub fn powf(&self, alpha: f64) -> Result<Self> {
        let a0 = self.coeffs[0];
        if (a0 - Complex64::new(1.0, 0.0)).norm() > 1e-12 {
            return Err(Error::NonUnitBase { found: a0 });
        }
        Ok(self.log()?.scale(Complex64::new(alpha, 0.0)).exp())
    }

    /// Horner evaluation of the truncated sum.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::default();
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Largest coefficient magnitude over `0..=upto` (clamped to the order).
    pub fn sup_coeff(&self, upto: usize) -> f64 {
        self.coeffs
            .iter()
            .take(upto + 1)
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    /// `max_k |self_k - other_k|` over the common range.
    pub fn coeff_distance(&self, other: &Self) -> f64 {
        let n = self.coeffs.len().min(other.coeffs.len());
        (0..n)
            .map(|k| (self.coeffs[k] - other.coeffs[k]).norm())
            .fold(0.0, f64::max)
    }

    /// Crude tail bound `|c_N| r^N N` used by the subordination truncation
    /// guard.
    pub fn tail_bound(&self, r: f64) -> f64 {
        let n = self.order();
        self.coeffs[n].norm() * r.powi(n as i32) * n.max(1) as f64
    }

    /// JSON form: array of `[re, im]` pairs, index = power of z.
    pub fn to_pairs(&self) -> Vec<[f64; 2]> {
        self.coeffs.iter().map(|c| [c.re, c.im]).collect()
    }

    pub fn from_pairs(pairs: &[[f64; 2]]) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::BadInput("empty coefficient array".into()));
        }
        if pairs.iter().any(|p| !p[0].is_finite() || !p[1].is_finite()) {
            return Err(Error::BadInput("non-finite coefficient".into()));
        }
        Ok(PowerSeries::new(
            pairs.iter().map(|p| Complex64::new(p[0], p[1])).collect(),
        ))
    }
}

impl serde::Serialize for PowerSeries {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_pairs().serialize(ser)
    }
}

impl<'de> serde::Deserialize<'de> for PowerSeries {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<[f64; 2]>::deserialize(de)?;
        PowerSeries::from_pairs(&pairs).map_err(serde::de::Error::custom)
    }
}

/// The series `g = f/z` of a normalized function `f ∈ A` (f(0)=0, f'(0)=1);
/// the constant coefficient of `g` is required to be exactly 1.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedFunction {
    g: PowerSeries,
}

impl NormalizedFunction {
    /// From the series of `f` itself: checks `f_0 = 0` (structurally) and
    /// `f_1 = 1` exactly, then stores `f/z`.
    pub fn from_class_a(f: &PowerSeries) -> Result<Self> {
        let g = f.div_z()?;
        let g0 = g.coeff(0);
        if g0 != Complex64::new(1.0, 0.0) {
            return Err(Error::NotNormalized { found: g0 });
        }
        Ok(NormalizedFunction { g })
    }

    /// The series of `f/z`.
    pub fn g(&self) -> &PowerSeries {
        &self.g
    }

    /// The series of `f` itself.
    pub fn f(&self) -> PowerSeries {
        self.g.mul_z()
    }
}
