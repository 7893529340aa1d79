//! Dense complex polynomials and rational maps.
//!
//! Rational maps are the exact evaluation route for the built-in example
//! functions and their transforms: no truncation error enters even at
//! sampling radii like 0.999, where a truncated series would be useless.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series::{PowerSeries, ZERO_CONST_EPS};

/// Polynomial with complex coefficients, `coeffs[k]` multiplying `z^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "polynomial needs at least one coefficient"
        );
        Polynomial { coeffs }
    }

    pub fn from_re(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn constant(c: Complex64) -> Self {
        Polynomial { coeffs: vec![c] }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::default();
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() == 1 {
            return Polynomial::constant(Complex64::default());
        }
        Polynomial {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * (k as f64))
                .collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Complex64::default(); n];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, &c) in other.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        Polynomial { coeffs }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut coeffs = vec![Complex64::default(); self.coeffs.len() + other.coeffs.len() - 1];
        for (j, &a) in self.coeffs.iter().enumerate() {
            for (k, &b) in other.coeffs.iter().enumerate() {
                coeffs[j + k] += a * b;
            }
        }
        Polynomial { coeffs }
    }

    pub fn scale(&self, s: Complex64) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn mul_z(&self) -> Polynomial {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::default());
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial { coeffs }
    }

    /// Structural zero constant term at 0?
    pub fn vanishes_at_zero(&self) -> bool {
        self.coeffs[0].norm() <= ZERO_CONST_EPS
    }

    /// Divide by z; requires a structural zero at 0.
    pub fn div_z(&self) -> Result<Polynomial> {
        if !self.vanishes_at_zero() {
            return Err(Error::ZeroConstantTerm {
                context: "polynomial division by z",
                magnitude: self.coeffs[0].norm(),
            });
        }
        if self.coeffs.len() == 1 {
            return Ok(Polynomial::constant(Complex64::default()));
        }
        Ok(Polynomial {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    pub fn to_series(&self, order: usize) -> PowerSeries {
        PowerSeries::polynomial(&self.coeffs, order)
    }
}

/// Quotient of two polynomials. Common structural factors of z are cancelled
/// on construction so maps like `z f'(z) / f(z)` stay evaluable near 0.
#[derive(Debug, Clone, PartialEq)]
pub struct Rational {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl Rational {
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        let mut r = Rational { num, den };
        while r.num.vanishes_at_zero() && r.den.vanishes_at_zero() {
            r = Rational {
                num: r.num.div_z().expect("checked structural zero"),
                den: r.den.div_z().expect("checked structural zero"),
            };
        }
        r
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Rational {
            num: p,
            den: Polynomial::constant(Complex64::new(1.0, 0.0)),
        }
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let d = self.den.eval(z);
        if d.norm() < 1e-300 {
            return Err(Error::ZeroDenominator {
                context: "rational map",
                z,
            });
        }
        Ok(self.num.eval(z) / d)
    }

    /// Exact derivative `(n'd - nd') / d^2`.
    pub fn derivative(&self) -> Rational {
        let wronskian = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        Rational::new(wronskian, self.den.mul(&self.den))
    }

    /// Taylor expansion about 0 (denominator must not vanish there).
    pub fn to_series(&self, order: usize) -> Result<PowerSeries> {
        self.num.to_series(order).div(&self.den.to_series(order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eval_and_derivative() {
        // (2 - z)^2 = 4 - 4z + z^2
        let p = Polynomial::from_re(&[4.0, -4.0, 1.0]);
        assert_eq!(p.eval(c(2.0, 0.0)), c(0.0, 0.0));
        let d = p.derivative();
        assert_eq!(d.coeffs(), &[c(-4.0, 0.0), c(2.0, 0.0)]);
    }

    #[test]
    fn rational_cancels_common_z() {
        // z(1+z) / z = 1+z
        let r = Rational::new(
            Polynomial::from_re(&[0.0, 1.0, 1.0]),
            Polynomial::from_re(&[0.0, 1.0]),
        );
        assert_eq!(r.den.degree(), 0);
        assert_eq!(r.eval(c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn rational_derivative_of_mobius() {
        // d/dz (1+z)/(1-z) = 2/(1-z)^2
        let r = Rational::new(
            Polynomial::from_re(&[1.0, 1.0]),
            Polynomial::from_re(&[1.0, -1.0]),
        );
        let d = r.derivative();
        let z = c(0.3, 0.2);
        let expect = c(2.0, 0.0) / ((c(1.0, 0.0) - z) * (c(1.0, 0.0) - z));
        assert!((d.eval(z).unwrap() - expect).norm() < 1e-14);
    }

    #[test]
    fn rational_series_is_geometric_for_mobius() {
        let r = Rational::new(
            Polynomial::from_re(&[1.0, 1.0]),
            Polynomial::from_re(&[1.0, -1.0]),
        );
        let s = r.to_series(8).unwrap();
        assert!((s.coeff(0) - c(1.0, 0.0)).norm() < 1e-15);
        for k in 1..=8 {
            assert!((s.coeff(k) - c(2.0, 0.0)).norm() < 1e-14);
        }
    }
}
