//! Shared test support: a 40-digit complex arithmetic built on
//! `num_bigfloat::BigFloat`, the closed-form reference expressions for the
//! built-in special-function examples, and a deterministic point generator.
//!
//! The closed forms cancel catastrophically near 0 (their numerators vanish
//! to high order), which is exactly why they are evaluated in extended
//! precision here: the f64 value they produce is then trustworthy to far
//! below the comparison tolerances, independently of the series route they
//! are checking.

#![allow(dead_code)]

use num_bigfloat::BigFloat;
use num_complex::Complex64;

/// Complex number over 40-digit floats.
#[derive(Clone, Copy, Debug)]
pub struct Hp {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl Hp {
    pub fn new(re: f64, im: f64) -> Self {
        Hp {
            re: BigFloat::from_f64(re),
            im: BigFloat::from_f64(im),
        }
    }

    pub fn from_c64(z: Complex64) -> Self {
        Hp::new(z.re, z.im)
    }

    pub fn from_int(n: i64) -> Self {
        Hp {
            re: BigFloat::from_i64(n),
            im: num_bigfloat::ZERO,
        }
    }

    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn add(self, o: Hp) -> Hp {
        Hp {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }

    pub fn sub(self, o: Hp) -> Hp {
        Hp {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }

    pub fn mul(self, o: Hp) -> Hp {
        Hp {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }

    pub fn div(self, o: Hp) -> Hp {
        let den = o.re * o.re + o.im * o.im;
        Hp {
            re: (self.re * o.re + self.im * o.im) / den,
            im: (self.im * o.re - self.re * o.im) / den,
        }
    }

    pub fn scale(self, s: BigFloat) -> Hp {
        Hp {
            re: self.re * s,
            im: self.im * s,
        }
    }

    pub fn powi(self, n: u32) -> Hp {
        let mut acc = Hp::from_int(1);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn norm(self) -> BigFloat {
        (self.re * self.re + self.im * self.im).sqrt()
    }

    pub fn exp(self) -> Hp {
        let magnitude = self.re.exp();
        Hp {
            re: magnitude * self.im.cos(),
            im: magnitude * self.im.sin(),
        }
    }

    pub fn sin(self) -> Hp {
        Hp {
            re: self.re.sin() * self.im.cosh(),
            im: self.re.cos() * self.im.sinh(),
        }
    }

    pub fn cos(self) -> Hp {
        Hp {
            re: self.re.cos() * self.im.cosh(),
            im: -(self.re.sin() * self.im.sinh()),
        }
    }

    /// Principal square root.
    pub fn sqrt(self) -> Hp {
        let zero = num_bigfloat::ZERO;
        let two = num_bigfloat::TWO;
        let r = self.norm();
        if self.im.cmp(&zero) == Some(0) {
            if self.re.cmp(&zero) >= Some(0) {
                return Hp {
                    re: self.re.sqrt(),
                    im: zero,
                };
            }
            return Hp {
                re: zero,
                im: self.re.abs().sqrt(),
            };
        }
        if self.re.cmp(&zero) >= Some(0) {
            let u = ((r + self.re) / two).sqrt();
            Hp {
                re: u,
                im: self.im / (two * u),
            }
        } else {
            let mut v = ((r - self.re) / two).sqrt();
            if self.im.cmp(&zero) < Some(0) {
                v = -v;
            }
            Hp {
                re: self.im / (two * v),
                im: v,
            }
        }
    }
}

/// Relative f64 distance between an f64 value and a high-precision
/// reference.
pub fn rel_err(value: Complex64, reference: Hp) -> f64 {
    let diff = Hp::from_c64(value).sub(reference).norm();
    let scale = reference.norm();
    (diff / scale).to_f64()
}

/// Closed form of the first Kummer example:
/// `20 (z^3 + 6 z^2 + 18 z + 6 e^z (z - 4) + 24) / z^5`.
pub fn kummer_2_6_closed(z: Hp) -> Hp {
    let poly = z
        .powi(3)
        .add(z.powi(2).scale(BigFloat::from_i64(6)))
        .add(z.scale(BigFloat::from_i64(18)))
        .add(Hp::from_int(24));
    let expterm = z
        .exp()
        .mul(z.sub(Hp::from_int(4)))
        .scale(BigFloat::from_i64(6));
    poly.add(expterm)
        .scale(BigFloat::from_i64(20))
        .div(z.powi(5))
}

/// Closed form of the second Kummer example:
/// `15120 (-z^4 - 20 z^3 - 180 z^2 - 840 z - 1680
///         + e^z (z^4 - 20 z^3 + 180 z^2 - 840 z + 1680)) / z^9`.
pub fn kummer_5_10_closed(z: Hp) -> Hp {
    let a = Hp::from_int(0)
        .sub(z.powi(4))
        .sub(z.powi(3).scale(BigFloat::from_i64(20)))
        .sub(z.powi(2).scale(BigFloat::from_i64(180)))
        .sub(z.scale(BigFloat::from_i64(840)))
        .sub(Hp::from_int(1680));
    let b = z
        .powi(4)
        .sub(z.powi(3).scale(BigFloat::from_i64(20)))
        .add(z.powi(2).scale(BigFloat::from_i64(180)))
        .sub(z.scale(BigFloat::from_i64(840)))
        .add(Hp::from_int(1680));
    a.add(z.exp().mul(b))
        .scale(BigFloat::from_i64(15120))
        .div(z.powi(9))
}

/// Closed form of the Bessel example `u_{2,2,6}`:
/// `-(5/(4 sqrt 6)) ((2z - 1) sin(sqrt(6z))/z^{5/2} + sqrt 6 cos(sqrt(6z))/z^2)`.
///
/// `sqrt(6z)` and `z^{5/2}` share one principal `sqrt(z)`, which keeps the
/// expression single-valued.
pub fn bessel_2_2_6_closed(z: Hp) -> Hp {
    let six = BigFloat::from_i64(6);
    let sqrt6 = six.sqrt();
    let sqrt_z = z.sqrt();
    let w = sqrt_z.scale(sqrt6); // sqrt(6 z)
    let z_pow_5_2 = z.powi(2).mul(sqrt_z);
    let term1 = z
        .scale(num_bigfloat::TWO)
        .sub(Hp::from_int(1))
        .mul(w.sin())
        .div(z_pow_5_2);
    let term2 = w.cos().scale(sqrt6).div(z.powi(2));
    let prefactor = -(BigFloat::from_i64(5) / (BigFloat::from_i64(4) * sqrt6));
    term1.add(term2).scale(prefactor)
}

/// SplitMix64: deterministic stream of f64 in [0, 1).
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform point of the disc of the given radius.
    pub fn next_in_disc(&mut self, radius: f64) -> Complex64 {
        let r = radius * self.next_f64().sqrt();
        let theta = 2.0 * std::f64::consts::PI * self.next_f64();
        Complex64::from_polar(r, theta)
    }

    pub fn next_complex_box(&mut self, half_width: f64) -> Complex64 {
        Complex64::new(
            (2.0 * self.next_f64() - 1.0) * half_width,
            (2.0 * self.next_f64() - 1.0) * half_width,
        )
    }
}
