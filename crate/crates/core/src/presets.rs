//! Built-in example functions, so figures and checks are reproducible from
//! the command line without coefficient files.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::special::{BesselParams, KummerParams};
use crate::subordination::AnalyticMap;

/// Default Kummer parameter sets `(a, c)` shipped as presets.
pub const KUMMER_PRESETS: [(f64, f64); 2] = [(2.0, 6.0), (5.0, 10.0)];

/// Default Bessel parameter sets `(p, b, c)` shipped as presets.
pub const BESSEL_PRESETS: [(f64, f64, f64); 2] = [(2.0, 2.0, 6.0), (7.0, 6.0, 10.0)];

/// `f1(z) = 4z/(2-z)^2`, a member of the cardioid starlike class.
pub fn f1() -> AnalyticMap {
    AnalyticMap::rational(
        Polynomial::from_re(&[0.0, 4.0]),
        Polynomial::from_re(&[4.0, -4.0, 1.0]),
    )
}

/// `f2(z) = z (1 + z/4)^2`, a member of the cardioid starlike class.
pub fn f2() -> AnalyticMap {
    AnalyticMap::polynomial(Polynomial::from_re(&[0.0, 1.0, 0.5, 1.0 / 16.0]))
}

/// Look up a named input function for classification.
///
/// `kummer` and `bessel` are exposed as the class-A functions `z Phi(a,c;z)`
/// and `z u_p(z)`: multiplying by z normalizes the special function into the
/// classifiable family. Their coefficients decay factorially, so the series
/// at the configured order is exact to round-off on the closed disc.
pub fn classify_function(
    name: &str,
    a: Option<f64>,
    c: Option<f64>,
    p: Option<f64>,
    b: Option<f64>,
    order: usize,
) -> Result<AnalyticMap> {
    match name {
        "f1" => Ok(f1()),
        "f2" => Ok(f2()),
        "kummer" => {
            let params = KummerParams::new(
                a.unwrap_or(KUMMER_PRESETS[0].0),
                c.unwrap_or(KUMMER_PRESETS[0].1),
            )?;
            Ok(AnalyticMap::Series(
                crate::special::kummer_series(&params, order).mul_z(),
            ))
        }
        "bessel" => {
            let params = BesselParams::new(
                p.unwrap_or(BESSEL_PRESETS[0].0),
                b.unwrap_or(BESSEL_PRESETS[0].1),
                c.unwrap_or(BESSEL_PRESETS[0].2),
            )?;
            Ok(AnalyticMap::Series(
                crate::special::bessel_u_series(&params, order).mul_z(),
            ))
        }
        other => Err(Error::BadInput(format!(
            "unknown preset '{other}' (expected f1, f2, kummer, bessel)"
        ))),
    }
}
