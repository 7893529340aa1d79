//! Numerical toolkit for strong starlikeness and differential subordination
//! on the unit disc.
//!
//! The library evaluates the special functions that appear in sector
//! subordination criteria (Kummer's confluent hypergeometric function and
//! the generalized normalized Bessel function), tests membership of values
//! in target regions (right half-plane, sector `|arg w| < alpha*pi/2`,
//! cardioid), verifies criterion hypotheses on disc grids, solves for sharp
//! parameter thresholds, and confirms the resulting subordinations by dense
//! boundary sampling.
//!
//! Organization:
//!
//! * [`series`] — truncated Taylor arithmetic, the substrate for every
//!   composite transform;
//! * [`poly`] — exact polynomial/rational maps (the truncation-free route);
//! * [`special`] — Kummer and Bessel evaluators plus their ODE residuals;
//! * [`regions`] — signed membership margins and boundary curves;
//! * [`subordination`] — transforms of a base function and the sampling
//!   procedure producing [`subordination::SubordinationReport`] evidence;
//! * [`criteria`] — hypothesis checkers, closed-form thresholds and their
//!   brute-force confirmations;
//! * [`presets`] — the built-in example functions.
//!
//! Everything is pure and immutable after construction; all sweeps can run
//! concurrently without coordination.
//!
//! ```
//! use starlike::{presets, Region, TransformSpec};
//! use starlike::subordination::{apply_transform, check_subordination, Verdict};
//!
//! // f1(z) = 4z/(2-z)^2 belongs to the cardioid starlike class: the image
//! // of z f1'/f1 stays strictly inside the cardioid on the sampled ladder.
//! let q = apply_transform(&presets::f1(), TransformSpec::ZFprimeOverF)?;
//! let report = check_subordination(&q, &Region::CardioidCar, &[0.9, 0.99, 0.999], 512)?;
//! assert_eq!(report.verdict, Verdict::Holds);
//! assert!(report.min_margin > 0.0);
//! # Ok::<(), starlike::Error>(())
//! ```

pub mod criteria;
pub mod error;
pub mod poly;
pub mod presets;
pub mod regions;
pub mod series;
pub mod special;
pub mod subordination;

pub use error::{Error, Result};
pub use poly::{Polynomial, Rational};
pub use regions::Region;
pub use series::{NormalizedFunction, PowerSeries};
pub use special::{BesselParams, KummerParams};
pub use subordination::{AnalyticMap, SubordinationReport, TransformSpec};
