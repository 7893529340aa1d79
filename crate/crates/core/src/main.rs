//! Command-line surface: classification, curve export, criterion
//! verification, threshold solving and special-function evaluation.
//!
//! Exit codes: 0 = verdict holds / data written, 2 = counterexample or
//! verdict false, 3 = inconclusive (truncation guard or evaluation failure
//! mid-sweep), 4 = usage or input error.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::json;

use starlike::criteria::{
    admissibility_margin, bessel_alpha_min, boundary_trace, check_one_plus_k2, kummer_alpha_min,
    min_beta_one_plus_k1, min_beta_one_plus_k2, AdmissibleTriple, BoundaryFamily, DiscGrid,
};
use starlike::error::Error;
use starlike::presets;
use starlike::regions::Region;
use starlike::series::{PowerSeries, DEFAULT_ORDER};
use starlike::special::{
    bessel_u_eval, bessel_u_series, kummer_eval, kummer_series, BesselParams, KummerParams,
};
use starlike::subordination::{
    apply_transform, check_subordination, AnalyticMap, SubordinationReport, TransformSpec, Verdict,
};

#[derive(Parser, Debug)]
#[command(
    name = "starlike",
    version,
    about = "Numerical toolkit for strong starlikeness and differential subordination",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Truncation order for series-backed functions
    #[arg(long, global = true)]
    order: Option<usize>,

    /// Radii ladder for subordination sweeps, comma separated
    #[arg(long, global = true, value_delimiter = ',')]
    radii: Option<Vec<f64>>,

    /// Samples per circle (subordination) or per curve (curves)
    #[arg(long, global = true)]
    samples: Option<usize>,

    /// Boundary-parameter grid size for threshold solves
    #[arg(long, global = true)]
    tgrid: Option<usize>,

    /// Output file (or directory for figure export)
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format for reports
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,

    /// JSON config file with the fields of the global flags; flags override
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
struct RunConfig {
    order: usize,
    radii: Vec<f64>,
    samples: usize,
    tgrid: usize,
    format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            order: DEFAULT_ORDER,
            radii: vec![0.9, 0.99, 0.999],
            samples: 2048,
            tgrid: 4096,
            format: OutputFormat::Json,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Test membership of a function in a starlike class by sampling
    Classify(ClassifyArgs),
    /// Export region boundaries and image curves as CSV
    Curves(CurvesArgs),
    /// Verify a criterion's hypothesis and conclusion numerically
    Verify(VerifyArgs),
    /// Solve for the sharp parameter threshold of a criterion
    Threshold(ThresholdArgs),
    /// Evaluate special functions or emit their series
    Special(SpecialArgs),
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    /// Coefficient file: JSON array of [re, im] pairs for f (index = power)
    #[arg(long, conflicts_with = "preset")]
    f: Option<PathBuf>,
    /// Named input: f1, f2, kummer, bessel
    #[arg(long)]
    preset: Option<String>,
    /// Target class: S* | S*(a) | S*[a] | SSC
    #[arg(long = "class")]
    class: String,
    /// Order parameter for S*(a) and S*[a]
    #[arg(long)]
    alpha: Option<f64>,
    /// Single top radius (shortcut for --radii with one rung)
    #[arg(long, conflicts_with = "radii")]
    r: Option<f64>,
    /// Samples per circle (alias of --samples)
    #[arg(long, conflicts_with = "samples")]
    m: Option<usize>,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
}

#[derive(Args, Debug)]
struct CurvesArgs {
    /// Figure preset: fig1 (cardioid + q1,q2), fig2 (sector + Kummer image),
    /// fig3 (sector + Bessel image)
    #[arg(long, conflicts_with = "region")]
    figure: Option<String>,
    /// Single region boundary: car | sector | halfplane
    #[arg(long)]
    region: Option<String>,
    /// Sector order for --region sector, and override for fig2/fig3 frames
    #[arg(long)]
    alpha: Option<f64>,
    /// Sampling radius for image curves
    #[arg(long, default_value_t = 0.999)]
    radius: f64,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Criterion identifier: 2.1 | 3.2
    #[arg(long)]
    theorem: String,
    /// Input family for 2.1: kummer | bessel
    #[arg(long)]
    preset: Option<String>,
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
}

#[derive(Args, Debug)]
struct ThresholdArgs {
    /// Criterion identifier: 3.1 | 3.2
    #[arg(long)]
    theorem: String,
    #[arg(long)]
    alpha: f64,
    /// Include a dump of the boundary predicate at the brute threshold
    #[arg(long)]
    trace: bool,
}

#[derive(Args, Debug)]
struct SpecialArgs {
    #[command(subcommand)]
    action: SpecialCmd,
}

#[derive(Subcommand, Debug)]
enum SpecialCmd {
    /// Evaluate at a point; prints {"value": [re, im], "terms_used": n}
    Eval(SpecialEvalArgs),
    /// Emit Taylor coefficients as a JSON array of [re, im] pairs
    Series(SpecialSeriesArgs),
}

#[derive(Args, Debug)]
struct SpecialEvalArgs {
    /// kummer | bessel
    #[arg(long)]
    kind: String,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
    /// Evaluation point, e.g. "0.3+0.1i"
    #[arg(long, allow_hyphen_values = true)]
    z: String,
}

#[derive(Args, Debug)]
struct SpecialSeriesArgs {
    /// kummer | bessel
    #[arg(long)]
    kind: String,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
}

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 4,
            };
            let _ = e.print();
            return code;
        }
    };
    let config = match load_config(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 4;
        }
    };
    let out = cli.out.clone();
    let result = match &cli.command {
        Cmd::Classify(args) => cmd_classify(args, &config, out.as_deref()),
        Cmd::Curves(args) => cmd_curves(args, &config, out.as_deref()),
        Cmd::Verify(args) => cmd_verify(args, &config, out.as_deref()),
        Cmd::Threshold(args) => cmd_threshold(args, &config, out.as_deref()),
        Cmd::Special(args) => cmd_special(args, &config, out.as_deref()),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.error);
            failure.exit_code
        }
    }
}

struct Failure {
    error: Error,
    exit_code: i32,
}

/// Input/parse problems exit 4.
fn input_err(e: Error) -> Failure {
    Failure {
        error: e,
        exit_code: 4,
    }
}

/// Failures during a sweep leave the question unanswered: exit 3.
fn sweep_err(e: Error) -> Failure {
    Failure {
        error: e,
        exit_code: 3,
    }
}

fn load_config(cli: &Cli) -> Result<RunConfig, Error> {
    let mut config = match &cli.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::BadInput(format!("config {}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| Error::BadInput(format!("config {}: {e}", path.display())))?
        }
        None => RunConfig::default(),
    };
    if let Some(order) = cli.order {
        config.order = order;
    }
    if let Some(radii) = &cli.radii {
        config.radii = radii.clone();
    }
    if let Some(samples) = cli.samples {
        config.samples = samples;
    }
    if let Some(tgrid) = cli.tgrid {
        config.tgrid = tgrid;
    }
    if let Some(format) = cli.format {
        config.format = format;
    }
    if config.order == 0 || config.samples == 0 || config.tgrid == 0 {
        return Err(Error::BadInput(
            "order, samples and tgrid must be positive".into(),
        ));
    }
    if config.radii.is_empty() || config.radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadInput("radii must be strictly increasing".into()));
    }
    if config.radii.iter().any(|&r| !(r > 0.0 && r < 1.0)) {
        return Err(Error::BadInput("radii must lie in (0, 1)".into()));
    }
    Ok(config)
}

/// 12 significant digits, scientific notation; bit-stable across runs.
fn sig12(x: f64) -> String {
    format!("{:.11e}", x)
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| input_err(Error::BadInput(format!("{}: {e}", path.display())))),
        None => {
            use std::io::Write;
            // tolerate a closed pipe on the reading side
            let _ = writeln!(std::io::stdout(), "{text}");
            Ok(())
        }
    }
}

/// Reports are JSON objects; `--format csv` flattens the top-level numeric
/// and string fields into `key,value` rows.
fn render_report(value: &serde_json::Value, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(value).expect("serializable"),
        OutputFormat::Csv => {
            let mut rows = vec!["key,value".to_string()];
            if let serde_json::Value::Object(map) = value {
                for (k, v) in map {
                    match v {
                        serde_json::Value::Number(n) => rows.push(format!("{k},{n}")),
                        serde_json::Value::String(s) => rows.push(format!("{k},{s}")),
                        serde_json::Value::Bool(b) => rows.push(format!("{k},{b}")),
                        _ => {}
                    }
                }
            }
            rows.join("\n")
        }
    }
}

fn parse_complex(text: &str) -> Result<Complex64, Error> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::BadInput(format!("cannot parse complex number '{text}'"));
    if s.is_empty() {
        return Err(bad());
    }
    if !s.ends_with('i') {
        return s
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| bad());
    }
    let body = &s[..s.len() - 1];
    // split at the last +/- that is not a leading sign or exponent sign
    let split = body
        .char_indices()
        .rev()
        .find(|&(idx, ch)| {
            (ch == '+' || ch == '-') && idx > 0 && !matches!(body.as_bytes()[idx - 1], b'e' | b'E')
        })
        .map(|(idx, _)| idx);
    match split {
        Some(idx) => {
            let re: f64 = body[..idx].parse().map_err(|_| bad())?;
            let im_text = &body[idx..];
            let im: f64 = match im_text {
                "+" => 1.0,
                "-" => -1.0,
                _ => im_text.parse().map_err(|_| bad())?,
            };
            Ok(Complex64::new(re, im))
        }
        None => {
            let im: f64 = match body {
                "" => 1.0,
                "-" => -1.0,
                _ => body.parse().map_err(|_| bad())?,
            };
            Ok(Complex64::new(0.0, im))
        }
    }
}

fn kummer_params_from(a: Option<f64>, c: Option<f64>) -> Result<KummerParams, Error> {
    KummerParams::new(
        a.unwrap_or(presets::KUMMER_PRESETS[0].0),
        c.unwrap_or(presets::KUMMER_PRESETS[0].1),
    )
}

fn bessel_params_from(
    p: Option<f64>,
    b: Option<f64>,
    c: Option<f64>,
) -> Result<BesselParams, Error> {
    BesselParams::new(
        p.unwrap_or(presets::BESSEL_PRESETS[0].0),
        b.unwrap_or(presets::BESSEL_PRESETS[0].1),
        c.unwrap_or(presets::BESSEL_PRESETS[0].2),
    )
}

// ---------------------------------------------------------------- classify

enum ClassTarget {
    Plain(Region),
    /// Half-plane shifted right by alpha: margin = Re w - alpha.
    ShiftedHalfPlane(f64),
}

fn parse_class(class: &str, alpha: Option<f64>) -> Result<ClassTarget, Error> {
    let need_alpha =
        || alpha.ok_or_else(|| Error::BadInput(format!("class {class} requires --alpha")));
    match class {
        "S*" | "star" => Ok(ClassTarget::Plain(Region::HalfPlane)),
        "S*(a)" | "star-order" => {
            let alpha = need_alpha()?;
            if !(0.0..1.0).contains(&alpha) {
                return Err(Error::BadInput(format!(
                    "order alpha {alpha} outside [0, 1)"
                )));
            }
            Ok(ClassTarget::ShiftedHalfPlane(alpha))
        }
        "S*[a]" | "strong" => Ok(ClassTarget::Plain(Region::sector(need_alpha()?)?)),
        "SSC" | "ssc" => Ok(ClassTarget::Plain(Region::CardioidCar)),
        other => Err(Error::BadInput(format!(
            "unknown class '{other}' (expected S*, S*(a), S*[a], SSC)"
        ))),
    }
}

fn shift_report(mut report: SubordinationReport, alpha: f64) -> SubordinationReport {
    report.min_margin -= alpha;
    for m in &mut report.per_radius_min {
        *m -= alpha;
    }
    report.conclusive = report.tail_bound <= 0.01 * report.min_margin.abs();
    report.verdict = if !report.conclusive {
        Verdict::Inconclusive
    } else if report.min_margin > 0.0 {
        Verdict::Holds
    } else {
        Verdict::Counterexample
    };
    report
}

fn load_function(args: &ClassifyArgs, config: &RunConfig) -> Result<AnalyticMap, Error> {
    match (&args.f, &args.preset) {
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::BadInput(format!("{}: {e}", path.display())))?;
            let series: PowerSeries = serde_json::from_str(&text)
                .map_err(|e| Error::BadInput(format!("{}: {e}", path.display())))?;
            // file coefficients are taken as the exact function; shorter
            // files are zero-padded to the working order
            if series.order() < config.order {
                Ok(AnalyticMap::Series(PowerSeries::polynomial(
                    series.coeffs(),
                    config.order,
                )))
            } else {
                Ok(AnalyticMap::Series(series.truncated(config.order)))
            }
        }
        (None, Some(name)) => {
            presets::classify_function(name, args.a, args.c, args.p, args.b, config.order)
        }
        _ => Err(Error::BadInput(
            "exactly one of --f or --preset is required".into(),
        )),
    }
}

fn exit_code_for(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::Holds => 0,
        Verdict::Counterexample => 2,
        Verdict::Inconclusive => 3,
    }
}

fn cmd_classify(
    args: &ClassifyArgs,
    config: &RunConfig,
    out: Option<&Path>,
) -> Result<i32, Failure> {
    let f = load_function(args, config).map_err(input_err)?;
    let target = parse_class(&args.class, args.alpha).map_err(input_err)?;
    let radii = match args.r {
        Some(r) => {
            if !(r > 0.0 && r < 1.0) {
                return Err(input_err(Error::BadInput(format!(
                    "--r {r} outside (0, 1)"
                ))));
            }
            vec![r]
        }
        None => config.radii.clone(),
    };
    let m = args.m.unwrap_or(config.samples);

    let q = apply_transform(&f, TransformSpec::ZFprimeOverF).map_err(input_err)?;
    let report = match &target {
        ClassTarget::Plain(region) => {
            check_subordination(&q, region, &radii, m).map_err(sweep_err)?
        }
        ClassTarget::ShiftedHalfPlane(alpha) => {
            let raw = check_subordination(&q, &Region::HalfPlane, &radii, m).map_err(sweep_err)?;
            shift_report(raw, *alpha)
        }
    };
    let code = exit_code_for(report.verdict);
    let value = serde_json::json!({
        "class": args.class,
        "report": report,
    });
    emit(&render_report(&value, config.format), out)?;
    Ok(code)
}

// ------------------------------------------------------------------ curves

fn write_curve_csv(path: &Path, rows: &[(f64, Complex64)]) -> Result<(), Failure> {
    let mut text = String::with_capacity(rows.len() * 48 + 8);
    text.push_str("t,u,v\n");
    for (t, w) in rows {
        text.push_str(&sig12(*t));
        text.push(',');
        text.push_str(&sig12(w.re));
        text.push(',');
        text.push_str(&sig12(w.im));
        text.push('\n');
    }
    fs::write(path, text)
        .map_err(|e| input_err(Error::BadInput(format!("{}: {e}", path.display()))))
}

/// Image of the circle |z| = r under the map, on an inclusive t grid over
/// [-pi, pi].
fn image_curve(map: &AnalyticMap, r: f64, n: usize) -> Result<Vec<(f64, Complex64)>, Error> {
    let n = n.max(2);
    let mut rows = Vec::with_capacity(n);
    for j in 0..n {
        let t = -std::f64::consts::PI + 2.0 * std::f64::consts::PI * j as f64 / (n - 1) as f64;
        let z = Complex64::from_polar(r, t);
        rows.push((t, map.eval(z)?));
    }
    Ok(rows)
}

fn parse_region(name: &str, alpha: Option<f64>) -> Result<Region, Error> {
    match name {
        "car" | "cardioid" => Ok(Region::CardioidCar),
        "halfplane" => Ok(Region::HalfPlane),
        "sector" => Region::sector(alpha.unwrap_or(1.0)),
        other => Err(Error::BadInput(format!(
            "unknown region '{other}' (expected car, sector, halfplane)"
        ))),
    }
}

fn cmd_curves(args: &CurvesArgs, config: &RunConfig, out: Option<&Path>) -> Result<i32, Failure> {
    let samples = if config.samples == RunConfig::default().samples {
        512
    } else {
        config.samples
    };
    match (&args.figure, &args.region) {
        (None, Some(region_name)) => {
            let region = parse_region(region_name, args.alpha).map_err(input_err)?;
            let path = out.ok_or_else(|| {
                input_err(Error::BadInput(
                    "--region export requires --out FILE".into(),
                ))
            })?;
            write_curve_csv(path, &region.boundary(samples))?;
            Ok(0)
        }
        (Some(figure), None) => {
            let dir = out.ok_or_else(|| {
                input_err(Error::BadInput("--figure export requires --out DIR".into()))
            })?;
            fs::create_dir_all(dir)
                .map_err(|e| input_err(Error::BadInput(format!("{}: {e}", dir.display()))))?;
            cmd_curves_figure(figure, args, config, samples, dir)
        }
        _ => Err(input_err(Error::BadInput(
            "exactly one of --figure or --region is required".into(),
        ))),
    }
}

fn cmd_curves_figure(
    figure: &str,
    args: &CurvesArgs,
    _config: &RunConfig,
    samples: usize,
    dir: &Path,
) -> Result<i32, Failure> {
    match figure {
        "fig1" => {
            write_curve_csv(
                &dir.join("fig1_cardioid.csv"),
                &Region::CardioidCar.boundary(samples),
            )?;
            let mut worst = f64::INFINITY;
            for (name, f) in [
                ("fig1_q1.csv", presets::f1()),
                ("fig1_q2.csv", presets::f2()),
            ] {
                let q = apply_transform(&f, TransformSpec::ZFprimeOverF).map_err(input_err)?;
                let rows = image_curve(&q, args.radius, samples).map_err(sweep_err)?;
                for (_, w) in &rows {
                    let m = Region::CardioidCar.margin(*w).map_err(sweep_err)?;
                    if m < worst {
                        worst = m;
                    }
                }
                write_curve_csv(&dir.join(name), &rows)?;
            }
            // rowwise cross-check: image stays strictly inside the cardioid
            if worst <= 0.0 {
                eprintln!("image curve leaves the cardioid (worst margin {worst})");
                return Ok(2);
            }
            Ok(0)
        }
        "fig2" => {
            let params = kummer_params_from(args.a, args.c).map_err(input_err)?;
            let alpha = match args.alpha {
                Some(alpha) => alpha,
                None => kummer_alpha_min(params.a, params.c).map_err(input_err)?,
            };
            let sector = Region::sector(alpha).map_err(input_err)?;
            write_curve_csv(&dir.join("fig2_sector.csv"), &sector.boundary(samples))?;
            let map = AnalyticMap::Kummer(params);
            let rows = image_curve(&map, args.radius, samples).map_err(sweep_err)?;
            write_curve_csv(&dir.join("fig2_image.csv"), &rows)?;
            Ok(0)
        }
        "fig3" => {
            let params = bessel_params_from(args.p, args.b, args.c).map_err(input_err)?;
            let alpha = match args.alpha {
                Some(alpha) => alpha,
                None => bessel_alpha_min(params.p, params.b, params.c).map_err(input_err)?,
            };
            let sector = Region::sector(alpha).map_err(input_err)?;
            write_curve_csv(&dir.join("fig3_sector.csv"), &sector.boundary(samples))?;
            let map = AnalyticMap::Bessel(params);
            let rows = image_curve(&map, args.radius, samples).map_err(sweep_err)?;
            write_curve_csv(&dir.join("fig3_image.csv"), &rows)?;
            Ok(0)
        }
        other => Err(input_err(Error::BadInput(format!(
            "unknown figure '{other}' (expected fig1, fig2, fig3)"
        )))),
    }
}

// ------------------------------------------------------------------ verify

fn cmd_verify(args: &VerifyArgs, config: &RunConfig, out: Option<&Path>) -> Result<i32, Failure> {
    match args.theorem.as_str() {
        "2.1" => {
            let preset = args.preset.as_deref().ok_or_else(|| {
                input_err(Error::BadInput(
                    "--theorem 2.1 requires --preset kummer|bessel".into(),
                ))
            })?;
            let (triple, map) = match preset {
                "kummer" => {
                    let params = kummer_params_from(args.a, args.c).map_err(input_err)?;
                    (
                        AdmissibleTriple::kummer(&params, args.alpha).map_err(input_err)?,
                        AnalyticMap::Kummer(params),
                    )
                }
                "bessel" => {
                    let params = bessel_params_from(args.p, args.b, args.c).map_err(input_err)?;
                    (
                        AdmissibleTriple::bessel(&params, args.alpha).map_err(input_err)?,
                        AnalyticMap::Bessel(params),
                    )
                }
                other => {
                    return Err(input_err(Error::BadInput(format!(
                        "unknown preset '{other}' for --theorem 2.1"
                    ))))
                }
            };
            let margin = admissibility_margin(&triple, &DiscGrid::default());
            let sector = Region::sector(args.alpha).map_err(input_err)?;
            let report = check_subordination(&map, &sector, &config.radii, config.samples)
                .map_err(sweep_err)?;
            let verdict = if !report.conclusive {
                Verdict::Inconclusive
            } else if margin > 0.0 && report.min_margin > 0.0 {
                Verdict::Holds
            } else {
                Verdict::Counterexample
            };
            let value = json!({
                "theorem": "2.1",
                "hypothesis_margin": margin,
                "report": report,
                "verdict": verdict,
            });
            emit(&render_report(&value, config.format), out)?;
            Ok(exit_code_for(verdict))
        }
        "3.2" => {
            let beta = args.beta.ok_or_else(|| {
                input_err(Error::BadInput("--theorem 3.2 requires --beta".into()))
            })?;
            let outcome = check_one_plus_k2(args.alpha, beta).map_err(input_err)?;
            let applicable = [outcome.holds_halfplane, outcome.holds_sector];
            let verdict = if applicable.iter().flatten().count() == 0 {
                Verdict::Inconclusive
            } else if applicable.iter().flatten().all(|&ok| ok) {
                Verdict::Holds
            } else {
                Verdict::Counterexample
            };
            let value = json!({
                "theorem": "3.2",
                "alpha": args.alpha,
                "beta": beta,
                "outcome": outcome,
                "verdict": verdict,
            });
            emit(&render_report(&value, config.format), out)?;
            Ok(exit_code_for(verdict))
        }
        other => Err(input_err(Error::BadInput(format!(
            "unknown theorem '{other}' for verify (expected 2.1, 3.2)"
        )))),
    }
}

// --------------------------------------------------------------- threshold

fn cmd_threshold(
    args: &ThresholdArgs,
    config: &RunConfig,
    out: Option<&Path>,
) -> Result<i32, Failure> {
    let result = match args.theorem.as_str() {
        "3.1" => {
            let mut r = min_beta_one_plus_k1(args.alpha, config.tgrid).map_err(input_err)?;
            if args.trace {
                r.predicate_trace = Some(boundary_trace(
                    BoundaryFamily::OnePlusK1,
                    args.alpha,
                    r.brute,
                    config.tgrid,
                ));
            }
            r
        }
        "3.2" => min_beta_one_plus_k2(args.alpha).map_err(input_err)?,
        other => {
            return Err(input_err(Error::BadInput(format!(
                "unknown theorem '{other}' for threshold (expected 3.1, 3.2)"
            ))))
        }
    };
    let value = serde_json::to_value(&result).expect("serializable");
    emit(&render_report(&value, config.format), out)?;
    Ok(0)
}

// ----------------------------------------------------------------- special

fn cmd_special(args: &SpecialArgs, config: &RunConfig, out: Option<&Path>) -> Result<i32, Failure> {
    match &args.action {
        SpecialCmd::Eval(e) => {
            let z = parse_complex(&e.z).map_err(input_err)?;
            let value = match e.kind.as_str() {
                "kummer" => {
                    let params = kummer_params_from(e.a, e.c).map_err(input_err)?;
                    kummer_eval(&params, z)
                }
                "bessel" => {
                    let params = bessel_params_from(e.p, e.b, e.c).map_err(input_err)?;
                    bessel_u_eval(&params, z)
                }
                other => {
                    return Err(input_err(Error::BadInput(format!(
                        "unknown kind '{other}' (expected kummer, bessel)"
                    ))))
                }
            };
            let value = json!({
                "value": [value.value.re, value.value.im],
                "terms_used": value.terms,
            });
            emit(&render_report(&value, config.format), out)?;
            Ok(0)
        }
        SpecialCmd::Series(s) => {
            let series = match s.kind.as_str() {
                "kummer" => {
                    let params = kummer_params_from(s.a, s.c).map_err(input_err)?;
                    kummer_series(&params, config.order)
                }
                "bessel" => {
                    let params = bessel_params_from(s.p, s.b, s.c).map_err(input_err)?;
                    bessel_u_series(&params, config.order)
                }
                other => {
                    return Err(input_err(Error::BadInput(format!(
                        "unknown kind '{other}' (expected kummer, bessel)"
                    ))))
                }
            };
            let text = serde_json::to_string(&series).expect("serializable");
            emit(&text, out)?;
            Ok(0)
        }
    }
}
