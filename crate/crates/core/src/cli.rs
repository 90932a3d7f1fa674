//! Command-line front end: argument parsing, subcommand dispatch, and
//! deterministic CSV/JSON emission.
//!
//! Exit codes: 0 success, 1 negative finding (mixed sign or a failed
//! check), 2 invalid input, 3 partial results (gaps in a sweep),
//! 4 indeterminate near the origin.

use crate::config::{self, energy_grid, BuiltSystem, OutputFormat, Overrides, RunConfig};
use crate::criterion::{sign_certificate, SignCertificate, SignVerdict};
use crate::error::Error;
use crate::gallery;
use crate::hamiltonian::{annulus_energy_bound, validate_center};
use crate::period::{period, period_derivative, sample_period_curve, Method, PeriodCurve};
use crate::polyfamily::{classify, FamilyClassification, Verdict};
use crate::Result;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::io::Write as _;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_PARTIAL: i32 = 3;
pub const EXIT_INDETERMINATE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "centerperiod",
    about = "Monotonicity of the period function of separable Hamiltonian centers",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by every subcommand; flags override config-file values.
#[derive(Debug, Clone, Args, Default)]
pub struct CommonArgs {
    /// TOML config file with the same keys as the flags below
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Registry name, family point `a,b,c`, or raw `a1,a2,a3,b1,b2`
    #[arg(long, allow_hyphen_values = true)]
    pub system: Option<String>,
    /// Lower end of the energy grid
    #[arg(long, allow_negative_numbers = true)]
    pub emin: Option<f64>,
    /// Upper end of the energy grid
    #[arg(long, allow_negative_numbers = true)]
    pub emax: Option<f64>,
    /// Number of grid points (log-spaced)
    #[arg(long)]
    pub n: Option<usize>,
    /// Energy sublevel for sign certificates
    #[arg(long)]
    pub e0: Option<f64>,
    /// Certificate grid points per axis
    #[arg(long)]
    pub resolution: Option<usize>,
    /// Certificate refinement depth
    #[arg(long)]
    pub depth: Option<usize>,
    /// Quadrature tolerance
    #[arg(long)]
    pub tol: Option<f64>,
    /// Output format: csv or json
    #[arg(long)]
    pub format: Option<String>,
    /// Output path (stdout when absent)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample T(E) and dT/dE on an energy grid
    Period(CommonArgs),
    /// Alias for `period` emphasizing the derivative column
    Derivative(CommonArgs),
    /// Sampled sign certificate for M on the sublevel region of --e0
    Criterion(CommonArgs),
    /// Classify a family parameter point (or a batch file of points)
    Classify {
        #[command(flatten)]
        common: CommonArgs,
        /// File with one `a,b,c` triple per line
        #[arg(long)]
        batch: Option<PathBuf>,
    },
    /// Cross-check certificate, classification, derivative signs, and
    /// method agreement; exit 0 iff every check passes
    Verify(CommonArgs),
    /// List the built-in example systems
    Examples(CommonArgs),
}

impl CommonArgs {
    fn resolve(&self) -> Result<RunConfig> {
        let file = match &self.config {
            Some(path) => config::load_file(path)?,
            None => Default::default(),
        };
        let flags = Overrides {
            system: self.system.clone(),
            emin: self.emin,
            emax: self.emax,
            n: self.n,
            e0: self.e0,
            resolution: self.resolution,
            depth: self.depth,
            tol: self.tol,
            format: self.format.clone(),
            out: self.out.as_ref().map(|p| p.display().to_string()),
        };
        config::resolve(file, flags)
    }
}

/// 17 significant digits, locale-independent; round-trips exactly.
fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt).unwrap_or_default()
}

fn emit(cfg_out: &Option<PathBuf>, text: &str) -> Result<()> {
    match cfg_out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidConfig(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Error::InvalidConfig(format!("stdout: {e}")))
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct PeriodRow {
    #[serde(rename = "E")]
    e: f64,
    #[serde(rename = "T")]
    t: Option<f64>,
    #[serde(rename = "dTdE")]
    dtde: Option<f64>,
    method: &'static str,
    err: Option<f64>,
}

fn curve_rows(curve: &PeriodCurve) -> Vec<PeriodRow> {
    curve
        .points
        .iter()
        .map(|p| PeriodRow {
            e: p.energy,
            t: p.period,
            dtde: p.derivative,
            method: curve.method.tag(),
            err: p.error_estimate,
        })
        .collect()
}

fn curve_csv(rows: &[PeriodRow]) -> String {
    let mut s = String::from("E,T,dTdE,method,err\n");
    for r in rows {
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            fmt(r.e),
            fmt_opt(r.t),
            fmt_opt(r.dtde),
            r.method,
            fmt_opt(r.err),
        ));
    }
    s
}

fn cmd_period(args: &CommonArgs) -> Result<i32> {
    let cfg = args.resolve()?;
    let built = cfg.system.build()?;
    let grid = energy_grid(&cfg)?;
    let curve = sample_period_curve(&built.hamiltonian, &grid, Method::ThetaQuadrature)?;
    let rows = curve_rows(&curve);
    let text = match cfg.format {
        OutputFormat::Csv => curve_csv(&rows),
        OutputFormat::Json => to_json(&rows),
    };
    emit(&cfg.out, &text)?;
    Ok(if curve.points.iter().any(|p| p.gap) {
        EXIT_PARTIAL
    } else {
        EXIT_OK
    })
}

fn cmd_criterion(args: &CommonArgs) -> Result<i32> {
    let cfg = args.resolve()?;
    let built = cfg.system.build()?;
    let e0 = cfg
        .e0
        .ok_or_else(|| Error::InvalidConfig("criterion needs --e0".into()))?;
    let cert = sign_certificate(&built.hamiltonian, e0, cfg.resolution, cfg.depth)?;
    let text = match cfg.format {
        OutputFormat::Csv => certificate_csv(&cert),
        OutputFormat::Json => to_json(&cert),
    };
    emit(&cfg.out, &text)?;
    Ok(match cert.verdict {
        SignVerdict::NonNegative | SignVerdict::NonPositive => EXIT_OK,
        SignVerdict::Mixed => EXIT_NEGATIVE,
        SignVerdict::Indeterminate => EXIT_INDETERMINATE,
    })
}

fn certificate_csv(cert: &SignCertificate) -> String {
    let mut s = String::from("key,value\n");
    s.push_str(&format!("verdict,{:?}\n", cert.verdict));
    s.push_str(&format!("e0,{}\n", fmt(cert.e0)));
    s.push_str(&format!("resolution,{}\n", cert.resolution));
    s.push_str(&format!("refinement_depth,{}\n", cert.refinement_depth));
    s.push_str(&format!("margin,{}\n", fmt(cert.margin)));
    s.push_str(&format!("sampled_only,{}\n", cert.sampled_only));
    if let Some(w) = cert.max_positive {
        s.push_str(&format!(
            "max_positive,{} @ ({} {})\n",
            fmt(w.m),
            fmt(w.x),
            fmt(w.y)
        ));
    }
    if let Some(w) = cert.min_negative {
        s.push_str(&format!(
            "min_negative,{} @ ({} {})\n",
            fmt(w.m),
            fmt(w.x),
            fmt(w.y)
        ));
    }
    s
}

fn classification_exit(record: &FamilyClassification) -> i32 {
    match record.verdict {
        Verdict::Constant | Verdict::Increasing | Verdict::Decreasing => EXIT_OK,
        Verdict::OutsideTheorem | Verdict::Unclassified => EXIT_NEGATIVE,
        Verdict::IndeterminateNearOrigin => EXIT_INDETERMINATE,
    }
}

fn classification_csv(records: &[FamilyClassification]) -> String {
    let mut s = String::from("a,b,c,case,verdict,e0,c0,c1,note\n");
    for r in records {
        s.push_str(&format!(
            "{},{},{},{},{:?},{},{},{},{}\n",
            fmt(r.params.a),
            fmt(r.params.b),
            fmt(r.params.c),
            r.case.tag(),
            r.verdict,
            fmt_opt(r.e0),
            fmt_opt(r.c0),
            fmt_opt(r.c1),
            r.note.as_deref().unwrap_or_default().replace(',', ";"),
        ));
    }
    s
}

fn cmd_classify(args: &CommonArgs, batch: &Option<PathBuf>) -> Result<i32> {
    let mut points = Vec::new();
    if let Some(path) = batch {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidConfig(format!("cannot read {}: {e}", path.display())))?;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match line.parse::<config::SystemSpec>()? {
                config::SystemSpec::Family(p) => points.push(p),
                config::SystemSpec::Raw(n) => points.push(crate::polyfamily::normalize(n)?.params),
                config::SystemSpec::Builtin(name) => return Err(Error::InvalidConfig(format!(
                    "batch classification takes parameter points, not the registry name {name:?}"
                ))),
            }
        }
        if points.is_empty() {
            return Err(Error::InvalidConfig(
                "batch file has no parameter points".into(),
            ));
        }
    } else {
        let cfg = args.resolve()?;
        let built = cfg.system.build()?;
        match built.family {
            Some(p) => points.push(p),
            None => {
                return Err(Error::InvalidConfig(
                    "classification needs family parameters (a,b,c or a raw quintuple)".into(),
                ))
            }
        }
    }
    // batch uses defaults when no system/grid flags are given
    let (format, out) = match args.resolve() {
        Ok(cfg) => (cfg.format, cfg.out),
        Err(_) => (
            args.format
                .as_deref()
                .unwrap_or("csv")
                .parse::<OutputFormat>()?,
            args.out.clone(),
        ),
    };
    let records: Vec<FamilyClassification> = points.iter().map(classify).collect();
    let text = match format {
        OutputFormat::Csv => classification_csv(&records),
        OutputFormat::Json => to_json(&records),
    };
    emit(&out, &text)?;
    Ok(records
        .iter()
        .map(classification_exit)
        .max()
        .unwrap_or(EXIT_OK))
}

#[derive(Serialize)]
struct VerifyCheck {
    name: String,
    pass: bool,
    detail: String,
}

#[derive(Serialize)]
struct VerifyReport {
    system: String,
    interval: (f64, f64),
    checks: Vec<VerifyCheck>,
    pass: bool,
}

/// Energy interval `(0, e_hi]` on which the verdict is asserted.
fn verification_interval(cfg: &RunConfig, built: &BuiltSystem) -> (f64, Option<SignVerdict>) {
    let bound = annulus_energy_bound(&built.hamiltonian);
    let mut e_hi = cfg.e0.unwrap_or(f64::INFINITY);
    let mut expected = None;
    if let Some(ex) = &built.example {
        e_hi = e_hi.min(ex.expected_e0);
        expected = ex.expected_sign();
    }
    if let Some(p) = &built.family {
        let record = classify(p);
        if let Some(e0) = record.e0 {
            e_hi = e_hi.min(e0);
        }
        expected = match record.verdict {
            Verdict::Increasing => Some(SignVerdict::NonNegative),
            Verdict::Decreasing => Some(SignVerdict::NonPositive),
            Verdict::Constant => Some(SignVerdict::NonNegative),
            _ => None,
        };
    }
    if e_hi.is_infinite() {
        e_hi = 10.0;
    }
    if bound.e_star.is_finite() {
        e_hi = e_hi.min(bound.e_star * (1.0 - 1e-9));
    }
    (e_hi, expected)
}

fn cmd_verify(args: &CommonArgs) -> Result<i32> {
    let cfg = args.resolve()?;
    let built = cfg.system.build()?;
    let h = &built.hamiltonian;
    let (e_hi, expected) = verification_interval(&cfg, &built);
    let mut checks = Vec::new();

    let validation = validate_center(h);
    checks.push(VerifyCheck {
        name: "center hypotheses".into(),
        pass: validation.pass,
        detail: validation
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect::<Vec<_>>()
            .join("; "),
    });

    // sampled sign certificate against the expected verdict; with no
    // classification to compare against, the certificate's own verdict
    // becomes the expectation for the derivative check below
    let mut expected = expected;
    match sign_certificate(h, e_hi, cfg.resolution, cfg.depth) {
        Ok(cert) => {
            let one_signed = matches!(
                cert.verdict,
                SignVerdict::NonNegative | SignVerdict::NonPositive
            );
            let pass = match expected {
                Some(sign) => cert.admits(sign),
                None => one_signed,
            };
            checks.push(VerifyCheck {
                name: format!("sign certificate on (0, {}]", fmt(e_hi)),
                pass,
                detail: format!("verdict {:?}, expected {:?}", cert.verdict, expected),
            });
            if expected.is_none() && one_signed {
                expected = Some(cert.verdict);
            }
        }
        Err(e) => checks.push(VerifyCheck {
            name: "sign certificate".into(),
            pass: false,
            detail: e.to_string(),
        }),
    }

    // FD derivative signs at 10 interior energies
    let mut fd_fail = Vec::new();
    let mut fd_flat = 0usize;
    for i in 1..=10 {
        let e = e_hi * 0.9 * i as f64 / 10.0;
        match period_derivative(h, e) {
            Ok((d, err)) => {
                if d.abs() <= 3.0 * err {
                    fd_flat += 1;
                    continue;
                }
                let ok = match expected {
                    Some(SignVerdict::NonNegative) => d > 0.0,
                    Some(SignVerdict::NonPositive) => d < 0.0,
                    _ => true,
                };
                if !ok {
                    fd_fail.push(format!("dT/dE = {} at E = {}", fmt(d), fmt(e)));
                }
            }
            Err(e2) => fd_fail.push(format!("E = {}: {e2}", fmt(e))),
        }
    }
    checks.push(VerifyCheck {
        name: "derivative signs (10 energies)".into(),
        pass: fd_fail.is_empty(),
        detail: if fd_fail.is_empty() {
            format!("{fd_flat} skipped as numerically flat")
        } else {
            fd_fail.join("; ")
        },
    });

    // cross-method agreement at 5 energies
    let mut xm_fail = Vec::new();
    for i in 1..=5 {
        let e = e_hi * 0.9 * i as f64 / 5.0;
        let ta = period(h, e, Method::ThetaQuadrature);
        let tb = period(h, e, Method::OdeOracle);
        match (ta, tb) {
            (Ok(a), Ok(b)) => {
                let rel = (a.period - b.period).abs() / a.period;
                if rel > 1e-6 {
                    xm_fail.push(format!("rel {} at E = {}", fmt(rel), fmt(e)));
                }
            }
            (Err(e2), _) | (_, Err(e2)) => xm_fail.push(format!("E = {}: {e2}", fmt(e))),
        }
    }
    checks.push(VerifyCheck {
        name: "cross-method period agreement (5 energies)".into(),
        pass: xm_fail.is_empty(),
        detail: xm_fail.join("; "),
    });

    let pass = checks.iter().all(|c| c.pass);
    let report = VerifyReport {
        system: built.label.clone(),
        interval: (0.0, e_hi),
        checks,
        pass,
    };
    let text = match cfg.format {
        OutputFormat::Csv => {
            let mut s = String::from("check,pass,detail\n");
            for c in &report.checks {
                s.push_str(&format!(
                    "{},{},{}\n",
                    c.name.replace(',', ";"),
                    c.pass,
                    c.detail.replace(',', ";")
                ));
            }
            s
        }
        OutputFormat::Json => to_json(&report),
    };
    emit(&cfg.out, &text)?;
    Ok(if pass { EXIT_OK } else { EXIT_NEGATIVE })
}

#[derive(Serialize)]
struct ExampleRow {
    name: String,
    expected_verdict: String,
    expected_e0: f64,
    note: String,
}

fn cmd_examples(args: &CommonArgs) -> Result<i32> {
    let format: OutputFormat = args.format.as_deref().unwrap_or("csv").parse()?;
    let rows: Vec<ExampleRow> = gallery::all()
        .into_iter()
        .map(|ex| ExampleRow {
            expected_verdict: format!("{:?}", ex.expected_verdict),
            expected_e0: ex.expected_e0,
            note: ex.note.to_string(),
            name: ex.name,
        })
        .collect();
    let text = match format {
        OutputFormat::Csv => {
            let mut s = String::from("name,expected_verdict,expected_e0,note\n");
            for r in &rows {
                s.push_str(&format!(
                    "{},{},{},{}\n",
                    r.name.replace(',', ";"),
                    r.expected_verdict,
                    fmt(r.expected_e0),
                    r.note.replace(',', ";")
                ));
            }
            s
        }
        OutputFormat::Json => to_json(&rows),
    };
    emit(&args.out, &text)?;
    Ok(EXIT_OK)
}

/// Dispatch a parsed command line; the returned code is the process
/// exit status.
pub fn run(cli: Cli) -> i32 {
    let outcome = match &cli.command {
        Command::Period(args) | Command::Derivative(args) => cmd_period(args),
        Command::Criterion(args) => cmd_criterion(args),
        Command::Classify { common, batch } => cmd_classify(common, batch),
        Command::Verify(args) => cmd_verify(args),
        Command::Examples(args) => cmd_examples(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INVALID
        }
    }
}
