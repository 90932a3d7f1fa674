//! Run configuration: TOML config files, flag overrides, and the
//! system-spec mini-language shared by the CLI subcommands.

use crate::error::Error;
use crate::gallery::{self, ExampleSystem};
use crate::hamiltonian::{SeparableHamiltonian, SmoothFunction};
use crate::polyfamily::{normalize, FamilyParams, Normalization, NormalizationInput};
use crate::Result;
use serde::Deserialize;
use std::path::PathBuf;
use std::str::FromStr;

/// How a system is specified on the command line or in a config file:
/// a registry name, `a,b,c` family parameters, or a raw
/// `a1,a2,a3,b1,b2` coefficient quintuple.
#[derive(Debug, Clone, PartialEq)]
pub enum SystemSpec {
    Builtin(String),
    Family(FamilyParams),
    Raw(NormalizationInput),
}

impl FromStr for SystemSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidConfig("empty system spec".into()));
        }
        if !s.contains(',') {
            return Ok(SystemSpec::Builtin(s.to_string()));
        }
        let nums: Vec<f64> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::InvalidConfig(format!("bad number {t:?} in system spec")))
            })
            .collect::<Result<_>>()?;
        match nums.len() {
            3 => Ok(SystemSpec::Family(FamilyParams::new(
                nums[0], nums[1], nums[2],
            ))),
            5 => Ok(SystemSpec::Raw(NormalizationInput {
                a1: nums[0],
                a2: nums[1],
                a3: nums[2],
                b1: nums[3],
                b2: nums[4],
            })),
            k => Err(Error::InvalidConfig(format!(
                "system spec needs 3 (a,b,c) or 5 (a1,a2,a3,b1,b2) numbers, got {k}"
            ))),
        }
    }
}

/// A system spec resolved into a runnable Hamiltonian.
pub struct BuiltSystem {
    pub label: String,
    pub hamiltonian: SeparableHamiltonian,
    /// Family parameters, when the spec is a family point or a raw
    /// quintuple (then these are the normalized parameters).
    pub family: Option<FamilyParams>,
    /// Present only for raw quintuples.
    pub normalization: Option<Normalization>,
    /// Present only for registry systems.
    pub example: Option<ExampleSystem>,
}

impl SystemSpec {
    pub fn build(&self) -> Result<BuiltSystem> {
        match self {
            SystemSpec::Builtin(name) => {
                let ex = gallery::builtin(name)?;
                Ok(BuiltSystem {
                    label: ex.name.clone(),
                    hamiltonian: ex.hamiltonian.clone(),
                    family: None,
                    normalization: None,
                    example: Some(ex),
                })
            }
            SystemSpec::Family(p) => Ok(BuiltSystem {
                label: format!("family({},{},{})", p.a, p.b, p.c),
                hamiltonian: p.hamiltonian(),
                family: Some(*p),
                normalization: None,
                example: None,
            }),
            SystemSpec::Raw(n) => {
                let norm = normalize(*n)?;
                let f = SmoothFunction::Polynomial {
                    coeffs: vec![0.0, 0.0, n.a1 / 2.0, n.a2 / 3.0, n.a3 / 4.0],
                };
                let g = SmoothFunction::Polynomial {
                    coeffs: vec![0.0, 0.0, n.b1 / 2.0, 0.0, n.b2 / 4.0],
                };
                Ok(BuiltSystem {
                    label: format!("raw({},{},{},{},{})", n.a1, n.a2, n.a3, n.b1, n.b2),
                    hamiltonian: SeparableHamiltonian::new(f, g),
                    family: Some(norm.params),
                    normalization: Some(norm),
                    example: None,
                })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::InvalidConfig(format!("unknown format {other:?}"))),
        }
    }
}

/// Config-file schema; every field can be overridden by a flag.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub system: Option<String>,
    pub emin: Option<f64>,
    pub emax: Option<f64>,
    pub n: Option<usize>,
    pub e0: Option<f64>,
    pub resolution: Option<usize>,
    pub depth: Option<usize>,
    pub tol: Option<f64>,
    pub format: Option<String>,
    pub out: Option<String>,
}

pub fn load_file(path: &std::path::Path) -> Result<FileConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidConfig(format!("cannot read {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| Error::InvalidConfig(format!("bad config file: {e}")))
}

/// Fully resolved run configuration (file values merged with flags).
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub system: SystemSpec,
    pub emin: Option<f64>,
    pub emax: Option<f64>,
    pub n: usize,
    pub e0: Option<f64>,
    pub resolution: usize,
    pub depth: usize,
    pub tol: f64,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
}

/// Flag-level options; `None` means "not given, fall back to the file".
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub system: Option<String>,
    pub emin: Option<f64>,
    pub emax: Option<f64>,
    pub n: Option<usize>,
    pub e0: Option<f64>,
    pub resolution: Option<usize>,
    pub depth: Option<usize>,
    pub tol: Option<f64>,
    pub format: Option<String>,
    pub out: Option<String>,
}

pub fn resolve(file: FileConfig, flags: Overrides) -> Result<RunConfig> {
    let system_str = flags
        .system
        .or(file.system)
        .ok_or_else(|| Error::InvalidConfig("no system specified".into()))?;
    let system: SystemSpec = system_str.parse()?;
    let format: OutputFormat = flags
        .format
        .or(file.format)
        .as_deref()
        .unwrap_or("csv")
        .parse()?;
    let cfg = RunConfig {
        system,
        emin: flags.emin.or(file.emin),
        emax: flags.emax.or(file.emax),
        n: flags.n.or(file.n).unwrap_or(50),
        e0: flags.e0.or(file.e0),
        resolution: flags.resolution.or(file.resolution).unwrap_or(512),
        depth: flags.depth.or(file.depth).unwrap_or(4),
        tol: flags.tol.or(file.tol).unwrap_or(1e-10),
        format,
        out: flags.out.or(file.out).map(PathBuf::from),
    };
    if let (Some(lo), Some(hi)) = (cfg.emin, cfg.emax) {
        if !(lo > 0.0 && hi > lo) {
            return Err(Error::InvalidConfig(format!(
                "energy grid must satisfy 0 < emin < emax (got {lo}, {hi})"
            )));
        }
    }
    if cfg.n < 1 {
        return Err(Error::InvalidConfig("grid needs at least one point".into()));
    }
    if cfg.tol.is_nan() || cfg.tol <= 0.0 {
        return Err(Error::InvalidConfig("tolerance must be positive".into()));
    }
    if cfg.resolution < 8 {
        return Err(Error::InvalidConfig("resolution must be at least 8".into()));
    }
    Ok(cfg)
}

/// Log-spaced energy grid on `[emin, emax]` with `n` points.
pub fn energy_grid(cfg: &RunConfig) -> Result<Vec<f64>> {
    let (lo, hi) = match (cfg.emin, cfg.emax) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => {
            return Err(Error::InvalidConfig(
                "this command needs --emin and --emax".into(),
            ))
        }
    };
    if cfg.n == 1 {
        return Ok(vec![lo]);
    }
    let (llo, lhi) = (lo.ln(), hi.ln());
    Ok((0..cfg.n)
        .map(|i| (llo + (lhi - llo) * i as f64 / (cfg.n - 1) as f64).exp())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_specs() {
        assert_eq!(
            "sinh".parse::<SystemSpec>().unwrap(),
            SystemSpec::Builtin("sinh".into())
        );
        assert_eq!(
            "1, 0, 2".parse::<SystemSpec>().unwrap(),
            SystemSpec::Family(FamilyParams::new(1.0, 0.0, 2.0))
        );
        assert!(matches!(
            "1,2".parse::<SystemSpec>(),
            Err(Error::InvalidConfig(_))
        ));
        assert!(matches!(
            "1,x,3".parse::<SystemSpec>(),
            Err(Error::InvalidConfig(_))
        ));
        match "2,4,6,1,0.5".parse::<SystemSpec>().unwrap() {
            SystemSpec::Raw(n) => assert_eq!(n.b2, 0.5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn raw_build_normalizes() {
        let spec: SystemSpec = "2,4,6,1,0.5".parse().unwrap();
        let built = spec.build().unwrap();
        assert_eq!(built.family.unwrap(), FamilyParams::new(2.0, 3.0, 1.0));
        assert!((built.normalization.unwrap().time_scale - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn flags_override_file() {
        let file = FileConfig {
            system: Some("linear".into()),
            tol: Some(1e-6),
            ..Default::default()
        };
        let flags = Overrides {
            tol: Some(1e-9),
            ..Default::default()
        };
        let cfg = resolve(file, flags).unwrap();
        assert_eq!(cfg.tol, 1e-9);
        assert_eq!(cfg.system, SystemSpec::Builtin("linear".into()));
    }

    #[test]
    fn grid_validation() {
        let file = FileConfig {
            system: Some("linear".into()),
            emin: Some(2.0),
            emax: Some(1.0),
            ..Default::default()
        };
        assert!(resolve(file, Overrides::default()).is_err());
    }

    #[test]
    fn toml_round_trip() {
        let cfg: FileConfig = toml::from_str(
            "system = \"1,0,2\"\nemin = 0.01\nemax = 0.1\nn = 5\nformat = \"json\"\n",
        )
        .unwrap();
        let run = resolve(cfg, Overrides::default()).unwrap();
        assert_eq!(run.format, OutputFormat::Json);
        let grid = energy_grid(&run).unwrap();
        assert_eq!(grid.len(), 5);
        assert!(grid.windows(2).all(|w| w[0] < w[1]));
        assert!((grid[0] - 0.01).abs() < 1e-15 && (grid[4] - 0.1).abs() < 1e-15);
    }
}
