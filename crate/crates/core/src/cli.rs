//! Command-line front end.

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chow::{CurveInvariants, SurfaceChernNumbers};
use crate::error::EngineError;
use crate::pipelines::{self, CITE_RIMANYI};
use crate::report::{to_csv, EnumerativeReport};
use crate::selftest;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// Inclusive integer range written `a..b`, or a single value `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Span {
    pub lo: i64,
    pub hi: i64,
}

impl Span {
    pub fn values(self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("bad range bound {t:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(Span { lo, hi })
    }
}

impl TryFrom<String> for Span {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

impl From<Span> for String {
    fn from(s: Span) -> String {
        s.to_string()
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<i64>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| format!("bad integer {t:?}")))
        .collect()
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct CurveArgs {
    /// Ambient dimension
    #[arg(long)]
    pub n: u32,
    /// Degree
    #[arg(long)]
    pub d: i64,
    /// Genus
    #[arg(long, default_value_t = 0)]
    #[serde(default)]
    pub g: i64,
    /// Cusps (k_0); shorthand for the first entry of --k
    #[arg(long)]
    #[serde(default)]
    pub k0: Option<i64>,
    /// Stationary indices k_0,k_1,...,k_(n-2), comma separated
    #[arg(long, value_parser = parse_list)]
    #[serde(default)]
    pub k: Option<Vec<i64>>,
}

impl CurveArgs {
    fn invariants(&self) -> Result<CurveInvariants, EngineError> {
        let mut k = self.k.clone().unwrap_or_default();
        if let Some(k0) = self.k0 {
            if k.is_empty() {
                k.push(k0);
            } else if k[0] != k0 {
                return Err(EngineError::InvalidInput(format!(
                    "--k0 {k0} disagrees with --k starting at {}",
                    k[0]
                )));
            }
        }
        CurveInvariants::new(self.n, self.d, self.g, &k)
    }
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct SurfaceArgs {
    /// Ambient dimension
    #[arg(long, default_value_t = 3)]
    #[serde(default = "three")]
    pub n: u32,
    /// Degree of a smooth surface in P^3 (sets the Chern numbers)
    #[arg(long, conflicts_with_all = ["k2", "c2", "kh", "h2"])]
    #[serde(default)]
    pub d: Option<i64>,
    #[arg(long, requires_all = ["c2", "kh", "h2"])]
    #[serde(default)]
    pub k2: Option<i64>,
    #[arg(long)]
    #[serde(default)]
    pub c2: Option<i64>,
    #[arg(long)]
    #[serde(default)]
    pub kh: Option<i64>,
    #[arg(long)]
    #[serde(default)]
    pub h2: Option<i64>,
}

fn three() -> u32 {
    3
}

impl SurfaceArgs {
    fn report(&self) -> Result<EnumerativeReport, EngineError> {
        match (self.d, self.k2, self.c2, self.kh, self.h2) {
            (Some(d), ..) if self.n == 3 => pipelines::surface_in_p3_report(d),
            (Some(_), ..) => Err(EngineError::InvalidInput(
                "--d describes a surface in P^3; give Chern numbers for other n".into(),
            )),
            (None, Some(k2), Some(c2), Some(kh), Some(h2)) => {
                pipelines::surface_report(self.n, &SurfaceChernNumbers { k2, c2, kh, h2 })
            }
            _ => Err(EngineError::InvalidInput(
                "give --d, or all of --k2 --c2 --kh --h2".into(),
            )),
        }
    }
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct HypersurfaceArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub d: i64,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct SalmonArgs {
    /// Space-curve degree (with --g, --k0, --k1) or surface degree (with --surface)
    #[arg(long)]
    pub d: i64,
    #[arg(long, default_value_t = 0)]
    #[serde(default)]
    pub g: i64,
    #[arg(long, default_value_t = 0)]
    #[serde(default)]
    pub k0: i64,
    #[arg(long, default_value_t = 0)]
    #[serde(default)]
    pub k1: i64,
    /// Report the classical values for a surface of degree d in P^3
    #[arg(long)]
    #[serde(default)]
    pub surface: bool,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct OracleArgs {
    /// Affine plane curve F(x, y), e.g. "x^2/4 + y^2 - 1"
    #[arg(long)]
    pub curve: String,
    #[arg(long, default_value_t = 0)]
    #[serde(default)]
    pub g: i64,
    #[arg(long, default_value_t = 0)]
    #[serde(default)]
    pub k0: i64,
    /// Declared degree, checked against the equation
    #[arg(long)]
    #[serde(default)]
    pub degree: Option<u32>,
}

#[derive(Clone, Debug, Subcommand, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Sweep {
    Curve {
        #[arg(long)]
        n: Span,
        #[arg(long)]
        d: Span,
        #[arg(long, default_value = "0")]
        g: Span,
        #[arg(long, default_value = "0")]
        k0: Span,
    },
    Surface {
        #[arg(long, default_value = "3")]
        n: Span,
        #[arg(long)]
        d: Span,
    },
    Hypersurface {
        #[arg(long)]
        n: Span,
        #[arg(long)]
        d: Span,
    },
    Osculating {
        #[arg(long)]
        n: Span,
        #[arg(long)]
        d: Span,
        #[arg(long, default_value = "0")]
        g: Span,
        #[arg(long, default_value = "0")]
        k0: Span,
    },
    Salmon {
        #[arg(long)]
        d: Span,
        #[arg(long, default_value = "0")]
        g: Span,
        #[arg(long, default_value = "0")]
        k0: Span,
        #[arg(long, default_value = "0")]
        k1: Span,
    },
}

#[derive(Clone, Debug, Subcommand, Serialize, Deserialize)]
#[serde(tag = "subcommand", rename_all = "lowercase")]
pub enum Command {
    /// Focal loci of a curve in P^n
    Curve(CurveArgs),
    /// Focal loci of a surface
    Surface(SurfaceArgs),
    /// Focal loci of a smooth hypersurface
    Hypersurface(HypersurfaceArgs),
    /// Osculating developables and the envelope of osculating hyperplanes
    Osculating(CurveArgs),
    /// Salmon's characters of a space curve, or classical surface values
    Salmon(SalmonArgs),
    /// Evolute of a plane curve by exact elimination
    Oracle(OracleArgs),
    /// Reports over a parameter grid
    #[command(subcommand)]
    Sweep(Sweep),
    /// Runs the acceptance grid
    Selftest,
}

#[derive(Clone, Debug, Parser)]
#[command(name = "evolutes", version, about = "Degrees of envelopes, evolutes and their cuspidal loci")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Write output here instead of standard output
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// JSON run configuration; command-line --format and --out take precedence
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

/// Run configuration, also accepted as a JSON file via `--config`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub command: Command,
    #[serde(default)]
    pub format: Format,
    #[serde(default)]
    pub out: Option<PathBuf>,
}

/// Output and exit status of one run.
#[derive(Debug)]
pub struct Outcome {
    /// Report text, or the error message when `failed` is set.
    pub output: String,
    pub exit: u8,
    pub failed: bool,
}

fn exit_for(e: &EngineError) -> u8 {
    use evolute_elimination::EliminationError as O;
    match e {
        EngineError::NonIntegral(_) | EngineError::Oracle(O::Inconclusive(_)) => EXIT_MISMATCH,
        _ => EXIT_INPUT,
    }
}

fn error_message(e: &EngineError) -> String {
    match e {
        EngineError::UnsupportedCodimension { .. } => format!("error: {e}\nsee: {CITE_RIMANYI}"),
        _ => format!("error: {e}"),
    }
}

fn grid<T: Sync>(
    points: Vec<T>,
    f: impl Fn(&T) -> Result<EnumerativeReport, EngineError> + Sync + Send,
) -> Result<Vec<EnumerativeReport>, EngineError> {
    points.par_iter().map(f).collect()
}

fn sweep(s: &Sweep) -> Result<Vec<EnumerativeReport>, EngineError> {
    let curve_points = |n: &Span, d: &Span, g: &Span, k0: &Span| -> Result<Vec<CurveInvariants>, EngineError> {
        let mut out = Vec::new();
        for n in n.values() {
            for d in d.values() {
                for g in g.values() {
                    for k0 in k0.values() {
                        let n = u32::try_from(n)
                            .map_err(|_| EngineError::InvalidInvariants(format!("n = {n}")))?;
                        out.push(CurveInvariants::new(n, d, g, &[k0])?);
                    }
                }
            }
        }
        Ok(out)
    };
    let dim = |n: i64| u32::try_from(n).map_err(|_| EngineError::InvalidInvariants(format!("n = {n}")));
    match s {
        Sweep::Curve { n, d, g, k0 } => grid(curve_points(n, d, g, k0)?, pipelines::curve_report),
        Sweep::Osculating { n, d, g, k0 } => grid(curve_points(n, d, g, k0)?, pipelines::osculating_report),
        Sweep::Surface { n, d } => {
            let mut pts = Vec::new();
            for n in n.values() {
                for d in d.values() {
                    pts.push((dim(n)?, d));
                }
            }
            grid(pts, |&(n, d)| {
                if n == 3 {
                    pipelines::surface_in_p3_report(d)
                } else {
                    let mut r = pipelines::surface_report(n, &SurfaceChernNumbers::in_p3(d))?;
                    r.flag("Chern numbers of a degree-d surface in P^3, embedded linearly");
                    Ok(r)
                }
            })
        }
        Sweep::Hypersurface { n, d } => {
            let mut pts = Vec::new();
            for n in n.values() {
                for d in d.values() {
                    pts.push((dim(n)?, d));
                }
            }
            grid(pts, |&(n, d)| pipelines::hypersurface_report(n, d))
        }
        Sweep::Salmon { d, g, k0, k1 } => {
            let mut pts = Vec::new();
            for d in d.values() {
                for g in g.values() {
                    for k0 in k0.values() {
                        for k1 in k1.values() {
                            pts.push(CurveInvariants::new(3, d, g, &[k0, k1])?);
                        }
                    }
                }
            }
            grid(pts, pipelines::salmon_consistency)
        }
    }
}

fn reports(cmd: &Command) -> Result<Vec<EnumerativeReport>, EngineError> {
    Ok(match cmd {
        Command::Curve(a) => vec![pipelines::curve_report(&a.invariants()?)?],
        Command::Surface(a) => vec![a.report()?],
        Command::Hypersurface(a) => vec![pipelines::hypersurface_report(a.n, a.d)?],
        Command::Osculating(a) => vec![pipelines::osculating_report(&a.invariants()?)?],
        Command::Salmon(a) if a.surface => vec![pipelines::salmon_reference_report(a.d)?],
        Command::Salmon(a) => {
            vec![pipelines::salmon_consistency(&CurveInvariants::new(3, a.d, a.g, &[a.k0, a.k1])?)?]
        }
        Command::Oracle(a) => vec![pipelines::oracle_report(&a.curve, a.g, a.k0, a.degree)?],
        Command::Sweep(s) => sweep(s)?,
        Command::Selftest => unreachable!("handled by run"),
    })
}

fn render(reports: &[EnumerativeReport], format: Format, many: bool) -> String {
    match format {
        Format::Text => reports.iter().map(|r| r.to_text()).collect::<Vec<_>>().join("\n"),
        Format::Json if many => {
            serde_json::to_string_pretty(reports).expect("reports serialize") + "\n"
        }
        Format::Json => reports[0].to_json() + "\n",
        Format::Csv => to_csv(reports).expect("in-memory csv"),
    }
}

pub fn run(config: &RunConfig) -> Outcome {
    if let Command::Selftest = config.command {
        let outcomes = selftest::run();
        let exit = if outcomes.iter().all(|o| o.passed) { EXIT_OK } else { EXIT_MISMATCH };
        let output = match config.format {
            Format::Json => serde_json::to_string_pretty(&outcomes).expect("serializes") + "\n",
            _ => selftest::render(&outcomes),
        };
        return Outcome { output, exit, failed: false };
    }
    match reports(&config.command) {
        Ok(rs) => {
            let exit = if rs.iter().all(|r| r.passed()) { EXIT_OK } else { EXIT_MISMATCH };
            let many = matches!(config.command, Command::Sweep(_));
            Outcome { output: render(&rs, config.format, many), exit, failed: false }
        }
        Err(e) => Outcome { output: error_message(&e), exit: exit_for(&e), failed: true },
    }
}

fn resolve(cli: Cli) -> Result<RunConfig, String> {
    let mut config = match (&cli.config, cli.command) {
        (Some(path), None) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            serde_json::from_str::<RunConfig>(&text)
                .map_err(|e| format!("{}: {e}", path.display()))?
        }
        (Some(_), Some(_)) => return Err("give either a subcommand or --config, not both".into()),
        (None, Some(command)) => RunConfig { command, format: Format::Text, out: None },
        (None, None) => return Err("no subcommand given; see --help".into()),
    };
    if let Some(f) = cli.format {
        config.format = f;
    }
    if cli.out.is_some() {
        config.out = cli.out;
    }
    Ok(config)
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match resolve(cli) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let outcome = run(&config);
    if outcome.failed {
        eprintln!("{}", outcome.output);
    } else if let Some(path) = &config.out {
        if let Err(e) = fs::write(path, &outcome.output) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(EXIT_INPUT);
        }
    } else {
        print!("{}", outcome.output);
    }
    ExitCode::from(outcome.exit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("2..10".parse::<Span>().unwrap().values().count(), 9);
        assert_eq!("3".parse::<Span>().unwrap(), Span { lo: 3, hi: 3 });
        assert_eq!("2..=4".parse::<Span>().unwrap(), Span { lo: 2, hi: 4 });
        assert!("5..2".parse::<Span>().is_err());
        assert!("a..2".parse::<Span>().is_err());
    }

    #[test]
    fn config_round_trip() {
        let text = r#"{"subcommand": "curve", "n": 3, "d": 3, "k0": 0, "format": "json"}"#;
        let c: RunConfig = serde_json::from_str(text).unwrap();
        assert_eq!(c.format, Format::Json);
        let out = run(&c);
        assert_eq!(out.exit, EXIT_OK);
        assert!(out.output.contains("\"engine_degree\": \"16\""));
        let sweep = r#"{"subcommand": "sweep", "family": "surface", "n": "3", "d": "2..4"}"#;
        let c: RunConfig = serde_json::from_str(sweep).unwrap();
        assert_eq!(run(&c).exit, EXIT_OK);
    }

    #[test]
    fn error_exits() {
        let bad = RunConfig {
            command: Command::Curve(CurveArgs { n: 3, d: 0, g: 0, k0: None, k: None }),
            format: Format::Text,
            out: None,
        };
        assert_eq!(run(&bad).exit, EXIT_INPUT);
    }
}
