//! `tricorr` command-line front end.
//!
//! Exit status: 0 on success, 2 for usage errors, 3 when a numerical
//! contract is violated (non-PSD state, non-finite output, failed
//! trajectory check).

mod config;
mod output;

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use tricorr::closed_form::{death_time, death_time_numeric, Measure, ThetaBc};
use tricorr::mc::{ensemble_estimate, PhaseMode, TrajectoryConfig};
use tricorr::pipeline::{linspace, sweep, SweepConfig};
use tricorr::{evolve_dephasing, make_state, Execution, Family, NoiseParams, PurityMix};

use config::ConfigFile;
use output::{Cell, Table};

/// Below this many trajectories the z-scores are not trusted.
const MIN_TRAJ: usize = 1000;

#[derive(Parser, Debug)]
#[command(name = "tricorr", version, about = "Correlation dynamics of three qubits under classical OU dephasing")]
struct Cli {
    /// key = value file; repeated keys form grids. Flags take precedence.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tabulate every measure on an (r, gamma/Gamma, Gamma t) grid.
    Scan(GridArgs),
    /// First time each measure crosses its threshold.
    DeathTime(GridArgs),
    /// Compare a trajectory ensemble against the exact dephased state.
    McVerify(McArgs),
}

#[derive(Args, Debug, Default)]
struct GridArgs {
    /// GHZ or W
    #[arg(long)]
    family: Option<String>,
    /// Purity grid (comma-separated or repeated)
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    r: Vec<f64>,
    /// gamma / Gamma grid
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    gamma_ratio: Vec<f64>,
    /// Last Gamma t of the time grid
    #[arg(long)]
    t_max: Option<f64>,
    /// Number of time points, including 0
    #[arg(long)]
    t_steps: Option<usize>,
    /// Subset of N, C, D, mabk, svetlichny
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    measures: Vec<String>,
    /// Evaluate through the full numeric pipeline instead of closed forms
    #[arg(long)]
    numeric: bool,
    /// Fixed theta_B + theta_C for both Bell operators (default: family optimum)
    #[arg(long, allow_hyphen_values = true)]
    theta_bc: Option<f64>,
    /// Output file (default stdout)
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv or json
    #[arg(long)]
    format: Option<String>,
}

#[derive(Args, Debug, Default)]
struct McArgs {
    #[command(flatten)]
    grid: GridArgs,
    /// Number of trajectories
    #[arg(long)]
    traj: Option<usize>,
    /// OU integration step (default 0.01 / gamma)
    #[arg(long)]
    dt: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    /// exact-phase or ou-path
    #[arg(long)]
    mode: Option<String>,
    /// z-score threshold for a pass
    #[arg(long)]
    sigma: Option<f64>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Numeric(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Numeric(m) => write!(f, "numerical error: {m}"),
        }
    }
}

impl From<tricorr::Error> for CliError {
    fn from(e: tricorr::Error) -> Self {
        use tricorr::Error as E;
        match e {
            E::NotHermitian(_)
            | E::NegativeEigenvalue(_)
            | E::ChannelContract(_)
            | E::NotXState(_)
            | E::AsymmetricXState(_)
            | E::NotDensityMatrix(_) => CliError::Numeric(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Usage(format!("i/o: {e}"))
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq)]
enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format '{s}' (expected csv or json)")),
        }
    }
}

fn parse<T: FromStr>(key: &str, v: &str) -> CliResult<T>
where
    T::Err: fmt::Display,
{
    v.parse::<T>().map_err(|e| CliError::Usage(format!("--{key} {v}: {e}")))
}

/// Flag value if given, else the config's, else `default`.
fn scalar<T: FromStr>(flag: Option<T>, cfg: &ConfigFile, key: &str, default: Option<T>) -> CliResult<T>
where
    T::Err: fmt::Display,
{
    if let Some(v) = flag {
        return Ok(v);
    }
    if let Some(v) = cfg.last(key) {
        return parse(key, v);
    }
    default.ok_or_else(|| CliError::Usage(format!("--{key} is required")))
}

fn list<T: FromStr + Clone>(flag: &[T], cfg: &ConfigFile, key: &str, default: &[T]) -> CliResult<Vec<T>>
where
    T::Err: fmt::Display,
{
    if !flag.is_empty() {
        return Ok(flag.to_vec());
    }
    let from_cfg = cfg.values(key);
    if !from_cfg.is_empty() {
        return from_cfg.iter().map(|v| parse(key, v)).collect();
    }
    Ok(default.to_vec())
}

/// Everything a subcommand needs, flags merged over the config file.
struct Settings {
    sweep: SweepConfig,
    out: Option<PathBuf>,
    format: Format,
}

fn resolve_grid(args: &GridArgs, cfg: &ConfigFile, t_max: f64, t_steps: usize) -> CliResult<Settings> {
    let family: Family = scalar(args.family.as_deref().map(str::to_string), cfg, "family", None)
        .and_then(|s: String| parse("family", &s))?;
    let r_grid = list(&args.r, cfg, "r", &[0.98])?;
    let gamma_ratio_grid = list(&args.gamma_ratio, cfg, "gamma-ratio", &[0.1, 10.0])?;
    let t_max: f64 = scalar(args.t_max, cfg, "t-max", Some(t_max))?;
    let t_steps: usize = scalar(args.t_steps, cfg, "t-steps", Some(t_steps))?;
    if !(t_max.is_finite() && t_max >= 0.0) {
        return Err(CliError::Usage(format!("--t-max must be finite and non-negative, got {t_max}")));
    }
    if t_steps == 0 || (t_steps > 1 && t_max == 0.0) {
        return Err(CliError::Usage("time grid must have at least one point and t-max > 0 when t-steps > 1".into()));
    }
    let names = list(&args.measures, cfg, "measures", &[])?;
    let measures = if names.is_empty() {
        Measure::ALL.to_vec()
    } else {
        let mut ms: Vec<Measure> = Vec::new();
        for n in &names {
            let m: Measure = parse("measures", n)?;
            if !ms.contains(&m) {
                ms.push(m);
            }
        }
        ms
    };
    let numeric = args.numeric || cfg.last("numeric").map(|v| parse::<bool>("numeric", v)).transpose()?.unwrap_or(false);
    let theta = match args.theta_bc {
        Some(x) => Some(x),
        None => cfg.last("theta-bc").map(|v| parse("theta-bc", v)).transpose()?,
    };
    if let Some(x) = theta {
        if !x.is_finite() {
            return Err(CliError::Usage(format!("--theta-bc must be finite, got {x}")));
        }
    }
    let format: Format = scalar(
        args.format.as_deref().map(str::to_string),
        cfg,
        "format",
        Some("csv".to_string()),
    )
    .and_then(|s: String| parse("format", &s))?;
    let out = args.out.clone().or_else(|| cfg.last("out").map(PathBuf::from));
    let sweep = SweepConfig {
        family,
        r_grid,
        gamma_ratio_grid,
        t_grid: linspace(t_max, t_steps),
        measures,
        theta: theta.map(ThetaBc::uniform),
        numeric,
    };
    sweep.validate()?;
    Ok(Settings { sweep, out, format })
}

fn margin(x: Option<f64>, threshold: f64) -> Cell {
    x.map(|v| v - threshold).into()
}

fn cmd_scan(s: &Settings) -> CliResult<Table> {
    let rows = sweep(&s.sweep, Execution::default())?;
    let mut table = Table::new(vec![
        "family",
        "r",
        "gamma_ratio",
        "Gt",
        "N",
        "C",
        "D",
        "mabk_minus_1",
        "svet_minus_4",
        "D_branch",
    ]);
    for rep in rows {
        table.push(vec![
            rep.family.to_string().into(),
            rep.r.into(),
            rep.gamma_ratio.into(),
            rep.t.into(),
            rep.n.into(),
            rep.c.into(),
            rep.d.into(),
            margin(rep.mabk, 1.0),
            margin(rep.svetlichny, 4.0),
            rep.d_branch.map_or(Cell::Missing, |b| b.to_string().into()),
        ]);
    }
    Ok(table)
}

fn cmd_death_time(s: &Settings) -> CliResult<Table> {
    let cfg = &s.sweep;
    let theta = cfg.theta.unwrap_or_else(|| ThetaBc::canonical(cfg.family));
    let mut table = Table::new(vec!["family", "measure", "r", "gamma_ratio", "Gt_death"]);
    for &r in &cfg.r_grid {
        for &g in &cfg.gamma_ratio_grid {
            let noise = NoiseParams::from_ratio(g)?;
            for &m in &cfg.measures {
                let t = if cfg.numeric {
                    death_time_numeric(cfg.family, m, &noise, r, &theta)?
                } else {
                    death_time(cfg.family, m, &noise, r, &theta)?
                };
                table.push(vec![
                    cfg.family.to_string().into(),
                    m.to_string().into(),
                    r.into(),
                    g.into(),
                    t.into(),
                ]);
            }
        }
    }
    Ok(table)
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Verdict {
    Pass,
    Fail,
    InsufficientStatistics,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::InsufficientStatistics => "insufficient-statistics",
        })
    }
}

struct McReport {
    table: Table,
    summary: Value,
    verdict: Verdict,
}

fn cmd_mc_verify(args: &McArgs, s: &Settings, cfg: &ConfigFile) -> CliResult<McReport> {
    let traj: usize = scalar(args.traj, cfg, "traj", Some(100_000))?;
    let seed: u64 = scalar(args.seed, cfg, "seed", Some(0))?;
    let mode: PhaseMode = scalar(args.mode.clone(), cfg, "mode", Some("exact-phase".to_string()))
        .and_then(|m: String| parse("mode", &m))?;
    let sigma: f64 = scalar(args.sigma, cfg, "sigma", Some(4.0))?;
    if !(sigma.is_finite() && sigma > 0.0) {
        return Err(CliError::Usage(format!("--sigma must be positive, got {sigma}")));
    }
    let dt_flag: Option<f64> = match args.dt {
        Some(v) => Some(v),
        None => cfg.last("dt").map(|v| parse("dt", v)).transpose()?,
    };

    let sw = &s.sweep;
    let mut table = Table::new(vec![
        "family", "r", "gamma_ratio", "Gt", "row", "col", "part", "estimate", "analytic", "std_err", "z",
    ]);
    let mut max_z: f64 = 0.0;
    for k in 0..sw.len() {
        let (r, g, t) = sw.point(k);
        let noise = NoiseParams::from_ratio(g)?;
        let dt = dt_flag.unwrap_or(0.01 / noise.bandwidth());
        let tc = TrajectoryConfig::new(traj, dt, seed, mode);
        let rho0 = make_state(&PurityMix::new(sw.family, r)?);
        let est = ensemble_estimate(&rho0, &noise, t, &tc)?;
        let exact = evolve_dephasing(&rho0, &noise, t)?;
        for i in 0..8 {
            for j in (i + 1)..8 {
                let se = est.std_err_at(i, j);
                let parts = [
                    ("re", est.mean[(i, j)].re, exact[(i, j)].re, se[0]),
                    ("im", est.mean[(i, j)].im, exact[(i, j)].im, se[1]),
                ];
                for (part, e, a, err) in parts {
                    let diff = e - a;
                    // a zero spread with a matching value is a deterministic element
                    let z = if err > 0.0 {
                        diff / err
                    } else if diff.abs() <= 1e-12 {
                        0.0
                    } else {
                        f64::INFINITY.copysign(diff)
                    };
                    max_z = max_z.max(z.abs());
                    table.push(vec![
                        sw.family.to_string().into(),
                        r.into(),
                        g.into(),
                        t.into(),
                        Cell::Int(i as u64),
                        Cell::Int(j as u64),
                        part.into(),
                        e.into(),
                        a.into(),
                        err.into(),
                        z.into(),
                    ]);
                }
            }
        }
    }
    let verdict = if traj < MIN_TRAJ {
        Verdict::InsufficientStatistics
    } else if max_z <= sigma {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let summary = json!({
        "family": sw.family.to_string(),
        "mode": mode.to_string(),
        "traj": traj,
        "seed": seed,
        "sigma": sigma,
        "max_abs_z": output::json_number(max_z),
        "verdict": verdict.to_string(),
    });
    Ok(McReport { table, summary, verdict })
}

fn open_out(path: Option<&Path>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn emit(table: &Table, extra: Option<&Value>, s: &Settings) -> CliResult<()> {
    let mut w = open_out(s.out.as_deref())?;
    match s.format {
        Format::Csv => table.write_csv(&mut w)?,
        Format::Json => {
            let body = match extra {
                Some(summary) => json!({ "summary": summary, "elements": table.to_json() }),
                None => table.to_json(),
            };
            serde_json::to_writer_pretty(&mut w, &body).map_err(io::Error::from)?;
            w.write_all(b"\n")?;
        }
    }
    w.flush()?;
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    let cfg = match &cli.config {
        Some(p) => ConfigFile::load(p).map_err(CliError::Usage)?,
        None => ConfigFile::default(),
    };
    match &cli.command {
        Command::Scan(a) => {
            let s = resolve_grid(a, &cfg, 5.0, 101)?;
            let table = cmd_scan(&s)?;
            if !table.all_finite() {
                return Err(CliError::Numeric("non-finite value in scan output".into()));
            }
            emit(&table, None, &s)
        }
        Command::DeathTime(a) => {
            let s = resolve_grid(a, &cfg, 5.0, 101)?;
            let table = cmd_death_time(&s)?;
            emit(&table, None, &s)
        }
        Command::McVerify(a) => {
            let s = resolve_grid(&a.grid, &cfg, 1.0, 2)?;
            let rep = cmd_mc_verify(a, &s, &cfg)?;
            emit(&rep.table, Some(&rep.summary), &s)?;
            if s.format == Format::Csv {
                eprintln!("{}", rep.summary);
            }
            match rep.verdict {
                Verdict::Fail => Err(CliError::Numeric(format!(
                    "trajectory ensemble deviates beyond {} standard errors",
                    rep.summary["sigma"]
                ))),
                _ => Ok(()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("tricorr: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
