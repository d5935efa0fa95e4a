//! Command-line front end for `phasecov`.
//!
//! The binary is a thin wrapper around [`execute`], which writes everything
//! it prints to a caller-supplied writer so the commands can be exercised
//! in-process.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use phasecov_core::dynamics::{classify_trajectory, evolve, SliceClass, DEFAULT_TOL};
use phasecov_core::io::{
    fmt17, fmt6, write_json, write_points_csv, write_report_csv, write_trajectory_csv,
};
use phasecov_core::volume::{
    analytic_volume, catalog_measure, mc_volume, sample_region_par, summary_report, Report,
    RowKind, Z_99,
};
use phasecov_core::{
    BaseRegion, ChannelError, DynamicsError, Hypersurface, Measure, PhaseCovChannel, RateSchedule,
    RegionSpec, VolumeError,
};

/// Deviation, in standard errors, beyond which `volume --mode both` fails.
pub const SIGMA_LIMIT: f64 = 4.0;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Numerical(String),
}

impl CliError {
    /// Process exit status: 2 for bad input or I/O, 3 for numerical failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

impl From<VolumeError> for CliError {
    fn from(e: VolumeError) -> Self {
        match e {
            VolumeError::EmptyRegionTimeout { .. } => CliError::Numerical(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<DynamicsError> for CliError {
    fn from(e: DynamicsError) -> Self {
        match e {
            DynamicsError::QuadratureFailure { .. } => CliError::Numerical(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "phasecov",
    version,
    about = "Geometry of phase-covariant qubit channels"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a single channel (λ₁, λ₃, λ★).
    #[command(allow_negative_numbers = true)]
    Check(CheckArgs),
    /// Closed-form and/or Monte Carlo volume of a region.
    Volume(VolumeArgs),
    /// Uniform point cloud inside a region.
    Sample(SampleArgs),
    /// Partition of the PT region into CPT/EBC/TLG cells.
    Report(ReportArgs),
    /// Integrate a rate schedule into a channel trajectory.
    Evolve(EvolveArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Analytic,
    Mc,
    Both,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed `{s}`: {e}"))
}

/// Accepts plain integers and exact float spellings such as `1e7`.
fn parse_count(s: &str) -> Result<u64, String> {
    if let Ok(n) = s.parse::<u64>() {
        return Ok(n);
    }
    match s.parse::<f64>() {
        Ok(x) if x >= 0.0 && x.fract() == 0.0 && x < 1.8e19 => Ok(x as u64),
        _ => Err(format!("`{s}` is not a non-negative integer")),
    }
}

fn parse_surface(s: &str) -> Result<Hypersurface, String> {
    s.parse().map_err(|e: VolumeError| e.to_string())
}

fn parse_region(s: &str) -> Result<BaseRegion, String> {
    s.parse().map_err(|e: VolumeError| e.to_string())
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// RNG seed, decimal or 0x-prefixed hex.
    #[arg(long, env = "PHASECOV_SEED", value_parser = parse_seed, default_value = "0xC0FFEE")]
    pub seed: u64,
    /// Worker threads (defaults to the available parallelism).
    #[arg(long)]
    pub workers: Option<usize>,
    /// Output file (stdout if omitted).
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

impl RunArgs {
    fn workers(&self) -> Result<usize, CliError> {
        match self.workers {
            Some(0) => Err(CliError::Usage("--workers must be at least 1".into())),
            Some(w) => Ok(w),
            None => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
        }
    }
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    /// Region: PT, CPT, EBC, TLG, PTxTLG, CPTxTLG or EBCxTLG.
    #[arg(value_parser = parse_region, conflicts_with = "region")]
    pub region_pos: Option<BaseRegion>,
    /// Surface: full, unital, iso, sym1d, l1zero or l3zero.
    #[arg(value_parser = parse_surface, conflicts_with = "surface")]
    pub surface_pos: Option<Hypersurface>,
    #[arg(long, value_parser = parse_region)]
    pub region: Option<BaseRegion>,
    #[arg(long, value_parser = parse_surface)]
    pub surface: Option<Hypersurface>,
}

impl RegionArgs {
    fn spec(&self) -> Result<RegionSpec, CliError> {
        let base = self
            .region
            .or(self.region_pos)
            .ok_or_else(|| CliError::Usage("a region is required".into()))?;
        let surface = self
            .surface
            .or(self.surface_pos)
            .unwrap_or(Hypersurface::Full3D);
        Ok(RegionSpec::new(base, surface))
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub lambda1: f64,
    pub lambda3: f64,
    pub lambda_star: f64,
    /// Slack allowed on every inequality.
    #[arg(long, default_value_t = 0.0)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VolumeArgs {
    #[command(flatten)]
    pub target: RegionArgs,
    #[arg(long, value_enum, default_value_t = Mode::Both)]
    pub mode: Mode,
    #[arg(short = 'N', long, value_parser = parse_count, default_value = "1000000")]
    pub samples: u64,
    #[command(flatten)]
    pub run: RunArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub target: RegionArgs,
    /// Number of accepted points.
    #[arg(short = 'n', long, value_parser = parse_count, default_value = "10000")]
    pub count: u64,
    #[command(flatten)]
    pub run: RunArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(value_parser = parse_surface, conflicts_with = "surface")]
    pub surface_pos: Option<Hypersurface>,
    #[arg(long, value_parser = parse_surface)]
    pub surface: Option<Hypersurface>,
    #[arg(short = 'N', long, value_parser = parse_count, default_value = "1000000")]
    pub samples: u64,
    #[command(flatten)]
    pub run: RunArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct EvolveArgs {
    /// Rate schedule JSON file.
    pub schedule: PathBuf,
    #[arg(long, default_value_t = 1.0)]
    pub t_end: f64,
    /// Number of grid points, including t = 0 and t_end.
    #[arg(long, default_value_t = 11)]
    pub grid: usize,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

/// Runs one parsed command, writing human-facing output to `stdout`.
pub fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Check(a) => cmd_check(&a, stdout),
        Command::Volume(a) => cmd_volume(&a, stdout),
        Command::Sample(a) => cmd_sample(&a, stdout),
        Command::Report(a) => cmd_report(&a, stdout),
        Command::Evolve(a) => cmd_evolve(&a, stdout),
    }
}

/// Sends `body` to `path`, or to `stdout` when no path is given.
fn emit(
    path: Option<&Path>,
    stdout: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let file = File::create(p)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display())))?;
            let mut w = BufWriter::new(file);
            body(&mut w)?;
            w.flush()?;
        }
        None => body(stdout)?,
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Debug, Serialize)]
struct CheckRecord {
    channel: PhaseCovChannel,
    pt: bool,
    positive: bool,
    cpt: bool,
    ebc: bool,
    tlg: bool,
    choi_spectrum: [f64; 4],
    invariant_state: Option<[f64; 3]>,
}

fn cmd_check(a: &CheckArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let c = PhaseCovChannel::new(a.lambda1, a.lambda3, a.lambda_star);
    if !c.as_array().iter().all(|x| x.is_finite()) {
        return Err(CliError::Usage("channel parameters must be finite".into()));
    }
    let class = SliceClass::of(&c, a.tol);
    let spectrum = c.choi_spectrum().sorted();
    let fixed = c.invariant_state();

    if a.format == Format::Json {
        let record = CheckRecord {
            channel: c,
            pt: class.pt,
            positive: class.positive,
            cpt: class.cpt,
            ebc: class.ebc,
            tlg: class.tlg,
            choi_spectrum: spectrum,
            invariant_state: fixed.as_ref().ok().map(|s| [s.x1, s.x2, s.x3]),
        };
        return Ok(write_json(out, &record)?);
    }

    writeln!(
        out,
        "channel   ({}, {}, {})",
        fmt6(c.lambda1),
        fmt6(c.lambda3),
        fmt6(c.lambda_star)
    )?;
    writeln!(out, "PT        {}", yes_no(class.pt))?;
    writeln!(out, "positive  {}", yes_no(class.positive))?;
    writeln!(out, "CPT       {}", yes_no(class.cpt))?;
    writeln!(out, "EBC       {}", yes_no(class.ebc))?;
    writeln!(out, "TLG       {}", yes_no(class.tlg))?;
    let eig: Vec<String> = spectrum.iter().map(|x| fmt6(*x)).collect();
    writeln!(out, "choi      {}", eig.join(" "))?;
    match fixed {
        Ok(s) => writeln!(out, "invariant (0, 0, {})", fmt6(s.x3))?,
        Err(ChannelError::DegenerateFixedPoint(_)) => {
            writeln!(out, "invariant none unique (lambda3 = 1)")?
        }
        Err(e) => return Err(CliError::Numerical(e.to_string())),
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct McRecord {
    mean: f64,
    #[serde(rename = "stdError")]
    std_error: f64,
    ci99: [f64; 2],
    samples: u64,
    seed: u64,
    hits: u64,
}

#[derive(Debug, Serialize)]
struct VolumeRecord {
    region: &'static str,
    surface: &'static str,
    measure: &'static str,
    analytic: Option<f64>,
    mc: Option<McRecord>,
    deviation_sigma: Option<f64>,
    within_tolerance: Option<bool>,
}

fn cmd_volume(a: &VolumeArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let spec = a.target.spec()?;
    let surface = spec.surface;
    let measure = catalog_measure(surface);
    let exact = analytic_volume(&spec).map(|v| v.in_measure(surface, measure));

    let mc = match a.mode {
        Mode::Analytic => None,
        Mode::Mc | Mode::Both => {
            let est = mc_volume(&spec, a.samples, a.run.seed, a.run.workers()?)?;
            let (mean, se) = est.in_measure(measure);
            Some(McRecord {
                mean,
                std_error: se,
                ci99: [mean - Z_99 * se, mean + Z_99 * se],
                samples: est.samples,
                seed: est.seed,
                hits: est.hits,
            })
        }
    };
    let deviation = match (a.mode, exact, &mc) {
        (Mode::Both, Some(x), Some(m)) => Some(sigma(m.mean - x, m.std_error)),
        _ => None,
    };
    let record = VolumeRecord {
        region: spec.base.name(),
        surface: surface.name(),
        measure: measure.name(),
        analytic: exact,
        mc,
        deviation_sigma: deviation,
        within_tolerance: deviation.map(|d| d.abs() <= SIGMA_LIMIT),
    };

    emit(a.run.out.as_deref(), stdout, |w| match a.format {
        Format::Json => write_json(w, &record),
        Format::Csv => write_volume_csv(w, &record),
        Format::Text => write_volume_text(w, &record),
    })?;

    match record.within_tolerance {
        Some(false) => Err(CliError::Numerical(format!(
            "Monte Carlo estimate is {} sigma from the closed form",
            fmt6(deviation.unwrap_or(f64::NAN))
        ))),
        _ => Ok(()),
    }
}

fn sigma(diff: f64, se: f64) -> f64 {
    if se > 0.0 {
        diff / se
    } else if diff == 0.0 {
        0.0
    } else {
        diff.signum() * f64::INFINITY
    }
}

fn write_volume_text(w: &mut dyn Write, r: &VolumeRecord) -> io::Result<()> {
    writeln!(w, "region    {}", r.region)?;
    writeln!(w, "surface   {}", r.surface)?;
    writeln!(w, "measure   {}", r.measure)?;
    match r.analytic {
        Some(x) => writeln!(w, "analytic  {}", fmt6(x))?,
        None => writeln!(w, "analytic  n/a")?,
    }
    if let Some(m) = &r.mc {
        writeln!(w, "mc        {} ± {}", fmt6(m.mean), fmt6(m.std_error))?;
        writeln!(w, "ci99      [{}, {}]", fmt6(m.ci99[0]), fmt6(m.ci99[1]))?;
        writeln!(w, "samples   {}", m.samples)?;
        writeln!(w, "seed      {:#x}", m.seed)?;
    }
    if let Some(d) = r.deviation_sigma {
        let verdict = if d.abs() <= SIGMA_LIMIT { "ok" } else { "FAIL" };
        writeln!(w, "deviation {} sigma ({verdict})", fmt6(d))?;
    }
    Ok(())
}

fn write_volume_csv(w: &mut dyn Write, r: &VolumeRecord) -> io::Result<()> {
    let opt = |x: Option<f64>| x.map(fmt17).unwrap_or_default();
    writeln!(
        w,
        "region,surface,measure,analytic,mc,std_error,samples,seed,hits,deviation_sigma"
    )?;
    let (mean, se, n, seed, hits) = match &r.mc {
        Some(m) => (
            fmt17(m.mean),
            fmt17(m.std_error),
            m.samples.to_string(),
            m.seed.to_string(),
            m.hits.to_string(),
        ),
        None => Default::default(),
    };
    writeln!(
        w,
        "{},{},{},{},{mean},{se},{n},{seed},{hits},{}",
        r.region,
        r.surface,
        r.measure,
        opt(r.analytic),
        opt(r.deviation_sigma)
    )
}

fn cmd_sample(a: &SampleArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let spec = a.target.spec()?;
    let count = usize::try_from(a.count).map_err(|_| CliError::Usage("count too large".into()))?;
    let points = sample_region_par(&spec, count, a.run.seed, a.run.workers()?)?;
    emit(a.run.out.as_deref(), stdout, |w| match a.format {
        Format::Json => write_json(w, &points),
        Format::Csv | Format::Text => write_points_csv(w, &points),
    })
}

fn cmd_report(a: &ReportArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let surface = a.surface.or(a.surface_pos).unwrap_or(Hypersurface::Full3D);
    let report = summary_report(surface, a.samples, a.run.seed, a.run.workers()?)?;
    emit(a.run.out.as_deref(), stdout, |w| match a.format {
        Format::Json => write_json(w, &report),
        Format::Csv => write_report_csv(w, &report),
        Format::Text => write_report_text(w, &report),
    })
}

fn write_report_text(w: &mut dyn Write, r: &Report) -> io::Result<()> {
    let measure = match r.measure {
        Measure::HilbertSchmidt => "Hilbert-Schmidt",
        Measure::Lebesgue => "flat",
    };
    writeln!(
        w,
        "surface {}, {measure} volumes, N = {}, seed {:#x}",
        r.surface, r.samples, r.seed
    )?;
    writeln!(
        w,
        "{:<6} {:<12} {:>12} {:>12} {:>12} {:>11} {:>9}",
        "kind", "name", "analytic", "mc", "stderr", "sigma", "of PT"
    )?;
    let opt = |x: Option<f64>| x.map(fmt6).unwrap_or_else(|| "n/a".into());
    for row in &r.rows {
        let kind = match row.kind {
            RowKind::Cell => "cell",
            RowKind::Region => "region",
        };
        writeln!(
            w,
            "{kind:<6} {:<12} {:>12} {:>12} {:>12} {:>11} {:>9}",
            row.name,
            opt(row.analytic),
            fmt6(row.mc),
            fmt6(row.std_error),
            opt(row.deviation_sigma),
            fmt6(row.mc_fraction_of_pt),
        )?;
    }
    Ok(())
}

fn cmd_evolve(a: &EvolveArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&a.schedule)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", a.schedule.display())))?;
    let schedule = RateSchedule::from_json(&text)?;
    let traj = evolve(&schedule, a.t_end, a.grid, a.tol)?;
    // Semigroups with a vanishing rate sit on the CPT boundary, so the
    // classification gets the same slack as the integration.
    let classes = classify_trajectory(&traj, a.tol);

    #[derive(Serialize)]
    struct Row<'a> {
        t: f64,
        #[serde(flatten)]
        channel: &'a PhaseCovChannel,
        #[serde(flatten)]
        class: &'a SliceClass,
    }
    let body = |w: &mut dyn Write| match a.format {
        Format::Json => {
            let rows: Vec<Row> = traj
                .times
                .iter()
                .zip(&traj.channels)
                .zip(&classes)
                .map(|((t, channel), class)| Row {
                    t: *t,
                    channel,
                    class,
                })
                .collect();
            write_json(w, &rows)
        }
        Format::Csv | Format::Text => write_trajectory_csv(w, &traj, &classes),
    };

    let summary = |w: &mut dyn Write| -> io::Result<()> {
        if let (Some((t, c)), Some(k)) = (traj.last(), classes.last()) {
            writeln!(
                w,
                "t = {}: ({}, {}, {})  PT {}  CPT {}  EBC {}  TLG {}",
                fmt6(t),
                fmt6(c.lambda1),
                fmt6(c.lambda3),
                fmt6(c.lambda_star),
                yes_no(k.pt),
                yes_no(k.cpt),
                yes_no(k.ebc),
                yes_no(k.tlg)
            )?;
        }
        Ok(())
    };

    match &a.out {
        Some(path) => {
            emit(Some(path), stdout, body)?;
            summary(stdout)?;
        }
        None => {
            body(stdout)?;
            summary(&mut io::stderr())?;
        }
    }
    Ok(())
}
