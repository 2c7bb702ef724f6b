use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use spincorr::oracle::{QuadratureRule, DEFAULT_N_PHI, DEFAULT_N_THETA};
use spincorr::verify::{self, Suite, VerifyOptions};
use spincorr::MeasureSeries;
use spincorr_cli::config::{self, DEFAULT_STEPS};
use spincorr_cli::output::{write_csv, write_json};
use spincorr_cli::{run_sweep, CliError, FigurePreset, Format, SweepConfig};

#[derive(Parser)]
#[command(
    name = "spincorr",
    version,
    about = "Correlations of two coupled large spins at high temperature"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate measures for one spin pair over a uniform tJ grid.
    Sweep(SweepArgs),
    /// Emit the data behind figure 1, 2 or 3.
    Figure(FigureArgs),
    /// Run the invariant and oracle checks.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv or json (JSON lines with a metadata header).
    #[arg(long, default_value = "csv")]
    format: String,
}

#[derive(Args)]
struct SweepArgs {
    /// First spin, e.g. 1/2, 3/2 or 1.5.
    #[arg(long)]
    s1: String,
    /// Second spin; must be at least s1.
    #[arg(long)]
    s2: String,
    /// End of the tJ axis; one quantum period 2π·S2 by default.
    #[arg(long)]
    tj_max: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_STEPS)]
    steps: usize,
    /// Comma-separated identifiers: I, Jc, Jgg, Qgg, Cg, Qg, Co, Qo, fid, Qgg/I, Qg/I, Qo/I.
    #[arg(long)]
    measures: Option<String>,
    /// B, bits or figure.
    #[arg(long, default_value = "B")]
    units: String,
    /// Polarisation for --units bits.
    #[arg(long)]
    beta: Option<f64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct FigureArgs {
    /// Figure number.
    id: u8,
    #[arg(long, default_value_t = DEFAULT_STEPS)]
    steps: usize,
    /// Common end of the tJ axis; one quantum period per curve by default.
    #[arg(long)]
    tj_max: Option<f64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// analytic, oracle or all.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Tolerance applied to every check instead of the built-in ones.
    #[arg(long, allow_negative_numbers = true)]
    tol: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_N_THETA)]
    n_theta: usize,
    #[arg(long, default_value_t = DEFAULT_N_PHI)]
    n_phi: usize,
}

fn emit(runs: &[MeasureSeries], output: &OutputArgs, figure: Option<u8>) -> Result<(), CliError> {
    let format: Format = output.format.parse()?;
    let sink: Box<dyn Write> = match &output.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match format {
        Format::Csv => write_csv(sink, runs),
        Format::Json => write_json(sink, runs, figure),
    }
}

fn sweep(args: SweepArgs) -> Result<ExitCode, CliError> {
    let pair = config::parse_pair(&args.s1, &args.s2)?;
    let measures = match &args.measures {
        Some(list) => config::parse_measures(list)?,
        None => SweepConfig::default_measures(&pair),
    };
    let units = config::parse_units(&args.units, args.beta)?;
    let tj_max = args
        .tj_max
        .unwrap_or_else(|| SweepConfig::default_tj_max(&pair));
    let cfg = SweepConfig::new(pair, tj_max, args.steps, measures, units)?;
    emit(&[run_sweep(&cfg)?], &args.output, None)?;
    Ok(ExitCode::SUCCESS)
}

fn figure(args: FigureArgs) -> Result<ExitCode, CliError> {
    let preset = FigurePreset::from_id(args.id)?;
    let runs = preset
        .sweeps(args.steps, args.tj_max)?
        .iter()
        .map(run_sweep)
        .collect::<Result<Vec<_>, _>>()?;
    emit(&runs, &args.output, Some(preset.id()))?;
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let suite: Suite = args.suite.parse().map_err(CliError::Invalid)?;
    if args.n_theta == 0 || args.n_phi == 0 {
        return Err(CliError::Invalid(
            "quadrature orders must be positive".into(),
        ));
    }
    let options = VerifyOptions {
        tol: args.tol,
        rule: QuadratureRule::new(args.n_theta, args.n_phi),
    };
    let start = Instant::now();
    let report = verify::run(suite, &options);
    let mut stdout = io::stdout().lock();
    for check in &report.checks {
        writeln!(stdout, "{check}")?;
    }
    let failed = report.failures().count();
    writeln!(
        stdout,
        "{} of {} checks passed in {:.1} s",
        report.checks.len() - failed,
        report.checks.len(),
        start.elapsed().as_secs_f64()
    )?;
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sweep(args) => sweep(args),
        Command::Figure(args) => figure(args),
        Command::Verify(args) => verify(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
    }
}
