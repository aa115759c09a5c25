//! The four subcommands as library calls.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use laneplan_core::ensemble::{run_ensemble, CompareResult, EnsembleSpec};
use laneplan_core::part1::simulate_part1;
use laneplan_core::part2::{simulate_part2, Budget};
use laneplan_core::stats::{class_count_sd, scale_class_counts, size_biased_expectation};
use laneplan_core::synth::synthesize_stream;
use laneplan_core::{Algorithm, CountingMode, InteriorTransit, SimOptions, SimulationReport, SynthConfig, VehicleRecord};

use crate::census::{parse_census, parse_counts};
use crate::chart::{line_chart, Series};
use crate::config::{parse_list, ConfigFile};
use crate::error::{CliError, Result};
use crate::vehicle_file::{parse_vehicles, write_vehicles};
use crate::json;

#[derive(Debug, Parser)]
#[command(name = "laneplan", version, about = "Lane planning for unplanned traffic")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one planner on a vehicle file and emit a JSON report.
    Simulate(SimulateArgs),
    /// Draw a seeded vehicle file from a census row scaled to a sample size.
    Sample(SampleArgs),
    /// Size-biased expectation and dispersion of a counts file.
    Stats(StatsArgs),
    /// Run a seeded ensemble of both planners and emit CSV, SVG and JSON.
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, value_parser = ["part1", "part2"])]
    pub algo: String,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value = "event")]
    pub mode: CountingMode,
    /// Lane budget for part2: a positive integer or `auto`.
    #[arg(long, default_value = "auto")]
    pub budget: Budget,
    #[arg(long, default_value = "lower")]
    pub interior: InteriorTransit,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub census: PathBuf,
    /// 1-based row index or row name.
    #[arg(long)]
    pub row: String,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[arg(long)]
    pub counts: PathBuf,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Comma-separated sample sizes.
    #[arg(long)]
    pub sizes: Option<String>,
    #[arg(long)]
    pub runs: Option<u32>,
    /// Ensemble base seed.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub mode: Option<CountingMode>,
    #[arg(long)]
    pub budget: Option<Budget>,
    #[arg(long)]
    pub interior: Option<InteriorTransit>,
    /// Directory receiving compare.csv, compare.svg and compare.json.
    #[arg(long)]
    pub out_dir: PathBuf,
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

pub fn run_simulation(
    vehicles: &[VehicleRecord],
    algorithm: Algorithm,
    budget: Budget,
    opts: SimOptions,
) -> Result<SimulationReport> {
    Ok(match algorithm {
        Algorithm::Part1 => simulate_part1(vehicles, opts)?,
        Algorithm::Part2 => simulate_part2(vehicles, budget.resolve(vehicles)?, opts)?,
    })
}

pub fn simulate(args: &SimulateArgs) -> Result<String> {
    let vehicles = parse_vehicles(&read_text(&args.input)?)?;
    let algorithm: Algorithm = args.algo.parse()?;
    let opts = SimOptions {
        mode: args.mode,
        interior: args.interior,
    };
    let report = run_simulation(&vehicles, algorithm, args.budget, opts)?;
    Ok(json::render(&json::report_value(&report)))
}

pub fn sample(args: &SampleArgs) -> Result<String> {
    let table = parse_census(&read_text(&args.census)?)?;
    let row = table
        .find_row(&args.row)
        .ok_or_else(|| CliError::Usage(format!("census has no row `{}`", args.row)))?;
    let counts = scale_class_counts(&table.counts(row)?, args.n)?;
    let mut synth = SynthConfig::default();
    if let Some(path) = &args.config {
        ConfigFile::parse(&read_text(path)?)?.apply_synth(&mut synth)?;
    }
    synth.seed = args.seed;
    let stream = synthesize_stream(&counts, &synth)?;
    Ok(write_vehicles(&stream.vehicles))
}

pub fn stats(args: &StatsArgs) -> Result<String> {
    let counts = parse_counts(&read_text(&args.counts)?)?;
    let expectation = size_biased_expectation(&counts, args.n)?;
    let sd = class_count_sd(&counts)?;
    Ok(json::render(&json::stats_value(&counts, args.n, expectation, sd)))
}

/// Rendered outputs of one ensemble.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareOutputs {
    pub csv: String,
    pub svg: String,
    pub json: String,
}

pub const CSV_HEADER: &str = "sampleSize,algorithm,meanTransitions,sdTransitions,minTransitions,maxTransitions";

pub fn compare_csv(result: &CompareResult) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in &result.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.sample_size, r.algorithm, r.mean_transitions, r.sd_transitions, r.min_transitions, r.max_transitions
        ));
    }
    out
}

pub fn compare_svg(result: &CompareResult) -> String {
    let series: Vec<Series<'_>> = [Algorithm::Part1, Algorithm::Part2]
        .into_iter()
        .map(|a| Series {
            name: a.as_str(),
            points: result.means(a).into_iter().map(|(n, m)| (n as f64, m)).collect(),
        })
        .collect();
    line_chart("Mean transitions by sample size", "sample size", "mean transitions", &series)
}

pub fn ensemble_spec(args: &CompareArgs) -> Result<EnsembleSpec> {
    let mut spec = EnsembleSpec::default();
    if let Some(path) = &args.config {
        ConfigFile::parse(&read_text(path)?)?.apply_ensemble(&mut spec)?;
    }
    if let Some(sizes) = &args.sizes {
        spec.sample_sizes = parse_list(sizes).map_err(|m| CliError::Usage(format!("--sizes: {m}")))?;
    }
    if let Some(runs) = args.runs {
        spec.runs_per_size = runs;
    }
    if let Some(seed) = args.seed {
        spec.base_seed = seed;
    }
    if let Some(mode) = args.mode {
        spec.options.mode = mode;
    }
    if let Some(budget) = args.budget {
        spec.part2_budget = budget;
    }
    if let Some(interior) = args.interior {
        spec.options.interior = interior;
    }
    spec.validate()?;
    Ok(spec)
}

pub fn compare(spec: &EnsembleSpec) -> Result<(CompareResult, CompareOutputs)> {
    let result = run_ensemble(spec)?;
    let outputs = CompareOutputs {
        csv: compare_csv(&result),
        svg: compare_svg(&result),
        json: json::render(&json::compare_value(spec, &result)),
    };
    Ok((result, outputs))
}

/// Writes every file to a temporary sibling first and renames only once all
/// writes succeeded.
pub fn write_all(files: &[(PathBuf, &str)]) -> Result<()> {
    let tmp_of = |p: &Path| {
        let mut name = p.file_name().unwrap_or_default().to_os_string();
        name.push(".tmp");
        p.with_file_name(name)
    };
    let mut written = Vec::new();
    for (path, contents) in files {
        let tmp = tmp_of(path);
        if let Err(source) = fs::write(&tmp, contents) {
            for t in &written {
                let _ = fs::remove_file(t);
            }
            return Err(CliError::Write { path: path.clone(), source });
        }
        written.push(tmp);
    }
    for ((path, _), tmp) in files.iter().zip(&written) {
        fs::rename(tmp, path).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        })?;
    }
    Ok(())
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => write_all(&[(path.clone(), text)]),
        None => stdout.write_all(text.as_bytes()).map_err(|source| CliError::Write {
            path: PathBuf::from("<stdout>"),
            source,
        }),
    }
}

pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Simulate(args) => emit(&args.out, &simulate(args)?, stdout),
        Command::Sample(args) => emit(&args.out, &sample(args)?, stdout),
        Command::Stats(args) => emit(&args.out, &stats(args)?, stdout),
        Command::Compare(args) => {
            let spec = ensemble_spec(args)?;
            let (_, outputs) = compare(&spec)?;
            fs::create_dir_all(&args.out_dir).map_err(|source| CliError::Write {
                path: args.out_dir.clone(),
                source,
            })?;
            write_all(&[
                (args.out_dir.join("compare.csv"), outputs.csv.as_str()),
                (args.out_dir.join("compare.svg"), outputs.svg.as_str()),
                (args.out_dir.join("compare.json"), outputs.json.as_str()),
            ])
        }
    }
}
