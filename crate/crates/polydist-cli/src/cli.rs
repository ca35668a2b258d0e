//! The `polydist` command-line interface.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error.

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use polydist_core::{
    dtw_distance, frechet_linear, row_source, Euclidean, Haversine, Metric, PolygonalCurve,
    SqEuclidean,
};

use crate::bench::{BenchConfig, ExperimentKind, Variant};
use crate::csv_io::{load_curves_csv, save_curves_csv, write_bench_csv};
use crate::walk::gen_walk_set;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Parser)]
#[command(
    name = "polydist",
    about = "Curve similarity: discrete Fréchet distance, DTW, and benchmarks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate reproducible random-walk trajectories as curve CSV.
    Gen(GenArgs),
    /// Distance between two single-curve CSV files.
    Dist(DistArgs),
    /// Run a benchmark experiment and write a results CSV.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Points per trajectory.
    #[arg(long, default_value_t = 256)]
    n_points: usize,
    /// Number of trajectories.
    #[arg(long, default_value_t = 1)]
    n_curves: usize,
    /// RNG seed (SplitMix64); identical seeds give identical output.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Output curve CSV path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricName {
    Euclidean,
    SqEuclidean,
    Haversine,
}

#[derive(Clone, Copy, ValueEnum)]
enum Measure {
    Frechet,
    Dtw,
}

#[derive(Args)]
struct DistArgs {
    /// Curve CSV with exactly one curve.
    #[arg(long)]
    p: PathBuf,
    /// Curve CSV with exactly one curve.
    #[arg(long)]
    q: PathBuf,
    #[arg(long, value_enum, default_value = "euclidean")]
    metric: MetricName,
    #[arg(long, value_enum, default_value = "frechet")]
    measure: Measure,
}

#[derive(Clone, Copy, ValueEnum)]
enum Precision {
    F32,
    F64,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value = "vary-n")]
    experiment: ExperimentKind,
    /// Comma-separated subset of full_matrix,linear,fast,batch.
    #[arg(long, value_delimiter = ',', default_values_t = Variant::ALL)]
    variants: Vec<Variant>,
    /// Comma-separated sweep sizes (curve count or curve length).
    #[arg(long, value_delimiter = ',', default_values_t = vec![32usize, 64, 128, 256, 512, 1024])]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Timed repetitions per cell.
    #[arg(long, default_value_t = 2)]
    reps: usize,
    /// Untimed warm-up repetitions per cell.
    #[arg(long, default_value_t = 1)]
    warmup: usize,
    /// Lanes advanced per inner step of the batch kernel.
    #[arg(long, default_value_t = 16)]
    lane_width: usize,
    /// Worker threads for the batch variant.
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, value_enum, default_value = "f32")]
    precision: Precision,
    /// Fixed curve length for vary-n / fixed curve count for vary-p.
    #[arg(long, default_value_t = 256)]
    fixed_size: usize,
    /// Output bench CSV path.
    #[arg(long)]
    out: PathBuf,
}

/// Parses arguments from the environment and runs; returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Gen(args) => cmd_gen(&args),
        Command::Dist(args) => cmd_dist(&args),
        Command::Bench(args) => cmd_bench(&args),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_DATA
        }
    }
}

fn cmd_gen(args: &GenArgs) -> Result<(), String> {
    if args.n_points == 0 || args.n_curves == 0 {
        return Err("--n-points and --n-curves must be at least 1".into());
    }
    let curves: Vec<(String, PolygonalCurve<f64>)> =
        gen_walk_set(args.n_curves, args.n_points, args.seed)
            .into_iter()
            .enumerate()
            .map(|(k, c)| (format!("walk{k}"), c))
            .collect();
    save_curves_csv(&args.out, &curves).map_err(|e| e.to_string())
}

fn load_single(path: &PathBuf) -> Result<PolygonalCurve<f64>, String> {
    let mut curves = load_curves_csv::<f64>(path).map_err(|e| e.to_string())?;
    if curves.len() != 1 {
        return Err(format!(
            "{}: expected exactly one curve, found {}",
            path.display(),
            curves.len()
        ));
    }
    Ok(curves.pop().unwrap().1)
}

fn cmd_dist(args: &DistArgs) -> Result<(), String> {
    let p = load_single(&args.p)?;
    let q = load_single(&args.q)?;

    fn compute<M: Metric<f64>>(
        p: &PolygonalCurve<f64>,
        q: &PolygonalCurve<f64>,
        m: &M,
        measure: Measure,
    ) -> Result<f64, String> {
        match measure {
            Measure::Frechet => frechet_linear(p, q, m).map_err(|e| e.to_string()),
            Measure::Dtw => {
                let mut rows = row_source(p, q, m).map_err(|e| e.to_string())?;
                dtw_distance(&mut rows).map_err(|e| e.to_string())
            }
        }
    }

    let d = match args.metric {
        MetricName::Euclidean => compute(&p, &q, &Euclidean, args.measure)?,
        MetricName::SqEuclidean => compute(&p, &q, &SqEuclidean, args.measure)?,
        MetricName::Haversine => {
            let m = Haversine;
            m.validate_curve(&p).map_err(|e| e.to_string())?;
            m.validate_curve(&q).map_err(|e| e.to_string())?;
            compute(&p, &q, &m, args.measure)?
        }
    };
    println!("{d}");
    Ok(())
}

fn cmd_bench(args: &BenchArgs) -> Result<(), String> {
    if args.sizes.is_empty() {
        return Err("--sizes must not be empty".into());
    }
    if args.reps == 0 {
        return Err("--reps must be at least 1".into());
    }
    let cfg = BenchConfig {
        kind: args.experiment,
        variants: args.variants.clone(),
        sizes: args.sizes.clone(),
        seed: args.seed,
        reps: args.reps,
        warmup: args.warmup,
        lane_width: args.lane_width.max(1),
        workers: args.workers.max(1),
        fixed_curve_len: args.fixed_size,
        fixed_n_curves: args.fixed_size,
    };
    let records = match args.precision {
        Precision::F32 => crate::bench::run_experiment::<f32>(&cfg),
        Precision::F64 => crate::bench::run_experiment::<f64>(&cfg),
    };
    for r in &records {
        eprintln!(
            "{} {} n={} p={} {:.3}s {:.0} pairs/s",
            r.experiment, r.variant, r.n_curves, r.curve_len, r.total_seconds, r.pairs_per_second
        );
    }
    write_bench_csv(&args.out, &records).map_err(|e| e.to_string())
}
