//! Benchmark harness: two experiments (vary the number of curves, vary the
//! curve length) over selectable kernel variants, with warm-up repetitions,
//! a monotonic clock and a checksum column that defends against dead-code
//! elimination.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use polydist_core::{
    frechet_fast_curves, frechet_full_matrix, frechet_linear, Euclidean, PolygonalCurve, Real,
};

use crate::parallel::frechet_batch_parallel;
use crate::walk::{gen_random_walk, gen_walk_set, WalkSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExperimentKind {
    /// Fixed curve length, sweep the number of curves.
    VaryN,
    /// Fixed number of curves, sweep the curve length.
    VaryP,
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExperimentKind::VaryN => "vary_n",
            ExperimentKind::VaryP => "vary_p",
        })
    }
}

impl FromStr for ExperimentKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vary-n" | "vary_n" => Ok(ExperimentKind::VaryN),
            "vary-p" | "vary_p" => Ok(ExperimentKind::VaryP),
            other => Err(format!("unknown experiment {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    FullMatrix,
    Linear,
    Fast,
    Batch,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::FullMatrix,
        Variant::Linear,
        Variant::Fast,
        Variant::Batch,
    ];
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::FullMatrix => "full_matrix",
            Variant::Linear => "linear",
            Variant::Fast => "fast",
            Variant::Batch => "batch",
        })
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "full_matrix" | "full-matrix" => Ok(Variant::FullMatrix),
            "linear" => Ok(Variant::Linear),
            "fast" => Ok(Variant::Fast),
            "batch" => Ok(Variant::Batch),
            other => Err(format!("unknown variant {other:?}")),
        }
    }
}

/// One benchmark cell result.
#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub experiment: ExperimentKind,
    pub variant: Variant,
    pub n_curves: usize,
    pub curve_len: usize,
    pub lane_width: usize,
    pub repetitions: usize,
    pub warmup_reps: usize,
    pub total_seconds: f64,
    pub pairs_per_second: f64,
    /// Sum of all computed distances over the timed repetitions.
    pub checksum: f64,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub kind: ExperimentKind,
    pub variants: Vec<Variant>,
    pub sizes: Vec<usize>,
    pub seed: u64,
    pub reps: usize,
    pub warmup: usize,
    pub lane_width: usize,
    pub workers: usize,
    /// Curve length used when `kind` is `VaryN`.
    pub fixed_curve_len: usize,
    /// Number of curves used when `kind` is `VaryP`.
    pub fixed_n_curves: usize,
}

impl BenchConfig {
    /// Desk-scale defaults: sweep 2^5..2^10 at a fixed size of 2^8.
    pub fn default_sweep(kind: ExperimentKind) -> Self {
        Self {
            kind,
            variants: Variant::ALL.to_vec(),
            sizes: vec![32, 64, 128, 256, 512, 1024],
            seed: 1,
            reps: 2,
            warmup: 1,
            lane_width: 16,
            workers: 1,
            fixed_curve_len: 256,
            fixed_n_curves: 256,
        }
    }
}

/// Runs one cell of a variant over a fixed data set and returns the sum of
/// the computed distances.
fn run_variant<F>(
    variant: Variant,
    curves: &[PolygonalCurve<F>],
    q: &PolygonalCurve<F>,
    lane_width: usize,
    workers: usize,
) -> F
where
    F: Real + Send + Sync,
{
    let m = Euclidean;
    match variant {
        Variant::FullMatrix => curves
            .iter()
            .map(|c| frechet_full_matrix(c, q, &m).unwrap())
            .fold(F::zero(), |a, x| a + x),
        Variant::Linear => curves
            .iter()
            .map(|c| frechet_linear(c, q, &m).unwrap())
            .fold(F::zero(), |a, x| a + x),
        Variant::Fast => curves
            .iter()
            .map(|c| frechet_fast_curves(c, q, &m).unwrap())
            .fold(F::zero(), |a, x| a + x),
        Variant::Batch => frechet_batch_parallel(curves, q, &m, lane_width, workers)
            .unwrap()
            .into_iter()
            .fold(F::zero(), |a, x| a + x),
    }
}

/// Runs the configured experiment; one record per (variant, size), cells
/// strictly sequential, warm-up repetitions untimed.
pub fn run_experiment<F>(cfg: &BenchConfig) -> Vec<BenchRecord>
where
    F: Real + Send + Sync,
{
    let mut records = Vec::new();
    for &size in &cfg.sizes {
        let (n_curves, curve_len) = match cfg.kind {
            ExperimentKind::VaryN => (size, cfg.fixed_curve_len),
            ExperimentKind::VaryP => (cfg.fixed_n_curves, size),
        };
        // Data depends only on (seed, size): checksums are comparable
        // across variants.
        let curves: Vec<PolygonalCurve<F>> = gen_walk_set(n_curves, curve_len, cfg.seed);
        let q: PolygonalCurve<F> = gen_random_walk(WalkSpec {
            n_points: curve_len,
            seed: cfg.seed ^ REFERENCE_SEED_SALT,
        });

        for &variant in &cfg.variants {
            for _ in 0..cfg.warmup {
                std::hint::black_box(run_variant(
                    variant,
                    &curves,
                    &q,
                    cfg.lane_width,
                    cfg.workers,
                ));
            }
            let mut checksum = 0.0f64;
            let start = Instant::now();
            for _ in 0..cfg.reps {
                let s = run_variant(variant, &curves, &q, cfg.lane_width, cfg.workers);
                checksum += s.to_f64().unwrap();
            }
            let total_seconds = start.elapsed().as_secs_f64();
            records.push(BenchRecord {
                experiment: cfg.kind,
                variant,
                n_curves,
                curve_len,
                lane_width: cfg.lane_width,
                repetitions: cfg.reps,
                warmup_reps: cfg.warmup,
                total_seconds,
                pairs_per_second: n_curves as f64 * cfg.reps as f64 / total_seconds,
                checksum,
            });
        }
    }
    records
}

// Fixed salt so the reference curve differs from the batch curves.
const REFERENCE_SEED_SALT: u64 = 0x0a5e_ed0f_0000_0001;
