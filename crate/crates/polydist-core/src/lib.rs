//! Similarity measures for polygonal curves.
//!
//! The centerpiece is the discrete Fréchet distance, provided in five
//! equivalent formulations ranging from the classic recursive algorithm to a
//! recursion-free, branchless, linear-memory scan/fold kernel, together with
//! batched lane-parallel evaluation against a common reference curve.
//! Dynamic time warping and the Levenshtein distance are implemented in the
//! same row-streaming style.
//!
//! The crate is `no_std` (with `alloc`); IO, CLI and benchmarking live in the
//! companion `polydist-cli` crate.

#![no_std]

extern crate alloc;

pub mod batch;
pub mod combinators;
pub mod curve;
pub mod dtw;
pub mod error;
pub mod frechet;
pub mod levenshtein;
pub mod matrix;
pub mod metric;
pub mod scalar;

pub use batch::{
    baseline_sum, frechet_batch, frechet_batch_in, pad_batch, pad_batch_permuted, sort_by_length,
    CurveBatch,
};
pub use curve::{sample_width, PolygonalCurve};
pub use dtw::{dtw_distance, dtw_next, dtw_oracle};
pub use error::{Error, Result};
pub use frechet::{
    frechet_bruteforce, frechet_fast, frechet_fast_curves, frechet_full_matrix, frechet_inplace,
    frechet_linear, frechet_linear_in, frechet_next, frechet_prefix_matrix, frechet_recursive,
    frechet_recursive_with_limit, hausdorff_discrete, StateRow,
};
pub use levenshtein::{levenshtein_distance, levenshtein_oracle, levenshtein_str};
pub use matrix::{distance_matrix, row_source, DistanceMatrix, MatrixRows, RowSource, RowStream};
pub use metric::{Euclidean, Haversine, Metric, SqEuclidean};
pub use scalar::Real;
