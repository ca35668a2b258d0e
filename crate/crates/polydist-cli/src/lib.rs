//! Command-line companion to `polydist-core`: curve CSV IO, reproducible
//! random-walk generation, a multi-worker batch driver and the benchmark
//! harness behind the `polydist` binary.

pub mod bench;
pub mod cli;
pub mod csv_io;
pub mod parallel;
pub mod walk;

pub use cli::run;
