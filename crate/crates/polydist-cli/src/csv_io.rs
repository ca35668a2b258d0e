//! CSV formats: curve files (`id,c0,...,c{D-1}`, one point per line,
//! points of a curve contiguous) and benchmark result files.
//!
//! Parsing is locale-independent: decimal point, comma separator. Floats
//! are written with Rust's shortest round-trip formatting, so a 64-bit
//! save/load round trip is bit-exact.

use std::fmt::Display;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use polydist_core::{PolygonalCurve, Real};
use thiserror::Error;

use crate::bench::BenchRecord;

#[derive(Debug, Error)]
pub enum CsvError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
    #[error("{path}: {source}")]
    Curve {
        path: String,
        #[source]
        source: polydist_core::Error,
    },
}

fn parse_err(path: &Path, line: usize, message: impl Into<String>) -> CsvError {
    CsvError::Parse {
        path: path.display().to_string(),
        line,
        message: message.into(),
    }
}

/// Loads curves from a curve CSV file, preserving file order. Errors carry
/// 1-based line numbers.
pub fn load_curves_csv<F>(path: &Path) -> Result<Vec<(String, PolygonalCurve<F>)>, CsvError>
where
    F: Real + FromStr,
{
    let text = fs::read_to_string(path).map_err(|source| CsvError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let mut lines = text.lines().enumerate();

    let (_, header) = lines
        .next()
        .ok_or_else(|| parse_err(path, 1, "empty file, expected header"))?;
    let cols: Vec<&str> = header.split(',').collect();
    if cols.len() < 2 || cols[0] != "id" {
        return Err(parse_err(path, 1, "expected header id,c0,...,c{D-1}"));
    }
    for (k, c) in cols[1..].iter().enumerate() {
        if *c != format!("c{k}") {
            return Err(parse_err(path, 1, format!("expected column c{k}, found {c:?}")));
        }
    }
    let dim = cols.len() - 1;

    let mut curves: Vec<(String, Vec<F>)> = Vec::new();
    let mut seen: Vec<String> = Vec::new();
    for (idx, line) in lines {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != dim + 1 {
            return Err(parse_err(
                path,
                lineno,
                format!("expected {} fields, found {}", dim + 1, fields.len()),
            ));
        }
        let id = fields[0].to_string();
        match curves.last_mut() {
            Some((last_id, data)) if *last_id == id => {
                for f in &fields[1..] {
                    data.push(parse_coord(path, lineno, f)?);
                }
            }
            _ => {
                if seen.contains(&id) {
                    return Err(parse_err(
                        path,
                        lineno,
                        format!("points of curve {id:?} are not contiguous"),
                    ));
                }
                seen.push(id.clone());
                let mut data = Vec::new();
                for f in &fields[1..] {
                    data.push(parse_coord(path, lineno, f)?);
                }
                curves.push((id, data));
            }
        }
    }
    if curves.is_empty() {
        return Err(parse_err(path, 2, "file contains no points"));
    }

    curves
        .into_iter()
        .map(|(id, data)| {
            PolygonalCurve::new(data, dim)
                .map(|c| (id, c))
                .map_err(|source| CsvError::Curve {
                    path: path.display().to_string(),
                    source,
                })
        })
        .collect()
}

fn parse_coord<F: FromStr>(path: &Path, line: usize, field: &str) -> Result<F, CsvError> {
    field
        .trim()
        .parse()
        .map_err(|_| parse_err(path, line, format!("invalid number {field:?}")))
}

/// Writes curves in curve CSV format.
pub fn save_curves_csv<F>(
    path: &Path,
    curves: &[(String, PolygonalCurve<F>)],
) -> Result<(), CsvError>
where
    F: Real + Display,
{
    let dim = curves.first().map_or(2, |(_, c)| c.dim());
    let mut out = String::from("id");
    for k in 0..dim {
        out.push_str(&format!(",c{k}"));
    }
    out.push('\n');
    for (id, curve) in curves {
        for point in curve.points() {
            out.push_str(id);
            for c in point {
                out.push_str(&format!(",{c}"));
            }
            out.push('\n');
        }
    }
    fs::write(path, out).map_err(|source| CsvError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub const BENCH_CSV_HEADER: &str =
    "experiment,variant,n_curves,curve_len,lane_width,reps,warmup,total_seconds,pairs_per_second,checksum";

/// Writes benchmark records; an empty list yields a header-only file.
pub fn write_bench_csv(path: &Path, records: &[BenchRecord]) -> Result<(), CsvError> {
    let mut out = String::from(BENCH_CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            r.experiment,
            r.variant,
            r.n_curves,
            r.curve_len,
            r.lane_width,
            r.repetitions,
            r.warmup_reps,
            r.total_seconds,
            r.pairs_per_second,
            r.checksum,
        ));
    }
    fs::write(path, out).map_err(|source| CsvError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walk::{gen_random_walk, WalkSpec};

    fn tmp(name: &str) -> std::path::PathBuf {
        let dir = std::env::temp_dir().join("polydist-csv-tests");
        fs::create_dir_all(&dir).unwrap();
        dir.join(name)
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let curves: Vec<(String, PolygonalCurve<f64>)> = (0..3)
            .map(|k| {
                (
                    format!("walk{k}"),
                    gen_random_walk(WalkSpec { n_points: 40, seed: k }),
                )
            })
            .collect();
        let path = tmp("roundtrip.csv");
        save_curves_csv(&path, &curves).unwrap();
        let loaded = load_curves_csv::<f64>(&path).unwrap();
        assert_eq!(loaded, curves);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let path = tmp("bad.csv");
        fs::write(&path, "id,c0,c1\na,1.0,2.0\na,oops,3.0\n").unwrap();
        let err = load_curves_csv::<f64>(&path).unwrap_err();
        assert!(err.to_string().contains(":3:"), "{err}");

        fs::write(&path, "id,c0,c1\na,1.0\n").unwrap();
        let err = load_curves_csv::<f64>(&path).unwrap_err();
        assert!(err.to_string().contains(":2:"), "{err}");

        fs::write(&path, "x,c0\n").unwrap();
        let err = load_curves_csv::<f64>(&path).unwrap_err();
        assert!(err.to_string().contains(":1:"), "{err}");
    }

    #[test]
    fn non_contiguous_ids_rejected() {
        let path = tmp("split.csv");
        fs::write(&path, "id,c0,c1\na,0,0\nb,1,1\na,2,2\n").unwrap();
        let err = load_curves_csv::<f64>(&path).unwrap_err();
        assert!(err.to_string().contains("not contiguous"), "{err}");
    }

    #[test]
    fn empty_record_list_writes_header_only() {
        let path = tmp("empty_bench.csv");
        write_bench_csv(&path, &[]).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(text, format!("{BENCH_CSV_HEADER}\n"));
    }
}
