//! Multi-worker driver over independent curve chunks.
//!
//! Curves are split into fixed chunks (default `lane_width * 8`), each
//! chunk is padded and evaluated with the batch kernel, and results are
//! assembled by position. The chunking is independent of the worker count,
//! so the output is bit-identical for any number of workers.

use std::thread;

use polydist_core::{frechet_batch, pad_batch, Metric, PolygonalCurve, Real, Result};

/// Chunk size used by [`frechet_batch_parallel`]; amortizes scheduling
/// while keeping padding waste bounded after sorting.
pub fn default_chunk_size(lane_width: usize) -> usize {
    lane_width.max(1) * 8
}

/// Discrete Fréchet distance of every curve against `q`, in input order,
/// evaluated chunk-wise across `workers` threads.
pub fn frechet_batch_parallel<F, M>(
    curves: &[PolygonalCurve<F>],
    q: &PolygonalCurve<F>,
    m: &M,
    lane_width: usize,
    workers: usize,
) -> Result<Vec<F>>
where
    F: Real + Send + Sync,
    M: Metric<F> + Sync,
{
    let workers = workers.max(1);
    let chunk_size = default_chunk_size(lane_width);
    let chunks: Vec<&[PolygonalCurve<F>]> = curves.chunks(chunk_size).collect();

    let run_chunk = |chunk: &[PolygonalCurve<F>]| -> Result<Vec<F>> {
        let batch = pad_batch(chunk)?;
        frechet_batch(&batch, q, m, lane_width)
    };

    let results: Vec<Result<Vec<F>>> = if workers == 1 {
        chunks.iter().map(|c| run_chunk(c)).collect()
    } else {
        let mut slots: Vec<Result<Vec<F>>> = (0..chunks.len()).map(|_| Ok(Vec::new())).collect();
        thread::scope(|scope| {
            // Round-robin assignment: worker w owns chunks w, w+workers, ...
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let chunks = &chunks;
                    let run_chunk = &run_chunk;
                    scope.spawn(move || {
                        chunks
                            .iter()
                            .enumerate()
                            .skip(w)
                            .step_by(workers)
                            .map(|(idx, c)| (idx, run_chunk(c)))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            for h in handles {
                for (idx, r) in h.join().expect("worker panicked") {
                    slots[idx] = r;
                }
            }
        });
        slots
    };

    let mut out = Vec::with_capacity(curves.len());
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walk::gen_walk_set;
    use polydist_core::{frechet_linear, Euclidean};

    #[test]
    fn workers_do_not_change_results() {
        let curves: Vec<PolygonalCurve<f64>> = gen_walk_set(37, 20, 7)
            .into_iter()
            .enumerate()
            .map(|(k, c)| {
                // Mixed lengths.
                let keep = 1 + (k * 7) % 20;
                PolygonalCurve::new(c.as_flat()[..keep * 2].to_vec(), 2).unwrap()
            })
            .collect();
        let q = gen_walk_set::<f64>(1, 25, 99).pop().unwrap();

        let serial = frechet_batch_parallel(&curves, &q, &Euclidean, 4, 1).unwrap();
        let expected: Vec<f64> = curves
            .iter()
            .map(|c| frechet_linear(c, &q, &Euclidean).unwrap())
            .collect();
        assert_eq!(serial, expected);

        for workers in [2, 4, 8] {
            let got = frechet_batch_parallel(&curves, &q, &Euclidean, 4, workers).unwrap();
            assert_eq!(got, serial, "workers={workers}");
        }
    }
}
