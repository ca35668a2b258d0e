//! Batched, lane-parallel evaluation of the discrete Fréchet distance
//! between many curves and one reference curve.
//!
//! Curves are padded to a common length by repeating their last point
//! (which provably leaves the Fréchet distance unchanged) and laid out as a
//! lane-major P̃×B×D tensor. The DP recurrence is sequential in j, so
//! parallelism is exclusively across lanes: the inner loops advance
//! `lane_width` lanes in lockstep and never mix state between lanes.

use alloc::vec;
use alloc::vec::Vec;

use crate::curve::PolygonalCurve;
use crate::error::{Error, Result};
use crate::metric::Metric;
use crate::scalar::Real;

/// B curves padded to a common length, stored lane-major (point index
/// outermost, lane next, coordinate innermost).
#[derive(Debug, Clone)]
pub struct CurveBatch<F> {
    data: Vec<F>,
    lanes: usize,
    padded_len: usize,
    dim: usize,
    original_lengths: Vec<usize>,
    /// `permutation[k]` is the input position lane `k`'s result belongs to.
    permutation: Vec<usize>,
}

impl<F: Real> CurveBatch<F> {
    pub fn lanes(&self) -> usize {
        self.lanes
    }

    pub fn padded_len(&self) -> usize {
        self.padded_len
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn original_lengths(&self) -> &[usize] {
        &self.original_lengths
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// Point `i` of lane `k` (padded lanes repeat their last point).
    pub fn point(&self, i: usize, k: usize) -> &[F] {
        let base = (i * self.lanes + k) * self.dim;
        &self.data[base..base + self.dim]
    }

    /// Points `i` of lanes `k0..k0 + gw`, contiguous in lane order.
    fn lane_row(&self, i: usize, k0: usize, gw: usize) -> &[F] {
        let base = (i * self.lanes + k0) * self.dim;
        &self.data[base..base + gw * self.dim]
    }
}

/// Packs curves into a [`CurveBatch`], extending shorter lanes by repeating
/// their last point; the recorded permutation is the identity.
pub fn pad_batch<F: Real>(curves: &[PolygonalCurve<F>]) -> Result<CurveBatch<F>> {
    pad_batch_permuted(curves, (0..curves.len()).collect())
}

/// [`pad_batch`] for pre-sorted input: `permutation[k]` gives the original
/// input position of `curves[k]` (as returned by [`sort_by_length`]).
pub fn pad_batch_permuted<F: Real>(
    curves: &[PolygonalCurve<F>],
    permutation: Vec<usize>,
) -> Result<CurveBatch<F>> {
    let lanes = curves.len();
    if lanes == 0 {
        return Err(Error::EmptyBatch);
    }
    debug_assert_eq!(permutation.len(), lanes);
    let dim = curves[0].dim();
    for c in curves {
        if c.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: c.dim(),
            });
        }
    }
    let padded_len = curves.iter().map(|c| c.len()).max().unwrap();
    let mut data = Vec::new();
    let n = padded_len * lanes * dim;
    data.try_reserve_exact(n)
        .map_err(|_| Error::Alloc { elements: n })?;
    for i in 0..padded_len {
        for c in curves {
            let idx = i.min(c.len() - 1);
            data.extend_from_slice(c.point(idx));
        }
    }
    Ok(CurveBatch {
        data,
        lanes,
        padded_len,
        dim,
        original_lengths: curves.iter().map(|c| c.len()).collect(),
        permutation,
    })
}

/// Stable sort by curve length (non-decreasing). The returned permutation
/// maps sorted position back to input position, ready for
/// [`pad_batch_permuted`].
pub fn sort_by_length<F: Real>(
    curves: &[PolygonalCurve<F>],
) -> (Vec<PolygonalCurve<F>>, Vec<usize>) {
    let mut order: Vec<usize> = (0..curves.len()).collect();
    order.sort_by_key(|&k| curves[k].len());
    let sorted = order.iter().map(|&k| curves[k].clone()).collect();
    (sorted, order)
}

fn check_batch_dims<F: Real>(batch: &CurveBatch<F>, q: &PolygonalCurve<F>) -> Result<()> {
    if batch.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            left: batch.dim(),
            right: q.dim(),
        });
    }
    Ok(())
}

/// Discrete Fréchet distance of every lane against `q`, bit-exact with the
/// scalar `frechet_linear` per curve. Results are returned in input order.
///
/// `lane_width` is the number of lanes advanced in lockstep per inner step;
/// it affects only scheduling, never the values.
pub fn frechet_batch<F: Real, M: Metric<F>>(
    batch: &CurveBatch<F>,
    q: &PolygonalCurve<F>,
    m: &M,
    lane_width: usize,
) -> Result<Vec<F>> {
    let mut state = vec![F::zero(); batch.lanes() * q.len()];
    frechet_batch_in(batch, q, m, lane_width, &mut state)
}

/// [`frechet_batch`] with a caller-provided workspace of exactly
/// `batch.lanes() * q.len()` accumulator slots; no other per-cell state is
/// allocated.
pub fn frechet_batch_in<F: Real, M: Metric<F>>(
    batch: &CurveBatch<F>,
    q: &PolygonalCurve<F>,
    m: &M,
    lane_width: usize,
    state: &mut [F],
) -> Result<Vec<F>> {
    check_batch_dims(batch, q)?;
    let lanes = batch.lanes();
    let qn = q.len();
    if lane_width == 0 {
        return Err(Error::LengthMismatch { left: 0, right: 1 });
    }
    if state.len() != lanes * qn {
        return Err(Error::LengthMismatch {
            left: state.len(),
            right: lanes * qn,
        });
    }

    let mut out = vec![F::zero(); lanes];
    let mut lane0 = 0;
    for group in state.chunks_mut(lane_width * qn) {
        let gw = group.len() / qn;
        frechet_group(batch, q, m, lane0, gw, group);
        for kl in 0..gw {
            out[batch.permutation()[lane0 + kl]] = group[(qn - 1) * gw + kl];
        }
        lane0 += gw;
    }
    Ok(out)
}

/// Runs the linear-memory recurrence for `gw` lanes starting at `lane0`,
/// lockstep over the group's state row `v[j * gw + kl]`.
fn frechet_group<F: Real, M: Metric<F>>(
    batch: &CurveBatch<F>,
    q: &PolygonalCurve<F>,
    m: &M,
    lane0: usize,
    gw: usize,
    v: &mut [F],
) {
    let qn = q.len();
    let dim = batch.dim();
    // Per-lane distance scratch, O(lane_width); keeps the metric pass and
    // the min/max pass in separate loops so the latter vectorizes.
    let mut dist = vec![F::zero(); gw];
    // Disjoint row-(j-1) and row-j views of the state; bounds-check free in
    // the lane loops.
    fn rows<F>(v: &mut [F], j: usize, gw: usize) -> (&[F], &mut [F]) {
        let (a, b) = v[..(j + 1) * gw].split_at_mut(j * gw);
        (&a[(j - 1) * gw..], b)
    }
    // The 2-D branch gives the metric a compile-time point length.
    fn eval_row<F: Real, M: Metric<F>>(m: &M, row: &[F], qj: &[F], dim: usize, dist: &mut [F]) {
        if dim == 2 {
            for (dk, pt) in dist.iter_mut().zip(row.chunks_exact(2)) {
                *dk = m.eval(pt, qj);
            }
        } else {
            for (dk, pt) in dist.iter_mut().zip(row.chunks_exact(dim)) {
                *dk = m.eval(pt, qj);
            }
        }
    }

    let row0 = batch.lane_row(0, lane0, gw);
    eval_row(m, row0, q.point(0), dim, &mut dist);
    v[..gw].copy_from_slice(&dist);
    for j in 1..qn {
        eval_row(m, row0, q.point(j), dim, &mut dist);
        let (prev, cur) = rows(v, j, gw);
        for ((slot, &up), &d) in cur.iter_mut().zip(prev).zip(&dist) {
            *slot = up.max(d);
        }
    }

    for i in 1..batch.padded_len() {
        for j in (1..qn).rev() {
            let (prev, cur) = rows(v, j, gw);
            for (slot, &up) in cur.iter_mut().zip(prev) {
                *slot = up.min(*slot);
            }
        }
        let row = batch.lane_row(i, lane0, gw);
        eval_row(m, row, q.point(0), dim, &mut dist);
        for (slot, &d) in v[..gw].iter_mut().zip(&dist) {
            *slot = slot.max(d);
        }
        for j in 1..qn {
            eval_row(m, row, q.point(j), dim, &mut dist);
            let (prev, cur) = rows(v, j, gw);
            for ((slot, &up), &d) in cur.iter_mut().zip(prev).zip(&dist) {
                *slot = up.min(*slot).max(d);
            }
        }
    }
}

/// Per lane, the sum of all P̃×Q distance-matrix entries, with the same
/// loop order and lane layout as [`frechet_batch`]. The min/max dependency
/// chain is absent, so this is the throughput upper bound for the batch
/// kernel. Results in input order.
pub fn baseline_sum<F: Real, M: Metric<F>>(
    batch: &CurveBatch<F>,
    q: &PolygonalCurve<F>,
    m: &M,
) -> Result<Vec<F>> {
    check_batch_dims(batch, q)?;
    let lanes = batch.lanes();
    let mut acc = vec![F::zero(); lanes];
    let dim = batch.dim();
    for i in 0..batch.padded_len() {
        let row = batch.lane_row(i, 0, lanes);
        for j in 0..q.len() {
            let qj = q.point(j);
            // The 2-D branch gives the metric a compile-time point length.
            if dim == 2 {
                for (slot, pt) in acc.iter_mut().zip(row.chunks_exact(2)) {
                    *slot = *slot + m.eval(pt, qj);
                }
            } else {
                for (slot, pt) in acc.iter_mut().zip(row.chunks_exact(dim)) {
                    *slot = *slot + m.eval(pt, qj);
                }
            }
        }
    }
    let mut out = vec![F::zero(); lanes];
    for (k, &s) in acc.iter().enumerate() {
        out[batch.permutation()[k]] = s;
    }
    Ok(out)
}
