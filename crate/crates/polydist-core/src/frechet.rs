//! Discrete Fréchet distance kernels.
//!
//! Five equivalent formulations of the same dynamic program
//! `M[i][j] = max(min(M[i-1][j], M[i-1][j-1], M[i][j-1]), d[i][j])`:
//!
//! * [`frechet_recursive`] — the classic memoized top-down reference,
//!   kept faithful (including the negative sentinel) but depth-limited and
//!   not meant for production use;
//! * [`frechet_full_matrix`] — bottom-up fill of the full P×Q table with
//!   explicit branch cases;
//! * [`frechet_inplace`] — branchless, overwrites a given distance matrix;
//! * [`frechet_linear`] — fused loops over a single length-Q state row,
//!   O(Q) memory, metric evaluated lazily per element;
//! * [`frechet_fast`] — the scan/fold formulation over a lazy [`RowStream`].
//!
//! All of them compose only max/min selections over metric outputs, so they
//! agree bit-exactly. [`frechet_bruteforce`] (exhaustive coupling
//! enumeration) and [`hausdorff_discrete`] serve as verification oracles.

use alloc::vec;
use alloc::vec::Vec;

use crate::combinators::{scan, scan_same, scan_same_in_place};
use crate::curve::PolygonalCurve;
use crate::error::{Error, Result};
use crate::matrix::{row_source, DistanceMatrix, RowStream};
use crate::metric::Metric;
use crate::scalar::Real;

/// Default combined-length budget for the recursive reference kernel.
pub const DEFAULT_RECURSION_LIMIT: usize = 10_000;

/// Size cap for exhaustive coupling enumeration.
pub const BRUTEFORCE_LIMIT: usize = 14;

/// The rolling DP row of the linear-memory kernels: after consuming row `i`
/// of the distance matrix, slot `j` holds the discrete Fréchet distance of
/// the prefixes `p[..=i]` and `q[..=j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateRow<F>(Vec<F>);

impl<F: Real> StateRow<F> {
    pub fn as_slice(&self) -> &[F] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> F {
        *self.0.last().expect("state row is nonempty")
    }
}

fn check_dims<F: Real>(p: &PolygonalCurve<F>, q: &PolygonalCurve<F>) -> Result<()> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            left: p.dim(),
            right: q.dim(),
        });
    }
    Ok(())
}

/// Advances the DP state row by one distance-matrix row `x`.
///
/// The element-wise `min(a[j-1], a[j])` is taken from pre-update values of
/// `a` (simultaneous semantics), then the new row is the left scan of
/// `max(min(acc, b), x_j)` with initial value `max(a[0], x[0])`.
pub fn frechet_next<F: Real>(a: &StateRow<F>, x: &[F]) -> Result<StateRow<F>> {
    let q = a.len();
    if x.len() != q {
        return Err(Error::LengthMismatch {
            left: q,
            right: x.len(),
        });
    }
    let steps: Vec<(F, F)> = (1..q).map(|j| (a.0[j - 1].min(a.0[j]), x[j])).collect();
    let init = a.0[0].max(x[0]);
    let row = scan(
        |&acc, &(b, xj): &(F, F)| acc.min(b).max(xj),
        init,
        &steps,
    );
    Ok(StateRow(row))
}

/// Scan/fold kernel over lazily produced distance-matrix rows; O(Q)
/// auxiliary memory.
pub fn frechet_fast<F: Real, R: RowStream<F>>(rows: &mut R) -> Result<F> {
    let first = rows.next_row().ok_or(Error::EmptySequence)?;
    let mut v = StateRow(scan_same(|&a, &x| a.max(x), first)?);
    while let Some(x) = rows.next_row() {
        v = frechet_next(&v, x)?;
    }
    Ok(v.last())
}

/// Linear-memory kernel with fused loops and lazy metric evaluation.
pub fn frechet_linear<F: Real, M: Metric<F>>(
    p: &PolygonalCurve<F>,
    q: &PolygonalCurve<F>,
    m: &M,
) -> Result<F> {
    let mut v = vec![F::zero(); q.len()];
    frechet_linear_in(p, q, m, &mut v)
}

/// [`frechet_linear`] writing into a caller-provided workspace of exactly
/// `q.len()` slots; no other allocation occurs.
pub fn frechet_linear_in<F: Real, M: Metric<F>>(
    p: &PolygonalCurve<F>,
    q: &PolygonalCurve<F>,
    m: &M,
    v: &mut [F],
) -> Result<F> {
    check_dims(p, q)?;
    let qn = q.len();
    if v.len() != qn {
        return Err(Error::LengthMismatch {
            left: v.len(),
            right: qn,
        });
    }

    // Row 1: running maximum of the first distance row.
    for (j, slot) in v.iter_mut().enumerate() {
        *slot = m.eval(p.point(0), q.point(j));
    }
    scan_same_in_place(|&a, &x| a.max(x), v);

    for i in 1..p.len() {
        let pi = p.point(i);
        // Element-wise min of adjacent slots from pre-update values;
        // right-to-left so v[j-1] is still the old value.
        for j in (1..qn).rev() {
            v[j] = v[j - 1].min(v[j]);
        }
        v[0] = v[0].max(m.eval(pi, q.point(0)));
        for j in 1..qn {
            v[j] = v[j - 1].min(v[j]).max(m.eval(pi, q.point(j)));
        }
    }
    Ok(v[qn - 1])
}

/// Bottom-up fill of the full P×Q table with the four explicit branch
/// cases; returns the final cell.
pub fn frechet_full_matrix<F: Real, M: Metric<F>>(
    p: &PolygonalCurve<F>,
    q: &PolygonalCurve<F>,
    m: &M,
) -> Result<F> {
    let table = frechet_prefix_matrix(p, q, m)?;
    Ok(table.get(table.rows() - 1, table.cols() - 1))
}

/// The full DP table: cell (i, j) is the discrete Fréchet distance of the
/// prefixes `p[..=i]` and `q[..=j]`.
pub fn frechet_prefix_matrix<F: Real, M: Metric<F>>(
    p: &PolygonalCurve<F>,
    q: &PolygonalCurve<F>,
    m: &M,
) -> Result<DistanceMatrix<F>> {
    check_dims(p, q)?;
    let (pn, qn) = (p.len(), q.len());
    let n = pn * qn;
    let mut cells: Vec<F> = Vec::new();
    cells
        .try_reserve_exact(n)
        .map_err(|_| Error::Alloc { elements: n })?;
    for i in 0..pn {
        for j in 0..qn {
            let d = m.eval(p.point(i), q.point(j));
            let cell = if i == 0 && j == 0 {
                d
            } else if i > 0 && j == 0 {
                cells[(i - 1) * qn].max(d)
            } else if i == 0 {
                cells[j - 1].max(d)
            } else {
                let up: F = cells[(i - 1) * qn + j];
                let diag: F = cells[(i - 1) * qn + j - 1];
                let left: F = cells[i * qn + j - 1];
                up.min(diag).min(left).max(d)
            };
            cells.push(cell);
        }
    }
    DistanceMatrix::from_values(cells, pn, qn)
}

/// Branchless in-place variant: consumes a distance matrix, overwriting the
/// first column and row with running maxima and the interior with the DP
/// recurrence; returns the final cell.
pub fn frechet_inplace<F: Real>(d: &mut DistanceMatrix<F>) -> F {
    let (pn, qn) = (d.rows(), d.cols());

    // Max-scan down the first column and along the first row.
    for i in 1..pn {
        let prev = d.get(i - 1, 0);
        let row = d.row_mut(i);
        row[0] = prev.max(row[0]);
    }
    scan_same_in_place(|&a: &F, &x| a.max(x), &mut d.row_mut(0)[..]);

    for i in 1..pn {
        let (prev, cur) = d.two_rows_mut(i - 1, i);
        for j in 1..qn {
            cur[j] = prev[j].min(prev[j - 1]).min(cur[j - 1]).max(cur[j]);
        }
    }
    d.get(pn - 1, qn - 1)
}

/// The classic recursive, memoized reference kernel with the `-1` unset
/// sentinel. Depth-limited; prefer the iterative kernels for real work.
pub fn frechet_recursive<F: Real, M: Metric<F>>(
    p: &PolygonalCurve<F>,
    q: &PolygonalCurve<F>,
    m: &M,
) -> Result<F> {
    frechet_recursive_with_limit(p, q, m, DEFAULT_RECURSION_LIMIT)
}

/// [`frechet_recursive`] with an explicit combined-length budget
/// (recursion depth is bounded by `p.len() + q.len()`).
pub fn frechet_recursive_with_limit<F: Real, M: Metric<F>>(
    p: &PolygonalCurve<F>,
    q: &PolygonalCurve<F>,
    m: &M,
    limit: usize,
) -> Result<F> {
    check_dims(p, q)?;
    let needed = p.len() + q.len();
    if needed > limit {
        return Err(Error::DepthLimit { needed, limit });
    }
    let qn = q.len();
    let sentinel = -F::one();
    let mut memo = vec![sentinel; p.len() * qn];

    fn eval<F: Real, M: Metric<F>>(
        p: &PolygonalCurve<F>,
        q: &PolygonalCurve<F>,
        m: &M,
        memo: &mut [F],
        qn: usize,
        i: usize,
        j: usize,
    ) -> F {
        if memo[i * qn + j] > -F::one() {
            return memo[i * qn + j];
        }
        let d = m.eval(p.point(i), q.point(j));
        let val = if i == 0 && j == 0 {
            d
        } else if i > 0 && j == 0 {
            eval(p, q, m, memo, qn, i - 1, 0).max(d)
        } else if i == 0 {
            eval(p, q, m, memo, qn, 0, j - 1).max(d)
        } else {
            let up = eval(p, q, m, memo, qn, i - 1, j);
            let diag = eval(p, q, m, memo, qn, i - 1, j - 1);
            let left = eval(p, q, m, memo, qn, i, j - 1);
            up.min(diag).min(left).max(d)
        };
        memo[i * qn + j] = val;
        val
    }

    Ok(eval(p, q, m, &mut memo, qn, p.len() - 1, qn - 1))
}

/// Exhaustive enumeration of all monotone couplings; exponential, capped at
/// `p.len() + q.len() <= 14`. Verification oracle only.
pub fn frechet_bruteforce<F: Real, M: Metric<F>>(
    p: &PolygonalCurve<F>,
    q: &PolygonalCurve<F>,
    m: &M,
) -> Result<F> {
    check_dims(p, q)?;
    let combined = p.len() + q.len();
    if combined > BRUTEFORCE_LIMIT {
        return Err(Error::SizeLimit {
            combined,
            limit: BRUTEFORCE_LIMIT,
        });
    }

    // Min over all monotone paths from (i, j) to (P-1, Q-1) of the max
    // distance along the path. Deliberately unmemoized: each path is
    // enumerated independently of the DP kernels it checks.
    fn best<F: Real, M: Metric<F>>(
        p: &PolygonalCurve<F>,
        q: &PolygonalCurve<F>,
        m: &M,
        i: usize,
        j: usize,
    ) -> F {
        let d = m.eval(p.point(i), q.point(j));
        let at_p = i == p.len() - 1;
        let at_q = j == q.len() - 1;
        if at_p && at_q {
            return d;
        }
        let mut rest = F::infinity();
        if !at_p {
            rest = rest.min(best(p, q, m, i + 1, j));
        }
        if !at_q {
            rest = rest.min(best(p, q, m, i, j + 1));
        }
        if !at_p && !at_q {
            rest = rest.min(best(p, q, m, i + 1, j + 1));
        }
        rest.max(d)
    }

    Ok(best(p, q, m, 0, 0))
}

/// Discrete Hausdorff distance: `max(max_i min_j d_ij, max_j min_i d_ij)`.
/// Always a lower bound for the discrete Fréchet distance.
pub fn hausdorff_discrete<F: Real, M: Metric<F>>(
    p: &PolygonalCurve<F>,
    q: &PolygonalCurve<F>,
    m: &M,
) -> Result<F> {
    check_dims(p, q)?;
    let directed = |a: &PolygonalCurve<F>, b: &PolygonalCurve<F>| {
        let mut worst = F::zero();
        for x in a.points() {
            let mut nearest = F::infinity();
            for y in b.points() {
                nearest = nearest.min(m.eval(x, y));
            }
            worst = worst.max(nearest);
        }
        worst
    };
    Ok(directed(p, q).max(directed(q, p)))
}

/// Convenience wrapper: [`frechet_fast`] over a lazy [`row_source`].
pub fn frechet_fast_curves<F: Real, M: Metric<F>>(
    p: &PolygonalCurve<F>,
    q: &PolygonalCurve<F>,
    m: &M,
) -> Result<F> {
    let mut rows = row_source(p, q, m)?;
    frechet_fast(&mut rows)
}
