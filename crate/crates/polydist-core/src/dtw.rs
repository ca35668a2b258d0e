//! Dynamic time warping in the same row-streaming formulation as the
//! Fréchet kernels: the max selection is replaced by summation.
//!
//! Unlike the Fréchet distance, DTW does not satisfy the triangle
//! inequality (a frozen counterexample lives in the tests), so it is a
//! distance measure but not a metric.

use alloc::vec::Vec;

use crate::combinators::{scan, scan_same};
use crate::error::{Error, Result};
use crate::matrix::{DistanceMatrix, RowStream};
use crate::scalar::Real;

/// Advances the DTW state row by one distance-matrix row `x`.
///
/// `min(a[j-1], a[j])` is taken from pre-update values, then the new row is
/// the left scan of `min(acc, b) + x_j` with initial value `a[0] + x[0]`.
pub fn dtw_next<F: Real>(a: &[F], x: &[F]) -> Result<Vec<F>> {
    let q = a.len();
    if x.len() != q || q == 0 {
        return Err(Error::LengthMismatch {
            left: q,
            right: x.len(),
        });
    }
    let steps: Vec<(F, F)> = (1..q).map(|j| (a[j - 1].min(a[j]), x[j])).collect();
    let init = a[0] + x[0];
    Ok(scan(
        |&acc, &(b, xj): &(F, F)| acc.min(b) + xj,
        init,
        &steps,
    ))
}

/// DTW distance over lazily produced distance-matrix rows; O(Q) memory.
///
/// The first row is consumed by a running sum, subsequent rows by folding
/// [`dtw_next`]; the result is the last slot of the final row.
pub fn dtw_distance<F: Real, R: RowStream<F>>(rows: &mut R) -> Result<F> {
    let first = rows.next_row().ok_or(Error::EmptySequence)?;
    let mut v = scan_same(|&a, &x| a + x, first)?;
    while let Some(x) = rows.next_row() {
        v = dtw_next(&v, x)?;
    }
    Ok(*v.last().expect("nonempty row"))
}

/// Full-matrix DTW reference: `M[i][j] = d[i][j] + min(M[i-1][j],
/// M[i-1][j-1], M[i][j-1])`. O(PQ) memory; verification oracle.
pub fn dtw_oracle<F: Real>(d: &DistanceMatrix<F>) -> F {
    let (pn, qn) = (d.rows(), d.cols());
    let mut m = Vec::with_capacity(pn * qn);
    for i in 0..pn {
        for j in 0..qn {
            let cell = if i == 0 && j == 0 {
                d.get(0, 0)
            } else if i == 0 {
                m[j - 1] + d.get(0, j)
            } else if j == 0 {
                m[(i - 1) * qn] + d.get(i, 0)
            } else {
                let up: F = m[(i - 1) * qn + j];
                let diag: F = m[(i - 1) * qn + j - 1];
                let left: F = m[i * qn + j - 1];
                up.min(diag).min(left) + d.get(i, j)
            };
            m.push(cell);
        }
    }
    m[pn * qn - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::PolygonalCurve;
    use crate::matrix::{distance_matrix, row_source};
    use crate::metric::{Euclidean, Metric};
    use alloc::vec;

    #[test]
    fn next_examples() {
        assert_eq!(dtw_next(&[0.0], &[7.0]).unwrap(), vec![7.0]);
        // v1 = 0 + 1; v2 = min(1, min(0, 2)) + 1 = 1.
        assert_eq!(dtw_next(&[0.0, 2.0], &[1.0, 1.0]).unwrap(), vec![1.0, 1.0]);
        assert!(dtw_next(&[0.0, 2.0], &[1.0]).is_err());
    }

    #[test]
    fn next_matches_oracle_rows() {
        let d = DistanceMatrix::from_values(vec![0.3, 1.7, 0.2, 2.0, 0.1, 0.9], 3, 2).unwrap();
        // Row-by-row against the full DP.
        let mut full = vec![vec![0.0f64; 2]; 3];
        for i in 0..3 {
            for j in 0..2 {
                full[i][j] = match (i, j) {
                    (0, 0) => d.get(0, 0),
                    (0, _) => full[0][j - 1] + d.get(0, j),
                    (_, 0) => full[i - 1][0] + d.get(i, 0),
                    _ => full[i - 1][j]
                        .min(full[i - 1][j - 1])
                        .min(full[i][j - 1])
                        + d.get(i, j),
                };
            }
        }
        let mut v = scan_same(|&a: &f64, &x| a + x, d.row(0)).unwrap();
        assert_eq!(v, full[0]);
        for i in 1..3 {
            v = dtw_next(&v, d.row(i)).unwrap();
            assert_eq!(v, full[i]);
        }
    }

    #[test]
    fn distance_examples() {
        let c = PolygonalCurve::from_xy(&[(0.0f64, 0.0), (1.0, 2.0), (3.0, 1.0)]).unwrap();
        let mut rows = row_source(&c, &c, &Euclidean).unwrap();
        assert_eq!(dtw_distance(&mut rows).unwrap(), 0.0);

        // 1-D p = [0, 1, 2], q = [0, 2], |x - y| metric: full matrix by
        // hand is [[0, 2], [1, 1], [3, 1]], result 1.
        struct Abs1D;
        impl Metric<f64> for Abs1D {
            fn eval(&self, a: &[f64], b: &[f64]) -> f64 {
                (a[0] - b[0]).abs()
            }
            fn name(&self) -> &'static str {
                "abs1d"
            }
        }
        let p = PolygonalCurve::new(vec![0.0, 1.0, 2.0], 1).unwrap();
        let q = PolygonalCurve::new(vec![0.0, 2.0], 1).unwrap();
        let mut rows = row_source(&p, &q, &Abs1D).unwrap();
        assert_eq!(dtw_distance(&mut rows).unwrap(), 1.0);
        let d = distance_matrix(&p, &q, &Abs1D).unwrap();
        assert_eq!(dtw_oracle(&d), 1.0);
    }

    #[test]
    fn oracle_examples() {
        let d = DistanceMatrix::from_values(vec![0.0], 1, 1).unwrap();
        assert_eq!(dtw_oracle(&d), 0.0);
        let d = DistanceMatrix::from_values(vec![0.0, 2.0, 1.0, 1.0, 2.0, 0.0], 3, 2).unwrap();
        assert_eq!(dtw_oracle(&d), 1.0);
    }

    // DTW violates the triangle inequality. This concrete 1-D triple was
    // found by randomized search and is frozen as a regression case:
    // dtw(p, q) = 2 > dtw(p, r) + dtw(r, q) = 1 + 0.
    #[test]
    fn triangle_inequality_counterexample() {
        struct Abs1D;
        impl Metric<f64> for Abs1D {
            fn eval(&self, a: &[f64], b: &[f64]) -> f64 {
                (a[0] - b[0]).abs()
            }
            fn name(&self) -> &'static str {
                "abs1d"
            }
        }
        let p = PolygonalCurve::new(vec![0.0], 1).unwrap();
        let q = PolygonalCurve::new(vec![1.0, 1.0], 1).unwrap();
        let r = PolygonalCurve::new(vec![1.0], 1).unwrap();
        let dist = |a: &PolygonalCurve<f64>, b: &PolygonalCurve<f64>| {
            dtw_distance(&mut row_source(a, b, &Abs1D).unwrap()).unwrap()
        };
        let pq = dist(&p, &q);
        let pr = dist(&p, &r);
        let rq = dist(&r, &q);
        assert_eq!((pq, pr, rq), (2.0, 1.0, 0.0));
        assert!(pq > pr + rq);
    }
}
