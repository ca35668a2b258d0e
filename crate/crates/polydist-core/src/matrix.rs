//! Distance matrices, eager and lazily streamed by row.

use alloc::vec;
use alloc::vec::Vec;

use crate::curve::PolygonalCurve;
use crate::error::{Error, Result};
use crate::metric::Metric;
use crate::scalar::Real;

/// Eager row-major P×Q matrix of pairwise distances.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix<F> {
    values: Vec<F>,
    rows: usize,
    cols: usize,
}

impl<F: Real> DistanceMatrix<F> {
    pub fn from_values(values: Vec<F>, rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 || values.len() != rows * cols {
            return Err(Error::LengthMismatch {
                left: values.len(),
                right: rows * cols,
            });
        }
        Ok(Self { values, rows, cols })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        self.values[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.values[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [F] {
        &mut self.values[i * self.cols..(i + 1) * self.cols]
    }

    /// Mutable access to two distinct rows at once (`i < k`).
    pub(crate) fn two_rows_mut(&mut self, i: usize, k: usize) -> (&mut [F], &mut [F]) {
        debug_assert!(i < k);
        let (a, b) = self.values.split_at_mut(k * self.cols);
        (
            &mut a[i * self.cols..(i + 1) * self.cols],
            &mut b[..self.cols],
        )
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    /// Streams the rows of this matrix.
    pub fn row_stream(&self) -> MatrixRows<'_, F> {
        MatrixRows {
            matrix: self,
            next: 0,
        }
    }
}

/// Eagerly evaluated P×Q distance matrix between two curves.
pub fn distance_matrix<F: Real, M: Metric<F>>(
    p: &PolygonalCurve<F>,
    q: &PolygonalCurve<F>,
    m: &M,
) -> Result<DistanceMatrix<F>> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            left: p.dim(),
            right: q.dim(),
        });
    }
    let n = p.len() * q.len();
    let mut values = Vec::new();
    values
        .try_reserve_exact(n)
        .map_err(|_| Error::Alloc { elements: n })?;
    for a in p.points() {
        for b in q.points() {
            values.push(m.eval(a, b));
        }
    }
    DistanceMatrix::from_values(values, p.len(), q.len())
}

/// A single-consumer producer of distance-matrix rows in ascending order.
///
/// Implementors hold O(Q) state so the quadratic matrix never materializes.
pub trait RowStream<F> {
    /// Length Q of each row.
    fn row_len(&self) -> usize;

    /// Number of rows not yet produced.
    fn rows_remaining(&self) -> usize;

    /// The next row, or `None` when all P rows have been produced.
    fn next_row(&mut self) -> Option<&[F]>;
}

/// Lazy row producer backed by a curve pair and a metric; auxiliary storage
/// is a single reusable Q-element buffer.
pub struct RowSource<'a, F, M> {
    p: &'a PolygonalCurve<F>,
    q: &'a PolygonalCurve<F>,
    metric: &'a M,
    next_i: usize,
    buf: Vec<F>,
}

/// Streams the rows `distance_matrix(p, q, m)` would contain without
/// allocating more than one row.
pub fn row_source<'a, F: Real, M: Metric<F>>(
    p: &'a PolygonalCurve<F>,
    q: &'a PolygonalCurve<F>,
    m: &'a M,
) -> Result<RowSource<'a, F, M>> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            left: p.dim(),
            right: q.dim(),
        });
    }
    Ok(RowSource {
        p,
        q,
        metric: m,
        next_i: 0,
        buf: vec![F::zero(); q.len()],
    })
}

impl<F: Real, M: Metric<F>> RowStream<F> for RowSource<'_, F, M> {
    fn row_len(&self) -> usize {
        self.q.len()
    }

    fn rows_remaining(&self) -> usize {
        self.p.len() - self.next_i
    }

    fn next_row(&mut self) -> Option<&[F]> {
        if self.next_i >= self.p.len() {
            return None;
        }
        let a = self.p.point(self.next_i);
        for (j, slot) in self.buf.iter_mut().enumerate() {
            *slot = self.metric.eval(a, self.q.point(j));
        }
        self.next_i += 1;
        Some(&self.buf)
    }
}

/// Row stream over an already materialized [`DistanceMatrix`].
pub struct MatrixRows<'a, F> {
    matrix: &'a DistanceMatrix<F>,
    next: usize,
}

impl<F: Real> RowStream<F> for MatrixRows<'_, F> {
    fn row_len(&self) -> usize {
        self.matrix.cols()
    }

    fn rows_remaining(&self) -> usize {
        self.matrix.rows() - self.next
    }

    fn next_row(&mut self) -> Option<&[F]> {
        if self.next >= self.matrix.rows() {
            return None;
        }
        let row = self.matrix.row(self.next);
        self.next += 1;
        Some(row)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::Euclidean;

    #[test]
    fn matrix_examples() {
        let p = PolygonalCurve::from_xy(&[(0.0f64, 0.0)]).unwrap();
        let q = PolygonalCurve::from_xy(&[(0.0f64, 0.0), (3.0, 4.0)]).unwrap();
        let d = distance_matrix(&p, &q, &Euclidean).unwrap();
        assert_eq!(d.row(0), &[0.0, 5.0]);

        let c = PolygonalCurve::from_xy(&[(1.0f64, 2.0), (3.0, 4.0)]).unwrap();
        let d = distance_matrix(&c, &c, &Euclidean).unwrap();
        assert_eq!(d.get(0, 0), 0.0);
        assert_eq!(d.get(1, 1), 0.0);

        let p = PolygonalCurve::from_xy(&[(0.0f64, 0.0), (2.0, 0.0)]).unwrap();
        let q = PolygonalCurve::from_xy(&[(0.0f64, 0.0), (1.0, 2.0), (2.0, 0.0)]).unwrap();
        let d = distance_matrix(&p, &q, &Euclidean).unwrap();
        let r5 = 5.0f64.sqrt();
        assert_eq!(d.row(0), &[0.0, r5, 2.0]);
        assert_eq!(d.row(1), &[2.0, r5, 0.0]);
    }

    #[test]
    fn dimension_mismatch() {
        let p = PolygonalCurve::new(alloc::vec![0.0f64, 1.0, 2.0], 3).unwrap();
        let q = PolygonalCurve::from_xy(&[(0.0f64, 0.0)]).unwrap();
        assert!(distance_matrix(&p, &q, &Euclidean).is_err());
        assert!(row_source(&p, &q, &Euclidean).is_err());
    }

    #[test]
    fn row_source_matches_matrix() {
        let p = PolygonalCurve::from_xy(&[(0.0f64, 0.0), (2.0, 1.0), (4.0, -1.0)]).unwrap();
        let q = PolygonalCurve::from_xy(&[(1.0f64, 1.0), (3.0, 0.0)]).unwrap();
        let d = distance_matrix(&p, &q, &Euclidean).unwrap();
        let mut src = row_source(&p, &q, &Euclidean).unwrap();
        assert_eq!(src.rows_remaining(), 3);
        for i in 0..3 {
            let row = src.next_row().unwrap();
            assert_eq!(row, d.row(i));
        }
        assert!(src.next_row().is_none());
        assert_eq!(src.rows_remaining(), 0);
    }

    #[test]
    fn row_source_single_row() {
        let p = PolygonalCurve::from_xy(&[(0.0f64, 0.0)]).unwrap();
        let q = PolygonalCurve::from_xy(&[(0.0f64, 0.0), (3.0, 4.0)]).unwrap();
        let mut src = row_source(&p, &q, &Euclidean).unwrap();
        assert_eq!(src.next_row().unwrap(), &[0.0, 5.0]);
        assert!(src.next_row().is_none());
    }
}
