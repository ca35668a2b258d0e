//! Polygonal curves: ordered sequences of D-dimensional points.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::metric::Metric;
use crate::scalar::Real;

/// An ordered, nonempty sequence of points that all share one dimension.
///
/// Points are stored flat (row-major, one point after the other). NaN
/// coordinates are rejected at construction so the max/min selections of the
/// kernels are total.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonalCurve<F> {
    data: Vec<F>,
    dim: usize,
}

impl<F: Real> PolygonalCurve<F> {
    /// Builds a curve from flat coordinate data; `data.len()` must be a
    /// nonzero multiple of `dim`.
    pub fn new(data: Vec<F>, dim: usize) -> Result<Self> {
        if dim == 0 || data.is_empty() || data.len() % dim != 0 {
            return Err(Error::EmptyCurve);
        }
        if let Some(pos) = data.iter().position(|c| c.is_nan()) {
            return Err(Error::NanCoordinate { point: pos / dim });
        }
        Ok(Self { data, dim })
    }

    /// Convenience constructor for 2-D curves.
    pub fn from_xy(points: &[(F, F)]) -> Result<Self> {
        let mut data = Vec::with_capacity(points.len() * 2);
        for &(x, y) in points {
            data.push(x);
            data.push(y);
        }
        Self::new(data, 2)
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.data.len() / self.dim
    }

    /// A curve is never empty; provided for clippy's sake.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, i: usize) -> &[F] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> impl Iterator<Item = &[F]> {
        self.data.chunks_exact(self.dim)
    }

    pub fn as_flat(&self) -> &[F] {
        &self.data
    }

    /// Copy of this curve with point `i` duplicated `extra` additional times.
    pub fn with_repeated_point(&self, i: usize, extra: usize) -> Self {
        let mut data = Vec::with_capacity(self.data.len() + extra * self.dim);
        for (k, p) in self.points().enumerate() {
            data.extend_from_slice(p);
            if k == i {
                for _ in 0..extra {
                    data.extend_from_slice(p);
                }
            }
        }
        Self {
            data,
            dim: self.dim,
        }
    }
}

/// Largest distance between adjacent points of `p` (its sample width);
/// zero for a single-point curve.
pub fn sample_width<F: Real, M: Metric<F>>(p: &PolygonalCurve<F>, m: &M) -> F {
    let mut width = F::zero();
    for i in 1..p.len() {
        width = width.max(m.eval(p.point(i - 1), p.point(i)));
    }
    width
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::Euclidean;
    use alloc::vec;

    #[test]
    fn construction_rules() {
        assert_eq!(
            PolygonalCurve::<f64>::new(vec![], 2).unwrap_err(),
            Error::EmptyCurve
        );
        assert_eq!(
            PolygonalCurve::new(vec![1.0, 2.0, 3.0], 2).unwrap_err(),
            Error::EmptyCurve
        );
        assert_eq!(
            PolygonalCurve::new(vec![1.0, f64::NAN], 2).unwrap_err(),
            Error::NanCoordinate { point: 0 }
        );
        let c = PolygonalCurve::new(vec![1.0, 2.0, 3.0, 4.0], 2).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.point(1), &[3.0, 4.0]);
    }

    #[test]
    fn sample_width_cases() {
        let single = PolygonalCurve::from_xy(&[(0.0f64, 0.0)]).unwrap();
        assert_eq!(sample_width(&single, &Euclidean), 0.0);

        let c = PolygonalCurve::from_xy(&[(0.0f64, 0.0), (3.0, 4.0), (3.0, 5.0)]).unwrap();
        assert_eq!(sample_width(&c, &Euclidean), 5.0);
    }

    #[test]
    fn sample_width_matches_direct_loop() {
        // Deterministic pseudo-random walk, compared against a brute loop.
        let mut x = 0.0f64;
        let mut y = 0.0f64;
        let mut pts = vec![(x, y)];
        let mut s = 0x9e3779b97f4a7c15u64;
        for _ in 0..50 {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            x += ((s >> 32) % 7) as f64 - 3.0;
            y += ((s >> 48) % 7) as f64 - 3.0;
            pts.push((x, y));
        }
        let c = PolygonalCurve::from_xy(&pts).unwrap();
        let mut brute = 0.0f64;
        for w in pts.windows(2) {
            let d = (w[0].0 - w[1].0).hypot(w[0].1 - w[1].1);
            if d > brute {
                brute = d;
            }
        }
        assert_eq!(sample_width(&c, &Euclidean), brute);
    }
}
