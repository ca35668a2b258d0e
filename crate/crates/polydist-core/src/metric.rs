//! Point-pair distance functions.
//!
//! Kernels are generic over [`Metric`] and make no assumptions beyond
//! nonnegativity, so user-defined metrics plug in directly.

use crate::curve::PolygonalCurve;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// A pluggable distance function between two points of equal dimension.
pub trait Metric<F: Real> {
    /// Distance between `a` and `b`. Callers guarantee `a.len() == b.len()`.
    fn eval(&self, a: &[F], b: &[F]) -> F;

    fn name(&self) -> &'static str;

    /// Length-checked evaluation.
    fn try_eval(&self, a: &[F], b: &[F]) -> Result<F> {
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch {
                left: a.len(),
                right: b.len(),
            });
        }
        Ok(self.eval(a, b))
    }
}

/// ℓ² norm of `a - b`. Uses `hypot` for 2-D points; higher dimensions use a
/// scaled square root of the sum of squares to avoid overflow/underflow.
#[derive(Debug, Clone, Copy, Default)]
pub struct Euclidean;

impl<F: Real> Metric<F> for Euclidean {
    fn eval(&self, a: &[F], b: &[F]) -> F {
        debug_assert_eq!(a.len(), b.len());
        if a.len() == 2 {
            return (a[0] - b[0]).hypot(a[1] - b[1]);
        }
        let mut scale = F::zero();
        for (&x, &y) in a.iter().zip(b) {
            scale = scale.max((x - y).abs());
        }
        if scale == F::zero() {
            return F::zero();
        }
        let mut sum = F::zero();
        for (&x, &y) in a.iter().zip(b) {
            let t = (x - y) / scale;
            sum = sum + t * t;
        }
        scale * sum.sqrt()
    }

    fn name(&self) -> &'static str {
        "euclidean"
    }
}

/// Squared ℓ² norm of `a - b` (no square root).
#[derive(Debug, Clone, Copy, Default)]
pub struct SqEuclidean;

impl<F: Real> Metric<F> for SqEuclidean {
    fn eval(&self, a: &[F], b: &[F]) -> F {
        debug_assert_eq!(a.len(), b.len());
        let mut sum = F::zero();
        for (&x, &y) in a.iter().zip(b) {
            let d = x - y;
            sum = sum + d * d;
        }
        sum
    }

    fn name(&self) -> &'static str {
        "sq-euclidean"
    }
}

/// Great-circle distance in meters between (latitude, longitude) points
/// given in degrees, on a sphere of radius 6 371 000 m.
#[derive(Debug, Clone, Copy, Default)]
pub struct Haversine;

/// Mean Earth radius in meters.
pub const EARTH_RADIUS_M: f64 = 6_371_000.0;

impl Haversine {
    /// Checks that a curve is 2-D with latitudes in [-90, 90] and
    /// longitudes in [-180, 180].
    pub fn validate_curve<F: Real>(&self, c: &PolygonalCurve<F>) -> Result<()> {
        if c.dim() != 2 {
            return Err(Error::DimensionMismatch {
                left: c.dim(),
                right: 2,
            });
        }
        let lat_max = F::from_f64(90.0).unwrap();
        let lon_max = F::from_f64(180.0).unwrap();
        for (i, p) in c.points().enumerate() {
            if p[0].abs() > lat_max || p[1].abs() > lon_max {
                return Err(Error::CoordinateRange { point: i });
            }
        }
        Ok(())
    }
}

impl<F: Real> Metric<F> for Haversine {
    fn eval(&self, a: &[F], b: &[F]) -> F {
        debug_assert_eq!(a.len(), 2);
        debug_assert_eq!(b.len(), 2);
        let rad = F::from_f64(core::f64::consts::PI / 180.0).unwrap();
        let half = F::from_f64(0.5).unwrap();
        let two = F::from_f64(2.0).unwrap();
        let radius = F::from_f64(EARTH_RADIUS_M).unwrap();

        let phi1 = a[0] * rad;
        let phi2 = b[0] * rad;
        let dphi = (b[0] - a[0]) * rad;
        let dlam = (b[1] - a[1]) * rad;

        let s1 = (dphi * half).sin();
        let s2 = (dlam * half).sin();
        let h = s1 * s1 + phi1.cos() * phi2.cos() * s2 * s2;
        let c = two * h.sqrt().atan2((F::one() - h).sqrt());
        radius * c
    }

    fn name(&self) -> &'static str {
        "haversine"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn euclidean_examples() {
        let m = Euclidean;
        assert_eq!(m.eval(&[0.0, 0.0], &[3.0, 4.0]), 5.0);
        assert_eq!(m.eval(&[1.0, 1.0], &[1.0, 1.0]), 0.0);
        let d: f64 = m.eval(&[0.0, 0.0], &[1.0, 2.0]);
        assert!((d - 5.0f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn euclidean_high_dim() {
        let m = Euclidean;
        let d: f64 = m.eval(&[0.0, 0.0, 0.0], &[1.0, 2.0, 2.0]);
        assert!((d - 3.0).abs() < 1e-15);
        assert_eq!(m.eval(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]), 0.0);
    }

    #[test]
    fn euclidean_dim_mismatch() {
        let m = Euclidean;
        assert_eq!(
            Metric::<f64>::try_eval(&m, &[0.0, 0.0], &[1.0]).unwrap_err(),
            Error::DimensionMismatch { left: 2, right: 1 }
        );
    }

    #[test]
    fn haversine_examples() {
        let m = Haversine;
        assert_eq!(m.eval(&[0.0f64, 0.0], &[0.0, 0.0]), 0.0);

        // Antipodal on the equator: half the circumference.
        let half_circ = core::f64::consts::PI * EARTH_RADIUS_M;
        let d: f64 = m.eval(&[0.0, 0.0], &[0.0, 180.0]);
        assert!((d - half_circ).abs() < 1.0, "{d} vs {half_circ}");

        // One degree of arc along the equator.
        let one_deg = EARTH_RADIUS_M * core::f64::consts::PI / 180.0;
        let d: f64 = m.eval(&[0.0, 0.0], &[0.0, 1.0]);
        assert!((d - one_deg).abs() < 1e-3, "{d} vs {one_deg}");
        assert!((d - 111_194.9).abs() < 0.1);
    }

    #[test]
    fn haversine_range_validation() {
        let m = Haversine;
        let bad = PolygonalCurve::from_xy(&[(91.0f64, 0.0)]).unwrap();
        assert_eq!(
            m.validate_curve(&bad).unwrap_err(),
            Error::CoordinateRange { point: 0 }
        );
        let bad = PolygonalCurve::from_xy(&[(0.0f64, 0.0), (0.0, -181.0)]).unwrap();
        assert_eq!(
            m.validate_curve(&bad).unwrap_err(),
            Error::CoordinateRange { point: 1 }
        );
        let ok = PolygonalCurve::from_xy(&[(54.0f64, 12.0), (53.9, 12.1)]).unwrap();
        assert!(m.validate_curve(&ok).is_ok());
        let wrong_dim = PolygonalCurve::new(vec![1.0f64, 2.0, 3.0], 3).unwrap();
        assert!(m.validate_curve(&wrong_dim).is_err());
    }
}
