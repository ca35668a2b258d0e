//! Reproducible 2-D random-walk trajectories.
//!
//! The generator is SplitMix64 (Steele et al., fixed 64-bit algorithm, no
//! platform dependence), so a given seed yields the identical trajectory on
//! every platform. Steps are drawn uniformly from {-1, 0, +1} per axis and
//! accumulated from the origin.

use polydist_core::{PolygonalCurve, Real};

/// SplitMix64 generator; deterministic and trivially splittable by feeding
/// one stream's outputs as seeds of others.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform step component from {-1, 0, +1}.
    pub fn next_step(&mut self) -> i64 {
        (self.next_u64() % 3) as i64 - 1
    }
}

/// Parameters of one random-walk trajectory (dimension is fixed to 2).
#[derive(Debug, Clone, Copy)]
pub struct WalkSpec {
    pub n_points: usize,
    pub seed: u64,
}

/// Generates the walk: point 1 at the origin, each subsequent point offset
/// by a step drawn uniformly from {-1, 0, +1} × {-1, 0, +1}.
pub fn gen_random_walk<F: Real>(spec: WalkSpec) -> PolygonalCurve<F> {
    assert!(spec.n_points >= 1);
    let mut rng = SplitMix64::new(spec.seed);
    let mut x: i64 = 0;
    let mut y: i64 = 0;
    let mut data = Vec::with_capacity(spec.n_points * 2);
    data.push(F::zero());
    data.push(F::zero());
    for _ in 1..spec.n_points {
        x += rng.next_step();
        y += rng.next_step();
        data.push(F::from_i64(x).unwrap());
        data.push(F::from_i64(y).unwrap());
    }
    PolygonalCurve::new(data, 2).unwrap()
}

/// Generates `n_curves` independent walks; curve `k` is seeded from the
/// `k`-th output of a SplitMix64 stream over `seed`.
pub fn gen_walk_set<F: Real>(n_curves: usize, n_points: usize, seed: u64) -> Vec<PolygonalCurve<F>> {
    let mut seeder = SplitMix64::new(seed);
    (0..n_curves)
        .map(|_| {
            gen_random_walk(WalkSpec {
                n_points,
                seed: seeder.next_u64(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_point_walk_is_origin() {
        let c: PolygonalCurve<f64> = gen_random_walk(WalkSpec { n_points: 1, seed: 42 });
        assert_eq!(c.len(), 1);
        assert_eq!(c.point(0), &[0.0, 0.0]);
    }

    #[test]
    fn steps_are_chebyshev_bounded() {
        let c: PolygonalCurve<f64> = gen_random_walk(WalkSpec { n_points: 500, seed: 7 });
        for i in 1..c.len() {
            let dx = (c.point(i)[0] - c.point(i - 1)[0]).abs();
            let dy = (c.point(i)[1] - c.point(i - 1)[1]).abs();
            assert!(dx <= 1.0 && dy <= 1.0);
        }
    }

    #[test]
    fn same_seed_same_walk() {
        let a: PolygonalCurve<f64> = gen_random_walk(WalkSpec { n_points: 200, seed: 99 });
        let b: PolygonalCurve<f64> = gen_random_walk(WalkSpec { n_points: 200, seed: 99 });
        assert_eq!(a, b);
        let c: PolygonalCurve<f64> = gen_random_walk(WalkSpec { n_points: 200, seed: 100 });
        assert_ne!(a, c);
    }

    // Each step component should hit -1, 0, +1 with frequency 1/3; over
    // 10^6 draws the multinomial 3-sigma band is 1/3 +- 3*sqrt(2/9/n).
    #[test]
    fn step_frequencies_are_uniform() {
        let n = 1_000_000usize;
        let mut rng = SplitMix64::new(0xfeed);
        let mut counts = [0usize; 3];
        for _ in 0..n {
            counts[(rng.next_step() + 1) as usize] += 1;
        }
        let p = 1.0 / 3.0;
        let sigma = (p * (1.0 - p) / n as f64).sqrt();
        for &c in &counts {
            let freq = c as f64 / n as f64;
            assert!((freq - p).abs() < 3.0 * sigma, "freq {freq} outside 3 sigma");
        }
    }
}
