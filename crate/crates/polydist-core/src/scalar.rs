use core::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Scalar type of the library: `f32` or `f64`.
///
/// Correctness suites run in 64-bit; benchmarks default to 32-bit. All
/// kernels are generic over this trait so both precisions share one code
/// path.
pub trait Real: Float + FromPrimitive + Debug + Display + 'static {}

impl<T> Real for T where T: Float + FromPrimitive + Debug + Display + 'static {}
