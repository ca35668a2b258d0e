use core::fmt;

/// Errors reported by curve construction and the distance kernels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A curve must contain at least one point.
    EmptyCurve,
    /// A batch must contain at least one curve.
    EmptyBatch,
    /// The operation requires a nonempty sequence.
    EmptySequence,
    /// Point dimensions of the two operands differ.
    DimensionMismatch { left: usize, right: usize },
    /// A coordinate was NaN (rejected so max/min selection stays total).
    NanCoordinate { point: usize },
    /// Two rows/vectors that must have equal length do not.
    LengthMismatch { left: usize, right: usize },
    /// The recursive reference kernel would exceed its call-stack budget.
    DepthLimit { needed: usize, limit: usize },
    /// Input too large for exhaustive coupling enumeration.
    SizeLimit { combined: usize, limit: usize },
    /// Latitude/longitude outside the valid range for the haversine metric.
    CoordinateRange { point: usize },
    /// Failed to reserve a working buffer of the given number of elements.
    Alloc { elements: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyCurve => write!(f, "curve must contain at least one point"),
            Error::EmptyBatch => write!(f, "batch must contain at least one curve"),
            Error::EmptySequence => write!(f, "operation requires a nonempty sequence"),
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::NanCoordinate { point } => {
                write!(f, "NaN coordinate at point {point}")
            }
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::DepthLimit { needed, limit } => write!(
                f,
                "recursion depth {needed} exceeds limit {limit}; use an iterative kernel \
                 (frechet_linear, frechet_fast)"
            ),
            Error::SizeLimit { combined, limit } => write!(
                f,
                "combined curve length {combined} exceeds brute-force limit {limit}"
            ),
            Error::CoordinateRange { point } => write!(
                f,
                "point {point}: latitude must be in [-90, 90], longitude in [-180, 180]"
            ),
            Error::Alloc { elements } => {
                write!(f, "failed to allocate workspace of {elements} elements")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
