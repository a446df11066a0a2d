//! Scalar abstraction for energies, coefficients and temperatures.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Real number type the energy model and optimizers are generic over.
///
/// Implemented for `f32` and `f64`. Spins themselves are always `i8`; only
/// quantities derived from the coefficients live in this type.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Lossy conversion from an integer spin statistic.
    #[inline]
    fn from_i64_lossy(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).unwrap_or_else(Self::nan)
    }

    /// Lossy conversion from `f64`, used for literals and uniform draws.
    #[inline]
    fn from_f64_lossy(v: f64) -> Self {
        <Self as FromPrimitive>::from_f64(v).unwrap_or_else(Self::nan)
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
