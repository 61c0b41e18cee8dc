//! Scalar abstraction for the numeric core.
//!
//! Everything under [`crate::numerics`] and [`crate::env::physics`] is generic
//! over [`Scalar`] so the math can be instantiated at `f32` or `f64`. The rest
//! of the crate uses the `f64` aliases exported from the crate root; reference
//! tolerances (gradient checks, softmax normalization) assume 64-bit arithmetic.

use std::fmt::{Debug, Display};

use num_traits::{Float, NumAssignOps, NumCast};

pub trait Scalar:
    Float + NumAssignOps + NumCast + Debug + Display + Default + Send + Sync + 'static
{
    /// Lossy conversion from `f64`; exact when `Self = f64`.
    fn from_f64(v: f64) -> Self {
        <Self as NumCast>::from(v).expect("finite f64 converts to any Scalar")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().expect("Scalar converts to f64")
    }
}

impl<T> Scalar for T where
    T: Float + NumAssignOps + NumCast + Debug + Display + Default + Send + Sync + 'static
{
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sum_of_squares<S: Scalar>(xs: &[S]) -> S {
        xs.iter().fold(S::zero(), |acc, &x| acc + x * x)
    }

    #[test]
    fn generic_math_works_at_both_widths() {
        let a32 = sum_of_squares(&[1.0f32, 2.0, 3.0]);
        let a64 = sum_of_squares(&[1.0f64, 2.0, 3.0]);
        assert_eq!(a32, 14.0f32);
        assert_eq!(a64, 14.0f64);
    }

    #[test]
    fn f64_round_trip_is_exact() {
        let x = 0.123456789012345678f64;
        assert_eq!(f64::from_f64(x), x);
        assert_eq!(x.as_f64(), x);
    }
}
