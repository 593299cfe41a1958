//! Coefficient fields.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// An exact field usable as a matrix entry or ring coefficient.
///
/// Blanket-implemented for every type with the required arithmetic, so
/// `BigRational` and `Ratio<i64>` both qualify. Nothing here guards against
/// rounding: instantiate with exact types only.
pub trait Field:
    Clone + Debug + Display + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Send + Sync
{
    fn from_int(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("integer not representable in field")
    }
}

impl<T> Field for T where
    T: Clone + Debug + Display + PartialEq + Num + Neg<Output = T> + FromPrimitive + Send + Sync
{
}
