//! Integer coefficient rings for the polynomial types.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact integer type usable as a polynomial coefficient.
///
/// Implemented for every signed integer satisfying the bounds, in particular
/// `i64`, `i128` and `num_bigint::BigInt`.
pub trait Coeff:
    Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn of_usize(n: usize) -> Self {
        <Self as FromPrimitive>::from_usize(n).expect("coefficient overflow")
    }

    fn of_i64(n: i64) -> Self {
        <Self as FromPrimitive>::from_i64(n).expect("coefficient overflow")
    }
}

impl<T> Coeff for T where
    T: Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}
