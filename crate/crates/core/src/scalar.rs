//! Scalar abstraction shared by the tropical modules.
//!
//! Min-plus arithmetic only ever adds, subtracts and compares, so any exact
//! totally ordered ring works: machine integers, big integers and rationals.
//! Floating point types are deliberately not `Ord` and therefore excluded.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// Exact, totally ordered scalar used for matrix entries and coordinates.
pub trait Scalar: Clone + Ord + Num + Signed + Debug + Display + Send + Sync + 'static {
    fn from_i64(value: i64) -> Self;
}

impl Scalar for i64 {
    fn from_i64(value: i64) -> Self {
        value
    }
}

impl Scalar for BigInt {
    fn from_i64(value: i64) -> Self {
        BigInt::from(value)
    }
}

impl<I> Scalar for Ratio<I>
where
    I: Clone + Integer + Signed + Debug + Display + Send + Sync + 'static + From<i64>,
{
    fn from_i64(value: i64) -> Self {
        Ratio::from_integer(I::from(value))
    }
}
