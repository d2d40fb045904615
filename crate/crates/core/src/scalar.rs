//! Integer scalar abstraction.
//!
//! Every point of the ground set and every tail shift is stored in a signed
//! machine integer chosen by the caller. Arithmetic is always checked: an
//! overflow surfaces as [`Error::Overflow`] instead of wrapping.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{PrimInt, Signed};

use crate::error::Error;

/// Signed integer usable as a point or shift value.
pub trait Scalar: PrimInt + Signed + Hash + Debug + Display + FromStr + Send + Sync + 'static {
    fn checked_plus(self, rhs: Self) -> Result<Self, Error> {
        self.checked_add(&rhs).ok_or(Error::Overflow)
    }

    fn checked_minus(self, rhs: Self) -> Result<Self, Error> {
        self.checked_sub(&rhs).ok_or(Error::Overflow)
    }

    fn checked_negate(self) -> Result<Self, Error> {
        Self::zero().checked_minus(self)
    }

    fn from_usize(n: usize) -> Result<Self, Error> {
        <Self as num_traits::NumCast>::from(n).ok_or(Error::Overflow)
    }

    /// Row index for a non-negative value, `None` when negative.
    fn index(self) -> Option<usize> {
        self.to_usize()
    }

    /// Widened copy used in error payloads.
    fn wide(self) -> i128 {
        self.to_i128().expect("signed primitives fit in i128")
    }
}

impl Scalar for i8 {}
impl Scalar for i16 {}
impl Scalar for i32 {}
impl Scalar for i64 {}
impl Scalar for i128 {}
impl Scalar for isize {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checked_arithmetic_reports_overflow() {
        assert_eq!(120i8.checked_plus(7), Ok(127));
        assert_eq!(120i8.checked_plus(8), Err(Error::Overflow));
        assert_eq!(i8::MIN.checked_negate(), Err(Error::Overflow));
        assert_eq!(i8::from_usize(200), Err(Error::Overflow));
        assert_eq!(i64::from_usize(200), Ok(200));
    }

    #[test]
    fn negative_values_have_no_index() {
        assert_eq!((-1i32).index(), None);
        assert_eq!(7i32.index(), Some(7));
    }
}
