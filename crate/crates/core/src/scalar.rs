//! The integer scalar the whole crate is generic over.
//!
//! Any signed Euclidean integer type from the `num` ecosystem qualifies:
//! `BigInt` is the default used by the crate-root aliases, while `i64`/`i128`
//! are convenient for fast exhaustive searches. Arithmetic inside the crate
//! goes through the `*_exact` helpers, so a fixed-width instantiation panics
//! on overflow instead of wrapping.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

pub trait Scalar:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Hash
    + Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn add_exact(&self, other: &Self) -> Self {
        self.checked_add(other).expect("integer overflow in addition")
    }

    fn sub_exact(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("integer overflow in subtraction")
    }

    fn mul_exact(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("integer overflow in multiplication")
    }

    fn neg_exact(&self) -> Self {
        Self::zero().sub_exact(self)
    }

    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("integer does not fit the scalar type")
    }

    fn from_u64_exact(v: u64) -> Self {
        Self::from_u64(v).expect("integer does not fit the scalar type")
    }
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Display
        + Eq
        + Ord
        + Hash
        + Integer
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Extended Euclid: returns `(g, x, y)` with `g = gcd(a, b) >= 0` and `a*x + b*y = g`.
pub fn xgcd<T: Scalar>(a: &T, b: &T) -> (T, T, T) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (T::one(), T::zero());
    let (mut old_t, mut t) = (T::zero(), T::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = old_r.sub_exact(&q.mul_exact(&r));
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = old_s.sub_exact(&q.mul_exact(&s));
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = old_t.sub_exact(&q.mul_exact(&t));
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (old_r.neg_exact(), old_s.neg_exact(), old_t.neg_exact())
    } else {
        (old_r, old_s, old_t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn xgcd_bezout() {
        for a in -12i64..=12 {
            for b in -12i64..=12 {
                let (g, x, y) = xgcd(&a, &b);
                assert_eq!(g, a.gcd(&b));
                assert_eq!(a * x + b * y, g);
            }
        }
        let (g, x, y) = xgcd(&BigInt::from(240), &BigInt::from(46));
        assert_eq!(g, BigInt::from(2));
        assert_eq!(BigInt::from(240) * x + BigInt::from(46) * y, g);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn fixed_width_overflow_panics() {
        let _ = i64::MAX.add_exact(&1);
    }
}
