//! Closed intervals with exact endpoints.
//!
//! Every operation returns an interval containing the exact image set, so
//! any fact decided from an interval (a sign, a comparison) is sound. With
//! rational endpoints the ring operations introduce no rounding at all;
//! only square-root enclosures carry width.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Closed interval `[lo, hi]`, `lo <= hi`.
#[derive(Debug, Clone, PartialEq)]
pub struct Interval<T> {
    lo: T,
    hi: T,
}

/// The four interval ring operations, for the generic dispatcher.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl<T: Scalar> Interval<T> {
    pub fn new(lo: T, hi: T) -> Result<Self> {
        if lo > hi {
            return Err(Error::Domain {
                op: "Interval::new",
                reason: format!("lo {lo} > hi {hi}"),
            });
        }
        Ok(Interval { lo, hi })
    }

    /// Degenerate interval `[v, v]`.
    pub fn point(v: T) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn lo(&self) -> &T {
        &self.lo
    }

    pub fn hi(&self) -> &T {
        &self.hi
    }

    pub fn width(&self) -> T {
        self.hi.clone() - self.lo.clone()
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, v: &T) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&T::zero())
    }

    /// Decided sign of every value in the interval, if uniform.
    /// `None` when the interval straddles or touches zero.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo > T::zero() {
            Some(Ordering::Greater)
        } else if self.hi < T::zero() {
            Some(Ordering::Less)
        } else if self.lo == self.hi && self.lo.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn neg(&self) -> Self {
        Interval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Interval {
            lo: self.lo.clone() + rhs.lo.clone(),
            hi: self.hi.clone() + rhs.hi.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Interval {
            lo: self.lo.clone() - rhs.hi.clone(),
            hi: self.hi.clone() - rhs.lo.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let candidates = [
            self.lo.clone() * rhs.lo.clone(),
            self.lo.clone() * rhs.hi.clone(),
            self.hi.clone() * rhs.lo.clone(),
            self.hi.clone() * rhs.hi.clone(),
        ];
        let mut lo = candidates[0].clone();
        let mut hi = candidates[0].clone();
        for c in &candidates[1..] {
            if *c < lo {
                lo = c.clone();
            }
            if *c > hi {
                hi = c.clone();
            }
        }
        Interval { lo, hi }
    }

    /// Reciprocal; errors when the interval contains zero.
    pub fn recip(&self) -> Result<Self> {
        if self.contains_zero() {
            return Err(Error::IntervalDivByZero);
        }
        Ok(Interval {
            lo: T::one() / self.hi.clone(),
            hi: T::one() / self.lo.clone(),
        })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.recip()?))
    }

    /// Scale by a point value.
    pub fn scale(&self, c: &T) -> Self {
        self.mul(&Interval::point(c.clone()))
    }

    /// Translate by a point value.
    pub fn shift(&self, c: &T) -> Self {
        Interval {
            lo: self.lo.clone() + c.clone(),
            hi: self.hi.clone() + c.clone(),
        }
    }
}

/// Dispatcher over the four ring operations.
pub fn interval_arith<T: Scalar>(
    op: IntervalOp,
    a: &Interval<T>,
    b: &Interval<T>,
) -> Result<Interval<T>> {
    match op {
        IntervalOp::Add => Ok(a.add(b)),
        IntervalOp::Sub => Ok(a.sub(b)),
        IntervalOp::Mul => Ok(a.mul(b)),
        IntervalOp::Div => a.div(b),
    }
}

impl<T: fmt::Display> fmt::Display for Interval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int};
    use crate::Rational;

    fn iv(a: i64, b: i64) -> Interval<Rational> {
        Interval::new(rat_int(a), rat_int(b)).unwrap()
    }

    #[test]
    fn ring_ops() {
        assert_eq!(iv(1, 2).add(&iv(3, 4)), iv(4, 6));
        assert_eq!(iv(-1, 1).mul(&iv(2, 2)), iv(-2, 2));
        assert_eq!(iv(1, 2).sub(&iv(0, 1)), iv(0, 2));
        assert!(matches!(
            iv(1, 2).div(&iv(0, 1)),
            Err(Error::IntervalDivByZero)
        ));
        assert_eq!(iv(1, 2).div(&iv(2, 4)).unwrap(), Interval::new(rat(1, 4), rat_int(1)).unwrap());
    }

    #[test]
    fn dispatcher_matches_methods() {
        let a = iv(-3, 5);
        let b = iv(2, 7);
        assert_eq!(interval_arith(IntervalOp::Add, &a, &b).unwrap(), a.add(&b));
        assert_eq!(interval_arith(IntervalOp::Mul, &a, &b).unwrap(), a.mul(&b));
    }

    #[test]
    fn sign_detection() {
        assert_eq!(iv(1, 2).sign(), Some(Ordering::Greater));
        assert_eq!(iv(-2, -1).sign(), Some(Ordering::Less));
        assert_eq!(iv(-1, 1).sign(), None);
        assert_eq!(Interval::point(rat_int(0)).sign(), Some(Ordering::Equal));
    }

    #[test]
    fn generic_over_floats_too() {
        let a = Interval::new(1.0f64, 2.0).unwrap();
        let b = Interval::new(-0.5f64, 0.5).unwrap();
        assert_eq!(a.mul(&b), Interval::new(-1.0, 1.0).unwrap());
    }
}
