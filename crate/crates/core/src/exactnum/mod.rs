//! Exact numeric substrate: arbitrary-precision integers and rationals,
//! integer square roots, sound square-root enclosures, rational intervals
//! and quadratic surds.
//!
//! Integers and rationals are the `num-bigint` / `num-rational` types;
//! rationals are always stored normalized (positive denominator, reduced).
//! Everything here is immutable after construction and safe to evaluate
//! in parallel.

mod interval;
mod surd;

pub use interval::{interval_arith, Interval, IntervalOp};
pub use surd::QuadSurd;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Floor integer square root: the unique `r` with `r^2 <= x < (r+1)^2`.
pub fn isqrt_floor(x: &BigInt) -> Result<BigInt> {
    if x.is_negative() {
        return Err(Error::Domain {
            op: "isqrt_floor",
            reason: format!("negative input {x}"),
        });
    }
    Ok(x.sqrt())
}

/// Convenience constructor for a rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience constructor for an integer rational.
pub fn rat_int(num: i64) -> Rational {
    Rational::from(BigInt::from(num))
}

/// Exact square root of a rational if one exists.
pub fn sqrt_exact(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let np = x.numer().sqrt();
    let dp = x.denom().sqrt();
    if &(&np * &np) == x.numer() && &(&dp * &dp) == x.denom() {
        Some(Rational::new(np, dp))
    } else {
        None
    }
}

/// Sound enclosure of `sqrt(x)`.
///
/// Returns `[lo, hi]` with `lo^2 <= x <= hi^2` and
/// `hi - lo <= 2^-width_exponent`. Exact squares collapse to a degenerate
/// interval regardless of the requested width. Increasing the width
/// exponent never widens the result.
pub fn sqrt_enclosure(x: &Rational, width_exponent: u32) -> Result<Interval<Rational>> {
    sqrt_enclosure_named(x, width_exponent, "sqrt_enclosure input")
}

/// Same as [`sqrt_enclosure`], with a caller-supplied expression name used
/// in the negative-radicand error so domain violations stay identifiable.
pub fn sqrt_enclosure_named(
    x: &Rational,
    width_exponent: u32,
    expr: &str,
) -> Result<Interval<Rational>> {
    if x.is_negative() {
        return Err(Error::NegativeRadicand {
            expr: format!("{expr} = {x}"),
        });
    }
    if x.is_zero() {
        return Ok(Interval::point(Rational::zero()));
    }
    if let Some(root) = sqrt_exact(x) {
        return Ok(Interval::point(root));
    }
    // sqrt(p/q) = sqrt(p*q)/q. Scale by 4^m so the enclosure width
    // 1/(q*2^m) is at most 2^-width_exponent.
    let p = x.numer();
    let q = x.denom();
    let q_bits = q.bits() as u32;
    let m = (width_exponent + 1).saturating_sub(q_bits);
    let t = (p * q) << (2 * m as usize);
    let r = t.sqrt();
    let den = BigInt::from(q.clone()) << (m as usize);
    let lo = Rational::new(r.clone(), den.clone());
    let hi = Rational::new(r + BigInt::from(1), den);
    Ok(Interval::new(lo, hi).expect("lo <= hi by construction"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn isqrt_floor_examples() {
        assert_eq!(isqrt_floor(&BigInt::zero()).unwrap(), BigInt::zero());
        assert_eq!(isqrt_floor(&BigInt::from(2304)).unwrap(), BigInt::from(48));
        assert_eq!(isqrt_floor(&BigInt::from(2)).unwrap(), BigInt::one());
        assert!(isqrt_floor(&BigInt::from(-1)).is_err());
    }

    #[test]
    fn sqrt_enclosure_exact_square() {
        let e = sqrt_enclosure(&rat_int(4), 0).unwrap();
        assert_eq!(e.lo(), e.hi());
        assert_eq!(*e.lo(), rat_int(2));
        // radicand of the two-sided window bound at n = 19
        let e = sqrt_enclosure(&rat(2304, 324), 0).unwrap();
        assert_eq!(*e.lo(), rat(8, 3));
        assert_eq!(*e.hi(), rat(8, 3));
    }

    #[test]
    fn sqrt_enclosure_contract() {
        let x = rat_int(2);
        let e = sqrt_enclosure(&x, 8).unwrap();
        assert!(e.lo() * e.lo() <= x && x <= e.hi() * e.hi());
        assert!(e.width() <= rat(1, 256));
    }

    #[test]
    fn sqrt_enclosure_rejects_negative() {
        match sqrt_enclosure_named(&rat_int(-275), 8, "H1(4,2)") {
            Err(Error::NegativeRadicand { expr }) => assert!(expr.contains("H1(4,2)")),
            other => panic!("expected negative radicand, got {other:?}"),
        }
    }

    #[test]
    fn sqrt_exact_detects_squares() {
        assert_eq!(sqrt_exact(&rat(441, 4)), Some(rat(21, 2)));
        assert_eq!(sqrt_exact(&rat(2197, 108)), None);
        assert_eq!(sqrt_exact(&rat_int(-4)), None);
    }
}
