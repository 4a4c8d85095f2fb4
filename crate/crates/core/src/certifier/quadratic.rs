//! The ratio quadratic behind row log-concavity, its discriminant, and
//! the discriminant's cubic factor in `k`.
//!
//! Log-concavity of a row reduces to nonnegativity of an upward-opening
//! quadratic evaluated at the successive-row ratio; the discriminant
//! factors exactly as `k n^2 (1+n)^2 q_n(k)` with `q_n` a monic cubic,
//! and the sign threshold in `k` is the smallest real root of `q_n`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Interval, QuadSurd};
use crate::poly::{BiPoly, UniPoly};
use crate::Rational;

type P = BiPoly<Rational>;

fn ri(v: i64) -> Rational {
    Rational::from(BigInt::from(v))
}

/// Upward quadratic `a2 x^2 + a1 x + a0` whose nonnegativity at the row
/// ratio is equivalent to the log-concavity inequality at `(n, k)`:
/// `a2 = k n^2 (n-2k+1)`, `a1 = -k (n-k-2) n (1+n)`,
/// `a0 = -(1+n)^2 (-10 + (-5+k) n)`.
#[derive(Debug, Clone)]
pub struct RatioQuadratic {
    pub a2: Rational,
    pub a1: Rational,
    pub a0: Rational,
}

impl RatioQuadratic {
    pub fn at(n: i64, k: i64) -> Self {
        RatioQuadratic {
            a2: ri(k * n * n * (n - 2 * k + 1)),
            a1: ri(-(k * (n - k - 2) * n * (1 + n))),
            a0: ri(-(1 + n) * (1 + n)) * ri(-10 + (-5 + k) * n),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        (&self.a2 * x + &self.a1) * x + &self.a0
    }

    pub fn derivative_at(&self, x: &Rational) -> Rational {
        Rational::from(BigInt::from(2)) * &self.a2 * x + &self.a1
    }

    pub fn eval_surd(&self, x: &QuadSurd) -> Result<QuadSurd> {
        let sq = x.mul(x)?;
        sq.scale(&self.a2)
            .add(&x.scale(&self.a1))?
            .add(&QuadSurd::from_rational(self.a0.clone()))
    }

    pub fn derivative_at_surd(&self, x: &QuadSurd) -> QuadSurd {
        x.scale(&(Rational::from(BigInt::from(2)) * &self.a2))
            .add_rational(&self.a1)
    }

    pub fn discriminant(&self) -> Rational {
        &self.a1 * &self.a1 - ri(4) * &self.a2 * &self.a0
    }

    /// Exact decision of `q(x) >= 0 for all x >= x0` for an
    /// upward-opening quadratic: equivalent to
    /// `q(x0) >= 0 and q'(x0) >= 0`, or a nonpositive discriminant.
    pub fn nonneg_on_ray_from(&self, x0: &Rational) -> bool {
        debug_assert!(self.a2.is_positive());
        if !self.discriminant().is_positive() {
            return true;
        }
        !self.eval(x0).is_negative() && !self.derivative_at(x0).is_negative()
    }

    pub fn nonneg_on_ray_from_surd(&self, x0: &QuadSurd) -> Result<bool> {
        debug_assert!(self.a2.is_positive());
        if !self.discriminant().is_positive() {
            return Ok(true);
        }
        let v = self.eval_surd(x0)?;
        let d = self.derivative_at_surd(x0);
        Ok(v.sign() != Ordering::Less && d.sign() != Ordering::Less)
    }
}

/// Discriminant of the ratio quadratic, from its defining expression
/// `(k(n-k-2)n(1+n))^2 + 4 k n^2 (n-2k+1) (1+n)^2 (-10+(-5+k)n)`.
pub fn discriminant_at(n: i64, k: i64) -> Rational {
    discriminant_poly().eval(&ri(n), &ri(k))
}

/// The discriminant as an expanded polynomial in `(n, k)`.
pub fn discriminant_poly() -> P {
    let n = P::monomial(Rational::from(BigInt::from(1)), 1, 0);
    let k = P::monomial(Rational::from(BigInt::from(1)), 0, 1);
    let one = P::constant(Rational::from(BigInt::from(1)));
    let n1 = n.add(&one);
    // k (n - k - 2) n (1 + n)
    let b = k
        .mul(&n.sub(&k).sub(&one).sub(&one))
        .mul(&n)
        .mul(&n1);
    // 4 k n^2 (n - 2k + 1) (1+n)^2 (-10 + (-5 + k) n)
    let c = P::constant(ri(4))
        .mul(&k)
        .mul(&n.mul(&n))
        .mul(&n.sub(&k.scale(&ri(2))).add(&one))
        .mul(&n1.mul(&n1))
        .mul(&P::constant(ri(-10)).add(&k.sub(&P::constant(ri(5))).mul(&n)));
    b.mul(&b).add(&c)
}

/// The same discriminant in factored form `k n^2 (1+n)^2 q_n(k)`;
/// expanding it must reproduce [`discriminant_poly`] exactly (the
/// keystone identity linking the quadratic analysis to the cubic).
pub fn discriminant_factored_poly() -> P {
    let n = P::monomial(Rational::from(BigInt::from(1)), 1, 0);
    let k = P::monomial(Rational::from(BigInt::from(1)), 0, 1);
    let one = P::constant(Rational::from(BigInt::from(1)));
    let n1 = n.add(&one);
    k.mul(&n.mul(&n)).mul(&n1.mul(&n1)).mul(&disc_cubic_poly())
}

/// Monic cubic factor `X^3 + (4-10n) X^2 + (84+40n+5n^2) X - (40+60n+20n^2)`
/// in the `(n, X=k)` variables.
pub fn disc_cubic_poly() -> P {
    P::from_terms(&[
        (ri(1), 0, 3),
        (ri(4), 0, 2),
        (ri(-10), 1, 2),
        (ri(84), 0, 1),
        (ri(40), 1, 1),
        (ri(5), 2, 1),
        (ri(-40), 0, 0),
        (ri(-60), 1, 0),
        (ri(-20), 2, 0),
    ])
}

/// The cubic at a fixed `n`, as a univariate polynomial in `k`.
pub fn disc_cubic_at(n: i64) -> UniPoly<Rational> {
    disc_cubic_poly().at_first(&ri(n))
}

/// Isolating interval for the smallest real root of the cubic — the
/// threshold in `k` above which the discriminant is positive.
pub fn isolate_disc_threshold(n: i64, width_exponent: u32) -> Result<Interval<Rational>> {
    if n < 1 {
        return Err(Error::Domain {
            op: "isolate_disc_threshold",
            reason: format!("need n >= 1, got {n}"),
        });
    }
    disc_cubic_at(n).isolate_smallest_root(width_exponent)
}

/// Exact decision of `k > threshold(n)` (the smallest real root of the
/// cubic) for an integer `k`, by Sturm counting: true iff at least one
/// root lies strictly below `k`.
pub fn integer_above_threshold(n: i64, k: i64) -> Result<bool> {
    let p = disc_cubic_at(n);
    let bound = p.cauchy_root_bound()?;
    let kr = ri(k);
    if kr <= -bound.clone() {
        return Ok(false);
    }
    let mut roots_below = p.sturm_count(&-bound, &kr)?;
    if p.eval(&kr).is_zero() {
        roots_below -= 1; // the count includes k itself
    }
    Ok(roots_below >= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn discriminant_spot_value() {
        // (5*3*10*11)^2 + 4*5*100*1*121*(-10) = 2722500 - 2420000
        assert_eq!(discriminant_at(10, 5), ri(302_500));
        let g = RatioQuadratic::at(10, 5);
        assert_eq!(g.discriminant(), ri(302_500));
    }

    #[test]
    fn keystone_factorization() {
        assert_eq!(discriminant_poly(), discriminant_factored_poly());
    }

    #[test]
    fn keystone_numeric_cross_check() {
        // 302500 = 5 * 100 * 121 * q_10(5) with q_10(5) = 5
        let cubic = disc_cubic_at(10);
        assert_eq!(cubic.eval(&ri(5)), ri(5));
        assert_eq!(ri(5 * 100 * 121 * 5), discriminant_at(10, 5));
    }

    #[test]
    fn cubic_at_10_matches_expansion() {
        let c = disc_cubic_at(10);
        assert_eq!(c.coeffs(), &[ri(-2640), ri(984), ri(-96), ri(1)]);
        assert_eq!(c.eval(&ri(4)), ri(-176));
    }

    #[test]
    fn threshold_isolation_at_10() {
        let iv = isolate_disc_threshold(10, 16).unwrap();
        assert!(*iv.lo() >= ri(4) && *iv.hi() <= ri(5));
        // the cubic has three real roots at n = 10; the others lie in
        // (5, 12) and (80, 90)
        let c = disc_cubic_at(10);
        assert_eq!(c.real_root_count().unwrap(), 3);
        assert_eq!(c.sturm_count(&ri(5), &ri(12)).unwrap(), 1);
        assert_eq!(c.sturm_count(&ri(80), &ri(90)).unwrap(), 1);
        // first integer above the threshold: 5, and the discriminant is
        // positive there
        assert!(integer_above_threshold(10, 5).unwrap());
        assert!(!integer_above_threshold(10, 4).unwrap());
        assert!(discriminant_at(10, 5).is_positive());
    }

    #[test]
    fn quadratic_vanishes_at_surd_lower_bound() {
        // the sharp lower bound is the larger root of the quadratic
        let g = RatioQuadratic::at(19, 8);
        let l = super::super::bounds::surd_lower_bound(19, 8).unwrap();
        let v = g.eval_surd(&l).unwrap();
        assert_eq!(v.sign(), Ordering::Equal);
        assert_ne!(g.derivative_at_surd(&l).sign(), Ordering::Less);
        assert!(g.nonneg_on_ray_from_surd(&l).unwrap());
    }

    #[test]
    fn ray_criterion_examples() {
        let g = RatioQuadratic::at(10, 2);
        // exact evaluation at the actual ratio 143/71 stays positive
        assert!(g.eval(&rat(143, 71)).is_positive());
        assert!(g.nonneg_on_ray_from(&rat(44, 35)));
    }
}
