//! Exact bounds on the successive-row ratio `JL(n+1,k)/JL(n,k)`.
//!
//! Three bounds appear: a rational lower bound valid on the whole
//! triangle, and a sharper surd lower bound / two-radical upper bound
//! valid for `n >= 19` when `k` lies inside a window `(k_lo, k_hi)`
//! around the row mode. The window endpoints are quadratic surds in `n`.
//!
//! None of the radicands is proved nonnegative a priori; each evaluation
//! checks and reports a domain violation instead of assuming.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exactnum::{sqrt_enclosure_named, Interval, QuadSurd};
use crate::poly::{BiPoly, UniPoly};
use crate::Rational;

type P = BiPoly<Rational>;

fn ri(v: i64) -> Rational {
    Rational::from(BigInt::from(v))
}

fn rq(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact value carrying the minimal numeric class needed for it:
/// plain rational, single-radical surd, or (for two-radical
/// expressions) an interval that remembers its precision.
#[derive(Debug, Clone)]
pub enum BoundValue {
    Rational(Rational),
    Surd(QuadSurd),
    Interval(Interval<Rational>),
}

impl BoundValue {
    /// Wraps a surd, collapsing to the rational tag when it carries no
    /// radical part.
    pub fn from_surd(s: QuadSurd) -> BoundValue {
        match s.as_rational() {
            Some(r) => BoundValue::Rational(r.clone()),
            None => BoundValue::Surd(s),
        }
    }

    /// Sound enclosure of the value at the requested width.
    pub fn enclosure(&self, width_exponent: u32) -> Result<Interval<Rational>> {
        match self {
            BoundValue::Rational(r) => Ok(Interval::point(r.clone())),
            BoundValue::Surd(s) => s.enclosure(width_exponent),
            BoundValue::Interval(iv) => Ok(iv.clone()),
        }
    }
}

/// Sharp lower bound in its minimal numeric class.
pub fn lower_bound_value(n: i64, k: i64) -> Result<BoundValue> {
    Ok(BoundValue::from_surd(surd_lower_bound(n, k)?))
}

/// Two-radical upper bound in its minimal numeric class: exactly
/// rational on the boundary row `n = 2k`, an interval elsewhere.
pub fn upper_bound_value(n: i64, k: i64, width_exponent: u32) -> Result<BoundValue> {
    let iv = surd_upper_bound(n, k, width_exponent)?;
    if iv.is_point() {
        Ok(BoundValue::Rational(iv.lo().clone()))
    } else {
        Ok(BoundValue::Interval(iv))
    }
}

/// Rational lower bound `(n-k)(n+1) / (n (n-2k+1))`, valid for
/// `n >= 2k >= 2`.
pub fn basic_lower_bound(n: i64, k: i64) -> Result<Rational> {
    if !(k >= 1 && n >= 2 * k) {
        return Err(Error::Domain {
            op: "basic_lower_bound",
            reason: format!("need n >= 2k >= 2, got ({n}, {k})"),
        });
    }
    Ok(Rational::new(
        BigInt::from((n - k) * (n + 1)),
        BigInt::from(n * (n - 2 * k + 1)),
    ))
}

/// Radicand polynomial of the window endpoints:
/// `480 + 400n + 41n^2 - 22n^3 + n^4`.
fn window_radicand(n: i64) -> i64 {
    480 + 400 * n + 41 * n * n - 22 * n * n * n + n * n * n * n
}

/// The window `(k_lo, k_hi)` of `k` values (as exact surds) where the
/// sharp two-sided ratio bounds apply, for a given `n >= 2`.
pub fn window_bounds(n: i64) -> Result<(QuadSurd, QuadSurd)> {
    if n < 2 {
        return Err(Error::Domain {
            op: "window_bounds",
            reason: format!("need n >= 2, got {n}"),
        });
    }
    let base = Rational::new(BigInt::from(20 + 9 * n + n * n), BigInt::from(4 * (n - 1)));
    let rad = Rational::new(
        BigInt::from(window_radicand(n)),
        BigInt::from((n - 1) * (n - 1)),
    );
    let quarter = rq(1, 4);
    let lo = QuadSurd::new_named(base.clone(), -quarter.clone(), rad.clone(), &format!("window radicand({n})"))?;
    let hi = QuadSurd::new_named(base, quarter, rad, &format!("window radicand({n})"))?;
    Ok((lo, hi))
}

/// Integer `k` values strictly inside the window for row `n`, decided
/// with exact surd comparisons, restricted to `1 <= k <= floor(n/2)`.
pub fn window_integers(n: i64) -> Result<Vec<i64>> {
    let (lo, hi) = window_bounds(n)?;
    let mut out = Vec::new();
    for k in 1..=n / 2 {
        let kr = ri(k);
        if lo.cmp_rational(&kr) == std::cmp::Ordering::Less
            && hi.cmp_rational(&kr) == std::cmp::Ordering::Greater
        {
            out.push(k);
        }
    }
    Ok(out)
}

/// First radicand polynomial, in the `(n, k)` variables.
pub fn h1_poly() -> P {
    P::from_terms(&[
        (ri(-40), 0, 0),
        (ri(84), 0, 1),
        (ri(4), 0, 2),
        (ri(1), 0, 3),
        (ri(-140), 1, 0),
        (ri(208), 1, 1),
        (ri(-2), 1, 2),
        (ri(2), 1, 3),
        (ri(-180), 2, 0),
        (ri(169), 2, 1),
        (ri(-16), 2, 2),
        (ri(1), 2, 3),
        (ri(-100), 3, 0),
        (ri(50), 3, 1),
        (ri(-10), 3, 2),
        (ri(-20), 4, 0),
        (ri(5), 4, 1),
    ])
}

/// Second radicand polynomial, in the `(n, k)` variables.
pub fn h2_poly() -> P {
    P::from_terms(&[
        (ri(49), 0, 1),
        (ri(14), 0, 2),
        (ri(1), 0, 3),
        (ri(-20), 1, 0),
        (ri(30), 1, 1),
        (ri(-10), 1, 2),
        (ri(-20), 2, 0),
        (ri(5), 2, 1),
    ])
}

pub fn h1_at(n: i64, k: i64) -> Rational {
    h1_poly().eval(&ri(n), &ri(k))
}

pub fn h2_at(n: i64, k: i64) -> Rational {
    h2_poly().eval(&ri(n), &ri(k))
}

/// Sharp lower bound
/// `-(2+k+n+kn-n^2)/(2n(1-2k+n)) + sqrt(H1/(k (n-2k+1)^2 n^2))/2`
/// as an exact surd. Errors on a negative radicand.
pub fn surd_lower_bound(n: i64, k: i64) -> Result<QuadSurd> {
    if !(k >= 1 && n >= 2 * k) {
        return Err(Error::Domain {
            op: "surd_lower_bound",
            reason: format!("need n >= 2k >= 2, got ({n}, {k})"),
        });
    }
    let h1 = h1_at(n, k);
    if h1.is_negative() {
        return Err(Error::NegativeRadicand {
            expr: format!("H1({n}, {k}) = {h1}"),
        });
    }
    let a = Rational::new(
        BigInt::from(-(2 + k + n + k * n - n * n)),
        BigInt::from(2 * n * (1 - 2 * k + n)),
    );
    let d = h1
        / Rational::from(
            BigInt::from(k) * BigInt::from(n - 2 * k + 1).pow(2) * BigInt::from(n).pow(2),
        );
    QuadSurd::new_named(a, rq(1, 2), d, &format!("H1({n}, {k})-scaled"))
}

/// Two-radical upper bound, as an adaptive enclosure of width at most
/// `2^-width_exponent`. At `n = 2k` the bound collapses to exactly
/// `(2k+1)/2` and a point interval is returned.
pub fn surd_upper_bound(n: i64, k: i64, width_exponent: u32) -> Result<Interval<Rational>> {
    if !(k >= 1 && n >= 2 * k) {
        return Err(Error::Domain {
            op: "surd_upper_bound",
            reason: format!("need n >= 2k >= 2, got ({n}, {k})"),
        });
    }
    if n == 2 * k {
        return Ok(Interval::point(rq(2 * k + 1, 2)));
    }
    let h2 = h2_at(n, k);
    if h2.is_negative() {
        return Err(Error::NegativeRadicand {
            expr: format!("H2({n}, {k}) = {h2}"),
        });
    }
    let target = pow2_neg(width_exponent);
    let outer = Rational::new(BigInt::from(n + 1), BigInt::from(n * (1 - 2 * k + n)));
    let mut w = width_exponent.max(8) + 8;
    loop {
        let sk = sqrt_enclosure_named(&ri(k), w, &format!("k = {k}"))?;
        let sh2 = sqrt_enclosure_named(&h2, w, &format!("H2({n}, {k})"))?;
        // inner denominator sqrt(k)(k - n + 3) - sqrt(H2)
        let den = sk.scale(&ri(k - n + 3)).sub(&sh2);
        if den.contains_zero() {
            w = bump_precision(w, &format!("inner denominator at ({n}, {k})"))?;
            continue;
        }
        let num = sk.scale(&ri(2 * (2 * k - n) * (n - 1)));
        let inner = num.div(&den)?.shift(&ri(n - k));
        let h = inner.scale(&outer);
        if h.width() <= target {
            return Ok(h);
        }
        w = bump_precision(w, &format!("upper bound width at ({n}, {k})"))?;
    }
}

/// The step margin of the window induction, composed from the bounds
/// themselves:
/// `(2+n)/(n-2k+2) * 1/h(n,k) + (n-k+1)(n+2)/((1+n)(n-2k+2)) - l(n+1,k)`.
/// Nonnegative wherever the window bounds propagate to the next row.
pub fn step_margin(n: i64, k: i64, width_exponent: u32) -> Result<Interval<Rational>> {
    let l_next = surd_lower_bound(n + 1, k)?;
    let target = pow2_neg(width_exponent);
    let mut w = width_exponent.max(8) + 8;
    loop {
        let h = surd_upper_bound(n, k, w)?;
        if h.contains_zero() {
            w = bump_precision(w, &format!("upper bound around zero at ({n}, {k})"))?;
            continue;
        }
        let term1 = h.recip()?.scale(&rq(2 + n, n - 2 * k + 2));
        let term2 = Rational::new(
            BigInt::from((n - k + 1) * (n + 2)),
            BigInt::from((1 + n) * (n - 2 * k + 2)),
        );
        let m = term1.shift(&term2).sub(&l_next.enclosure(w)?);
        if m.width() <= target {
            return Ok(m);
        }
        w = bump_precision(w, &format!("step margin width at ({n}, {k})"))?;
    }
}

/// A single-expression transcription of the same step margin, evaluated
/// independently by interval arithmetic as a cross-check; it is reported
/// for sign agreement with [`step_margin`], never used as the primary
/// check.
pub fn step_margin_alt(n: i64, k: i64, width_exponent: u32) -> Result<Interval<Rational>> {
    // first radicand: the discriminant cubic shifted one row up
    let rad1 = super::quadratic::disc_cubic_at(n + 1).eval(&ri(k));
    if rad1.is_negative() {
        return Err(Error::NegativeRadicand {
            expr: format!("step-margin radicand({}, {k}) = {rad1}", n + 1),
        });
    }
    let rad2 = h2_at(n, k);
    if rad2.is_negative() {
        return Err(Error::NegativeRadicand {
            expr: format!("H2({n}, {k}) = {rad2}"),
        });
    }
    let target = pow2_neg(width_exponent);
    let mut w = width_exponent.max(8) + 8;
    loop {
        let sk = sqrt_enclosure_named(&ri(k), w, &format!("k = {k}"))?;
        let s1 = sqrt_enclosure_named(&rad1, w, "step-margin radicand")?;
        let s2 = sqrt_enclosure_named(&rad2, w, &format!("H2({n}, {k})"))?;
        let inner_den = sk.scale(&ri(3 + k - n)).sub(&s2);
        if inner_den.contains_zero() {
            w = bump_precision(w, &format!("alt inner denominator at ({n}, {k})"))?;
            continue;
        }
        let frac = sk.scale(&ri(2 * (2 * k - n) * (n - 1))).div(&inner_den)?;
        let outer_den = frac.shift(&ri(n - k));
        if outer_den.contains_zero() {
            w = bump_precision(w, &format!("alt outer denominator at ({n}, {k})"))?;
            continue;
        }
        let term4 = Interval::point(ri(n * (1 - 2 * k + n))).div(&outer_den)?;
        let term3 = s1.div(&sk.scale(&ri(4 - 4 * k + 2 * n)))?;
        let m = Interval::point(rq(1 + k - n, 4 - 4 * k + 2 * n))
            .add(&Interval::point(rq(1 - k + n, 2 - 2 * k + n)))
            .sub(&term3)
            .add(&term4);
        if m.width() <= target {
            return Ok(m);
        }
        w = bump_precision(w, &format!("alt margin width at ({n}, {k})"))?;
    }
}

pub(crate) fn pow2_neg(e: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(1) << e as usize)
}

pub(crate) fn bump_precision(w: u32, what: &str) -> Result<u32> {
    let next = w.saturating_mul(2);
    if next > 4096 {
        return Err(Error::UndecidedAtPrecision { what: what.into() });
    }
    Ok(next)
}

/// Univariate polynomial in `k`: the lower-bound radicand along the
/// boundary row `n = 2k`, `(-40 - 196k - 300k^2 - 127k^3 + 20k^4 + 4k^5)`,
/// i.e. `H1(2k, k)` with the `k^3` denominator cleared.
pub fn boundary_radicand_poly() -> UniPoly<Rational> {
    UniPoly::from_coeffs(vec![ri(-40), ri(-196), ri(-300), ri(-127), ri(20), ri(4)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    #[test]
    fn basic_lower_bound_values() {
        assert_eq!(basic_lower_bound(10, 2).unwrap(), rq(44, 35));
        assert_eq!(basic_lower_bound(4, 2).unwrap(), rq(5, 2));
        for k in 1..=20 {
            assert_eq!(basic_lower_bound(2 * k, k).unwrap(), rq(2 * k + 1, 2));
        }
        assert!(basic_lower_bound(3, 2).is_err());
    }

    #[test]
    fn window_at_19_collapses_to_rationals() {
        let (lo, hi) = window_bounds(19).unwrap();
        assert_eq!(lo.as_rational(), Some(&ri(7)));
        assert_eq!(hi.as_rational(), Some(&rq(25, 3)));
        assert_eq!(window_integers(19).unwrap(), vec![8]);
    }

    #[test]
    fn window_radicand_at_19() {
        assert_eq!(window_radicand(19), 2304);
    }

    #[test]
    fn window_rejects_negative_radicand() {
        // at n = 18 the window endpoints are complex
        assert!(matches!(
            window_bounds(18),
            Err(Error::NegativeRadicand { .. })
        ));
    }

    #[test]
    fn surd_lower_bound_rational_collapses() {
        // at (10, 5) the radicand is the square (11/10)^2
        let l = surd_lower_bound(10, 5).unwrap();
        assert_eq!(l.as_rational(), Some(&rq(11, 5)));
        // at (20, 10) it is (21/2)^2
        let l = surd_lower_bound(20, 10).unwrap();
        assert_eq!(l.as_rational(), Some(&rq(189, 20)));
        // genuine surd at (12, 6), below the boundary value 13/2
        let l = surd_lower_bound(12, 6).unwrap();
        assert!(l.as_rational().is_none());
        assert_eq!(l.cmp_rational(&rq(13, 2)), Ordering::Less);
    }

    #[test]
    fn surd_lower_bound_flags_h1_domain() {
        // H1(4, 2) = -2200: the bound does not exist there
        match surd_lower_bound(4, 2) {
            Err(Error::NegativeRadicand { expr }) => assert!(expr.contains("H1(4, 2)")),
            other => panic!("expected negative radicand, got {other:?}"),
        }
    }

    #[test]
    fn boundary_base_inequality_examples() {
        // (2k+1)/2 >= l(2k,k) at the window-relevant k
        for k in [5i64, 6, 8, 10, 20] {
            let l = surd_lower_bound(2 * k, k).unwrap();
            assert_ne!(l.cmp_rational(&rq(2 * k + 1, 2)), Ordering::Greater, "k = {k}");
        }
    }

    #[test]
    fn boundary_radicand_matches_h1_specialization() {
        let p = boundary_radicand_poly();
        for k in 1..=30i64 {
            assert_eq!(
                p.eval(&ri(k)),
                h1_at(2 * k, k),
                "H1(2k,k) equals the boundary polynomial at k = {k}"
            );
        }
    }

    #[test]
    fn upper_bound_collapses_on_boundary() {
        let h = surd_upper_bound(8, 4, 64).unwrap();
        assert!(h.is_point());
        assert_eq!(*h.lo(), rq(9, 2));
    }

    #[test]
    fn upper_bound_encloses_at_19_8() {
        let h = surd_upper_bound(19, 8, 64).unwrap();
        // h(19,8) is about 4.3596; the exact ratio there is 605/152
        assert!(*h.lo() > rq(4, 1) && *h.hi() < rq(9, 2));
        assert!(*h.lo() > rq(605, 152));
        assert!(h.width() <= pow2_neg(64));
    }

    #[test]
    fn lower_bound_below_ratio_at_19_8() {
        // the exact ratio JL(20,8)/JL(19,8) is 605/152
        let l = surd_lower_bound(19, 8).unwrap();
        assert_eq!(l.cmp_rational(&rq(605, 152)), Ordering::Less);
    }

    #[test]
    fn step_margin_positive_at_19_8() {
        let m = step_margin(19, 8, 32).unwrap();
        assert!(m.lo().is_positive());
        let alt = step_margin_alt(19, 8, 32).unwrap();
        assert!(alt.lo().is_positive());
    }
}
