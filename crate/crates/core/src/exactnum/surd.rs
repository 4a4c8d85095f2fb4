//! Quadratic surds `a + b*sqrt(d)` with exact sign determination.
//!
//! The radicand is kept as given (no square-free factoring); comparisons
//! are decided by at most two squarings with sign bookkeeping and never
//! approximate. Canonical form: `d = 0` exactly when the value is
//! rational, and `d` is never an exact rational square.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{sqrt_enclosure_named, sqrt_exact, Interval};
use crate::error::{Error, Result};
use crate::Rational;

/// Value `a + b*sqrt(d)` with rational `a`, `b`, `d >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadSurd {
    a: Rational,
    b: Rational,
    d: Rational,
}

impl QuadSurd {
    /// Builds and canonicalizes. Errors on `d < 0` (unless `b = 0`, in
    /// which case the radical does not contribute), with `expr` naming
    /// the offending radicand.
    pub fn new(a: Rational, b: Rational, d: Rational) -> Result<Self> {
        Self::new_named(a, b, d, "radicand")
    }

    pub fn new_named(a: Rational, b: Rational, d: Rational, expr: &str) -> Result<Self> {
        if b.is_zero() || d.is_zero() {
            if d.is_negative() && !b.is_zero() {
                return Err(Error::NegativeRadicand {
                    expr: format!("{expr} = {d}"),
                });
            }
            return Ok(QuadSurd {
                a,
                b: Rational::zero(),
                d: Rational::zero(),
            });
        }
        if d.is_negative() {
            return Err(Error::NegativeRadicand {
                expr: format!("{expr} = {d}"),
            });
        }
        if let Some(root) = sqrt_exact(&d) {
            return Ok(QuadSurd {
                a: a + b * root,
                b: Rational::zero(),
                d: Rational::zero(),
            });
        }
        Ok(QuadSurd { a, b, d })
    }

    pub fn from_rational(a: Rational) -> Self {
        QuadSurd {
            a,
            b: Rational::zero(),
            d: Rational::zero(),
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_coeff(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> &Rational {
        &self.d
    }

    /// `Some(value)` when the surd collapsed to a rational.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    /// Exact sign of `self - t`, decided by squaring. Never approximates.
    pub fn cmp_rational(&self, t: &Rational) -> Ordering {
        let u = self.a.clone() - t.clone();
        if self.b.is_zero() {
            return u.cmp(&Rational::zero());
        }
        // self - t = u + b*sqrt(d) with d > 0 not a perfect square,
        // so sqrt(d) is irrational and equality forces u = b = 0.
        let b = &self.b;
        if b.is_positive() {
            if !u.is_negative() {
                return Ordering::Greater;
            }
            // u < 0 < b: sign of b^2 d - u^2
            (b * b * &self.d).cmp(&(&u * &u))
        } else {
            if !u.is_positive() {
                return Ordering::Less;
            }
            // b < 0 < u: sign of u^2 - b^2 d
            (&u * &u).cmp(&(b * b * &self.d))
        }
    }

    /// Exact sign of the value.
    pub fn sign(&self) -> Ordering {
        self.cmp_rational(&Rational::zero())
    }

    /// Exact comparison with another surd over the same radicand.
    pub fn cmp_same(&self, other: &QuadSurd) -> Result<Ordering> {
        Ok(self.sub(other)?.sign())
    }

    pub fn add_rational(&self, t: &Rational) -> Self {
        QuadSurd {
            a: &self.a + t,
            b: self.b.clone(),
            d: self.d.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return QuadSurd::from_rational(Rational::zero());
        }
        QuadSurd {
            a: &self.a * c,
            b: &self.b * c,
            d: self.d.clone(),
        }
    }

    fn same_field(&self, other: &QuadSurd) -> Result<Rational> {
        if self.b.is_zero() {
            return Ok(other.d.clone());
        }
        if other.b.is_zero() || self.d == other.d {
            return Ok(self.d.clone());
        }
        Err(Error::Domain {
            op: "QuadSurd",
            reason: format!("mixed radicands {} and {}", self.d, other.d),
        })
    }

    /// Sum; both operands must live in the same radical field.
    pub fn add(&self, other: &QuadSurd) -> Result<Self> {
        let d = self.same_field(other)?;
        QuadSurd::new(&self.a + &other.a, &self.b + &other.b, d)
    }

    pub fn sub(&self, other: &QuadSurd) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Product; both operands must live in the same radical field.
    pub fn mul(&self, other: &QuadSurd) -> Result<Self> {
        let d = self.same_field(other)?;
        let a = &self.a * &other.a + &self.b * &other.b * &d;
        let b = &self.a * &other.b + &self.b * &other.a;
        QuadSurd::new(a, b, d)
    }

    /// Sound rational enclosure of width at most `2^-width_exponent`.
    pub fn enclosure(&self, width_exponent: u32) -> Result<Interval<Rational>> {
        if self.b.is_zero() {
            return Ok(Interval::point(self.a.clone()));
        }
        let mut w = width_exponent;
        loop {
            let root = sqrt_enclosure_named(&self.d, w, "surd radicand")?;
            let enc = root.scale(&self.b).shift(&self.a);
            let target = Rational::new(1.into(), num_bigint::BigInt::from(1) << width_exponent as usize);
            if enc.width() <= target {
                return Ok(enc);
            }
            w = w
                .checked_add(16)
                .filter(|&w| w <= 4096)
                .ok_or_else(|| Error::UndecidedAtPrecision {
                    what: format!("enclosure of {self}"),
                })?;
        }
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + ({})*sqrt({})", self.a, self.b, self.d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int};

    #[test]
    fn sign_by_squaring() {
        // 1 + sqrt(2) vs 2: sqrt(2) > 1
        let s = QuadSurd::new(rat_int(1), rat_int(1), rat_int(2)).unwrap();
        assert_eq!(s.cmp_rational(&rat_int(2)), Ordering::Greater);
        // rational surd
        let s = QuadSurd::new(rat_int(7), rat_int(0), rat_int(0)).unwrap();
        assert_eq!(s.cmp_rational(&rat_int(7)), Ordering::Equal);
        // negative radical coefficient: 5 - 2 sqrt(2) vs 2: 4 < 8 -> less... (5-2sqrt2 ~ 2.17)
        let s = QuadSurd::new(rat_int(5), rat_int(-2), rat_int(2)).unwrap();
        assert_eq!(s.cmp_rational(&rat_int(2)), Ordering::Greater);
        assert_eq!(s.cmp_rational(&rat_int(3)), Ordering::Less);
    }

    #[test]
    fn canonicalization() {
        // exact-square radicand collapses to a rational: 1 + (21/2)/2
        let s = QuadSurd::new(rat_int(1), rat(1, 2), rat(441, 4)).unwrap();
        assert_eq!(s.as_rational(), Some(&rat(25, 4)));
        // zero radical coefficient clears the radicand
        let s = QuadSurd::new(rat_int(3), rat_int(0), rat_int(7)).unwrap();
        assert_eq!(s.radicand(), &rat_int(0));
        // negative radicand is a domain error, not a crash
        assert!(matches!(
            QuadSurd::new(rat_int(0), rat_int(1), rat_int(-275)),
            Err(Error::NegativeRadicand { .. })
        ));
    }

    #[test]
    fn field_arithmetic() {
        let s = QuadSurd::new(rat_int(1), rat_int(1), rat_int(2)).unwrap();
        let sq = s.mul(&s).unwrap(); // (1+sqrt2)^2 = 3 + 2 sqrt2
        assert_eq!(sq.rational_part(), &rat_int(3));
        assert_eq!(sq.radical_coeff(), &rat_int(2));
        // (1+sqrt2)(1-sqrt2) = -1
        let conj = QuadSurd::new(rat_int(1), rat_int(-1), rat_int(2)).unwrap();
        assert_eq!(s.mul(&conj).unwrap().as_rational(), Some(&rat_int(-1)));
        assert!(s
            .mul(&QuadSurd::new(rat_int(0), rat_int(1), rat_int(3)).unwrap())
            .is_err());
    }

    #[test]
    fn enclosure_contains_and_narrows() {
        let s = QuadSurd::new(rat_int(1), rat_int(3), rat_int(2)).unwrap();
        let e = s.enclosure(40).unwrap();
        assert!(e.width() <= Rational::new(1.into(), num_bigint::BigInt::from(1) << 40));
        // 1 + 3 sqrt(2) is about 5.24264
        assert!(*e.lo() > rat(52426, 10000) && *e.hi() < rat(52427, 10000));
        // enclosure-based comparison agrees with the exact one
        assert_eq!(s.cmp_rational(&rat_int(5)), Ordering::Greater);
        assert!(*e.lo() > rat_int(5));
    }
}
