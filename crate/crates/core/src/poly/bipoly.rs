//! Sparse bivariate polynomials with exact arithmetic.
//!
//! Terms map exponent pairs `(i, j)` (first and second variable) to
//! nonzero coefficients. Used for the two-variable identities in `(n, k)`
//! and, after an affine substitution of the first variable, for
//! positivity certificates in `(k, t)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::poly::UniPoly;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct BiPoly<T> {
    terms: BTreeMap<(u32, u32), T>,
}

impl<T: Scalar> BiPoly<T> {
    pub fn zero() -> Self {
        BiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: T, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    /// Builds from `(coefficient, first-exponent, second-exponent)` terms.
    pub fn from_terms(terms: &[(T, u32, u32)]) -> Self {
        let mut out = Self::zero();
        for (c, i, j) in terms {
            out.add_term(c.clone(), *i, *j);
        }
        out
    }

    fn add_term(&mut self, c: T, i: u32, j: u32) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> T {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(T::zero)
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&m, c)| (m, -c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(c.clone(), i, j);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(c1.clone() * c2.clone(), i1 + i2, j1 + j2);
            }
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero();
        for (&(i, j), v) in &self.terms {
            out.add_term(v.clone() * c.clone(), i, j);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::constant(T::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, x: &T, y: &T) -> T {
        let mut acc = T::zero();
        for (&(i, j), c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..i {
                term = term * x.clone();
            }
            for _ in 0..j {
                term = term * y.clone();
            }
            acc = acc + term;
        }
        acc
    }

    /// Substitutes a value for the first variable, leaving a univariate
    /// polynomial in the second.
    pub fn at_first(&self, x: &T) -> UniPoly<T> {
        let deg = self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut coeffs = vec![T::zero(); deg as usize + 1];
        for (&(i, j), c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..i {
                term = term * x.clone();
            }
            coeffs[j as usize] = coeffs[j as usize].clone() + term;
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Substitutes `first -> first + amount`, staying in the same two
    /// variables.
    pub fn shift_first(&self, amount: i64) -> Self {
        let base = Self::monomial(T::one(), 1, 0).add(&Self::constant(scalar_from_i64::<T>(amount)));
        let max_i = self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let mut powers = Vec::with_capacity(max_i as usize + 1);
        powers.push(Self::constant(T::one()));
        for e in 1..=max_i {
            let next = powers[e as usize - 1].mul(&base);
            powers.push(next);
        }
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out = out.add(&powers[i as usize].mul(&Self::monomial(c.clone(), 0, j)));
        }
        out
    }

    /// Substitutes `first = alpha * second + beta + t`.
    ///
    /// In the result the first variable is the old second variable and
    /// the second variable is the fresh `t`, so a polynomial in `(n, k)`
    /// becomes one in `(k, t)` describing the region `n >= alpha*k + beta`
    /// (with `t = n - alpha*k - beta >= 0`).
    pub fn substitute_first_affine(&self, alpha: i64, beta: i64) -> Self {
        let base = {
            let mut b = Self::zero();
            b.add_term(scalar_from_i64::<T>(alpha), 1, 0);
            b.add_term(scalar_from_i64::<T>(beta), 0, 0);
            b.add_term(T::one(), 0, 1);
            b
        };
        let max_i = self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let mut powers = Vec::with_capacity(max_i as usize + 1);
        powers.push(Self::constant(T::one()));
        for e in 1..=max_i {
            let next = powers[e as usize - 1].mul(&base);
            powers.push(next);
        }
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            // old second variable becomes the new first variable
            let shifted = powers[i as usize].mul(&Self::monomial(c.clone(), j, 0));
            out = out.add(&shifted);
        }
        out
    }
}

pub(crate) fn scalar_from_i64<T: Scalar>(v: i64) -> T {
    let mut acc = T::zero();
    let one = T::one();
    for _ in 0..v.unsigned_abs() {
        acc = acc + one.clone();
    }
    if v < 0 {
        -acc
    } else {
        acc
    }
}

impl<T: Scalar> fmt::Display for BiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            if i > 0 {
                write!(f, "*x^{i}")?;
            }
            if j > 0 {
                write!(f, "*y^{j}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_int;
    use crate::Rational;

    fn m(c: i64, i: u32, j: u32) -> BiPoly<Rational> {
        BiPoly::monomial(rat_int(c), i, j)
    }

    #[test]
    fn arithmetic_and_eval() {
        // (x + y)^2 = x^2 + 2xy + y^2
        let s = m(1, 1, 0).add(&m(1, 0, 1));
        let sq = s.pow(2);
        assert_eq!(sq.coeff(2, 0), rat_int(1));
        assert_eq!(sq.coeff(1, 1), rat_int(2));
        assert_eq!(sq.coeff(0, 2), rat_int(1));
        assert_eq!(sq.eval(&rat_int(3), &rat_int(4)), rat_int(49));
        assert!(s.sub(&s).is_zero());
    }

    #[test]
    fn partial_substitution() {
        // x^2 y + 3 y^2 at x = 2 -> 4 y + 3 y^2
        let p = m(1, 2, 1).add(&m(3, 0, 2));
        let u = p.at_first(&rat_int(2));
        assert_eq!(u.coeff(1), rat_int(4));
        assert_eq!(u.coeff(2), rat_int(3));
    }

    #[test]
    fn affine_substitution() {
        // x - 6y - 4 under x = 6y + 4 + t becomes exactly t
        let p = m(1, 1, 0).add(&m(-6, 0, 1)).add(&m(-4, 0, 0));
        let s = p.substitute_first_affine(6, 4);
        assert_eq!(s, m(1, 0, 1));
    }
}
