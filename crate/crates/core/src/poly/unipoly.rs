//! Univariate polynomials: exact evaluation, Sturm chains, real-root
//! counting on half-open intervals, and isolation of the smallest real
//! root.
//!
//! Coefficients are any [`Scalar`]; Sturm counts and isolation are exact
//! when the scalar is exact. Chain members are scaled monic (by the
//! absolute value of the leading coefficient) to keep rational
//! coefficients small; positive scaling preserves every sign.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::Interval;
use crate::scalar::{half, max_of, Scalar};

/// Dense univariate polynomial, coefficients in ascending degree order,
/// no trailing zeros (the zero polynomial stores nothing).
#[derive(Debug, Clone, PartialEq)]
pub struct UniPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> UniPoly<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `x - r`.
    pub fn linear_root(r: T) -> Self {
        Self::from_coeffs(vec![-r, T::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        let mut mult = T::one();
        for c in &self.coeffs[1..] {
            out.push(c.clone() * mult.clone());
            mult = mult + T::one();
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(out)
    }

    /// Euclidean division; the scalar must be a field.
    pub fn divmod(&self, div: &Self) -> Result<(Self, Self)> {
        if div.is_zero() {
            return Err(Error::ZeroPolynomial { op: "divmod" });
        }
        let dd = div.degree().unwrap();
        let lead = div.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let r_deg = rem.len() - 1;
            let factor = rem.last().unwrap().clone() / lead.clone();
            if factor.is_zero() {
                rem.pop();
                continue;
            }
            quot[r_deg - dd] = factor.clone();
            for i in 0..=dd {
                let idx = r_deg - dd + i;
                rem[idx] = rem[idx].clone() - factor.clone() * div.coeffs[i].clone();
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Monic normalization by |leading coefficient|; keeps every sign.
    fn scaled_monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let s = lc.abs();
                self.scale(&(T::one() / s))
            }
        }
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.scale(&(T::one() / a.leading().unwrap().clone()))
        }
    }

    /// Square-free part `p / gcd(p, p')`.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().map_or(true, |d| d <= 1) {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        let (q, r) = self.divmod(&g).expect("gcd divides");
        debug_assert!(r.is_zero());
        q
    }

    /// Cauchy bound: every real root has absolute value below the result.
    pub fn cauchy_root_bound(&self) -> Result<T> {
        let lead = self
            .leading()
            .ok_or(Error::ZeroPolynomial {
                op: "cauchy_root_bound",
            })?
            .clone();
        let mut m = T::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            m = max_of(m, (c.clone() / lead.clone()).abs());
        }
        // strict bound: 1 + max|c_i/c_lead| is non-strict, add one more
        Ok(m + T::one() + T::one())
    }

    /// Sturm chain of `self` (caller supplies a square-free polynomial
    /// when exact distinct-root counts are wanted).
    pub fn sturm_chain(&self) -> Vec<Self> {
        let mut chain = vec![self.scaled_monic()];
        let d = self.derivative();
        if d.is_zero() {
            return chain;
        }
        chain.push(d.scaled_monic());
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2].divmod(&chain[n - 1]).expect("nonzero");
            if r.is_zero() {
                break;
            }
            chain.push(r.neg().scaled_monic());
        }
        chain
    }

    /// Exact count of distinct real roots in the half-open interval
    /// `(a, b]`. Non-square-free input is reduced first.
    pub fn sturm_count(&self, a: &T, b: &T) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial { op: "sturm_count" });
        }
        if a >= b {
            return Ok(0);
        }
        let p = self.squarefree_part();
        let chain = p.sturm_chain();
        let va = sign_variations(&chain, a);
        let vb = sign_variations(&chain, b);
        debug_assert!(va >= vb);
        Ok(va - vb)
    }

    /// Total number of distinct real roots.
    pub fn real_root_count(&self) -> Result<usize> {
        let bound = self.cauchy_root_bound()?;
        self.sturm_count(&-bound.clone(), &bound)
    }

    /// Isolating interval of width at most `2^-width_exponent` for the
    /// smallest real root. The returned interval contains exactly that
    /// root (Sturm-verified), and no root lies below it.
    pub fn isolate_smallest_root(&self, width_exponent: u32) -> Result<Interval<T>> {
        let p = self.squarefree_part();
        if p.degree() == Some(1) {
            // exact rational root
            let root = -(p.coeff(0) / p.coeff(1));
            return Ok(Interval::point(root));
        }
        let bound = p.cauchy_root_bound()?;
        let chain = p.sturm_chain();
        let count = |a: &T, b: &T| -> usize {
            if a >= b {
                return 0;
            }
            sign_variations(&chain, a) - sign_variations(&chain, b)
        };
        let mut lo = -bound.clone();
        let mut hi = bound.clone();
        if count(&lo, &hi) == 0 {
            return Err(Error::NoRealRoot);
        }
        let mut target = T::one();
        let h = half::<T>();
        for _ in 0..width_exponent {
            target = target * h.clone();
        }
        // invariant: no root at or below lo, at least one root in (lo, hi]
        loop {
            if count(&lo, &hi) == 1 && hi.clone() - lo.clone() <= target {
                return Interval::new(lo, hi);
            }
            let mid = (lo.clone() + hi.clone()) * h.clone();
            if p.eval(&mid).is_zero() {
                // mid is a root; it is the smallest iff nothing lies left of it
                if count(&lo, &mid) == 1 {
                    return Ok(Interval::point(mid));
                }
                hi = mid;
            } else if count(&lo, &mid) >= 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }

    /// Decides the strict sign of `p` on the ray `[from, oo)`, exactly.
    /// `None` when `p` vanishes somewhere on the ray.
    pub fn sign_on_ray(&self, from: &T) -> Result<Option<Ordering>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial { op: "sign_on_ray" });
        }
        let at = self.eval(from);
        let s = if at > T::zero() {
            Ordering::Greater
        } else if at < T::zero() {
            Ordering::Less
        } else {
            return Ok(None);
        };
        let bound = self.cauchy_root_bound()?;
        let b = max_of(bound, from.clone() + T::one());
        if self.sturm_count(from, &b)? == 0 {
            Ok(Some(s))
        } else {
            Ok(None)
        }
    }
}

/// Sign variations of the chain at `x`, zeros dropped. With this
/// convention `V(a) - V(b)` counts roots in `(a, b]`.
fn sign_variations<T: Scalar>(chain: &[UniPoly<T>], x: &T) -> usize {
    let mut last: Option<bool> = None;
    let mut variations = 0;
    for p in chain {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let pos = v > T::zero();
        if let Some(prev) = last {
            if prev != pos {
                variations += 1;
            }
        }
        last = Some(pos);
    }
    variations
}

impl<T: Scalar> fmt::Display for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}
