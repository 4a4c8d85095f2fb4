//! Sound positivity certificates for polynomial sign claims on
//! unbounded regions.
//!
//! Both certificates are sound but incomplete: `Certified` proves the
//! claim on the whole region, `Inconclusive` claims nothing (it is never
//! a refutation) and callers fall back to exact lattice scans.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Result;
use crate::poly::{BiPoly, UniPoly};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertStatus {
    Certified,
    Inconclusive,
}

/// Outcome of a certificate attempt.
#[derive(Debug, Clone)]
pub struct CertResult {
    pub status: CertStatus,
    /// Human-readable claim, e.g. `P > 0 on n = 6k+4+t, k >= 0, t >= 0`.
    pub claim: String,
    /// What decided it: the positive constant term, or the offending
    /// coefficient / root location.
    pub witness: String,
}

impl CertResult {
    pub fn certified(&self) -> bool {
        self.status == CertStatus::Certified
    }
}

impl fmt::Display for CertResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({})",
            match self.status {
                CertStatus::Certified => "certified",
                CertStatus::Inconclusive => "inconclusive",
            },
            self.claim,
            self.witness
        )
    }
}

/// Shift-and-expand nonnegativity certificate on the region
/// `{ (n, k) : k >= 0, n >= alpha*k + beta }`.
///
/// Substitutes `n = alpha*k + beta + t` and expands in `(k, t)`. If every
/// coefficient is nonnegative the polynomial is nonnegative on the whole
/// (real) region; if additionally the constant term is positive it is
/// strictly positive there. Anything else is inconclusive.
pub fn shift_expand_nonneg<T: Scalar>(
    p: &BiPoly<T>,
    alpha: i64,
    beta: i64,
    strict: bool,
) -> CertResult {
    let claim = format!(
        "P {} 0 on n = {alpha}k+{beta}+t, k >= 0, t >= 0",
        if strict { ">" } else { ">=" }
    );
    let expanded = p.substitute_first_affine(alpha, beta);
    if expanded.is_zero() {
        return CertResult {
            status: if strict {
                CertStatus::Inconclusive
            } else {
                CertStatus::Certified
            },
            claim,
            witness: "expansion is identically zero".into(),
        };
    }
    for (&(i, j), c) in expanded.terms() {
        if *c < T::zero() {
            return CertResult {
                status: CertStatus::Inconclusive,
                claim,
                witness: format!("negative coefficient {c} on k^{i} t^{j}"),
            };
        }
    }
    let constant = expanded.coeff(0, 0);
    if strict && constant.is_zero() {
        return CertResult {
            status: CertStatus::Inconclusive,
            claim,
            witness: "all coefficients nonnegative but constant term is zero".into(),
        };
    }
    CertResult {
        status: CertStatus::Certified,
        claim,
        witness: if strict {
            format!("all coefficients nonnegative, constant term {constant} > 0")
        } else {
            "all coefficients nonnegative".into()
        },
    }
}

/// Certifies a strict sign of `p` on the ray `[from, oo)` by Sturm
/// counting: certified iff `p(from)` has the claimed sign and no root
/// lies beyond `from`. The decision is exact.
pub fn univariate_positive_on_ray<T: Scalar>(
    p: &UniPoly<T>,
    from: &T,
    claim: Ordering,
) -> Result<CertResult> {
    let claim_str = format!(
        "p {} 0 on [{from}, oo)",
        if claim == Ordering::Greater { ">" } else { "<" }
    );
    let decided = p.sign_on_ray(from)?;
    match decided {
        Some(s) if s == claim => Ok(CertResult {
            status: CertStatus::Certified,
            claim: claim_str,
            witness: format!("p({from}) = {} and no real roots beyond {from}", p.eval(from)),
        }),
        Some(s) => Ok(CertResult {
            status: CertStatus::Inconclusive,
            claim: claim_str,
            witness: format!("sign on the ray is {s:?}, not the claimed {claim:?}"),
        }),
        None => Ok(CertResult {
            status: CertStatus::Inconclusive,
            claim: claim_str,
            witness: "p has a root on the ray (or vanishes at its endpoint)".into(),
        }),
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
    fn shift_expand_certifies_region_polynomial() {
        // n - 6k - 4 on n = 6k+4+t: expansion is exactly t -> nonneg holds,
        // strict does not (constant term zero)
        let p = m(1, 1, 0).add(&m(-6, 0, 1)).add(&m(-4, 0, 0));
        assert!(shift_expand_nonneg(&p, 6, 4, false).certified());
        assert!(!shift_expand_nonneg(&p, 6, 4, true).certified());
    }

    #[test]
    fn shift_expand_product_of_positive_factors() {
        // (1+n)(n-6k-3)(n-3k-1)(n-2k+2) > 0 on n = 6k+4+t
        let f1 = m(1, 1, 0).add(&m(1, 0, 0));
        let f2 = m(1, 1, 0).add(&m(-6, 0, 1)).add(&m(-3, 0, 0));
        let f3 = m(1, 1, 0).add(&m(-3, 0, 1)).add(&m(-1, 0, 0));
        let f4 = m(1, 1, 0).add(&m(-2, 0, 1)).add(&m(2, 0, 0));
        let p = f1.mul(&f2).mul(&f3).mul(&f4);
        let cert = shift_expand_nonneg(&p, 6, 4, true);
        assert!(cert.certified(), "{cert}");
    }

    #[test]
    fn shift_expand_incomplete_not_refuting() {
        // k - n on n = k + t: coefficient -1 on t -> inconclusive
        let p = m(1, 0, 1).add(&m(-1, 1, 0));
        let cert = shift_expand_nonneg(&p, 1, 0, false);
        assert!(!cert.certified());
        assert!(cert.witness.contains("negative coefficient"));
    }

    #[test]
    fn ray_certificates() {
        // (k-1)^2 claimed > 0 on [0, oo): not certified, root at 1
        let p = UniPoly::from_coeffs(vec![rat_int(1), rat_int(-2), rat_int(1)]);
        assert!(!univariate_positive_on_ray(&p, &rat_int(0), Ordering::Greater)
            .unwrap()
            .certified());
        // -k - 1 < 0 on [0, oo)
        let q = UniPoly::from_coeffs(vec![rat_int(-1), rat_int(-1)]);
        assert!(univariate_positive_on_ray(&q, &rat_int(0), Ordering::Less)
            .unwrap()
            .certified());
    }
}
