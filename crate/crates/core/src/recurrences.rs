//! Every recurrence identity of the triangle, encoded as data — offsets
//! plus rational-function coefficients plus a validity guard — and
//! verified exactly over lattice ranges by one generic residual
//! evaluator. A transcription slip in any single coefficient is caught
//! by the scans rather than silently shared between code paths.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{BiPoly, UniPoly};
use crate::report::{Check, Method};
use crate::triangle::JLTable;
use crate::Rational;

type P = BiPoly<Rational>;

/// Rational function of the lattice point, as a polynomial pair.
#[derive(Debug, Clone)]
pub struct RatFn {
    num: P,
    den: P,
}

impl RatFn {
    pub fn new(num: P, den: P) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFn { num, den }
    }

    pub fn from_poly(num: P) -> Self {
        RatFn {
            num,
            den: P::constant(Rational::one()),
        }
    }

    pub fn eval(&self, n: i64, k: i64) -> Result<Rational> {
        let nv = Rational::from(BigInt::from(n));
        let kv = Rational::from(BigInt::from(k));
        let den = self.den.eval(&nv, &kv);
        if den.is_zero() {
            return Err(Error::Domain {
                op: "RatFn::eval",
                reason: format!("denominator vanishes at ({n}, {k})"),
            });
        }
        Ok(self.num.eval(&nv, &kv) / den)
    }

    pub fn add(&self, rhs: &RatFn) -> RatFn {
        RatFn {
            num: self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            den: self.den.mul(&rhs.den),
        }
    }

    pub fn mul(&self, rhs: &RatFn) -> RatFn {
        RatFn {
            num: self.num.mul(&rhs.num),
            den: self.den.mul(&rhs.den),
        }
    }

    pub fn neg(&self) -> RatFn {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    /// Equality as formal rational functions (cross-multiplication).
    pub fn equivalent(&self, rhs: &RatFn) -> bool {
        self.num.mul(&rhs.den) == rhs.num.mul(&self.den)
    }
}

/// Which sequence the offsets of an identity index into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqKind {
    /// The triangle itself; offsets apply to both `n` and `k`.
    Jl,
    /// The forward difference `delta(n, k)`.
    Delta,
    /// The diagonal `delta(6k+4, k)`; identity runs over `k` alone.
    DiagA,
    /// The diagonal `delta(6k+3, k)`; identity runs over `k` alone.
    DiagB,
}

pub struct Term {
    pub dn: i64,
    pub dk: i64,
    pub coeff: RatFn,
}

pub struct RecurrenceSpec {
    pub id: &'static str,
    pub seq: SeqKind,
    pub terms: Vec<Term>,
    /// Guard description, e.g. `n >= 2k, k >= 1`.
    pub domain: &'static str,
    pub k_min: i64,
    /// Whether the lattice requires `n >= 2k` (triangle identities).
    pub needs_n_ge_2k: bool,
}

impl RecurrenceSpec {
    fn max_dn(&self) -> i64 {
        self.terms.iter().map(|t| t.dn).max().unwrap_or(0)
    }

    fn min_dn(&self) -> i64 {
        self.terms.iter().map(|t| t.dn).min().unwrap_or(0)
    }

    pub fn in_domain(&self, n: i64, k: i64) -> bool {
        match self.seq {
            SeqKind::DiagA | SeqKind::DiagB => k >= self.k_min,
            SeqKind::Jl | SeqKind::Delta => {
                k >= self.k_min
                    && (!self.needs_n_ge_2k || n >= 2 * k)
                    && n + self.min_dn() >= 1
            }
        }
    }

    fn seq_value(&self, table: &JLTable, n: i64, k: i64, term: &Term) -> Rational {
        let v = match self.seq {
            SeqKind::Jl => table.get(n + term.dn, k + term.dk),
            SeqKind::Delta => table.delta(n + term.dn, k + term.dk),
            SeqKind::DiagA => table.diag_a(k + term.dk),
            SeqKind::DiagB => table.diag_b(k + term.dk),
        };
        Rational::from(v)
    }

    /// Exact residual of the identity at a lattice point (0 means the
    /// identity holds there). Out-of-domain points are an error naming
    /// the violated guard.
    pub fn eval_residual(&self, table: &JLTable, n: i64, k: i64) -> Result<Rational> {
        if !self.in_domain(n, k) {
            return Err(Error::Domain {
                op: "eval_residual",
                reason: format!("({n}, {k}) violates guard [{}] of {}", self.domain, self.id),
            });
        }
        let mut acc = Rational::zero();
        for term in &self.terms {
            acc += self.coeff_at(term, n, k)? * self.seq_value(table, n, k, term);
        }
        Ok(acc)
    }

    fn coeff_at(&self, term: &Term, n: i64, k: i64) -> Result<Rational> {
        term.coeff.eval(n, k)
    }

    /// Scans the full lattice of the identity's domain that the table
    /// can support, verifying an exactly-zero residual everywhere.
    pub fn scan(&self, table: &JLTable, n_max: i64, k_max: i64) -> Check {
        let mut check = Check::new(
            format!("recurrence-{}", self.id),
            format!("{} (n <= {n_max}, k <= {k_max})", self.domain),
            Method::ExactPointwise,
        );
        match self.seq {
            SeqKind::Jl | SeqKind::Delta => {
                let n_top = n_max.min(table.n_max() - self.max_dn());
                for n in 1..=n_top {
                    for k in self.k_min..=(n / 2).min(k_max) {
                        if !self.in_domain(n, k) {
                            continue;
                        }
                        check.points_checked += 1;
                        match self.eval_residual(table, n, k) {
                            Ok(r) if r.is_zero() => {}
                            Ok(r) => check.fail(format!("({n}, {k}): residual {r}")),
                            Err(e) => check.fail(format!("({n}, {k}): {e}")),
                        }
                    }
                }
            }
            SeqKind::DiagA | SeqKind::DiagB => {
                let offset = if self.seq == SeqKind::DiagA { 4 } else { 3 };
                let max_dk = self.terms.iter().map(|t| t.dk).max().unwrap_or(0);
                for k in self.k_min..=k_max {
                    // deepest row referenced: the delta at k + max_dk
                    if 6 * (k + max_dk) + offset > table.n_max() {
                        check.note(format!(
                            "k > {} needs rows beyond the table; stopped there",
                            k - 1
                        ));
                        break;
                    }
                    check.points_checked += 1;
                    match self.eval_residual(table, 0, k) {
                        Ok(r) if r.is_zero() => {}
                        Ok(r) => check.fail(format!("k = {k}: residual {r}")),
                        Err(e) => check.fail(format!("k = {k}: {e}")),
                    }
                }
            }
        }
        check
    }
}

// ---- polynomial building blocks -------------------------------------

fn c(v: i64) -> P {
    P::constant(Rational::from(BigInt::from(v)))
}

/// `a*n + b*k + d` in the `(n, k)` variables.
fn lin(a: i64, b: i64, d: i64) -> P {
    P::from_terms(&[
        (Rational::from(BigInt::from(a)), 1, 0),
        (Rational::from(BigInt::from(b)), 0, 1),
        (Rational::from(BigInt::from(d)), 0, 0),
    ])
}

fn prod(factors: &[P]) -> P {
    factors.iter().fold(c(1), |acc, f| acc.mul(f))
}

/// The second-order coefficients of the difference recurrence in `n`:
/// `d0 delta(n,k) + d1 delta(n+1,k) + d2 delta(n+2,k) = 0`.
pub fn delta_step_polys() -> [P; 3] {
    let d0 = prod(&[lin(1, 0, 1), lin(1, 0, 2), lin(1, -6, -2), lin(1, -3, 0)]);
    let d1 = lin(1, 0, 2).mul(&P::from_terms(&[
        (Rational::from(BigInt::from(3)), 0, 0),
        (Rational::from(BigInt::from(12)), 0, 1),
        (Rational::from(BigInt::from(3)), 0, 2),
        (Rational::from(BigInt::from(-18)), 0, 3),
        (Rational::from(BigInt::from(8)), 1, 1),
        (Rational::from(BigInt::from(27)), 1, 2),
        (Rational::from(BigInt::from(-2)), 2, 0),
        (Rational::from(BigInt::from(-10)), 2, 1),
        (Rational::from(BigInt::from(1)), 3, 0),
    ]));
    let d2 = prod(&[lin(1, 0, 1), lin(1, -6, -3), lin(1, -3, -1), lin(1, -2, 2)]).neg();
    [d0, d1, d2]
}

/// `a*k + b` as a univariate polynomial in `k`.
fn lin_k(a: i64, b: i64) -> UniPoly<Rational> {
    UniPoly::from_coeffs(vec![
        Rational::from(BigInt::from(b)),
        Rational::from(BigInt::from(a)),
    ])
}

fn poly_k(coeffs: &[i64]) -> UniPoly<Rational> {
    UniPoly::from_coeffs(coeffs.iter().map(|&v| Rational::from(BigInt::from(v))).collect())
}

fn prod_k(factors: &[UniPoly<Rational>]) -> UniPoly<Rational> {
    factors
        .iter()
        .fold(UniPoly::constant(Rational::one()), |acc, f| acc.mul(f))
}

const STEP_CORE: [i64; 7] = [
    462369600,
    2067513120,
    3748025842,
    3537926637,
    1838345599,
    499358523,
    55457479,
];

/// Coefficients of the second-order recurrence satisfied by the
/// increasing diagonal `delta(6k+4, k)`.
///
/// The recurrence carries side conditions on its index being a natural
/// number; they hold for every integer `k >= 0`, the only lattice this
/// crate evaluates on.
pub fn diag_a_step_polys() -> [UniPoly<Rational>; 3] {
    let b0 = prod_k(&[
        poly_k(&[72]),
        lin_k(2, 3),
        lin_k(3, 4),
        lin_k(3, 5),
        lin_k(3, 7),
        lin_k(3, 8),
        lin_k(6, 5),
        lin_k(6, 7),
        poly_k(&[2640, 2681, 671]),
    ]);
    let b1 = prod_k(&[
        poly_k(&[-1]),
        lin_k(1, 2),
        lin_k(3, 7),
        lin_k(3, 8),
        poly_k(&STEP_CORE),
    ]);
    let b2 = prod_k(&[
        poly_k(&[40]),
        lin_k(1, 2),
        lin_k(1, 3),
        lin_k(2, 5),
        lin_k(3, 4),
        lin_k(3, 5),
        lin_k(4, 9),
        lin_k(4, 11),
        poly_k(&[630, 1339, 671]),
    ]);
    [b0, b1, b2]
}

/// Coefficients of the second-order recurrence satisfied by the
/// decreasing diagonal `delta(6k+3, k)`.
pub fn diag_b_step_polys() -> [UniPoly<Rational>; 3] {
    let c0 = prod_k(&[
        poly_k(&[72]),
        lin_k(2, 3),
        lin_k(2, 3),
        lin_k(3, 2),
        lin_k(3, 4),
        lin_k(3, 7),
        lin_k(6, 5),
        lin_k(6, 7),
        poly_k(&[2640, 2681, 671]),
    ]);
    let c1 = prod_k(&[
        poly_k(&[-1]),
        lin_k(1, 2),
        lin_k(2, 1),
        lin_k(3, 7),
        poly_k(&STEP_CORE),
    ]);
    let c2 = prod_k(&[
        poly_k(&[40]),
        lin_k(1, 2),
        lin_k(1, 3),
        lin_k(2, 1),
        lin_k(2, 3),
        lin_k(3, 4),
        lin_k(4, 9),
        lin_k(4, 11),
        poly_k(&[630, 1339, 671]),
    ]);
    [c0, c1, c2]
}

fn unipoly_k_to_ratfn(p: &UniPoly<Rational>) -> RatFn {
    let mut bp = P::zero();
    for (j, coeff) in p.coeffs().iter().enumerate() {
        bp = bp.add(&P::monomial(coeff.clone(), 0, j as u32));
    }
    RatFn::from_poly(bp)
}

/// The ten identities in scan order.
pub fn all_identities() -> Vec<RecurrenceSpec> {
    let mut specs = Vec::new();

    // JL(n,k-1) = kn/((n+1)(n-2k+2)) JL(n+1,k) + 2k/(n-2k+2) JL(n,k)
    specs.push(RecurrenceSpec {
        id: "k-lower-from-next-row",
        seq: SeqKind::Jl,
        domain: "n >= 2k, k >= 1",
        k_min: 1,
        needs_n_ge_2k: true,
        terms: vec![
            Term { dn: 0, dk: -1, coeff: RatFn::from_poly(c(1)) },
            Term {
                dn: 1,
                dk: 0,
                coeff: RatFn::new(lin(0, 1, 0).mul(&lin(1, 0, 0)).neg(), lin(1, 0, 1).mul(&lin(1, -2, 2))),
            },
            Term {
                dn: 0,
                dk: 0,
                coeff: RatFn::new(lin(0, -2, 0), lin(1, -2, 2)),
            },
        ],
    });

    // JL(n,k+1) = -n(n-2k+1)/(5(n+1)(k+1)) JL(n+1,k) + (3n-5k)/(5(k+1)) JL(n,k)
    specs.push(RecurrenceSpec {
        id: "k-raise-from-next-row",
        seq: SeqKind::Jl,
        domain: "n >= 2k, k >= 0",
        k_min: 0,
        needs_n_ge_2k: true,
        terms: vec![
            Term { dn: 0, dk: 1, coeff: RatFn::from_poly(c(1)) },
            Term {
                dn: 1,
                dk: 0,
                coeff: RatFn::new(
                    lin(1, 0, 0).mul(&lin(1, -2, 1)),
                    prod(&[c(5), lin(1, 0, 1), lin(0, 1, 1)]),
                ),
            },
            Term {
                dn: 0,
                dk: 0,
                coeff: RatFn::new(lin(3, -5, 0).neg(), prod(&[c(5), lin(0, 1, 1)])),
            },
        ],
    });

    // JL(n+2,k) = (n-k+1)(n+2)/((n+1)(n-2k+2)) JL(n+1,k) + (n+2)/(n-2k+2) JL(n,k)
    specs.push(RecurrenceSpec {
        id: "row-step",
        seq: SeqKind::Jl,
        domain: "n >= 2k, k >= 0",
        k_min: 0,
        needs_n_ge_2k: true,
        terms: vec![
            Term { dn: 2, dk: 0, coeff: RatFn::from_poly(c(1)) },
            Term {
                dn: 1,
                dk: 0,
                coeff: RatFn::new(
                    lin(1, -1, 1).mul(&lin(1, 0, 2)).neg(),
                    lin(1, 0, 1).mul(&lin(1, -2, 2)),
                ),
            },
            Term {
                dn: 0,
                dk: 0,
                coeff: RatFn::new(lin(1, 0, 2).neg(), lin(1, -2, 2)),
            },
        ],
    });

    // -n(1+n) JL(n-1,k-1) - k(1+n) JL(n,k) + 2kn JL(n+1,k) = 0
    specs.push(RecurrenceSpec {
        id: "mixed-diagonal",
        seq: SeqKind::Jl,
        domain: "n >= 2k, k >= 1",
        k_min: 1,
        needs_n_ge_2k: true,
        terms: vec![
            Term {
                dn: -1,
                dk: -1,
                coeff: RatFn::from_poly(lin(1, 0, 0).mul(&lin(1, 0, 1)).neg()),
            },
            Term {
                dn: 0,
                dk: 0,
                coeff: RatFn::from_poly(lin(0, 1, 0).mul(&lin(1, 0, 1)).neg()),
            },
            Term {
                dn: 1,
                dk: 0,
                coeff: RatFn::from_poly(prod(&[c(2), lin(0, 1, 0), lin(1, 0, 0)])),
            },
        ],
    });

    // JL(n,k-1) = -k/(n+1) JL(n+1,k) + 2k/(n+2) JL(n+2,k)
    specs.push(RecurrenceSpec {
        id: "k-lower-from-two-rows",
        seq: SeqKind::Jl,
        domain: "n >= 2k, k >= 1",
        k_min: 1,
        needs_n_ge_2k: true,
        terms: vec![
            Term { dn: 0, dk: -1, coeff: RatFn::from_poly(c(1)) },
            Term {
                dn: 1,
                dk: 0,
                coeff: RatFn::new(lin(0, 1, 0), lin(1, 0, 1)),
            },
            Term {
                dn: 2,
                dk: 0,
                coeff: RatFn::new(lin(0, -2, 0), lin(1, 0, 2)),
            },
        ],
    });

    // JL(n,k-1) = k(5n-9k+2)/((n-2k+2)(n-2k+1)) JL(n,k)
    //             - 5k(k+1)/((n-2k+2)(n-2k+1)) JL(n,k+1)
    specs.push(RecurrenceSpec {
        id: "in-row-step",
        seq: SeqKind::Jl,
        domain: "n >= 2k, k >= 1",
        k_min: 1,
        needs_n_ge_2k: true,
        terms: vec![
            Term { dn: 0, dk: -1, coeff: RatFn::from_poly(c(1)) },
            Term {
                dn: 0,
                dk: 0,
                coeff: RatFn::new(
                    lin(0, 1, 0).mul(&lin(5, -9, 2)).neg(),
                    lin(1, -2, 2).mul(&lin(1, -2, 1)),
                ),
            },
            Term {
                dn: 0,
                dk: 1,
                coeff: RatFn::new(
                    prod(&[c(5), lin(0, 1, 0), lin(0, 1, 1)]),
                    lin(1, -2, 2).mul(&lin(1, -2, 1)),
                ),
            },
        ],
    });

    // d0 delta(n,k) + d1 delta(n+1,k) + d2 delta(n+2,k) = 0
    let [d0, d1, d2] = delta_step_polys();
    specs.push(RecurrenceSpec {
        id: "delta-row-step",
        seq: SeqKind::Delta,
        domain: "n >= 2k, k >= 0",
        k_min: 0,
        needs_n_ge_2k: true,
        terms: vec![
            Term { dn: 0, dk: 0, coeff: RatFn::from_poly(d0) },
            Term { dn: 1, dk: 0, coeff: RatFn::from_poly(d1) },
            Term { dn: 2, dk: 0, coeff: RatFn::from_poly(d2) },
        ],
    });

    let [b0, b1, b2] = diag_a_step_polys();
    specs.push(RecurrenceSpec {
        id: "diag-a-step",
        seq: SeqKind::DiagA,
        domain: "k >= 0",
        k_min: 0,
        needs_n_ge_2k: false,
        terms: vec![
            Term { dn: 0, dk: 0, coeff: unipoly_k_to_ratfn(&b0) },
            Term { dn: 0, dk: 1, coeff: unipoly_k_to_ratfn(&b1) },
            Term { dn: 0, dk: 2, coeff: unipoly_k_to_ratfn(&b2) },
        ],
    });

    let [c0, c1, c2] = diag_b_step_polys();
    specs.push(RecurrenceSpec {
        id: "diag-b-step",
        seq: SeqKind::DiagB,
        domain: "k >= 0",
        k_min: 0,
        needs_n_ge_2k: false,
        terms: vec![
            Term { dn: 0, dk: 0, coeff: unipoly_k_to_ratfn(&c0) },
            Term { dn: 0, dk: 1, coeff: unipoly_k_to_ratfn(&c1) },
            Term { dn: 0, dk: 2, coeff: unipoly_k_to_ratfn(&c2) },
        ],
    });

    specs
}

/// Consistency of the derivation chain: substituting the row-step
/// recurrence into the two-row k-lowering identity must reproduce the
/// one-row k-lowering coefficients, as formal rational functions.
pub fn chain_k_lower_consistent() -> bool {
    // target coefficients of JL(n+1,k) and JL(n,k)
    let t1 = RatFn::new(lin(0, 1, 0).mul(&lin(1, 0, 0)), lin(1, 0, 1).mul(&lin(1, -2, 2)));
    let t0 = RatFn::new(lin(0, 2, 0), lin(1, -2, 2));
    // derived: -k/(n+1) + (2k/(n+2)) * (n-k+1)(n+2)/((n+1)(n-2k+2))
    let a = RatFn::new(lin(0, -1, 0), lin(1, 0, 1)).add(&RatFn::new(
        prod(&[c(2), lin(0, 1, 0), lin(1, -1, 1), lin(1, 0, 2)]),
        prod(&[lin(1, 0, 2), lin(1, 0, 1), lin(1, -2, 2)]),
    ));
    // derived: (2k/(n+2)) * (n+2)/(n-2k+2)
    let b = RatFn::new(lin(0, 2, 0).mul(&lin(1, 0, 2)), lin(1, 0, 2).mul(&lin(1, -2, 2)));
    a.equivalent(&t1) && b.equivalent(&t0)
}

/// Consistency of the second derivation: eliminating the lowered entry
/// between the one-row k-lowering and the in-row step must reproduce the
/// k-raising coefficients.
pub fn chain_k_raise_consistent() -> bool {
    let dd = lin(1, -2, 2).mul(&lin(1, -2, 1));
    let scale = RatFn::new(dd.clone(), prod(&[c(5), lin(0, 1, 0), lin(0, 1, 1)]));
    // coefficient of JL(n,k): [k(5n-9k+2)/D - 2k/(n-2k+2)] * D/(5k(k+1))
    let cnk = RatFn::new(lin(0, 1, 0).mul(&lin(5, -9, 2)), dd.clone())
        .add(&RatFn::new(lin(0, -2, 0), lin(1, -2, 2)))
        .mul(&scale);
    let want_nk = RatFn::new(lin(3, -5, 0), prod(&[c(5), lin(0, 1, 1)]));
    // coefficient of JL(n+1,k): -kn/((n+1)(n-2k+2)) * D/(5k(k+1))
    let cn1k = RatFn::new(
        lin(0, 1, 0).mul(&lin(1, 0, 0)).neg(),
        lin(1, 0, 1).mul(&lin(1, -2, 2)),
    )
    .mul(&scale);
    let want_n1k = RatFn::new(
        lin(1, 0, 0).mul(&lin(1, -2, 1)).neg(),
        prod(&[c(5), lin(1, 0, 1), lin(0, 1, 1)]),
    );
    cnk.equivalent(&want_nk) && cn1k.equivalent(&want_n1k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_int;
    use crate::triangle::Engine;

    fn table() -> JLTable {
        JLTable::build(30, Engine::RecColumns).unwrap()
    }

    fn spec(id: &str) -> RecurrenceSpec {
        all_identities().into_iter().find(|s| s.id == id).unwrap()
    }

    #[test]
    fn mixed_diagonal_at_5_1() {
        // -5*6*7 - 1*6*15 + 2*5*30 = 0
        let t = table();
        let r = spec("mixed-diagonal").eval_residual(&t, 5, 1).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn k_raise_at_4_1() {
        // JL(4,2) - [-12/50*15 + 7/10*8] = 0
        let t = table();
        let r = spec("k-raise-from-next-row").eval_residual(&t, 4, 1).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn in_row_step_at_6_1() {
        // 18 - [23/30*30 - 10/30*15] = 0
        let t = table();
        let r = spec("in-row-step").eval_residual(&t, 6, 1).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn delta_row_step_at_4_1_with_vanishing_lead() {
        // coefficients -120, 72, 0 (the leading one vanishes at n = 3k+1)
        let [d0, d1, d2] = delta_step_polys();
        let n = rat_int(4);
        let k = rat_int(1);
        assert_eq!(d0.eval(&n, &k), rat_int(-120));
        assert_eq!(d1.eval(&n, &k), rat_int(72));
        assert_eq!(d2.eval(&n, &k), rat_int(0));
        let t = table();
        assert!(spec("delta-row-step").eval_residual(&t, 4, 1).unwrap().is_zero());
    }

    #[test]
    fn diag_coefficients_at_zero() {
        let [b0, b1, b2] = diag_a_step_polys();
        assert_eq!(b0.eval(&rat_int(0)), rat_int(22_353_408_000));
        assert_eq!(b1.eval(&rat_int(0)), rat_int(-51_785_395_200));
        assert_eq!(b2.eval(&rat_int(0)), rat_int(1_496_880_000));
        let [c0, c1, c2] = diag_b_step_polys();
        assert_eq!(c0.eval(&rat_int(0)), rat_int(3_353_011_200));
        assert_eq!(c1.eval(&rat_int(0)), rat_int(-6_473_174_400));
        assert_eq!(c2.eval(&rat_int(0)), rat_int(179_625_600));
    }

    #[test]
    fn all_identities_scan_clean_to_28() {
        let t = table();
        for s in all_identities() {
            let check = s.scan(&t, 28, 30);
            assert!(check.failures.is_empty(), "{}: {:?}", s.id, check.failures);
            assert!(check.points_checked > 0, "{} scanned nothing", s.id);
        }
    }

    #[test]
    fn out_of_domain_is_an_error() {
        let t = table();
        let err = spec("k-lower-from-next-row").eval_residual(&t, 4, 0);
        assert!(err.is_err());
    }

    #[test]
    fn derivation_chains() {
        assert!(chain_k_lower_consistent());
        assert!(chain_k_raise_consistent());
    }
}
