//! Property tests for the exact-arithmetic substrate and certificates.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use jlcert_core::exactnum::{interval_arith, sqrt_enclosure, Interval, IntervalOp, QuadSurd};
use jlcert_core::poly::{shift_expand_nonneg, BiPoly, UniPoly};
use jlcert_core::Rational;

fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..1000).prop_map(|(p, q)| rational(p, q))
}

fn arb_nonneg_rational() -> impl Strategy<Value = Rational> {
    (0i64..100_000, 1i64..1000).prop_map(|(p, q)| rational(p, q))
}

fn arb_poly() -> impl Strategy<Value = UniPoly<Rational>> {
    prop::collection::vec(-20i64..20, 1..7).prop_map(|cs| {
        UniPoly::from_coeffs(cs.into_iter().map(|c| Rational::from(BigInt::from(c))).collect())
    })
}

proptest! {
    // normalizing a normalized rational is the identity, and the
    // canonical form has positive denominator and coprime parts
    #[test]
    fn normalization_idempotent(p in -10000i64..10000, q in 1i64..10000, s in prop::bool::ANY) {
        let q = if s { q } else { -q };
        let r = Rational::new(BigInt::from(p), BigInt::from(q));
        let again = Rational::new(r.numer().clone(), r.denom().clone());
        prop_assert_eq!(&again, &r);
        prop_assert!(r.denom().is_positive());
        prop_assert!(num_integer::gcd(r.numer().abs(), r.denom().clone()) == BigInt::from(1) || r.numer().is_zero());
    }

    // lo^2 <= x <= hi^2 holds exactly for any width
    #[test]
    fn enclosure_soundness(x in arb_nonneg_rational(), w in 0u32..64) {
        let e = sqrt_enclosure(&x, w).unwrap();
        prop_assert!(e.lo() * e.lo() <= x);
        prop_assert!(x <= e.hi() * e.hi());
        prop_assert!(!e.lo().is_negative());
        let target = Rational::new(BigInt::from(1), BigInt::from(1) << w as usize);
        prop_assert!(e.width() <= target);
    }

    // increasing the width exponent never widens the interval
    #[test]
    fn refinement_monotonicity(x in arb_nonneg_rational(), w1 in 0u32..48, dw in 0u32..16) {
        let a = sqrt_enclosure(&x, w1).unwrap();
        let b = sqrt_enclosure(&x, w1 + dw).unwrap();
        prop_assert!(b.lo() >= a.lo());
        prop_assert!(b.hi() <= a.hi());
    }

    // exact surd comparison agrees with any enclosure that decides
    #[test]
    fn surd_compare_agrees_with_enclosure(
        a in arb_rational(),
        b in arb_rational(),
        d in arb_nonneg_rational(),
        t in arb_rational(),
        w in 8u32..64,
    ) {
        let s = QuadSurd::new(a, b, d).unwrap();
        let exact = s.cmp_rational(&t);
        let e = s.enclosure(w).unwrap();
        if e.lo() > &t {
            prop_assert_eq!(exact, Ordering::Greater);
        } else if e.hi() < &t {
            prop_assert_eq!(exact, Ordering::Less);
        }
        // and the enclosure always contains the decision boundary side
        if exact == Ordering::Equal {
            prop_assert!(e.contains(&t));
        }
    }

    // interval ring operations contain the image of contained points
    #[test]
    fn interval_ops_sound(
        (alo, aw) in (arb_rational(), arb_nonneg_rational()),
        (blo, bw) in (arb_rational(), arb_nonneg_rational()),
        ta in 0u8..=100,
        tb in 0u8..=100,
        op in prop::sample::select(vec![IntervalOp::Add, IntervalOp::Sub, IntervalOp::Mul, IntervalOp::Div]),
    ) {
        let a = Interval::new(alo.clone(), &alo + &aw).unwrap();
        let b = Interval::new(blo.clone(), &blo + &bw).unwrap();
        // pick points inside by convex combination
        let frac = |t: u8| rational(t as i64, 100);
        let x = &alo + &aw * frac(ta);
        let y = &blo + &bw * frac(tb);
        let want = match op {
            IntervalOp::Add => Some(&x + &y),
            IntervalOp::Sub => Some(&x - &y),
            IntervalOp::Mul => Some(&x * &y),
            IntervalOp::Div => (!y.is_zero()).then(|| &x / &y),
        };
        match (interval_arith(op, &a, &b), want) {
            (Ok(result), Some(value)) => prop_assert!(result.contains(&value)),
            (Ok(_), None) => {}
            (Err(_), _) => prop_assert_eq!(op, IntervalOp::Div), // only division can fail
        }
    }

    // Sturm counts are additive over adjacent half-open intervals
    #[test]
    fn sturm_additivity(p in arb_poly(), a in -30i64..30, d1 in 1i64..20, d2 in 1i64..20) {
        prop_assume!(!p.is_zero());
        let (a, b, c) = (
            Rational::from(BigInt::from(a)),
            Rational::from(BigInt::from(a + d1)),
            Rational::from(BigInt::from(a + d1 + d2)),
        );
        let left = p.sturm_count(&a, &b).unwrap();
        let right = p.sturm_count(&b, &c).unwrap();
        let whole = p.sturm_count(&a, &c).unwrap();
        prop_assert_eq!(left + right, whole);
    }

    // the smallest-root interval really brackets a root and nothing
    // smaller: Sturm count one inside, zero below
    #[test]
    fn isolation_brackets_smallest(p in arb_poly(), w in 2u32..24) {
        prop_assume!(p.degree().map_or(false, |d| d >= 1));
        match p.isolate_smallest_root(w) {
            Err(_) => {} // no real root
            Ok(iv) => {
                let q = p.squarefree_part();
                let bound = q.cauchy_root_bound().unwrap();
                if iv.is_point() {
                    // the root itself; nothing below it
                    prop_assert!(q.eval(iv.lo()).is_zero());
                    prop_assert_eq!(q.sturm_count(&-bound, iv.lo()).unwrap(), 1);
                } else {
                    prop_assert_eq!(q.sturm_count(iv.lo(), iv.hi()).unwrap(), 1);
                    prop_assert_eq!(q.sturm_count(&-bound, iv.lo()).unwrap(), 0);
                }
            }
        }
    }

    // upward parabola with value and slope nonnegative at x0 stays
    // nonnegative on the whole ray: brute sampling never contradicts
    #[test]
    fn parabola_ray_criterion_sound(
        a2 in 1i64..50,
        a1 in -50i64..50,
        a0 in -50i64..50,
        x0 in arb_rational(),
        steps in prop::collection::vec((0i64..1000, 1i64..100), 10),
    ) {
        let a2 = Rational::from(BigInt::from(a2));
        let a1 = Rational::from(BigInt::from(a1));
        let a0 = Rational::from(BigInt::from(a0));
        let eval = |x: &Rational| &a2 * x * x + &a1 * x + &a0;
        let slope = |x: &Rational| rational(2, 1) * &a2 * x + &a1;
        prop_assume!(!eval(&x0).is_negative() && !slope(&x0).is_negative());
        for (p, q) in steps {
            let x = &x0 + rational(p, q);
            prop_assert!(!eval(&x).is_negative(), "q({x}) < 0");
        }
    }

    // certified shift-expansions never contradict on lattice points
    #[test]
    fn shift_expand_sound(
        terms in prop::collection::vec((-6i64..6, 0u32..3, 0u32..3), 1..6),
        alpha in 0i64..7,
        beta in 0i64..7,
        pts in prop::collection::vec((0i64..20, 0i64..20), 25),
    ) {
        let p = BiPoly::from_terms(
            &terms
                .iter()
                .map(|&(c, i, j)| (Rational::from(BigInt::from(c)), i, j))
                .collect::<Vec<_>>(),
        );
        let cert = shift_expand_nonneg(&p, alpha, beta, false);
        let strict = shift_expand_nonneg(&p, alpha, beta, true);
        for (k, t) in pts {
            let n = alpha * k + beta + t;
            let v = p.eval(&Rational::from(BigInt::from(n)), &Rational::from(BigInt::from(k)));
            if cert.certified() {
                prop_assert!(!v.is_negative(), "certified >= 0 but P({n},{k}) = {v}");
            }
            if strict.certified() {
                prop_assert!(v.is_positive(), "certified > 0 but P({n},{k}) = {v}");
            }
        }
    }
}
