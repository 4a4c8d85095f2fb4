//! Exact-arithmetic computation and certification of the Jaco-Lucas
//! triangle (OEIS A245962).
//!
//! The crate computes the triangle by three independent engines,
//! verifies its recurrence identities exactly on integer lattices, and
//! certifies row log-concavity and the unique-mode structure through
//! rational interval arithmetic, quadratic-surd comparisons, Sturm
//! real-root isolation and polynomial positivity certificates. No
//! floating point anywhere: every decision is exact or explicitly
//! reported as undecided at a stated precision cap.
//!
//! The polynomial and interval layers are generic over a
//! [`scalar::Scalar`] from `num-traits`; the concrete instantiation used
//! throughout is the arbitrary-precision rational aliased below.

pub mod certifier;
pub mod error;
pub mod exactnum;
pub mod oracle;
pub mod poly;
pub mod recurrences;
pub mod report;
pub mod scalar;
pub mod triangle;

pub use error::{Error, Result};

/// Arbitrary-precision integer.
pub use num_bigint::BigInt;

/// Normalized arbitrary-precision rational (reduced, positive
/// denominator, structural equality).
pub type Rational = num_rational::BigRational;

/// Closed rational interval — the concrete instantiation of the generic
/// interval type.
pub type RatInterval = exactnum::Interval<Rational>;

/// Univariate polynomial with rational coefficients.
pub type QPoly = poly::UniPoly<Rational>;

/// Bivariate polynomial with rational coefficients (variables `(n, k)`
/// or `(k, t)` depending on context).
pub type NkPoly = poly::BiPoly<Rational>;
