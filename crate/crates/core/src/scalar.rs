//! Scalar bound for the generic polynomial and interval layers.
//!
//! The algebra below (intervals, univariate/bivariate polynomials, Sturm
//! chains) is written against an ordered field abstraction from
//! `num_traits`. The crate instantiates it with arbitrary-precision
//! rationals — see the aliases at the crate root — but any ordered field
//! scalar works, `f64` included, which is convenient for quick numeric
//! experiments in tests.
//!
//! Exactness guarantees (sound enclosures, exact Sturm counts) hold only
//! for exact scalars such as [`crate::Rational`].

use std::fmt::{Debug, Display};

use num_traits::{Num, Signed};

/// An ordered field scalar usable as polynomial coefficient or interval
/// endpoint.
pub trait Scalar: Num + Signed + PartialOrd + Clone + Debug + Display {}

impl<T> Scalar for T where T: Num + Signed + PartialOrd + Clone + Debug + Display {}

/// `a + b` with both compared; panics on incomparable values (NaN).
pub(crate) fn max_of<T: Scalar>(a: T, b: T) -> T {
    if a >= b {
        a
    } else {
        b
    }
}

/// One half, in any scalar.
pub(crate) fn half<T: Scalar>() -> T {
    T::one() / (T::one() + T::one())
}
