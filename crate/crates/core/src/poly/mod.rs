//! Polynomial algebra: univariate and bivariate exact polynomials, Sturm
//! real-root machinery, and positivity certificates.

mod bipoly;
mod certificate;
mod unipoly;

pub use bipoly::BiPoly;
pub use certificate::{shift_expand_nonneg, univariate_positive_on_ray, CertResult, CertStatus};
pub use unipoly::UniPoly;
