//! Truncated multivariate series over `ℤ` or `ℤ[ζ_r]`.
//!
//! * [`Ring`] abstracts the coefficient ring; [`IntegerRing`] and
//!   [`CyclotomicRing`] are the two instances used by the verifiers.
//! * [`TruncatedSeries`] is a sparse map from exponent vectors to
//!   coefficients, kept modulo `x_v^{cap_v+1}` for every variable.
//! * [`Monomial`] names monomials by variable name for the public API.

mod ring;
mod truncated;

pub use ring::{CyclotomicRing, IntegerRing, Ring};
pub use truncated::{Exps, Mismatch, Monomial, TruncatedSeries, Variables};

/// Integer-coefficient series.
pub type IntSeries = TruncatedSeries<IntegerRing>;

/// Cyclotomic-coefficient series.
pub type CycSeries = TruncatedSeries<CyclotomicRing>;
