//! Exact rational arithmetic: generalized binomials, polynomials and
//! truncated formal power series.

mod binom;
mod poly;
mod render;
mod series;

pub use binom::{binom_general, binom_int};
pub use poly::{Poly, Ring};
pub use render::{parse_rational, to_decimal, to_fraction_string};
pub use series::{TruncatedSeries, DEFAULT_ORDER};

use num::BigRational;

/// The scalar used everywhere: an arbitrary-precision rational, always kept
/// in lowest terms with a positive denominator.
pub type ExactRational = BigRational;

/// Shorthand for building small rational constants.
pub fn rat(num: i64, den: i64) -> ExactRational {
    ExactRational::new(num.into(), den.into())
}

pub fn int(n: i64) -> ExactRational {
    ExactRational::from_integer(n.into())
}
