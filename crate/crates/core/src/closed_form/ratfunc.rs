use std::fmt;

use num::Zero;

use crate::error::Result;
use crate::exact::{ExactRational, Poly, TruncatedSeries};

/// A rational function of `t`, kept as an unreduced numerator/denominator
/// pair of exact polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    pub num: Poly<ExactRational>,
    pub den: Poly<ExactRational>,
}

impl RatFunc {
    pub fn new(num: Poly<ExactRational>, den: Poly<ExactRational>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFunc { num, den }
    }

    /// Substitute `t = t(x)` and expand as a series in `x`. The denominator
    /// must not vanish at `t = 0`.
    pub fn to_series(&self, t: &TruncatedSeries) -> Result<TruncatedSeries> {
        let num = self.num.compose_series(t)?;
        let den = self.den.compose_series(t)?;
        num.div(&den)
    }

    /// Same function, both sides multiplied by `p`.
    pub fn extend(&self, p: &Poly<ExactRational>) -> RatFunc {
        RatFunc { num: &self.num * p, den: &self.den * p }
    }

    /// Equality as functions: `a/b = c/d` iff `ad = bc`.
    pub fn same_function(&self, other: &RatFunc) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
