//! Explicit generating functions and coefficient formulas for both models.
//!
//! Everything is expressed through the parameter `t`, defined implicitly by
//! `x = z^3 = (27/4) t (1 - t)^2`. Rational functions of `t` become series in
//! `x` by substituting [`t_series`]; coefficient `[x^N]` then corresponds to
//! `3N` steps (shifted by the state index for numbered states).
//!
//! The roots `sigma, tau = (3/4)(t -+ sqrt(4t - 3t^2))` are never expanded
//! individually. Only their sum `e = (3/2) t` and product `f = (9/4) t (t - 1)`
//! are used, see [`SymmetricPair`].

mod double_large;
mod double_small;
mod kernel;
mod ratfunc;
mod series;
mod symmetric;

pub use double_large::{fbeta_coeff, theorem1_coeff, u_coeff_f, u_coeff_f_via_symmetric};
pub use double_small::{g0_coeff, g1_shifted, g_u_coeff, gbeta_coeff, theorem2_coeff};
pub use kernel::{kernel_identities_check, IdentityCheck, KernelReport, RadicalExt};
pub use ratfunc::RatFunc;
pub use series::{
    bad_root_series, f0, f0_series, g0, g0_series, inv_one_minus_t_series, kernel_x, t_series, t_series_by_reversion,
};
pub use symmetric::{
    complete_homogeneous, girard_waring_power_sum, girard_waring_quotient, power_sum_recurrence,
    quotient_recurrence, SymmetricPair,
};

use crate::error::{Error, Result};
use crate::walk::WalkModel;

/// Closed forms only hold for the balanced probabilities.
pub fn require_balanced(model: &WalkModel) -> Result<()> {
    if model.is_balanced() {
        Ok(())
    } else {
        Err(Error::UnbalancedProbabilities)
    }
}
