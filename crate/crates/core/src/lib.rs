//! Exact enumeration of two ternary Knödel-walk bin-packing models.
//!
//! Bins have size 1 and receive items of size 1/3 and 2/3. In the
//! [`ModelKind::DoubleLarge`] model the large items arrive in pairs, in the
//! [`ModelKind::DoubleSmall`] model the small ones do. Every probability in
//! this crate is an exact rational, and each quantity can be reached by
//! several independent routes:
//!
//! * [`walk`]: the state diagram, a row-by-row dynamic program and a
//!   brute-force path enumerator;
//! * [`closed_form`]: explicit coefficient formulas, truncated series for the
//!   kernel-method parametrisation `x = (27/4) t (1 - t)^2`, and exact checks
//!   of the polynomial identities behind them;
//! * [`montecarlo`]: a seeded simulator for statistical comparison;
//! * [`verify`]: suites that cross-check all of the above.

pub mod closed_form;
pub mod error;
pub mod exact;
pub mod montecarlo;
pub mod query;
pub mod verify;
pub mod walk;

pub use error::{Error, Result};
pub use exact::{binom_general, ExactRational, Poly, TruncatedSeries, DEFAULT_ORDER};
pub use query::CoefficientQuery;
pub use walk::{Arrival, ModelKind, State, StateDistribution, WalkModel};
