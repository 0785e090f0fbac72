//! The two walk models as explicit state machines.
//!
//! States are either `Numbered(i)` or the exceptional `Beta` (one box filled
//! to 1/3). Each step is one arrival, coloured red with probability `p` or
//! black with probability `q = 1 - p`:
//!
//! | model          | red (`p`)            | black (`q`)               |
//! |----------------|----------------------|---------------------------|
//! | `DoubleLarge`  | pair of 2/3 items    | one 1/3 item              |
//! | `DoubleSmall`  | one 2/3 item         | pair of 1/3 items         |

mod brute;
mod dp;
mod model;

pub use brute::{brute_force_distribution, BRUTE_FORCE_LIMIT};
pub use dp::{dp_distribution, StateDistribution};
pub use model::{Arrival, ModelKind, State, WalkModel};
