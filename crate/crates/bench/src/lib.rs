//! Shared fixtures for the criterion benches.

use knoedel_core::closed_form::kernel_x;
use knoedel_core::TruncatedSeries;

/// `x = (27/4) t (1 - t)^2` truncated at `order`, the series every
/// reversion bench inverts.
pub fn kernel_series(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_poly(&kernel_x(), order)
}

/// `(step, state)` pairs on the double-large residue classes up to `max_steps`.
pub fn theorem1_grid(max_steps: usize) -> Vec<(usize, usize)> {
    (0..=max_steps)
        .flat_map(|n| (0..=2 * n).filter(move |j| (n + j) % 3 == 0).map(move |j| (n, j)))
        .collect()
}
