use std::collections::BTreeMap;

use num::{One, Zero};
use rayon::prelude::*;

use super::{Arrival, State, StateDistribution, WalkModel};
use crate::error::{Error, Result};
use crate::exact::ExactRational;

/// Largest step count the path enumerator accepts (2^22 paths).
pub const BRUTE_FORCE_LIMIT: usize = 22;

type Tally = BTreeMap<(State, u32), u64>;

/// Distribution after `n` steps by walking every one of the 2^n arrival
/// sequences through the state diagram.
///
/// Paths are tallied by (final state, number of red arrivals) with integer
/// counts, and weighted by `p^red q^black` at the end, so the sum is exact
/// and independent of how the paths are split across threads.
pub fn brute_force_distribution(model: &WalkModel, n: usize) -> Result<StateDistribution> {
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::OracleLimitExceeded { steps: n, limit: BRUTE_FORCE_LIMIT });
    }
    let kind = model.kind();
    let paths: u64 = 1 << n;
    let chunk = 1u64 << 12;

    let tally: Tally = (0..paths.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut local = Tally::new();
            for path in c * chunk..((c + 1) * chunk).min(paths) {
                let mut s = State::Numbered(0);
                for k in 0..n {
                    let arrival = if path >> k & 1 == 1 { Arrival::Red } else { Arrival::Black };
                    s = kind.next_state(s, arrival);
                }
                *local.entry((s, path.count_ones())).or_default() += 1;
            }
            local
        })
        .reduce(Tally::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });

    let pow = |base: &ExactRational, e: u32| -> ExactRational {
        (0..e).fold(ExactRational::one(), |acc, _| acc * base)
    };
    let masses = tally.into_iter().map(|((s, red), count)| {
        let black = n as u32 - red;
        let w = pow(model.p(), red) * pow(model.q(), black) * ExactRational::from_integer(count.into());
        (s, w)
    });
    let dist = StateDistribution::from_masses(n, masses);
    debug_assert!(!dist.total().is_zero());
    Ok(dist)
}
