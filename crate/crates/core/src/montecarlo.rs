//! Seeded simulation of the walk models.
//!
//! # Reproducibility contract
//!
//! The generator is SplitMix64 (Steele, Lea and Flood): state advances by
//! `0x9E3779B97F4A7C15` and each output is the state passed through the
//! `mix64` finaliser (shifts 30/27/31, multipliers `0xBF58476D1CE4E5B9` and
//! `0x94D049BB133111EB`).
//!
//! Trial `i` (0-based) runs on its own SplitMix64 stream whose initial state
//! is the `i`-th output of `SplitMix64(seed)`, i.e.
//! `mix64(seed + (i + 1) * 0x9E3779B97F4A7C15)`. Each arrival consumes one
//! 64-bit output `u` and is red iff `u * den(p) < num(p) * 2^64`, computed in
//! 128-bit integers. Results do not depend on thread count.

use std::collections::BTreeMap;

use num::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{to_fraction_string, ExactRational};
use crate::walk::{Arrival, State, StateDistribution, WalkModel};

/// Seed used by the CLI and the acceptance checks when none is given.
pub const DEFAULT_SEED: u64 = 0x4B4E_4F45_4445_4C00;

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Independent stream for trial `index` under `seed`.
    pub fn for_trial(seed: u64, index: u64) -> Self {
        SplitMix64::new(mix64(seed.wrapping_add(index.wrapping_add(1).wrapping_mul(GAMMA))))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        mix64(self.state)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimConfig {
    pub model: WalkModel,
    pub steps: usize,
    pub trials: u64,
    pub seed: u64,
}

impl SimConfig {
    pub fn new(model: WalkModel, steps: usize, trials: u64) -> Self {
        SimConfig { model, steps, trials, seed: DEFAULT_SEED }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// Final-state counts over all trials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmpiricalDistribution {
    pub counts: BTreeMap<State, u64>,
    pub trials: u64,
}

impl EmpiricalDistribution {
    pub fn count(&self, s: State) -> u64 {
        self.counts.get(&s).copied().unwrap_or(0)
    }

    pub fn frequency(&self, s: State) -> f64 {
        self.count(s) as f64 / self.trials as f64
    }
}

/// Red/black decision against an exact rational threshold.
#[derive(Clone, Copy, Debug)]
struct Threshold {
    num: u128,
    den: u128,
}

impl Threshold {
    fn new(p: &ExactRational) -> Result<Self> {
        let err = || Error::UnsupportedProbability(to_fraction_string(p));
        let num = p.numer().to_u64().ok_or_else(err)?;
        let den = p.denom().to_u64().ok_or_else(err)?;
        Ok(Threshold { num: num as u128, den: den as u128 })
    }

    fn draw(&self, rng: &mut SplitMix64) -> Arrival {
        if (rng.next_u64() as u128) * self.den < self.num << 64 {
            Arrival::Red
        } else {
            Arrival::Black
        }
    }
}

pub fn simulate(config: &SimConfig) -> Result<EmpiricalDistribution> {
    if config.trials == 0 {
        return Err(Error::NoTrials);
    }
    let threshold = Threshold::new(config.model.p())?;
    let kind = config.model.kind();
    let chunk = 1u64 << 14;

    let counts = (0..config.trials.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut local = BTreeMap::new();
            for trial in c * chunk..((c + 1) * chunk).min(config.trials) {
                let mut rng = SplitMix64::for_trial(config.seed, trial);
                let mut s = State::Numbered(0);
                for _ in 0..config.steps {
                    s = kind.next_state(s, threshold.draw(&mut rng));
                }
                *local.entry(s).or_insert(0u64) += 1;
            }
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    Ok(EmpiricalDistribution { counts, trials: config.trials })
}

/// One state of an empirical-versus-exact comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct CellComparison {
    pub state: State,
    pub count: u64,
    pub empirical: f64,
    pub exact: ExactRational,
    pub deviation: f64,
    /// `4 sqrt(p (1 - p) / trials)` with `p` the exact probability.
    pub bound: f64,
}

impl CellComparison {
    pub fn within_bound(&self) -> bool {
        self.deviation <= self.bound
    }
}

/// Compares every state in the union of both supports. A state with exact
/// probability 0 has a zero-width bound, so any hit fails it.
pub fn compare(empirical: &EmpiricalDistribution, exact: &StateDistribution) -> Vec<CellComparison> {
    let mut states: Vec<State> = exact.support();
    states.extend(empirical.counts.keys().copied());
    states.sort();
    states.dedup();
    let trials = empirical.trials as f64;
    states
        .into_iter()
        .map(|s| {
            let p = exact.mass(s);
            let pf = if p.is_zero() { 0.0 } else { p.to_f64().unwrap_or(0.0) };
            let freq = empirical.frequency(s);
            CellComparison {
                state: s,
                count: empirical.count(s),
                empirical: freq,
                exact: p,
                deviation: (freq - pf).abs(),
                bound: 4.0 * (pf * (1.0 - pf) / trials).sqrt(),
            }
        })
        .collect()
}
