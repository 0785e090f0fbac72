use num::{One, Zero};

use super::{State, WalkModel};
use crate::exact::ExactRational;

/// Exact probability of every state after `step` arrivals.
///
/// Numbered states are stored densely; trailing zeros are dropped so two
/// distributions compare equal exactly when their masses agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateDistribution {
    step: usize,
    numbered: Vec<ExactRational>,
    beta: ExactRational,
}

impl StateDistribution {
    /// Point mass on `Numbered(0)`, the start state.
    pub fn initial() -> Self {
        StateDistribution { step: 0, numbered: vec![ExactRational::one()], beta: ExactRational::zero() }
    }

    pub fn from_masses(step: usize, masses: impl IntoIterator<Item = (State, ExactRational)>) -> Self {
        let mut dist = StateDistribution { step, numbered: Vec::new(), beta: ExactRational::zero() };
        for (s, m) in masses {
            *dist.slot(s) += m;
        }
        dist.trim();
        dist
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn mass(&self, s: State) -> ExactRational {
        match s {
            State::Beta => self.beta.clone(),
            State::Numbered(i) => self.numbered.get(i).cloned().unwrap_or_else(ExactRational::zero),
        }
    }

    /// States with nonzero mass, numbered states first in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = (State, &ExactRational)> {
        self.numbered
            .iter()
            .enumerate()
            .map(|(i, m)| (State::Numbered(i), m))
            .chain(std::iter::once((State::Beta, &self.beta)))
            .filter(|(_, m)| !m.is_zero())
    }

    pub fn support(&self) -> Vec<State> {
        self.iter().map(|(s, _)| s).collect()
    }

    pub fn total(&self) -> ExactRational {
        self.iter().map(|(_, m)| m).sum()
    }

    /// Largest numbered state with nonzero mass.
    pub fn max_numbered(&self) -> Option<usize> {
        self.numbered.len().checked_sub(1)
    }

    /// Push the distribution through one arrival.
    pub fn advance(&self, model: &WalkModel) -> StateDistribution {
        let mut next = StateDistribution {
            step: self.step + 1,
            numbered: vec![ExactRational::zero(); model.kind().reach_bound(self.step + 1) + 1],
            beta: ExactRational::zero(),
        };
        for (s, m) in self.iter() {
            for (target, w) in model.transitions(s) {
                *next.slot(target) += m * w;
            }
        }
        next.trim();
        next
    }

    fn slot(&mut self, s: State) -> &mut ExactRational {
        match s {
            State::Beta => &mut self.beta,
            State::Numbered(i) => {
                if i >= self.numbered.len() {
                    self.numbered.resize(i + 1, ExactRational::zero());
                }
                &mut self.numbered[i]
            }
        }
    }

    fn trim(&mut self) {
        while self.numbered.last().is_some_and(Zero::is_zero) {
            self.numbered.pop();
        }
    }
}

/// Rows `0..=n_max` of the exact step distribution, starting from
/// `Numbered(0)`.
pub fn dp_distribution(model: &WalkModel, n_max: usize) -> Vec<StateDistribution> {
    let mut rows = Vec::with_capacity(n_max + 1);
    rows.push(StateDistribution::initial());
    for n in 0..n_max {
        let next = rows[n].advance(model);
        rows.push(next);
    }
    rows
}
