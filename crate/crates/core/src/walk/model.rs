use std::fmt;
use std::str::FromStr;

use num::{One, Signed};

use crate::error::{Error, Result};
use crate::exact::{rat, ExactRational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum State {
    /// `i` partially filled boxes (filled to 2/3 in the double-large model).
    Numbered(usize),
    /// The exceptional state: a single box filled to 1/3.
    Beta,
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            State::Numbered(i) => write!(f, "{i}"),
            State::Beta => write!(f, "beta"),
        }
    }
}

impl FromStr for State {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("beta") {
            return Ok(State::Beta);
        }
        s.parse::<usize>()
            .map(State::Numbered)
            .map_err(|_| format!("invalid state {s:?}: expected a non-negative integer or \"beta\""))
    }
}

/// Colour of an arrival in the state diagram. Red edges carry `p`, black
/// edges carry `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Arrival {
    Red,
    Black,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModelKind {
    /// Large items come in double-packs: red moves `i -> i + 2`.
    DoubleLarge,
    /// Small items come in double-packs: black moves `i -> i - 2`.
    DoubleSmall,
}

impl ModelKind {
    pub const ALL: [ModelKind; 2] = [ModelKind::DoubleLarge, ModelKind::DoubleSmall];

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::DoubleLarge => "double-large",
            ModelKind::DoubleSmall => "double-small",
        }
    }

    /// Red-edge probability that keeps the walk balanced.
    pub fn balanced_p(self) -> ExactRational {
        match self {
            ModelKind::DoubleLarge => rat(1, 3),
            ModelKind::DoubleSmall => rat(2, 3),
        }
    }

    /// Successor of `s` after one arrival.
    pub fn next_state(self, s: State, arrival: Arrival) -> State {
        use Arrival::*;
        use State::*;
        match (self, s, arrival) {
            (ModelKind::DoubleLarge, Numbered(0), Red) => Numbered(2),
            (ModelKind::DoubleLarge, Numbered(0), Black) => Beta,
            (ModelKind::DoubleLarge, Beta, _) => Numbered(1),
            (ModelKind::DoubleLarge, Numbered(i), Red) => Numbered(i + 2),
            (ModelKind::DoubleLarge, Numbered(i), Black) => Numbered(i - 1),

            (ModelKind::DoubleSmall, Numbered(0), _) => Numbered(1),
            (ModelKind::DoubleSmall, Beta, _) => Numbered(0),
            (ModelKind::DoubleSmall, Numbered(1), Black) => Beta,
            (ModelKind::DoubleSmall, Numbered(i), Red) => Numbered(i + 1),
            (ModelKind::DoubleSmall, Numbered(i), Black) => Numbered(i - 2),
        }
    }

    /// Residue mod 3 of the step counts at which `s` can carry mass.
    pub fn residue_class(self, s: State) -> u8 {
        match (self, s) {
            (ModelKind::DoubleLarge, State::Numbered(j)) => ((3 - j % 3) % 3) as u8,
            (ModelKind::DoubleLarge, State::Beta) => 1,
            (ModelKind::DoubleSmall, State::Numbered(j)) => (j % 3) as u8,
            (ModelKind::DoubleSmall, State::Beta) => 2,
        }
    }

    /// Largest numbered state reachable in `steps` steps.
    pub fn reach_bound(self, steps: usize) -> usize {
        match self {
            ModelKind::DoubleLarge => 2 * steps,
            ModelKind::DoubleSmall => steps,
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "double-large" | "1" => Ok(ModelKind::DoubleLarge),
            "double-small" | "2" => Ok(ModelKind::DoubleSmall),
            _ => Err(format!("unknown model {s:?}: expected double-large or double-small")),
        }
    }
}

/// A model together with its arrival probabilities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkModel {
    kind: ModelKind,
    p: ExactRational,
    q: ExactRational,
}

impl WalkModel {
    /// The balanced model: `p = 1/3` for double-large, `p = 2/3` for
    /// double-small.
    pub fn balanced(kind: ModelKind) -> Self {
        let p = kind.balanced_p();
        let q = ExactRational::one() - &p;
        WalkModel { kind, p, q }
    }

    /// Any red-edge probability `0 < p < 1`. Only the dynamic program and
    /// the simulator accept unbalanced models.
    pub fn with_p(kind: ModelKind, p: ExactRational) -> Result<Self> {
        if !p.is_positive() || p >= ExactRational::one() {
            return Err(Error::InvalidProbability(crate::exact::to_fraction_string(&p)));
        }
        let q = ExactRational::one() - &p;
        Ok(WalkModel { kind, p, q })
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn p(&self) -> &ExactRational {
        &self.p
    }

    pub fn q(&self) -> &ExactRational {
        &self.q
    }

    pub fn is_balanced(&self) -> bool {
        self.p == self.kind.balanced_p()
    }

    pub fn weight(&self, arrival: Arrival) -> &ExactRational {
        match arrival {
            Arrival::Red => &self.p,
            Arrival::Black => &self.q,
        }
    }

    pub fn next_state(&self, s: State, arrival: Arrival) -> State {
        self.kind.next_state(s, arrival)
    }

    /// Outgoing edges of `s` with their probabilities. Edges of both colours
    /// that end in the same state are merged, so the weights always sum to 1.
    pub fn transitions(&self, s: State) -> Vec<(State, ExactRational)> {
        let red = self.next_state(s, Arrival::Red);
        let black = self.next_state(s, Arrival::Black);
        if red == black {
            vec![(red, &self.p + &self.q)]
        } else {
            vec![(red, self.p.clone()), (black, self.q.clone())]
        }
    }

    pub fn residue_class(&self, s: State) -> u8 {
        self.kind.residue_class(s)
    }
}

impl Default for WalkModel {
    fn default() -> Self {
        WalkModel::balanced(ModelKind::DoubleLarge)
    }
}
