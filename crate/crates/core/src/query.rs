use num::Zero;

use crate::closed_form::{fbeta_coeff, g0_coeff, gbeta_coeff, theorem1_coeff, theorem2_coeff};
use crate::exact::ExactRational;
use crate::walk::{dp_distribution, ModelKind, State, WalkModel};

/// One probability to extract: the chance that `model` is in `target`
/// after `steps` arrivals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoefficientQuery {
    pub model: ModelKind,
    pub target: State,
    pub steps: usize,
}

impl CoefficientQuery {
    pub fn new(model: ModelKind, target: State, steps: usize) -> Self {
        CoefficientQuery { model, target, steps }
    }

    /// Whether `steps` lies in the residue class where `target` can carry
    /// mass. Queries outside it have value 0.
    pub fn in_residue_class(&self) -> bool {
        (self.steps % 3) as u8 == self.model.residue_class(self.target)
    }

    /// Value from the explicit formulas (balanced probabilities).
    pub fn closed_form(&self) -> ExactRational {
        if !self.in_residue_class() {
            return ExactRational::zero();
        }
        let n = self.steps;
        match (self.model, self.target) {
            (ModelKind::DoubleLarge, State::Numbered(j)) => theorem1_coeff(n, j),
            (ModelKind::DoubleLarge, State::Beta) => fbeta_coeff((n - 1) / 3),
            (ModelKind::DoubleSmall, State::Numbered(0)) => g0_coeff(n / 3),
            (ModelKind::DoubleSmall, State::Numbered(j)) => theorem2_coeff(n, j),
            (ModelKind::DoubleSmall, State::Beta) => gbeta_coeff((n - 2) / 3),
        }
    }

    /// Value from the dynamic program under `model`'s probabilities.
    pub fn dp(&self, model: &WalkModel) -> ExactRational {
        debug_assert_eq!(model.kind(), self.model);
        dp_distribution(model, self.steps)[self.steps].mass(self.target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn closed_forms_by_state() {
        let q = |m, s, n| CoefficientQuery::new(m, s, n).closed_form();
        assert_eq!(q(ModelKind::DoubleLarge, State::Beta, 4), rat(32, 81));
        assert_eq!(q(ModelKind::DoubleLarge, State::Numbered(0), 1), int(0));
        assert_eq!(q(ModelKind::DoubleSmall, State::Numbered(0), 3), rat(5, 9));
        assert_eq!(q(ModelKind::DoubleSmall, State::Beta, 5), rat(19, 81));
        assert_eq!(q(ModelKind::DoubleSmall, State::Beta, 4), int(0));
    }

    #[test]
    fn closed_form_matches_dp_on_small_grid() {
        for kind in ModelKind::ALL {
            let m = WalkModel::balanced(kind);
            let rows = dp_distribution(&m, 12);
            for (n, row) in rows.iter().enumerate() {
                for s in std::iter::once(State::Beta).chain((0..=2 * n).map(State::Numbered)) {
                    assert_eq!(CoefficientQuery::new(kind, s, n).closed_form(), row.mass(s), "{kind} n={n} {s}");
                }
            }
        }
    }
}
