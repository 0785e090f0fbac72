//! Cross-checking suites: every closed form against the dynamic program,
//! every series against its independent construction, and the structural
//! laws of the walks.

use std::fmt;

use num::{One, Zero};

use crate::closed_form::{self as cf, kernel_identities_check};
use crate::exact::{int, rat, to_fraction_string, ExactRational, TruncatedSeries, DEFAULT_ORDER};
use crate::walk::{brute_force_distribution, dp_distribution, ModelKind, State, WalkModel};

const MAX_REPORTED_FAILURES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Truncation order for series checks.
    pub order: usize,
    /// Largest step count compared against the dynamic program.
    pub max_steps: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { order: DEFAULT_ORDER, max_steps: 30 }
    }
}

/// The closed-form evaluators under test. Swapping one out is how the
/// suites are shown to catch a wrong formula.
#[derive(Clone, Copy)]
pub struct Evaluators {
    pub theorem1: fn(usize, usize) -> ExactRational,
    pub fbeta: fn(usize) -> ExactRational,
    pub theorem2: fn(usize, usize) -> ExactRational,
    pub g0: fn(usize) -> ExactRational,
    pub gbeta: fn(usize) -> ExactRational,
    pub t_series: fn(usize) -> TruncatedSeries,
    pub inv_one_minus_t: fn(usize) -> TruncatedSeries,
}

impl Default for Evaluators {
    fn default() -> Self {
        Evaluators {
            theorem1: cf::theorem1_coeff,
            fbeta: cf::fbeta_coeff,
            theorem2: cf::theorem2_coeff,
            g0: cf::g0_coeff,
            gbeta: cf::gbeta_coeff,
            t_series: cf::t_series,
            inv_one_minus_t: cf::inv_one_minus_t_series,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
    failed: usize,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult { name, checked: 0, failures: Vec::new(), failed: 0 }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_REPORTED_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    fn check_eq(&mut self, got: &ExactRational, want: &ExactRational, what: impl FnOnce() -> String) {
        self.check(got == want, || {
            format!("{}: got {}, expected {}", what(), to_fraction_string(got), to_fraction_string(want))
        });
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn failed_count(&self) -> usize {
        self.failed
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {:<24} {} checks", self.name, self.checked)?;
        if !self.passed() {
            write!(f, ", {} failed", self.failed)?;
            for line in &self.failures {
                write!(f, "\n     {line}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suites: Vec<SuiteResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    /// 0 when every suite passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            writeln!(f, "{s}")?;
        }
        let failed = self.suites.iter().filter(|s| !s.passed()).count();
        write!(f, "{} suites, {} failed", self.suites.len(), failed)
    }
}

pub fn run_all(config: &VerifyConfig) -> Report {
    run_with(config, &Evaluators::default())
}

pub fn run_with(config: &VerifyConfig, ev: &Evaluators) -> Report {
    let order = config.order.max(2);
    let n = config.max_steps;
    Report {
        suites: vec![
            kernel_identities(),
            series_reversion(order, ev),
            inverse_one_minus_t(order, ev),
            theorem1_grid(n, ev),
            fbeta_series(n, ev),
            theorem2_grid(n, ev),
            girard_waring(40),
            generating_function_forms(12, (order - 1).min(8), ev),
            boundary_series(order, n),
            structural_laws(n),
            oracle_equivalence(n.min(14)),
        ],
    }
}

pub fn kernel_identities() -> SuiteResult {
    let mut r = SuiteResult::new("kernel-identities");
    for c in kernel_identities_check().checks {
        r.check(c.passed, || format!("{} leaves residual {}", c.name, c.residual));
    }
    r
}

/// `t(x)` from its coefficient formula against reversion of
/// `x = (27/4) t (1 - t)^2`, and both compositions against the identity.
pub fn series_reversion(order: usize, ev: &Evaluators) -> SuiteResult {
    let mut r = SuiteResult::new("series-reversion");
    let x_of_t = TruncatedSeries::from_poly(&cf::kernel_x(), order);
    let reverted = match x_of_t.reversion() {
        Ok(s) => s,
        Err(e) => {
            r.check(false, || format!("reversion failed: {e}"));
            return r;
        }
    };
    let formula = (ev.t_series)(order);
    for k in 0..order {
        r.check_eq(&formula.coeff(k), &reverted.coeff(k), || format!("[x^{k}] t"));
    }
    let id = TruncatedSeries::variable(order);
    r.check(x_of_t.compose(&reverted).ok() == Some(id.clone()), || "x(t(x)) != x".into());
    r.check(reverted.compose(&x_of_t).ok() == Some(id), || "t(x(t)) != t".into());
    r.check_eq(&formula.coeff(1), &rat(4, 27), || "[x^1] t anchor".into());
    r
}

pub fn inverse_one_minus_t(order: usize, ev: &Evaluators) -> SuiteResult {
    let mut r = SuiteResult::new("inverse-one-minus-t");
    let t = (ev.t_series)(order);
    let recip = (&TruncatedSeries::one(order) - &t).recip().expect("1 - t is a unit");
    let formula = (ev.inv_one_minus_t)(order);
    let bad_root = cf::bad_root_series(order);
    for k in 0..order {
        r.check_eq(&formula.coeff(k), &recip.coeff(k), || format!("[x^{k}] 1/(1-t)"));
        r.check_eq(&bad_root.coeff(k), &(recip.coeff(k) * rat(2, 3)), || format!("[x^{k}] U_1"));
    }
    r
}

pub fn theorem1_grid(max_steps: usize, ev: &Evaluators) -> SuiteResult {
    let mut r = SuiteResult::new("double-large-grid-vs-dp");
    let rows = dp_distribution(&WalkModel::balanced(ModelKind::DoubleLarge), max_steps);
    for (n, row) in rows.iter().enumerate() {
        for j in 0..=2 * n + 2 {
            let want = row.mass(State::Numbered(j));
            r.check_eq(&(ev.theorem1)(n, j), &want, || format!("n={n} j={j}"));
        }
    }
    r
}

pub fn fbeta_series(max_steps: usize, ev: &Evaluators) -> SuiteResult {
    let mut r = SuiteResult::new("fbeta-vs-dp");
    let last = max_steps.max(1);
    let rows = dp_distribution(&WalkModel::balanced(ModelKind::DoubleLarge), last);
    for n in 0..=(last - 1) / 3 {
        let want = rows[3 * n + 1].mass(State::Beta);
        r.check_eq(&(ev.fbeta)(n), &want, || format!("beta at step {}", 3 * n + 1));
    }
    r.check_eq(&(ev.fbeta)(0), &rat(2, 3), || "fbeta(0) anchor".into());
    r
}

/// Double-small closed forms: numbered states `j >= 1`, state 0 at steps
/// `3N`, and the exceptional state at steps `3N + 2`.
pub fn theorem2_grid(max_steps: usize, ev: &Evaluators) -> SuiteResult {
    let mut r = SuiteResult::new("double-small-grid-vs-dp");
    let rows = dp_distribution(&WalkModel::balanced(ModelKind::DoubleSmall), max_steps);
    for (n, row) in rows.iter().enumerate() {
        for j in 1..=n + 2 {
            let want = row.mass(State::Numbered(j));
            r.check_eq(&(ev.theorem2)(n, j), &want, || format!("n={n} j={j}"));
        }
        match n % 3 {
            0 => r.check_eq(&(ev.g0)(n / 3), &row.mass(State::Numbered(0)), || format!("g0 at step {n}")),
            1 => {
                let third = row.mass(State::Numbered(1)) / int(3);
                r.check_eq(&(ev.gbeta)(n / 3), &third, || format!("gbeta vs state 1 at step {n}"));
            }
            _ => r.check_eq(&(ev.gbeta)(n / 3), &row.mass(State::Beta), || format!("gbeta at step {n}")),
        }
        if n % 3 != 0 {
            r.check(row.mass(State::Numbered(0)).is_zero(), || format!("state 0 off-class at {n}"));
        }
        if n % 3 != 2 {
            r.check(row.mass(State::Beta).is_zero(), || format!("beta off-class at {n}"));
        }
    }
    r.check_eq(&(ev.g0)(1), &rat(5, 9), || "g0(1) anchor".into());
    r.check_eq(&(ev.theorem2)(2, 2), &rat(2, 3), || "theorem2(2,2) anchor".into());
    r
}

pub fn girard_waring(max_m: usize) -> SuiteResult {
    let mut r = SuiteResult::new("girard-waring");
    for m in 0..=max_m {
        r.check(cf::girard_waring_power_sum(m) == cf::power_sum_recurrence(m), || {
            format!("power sum m={m}")
        });
        r.check(cf::girard_waring_quotient(m) == cf::quotient_recurrence(m), || format!("quotient m={m}"));
    }
    r
}

/// `[u^m] F` and `[u^j] G` as rational functions of `t`, expanded in `x`,
/// against the coefficient evaluators; plus the two constructions of
/// `[u^m] F` against each other.
pub fn generating_function_forms(max_m: usize, max_big_n: usize, ev: &Evaluators) -> SuiteResult {
    let mut r = SuiteResult::new("u-coefficient-forms");
    let t = (ev.t_series)(max_big_n + 1);
    for m in 0..=max_m {
        let f = cf::u_coeff_f(m);
        r.check(f.same_function(&cf::u_coeff_f_via_symmetric(m)), || format!("two forms of [u^{m}]F"));
        let s = f.to_series(&t).expect("denominator is 1 at t = 0");
        for big_n in 0..=max_big_n {
            let want = if 3 * big_n >= m { (ev.theorem1)(3 * big_n - m, m) } else { ExactRational::zero() };
            r.check_eq(&s.coeff(big_n), &want, || format!("[x^{big_n}] of [u^{m}]F"));
        }
    }
    for j in 1..=max_m {
        let s = cf::g_u_coeff(j).to_series(&t).expect("denominator is 4 at t = 0");
        for big_n in 0..=max_big_n {
            let want = (ev.theorem2)(j + 3 * big_n, j);
            r.check_eq(&s.coeff(big_n), &want, || format!("[x^{big_n}] of [u^{j}]G"));
        }
    }
    r
}

/// `f_0`, `g_0` and `z^2 g_1` as series in `x` against the dynamic program.
pub fn boundary_series(order: usize, max_steps: usize) -> SuiteResult {
    let mut r = SuiteResult::new("boundary-series");
    let big_n_max = (max_steps / 3).min(order - 1);
    let t = cf::t_series(big_n_max + 1);
    let rows1 = dp_distribution(&WalkModel::balanced(ModelKind::DoubleLarge), 3 * big_n_max);
    let rows2 = dp_distribution(&WalkModel::balanced(ModelKind::DoubleSmall), 3 * big_n_max);
    let f0 = cf::f0().to_series(&t).expect("unit");
    let g0 = cf::g0().to_series(&t).expect("unit");
    let g1 = cf::g1_shifted().to_series(&t).expect("unit");
    for big_n in 0..=big_n_max {
        r.check_eq(&f0.coeff(big_n), &rows1[3 * big_n].mass(State::Numbered(0)), || format!("f0 [x^{big_n}]"));
        r.check_eq(&g0.coeff(big_n), &rows2[3 * big_n].mass(State::Numbered(0)), || format!("g0 [x^{big_n}]"));
        let want = if big_n == 0 { ExactRational::zero() } else { rows2[3 * big_n - 2].mass(State::Numbered(1)) };
        r.check_eq(&g1.coeff(big_n), &want, || format!("z^2 g1 [x^{big_n}]"));
    }
    r
}

/// Every row sums to 1, stays inside the reach bound, and only charges
/// states whose residue class matches the step.
pub fn structural_laws(max_steps: usize) -> SuiteResult {
    let mut r = SuiteResult::new("structural-laws");
    for kind in ModelKind::ALL {
        for row in dp_distribution(&WalkModel::balanced(kind), max_steps) {
            let n = row.step();
            r.check(row.total().is_one(), || format!("{kind} row {n} sums to {}", row.total()));
            r.check(row.max_numbered().unwrap_or(0) <= kind.reach_bound(n), || format!("{kind} row {n} support"));
            for (s, m) in row.iter() {
                r.check(kind.residue_class(s) == (n % 3) as u8 && *m > ExactRational::zero(), || {
                    format!("{kind} step {n} state {s} off its residue class")
                });
            }
        }
    }
    r
}

/// Brute-force path enumeration against the dynamic program.
pub fn oracle_equivalence(max_steps: usize) -> SuiteResult {
    let mut r = SuiteResult::new("oracle-equivalence");
    for kind in ModelKind::ALL {
        let model = WalkModel::balanced(kind);
        let rows = dp_distribution(&model, max_steps);
        for (n, row) in rows.iter().enumerate() {
            let brute = brute_force_distribution(&model, n).expect("within the oracle limit");
            r.check(&brute == row, || format!("{kind} step {n}"));
        }
    }
    r
}
