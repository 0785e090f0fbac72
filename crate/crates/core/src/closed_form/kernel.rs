use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::{kernel_x, SymmetricPair};
use crate::exact::{int, rat, ExactRational, Poly};

type P = Poly<ExactRational>;
type B = Poly<P>;

/// `a + b W` with `a, b` in `Q[t]` and `W^2 = 4t - 3t^2`.
///
/// This is where `sigma = (3/4)(t - W)` and `tau = (3/4)(t + W)` can be
/// written down exactly without a square-root series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalExt {
    pub a: P,
    pub b: P,
}

impl RadicalExt {
    pub fn radicand() -> P {
        P::from_ratios(&[(0, 1), (4, 1), (-3, 1)])
    }

    pub fn new(a: P, b: P) -> Self {
        RadicalExt { a, b }
    }

    pub fn sigma() -> Self {
        let c = P::constant(rat(3, 4));
        RadicalExt::new(&c * &P::var(), -&c)
    }

    pub fn tau() -> Self {
        let c = P::constant(rat(3, 4));
        RadicalExt::new(&c * &P::var(), c)
    }

    fn lift(p: P) -> Self {
        RadicalExt::new(p, P::zero())
    }
}

impl Zero for RadicalExt {
    fn zero() -> Self {
        RadicalExt::new(P::zero(), P::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for RadicalExt {
    fn one() -> Self {
        RadicalExt::lift(P::one())
    }
}

impl Add for RadicalExt {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        RadicalExt::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for RadicalExt {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        RadicalExt::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for RadicalExt {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let a = &(&self.a * &rhs.a) + &(&(&self.b * &rhs.b) * &RadicalExt::radicand());
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        RadicalExt::new(a, b)
    }
}

impl Neg for RadicalExt {
    type Output = Self;

    fn neg(self) -> Self {
        RadicalExt::new(-&self.a, -&self.b)
    }
}

/// Outcome of one exact identity: `residual` is the difference of the two
/// sides after clearing denominators, rendered for reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub passed: bool,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport {
    pub checks: Vec<IdentityCheck>,
}

impl KernelReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn check_poly(name: &'static str, residual: P) -> IdentityCheck {
    IdentityCheck { name, passed: residual.is_zero(), residual: residual.to_string() }
}

fn check_bivariate(name: &'static str, residual: B) -> IdentityCheck {
    let rendered = residual
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| format!("({c})*V^{k}"))
        .collect::<Vec<_>>()
        .join(" + ");
    IdentityCheck {
        name,
        passed: residual.is_zero(),
        residual: if rendered.is_empty() { "0".into() } else { rendered },
    }
}

fn check_radical(name: &'static str, residual: Poly<RadicalExt>) -> IdentityCheck {
    let rendered = residual
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| format!("({} + ({})W)*U^{k}", c.a, c.b))
        .collect::<Vec<_>>()
        .join(" + ");
    IdentityCheck {
        name,
        passed: residual.is_zero(),
        residual: if rendered.is_empty() { "0".into() } else { rendered },
    }
}

/// Checks the algebraic identities behind both generating functions as
/// exact polynomial identities.
///
/// * `kernel-root`: `U_1 = 2/(3(1-t))` annihilates `x U^3 - 3U + 2`.
/// * `dual-factorisation`: `2(V - (3/2)(1-t))(V^2 - eV + f) = 2V^3 - 3V^2 + x`.
/// * `quadratic-factor`: `(1 - sigma U)(1 - tau U) = 1 - (3/2)t U + (9/4)t(t-1) U^2`.
/// * `roots-of-cubic`: `sigma` and `tau` both annihilate `2V^3 - 3V^2 + x`.
/// * `double-large-numerator`: dividing the numerator of `F` by `U - U_1`
///   leaves `(-3 + (27/2) t (t-1) U) / (1 - 3t)`.
/// * `double-small-numerator`: the numerator of `G` is
///   `(V - sigma)(V - tau)(12(t-1) - 4V) / ((1-3t)(4-3t))`.
pub fn kernel_identities_check() -> KernelReport {
    let x = kernel_x();
    let pair = SymmetricPair::sigma_tau();
    let one_minus_t = P::from_ratios(&[(1, 1), (-1, 1)]);
    let mut checks = Vec::new();

    // U_1 = 2 / D, D = 3(1 - t); multiply through by D^3.
    let num = P::constant(int(2));
    let den = one_minus_t.scale(&int(3));
    let residual = &(&(&x * &num.pow(3)) - &(&num * &den.pow(2)).scale(&int(3))) + &den.pow(3).scale(&int(2));
    checks.push(check_poly("kernel-root", residual));

    // Polynomials in V over Q[t].
    let v = B::var();
    let linear = B::new(vec![-&one_minus_t.scale(&rat(3, 2)), P::one()]);
    let lhs = &(&linear * &pair.quadratic()) * &B::constant(P::constant(int(2)));
    let cubic = B::new(vec![x.clone(), P::zero(), P::constant(int(-3)), P::constant(int(2))]);
    checks.push(check_bivariate("dual-factorisation", &lhs - &cubic));

    // (1 - sigma U)(1 - tau U) over Q[t][W].
    type R = Poly<RadicalExt>;
    let factor = |root: RadicalExt| R::new(vec![RadicalExt::one(), -root]);
    let product = &factor(RadicalExt::sigma()) * &factor(RadicalExt::tau());
    let expected = R::new(vec![
        RadicalExt::one(),
        RadicalExt::lift(-&pair.sum_e),
        RadicalExt::lift(pair.prod_f.clone()),
    ]);
    checks.push(check_radical("quadratic-factor", &product - &expected));

    let cubic_r = R::new(vec![
        RadicalExt::lift(x.clone()),
        RadicalExt::zero(),
        RadicalExt::lift(P::constant(int(-3))),
        RadicalExt::lift(P::constant(int(2))),
    ]);
    let at_roots = R::new(vec![cubic_r.eval(&RadicalExt::sigma()), cubic_r.eval(&RadicalExt::tau())]);
    checks.push(check_radical("roots-of-cubic", at_roots));

    // Numerator of F times (1-t)(1-3t), against (U - U_1)(1-t) times the
    // reduced numerator times (1-3t).
    let d = P::from_ratios(&[(1, 1), (-4, 1), (3, 1)]);
    let numerator_f = B::new(vec![P::constant(int(2)), d.scale(&int(-3)), x.scale(&int(-2))]);
    let root_factor = B::new(vec![P::constant(rat(-2, 3)), one_minus_t.clone()]);
    let reduced = B::new(vec![P::constant(int(-3)), P::from_ratios(&[(0, 1), (-27, 2), (27, 2)])]);
    checks.push(check_bivariate("double-large-numerator", &numerator_f - &(&root_factor * &reduced)));

    // Numerator of G times (1-3t)(4-3t).
    let d2 = P::from_ratios(&[(4, 1), (-15, 1), (9, 1)]);
    let c = P::from_ratios(&[(0, 1), (27, 1), (-27, 1)]);
    let numerator_g = B::new(vec![x.scale(&int(4)), c.clone(), &d2.scale(&int(-3)) - &c, P::constant(int(-4))]);
    let (quot, rem) = numerator_g.div_rem_monic(&pair.quadratic());
    let expected_quot = &B::constant(P::from_ratios(&[(-12, 1), (12, 1)])) - &v.scale(&P::constant(int(4)));
    let mut residual = rem;
    if quot != expected_quot {
        residual = &residual + &(&quot - &expected_quot);
    }
    checks.push(check_bivariate("double-small-numerator", residual));

    KernelReport { checks }
}
