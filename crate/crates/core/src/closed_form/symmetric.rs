use num::{One, Zero};

use crate::exact::{binom_general, int, rat, ExactRational, Poly};

type P = Poly<ExactRational>;

/// Two roots `X, Y` known only through `e = X + Y` and `f = X Y`, both
/// polynomials in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricPair {
    pub sum_e: P,
    pub prod_f: P,
}

impl SymmetricPair {
    /// `sigma + tau = (3/2) t`, `sigma tau = (9/4) t (t - 1)`.
    pub fn sigma_tau() -> Self {
        SymmetricPair {
            sum_e: P::from_ratios(&[(0, 1), (3, 2)]),
            prod_f: P::from_ratios(&[(0, 1), (-9, 4), (9, 4)]),
        }
    }

    /// The quadratic `V^2 - e V + f` whose roots are the pair.
    pub fn quadratic(&self) -> Poly<P> {
        Poly::new(vec![self.prod_f.clone(), -&self.sum_e, P::one()])
    }

    /// `X^m + Y^m` by the Girard-Waring sum
    /// `sum_{k<=m/2} (-1)^k C(m-k, k) m/(m-k) f^k e^(m-2k)`, with `m = 0`
    /// giving 2.
    pub fn power_sum(&self, m: usize) -> P {
        if m == 0 {
            return P::constant(int(2));
        }
        let mi = m as i64;
        (0..=m / 2).fold(P::zero(), |acc, k| {
            let ki = k as i64;
            let c = sign(k) * binom_general(mi - ki, ki) * rat(mi, mi - ki);
            &acc + &(&self.prod_f.pow(k as u32) * &self.sum_e.pow((m - 2 * k) as u32)).scale(&c)
        })
    }

    /// `(X^m - Y^m) / (X - Y)` by the companion sum
    /// `sum_{k<=(m-1)/2} (-1)^k C(m-1-k, k) f^k e^(m-1-2k)`; zero for `m = 0`.
    pub fn quotient(&self, m: usize) -> P {
        if m == 0 {
            return P::zero();
        }
        let mi = m as i64;
        (0..=(m - 1) / 2).fold(P::zero(), |acc, k| {
            let ki = k as i64;
            let c = sign(k) * binom_general(mi - 1 - ki, ki);
            &acc + &(&self.prod_f.pow(k as u32) * &self.sum_e.pow((m - 1 - 2 * k) as u32)).scale(&c)
        })
    }

    /// `p_m = e p_(m-1) - f p_(m-2)` from `p_0 = 2`, `p_1 = e`.
    pub fn power_sum_recurrence(&self, m: usize) -> P {
        self.two_term(P::constant(int(2)), self.sum_e.clone(), m)
    }

    /// Same recurrence from `0, 1`.
    pub fn quotient_recurrence(&self, m: usize) -> P {
        self.two_term(P::zero(), P::one(), m)
    }

    fn two_term(&self, a0: P, a1: P, m: usize) -> P {
        let (mut prev, mut cur) = (a0, a1);
        if m == 0 {
            return prev;
        }
        for _ in 1..m {
            let next = &(&self.sum_e * &cur) - &(&self.prod_f * &prev);
            prev = std::mem::replace(&mut cur, next);
        }
        cur
    }
}

fn sign(k: usize) -> ExactRational {
    if k % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

pub fn girard_waring_power_sum(m: usize) -> P {
    SymmetricPair::sigma_tau().power_sum(m)
}

pub fn girard_waring_quotient(m: usize) -> P {
    SymmetricPair::sigma_tau().quotient(m)
}

pub fn power_sum_recurrence(m: usize) -> P {
    SymmetricPair::sigma_tau().power_sum_recurrence(m)
}

pub fn quotient_recurrence(m: usize) -> P {
    SymmetricPair::sigma_tau().quotient_recurrence(m)
}

/// `[U^m] 1 / ((1 - sigma U)(1 - tau U))`, the complete homogeneous
/// polynomial of degree `m` in `sigma, tau`.
pub fn complete_homogeneous(m: usize) -> P {
    girard_waring_quotient(m + 1)
}
