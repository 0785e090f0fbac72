use num::Zero;

use super::{complete_homogeneous, RatFunc};
use crate::exact::{binom_general, binom_int, int, rat, ExactRational, Poly};

type P = Poly<ExactRational>;

/// `[z^(3n+1)] f_beta = 2^(2n+1) / 3^(3n+1) C(3n+1, n)`: probability of the
/// exceptional state after `3n + 1` steps of the double-large walk.
pub fn fbeta_coeff(n: usize) -> ExactRational {
    let ni = n as i64;
    binom_general(3 * ni + 1, ni) * rat(2, 3) * num::pow(rat(4, 27), n)
}

/// Probability that the double-large walk sits in `Numbered(j)` after `n`
/// steps.
///
/// Zero unless `n + j = 3N`. Otherwise the value is
/// `(3/2)^j (4/27)^N (-1)^(N+j) (S1 + 3 S2)` where
///
/// ```text
/// S1 = sum_{0 <= k <= j/2}     (-1)^k C(j-k, k)   C(k-2N-2, N-j+k)
/// S2 = sum_{0 <= k <= (j-1)/2} (-1)^k C(j-1-k, k) C(k-2N-1, N-j+k)
/// ```
///
/// with generalized binomials (negative upper index allowed).
pub fn theorem1_coeff(n: usize, j: usize) -> ExactRational {
    if (n + j) % 3 != 0 {
        return ExactRational::zero();
    }
    let big_n = ((n + j) / 3) as i64;
    let ji = j as i64;
    let alt = |k: i64| if k % 2 == 0 { 1 } else { -1 };

    let s1: num::BigInt = (0..=ji / 2)
        .map(|k| alt(k) * binom_int(ji - k, k) * binom_int(k - 2 * big_n - 2, big_n - ji + k))
        .sum();
    let s2: num::BigInt = if ji == 0 {
        num::BigInt::zero()
    } else {
        (0..=(ji - 1) / 2)
            .map(|k| alt(k) * binom_int(ji - 1 - k, k) * binom_int(k - 2 * big_n - 1, big_n - ji + k))
            .sum()
    };
    let total = ExactRational::from_integer(s1 + s2 * 3);
    total * int(alt(big_n + ji)) * num::pow(rat(3, 2), j) * num::pow(rat(4, 27), big_n as usize)
}

fn denominator() -> P {
    // (1 - 3t)(1 - t)
    P::from_ratios(&[(1, 1), (-4, 1), (3, 1)])
}

/// `z^m [u^m] F(u, z)` as a rational function of `t`:
///
/// ```text
/// (3/2)^m / ((1-3t)(1-t)) * [ sum_{k<=m/2}     (-1)^k C(m-k, k)   (t-1)^k     t^(m-k)
///                           - 3 sum_{k<=(m-1)/2} (-1)^k C(m-1-k, k) (t-1)^(k+1) t^(m-k) ]
/// ```
///
/// Expanding in `x` via `t(x)`, the coefficient of `x^N` is the probability
/// of `Numbered(m)` after `3N - m` steps.
pub fn u_coeff_f(m: usize) -> RatFunc {
    let t = P::var();
    let t_minus_1 = P::from_ratios(&[(-1, 1), (1, 1)]);
    let mi = m as i64;
    let sign = |k: usize| if k % 2 == 0 { int(1) } else { int(-1) };

    let first = (0..=m / 2).fold(P::zero(), |acc, k| {
        let c = sign(k) * binom_general(mi - k as i64, k as i64);
        &acc + &(&t_minus_1.pow(k as u32) * &t.pow((m - k) as u32)).scale(&c)
    });
    let second = if m == 0 {
        P::zero()
    } else {
        (0..=(m - 1) / 2).fold(P::zero(), |acc, k| {
            let c = sign(k) * binom_general(mi - 1 - k as i64, k as i64);
            &acc + &(&t_minus_1.pow(k as u32 + 1) * &t.pow((m - k) as u32)).scale(&c)
        })
    };
    let num = (&first - &second.scale(&int(3))).scale(&num::pow(rat(3, 2), m));
    RatFunc::new(num, denominator())
}

/// The same function rebuilt from `F = f_0 (1 - (9/2) t (t-1) U) / ((1 - sigma U)(1 - tau U))`
/// using complete homogeneous polynomials in `sigma, tau`.
pub fn u_coeff_f_via_symmetric(m: usize) -> RatFunc {
    let mut num = complete_homogeneous(m);
    if m >= 1 {
        // (9/2) t (t - 1)
        let c = P::from_ratios(&[(0, 1), (-9, 2), (9, 2)]);
        num = &num - &(&c * &complete_homogeneous(m - 1));
    }
    RatFunc::new(num, denominator())
}
