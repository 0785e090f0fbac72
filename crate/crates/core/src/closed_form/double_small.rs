use num::Zero;

use super::RatFunc;
use crate::exact::{binom_general, int, rat, ExactRational, Poly};

type P = Poly<ExactRational>;

/// `[z^(3N)] g_0 = sum_{i=0}^{N} 2^(2i) / 3^(2N+i) C(2N+i, i)`.
pub fn g0_coeff(big_n: usize) -> ExactRational {
    let ni = big_n as i64;
    (0..=ni)
        .map(|i| binom_general(2 * ni + i, i) * num::pow(rat(4, 3), i as usize) / num::pow(int(9), big_n))
        .sum()
}

/// `sum_{i=0}^{N} 2^(2i) / 3^(2N+i+1) C(2N+1+i, i)`: probability of the
/// exceptional state after `3N + 2` steps, which is also a third of the
/// probability of `Numbered(1)` after `3N + 1` steps.
pub fn gbeta_coeff(big_n: usize) -> ExactRational {
    let ni = big_n as i64;
    (0..=ni)
        .map(|i| binom_general(2 * ni + 1 + i, i) * num::pow(rat(4, 3), i as usize))
        .sum::<ExactRational>()
        / (num::pow(int(9), big_n) * int(3))
}

/// Probability that the double-small walk sits in `Numbered(j)` after `n`
/// steps: zero unless `n = j + 3N`, then
/// `sum_{i=0}^{N} 2^(2i+j-1) / 3^(2N+i+j-1) C(2N+j+i, i)`.
///
/// The sum does not cover `j = 0`; that state is answered by [`g0_coeff`].
pub fn theorem2_coeff(n: usize, j: usize) -> ExactRational {
    if n < j || (n - j) % 3 != 0 {
        return ExactRational::zero();
    }
    let big_n = (n - j) / 3;
    if j == 0 {
        return g0_coeff(big_n);
    }
    let (ni, ji) = (big_n as i64, j as i64);
    let scale = num::pow(rat(2, 3), j - 1) / num::pow(int(9), big_n);
    (0..=ni)
        .map(|i| binom_general(2 * ni + ji + i, i) * num::pow(rat(4, 3), i as usize))
        .sum::<ExactRational>()
        * scale
}

/// `z^(-j) [u^j] G(u, z) = 6 / ((1-3t)(4-3t)) * (2 / (3(1-t)))^j` for `j >= 1`.
pub fn g_u_coeff(j: usize) -> RatFunc {
    assert!(j >= 1, "the u^0 coefficient is g_0, not part of this family");
    let num = P::constant(int(6) * num::pow(rat(2, 3), j));
    let one_minus_t = P::from_ratios(&[(1, 1), (-1, 1)]);
    let den = &P::from_ratios(&[(4, 1), (-15, 1), (9, 1)]) * &one_minus_t.pow(j as u32);
    RatFunc::new(num, den)
}

/// `z^2 g_1 = 27 t (1 - t) / ((1-3t)(4-3t))`; its `x^N` coefficient is the
/// probability of `Numbered(1)` after `3N - 2` steps.
pub fn g1_shifted() -> RatFunc {
    RatFunc::new(
        P::from_ratios(&[(0, 1), (27, 1), (-27, 1)]),
        P::from_ratios(&[(4, 1), (-15, 1), (9, 1)]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::{g0_series, t_series};

    #[test]
    fn anchors() {
        assert_eq!(g0_coeff(0), int(1));
        assert_eq!(g0_coeff(1), rat(5, 9));
        assert_eq!(g0_coeff(2), rat(103, 243));
        assert_eq!(gbeta_coeff(0), rat(1, 3));
        assert_eq!(gbeta_coeff(1), rat(1, 27) + rat(16, 81));
        assert_eq!(theorem2_coeff(1, 1), int(1));
        assert_eq!(theorem2_coeff(2, 2), rat(2, 3));
        assert_eq!(theorem2_coeff(4, 1), rat(1, 9) + rat(16, 27));
        assert_eq!(theorem2_coeff(3, 0), rat(5, 9));
        assert_eq!(theorem2_coeff(3, 1), int(0));
        assert_eq!(theorem2_coeff(1, 4), int(0));
    }

    #[test]
    fn gbeta_is_a_third_of_state_one() {
        for big_n in 0..12 {
            assert_eq!(gbeta_coeff(big_n), theorem2_coeff(3 * big_n + 1, 1) / int(3));
        }
    }

    #[test]
    fn g0_series_matches_sum() {
        let s = g0_series(12);
        for big_n in 0..12 {
            assert_eq!(s.coeff(big_n), g0_coeff(big_n));
        }
    }

    #[test]
    fn u_coefficients_expand_to_sums() {
        let t = t_series(9);
        for j in 1..=12 {
            let s = g_u_coeff(j).to_series(&t).unwrap();
            for big_n in 0..9 {
                assert_eq!(s.coeff(big_n), theorem2_coeff(j + 3 * big_n, j), "j={j} N={big_n}");
            }
        }
    }

    #[test]
    fn geometric_ratio() {
        let ratio = RatFunc::new(P::from_ratios(&[(2, 1)]), P::from_ratios(&[(3, 1), (-3, 1)]));
        for j in 1..10 {
            let a = g_u_coeff(j);
            let b = g_u_coeff(j + 1);
            let scaled = RatFunc::new(&a.num * &ratio.num, &a.den * &ratio.den);
            assert!(b.same_function(&scaled));
        }
    }

    #[test]
    fn shifted_g1_matches_state_one() {
        let s = g1_shifted().to_series(&t_series(10)).unwrap();
        assert_eq!(s.coeff(0), int(0));
        for big_n in 1..10 {
            assert_eq!(s.coeff(big_n), theorem2_coeff(3 * big_n - 2, 1));
        }
    }
}
