use num::One;

use super::RatFunc;
use crate::error::Result;
use crate::exact::{binom_general, int, rat, ExactRational, Poly, TruncatedSeries};

/// `x = (27/4) t (1 - t)^2` as a polynomial in `t`.
pub fn kernel_x() -> Poly<ExactRational> {
    Poly::from_ratios(&[(0, 1), (27, 4), (-27, 2), (27, 4)])
}

fn pow(base: ExactRational, e: usize) -> ExactRational {
    num::pow(base, e)
}

/// `t(x) = sum_{k>=1} (1/k) C(3k-2, k-1) 2^(2k) / 3^(3k) x^k`.
pub fn t_series(order: usize) -> TruncatedSeries {
    let coeffs = (0..order)
        .map(|k| {
            if k == 0 {
                return int(0);
            }
            let k_i = k as i64;
            binom_general(3 * k_i - 2, k_i - 1) * rat(1, k_i) * pow(rat(4, 27), k)
        })
        .collect();
    TruncatedSeries::new(coeffs, order)
}

/// `t(x)` computed instead by reverting `x = (27/4) t (1 - t)^2`.
pub fn t_series_by_reversion(order: usize) -> Result<TruncatedSeries> {
    TruncatedSeries::from_poly(&kernel_x(), order).reversion()
}

/// `1/(1 - t) = sum_{k>=0} 1/(2k+1) C(3k, k) 2^(2k) / 3^(3k) x^k`.
pub fn inv_one_minus_t_series(order: usize) -> TruncatedSeries {
    let coeffs = (0..order)
        .map(|k| {
            let k_i = k as i64;
            binom_general(3 * k_i, k_i) * rat(1, 2 * k_i + 1) * pow(rat(4, 27), k)
        })
        .collect();
    TruncatedSeries::new(coeffs, order)
}

/// The kernel root `U_1 = 2 / (3(1 - t)) = sum_{k>=0} 1/(2k+1) C(3k, k)
/// 2^(2k+1) / 3^(3k+1) x^k`, which starts at 2/3.
pub fn bad_root_series(order: usize) -> TruncatedSeries {
    let coeffs = (0..order)
        .map(|k| {
            let k_i = k as i64;
            binom_general(3 * k_i, k_i) * rat(1, 2 * k_i + 1) * rat(2, 3) * pow(rat(4, 27), k)
        })
        .collect();
    TruncatedSeries::new(coeffs, order)
}

/// `f_0 = 1 / ((1 - t)(1 - 3t))`: the return-to-origin function of the
/// double-large model, in the variable `x = z^3`.
pub fn f0() -> RatFunc {
    RatFunc::new(Poly::one(), Poly::from_ratios(&[(1, 1), (-4, 1), (3, 1)]))
}

pub fn f0_series(order: usize) -> TruncatedSeries {
    f0().to_series(&t_series(order)).expect("denominator is 1 at t = 0")
}

/// `g_0 = 4 / ((1 - 3t)(4 - 3t))` for the double-small model.
pub fn g0() -> RatFunc {
    RatFunc::new(Poly::from_ratios(&[(4, 1)]), Poly::from_ratios(&[(4, 1), (-15, 1), (9, 1)]))
}

pub fn g0_series(order: usize) -> TruncatedSeries {
    g0().to_series(&t_series(order)).expect("denominator is 4 at t = 0")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_series_leading_terms() {
        let t = t_series(4);
        assert_eq!(t.coeff(0), int(0));
        assert_eq!(t.coeff(1), rat(4, 27));
        assert_eq!(t.coeff(2), rat(32, 729));
    }

    #[test]
    fn t_series_matches_reversion() {
        assert_eq!(t_series(30), t_series_by_reversion(30).unwrap());
    }

    #[test]
    fn inv_one_minus_t_matches_reciprocal() {
        let one_minus_t = &TruncatedSeries::one(30) - &t_series(30);
        let inv = inv_one_minus_t_series(30);
        assert_eq!(inv.coeff(0), int(1));
        assert_eq!(inv.coeff(1), rat(4, 27));
        assert_eq!(one_minus_t.recip().unwrap(), inv);
    }

    #[test]
    fn bad_root_is_two_thirds_of_inverse() {
        let u1 = bad_root_series(30);
        assert_eq!(u1.coeff(0), rat(2, 3));
        assert_eq!(u1.coeff(1), rat(8, 81));
        assert_eq!(u1, inv_one_minus_t_series(30).scale(&rat(2, 3)));
    }

    #[test]
    fn f0_and_g0_leading_terms() {
        let f = f0_series(3);
        assert_eq!(f.coeff(0), int(1));
        assert_eq!(f.coeff(1), rat(16, 27));
        let g = g0_series(3);
        assert_eq!(g.coeff(0), int(1));
        assert_eq!(g.coeff(1), rat(5, 9));
    }
}
