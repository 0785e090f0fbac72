use num::{BigInt, One, Zero};

use super::ExactRational;

/// Binomial coefficient `C(a, b)` for any integer `a`, as an integer.
///
/// Uses the falling-factorial definition `a (a-1) ... (a-b+1) / b!`, so
/// negative upper indices are allowed (`C(-4, 1) = -4`). Negative lower
/// indices give 0.
pub fn binom_int(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    if a >= 0 && b > a {
        return BigInt::zero();
    }
    // C(a, b) = C(a, a - b) keeps the product short for large nonnegative a.
    let b = if a >= 0 && a - b < b { a - b } else { b };
    let mut acc = BigInt::one();
    for i in 0..b {
        // Dividing at every step stays exact: acc is C(a, i + 1) afterwards.
        acc *= BigInt::from(a - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// [`binom_int`] lifted to [`ExactRational`].
pub fn binom_general(a: i64, b: i64) -> ExactRational {
    ExactRational::from_integer(binom_int(a, b))
}
