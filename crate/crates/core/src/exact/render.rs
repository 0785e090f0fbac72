use num::{BigInt, Integer, One, Signed, Zero};

use super::ExactRational;
use crate::error::{Error, Result};

/// `num/den` with the denominator always present (`1/1`, `-16/27`).
pub fn to_fraction_string(r: &ExactRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `a/b`, a bare integer `a`, or a finite decimal such as `0.25`.
pub fn parse_rational(s: &str) -> Result<ExactRational> {
    let err = || Error::ParseRational(s.to_string());
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(ExactRational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let negative = whole.starts_with('-');
        let whole: BigInt = match whole.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            w => w.parse().map_err(|_| err())?,
        };
        let frac_int: BigInt = frac.parse().map_err(|_| err())?;
        let scale = num::pow(BigInt::from(10), frac.len());
        let magnitude = ExactRational::new(whole * &scale + frac_int, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    let n: BigInt = s.parse().map_err(|_| err())?;
    Ok(ExactRational::from_integer(n))
}

/// Plain decimal rendering rounded half-up to `sig_digits` significant
/// digits. Computed exactly from the rational, no floating point involved.
pub fn to_decimal(r: &ExactRational, sig_digits: usize) -> String {
    let sig_digits = sig_digits.max(1);
    if r.is_zero() {
        return "0".to_string();
    }
    let negative = r.is_negative();
    let a = r.abs();
    let ten = BigInt::from(10);

    // e = floor(log10(a)), found by comparing against powers of ten.
    let mut e: i64 = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    let pow10 = |k: i64| -> ExactRational {
        if k >= 0 {
            ExactRational::from_integer(num::pow(ten.clone(), k as usize))
        } else {
            ExactRational::new(BigInt::one(), num::pow(ten.clone(), (-k) as usize))
        }
    };
    while a < pow10(e) {
        e -= 1;
    }
    while a >= pow10(e + 1) {
        e += 1;
    }

    // digits = round(a * 10^(sig - 1 - e))
    let shift = sig_digits as i64 - 1 - e;
    let scaled = a * pow10(shift);
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let mut digits = if rem * BigInt::from(2) >= *scaled.denom() { q + 1 } else { q };
    let mut shift = shift;
    if digits == num::pow(ten.clone(), sig_digits) {
        digits /= &ten;
        shift -= 1;
    }

    let mut s = digits.to_string();
    let body = if shift <= 0 {
        s.extend(std::iter::repeat('0').take((-shift) as usize));
        s
    } else {
        let shift = shift as usize;
        if s.len() <= shift {
            let zeros = "0".repeat(shift - s.len());
            s = format!("0.{zeros}{s}");
        } else {
            s.insert(s.len() - shift, '.');
        }
        let trimmed = s.trim_end_matches('0').trim_end_matches('.');
        trimmed.to_string()
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn decimals() {
        assert_eq!(to_decimal(&rat(16, 27), 12), "0.592592592593");
        assert_eq!(to_decimal(&rat(1, 3), 4), "0.3333");
        assert_eq!(to_decimal(&rat(2, 3), 3), "0.667");
        assert_eq!(to_decimal(&int(1), 12), "1");
        assert_eq!(to_decimal(&int(0), 12), "0");
        assert_eq!(to_decimal(&rat(-1, 8), 12), "-0.125");
        assert_eq!(to_decimal(&rat(1, 531441), 3), "0.00000188");
        assert_eq!(to_decimal(&rat(999, 1000), 2), "1");
        assert_eq!(to_decimal(&int(12345), 2), "12000");
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("16/27").unwrap(), rat(16, 27));
        assert_eq!(parse_rational("2/6").unwrap(), rat(1, 3));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-.5").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.").is_err());
    }

    proptest! {
        #[test]
        fn fraction_string_round_trips(n in -10_000i64..10_000, d in 1i64..10_000) {
            let r = rat(n, d);
            prop_assert_eq!(parse_rational(&to_fraction_string(&r)).unwrap(), r);
        }
    }
}
