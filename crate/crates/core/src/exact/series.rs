use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::{ExactRational, Poly};
use crate::error::{Error, Result};

/// Truncation order used when callers do not pick one.
pub const DEFAULT_ORDER: usize = 32;

/// Formal power series with exact coefficients, known modulo `X^order`.
///
/// Binary operations return a series of the smaller operand order, since
/// nothing beyond it is determined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<ExactRational>,
}

impl TruncatedSeries {
    /// Pads with zeros or cuts so that exactly `order` coefficients remain.
    pub fn new(mut coeffs: Vec<ExactRational>, order: usize) -> Self {
        coeffs.resize(order, ExactRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::constant(ExactRational::one(), order)
    }

    pub fn constant(c: ExactRational, order: usize) -> Self {
        TruncatedSeries::new(vec![c], order)
    }

    /// The series `X`.
    pub fn variable(order: usize) -> Self {
        TruncatedSeries::new(vec![ExactRational::zero(), ExactRational::one()], order)
    }

    pub fn from_poly(p: &Poly<ExactRational>, order: usize) -> Self {
        TruncatedSeries::new(p.coeffs().to_vec(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Coefficient of `X^k`; zero past the order.
    pub fn coeff(&self, k: usize) -> ExactRational {
        self.coeffs.get(k).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries::new(self.coeffs[..order.min(self.order())].to_vec(), order.min(self.order()))
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplicative inverse; order preserved.
    pub fn recip(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotAUnit);
        }
        let inv0 = a0.recip();
        let mut out: Vec<ExactRational> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let s = (1..=k).fold(ExactRational::zero(), |acc, i| {
                if self.coeffs[i].is_zero() {
                    acc
                } else {
                    acc + &self.coeffs[i] * &out[k - i]
                }
            });
            out.push(-s * &inv0);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `self / rhs`, order is the smaller of the two.
    pub fn div(&self, rhs: &TruncatedSeries) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = TruncatedSeries::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(inner(X))`. `inner` must have zero constant term; the result
    /// has the smaller of the two orders.
    pub fn compose(&self, inner: &TruncatedSeries) -> Result<Self> {
        if !inner.coeff(0).is_zero() {
            return Err(Error::NonZeroConstant);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        Ok(horner(&self.coeffs[..order], &inner, order))
    }

    /// Compositional inverse: the series `r` with `self(r(X)) = X`.
    ///
    /// Needs a zero constant and nonzero linear term. Coefficients come from
    /// Lagrange inversion, `[X^n] r = (1/n) [T^(n-1)] (T / self(T))^n`.
    pub fn reversion(&self) -> Result<Self> {
        let n = self.order();
        if n < 2 || !self.coeff(0).is_zero() || self.coeff(1).is_zero() {
            return Err(Error::NotInvertible);
        }
        // self(T) / T, known to order n - 1
        let shifted = TruncatedSeries { coeffs: self.coeffs[1..].to_vec() };
        let phi = shifted.recip()?;
        let mut out = vec![ExactRational::zero(); n];
        let mut phi_pow = TruncatedSeries::one(n - 1);
        for k in 1..n {
            phi_pow = &phi_pow * &phi;
            out[k] = phi_pow.coeff(k - 1) / ExactRational::from_integer(k.into());
        }
        Ok(TruncatedSeries { coeffs: out })
    }
}

/// Polynomial composed with a series with zero constant term.
pub(crate) fn compose_poly(p: &Poly<ExactRational>, inner: &TruncatedSeries) -> Result<TruncatedSeries> {
    if !inner.coeff(0).is_zero() {
        return Err(Error::NonZeroConstant);
    }
    Ok(horner(p.coeffs(), inner, inner.order()))
}

fn horner(outer: &[ExactRational], inner: &TruncatedSeries, order: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::zero(order);
    for c in outer.iter().rev() {
        acc = &acc * inner;
        if order > 0 {
            acc.coeffs[0] += c;
        }
    }
    acc
}

impl Poly<ExactRational> {
    /// Substitute a series (zero constant term) for the variable.
    pub fn compose_series(&self, inner: &TruncatedSeries) -> Result<TruncatedSeries> {
        compose_poly(self, inner)
    }
}

impl<'a> Add<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![ExactRational::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::poly::write_terms(f, &self.coeffs, "x")?;
        write!(f, " + O(x^{})", self.order())
    }
}
