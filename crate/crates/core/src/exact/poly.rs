use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::ExactRational;

/// Commutative ring with unity; enough structure for dense polynomials.
pub trait Ring:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Dense univariate polynomial. Coefficient `i` multiplies the `i`-th power;
/// trailing zeros are never stored, so the zero polynomial is empty.
///
/// `Poly<Poly<ExactRational>>` is used for bivariate identities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// The polynomial `X`.
    pub fn var() -> Self {
        Poly::new(vec![R::zero(), R::one()])
    }

    /// `c * X^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
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

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &Poly<R>) -> Poly<R> {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            &(&acc * inner) + &Poly::constant(c.clone())
        })
    }

    /// Division by a monic divisor; works over any ring.
    ///
    /// Panics if `divisor` is zero or not monic.
    pub fn div_rem_monic(&self, divisor: &Poly<R>) -> (Poly<R>, Poly<R>) {
        let d = divisor.degree().expect("division by zero polynomial");
        assert!(divisor.coeffs[d].is_one(), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![R::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let lead = rem[k + d].clone();
            if lead.is_zero() {
                continue;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - lead.clone() * c.clone();
            }
            quot[k] = lead;
        }
        (Poly::new(quot), Poly::new(rem))
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly::constant(R::one())
    }
}

impl<'a, R: Ring> Add<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;

    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, R: Ring> Sub<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;

    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, R: Ring> Mul<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;

    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;

    fn neg(self) -> Poly<R> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: Ring> $tr for Poly<R> {
            type Output = Poly<R>;

            fn $m(self, rhs: Poly<R>) -> Poly<R> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;

    fn neg(self) -> Poly<R> {
        -&self
    }
}

impl Poly<ExactRational> {
    /// Parse-free constructor from small integer ratios, lowest degree first.
    pub fn from_ratios(coeffs: &[(i64, i64)]) -> Self {
        Poly::new(coeffs.iter().map(|&(n, d)| super::rat(n, d)).collect())
    }
}

impl fmt::Display for Poly<ExactRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, "t")
    }
}

pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, coeffs: &[ExactRational], var: &str) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
        }
        first = false;
        let a = c.abs();
        match k {
            0 => write!(f, "{a}")?,
            _ if a.is_one() => {}
            _ => write!(f, "{a}*")?,
        }
        match k {
            0 => {}
            1 => write!(f, "{var}")?,
            _ => write!(f, "{var}^{k}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    type P = Poly<ExactRational>;

    fn poly_strategy() -> impl Strategy<Value = P> {
        prop::collection::vec((-9i64..9, 1i64..5), 0..6)
            .prop_map(|v| Poly::new(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = P::new(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(P::new(vec![int(0)]).is_zero());
    }

    #[test]
    fn display() {
        let p = P::from_ratios(&[(1, 1), (-3, 2), (9, 4)]);
        assert_eq!(p.to_string(), "1 - 3/2*t + 9/4*t^2");
        assert_eq!((-P::var()).to_string(), "-t");
    }

    #[test]
    fn monic_division_of_bivariate() {
        // (V^2 - tV + 1) * (V + t) over Q[t]
        type B = Poly<P>;
        let t = P::var();
        let q = B::new(vec![P::one(), -t.clone(), P::one()]);
        let l = B::new(vec![t.clone(), P::one()]);
        let prod = &q * &l;
        let (quot, rem) = prod.div_rem_monic(&q);
        assert_eq!(quot, l);
        assert!(rem.is_zero());
    }

    proptest! {
        #[test]
        fn division_reconstructs(a in poly_strategy(), b in poly_strategy()) {
            prop_assume!(!b.is_zero());
            let lead = b.coeff(b.degree().unwrap());
            let monic = b.scale(&(int(1) / lead));
            let (q, r) = a.div_rem_monic(&monic);
            prop_assert_eq!(&(&q * &monic) + &r, a);
            prop_assert!(r.degree() < monic.degree() || r.is_zero());
        }

        #[test]
        fn eval_is_a_ring_map(a in poly_strategy(), b in poly_strategy(), x in -5i64..5) {
            let x = int(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }

        #[test]
        fn compose_evaluates_inner_first(a in poly_strategy(), b in poly_strategy(), x in -4i64..4) {
            let x = int(x);
            prop_assert_eq!(a.compose(&b).eval(&x), a.eval(&b.eval(&x)));
        }
    }
}
