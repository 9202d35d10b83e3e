//! Polynomials in the crossing variable.
//!
//! The local face tables are stated in `x` and contain half-integer data
//! once rewritten in `u = 2x` (the entries `x = u/2` and `2x^2 - 1 =
//! (u^2 - 2)/2`).  Assembly therefore happens in [`XPoly`] (rational
//! coefficients in `x`), and a completed Kashaev matrix entry is converted
//! to [`UPoly`] (integer coefficients in `u`), which checks the `Z[2x]`
//! integrality along the way: the coefficient of `x^k` must be divisible by
//! `2^k`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, One, Signed, Zero};

use super::laurent::LaurentS;
use super::{rat, Rational};

/// Polynomial in `x` with rational coefficients, `coeffs[k]` multiplying `x^k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct XPoly {
    coeffs: Vec<Rational>,
}

impl XPoly {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = XPoly { coeffs };
        p.normalize();
        p
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The table entry `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![rat(0), rat(1)])
    }

    /// The table entry `2x^2 - 1`.
    pub fn two_x_sq_minus_one() -> Self {
        Self::from_coeffs(vec![rat(-1), rat(0), rat(2)])
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(|| rat(0))
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Convert to an integer polynomial in `u = 2x`.  Fails when some
    /// coefficient of `x^k` is not divisible by `2^k`; single local tables
    /// are allowed to fail, assembled Kashaev matrices are not.
    pub fn to_upoly(&self) -> Option<UPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut pow2 = BigInt::one();
        for c in &self.coeffs {
            let scaled = c / Rational::from_integer(pow2.clone());
            if !scaled.is_integer() {
                return None;
            }
            out.push(scaled.to_integer());
            pow2 *= 2;
        }
        Some(UPoly::from_coeffs(out))
    }
}

impl Zero for XPoly {
    fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl Add for XPoly {
    type Output = XPoly;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        XPoly::from_coeffs(coeffs)
    }
}

impl Sub for XPoly {
    type Output = XPoly;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for XPoly {
    type Output = XPoly;
    fn neg(self) -> Self {
        XPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

/// Polynomial in `u = 2x` with integer coefficients, `coeffs[k]` on `u^k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: Vec<BigInt>,
}

impl UPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = UPoly { coeffs };
        while p.coeffs.last().is_some_and(|c| c.is_zero()) {
            p.coeffs.pop();
        }
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: i64) -> Self {
        Self::from_ints(&[c])
    }

    /// The monomial `u`.
    pub fn u() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Evaluate at `u = 2x` for rational `x`.
    pub fn eval_at_x(&self, x: &Rational) -> Rational {
        let u = x * rat(2);
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * u.clone() + Rational::from_integer(c.clone());
        }
        acc
    }

    pub fn as_xpoly(&self) -> XPoly {
        let mut pow2 = BigInt::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(Rational::from_integer(c * &pow2));
            pow2 *= 2;
        }
        XPoly::from_coeffs(coeffs)
    }
}

impl Zero for UPoly {
    fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for UPoly {
    fn one() -> Self {
        UPoly::constant(1)
    }
}

impl Add for UPoly {
    type Output = UPoly;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        UPoly::from_coeffs(coeffs)
    }
}

impl Sub for UPoly {
    type Output = UPoly;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for UPoly {
    type Output = UPoly;
    fn neg(self) -> Self {
        UPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Mul for UPoly {
    type Output = UPoly;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(coeffs)
    }
}

/// Displays in the variable `x`, matching the face-table presentation:
/// the coefficient of `x^k` is `2^k` times the `u^k` coefficient.
impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut pow2 = BigInt::one();
        let mut terms: Vec<(usize, BigInt)> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                terms.push((k, c * &pow2));
            }
            pow2 *= 2;
        }
        for (pos, (k, c)) in terms.iter().enumerate().rev() {
            let lead = pos == terms.len() - 1;
            if !lead {
                write!(f, "{}", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if *k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Substitute `u = t^{1/2} + t^{-1/2}`.  The result is always symmetric
/// under the bar involution `t^{1/2} -> t^{-1/2}`.
pub fn substitute_u(p: &UPoly) -> LaurentS {
    let s_plus_sinv = LaurentS::mono(1, rat(1)) + LaurentS::mono(-1, rat(1));
    let mut acc = LaurentS::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc * s_plus_sinv.clone() + LaurentS::from_rational(Rational::from_integer(c.clone()));
    }
    acc
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::algebra::rat_frac;

    #[test]
    fn table_entries_are_half_integral_alone() {
        assert!(XPoly::x().to_upoly().is_none());
        assert!(XPoly::two_x_sq_minus_one().to_upoly().is_none());
        // but their doubles convert
        let two_x = XPoly::x() + XPoly::x();
        assert_eq!(two_x.to_upoly().unwrap(), UPoly::u());
        let sum = XPoly::two_x_sq_minus_one() + XPoly::two_x_sq_minus_one();
        assert_eq!(sum.to_upoly().unwrap(), UPoly::from_ints(&[-2, 0, 1]));
    }

    #[test]
    fn eval_at_x() {
        // u^2 - 2 evaluated at x: (2x)^2 - 2
        let p = UPoly::from_ints(&[-2, 0, 1]);
        assert_eq!(p.eval_at_x(&rat(1)), rat(2));
        assert_eq!(p.eval_at_x(&rat(0)), rat(-2));
        assert_eq!(p.eval_at_x(&rat_frac(1, 2)), rat(-1));
    }

    #[test]
    fn display_in_x() {
        // u^2 - 2 is 4x^2 - 2
        assert_eq!(UPoly::from_ints(&[-2, 0, 1]).to_string(), "4x^2-2");
        assert_eq!(UPoly::from_ints(&[3, 0, -2]).to_string(), "-8x^2+3");
        assert_eq!(UPoly::u().to_string(), "2x");
        assert_eq!(UPoly::zero().to_string(), "0");
        assert_eq!(UPoly::from_ints(&[0, 2]).to_string(), "4x");
    }

    #[test]
    fn substitute_examples() {
        let s = LaurentS::mono(1, rat(1));
        let sinv = LaurentS::mono(-1, rat(1));
        assert_eq!(substitute_u(&UPoly::u()), s.clone() + sinv.clone());
        // u^2 - 2 -> s^2 + s^-2
        let p = UPoly::from_ints(&[-2, 0, 1]);
        assert_eq!(substitute_u(&p), LaurentS::mono(2, rat(1)) + LaurentS::mono(-2, rat(1)));
        assert_eq!(substitute_u(&UPoly::constant(7)), LaurentS::from_rational(rat(7)));
    }

    proptest! {
        #[test]
        fn substitution_is_bar_symmetric(coeffs in proptest::collection::vec(-6i64..=6, 0..6)) {
            let p = UPoly::from_ints(&coeffs);
            let l = substitute_u(&p);
            prop_assert_eq!(l.bar(), l);
        }
    }
}
