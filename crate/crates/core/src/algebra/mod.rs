//! Exact arithmetic: rationals, Gaussian rationals, integer polynomials in
//! `u = 2x`, Laurent polynomials in `t^{1/2}`, and exact linear algebra
//! (signatures, determinants, ranks) over those rings.

mod circle;
mod gauss;
mod laurent;
mod matrix;
mod poly;
mod signature;

pub use circle::{circle_param, CirclePoint};
pub use gauss::GaussRational;
pub use laurent::{det_laurent, poly_sqrt, rank_laurent, LaurentS, SqrtResult};
pub use matrix::Mat;
pub use poly::{substitute_u, UPoly, XPoly};
pub use signature::{herm_signature, realify, sym_signature};

use num::BigInt;
use thiserror::Error;

/// Arbitrary precision rational number in canonical reduced form.
pub type Rational = num::BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("realified signature has odd parity")]
    InternalParity,
    #[error("matrix is not square")]
    NotSquare,
    #[error("no exact Laurent square root exists")]
    NotASquare,
    #[error("point does not lie on the unit circle")]
    NotOnCircle,
    #[error("malformed rational literal: {0}")]
    BadRational(String),
}

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `p/q`; panics on `q = 0`.
pub fn rat_frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parse `p`, `p/q` or `-p/q` into a rational.
pub fn parse_rational(text: &str) -> Result<Rational, AlgebraError> {
    let s = text.trim();
    let bad = || AlgebraError::BadRational(text.to_string());
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p = p.trim().parse::<BigInt>().map_err(|_| bad())?;
            let q = q.trim().parse::<BigInt>().map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("-2/4").unwrap(), rat_frac(-1, 2));
        assert_eq!(parse_rational(" 7 / 21 ").unwrap(), rat_frac(1, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
