//! Laurent polynomials in `s = t^{1/2}` with rational coefficients, the
//! bar involution `s -> s^{-1}`, exact determinants and ranks of matrices
//! over them, and exact Laurent square roots.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::matrix::Mat;
use super::{rat, AlgebraError, Rational};

/// Laurent polynomial in `s = t^{1/2}`; the map stores only nonzero
/// coefficients keyed by the exponent of `s`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentS {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentS {
    pub fn mono(exp: i64, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentS { terms }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::mono(0, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// The involution `s -> s^{-1}` (`t -> t^{-1}`).
    pub fn bar(&self) -> Self {
        LaurentS { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn is_bar_symmetric(&self) -> bool {
        self.bar() == *self
    }

    /// Multiply by `s^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentS { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Evaluate at a nonzero rational `s = q`.
    pub fn eval(&self, q: &Rational) -> Rational {
        assert!(!q.is_zero(), "Laurent evaluation at s = 0");
        let qinv = q.recip();
        let mut acc = rat(0);
        for (e, c) in &self.terms {
            let p = if *e >= 0 { num::pow::pow(q.clone(), *e as usize) } else { num::pow::pow(qinv.clone(), (-e) as usize) };
            acc += c * p;
        }
        acc
    }

    fn insert_add(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(|| rat(0));
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Exact division; returns `None` when the divisor does not divide
    /// evenly (or is zero).
    pub fn div_exact(&self, rhs: &LaurentS) -> Option<LaurentS> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentS::zero());
        }
        let mut rem = self.clone();
        let mut quot = LaurentS::zero();
        let d_max = rhs.max_exp().unwrap();
        let d_lead = rhs.coeff(d_max);
        // Cancel leading terms; exponents strictly decrease so this halts.
        while !rem.is_zero() {
            let r_max = rem.max_exp().unwrap();
            let span_r = r_max - rem.min_exp().unwrap();
            let span_d = rhs.max_exp().unwrap() - rhs.min_exp().unwrap();
            if span_r < span_d {
                return None;
            }
            let t = LaurentS::mono(r_max - d_max, rem.coeff(r_max) / d_lead.clone());
            rem = rem - t.clone() * rhs.clone();
            quot = quot + t;
        }
        Some(quot)
    }
}

impl Zero for LaurentS {
    fn zero() -> Self {
        LaurentS { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentS {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl Add for LaurentS {
    type Output = LaurentS;
    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.insert_add(e, c);
        }
        self
    }
}

impl Sub for LaurentS {
    type Output = LaurentS;
    fn sub(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.insert_add(e, -c);
        }
        self
    }
}

impl Neg for LaurentS {
    type Output = LaurentS;
    fn neg(self) -> Self {
        LaurentS { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Mul for LaurentS {
    type Output = LaurentS;
    fn mul(self, rhs: Self) -> Self {
        let mut out = LaurentS::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.insert_add(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

/// Renders in the variable `t`, halving the stored exponents of `s`;
/// half-integral exponents print as `t^1/2`, `t^-3/2`, ...
impl fmt::Display for LaurentS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<(i64, Rational)> =
            self.terms.iter().rev().map(|(e, c)| (*e, c.clone())).collect();
        for (pos, (e, c)) in terms.iter().enumerate() {
            if pos > 0 {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            let power: String = match e {
                0 => String::new(),
                2 => "t".to_string(),
                e if e % 2 == 0 => format!("t^{}", e / 2),
                e => format!("t^{e}/2"),
            };
            if power.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{power}")?;
            } else {
                write!(f, "{mag}{power}")?;
            }
        }
        Ok(())
    }
}

/// Determinant over the Laurent ring by fraction-free (Bareiss)
/// elimination.  Rows are first shifted to clear negative exponents, and
/// the accumulated power of `s` is divided back out at the end.
pub fn det_laurent(m: &Mat<LaurentS>) -> LaurentS {
    assert_eq!(m.nrows(), m.ncols(), "determinant of a non-square matrix");
    let n = m.nrows();
    if n == 0 {
        return LaurentS::one();
    }
    let mut shift = 0i64;
    let mut a: Vec<Vec<LaurentS>> = (0..n)
        .map(|i| {
            let row_min = (0..n).filter_map(|j| m[(i, j)].min_exp()).min();
            let k = row_min.unwrap_or(0).min(0);
            shift += k;
            (0..n).map(|j| m[(i, j)].shift(-k)).collect()
        })
        .collect();

    let mut sign = false;
    let mut prev = LaurentS::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return LaurentS::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].clone() * a[i][j].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num.div_exact(&prev).expect("Bareiss division must be exact");
            }
            a[i][k] = LaurentS::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].shift(shift);
    if sign {
        -det
    } else {
        det
    }
}

/// Rank over the fraction field `Q(t^{1/2})` by fraction-free elimination
/// with full pivoting.
pub fn rank_laurent(m: &Mat<LaurentS>) -> usize {
    let (nr, nc) = (m.nrows(), m.ncols());
    let mut a: Vec<Vec<LaurentS>> = (0..nr)
        .map(|i| {
            let row_min = (0..nc).filter_map(|j| m[(i, j)].min_exp()).min().unwrap_or(0).min(0);
            (0..nc).map(|j| m[(i, j)].shift(-row_min)).collect()
        })
        .collect();

    let mut prev = LaurentS::one();
    let mut rank = 0;
    let mut row = 0;
    let mut cols: Vec<usize> = (0..nc).collect();
    while row < nr && rank < cols.len() {
        // find any nonzero pivot in the remaining block
        let pivot = (row..nr)
            .flat_map(|i| (rank..cols.len()).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][cols[j]].is_zero());
        let Some((pi, pj)) = pivot else { break };
        a.swap(row, pi);
        cols.swap(rank, pj);
        let pc = cols[rank];
        for i in row + 1..nr {
            for j in rank + 1..cols.len() {
                let c = cols[j];
                let num = a[row][pc].clone() * a[i][c].clone() - a[i][pc].clone() * a[row][c].clone();
                a[i][c] = num.div_exact(&prev).expect("Bareiss division must be exact");
            }
            a[i][pc] = LaurentS::zero();
        }
        prev = a[row][pc].clone();
        rank += 1;
        row += 1;
    }
    rank
}

/// Result of an exact Laurent square root: `value^2` equals the input, or
/// its negation when `negated` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtResult {
    pub value: LaurentS,
    pub negated: bool,
}

/// Exact square root in the Laurent ring, up to global sign.  Returns the
/// root of `p` or of `-p` (flagged), via coefficient recursion from the
/// lowest term.
pub fn poly_sqrt(p: &LaurentS) -> Result<SqrtResult, AlgebraError> {
    if p.is_zero() {
        return Ok(SqrtResult { value: LaurentS::zero(), negated: false });
    }
    let lo = p.min_exp().unwrap();
    let hi = p.max_exp().unwrap();
    if lo.rem_euclid(2) != 0 || hi.rem_euclid(2) != 0 {
        return Err(AlgebraError::NotASquare);
    }
    let (target, negated) = if p.coeff(lo).is_negative() { (-p.clone(), true) } else { (p.clone(), false) };

    let c_lo = target.coeff(lo);
    // lowest coefficient must be a rational square
    let num = c_lo.numer().sqrt();
    let den = c_lo.denom().sqrt();
    let root_lo = Rational::new(num.clone(), den.clone());
    if &root_lo * &root_lo != c_lo {
        return Err(AlgebraError::NotASquare);
    }

    let m = lo / 2;
    let h = hi / 2;
    let mut q = LaurentS::mono(m, root_lo.clone());
    let two_lead = rat(2) * root_lo;
    for e in m + 1..=h {
        // coefficient of s^{lo + (e - m)} in q^2 determines q_e
        let want = target.coeff(lo + (e - m));
        let mut partial = rat(0);
        for k in m + 1..e {
            partial += q.coeff(k) * q.coeff(m + (e - k) - 0);
        }
        let qe = (want - partial) / two_lead.clone();
        if !qe.is_zero() {
            q = q + LaurentS::mono(e, qe);
        }
    }
    if q.clone() * q.clone() != target {
        return Err(AlgebraError::NotASquare);
    }
    Ok(SqrtResult { value: q, negated })
}
