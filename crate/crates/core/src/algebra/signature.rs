//! Exact signatures of symmetric rational and Hermitian Gaussian-rational
//! matrices by congruence diagonalization.
//!
//! Signatures are computed entirely over the rationals: symmetric pivoting
//! on nonzero diagonal entries, a 2x2 hyperbolic block (contributing 0)
//! when the remaining diagonal vanishes but an off-diagonal entry does
//! not, and zero rows contribute 0.  Hermitian matrices are realified to
//! doubled symmetric matrices first.

use num::{Signed, Zero};

use super::gauss::GaussRational;
use super::matrix::Mat;
use super::{AlgebraError, Rational};

/// Signature (positive minus negative eigenvalue count) of an exact
/// symmetric rational matrix.
pub fn sym_signature(m: &Mat<Rational>) -> Result<i64, AlgebraError> {
    if !m.is_symmetric() {
        return Err(AlgebraError::NotSymmetric);
    }
    let n = m.nrows();
    let mut a: Vec<Vec<Rational>> = m.rows().to_vec();
    let mut sig = 0i64;
    let mut k = 0;

    let swap_sym = |a: &mut Vec<Vec<Rational>>, p: usize, q: usize| {
        a.swap(p, q);
        for row in a.iter_mut() {
            row.swap(p, q);
        }
    };

    while k < n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                swap_sym(&mut a, k, j);
            } else {
                // trailing diagonal is zero; a nonzero off-diagonal entry
                // yields a hyperbolic pair contributing 0
                let mut found = None;
                'outer: for i in k..n {
                    for j in i + 1..n {
                        if !a[i][j].is_zero() {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                let Some((i, j)) = found else { break }; // trailing block zero
                if i != k {
                    swap_sym(&mut a, k, i);
                }
                if j != k + 1 {
                    swap_sym(&mut a, k + 1, j);
                }
                let b = a[k][k + 1].clone();
                debug_assert!(!b.is_zero());
                // block [[0, b], [b, 0]]: row-eliminate against it; the
                // trailing block becomes the (symmetric) Schur complement
                for r in k + 2..n {
                    let c1 = &a[r][k + 1] / &b;
                    let c2 = &a[r][k] / &b;
                    if c1.is_zero() && c2.is_zero() {
                        continue;
                    }
                    for c in k..n {
                        let adj = &c1 * &a[k][c] + &c2 * &a[k + 1][c];
                        a[r][c] -= adj;
                    }
                }
                k += 2;
                continue;
            }
        }
        let pivot = a[k][k].clone();
        sig += if pivot.is_positive() { 1 } else { -1 };
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = &a[i][k] / &pivot;
            for j in k..n {
                let adj = &factor * &a[k][j];
                a[i][j] -= adj;
            }
        }
        k += 1;
    }
    Ok(sig)
}

/// Real symmetric doubling of a Hermitian matrix: each entry `p + qi`
/// becomes the 2x2 block `[[p, -q], [q, p]]`.
pub fn realify(h: &Mat<GaussRational>) -> Mat<Rational> {
    let n = h.nrows();
    Mat::from_fn(2 * n, 2 * n, |i, j| {
        let e = &h[(i / 2, j / 2)];
        match (i % 2, j % 2) {
            (0, 0) | (1, 1) => e.re.clone(),
            (0, 1) => -e.im.clone(),
            _ => e.im.clone(),
        }
    })
}

fn is_hermitian(h: &Mat<GaussRational>) -> bool {
    h.is_square()
        && (0..h.nrows()).all(|i| (0..=i).all(|j| h[(i, j)] == h[(j, i)].conj()))
}

/// Signature of a Hermitian Gaussian-rational matrix, via the signature of
/// its realification (always even) divided by two.
pub fn herm_signature(h: &Mat<GaussRational>) -> Result<i64, AlgebraError> {
    if !is_hermitian(h) {
        return Err(AlgebraError::NotHermitian);
    }
    let doubled = sym_signature(&realify(h))?;
    if doubled % 2 != 0 {
        return Err(AlgebraError::InternalParity);
    }
    Ok(doubled / 2)
}
