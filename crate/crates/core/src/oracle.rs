//! Dense exact linear algebra over `Q`, independent of the band recurrences.
//!
//! Used as the reference the fast paths are checked against. Both routines
//! work on integer matrices and touch rationals only at the end.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::dense::DenseMatrix;
use crate::error::{HeptaError, Result};
use crate::scalar::Rational;

fn require_square(m: &DenseMatrix<Rational>) -> Result<usize> {
    if m.is_square() {
        Ok(m.rows())
    } else {
        Err(HeptaError::DimensionMismatch {
            expected: m.rows(),
            found: m.cols(),
        })
    }
}

/// Integer matrix `D M` with `D` diagonal, each row scaled by the lcm of its
/// denominators. Returns the rows and the scale factors.
fn clear_denominators(m: &DenseMatrix<Rational>) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    (0..m.rows())
        .map(|i| {
            let lcm = m.row(i).iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            let row = m.row(i).iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
            (row, lcm)
        })
        .unzip()
}

/// Moves a row with a nonzero entry in column `k` (at or below row `k`) into
/// row `k`. Reports whether rows were swapped, or `None` when the column is
/// zero from row `k` down.
fn pivot_into_place(a: &mut [Vec<BigInt>], k: usize) -> Option<bool> {
    if !a[k][k].is_zero() {
        return Some(false);
    }
    let r = (k + 1..a.len()).find(|&r| !a[r][k].is_zero())?;
    a.swap(k, r);
    Some(true)
}

/// Fraction-free Gauss-Jordan elimination on `[D M | I]` over the integers,
/// with row swaps. Every intermediate division is exact; at the end the left
/// block is `det(D M) I` and the right block is the adjugate.
pub fn dense_inverse_exact(m: &DenseMatrix<Rational>) -> Result<DenseMatrix<Rational>> {
    let n = require_square(m)?;
    let (rows, scale) = clear_denominators(m);
    let mut a: Vec<Vec<BigInt>> = rows
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        pivot_into_place(&mut a, k).ok_or(HeptaError::SingularMatrix)?;
        let pivot_row = a[k].clone();
        let pivot = pivot_row[k].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let factor = row[k].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = (&*x * &pivot - &factor * p) / &prev;
            }
        }
        prev = pivot;
    }

    // (D M)^{-1} = adj / det, and M^{-1} = (D M)^{-1} D scales column j by D_j.
    let det = prev;
    let mut inv = DenseMatrix::zeros(n, n);
    for (i, row) in a.into_iter().enumerate() {
        for (j, v) in row.into_iter().skip(n).enumerate() {
            inv[(i, j)] = Rational::new(v * &scale[j], det.clone());
        }
    }
    Ok(inv)
}

/// Determinant by fraction-free (Bareiss) elimination over the integers,
/// after clearing the denominators of each row.
pub fn dense_det_exact(m: &DenseMatrix<Rational>) -> Result<Rational> {
    let n = require_square(m)?;
    if n == 0 {
        return Ok(Rational::one());
    }
    let (mut a, scale) = clear_denominators(m);
    let scale = scale.into_iter().fold(BigInt::one(), |acc, l| acc * l);

    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        match pivot_into_place(&mut a, k) {
            None => return Ok(Rational::zero()),
            Some(true) => sign = -sign,
            Some(false) => {}
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = sign * &a[n - 1][n - 1];
    Ok(Rational::new(det, scale))
}

/// Solves `M x = rhs` exactly.
pub fn dense_solve_exact(m: &DenseMatrix<Rational>, rhs: &[Rational]) -> Result<Vec<Rational>> {
    let n = require_square(m)?;
    if rhs.len() != n {
        return Err(HeptaError::DimensionMismatch {
            expected: n,
            found: rhs.len(),
        });
    }
    dense_inverse_exact(m)?.mul_vec(rhs)
}

/// `max |M - N|` over all entries, as an exact rational.
pub fn max_abs_difference(m: &DenseMatrix<Rational>, other: &DenseMatrix<Rational>) -> Rational {
    m.to_rows()
        .into_iter()
        .flatten()
        .zip(other.to_rows().into_iter().flatten())
        .map(|(x, y)| (x - y).abs())
        .fold(Rational::zero(), |acc, d| if d > acc { d } else { acc })
}
