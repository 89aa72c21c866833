//! Linear-time inversion of a heptadiagonal matrix.
//!
//! Three seed sequences `A, B, C` solve the seven-term row recurrence from
//! the top with unit starting triples. Mixing their terminal values through
//! 3x3 determinants gives sequences `X, Y, Z` that satisfy the end conditions
//! as well; scaled, these are the last three columns of `H^{-1}`. The other
//! `n - 3` columns follow from `H^{-1} H = I` by a backward recurrence over
//! columns.
//!
//! Sequence indices below are 1-based; `seq[k - 1]` holds term `k`.

use crate::band::{HeptaBands, PaddedBands};
use crate::dense::DenseMatrix;
use crate::error::{HeptaError, Result};
use crate::scalar::{Mode, Scalar};

/// Seed sequences, each of length `n + 3`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeedSequences<T> {
    /// Starts `0, 0, 1`.
    pub a: Vec<T>,
    /// Starts `0, 1, 0`.
    pub b: Vec<T>,
    /// Starts `1, 0, 0`.
    pub c_seq: Vec<T>,
}

impl<T> SeedSequences<T> {
    pub fn n(&self) -> usize {
        self.a.len() - 3
    }

    /// Column `k` of the 3 x (n+3) array with rows `A, B, C`.
    fn column(&self, k: usize) -> [&T; 3] {
        [&self.a[k - 1], &self.b[k - 1], &self.c_seq[k - 1]]
    }
}

/// Determinant sequences: `X` has `n + 1` terms, `Y` has `n + 2`, `Z` has
/// `n + 3`.
///
/// With `v_i = (A_i, B_i, C_i)`, columns are ordered terminal-first:
///
/// ```text
/// X_i = det[v_{n+3}, v_{n+2}, v_i]
/// Y_i = det[v_{n+3}, v_{n+1}, v_i]
/// Z_i = det[v_{n+2}, v_{n+1}, v_i]
/// ```
///
/// so that `X_{n+1} = -Y_{n+2} = Z_{n+3}`.
#[derive(Clone, Debug, PartialEq)]
pub struct DetSequences<T> {
    pub x: Vec<T>,
    pub y: Vec<T>,
    pub z: Vec<T>,
}

impl<T: Scalar> DetSequences<T> {
    pub fn n(&self) -> usize {
        self.x.len() - 1
    }

    /// `X_{n+1}`; zero exactly when `H` is singular.
    pub fn pivot(&self) -> &T {
        &self.x[self.n()]
    }
}

/// Output of an inversion.
#[derive(Clone, Debug, PartialEq)]
pub struct InverseResult<T> {
    /// `S_ij`, row-major; column `k` is the k-th column of `H^{-1}`.
    pub entries: DenseMatrix<T>,
    pub determinant: T,
    pub mode: Mode,
    /// 1-based indices `i` whose `g_i = 0` was replaced by `t`.
    pub substituted: Vec<usize>,
}

/// The linear-cost part of the pipeline, kept for inspection.
#[derive(Clone, Debug)]
pub struct Recurrences<T> {
    pub padded: PaddedBands<T>,
    pub seeds: SeedSequences<T>,
    pub dets: DetSequences<T>,
}

fn ensure_nonzero<T: Scalar>(g: &T, i: usize) -> Result<()> {
    if g.is_zero() {
        Err(HeptaError::ZeroSuperDiagonal(i))
    } else {
        Ok(())
    }
}

/// Appends terms `4 ..= n+3` by solving row `i` of `H s = 0` for `s_{i+3}`.
fn extend_seed<T: Scalar>(p: &PaddedBands<T>, seq: &mut Vec<T>) -> Result<()> {
    let n = p.n();
    for i in 1..=n {
        let row = p.row(i);
        // row[0..6] multiplies s_{i-3} ..= s_{i+2}; terms before s_1 do not exist
        let acc = T::sum_of_products(row[..6].iter().enumerate().filter_map(|(offset, coef)| {
            (i + offset)
                .checked_sub(3)
                .filter(|&k| k >= 1)
                .map(|k| (*coef, &seq[k - 1]))
        }));
        let g = row[6];
        ensure_nonzero(g, i)?;
        let next = (-acc).checked_div(g.clone())?;
        seq.push(next);
    }
    Ok(())
}

pub fn seed_sequences<T: Scalar>(p: &PaddedBands<T>) -> Result<SeedSequences<T>> {
    let (z, o) = (T::zero(), T::one());
    let mut a = vec![z.clone(), z.clone(), o.clone()];
    let mut b = vec![z.clone(), o.clone(), z.clone()];
    let mut c_seq = vec![o, z.clone(), z];
    for seq in [&mut a, &mut b, &mut c_seq] {
        seq.reserve(p.n());
        extend_seed(p, seq)?;
    }
    Ok(SeedSequences { a, b, c_seq })
}

fn cross<T: Scalar>(u: [&T; 3], w: [&T; 3]) -> [T; 3] {
    let m = |x: &T, y: &T| x.clone() * y.clone();
    [
        m(u[1], w[2]) - m(u[2], w[1]),
        m(u[2], w[0]) - m(u[0], w[2]),
        m(u[0], w[1]) - m(u[1], w[0]),
    ]
}

fn dot<T: Scalar>(v: [&T; 3], w: &[T; 3]) -> T {
    v[0].clone() * w[0].clone() + v[1].clone() * w[1].clone() + v[2].clone() * w[2].clone()
}

pub fn det_sequences<T: Scalar>(s: &SeedSequences<T>) -> DetSequences<T> {
    let n = s.n();
    let (v1, v2, v3) = (s.column(n + 1), s.column(n + 2), s.column(n + 3));
    // det[u, w, v] = v . (u x w)
    let kx = cross(v3, v2);
    let ky = cross(v3, v1);
    let kz = cross(v2, v1);
    let seq = |len: usize, k: &[T; 3]| (1..=len).map(|i| dot(s.column(i), k)).collect();
    DetSequences {
        x: seq(n + 1, &kx),
        y: seq(n + 2, &ky),
        z: seq(n + 3, &kz),
    }
}

/// Columns `n-2, n-1, n` of `H^{-1}`, in that order:
///
/// ```text
/// C_{n-2} = -X / X_{n+1},  C_{n-1} = -Y / Y_{n+2},  C_n = -Z / Z_{n+3}
/// ```
///
/// The three terminal values coincide up to sign, so every column is divided
/// by the one checked pivot `X_{n+1}`.
pub fn last_three_columns<T: Scalar>(ds: &DetSequences<T>) -> Result<[Vec<T>; 3]> {
    let pivot = ds.pivot();
    if pivot.is_zero() {
        return Err(HeptaError::SingularMatrix);
    }
    let n = ds.n();
    let column = |seq: &[T], negate: bool| -> Result<Vec<T>> {
        seq[..n]
            .iter()
            .map(|v| {
                let v = if negate { -v.clone() } else { v.clone() };
                v.checked_div(pivot.clone())
            })
            .collect()
    };
    Ok([column(&ds.x, true)?, column(&ds.y, false)?, column(&ds.z, true)?])
}

/// Fills columns `n-3` down to `1` from
///
/// ```text
/// g_j C_j = E_{j+3} - f_{j+1} C_{j+1} - e_{j+2} C_{j+2} - d_{j+3} C_{j+3}
///                   - c_{j+4} C_{j+4} - b_{j+5} C_{j+5} - a_{j+6} C_{j+6}
/// ```
///
/// Coefficients past the last row are zero, so terms with a column index
/// above `n` are dropped. This one loop covers `j = n-3, n-4, n-5` as well as
/// the general case.
pub fn back_substitute<T: Scalar>(p: &PaddedBands<T>, last: [Vec<T>; 3]) -> Result<DenseMatrix<T>> {
    let n = p.n();
    let mut s = DenseMatrix::zeros(n, n);
    for (offset, col) in last.into_iter().enumerate() {
        if col.len() != n {
            return Err(HeptaError::DimensionMismatch {
                expected: n,
                found: col.len(),
            });
        }
        let j = n - 3 + offset;
        for (i, v) in col.into_iter().enumerate() {
            s[(i, j)] = v;
        }
    }
    for j in (1..=n - 3).rev() {
        let g = p.g(j);
        ensure_nonzero(g, j)?;
        let terms: Vec<(&T, usize)> = [
            (p.f(j + 1), j + 1),
            (p.e(j + 2), j + 2),
            (p.d(j + 3), j + 3),
            (p.c(j + 4), j + 4),
            (p.b(j + 5), j + 5),
            (p.a(j + 6), j + 6),
        ]
        .into_iter()
        .filter(|&(_, k)| k <= n)
        .collect();
        for i in 1..=n {
            let acc = T::sum_of_products(terms.iter().map(|&(coef, k)| (coef, &s[(i - 1, k - 1)])));
            let rhs = if i == j + 3 { T::one() - acc } else { -acc };
            s[(i - 1, j - 1)] = rhs.checked_div(g.clone())?;
        }
    }
    Ok(s)
}

/// `det(H) = (-1)^n (g_1 ... g_{n-3}) X_{n+1}` for the column ordering of
/// [`DetSequences`]. Zero when `X_{n+1}` is zero.
pub fn determinant<T: Scalar>(p: &PaddedBands<T>, ds: &DetSequences<T>) -> T {
    let n = p.n();
    let pivot = ds.pivot().clone();
    if pivot.is_zero() {
        return pivot;
    }
    let product = (1..=n - 3).fold(T::one(), |acc, i| acc * p.g(i).clone());
    let det = product * pivot;
    if n.is_multiple_of(2) {
        det
    } else {
        -det
    }
}

/// Pads the bands and runs the seed and determinant recurrences.
pub fn recurrences<T: Scalar>(h: &HeptaBands<T>) -> Result<Recurrences<T>> {
    Recurrences::from_padded(h.pad())
}

impl<T: Scalar> Recurrences<T> {
    pub fn from_padded(padded: PaddedBands<T>) -> Result<Self> {
        let seeds = seed_sequences(&padded)?;
        let dets = det_sequences(&seeds);
        Ok(Recurrences { padded, seeds, dets })
    }

    pub fn determinant(&self) -> T {
        determinant(&self.padded, &self.dets)
    }

    pub fn into_inverse(self) -> Result<InverseResult<T>> {
        let last = last_three_columns(&self.dets)?;
        let determinant = determinant(&self.padded, &self.dets);
        let entries = back_substitute(&self.padded, last)?;
        Ok(InverseResult {
            entries,
            determinant,
            mode: T::MODE,
            substituted: Vec::new(),
        })
    }
}

/// Full inverse in the scalar kernel `T`.
///
/// Fails with [`HeptaError::ZeroSuperDiagonal`] when some `g_i` is zero; the
/// symbolic engine handles that case.
pub fn invert<T: Scalar>(h: &HeptaBands<T>) -> Result<InverseResult<T>> {
    recurrences(h)?.into_inverse()
}

/// Determinant alone, in linear time.
pub fn det<T: Scalar>(h: &HeptaBands<T>) -> Result<T> {
    Ok(recurrences(h)?.determinant())
}

/// `H^{-1} rhs`.
pub fn solve<T: Scalar>(h: &HeptaBands<T>, rhs: &[T]) -> Result<Vec<T>> {
    if rhs.len() != h.n() {
        return Err(HeptaError::DimensionMismatch {
            expected: h.n(),
            found: rhs.len(),
        });
    }
    invert(h)?.entries.mul_vec(rhs)
}

fn unit_combination<T: Scalar>(n: usize, tail: [(usize, T); 3]) -> Vec<T> {
    let mut v = vec![T::zero(); n];
    for (row, value) in tail {
        v[row - 1] = value;
    }
    v
}

/// Checks `H A = -A_{n+1} E_{n-2} - A_{n+2} E_{n-1} - A_{n+3} E_n` and the
/// analogues for `B` and `C` by exact comparison (meaningful in exact kernels).
pub fn seed_identities_hold<T: Scalar>(h: &HeptaBands<T>, s: &SeedSequences<T>) -> bool {
    let n = h.n();
    [&s.a, &s.b, &s.c_seq].into_iter().all(|seq| {
        let expected = unit_combination(
            n,
            [
                (n - 2, -seq[n].clone()),
                (n - 1, -seq[n + 1].clone()),
                (n, -seq[n + 2].clone()),
            ],
        );
        h.matvec(&seq[..n]).is_ok_and(|lhs| lhs == expected)
    })
}

/// Checks `H X = -X_{n+1} E_{n-2}`, `H Y = -Y_{n+2} E_{n-1}` and
/// `H Z = -Z_{n+3} E_n` exactly.
pub fn det_identities_hold<T: Scalar>(h: &HeptaBands<T>, ds: &DetSequences<T>) -> bool {
    let n = h.n();
    let zero = || T::zero();
    [
        (
            &ds.x,
            unit_combination(n, [(n - 2, -ds.x[n].clone()), (n - 1, zero()), (n, zero())]),
        ),
        (
            &ds.y,
            unit_combination(n, [(n - 2, zero()), (n - 1, -ds.y[n + 1].clone()), (n, zero())]),
        ),
        (
            &ds.z,
            unit_combination(n, [(n - 2, zero()), (n - 1, zero()), (n, -ds.z[n + 2].clone())]),
        ),
    ]
    .into_iter()
    .all(|(seq, expected)| h.matvec(&seq[..n]).is_ok_and(|lhs| lhs == expected))
}

/// `X_{n+1} = -Y_{n+2} = Z_{n+3}`.
pub fn terminal_values_agree<T: Scalar>(ds: &DetSequences<T>) -> bool {
    let n = ds.n();
    ds.x[n] == -ds.y[n + 1].clone() && ds.x[n] == ds.z[n + 2]
}
