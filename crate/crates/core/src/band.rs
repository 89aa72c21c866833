//! Seven-diagonal storage.
//!
//! Row `i` of an `n x n` heptadiagonal matrix reads
//!
//! ```text
//! a_i  b_i  c_i  [d_i]  e_i  f_i  g_i
//! ```
//!
//! at columns `i-3 ..= i+3`. Bands are stored at their true lengths with the
//! first stored element being `a_4, b_3, c_2, d_1, e_1, f_1, g_1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dense::DenseMatrix;
use crate::error::{HeptaError, Result};
use crate::scalar::Scalar;

/// Smallest order for which the recurrences are defined.
pub const MIN_ORDER: usize = 5;

/// Entry range used by [`gen_random`].
pub const RANDOM_RANGE: std::ops::RangeInclusive<i64> = -9..=9;

/// The seven diagonals of a heptadiagonal matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct HeptaBands<T> {
    n: usize,
    a: Vec<T>,
    b: Vec<T>,
    c: Vec<T>,
    d: Vec<T>,
    e: Vec<T>,
    f: Vec<T>,
    g: Vec<T>,
}

/// Expected stored length of each band, in `a..g` order. Bands that do not
/// fit in a small matrix have length zero.
pub fn band_lengths(n: usize) -> [usize; 7] {
    let short = |k: usize| n.saturating_sub(k);
    [short(3), short(2), short(1), n, short(1), short(2), short(3)]
}

impl<T: Scalar> HeptaBands<T> {
    #[allow(clippy::too_many_arguments)]
    pub fn new(n: usize, a: Vec<T>, b: Vec<T>, c: Vec<T>, d: Vec<T>, e: Vec<T>, f: Vec<T>, g: Vec<T>) -> Result<Self> {
        if n < MIN_ORDER {
            return Err(HeptaError::InvalidOrder(n));
        }
        for ((name, band), expected) in ['a', 'b', 'c', 'd', 'e', 'f', 'g']
            .into_iter()
            .zip([&a, &b, &c, &d, &e, &f, &g])
            .zip(band_lengths(n))
        {
            if band.len() != expected {
                return Err(HeptaError::BandLength {
                    band: name,
                    expected,
                    found: band.len(),
                });
            }
        }
        Ok(HeptaBands { n, a, b, c, d, e, f, g })
    }

    /// Reads the bands of a square matrix, rejecting nonzeros outside them.
    pub fn from_dense(m: &DenseMatrix<T>) -> Result<Self> {
        if !m.is_square() {
            return Err(HeptaError::DimensionMismatch {
                expected: m.rows(),
                found: m.cols(),
            });
        }
        let n = m.rows();
        if n < MIN_ORDER {
            return Err(HeptaError::InvalidOrder(n));
        }
        for i in 0..n {
            for j in 0..n {
                if i.abs_diff(j) > 3 && !m[(i, j)].is_zero() {
                    return Err(HeptaError::NotHeptadiagonal { row: i + 1, col: j + 1 });
                }
            }
        }
        // offset = column - row
        let diag = |offset: isize| -> Vec<T> {
            (0..n)
                .filter_map(|i| {
                    let j = i as isize + offset;
                    (0..n as isize).contains(&j).then(|| m[(i, j as usize)].clone())
                })
                .collect()
        };
        Self::new(n, diag(-3), diag(-2), diag(-1), diag(0), diag(1), diag(2), diag(3))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &[T] {
        &self.a
    }

    pub fn b(&self) -> &[T] {
        &self.b
    }

    pub fn c(&self) -> &[T] {
        &self.c
    }

    pub fn d(&self) -> &[T] {
        &self.d
    }

    pub fn e(&self) -> &[T] {
        &self.e
    }

    pub fn f(&self) -> &[T] {
        &self.f
    }

    pub fn g(&self) -> &[T] {
        &self.g
    }

    /// All seven bands in `a..g` order.
    pub fn bands(&self) -> [&[T]; 7] {
        [&self.a, &self.b, &self.c, &self.d, &self.e, &self.f, &self.g]
    }

    /// 1-based indices `i` with `g_i = 0`.
    pub fn zero_super_diagonals(&self) -> Vec<usize> {
        self.g
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_zero())
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// Entry `(row, col)`, 0-based, zero outside the bands.
    pub fn entry(&self, row: usize, col: usize) -> T {
        let (band, idx) = match col as isize - row as isize {
            -3 => (&self.a, col),
            -2 => (&self.b, col),
            -1 => (&self.c, col),
            0 => (&self.d, row),
            1 => (&self.e, row),
            2 => (&self.f, row),
            3 => (&self.g, row),
            _ => return T::zero(),
        };
        band[idx].clone()
    }

    pub fn to_dense(&self) -> DenseMatrix<T> {
        let mut m = DenseMatrix::zeros(self.n, self.n);
        for i in 0..self.n {
            for j in i.saturating_sub(3)..(i + 4).min(self.n) {
                m[(i, j)] = self.entry(i, j);
            }
        }
        m
    }

    /// `H v` touching only the seven bands.
    pub fn matvec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.n {
            return Err(HeptaError::DimensionMismatch {
                expected: self.n,
                found: v.len(),
            });
        }
        Ok((0..self.n)
            .map(|i| {
                (i.saturating_sub(3)..(i + 4).min(self.n))
                    .fold(T::zero(), |acc, j| acc + self.entry(i, j) * v[j].clone())
            })
            .collect())
    }

    pub fn map<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> HeptaBands<U> {
        let mut conv = |band: &[T]| band.iter().map(&mut f).collect::<Vec<U>>();
        HeptaBands {
            n: self.n,
            a: conv(&self.a),
            b: conv(&self.b),
            c: conv(&self.c),
            d: conv(&self.d),
            e: conv(&self.e),
            f: conv(&self.f),
            g: conv(&self.g),
        }
    }

    /// Same matrix with `g_i` (1-based) replaced.
    pub fn with_g(mut self, i: usize, value: T) -> Self {
        self.g[i - 1] = value;
        self
    }

    /// Extends the bands with `g_{n-2} = g_{n-1} = g_n = 1` and
    /// `f_{n-1} = f_n = e_n = 0` so every row carries the full seven terms.
    pub fn pad(&self) -> PaddedBands<T> {
        let mut g = self.g.clone();
        g.extend(std::iter::repeat_n(T::one(), 3));
        let mut f = self.f.clone();
        f.extend(std::iter::repeat_n(T::zero(), 2));
        let mut e = self.e.clone();
        e.push(T::zero());
        PaddedBands {
            source: self.clone(),
            e,
            f,
            g,
            zero: T::zero(),
        }
    }
}

/// Bands after the end-of-matrix extension, with 1-based accessors that
/// return zero outside each band's index range.
#[derive(Clone, Debug, PartialEq)]
pub struct PaddedBands<T> {
    source: HeptaBands<T>,
    e: Vec<T>,
    f: Vec<T>,
    g: Vec<T>,
    zero: T,
}

impl<T: Scalar> PaddedBands<T> {
    pub fn n(&self) -> usize {
        self.source.n
    }

    pub fn source(&self) -> &HeptaBands<T> {
        &self.source
    }

    /// `g_1 ..= g_n`, the last three being the padded ones.
    pub fn g_padded(&self) -> &[T] {
        &self.g
    }

    pub fn f_padded(&self) -> &[T] {
        &self.f
    }

    pub fn e_padded(&self) -> &[T] {
        &self.e
    }

    fn at<'s>(&'s self, band: &'s [T], first: usize, i: usize) -> &'s T {
        if i >= first && i - first < band.len() {
            &band[i - first]
        } else {
            &self.zero
        }
    }

    pub fn a(&self, i: usize) -> &T {
        self.at(&self.source.a, 4, i)
    }

    pub fn b(&self, i: usize) -> &T {
        self.at(&self.source.b, 3, i)
    }

    pub fn c(&self, i: usize) -> &T {
        self.at(&self.source.c, 2, i)
    }

    pub fn d(&self, i: usize) -> &T {
        self.at(&self.source.d, 1, i)
    }

    pub fn e(&self, i: usize) -> &T {
        self.at(&self.e, 1, i)
    }

    pub fn f(&self, i: usize) -> &T {
        self.at(&self.f, 1, i)
    }

    pub fn g(&self, i: usize) -> &T {
        self.at(&self.g, 1, i)
    }

    /// Row `i` coefficients `[a_i, b_i, c_i, d_i, e_i, f_i, g_i]`.
    pub fn row(&self, i: usize) -> [&T; 7] {
        [
            self.a(i),
            self.b(i),
            self.c(i),
            self.d(i),
            self.e(i),
            self.f(i),
            self.g(i),
        ]
    }
}

/// Constant-band test family: `a=2, b=1, c=3, d=-2, e=-1, f=2, g=1`.
pub fn gen_toeplitz_family<T: Scalar>(n: usize) -> Result<HeptaBands<T>> {
    if n < MIN_ORDER {
        return Err(HeptaError::InvalidOrder(n));
    }
    let fill = |v: i64, len: usize| vec![T::from_integer(v); len];
    let [la, lb, lc, ld, le, lf, lg] = band_lengths(n);
    HeptaBands::new(
        n,
        fill(2, la),
        fill(1, lb),
        fill(3, lc),
        fill(-2, ld),
        fill(-1, le),
        fill(2, lf),
        fill(1, lg),
    )
}

/// Integer bands drawn uniformly from [`RANDOM_RANGE`].
pub fn random_bands<T: Scalar, R: Rng>(n: usize, rng: &mut R) -> Result<HeptaBands<T>> {
    if n < MIN_ORDER {
        return Err(HeptaError::InvalidOrder(n));
    }
    let mut draw = |len: usize| -> Vec<T> { (0..len).map(|_| T::from_integer(rng.gen_range(RANDOM_RANGE))).collect() };
    let [la, lb, lc, ld, le, lf, lg] = band_lengths(n);
    let (a, b, c, d, e, f, g) = (draw(la), draw(lb), draw(lc), draw(ld), draw(le), draw(lf), draw(lg));
    HeptaBands::new(n, a, b, c, d, e, f, g)
}

/// Deterministic random bands for a given seed.
pub fn gen_random<T: Scalar>(n: usize, seed: u64) -> Result<HeptaBands<T>> {
    random_bands(n, &mut ChaCha8Rng::seed_from_u64(seed))
}
