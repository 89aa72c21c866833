//! Worked example matrices with their exact inverses, shared by tests and the
//! CLI test suite.

use crate::band::HeptaBands;
use crate::dense::DenseMatrix;
use crate::scalar::Rational;

/// 10x10 example with every `g_i` nonzero.
pub const H1: [[i64; 10]; 10] = [
    [2, 1, 4, -1, 0, 0, 0, 0, 0, 0],
    [5, 1, 1, 2, 2, 0, 0, 0, 0, 0],
    [1, 2, -3, 2, 7, 2, 0, 0, 0, 0],
    [6, 1, 3, 2, 3, -1, 3, 0, 0, 0],
    [0, 1, -1, 2, 2, -3, 4, 1, 0, 0],
    [0, 0, 4, 4, 4, 1, 2, 1, 1, 0],
    [0, 0, 0, -1, 2, -1, 3, -3, 2, 1],
    [0, 0, 0, 0, 3, 1, 2, 1, 11, 3],
    [0, 0, 0, 0, 0, 4, -3, 2, 1, 1],
    [0, 0, 0, 0, 0, 0, -7, 1, 1, 2],
];

/// Common denominator of `H1^{-1}`; also `det(H1)`.
pub const H1_DENOMINATOR: i64 = 905413;

/// `905413 * H1^{-1}`, row-major.
pub const H1_INVERSE_NUMERATORS: [[i64; 10]; 10] = [
    [
        -88555, -29328, -2619, 205297, -82176, -80594, -51473, 16924, -5949, 3325,
    ],
    [
        552363, 877900, -30890, -910556, 447486, -217, 214649, -43768, 188079, -135712,
    ],
    [125378, -53389, -25421, 6935, -28082, 83035, 6848, -8584, -23518, 21211],
    [
        -28648, 605688, -137812, -472222, 170806, 170735, 139095, -44256, 82109, -44218,
    ],
    [
        -88835, -491917, 172515, 410790, -175068, -10659, -121161, 28122, -149517, 93156,
    ],
    [
        19552, 172702, -19216, -147233, -6589, 31638, 106328, -31741, 220819, -115962,
    ],
    [
        -17938, -34896, -46090, 42741, 102273, -14393, 88422, -19873, 141107, -84955,
    ],
    [
        -61611, -501141, 62775, 427692, 9510, -84414, -278373, 51721, 21248, 50981,
    ],
    [
        46355, 156703, 11493, -147953, -78091, 14531, -103927, 118638, -160577, -45705,
    ],
    [
        -55155, 50083, -198449, 9724, 392246, -15434, 500627, -154735, 563539, 152726,
    ],
];

/// 5x5 example with `g_2 = 0`.
pub const H2: [[i64; 5]; 5] = [
    [2, 3, 4, 1, 0],
    [-1, 1, -2, 3, 0],
    [3, 5, 1, -1, 2],
    [4, -1, 3, 2, 6],
    [0, 2, 1, 4, -3],
];

/// Common denominator of `H2^{-1}`; also `det(H2)`.
pub const H2_DENOMINATOR: i64 = 901;

/// `901 * H2^{-1}`, row-major.
pub const H2_INVERSE_NUMERATORS: [[i64; 5]; 5] = [
    [-615, -545, 294, 176, 548],
    [190, 205, 63, -91, -140],
    [392, 91, -183, -36, -194],
    [-7, 111, -45, 65, 100],
    [248, 315, -79, 14, -325],
];

fn dense<const N: usize>(rows: &[[i64; N]; N]) -> DenseMatrix<Rational> {
    let rows: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    DenseMatrix::from_int_rows(&rows).expect("square fixture")
}

fn scaled<const N: usize>(numerators: &[[i64; N]; N], den: i64) -> DenseMatrix<Rational> {
    dense(numerators).map(|v| v / Rational::from_integer(den.into()))
}

pub fn h1_dense() -> DenseMatrix<Rational> {
    dense(&H1)
}

pub fn h1() -> HeptaBands<Rational> {
    HeptaBands::from_dense(&h1_dense()).expect("H1 is heptadiagonal")
}

pub fn h1_inverse() -> DenseMatrix<Rational> {
    scaled(&H1_INVERSE_NUMERATORS, H1_DENOMINATOR)
}

pub fn h2_dense() -> DenseMatrix<Rational> {
    dense(&H2)
}

pub fn h2() -> HeptaBands<Rational> {
    HeptaBands::from_dense(&h2_dense()).expect("H2 is heptadiagonal")
}

pub fn h2_inverse() -> DenseMatrix<Rational> {
    scaled(&H2_INVERSE_NUMERATORS, H2_DENOMINATOR)
}

/// `n x n` identity as bands (all `g_i = 0`).
pub fn identity(n: usize) -> HeptaBands<Rational> {
    HeptaBands::from_dense(&DenseMatrix::identity(n)).expect("identity is heptadiagonal")
}

/// Singular matrix with nonzero `g_1, g_2`: `H2` with `g_2 = 1` and its last
/// row cleared.
pub fn singular_last_row() -> HeptaBands<Rational> {
    let mut m = h2_dense();
    m[(1, 4)] = Rational::from_integer(1.into());
    for j in 0..5 {
        m[(4, j)] = Rational::from_integer(0.into());
    }
    HeptaBands::from_dense(&m).expect("heptadiagonal")
}
