//! Exact, floating-point and symbolic inversion of heptadiagonal matrices.
//!
//! The recurrences in [`inverse`] are generic over any [`Scalar`]: exact
//! rationals, `f32`/`f64`, the wide-exponent [`ExtendedFloat`], or rational
//! functions in one indeterminate. [`symbolic`] uses the last of these to
//! handle zero super-diagonal entries. [`oracle`] is an independent dense
//! reference.
//!
//! ```
//! use hepta::{fixtures, invert, Rational};
//!
//! let inv = invert(&fixtures::h1()).unwrap();
//! assert_eq!(inv.determinant, Rational::from_integer(905413.into()));
//! ```

pub mod band;
pub mod dense;
pub mod error;
pub mod fixtures;
pub mod inverse;
pub mod oracle;
pub mod scalar;
pub mod symbolic;

pub use band::{gen_random, gen_toeplitz_family, random_bands, HeptaBands, PaddedBands, MIN_ORDER};
pub use dense::DenseMatrix;
pub use error::{HeptaError, Result};
pub use inverse::{det, invert, solve, InverseResult, Recurrences};
pub use scalar::{
    count_ops, parse_rational, reset_op_count, scalar_op_count, Counted, ExtendedFloat, Mode, Polynomial, Rational,
    RationalFunction, Scalar,
};
pub use symbolic::{auto_det, auto_invert, det_symbolic, invert_symbolic, lift_to_symbolic};

pub type RationalBands = HeptaBands<Rational>;
pub type FloatBands = HeptaBands<ExtendedFloat>;
pub type F64Bands = HeptaBands<f64>;
pub type SymbolicBands = HeptaBands<RationalFunction>;

pub type RationalMatrix = DenseMatrix<Rational>;
pub type FloatMatrix = DenseMatrix<ExtendedFloat>;

pub type RationalInverse = InverseResult<Rational>;
pub type FloatInverse = InverseResult<ExtendedFloat>;
