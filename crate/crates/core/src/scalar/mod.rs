//! Scalar kernels.
//!
//! Every algorithm in this crate is written once against [`Scalar`] and then
//! instantiated for exact rationals, plain IEEE floats, extended-exponent
//! floats and rational functions in a single indeterminate `t`.

mod counted;
mod extended_float;
mod polynomial;
mod rational;
mod rational_function;

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{HeptaError, Result};

pub use counted::{count_ops, reset_op_count, scalar_op_count, Counted};
pub use extended_float::ExtendedFloat;
pub use polynomial::Polynomial;
pub use rational::{parse_rational, Rational};
pub use rational_function::RationalFunction;

/// Which arithmetic produced an inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Exact rational arithmetic, no substitution needed.
    NumericExact,
    /// Rounded floating point.
    Float,
    /// Rational functions in `t`, evaluated at `t = 0` afterwards.
    Symbolic,
    /// Dense Gauss-Jordan fallback (orders below 5).
    Dense,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::NumericExact => "numeric-exact",
            Mode::Float => "float",
            Mode::Symbolic => "symbolic",
            Mode::Dense => "dense",
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Field contract shared by all kernels.
///
/// The operator impls may panic on division by zero (as `BigRational` does);
/// generic code must go through [`Scalar::checked_div`] instead.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Tag attached to inverses computed in this kernel.
    const MODE: Mode;

    fn from_integer(value: i64) -> Self;

    /// `x_1 y_1 + x_2 y_2 + ...`, or zero for no terms.
    fn sum_of_products<'a>(terms: impl IntoIterator<Item = (&'a Self, &'a Self)>) -> Self
    where
        Self: 'a,
    {
        terms
            .into_iter()
            .map(|(x, y)| x.clone() * y.clone())
            .reduce(|acc, term| acc + term)
            .unwrap_or_else(Self::zero)
    }

    fn checked_div(self, rhs: Self) -> Result<Self> {
        if rhs.is_zero() {
            Err(HeptaError::DivisionByZero)
        } else {
            Ok(self / rhs)
        }
    }
}

macro_rules! impl_scalar_float {
    ($($t:ty),*) => {
        $(
            impl Scalar for $t {
                const MODE: Mode = Mode::Float;

                fn from_integer(value: i64) -> Self {
                    value as $t
                }
            }
        )*
    };
}

impl_scalar_float!(f32, f64);

impl Scalar for Rational {
    const MODE: Mode = Mode::NumericExact;

    fn from_integer(value: i64) -> Self {
        Rational::from_integer(value.into())
    }
}

impl Scalar for ExtendedFloat {
    const MODE: Mode = Mode::Float;

    fn from_integer(value: i64) -> Self {
        ExtendedFloat::from_f64(value as f64)
    }
}

impl Scalar for RationalFunction {
    const MODE: Mode = Mode::Symbolic;

    fn from_integer(value: i64) -> Self {
        RationalFunction::constant(Rational::from_integer(value.into()))
    }

    /// Accumulates over a common denominator and reduces once.
    fn sum_of_products<'a>(terms: impl IntoIterator<Item = (&'a Self, &'a Self)>) -> Self {
        RationalFunction::sum_of_products(terms)
    }
}
