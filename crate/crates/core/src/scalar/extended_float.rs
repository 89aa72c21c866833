use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

const EXP_MASK: u64 = 0x7ff << 52;
const BIAS: i64 = 1023;
/// Beyond this exponent gap the smaller addend cannot change a rounded sum.
const ALIGN_LIMIT: i64 = 64;

/// Exact power of two for `k` in the normal exponent range.
fn pow2(k: i64) -> f64 {
    debug_assert!((-1022..=1023).contains(&k));
    f64::from_bits(((k + BIAS) as u64) << 52)
}

/// Splits a finite nonzero double into a mantissa in `[1, 2)` (signed) and a
/// power-of-two exponent.
fn split(x: f64) -> (f64, i64) {
    let mut x = x;
    let mut shift = 0;
    if (x.to_bits() & EXP_MASK) == 0 {
        // subnormal
        x *= pow2(64);
        shift = -64;
    }
    let bits = x.to_bits();
    let biased = ((bits & EXP_MASK) >> 52) as i64;
    let mantissa = f64::from_bits((bits & !EXP_MASK) | ((BIAS as u64) << 52));
    (mantissa, biased - BIAS + shift)
}

/// A double-precision mantissa with a 64-bit binary exponent.
///
/// Value is `mantissa * 2^exponent`, with `mantissa` either zero or of
/// magnitude in `[1, 2)`. Rounding happens only in the mantissa; exponents are
/// tracked exactly, so products of thousands of large factors never overflow.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtendedFloat {
    mantissa: f64,
    exponent: i64,
}

impl ExtendedFloat {
    const ZERO: ExtendedFloat = ExtendedFloat {
        mantissa: 0.0,
        exponent: 0,
    };

    fn normalized(value: f64, exponent: i64) -> Self {
        if value == 0.0 {
            return Self::ZERO;
        }
        let (mantissa, shift) = split(value);
        ExtendedFloat {
            mantissa,
            exponent: exponent + shift,
        }
    }

    /// Panics if `value` is NaN or infinite.
    pub fn from_f64(value: f64) -> Self {
        Self::try_from_f64(value).expect("ExtendedFloat requires a finite value")
    }

    pub fn try_from_f64(value: f64) -> Option<Self> {
        value.is_finite().then(|| Self::normalized(value, 0))
    }

    /// Builds `mantissa * 2^exponent`; the mantissa need not be normalized.
    pub fn from_parts(mantissa: f64, exponent: i64) -> Self {
        assert!(mantissa.is_finite(), "mantissa must be finite");
        Self::normalized(mantissa, exponent)
    }

    pub fn mantissa(&self) -> f64 {
        self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    /// Nearest double; saturates to infinity or flushes to zero outside the
    /// double range.
    pub fn to_f64(&self) -> f64 {
        let (m, e) = (self.mantissa, self.exponent);
        if m == 0.0 {
            0.0
        } else if e > 1023 {
            m.signum() * f64::INFINITY
        } else if e >= -1022 {
            m * pow2(e)
        } else if e >= -1022 - 60 {
            // Land in the normal range first so only the final step rounds.
            (m * pow2(e + 1022)) * pow2(-1022)
        } else {
            m.signum() * 0.0
        }
    }

    /// Correctly rounded up to one double rounding of a ~64-bit quotient.
    pub fn from_rational(value: &Rational) -> Self {
        let numer = value.numer();
        if numer.is_zero() {
            return Self::ZERO;
        }
        let denom = value.denom();
        let shift = denom.bits() as i64 - numer.abs().bits() as i64 + 64;
        let quotient: BigInt = if shift >= 0 {
            (numer << shift as usize) / denom
        } else {
            numer / (denom << (-shift) as usize)
        };
        let q = quotient.to_f64().expect("quotient has about 64 bits");
        Self::normalized(q, -shift)
    }

    pub fn abs(self) -> Self {
        ExtendedFloat {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
        }
    }
}

impl Zero for ExtendedFloat {
    fn zero() -> Self {
        Self::ZERO
    }

    fn is_zero(&self) -> bool {
        self.mantissa == 0.0
    }
}

impl One for ExtendedFloat {
    fn one() -> Self {
        ExtendedFloat {
            mantissa: 1.0,
            exponent: 0,
        }
    }
}

impl Add for ExtendedFloat {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let (big, small) = if self.exponent >= rhs.exponent {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let gap = big.exponent - small.exponent;
        if gap > ALIGN_LIMIT {
            return big;
        }
        Self::normalized(big.mantissa + small.mantissa * pow2(-gap), big.exponent)
    }
}

impl Sub for ExtendedFloat {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for ExtendedFloat {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::ZERO;
        }
        Self::normalized(self.mantissa * rhs.mantissa, self.exponent + rhs.exponent)
    }
}

impl Div for ExtendedFloat {
    type Output = Self;

    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "ExtendedFloat division by zero");
        if self.is_zero() {
            return Self::ZERO;
        }
        Self::normalized(self.mantissa / rhs.mantissa, self.exponent - rhs.exponent)
    }
}

impl Neg for ExtendedFloat {
    type Output = Self;

    fn neg(self) -> Self {
        if self.is_zero() {
            return self;
        }
        ExtendedFloat {
            mantissa: -self.mantissa,
            exponent: self.exponent,
        }
    }
}

impl From<f64> for ExtendedFloat {
    fn from(value: f64) -> Self {
        Self::from_f64(value)
    }
}

const LOG10_2_LO: f64 = -2.803_728_127_785_170_4e-18;

impl fmt::Display for ExtendedFloat {
    /// Shortest round-trip decimal when the value fits a double, otherwise
    /// scientific notation with 17 significant digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if (-1000..=1000).contains(&self.exponent) {
            return write!(f, "{}", self.to_f64());
        }
        // exponent * log10(2) in double-double so the fractional part keeps
        // full precision for large exponents.
        let e = self.exponent as f64;
        let hi = e * std::f64::consts::LOG10_2;
        let err = e.mul_add(std::f64::consts::LOG10_2, -hi) + e * LOG10_2_LO;
        let mut exp10 = hi.floor();
        let frac = (hi - exp10) + err + self.mantissa.abs().log10();
        let shift = frac.floor();
        exp10 += shift;
        let mut digits = 10f64.powf(frac - shift);
        if digits >= 10.0 {
            digits /= 10.0;
            exp10 += 1.0;
        }
        let sign = if self.mantissa < 0.0 { "-" } else { "" };
        write!(f, "{sign}{digits:.16}e{}", exp10 as i64)
    }
}
