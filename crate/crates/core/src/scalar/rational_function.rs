use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Polynomial, Rational};
use crate::error::{HeptaError, Result};

/// Quotient of two polynomials in `t`, kept in lowest terms with a monic
/// denominator so that equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Reduces `num / den`. Fails if `den` is the zero polynomial.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(HeptaError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let inv = den.coeffs()[0].recip();
            return RationalFunction {
                num: num.scale(&inv),
                den: Polynomial::one(),
            };
        }
        let g = Polynomial::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        Self::with_monic_den(num, den)
    }

    /// Assumes `num` and `den` are already coprime.
    fn with_monic_den(num: Polynomial, den: Polynomial) -> Self {
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction {
            num: Polynomial::constant(c),
            den: Polynomial::one(),
        }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    /// The indeterminate `t` itself.
    pub fn t() -> Self {
        Self::from_polynomial(Polynomial::t())
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    /// True when both numerator and denominator are constants.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Largest of the numerator and denominator degrees.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(HeptaError::DivisionByZero);
        }
        Ok(Self::with_monic_den(self.den.clone(), self.num.clone()))
    }

    pub fn eval(&self, point: &Rational) -> Result<Rational> {
        let den = self.den.eval(point);
        if den.is_zero() {
            return Err(HeptaError::PoleAtZero);
        }
        Ok(self.num.eval(point) / den)
    }

    /// Value at `t = 0`. Because the representation is reduced, a vanishing
    /// denominator here is a genuine pole, reported as [`HeptaError::PoleAtZero`].
    pub fn eval_at_zero(&self) -> Result<Rational> {
        let den = self.den.at_zero();
        if den.is_zero() {
            return Err(HeptaError::PoleAtZero);
        }
        Ok(self.num.at_zero() / den)
    }

    /// `sum x_k y_k` with a single reduction at the end.
    pub fn sum_of_products<'a>(terms: impl IntoIterator<Item = (&'a Self, &'a Self)>) -> Self {
        let mut num = Polynomial::zero();
        let mut den = Polynomial::one();
        for (x, y) in terms {
            if x.is_zero() || y.is_zero() {
                continue;
            }
            let pn = &x.num * &y.num;
            let pd = match (x.den.is_one(), y.den.is_one()) {
                (_, true) => x.den.clone(),
                (true, false) => y.den.clone(),
                (false, false) => &x.den * &y.den,
            };
            if pd == den {
                num = &num + &pn;
            } else if num.is_zero() {
                (num, den) = (pn, pd);
            } else {
                let g = Polynomial::gcd(&den, &pd);
                let (den_rest, pd_rest) = (den.exact_div(&g), pd.exact_div(&g));
                num = &(&num * &pd_rest) + &(&pn * &den_rest);
                den = &den * &pd_rest;
            }
        }
        Self::reduce(num, den)
    }

    fn constant_value(&self) -> Option<Rational> {
        // den is monic, so a constant den is exactly 1
        self.is_constant().then(|| self.num.at_zero())
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Add for RationalFunction {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        if let (Some(a), Some(b)) = (self.constant_value(), rhs.constant_value()) {
            return Self::constant(a + b);
        }
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        // c + n/d = (n + c d)/d is already in lowest terms
        if let Some(c) = self.constant_value() {
            return RationalFunction {
                num: &rhs.num + &rhs.den.scale(&c),
                den: rhs.den,
            };
        }
        if let Some(c) = rhs.constant_value() {
            return RationalFunction {
                num: &self.num + &self.den.scale(&c),
                den: self.den,
            };
        }
        if self.den == rhs.den {
            return Self::reduce(&self.num + &rhs.num, self.den);
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::reduce(num, &self.den * &rhs.den)
    }
}

impl Sub for RationalFunction {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for RationalFunction {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if let Some(a) = self.constant_value() {
            return RationalFunction {
                num: rhs.num.scale(&a),
                den: rhs.den,
            };
        }
        if let Some(b) = rhs.constant_value() {
            return RationalFunction {
                num: self.num.scale(&b),
                den: self.den,
            };
        }
        // Cross-cancel so the product of coprime pairs stays coprime.
        let g1 = Polynomial::gcd(&self.num, &rhs.den);
        let g2 = Polynomial::gcd(&rhs.num, &self.den);
        let num = &self.num.exact_div(&g1) * &rhs.num.exact_div(&g2);
        let den = &self.den.exact_div(&g2) * &rhs.den.exact_div(&g1);
        Self::with_monic_den(num, den)
    }
}

impl Div for RationalFunction {
    type Output = Self;

    /// Panics on division by the zero function; use `Scalar::checked_div`.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.recip().expect("rational function division by zero")
    }
}

impl Neg for RationalFunction {
    type Output = Self;

    fn neg(self) -> Self {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
