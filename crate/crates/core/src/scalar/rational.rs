use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{HeptaError, Result};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator. `Display` gives the canonical text form `p/q`, or `p` for
/// integers.
pub type Rational = num_rational::BigRational;

/// Parses `"p/q"` or `"p"`. A sign is accepted on either part and moved to
/// the numerator; the result is reduced.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || HeptaError::Parse(format!("malformed rational {text:?}"));
    let parse_int = |s: &str| -> Result<BigInt> {
        let s = s.trim();
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    match text.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(text)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(HeptaError::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Rational::new(num, den))
        }
    }
}
