//! JSON band files.
//!
//! ```json
//! {"n": 5, "a": ["0", "2"], "b": [..], "c": [..], "d": [..], "e": [..], "f": [..], "g": ["1", "0"]}
//! ```
//!
//! Entries are rational strings (`"p"` or `"p/q"`). Each band starts at its
//! first in-matrix element: `a[0] = a_4`, `b[0] = b_3`, `c[0] = c_2` and
//! `d[0] = e[0] = f[0] = g[0]` the row-1 entries.

use std::fmt::Display;
use std::path::Path;

use hepta::band::band_lengths;
use hepta::{parse_rational, DenseMatrix, HeptaBands, HeptaError, Rational, RationalBands, RationalMatrix, MIN_ORDER};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BandFile {
    pub n: usize,
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub c: Vec<String>,
    pub d: Vec<String>,
    pub e: Vec<String>,
    pub f: Vec<String>,
    pub g: Vec<String>,
}

/// A parsed input. Orders below [`MIN_ORDER`] are kept dense.
#[derive(Clone, Debug, PartialEq)]
pub enum InputMatrix {
    Banded(RationalBands),
    Small(RationalMatrix),
}

impl InputMatrix {
    pub fn n(&self) -> usize {
        match self {
            InputMatrix::Banded(h) => h.n(),
            InputMatrix::Small(m) => m.rows(),
        }
    }

    pub fn to_dense(&self) -> RationalMatrix {
        match self {
            InputMatrix::Banded(h) => h.to_dense(),
            InputMatrix::Small(m) => m.clone(),
        }
    }
}

fn strings<T: Display>(band: &[T]) -> Vec<String> {
    band.iter().map(ToString::to_string).collect()
}

impl BandFile {
    pub fn from_bands<T: hepta::Scalar + Display>(h: &HeptaBands<T>) -> Self {
        BandFile {
            n: h.n(),
            a: strings(h.a()),
            b: strings(h.b()),
            c: strings(h.c()),
            d: strings(h.d()),
            e: strings(h.e()),
            f: strings(h.f()),
            g: strings(h.g()),
        }
    }

    fn named_bands(&self) -> [(char, &[String]); 7] {
        [
            ('a', &self.a),
            ('b', &self.b),
            ('c', &self.c),
            ('d', &self.d),
            ('e', &self.e),
            ('f', &self.f),
            ('g', &self.g),
        ]
    }

    fn parsed_bands(&self) -> Result<Vec<Vec<Rational>>, HeptaError> {
        if self.n == 0 {
            return Err(HeptaError::InvalidOrder(0));
        }
        self.named_bands()
            .into_iter()
            .zip(band_lengths(self.n))
            .map(|((name, band), expected)| {
                if band.len() != expected {
                    return Err(HeptaError::BandLength {
                        band: name,
                        expected,
                        found: band.len(),
                    });
                }
                band.iter()
                    .map(|s| {
                        parse_rational(s).map_err(|_| HeptaError::Parse(format!("band `{name}`: bad rational {s:?}")))
                    })
                    .collect()
            })
            .collect()
    }

    pub fn to_matrix(&self) -> Result<InputMatrix, HeptaError> {
        let mut bands = self.parsed_bands()?.into_iter();
        let mut next = || bands.next().expect("seven bands");
        let (a, b, c, d, e, f, g) = (next(), next(), next(), next(), next(), next(), next());
        if self.n >= MIN_ORDER {
            return HeptaBands::new(self.n, a, b, c, d, e, f, g).map(InputMatrix::Banded);
        }
        let n = self.n;
        let mut m = DenseMatrix::zeros(n, n);
        // Band k sits on diagonal `offset`; below the diagonal its first
        // element belongs to row `-offset`.
        for (band, offset) in [a, b, c, d, e, f, g].into_iter().zip(-3isize..=3) {
            for (k, v) in band.into_iter().enumerate() {
                let row = if offset < 0 { k + offset.unsigned_abs() } else { k };
                let col = (row as isize + offset) as usize;
                m[(row, col)] = v;
            }
        }
        Ok(InputMatrix::Small(m))
    }
}

pub fn parse_band_str(text: &str) -> Result<InputMatrix, CliError> {
    let file: BandFile = serde_json::from_str(text).map_err(CliError::Json)?;
    Ok(file.to_matrix()?)
}

pub fn parse_band_file(path: &Path) -> Result<InputMatrix, CliError> {
    parse_band_str(&crate::io::read(path)?)
}

/// Right-hand side: a JSON array of rational strings.
pub fn parse_vector_str(text: &str) -> Result<Vec<Rational>, CliError> {
    let raw: Vec<String> = serde_json::from_str(text).map_err(CliError::Json)?;
    raw.iter()
        .map(|s| parse_rational(s).map_err(|_| HeptaError::Parse(format!("bad rational {s:?}")).into()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use hepta::fixtures;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn h1_round_trip() {
        let file = BandFile::from_bands(&fixtures::h1());
        assert_eq!(file.g, ["-1", "2", "2", "3", "1", "1", "1"]);
        let text = serde_json::to_string(&file).unwrap();
        assert_eq!(parse_band_str(&text).unwrap(), InputMatrix::Banded(fixtures::h1()));
    }

    #[test]
    fn h2_g_band() {
        let file = BandFile::from_bands(&fixtures::h2());
        assert_eq!(file.g, ["1", "0"]);
    }

    #[test]
    fn wrong_band_length() {
        let mut file = BandFile::from_bands(&fixtures::h2());
        file.a.push("1".into());
        assert_eq!(
            file.to_matrix().unwrap_err(),
            HeptaError::BandLength {
                band: 'a',
                expected: 2,
                found: 3
            }
        );
    }

    #[test]
    fn malformed_rational() {
        let mut file = BandFile::from_bands(&fixtures::h2());
        file.d[0] = "1.5".into();
        assert!(matches!(file.to_matrix(), Err(HeptaError::Parse(_))));
    }

    #[test]
    fn unknown_field_is_rejected() {
        let text = r#"{"n":1,"a":[],"b":[],"c":[],"d":["1"],"e":[],"f":[],"g":[],"h":[]}"#;
        assert!(matches!(parse_band_str(text), Err(CliError::Json(_))));
    }

    #[test]
    fn small_orders_are_dense() {
        let text = r#"{"n":4,"a":["7"],"b":["5","6"],"c":["2","3","4"],"d":["1","1","1","1"],
                       "e":["8","9","10"],"f":["11","12"],"g":["13"]}"#;
        let InputMatrix::Small(m) = parse_band_str(text).unwrap() else {
            panic!("expected dense input");
        };
        let want =
            DenseMatrix::from_int_rows(&[&[1, 8, 11, 13], &[2, 1, 9, 12], &[5, 3, 1, 10], &[7, 6, 4, 1]]).unwrap();
        assert_eq!(m, want);
    }

    #[test]
    fn zero_order_is_invalid() {
        let text = r#"{"n":0,"a":[],"b":[],"c":[],"d":[],"e":[],"f":[],"g":[]}"#;
        assert!(matches!(
            parse_band_str(text),
            Err(CliError::Hepta(HeptaError::InvalidOrder(0)))
        ));
    }

    #[test]
    fn vectors() {
        assert_eq!(parse_vector_str(r#"["1/2", "-3"]"#).unwrap(), vec![q("1/2"), q("-3")]);
        assert!(parse_vector_str(r#"["x"]"#).is_err());
    }
}
