//! Exact scalars: big rationals, cyclotomic numbers of a fixed order and
//! quadratic irrationals `a + b√D`.

mod cyclotomic;
mod quad;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use quad::{QuadAccumulator, QuadValue};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intlinalg::RatMatrix;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `p/q`, or just `p` when integral.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidPartition(format!("not a rational: {s}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

/// A character value: rational, in a quadratic field, or cyclotomic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgValue {
    Rational(Rational),
    Quad(QuadValue),
    Cyclotomic(Cyclotomic),
}

impl AlgValue {
    pub fn int(n: i64) -> Self {
        AlgValue::Rational(rat(n))
    }

    /// Collapses representations that are actually rational.
    pub fn normalized(self) -> Self {
        match self {
            AlgValue::Quad(q) => match q.to_rational() {
                Some(r) => AlgValue::Rational(r),
                None => AlgValue::Quad(q),
            },
            AlgValue::Cyclotomic(c) => match c.to_rational() {
                Some(r) => AlgValue::Rational(r),
                None => AlgValue::Cyclotomic(c),
            },
            r => r,
        }
    }

    pub fn to_rational(&self) -> Option<Rational> {
        match self {
            AlgValue::Rational(r) => Some(r.clone()),
            AlgValue::Quad(q) => q.to_rational(),
            AlgValue::Cyclotomic(c) => c.to_rational(),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.to_rational().is_some()
    }

    pub fn is_integer(&self) -> bool {
        self.to_rational().is_some_and(|r| r.is_integer())
    }

    pub fn conj(&self) -> Self {
        match self {
            AlgValue::Rational(r) => AlgValue::Rational(r.clone()),
            AlgValue::Quad(q) => AlgValue::Quad(q.conj()),
            AlgValue::Cyclotomic(c) => AlgValue::Cyclotomic(c.conj()),
        }
    }

    pub fn mul(&self, other: &AlgValue) -> Result<AlgValue> {
        use AlgValue::*;
        let out = match (self, other) {
            (Rational(a), Rational(b)) => Rational(a * b),
            (Rational(a), Quad(q)) | (Quad(q), Rational(a)) => Quad(q.scale(a)),
            (Rational(a), Cyclotomic(c)) | (Cyclotomic(c), Rational(a)) => Cyclotomic(c.scale(a)),
            (Quad(x), Quad(y)) => Quad(x.mul(y)?),
            (Cyclotomic(x), Cyclotomic(y)) => Cyclotomic(x.mul(y)?),
            _ => return Err(Error::Dimension("mixed quadratic and cyclotomic values".into())),
        };
        Ok(out.normalized())
    }

    pub fn add(&self, other: &AlgValue) -> Result<AlgValue> {
        use AlgValue::*;
        let out = match (self, other) {
            (Rational(a), Rational(b)) => Rational(a + b),
            (Rational(a), Quad(q)) | (Quad(q), Rational(a)) => Quad(q.add(&QuadValue::rational(a.clone()))?),
            (Rational(a), Cyclotomic(c)) | (Cyclotomic(c), Rational(a)) => {
                Cyclotomic(c.add(&self::Cyclotomic::rational(c.order(), a.clone()))?)
            }
            (Quad(x), Quad(y)) => Quad(x.add(y)?),
            (Cyclotomic(x), Cyclotomic(y)) => Cyclotomic(x.add(y)?),
            _ => return Err(Error::Dimension("mixed quadratic and cyclotomic values".into())),
        };
        Ok(out.normalized())
    }

    /// Rational coordinates in a fixed Q-basis: `[a]`, `[a, b]` over `{1, √D}`,
    /// or the power-basis coefficients of a cyclotomic number.
    pub fn coordinates(&self) -> Vec<Rational> {
        match self {
            AlgValue::Rational(r) => vec![r.clone()],
            AlgValue::Quad(q) => vec![q.a().clone(), q.b().clone()],
            AlgValue::Cyclotomic(c) => c.coefficients().to_vec(),
        }
    }
}

impl From<i64> for AlgValue {
    fn from(n: i64) -> Self {
        AlgValue::int(n)
    }
}

impl fmt::Display for AlgValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgValue::Rational(r) => f.write_str(&format_rational(r)),
            AlgValue::Quad(q) => q.fmt(f),
            AlgValue::Cyclotomic(c) => c.fmt(f),
        }
    }
}

/// Expands a table of values into rational coordinates, column by column:
/// one coordinate for a purely rational column, `[a, b]` for a column living
/// in `Q(√D)`, the power-basis coefficients for a cyclotomic column. The map
/// is Q-linear and injective on each column, so Z-spans and Z-relations
/// among rows are preserved.
pub fn coordinate_matrix(rows: &[Vec<AlgValue>], cols: usize) -> Result<RatMatrix> {
    #[derive(Clone, Copy, PartialEq)]
    enum Layout {
        Rational,
        Quad(i64),
        Cyclotomic(u32),
    }
    let mut layouts = vec![Layout::Rational; cols];
    for row in rows {
        if row.len() != cols {
            return Err(Error::Dimension(format!("row of length {} in a {cols}-column table", row.len())));
        }
        for (j, v) in row.iter().enumerate() {
            let here = match v {
                AlgValue::Rational(_) => continue,
                AlgValue::Quad(q) if q.radicand() == 0 => continue,
                AlgValue::Quad(q) => Layout::Quad(q.radicand()),
                AlgValue::Cyclotomic(c) => Layout::Cyclotomic(c.order()),
            };
            if layouts[j] == Layout::Rational {
                layouts[j] = here;
            } else if layouts[j] != here {
                return Err(Error::Dimension(format!("column {j} mixes number fields")));
            }
        }
    }
    let out_rows = rows
        .iter()
        .map(|row| {
            let mut out = Vec::new();
            for (v, layout) in row.iter().zip(&layouts) {
                match (layout, v.to_rational()) {
                    (Layout::Rational, Some(r)) => out.push(r),
                    (Layout::Quad(_), Some(r)) => out.extend([r, Rational::zero()]),
                    (Layout::Quad(_), None) => out.extend(v.coordinates()),
                    (Layout::Cyclotomic(m), _) => match v {
                        AlgValue::Cyclotomic(c) => out.extend(c.coefficients().iter().cloned()),
                        _ => out.extend(Cyclotomic::rational(*m, v.to_rational().unwrap()).coefficients().iter().cloned()),
                    },
                    (Layout::Rational, None) => unreachable!(),
                }
            }
            out
        })
        .collect::<Vec<_>>();
    let width = layouts
        .iter()
        .map(|l| match l {
            Layout::Rational => 1,
            Layout::Quad(_) => 2,
            Layout::Cyclotomic(m) => euler_phi(*m) as usize,
        })
        .sum();
    RatMatrix::from_rows(out_rows, width)
}

pub(crate) fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

pub(crate) fn signed_term(out: &mut String, coeff: &Rational, body: &str) {
    let neg = coeff.is_negative();
    let mag = coeff.abs();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if body.is_empty() {
        out.push_str(&format_rational(&mag));
    } else if mag.is_one() {
        out.push_str(body);
    } else {
        out.push_str(&format!("{}*{}", format_rational(&mag), body));
    }
}
