use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{signed_term, Rational};
use crate::error::{Error, Result};

/// `a + b√D` with `D` squarefree and `D ≠ 1`. Rational values carry `b = 0`
/// and `D = 0`, so structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadValue {
    a: Rational,
    b: Rational,
    d: i64,
}

/// Writes `d = s² · d'` with `d'` squarefree; returns `(s, d')`.
fn squarefree_part(d: i64) -> (i64, i64) {
    let sign = d.signum();
    let mut rest = d.abs();
    let mut s = 1;
    let mut k = 2;
    while k * k <= rest {
        while rest % (k * k) == 0 {
            rest /= k * k;
            s *= k;
        }
        k += 1;
    }
    (s, sign * rest)
}

impl QuadValue {
    pub fn new(a: Rational, b: Rational, d: i64) -> Self {
        if b.is_zero() || d == 0 {
            return Self::rational(a);
        }
        let (s, d) = squarefree_part(d);
        let b = b * Rational::from_integer(BigInt::from(s));
        if d == 1 {
            return Self::rational(a + b);
        }
        QuadValue { a, b, d }
    }

    pub fn rational(a: Rational) -> Self {
        QuadValue { a, b: Rational::zero(), d: 0 }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// Squarefree radicand, `0` for rational values.
    pub fn radicand(&self) -> i64 {
        self.d
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.b.is_zero().then(|| self.a.clone())
    }

    fn common_radicand(&self, other: &Self) -> Result<i64> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (x, y) if x == y => Ok(x),
            (x, y) => Err(Error::RadicandMismatch(x, y)),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Ok(Self::new(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        QuadValue { a: -&self.a, b: -&self.b, d: self.d }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.a * k, &self.b * k, self.d)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        let dd = Rational::from_integer(BigInt::from(d));
        let a = &self.a * &other.a + &self.b * &other.b * dd;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::new(a, b, d))
    }

    /// Complex conjugation: only moves anything when `D < 0`.
    pub fn conj(&self) -> Self {
        if self.d < 0 {
            self.galois()
        } else {
            self.clone()
        }
    }

    /// The nontrivial field automorphism `√D ↦ -√D`.
    pub fn galois(&self) -> Self {
        QuadValue { a: self.a.clone(), b: -&self.b, d: self.d }
    }
}

impl fmt::Display for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        if !self.a.is_zero() || self.b.is_zero() {
            signed_term(&mut out, &self.a, "");
        }
        if !self.b.is_zero() {
            signed_term(&mut out, &self.b, &format!("sqrt({})", self.d));
        }
        f.write_str(&out)
    }
}

/// Sums quadratic values with possibly different radicands, keeping each
/// `√D` component separately.
#[derive(Clone, Debug, Default)]
pub struct QuadAccumulator {
    rational: Rational,
    irrational: BTreeMap<i64, Rational>,
}

impl QuadAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, v: &QuadValue) {
        self.rational += &v.a;
        if !v.b.is_zero() {
            *self.irrational.entry(v.d).or_insert_with(Rational::zero) += &v.b;
        }
    }

    pub fn add_rational(&mut self, r: &Rational) {
        self.rational += r;
    }

    /// The total if every irrational component cancelled.
    pub fn into_rational(self) -> Option<Rational> {
        self.irrational.values().all(Zero::is_zero).then_some(self.rational)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};

    #[test]
    fn normalizes_radicand() {
        let q = QuadValue::new(rat(0), rat(1), 12);
        assert_eq!(q.radicand(), 3);
        assert_eq!(q.b(), &rat(2));
        assert_eq!(QuadValue::new(rat(1), rat(3), 9), QuadValue::rational(rat(10)));
        assert_eq!(QuadValue::new(rat(1), rat(1), -12).radicand(), -3);
    }

    #[test]
    fn field_arithmetic() {
        // ((1 + √-3)/2)^3 = -1
        let w = QuadValue::new(ratio(1, 2), ratio(1, 2), -3);
        let cube = w.mul(&w).unwrap().mul(&w).unwrap();
        assert_eq!(cube, QuadValue::rational(rat(-1)));
        let x = w.mul(&w.conj()).unwrap();
        assert_eq!(x.to_rational(), Some(rat(1)));
        let s5 = QuadValue::new(rat(0), rat(1), 5);
        assert!(matches!(s5.add(&w), Err(Error::RadicandMismatch(5, -3))));
        assert_eq!(s5.conj(), s5);
        assert_eq!(s5.galois().b(), &rat(-1));
    }

    #[test]
    fn accumulator_cancels() {
        let mut acc = QuadAccumulator::new();
        acc.add(&QuadValue::new(rat(1), rat(1), 5));
        acc.add(&QuadValue::new(rat(1), rat(1), -7));
        acc.add(&QuadValue::new(rat(0), rat(-1), 5));
        let mut open = acc.clone();
        assert!(open.clone().into_rational().is_none());
        open.add(&QuadValue::new(rat(0), rat(-1), -7));
        assert_eq!(open.into_rational(), Some(rat(2)));
    }

    #[test]
    fn rendering() {
        assert_eq!(QuadValue::new(ratio(1, 2), ratio(-1, 2), -3).to_string(), "1/2 - 1/2*sqrt(-3)");
        assert_eq!(QuadValue::new(rat(0), rat(1), 5).to_string(), "sqrt(5)");
        assert_eq!(QuadValue::rational(rat(0)).to_string(), "0");
    }
}
