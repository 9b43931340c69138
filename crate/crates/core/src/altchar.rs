//! Characters of the alternating group, obtained by restricting `S_n`
//! characters and splitting the self-conjugate ones.
//!
//! For `λ = λ*` with diagonal hooks `h_1 > … > h_k`, put `ε = (-1)^{(n-k)/2}`
//! and `D = ε·h_1⋯h_k`. The constituents `ρ_{λ,±}` take `(ε ± √D)/2` on the
//! class labelled `+` of cycle type `(h_1,…,h_k)` and the conjugate value on
//! the `-` class; elsewhere they take half of `χ_λ`. The `+` class is, by
//! convention, the one on which `ρ_{λ,+}` takes `(ε + √D)/2`.

use std::fmt;
use std::io;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{rat, AlgValue, QuadAccumulator, QuadValue, Rational};
use crate::partitions::{factorial, Partition};
use crate::symchar::MnCache;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltClass {
    pub cycle_type: Partition,
    pub split: Option<Sign>,
    pub size: BigInt,
}

impl fmt::Display for AltClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.split {
            Some(s) => write!(f, "{}{}", self.cycle_type, s),
            None => write!(f, "{}", self.cycle_type),
        }
    }
}

impl Serialize for AltClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AltChar {
    /// `Res χ_λ = Res χ_{λ*}`; `λ` is the larger of the pair.
    Unsplit(Partition),
    Split(Partition, Sign),
}

impl AltChar {
    /// The character of `A_n` that `χ_λ` restricts to (the `+` constituent if it splits).
    pub fn restriction_of(lambda: &Partition) -> AltChar {
        let conj = lambda.conjugate();
        if conj == *lambda {
            AltChar::Split(lambda.clone(), Sign::Plus)
        } else {
            AltChar::Unsplit(lambda.clone().max(conj))
        }
    }

    pub fn partition(&self) -> &Partition {
        match self {
            AltChar::Unsplit(l) | AltChar::Split(l, _) => l,
        }
    }
}

impl fmt::Display for AltChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AltChar::Unsplit(l) => write!(f, "{l}"),
            AltChar::Split(l, s) => write!(f, "{l}{s}"),
        }
    }
}

impl std::str::FromStr for AltChar {
    type Err = Error;

    /// `3,1` or `2,2+` / `2,2-`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(l) = s.strip_suffix('+') {
            return Ok(AltChar::Split(l.parse()?, Sign::Plus));
        }
        if let Some(l) = s.strip_suffix('-') {
            if !l.is_empty() {
                return Ok(AltChar::Split(l.parse()?, Sign::Minus));
            }
        }
        let l: Partition = s.parse()?;
        Ok(AltChar::restriction_of(&l))
    }
}

impl Serialize for AltChar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn splits(mu: &Partition) -> bool {
    mu.size() > 1 && mu.has_distinct_odd_parts()
}

/// Even cycle types in `Partition::all` order; split types give `+` then `-`.
pub fn alt_classes(n: usize) -> Vec<AltClass> {
    let mut out = Vec::new();
    for mu in Partition::all(n) {
        if mu.class_sign() != 1 {
            continue;
        }
        let size = factorial(n) / mu.centralizer_order();
        if splits(&mu) {
            let half: BigInt = size / 2;
            for s in [Sign::Plus, Sign::Minus] {
                out.push(AltClass { cycle_type: mu.clone(), split: Some(s), size: half.clone() });
            }
        } else {
            out.push(AltClass { cycle_type: mu, split: None, size });
        }
    }
    out
}

pub fn alt_characters(n: usize) -> Vec<AltChar> {
    let mut out = Vec::new();
    for lambda in Partition::all(n) {
        let conj = lambda.conjugate();
        if conj == lambda {
            out.push(AltChar::Split(lambda.clone(), Sign::Plus));
            out.push(AltChar::Split(lambda, Sign::Minus));
        } else if lambda > conj {
            out.push(AltChar::Unsplit(lambda));
        }
    }
    out
}

pub fn alt_p_regular_classes(n: usize, p: usize) -> Vec<AltClass> {
    alt_classes(n).into_iter().filter(|c| c.cycle_type.is_p_regular(p)).collect()
}

/// `(ε, D)` for the split value of a self-conjugate `λ`.
pub fn split_data(lambda: &Partition) -> Result<(i64, i64)> {
    let bar = lambda.bar()?;
    let k = bar.len();
    let eps = if ((lambda.size() - k) / 2).is_multiple_of(2) { 1 } else { -1 };
    let prod: i64 = bar.parts().iter().map(|&h| h as i64).product();
    Ok((eps, eps * prod))
}

fn alt_value_cached(cache: &mut MnCache, ch: &AltChar, class: &AltClass) -> Result<AlgValue> {
    match ch {
        AltChar::Unsplit(l) => Ok(AlgValue::int(cache.value(l, &class.cycle_type)?)),
        AltChar::Split(l, s) => {
            if class.split.is_some() && l.bar()? == class.cycle_type {
                let (eps, d) = split_data(l)?;
                let half = Rational::new(BigInt::one(), BigInt::from(2));
                let b = if Some(*s) == class.split { half.clone() } else { -half.clone() };
                let q = QuadValue::new(rat(eps) * half, b, d);
                return Ok(AlgValue::Quad(q).normalized());
            }
            let v = cache.value(l, &class.cycle_type)?;
            if v % 2 != 0 {
                return Err(Error::Internal(format!("odd value {v} of χ_{l} off its split class")));
            }
            Ok(AlgValue::int(v / 2))
        }
    }
}

pub fn alt_value(ch: &AltChar, class: &AltClass) -> Result<AlgValue> {
    alt_value_cached(&mut MnCache::new(), ch, class)
}

#[derive(Clone, Debug)]
pub struct AltCharTable {
    n: usize,
    characters: Vec<AltChar>,
    classes: Vec<AltClass>,
    values: Vec<Vec<AlgValue>>,
}

pub fn alt_table(n: usize) -> Result<AltCharTable> {
    let characters = alt_characters(n);
    let classes = alt_classes(n);
    let mut cache = MnCache::new();
    let values = characters
        .iter()
        .map(|ch| classes.iter().map(|c| alt_value_cached(&mut cache, ch, c)).collect())
        .collect::<Result<Vec<Vec<_>>>>()?;
    Ok(AltCharTable { n, characters, classes, values })
}

impl AltCharTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> BigInt {
        if self.n < 2 {
            BigInt::one()
        } else {
            factorial(self.n) / 2
        }
    }

    pub fn characters(&self) -> &[AltChar] {
        &self.characters
    }

    pub fn classes(&self) -> &[AltClass] {
        &self.classes
    }

    pub fn values(&self) -> &[Vec<AlgValue>] {
        &self.values
    }

    pub fn value(&self, chi: usize, class: usize) -> &AlgValue {
        &self.values[chi][class]
    }

    pub fn character_index(&self, ch: &AltChar) -> Option<usize> {
        self.characters.iter().position(|c| c == ch)
    }

    pub fn p_regular_class_indices(&self, p: usize) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&j| self.classes[j].cycle_type.is_p_regular(p))
            .collect()
    }

    fn check_pairing(&self, classes: &[usize]) -> Result<()> {
        for &j in classes {
            let c = &self.classes[j];
            if c.split.is_some() {
                let partner = self
                    .classes
                    .iter()
                    .position(|d| d.cycle_type == c.cycle_type && d.split == c.split.map(Sign::flip));
                if !partner.is_some_and(|q| classes.contains(&q)) {
                    return Err(Error::UnpairedSplitClass);
                }
            }
        }
        Ok(())
    }

    /// `(1/|A_n|) Σ_{g ∈ C} χ(g) conj(ψ(g))`; `C` must contain both or
    /// neither of each split pair.
    pub fn inner_product(&self, chi: usize, psi: usize, classes: &[usize]) -> Result<Rational> {
        self.check_pairing(classes)?;
        let mut acc = QuadAccumulator::new();
        for &j in classes {
            let prod = self.values[chi][j].mul(&self.values[psi][j].conj())?;
            let size = Rational::from_integer(self.classes[j].size.clone());
            match prod {
                AlgValue::Rational(r) => acc.add_rational(&(r * size)),
                AlgValue::Quad(q) => acc.add(&q.scale(&size)),
                AlgValue::Cyclotomic(_) => return Err(Error::Internal("cyclotomic value in A_n".into())),
            }
        }
        let total = acc.into_rational().ok_or_else(|| Error::Irrational("inner product".into()))?;
        Ok(total / Rational::from_integer(self.order()))
    }

    pub fn verify_orthogonality(&self) -> Result<bool> {
        let all: Vec<usize> = (0..self.classes.len()).collect();
        let k = self.characters.len();
        for i in 0..k {
            for j in i..k {
                let ip = self.inner_product(i, j, &all)?;
                if (i == j && !ip.is_one()) || (i != j && !ip.is_zero()) {
                    return Ok(false);
                }
            }
        }
        for a in 0..k {
            for b in a..k {
                let mut acc = QuadAccumulator::new();
                for row in &self.values {
                    match row[a].mul(&row[b].conj())? {
                        AlgValue::Rational(r) => acc.add_rational(&r),
                        AlgValue::Quad(q) => acc.add(&q),
                        AlgValue::Cyclotomic(_) => return Ok(false),
                    }
                }
                let Some(s) = acc.into_rational() else {
                    return Ok(false);
                };
                let expect = if a == b {
                    Rational::new(self.order(), self.classes[a].size.clone())
                } else {
                    Rational::zero()
                };
                if s != expect {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn write_csv<W: io::Write>(&self, out: W) -> Result<()> {
        let header = self.classes.iter().map(|c| c.to_string());
        let rows = self
            .characters
            .iter()
            .zip(&self.values)
            .map(|(ch, r)| (ch.to_string(), r.iter().map(|v| v.to_string()).collect()));
        crate::write_table_csv(out, header, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn class_lists() {
        let labels: Vec<String> = alt_classes(3).iter().map(|c| c.to_string()).collect();
        assert_eq!(labels, vec!["3+", "3-", "1,1,1"]);
        let labels: Vec<String> = alt_classes(4).iter().map(|c| c.to_string()).collect();
        assert_eq!(labels, vec!["3,1+", "3,1-", "2,2", "1,1,1,1"]);
        for n in 2..=9 {
            assert_eq!(alt_classes(n).len(), alt_characters(n).len());
            let total: BigInt = alt_classes(n).iter().map(|c| c.size.clone()).sum();
            assert_eq!(total, factorial(n) / 2);
        }
    }

    #[test]
    fn a4_split_values() {
        let t = alt_table(4).unwrap();
        let plus = t.character_index(&AltChar::Split(p("2,2"), Sign::Plus)).unwrap();
        let w_plus = QuadValue::new(ratio(-1, 2), ratio(1, 2), -3);
        assert_eq!(t.value(plus, 0), &AlgValue::Quad(w_plus.clone()));
        assert_eq!(t.value(plus, 1), &AlgValue::Quad(w_plus.galois()));
        let degrees: Vec<String> = (0..4).map(|i| t.value(i, 3).to_string()).collect();
        assert_eq!(degrees, vec!["1", "3", "1", "1"]);
        assert!(t.verify_orthogonality().unwrap());
    }

    #[test]
    fn small_tables_orthogonal() {
        for n in 2..=7 {
            assert!(alt_table(n).unwrap().verify_orthogonality().unwrap(), "A_{n}");
        }
    }

    #[test]
    fn pairing_closure_enforced() {
        let t = alt_table(4).unwrap();
        assert_eq!(t.inner_product(0, 0, &[0]), Err(Error::UnpairedSplitClass));
        assert!(t.inner_product(0, 0, &[0, 1]).is_ok());
    }

    #[test]
    fn regular_classes() {
        let c: Vec<String> = alt_p_regular_classes(3, 3).iter().map(|c| c.to_string()).collect();
        assert_eq!(c, vec!["1,1,1"]);
        let c: Vec<String> = alt_p_regular_classes(4, 3).iter().map(|c| c.to_string()).collect();
        assert_eq!(c, vec!["2,2", "1,1,1,1"]);
    }

    #[test]
    fn char_parsing() {
        assert_eq!("2,2+".parse::<AltChar>().unwrap(), AltChar::Split(p("2,2"), Sign::Plus));
        assert_eq!("1,1,1,1".parse::<AltChar>().unwrap(), AltChar::Unsplit(p("4")));
    }
}
