//! Partition combinatorics: Young diagrams, conjugation, hooks, and the
//! abacus machinery behind p-cores and p-quotients.
//!
//! Partitions are stored as weakly decreasing vectors of positive parts.
//! Rows and columns are 1-based in every public API that takes a cell.

mod abacus;
mod multi;

pub use abacus::{
    from_core_quotient, is_p_core, p_core, p_quotient, p_sign, p_weight, BetaSet, PQuotient,
};
pub use multi::MultiPartition;
pub(crate) use abacus::rim_hooks;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (1-based); zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.0.iter().take_while(|&&x| x >= j).count())
            .collect();
        Partition(parts)
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Hook length of cell `(row, col)`, 1-based. `None` outside the diagram.
    pub fn hook_length(&self, row: usize, col: usize) -> Option<usize> {
        if row == 0 || col == 0 || self.part(row) < col {
            return None;
        }
        let arm = self.part(row) - col;
        let leg = self.0.iter().skip(row).take_while(|&&x| x >= col).count();
        Some(arm + leg + 1)
    }

    /// All hook lengths, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                out.push(row - j + conj.0[j] - i - 1);
            }
        }
        out
    }

    /// Removes the rim hook attached to cell `(row, col)` (1-based), which must
    /// have hook length `length`. Returns the smaller partition and the leg
    /// length of the removed rim hook.
    pub fn remove_rim_hook(&self, row: usize, col: usize, length: usize) -> Result<(Partition, usize)> {
        match self.hook_length(row, col) {
            Some(h) if h == length => {}
            _ => return Err(Error::InvalidHook { row, col, length }),
        }
        // Rows row..=last are touched, where `last` is the bottom row of column `col`.
        let last = self.0.iter().take_while(|&&x| x >= col).count();
        let mut parts = self.0.clone();
        for r in row..last {
            parts[r - 1] = (self.0[r] - 1).max(col - 1);
        }
        parts[last - 1] = col - 1;
        Ok((Partition::from_unsorted(parts), last - row))
    }

    /// Lengths of the diagonal hooks of a self-conjugate partition.
    pub fn bar(&self) -> Result<Partition> {
        if !self.is_self_conjugate() {
            return Err(Error::NotSelfConjugate(self.to_string()));
        }
        let parts = self
            .0
            .iter()
            .enumerate()
            .take_while(|(i, &x)| x > *i)
            .map(|(i, &x)| 2 * x - (2 * i + 1))
            .collect();
        Ok(Partition(parts))
    }

    /// No part divisible by `p` (the class-side notion).
    pub fn is_p_regular(&self, p: usize) -> bool {
        self.0.iter().all(|&x| x % p != 0)
    }

    pub fn has_distinct_odd_parts(&self) -> bool {
        self.0.iter().all(|&x| x % 2 == 1) && self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Sign of a permutation with this cycle type.
    pub fn class_sign(&self) -> i64 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &x in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == x => *m += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }

    /// Centralizer order `z = prod k^{m_k} m_k!` of the cycle type in `S_n`.
    pub fn centralizer_order(&self) -> BigInt {
        let mut z = BigInt::one();
        for (k, m) in self.multiplicities() {
            z *= BigInt::from(k).pow(m as u32) * factorial(m);
        }
        z
    }

    /// Number of standard Young tableaux, by the hook-length formula.
    pub fn num_standard_tableaux(&self) -> BigInt {
        let hooks: BigInt = self.hook_lengths().into_iter().map(BigInt::from).product();
        factorial(self.size()) / hooks
    }

    /// Every partition of `n`, in reverse lexicographic order starting at `(n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill_partitions(n, n, &mut cur, &mut out);
        out
    }

    /// Partitions of `n` with no part divisible by `p`.
    pub fn all_p_regular(n: usize, p: usize) -> Vec<Partition> {
        Self::all(n).into_iter().filter(|l| l.is_p_regular(p)).collect()
    }
}

fn fill_partitions(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for k in (1..=rem.min(max)).rev() {
        cur.push(k);
        fill_partitions(rem - k, k, cur, out);
        cur.pop();
    }
}

/// Number of partitions of `n`.
pub fn partition_count(n: usize) -> usize {
    let mut table = vec![0usize; n + 1];
    table[0] = 1;
    for k in 1..=n {
        for m in k..=n {
            table[m] += table[m - k];
        }
    }
    table[n]
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `4,4,4,3,2`; the empty partition is `-`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("3,2,1").conjugate(), p("3,2,1"));
        assert_eq!(p("5").conjugate(), p("1,1,1,1,1"));
        assert_eq!(p("4,4,4,3,2").conjugate(), p("5,5,4,3"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn bar_matches_diagonal_hooks() {
        assert_eq!(p("3,2,1").bar().unwrap(), p("5,1"));
        assert_eq!(p("1").bar().unwrap(), p("1"));
        assert_eq!(p("2,2").bar().unwrap(), p("3,1"));
        assert!(matches!(p("2,1,1").bar(), Err(Error::NotSelfConjugate(_))));
        // bar parts are the hook lengths on the diagonal
        for n in 1..=12 {
            for l in Partition::all(n).into_iter().filter(|l| l.is_self_conjugate()) {
                let diag: Vec<usize> = (1..=l.len())
                    .filter_map(|i| l.hook_length(i, i))
                    .collect();
                assert_eq!(l.bar().unwrap().parts(), &diag[..]);
                assert_eq!(l.bar().unwrap().size(), n);
            }
        }
    }

    #[test]
    fn p_regular_is_class_side() {
        assert!(p("2,2,1").is_p_regular(3));
        assert!(!p("3,1").is_p_regular(3));
        assert!(p("5,1").is_p_regular(3));
        assert_eq!(Partition::all_p_regular(6, 3).len(), 7);
    }

    #[test]
    fn rim_hook_removal() {
        assert_eq!(p("3").remove_rim_hook(1, 1, 3).unwrap(), (Partition::empty(), 0));
        assert_eq!(p("2,2").remove_rim_hook(1, 1, 3).unwrap(), (p("1"), 1));
        assert!(p("2,2").remove_rim_hook(1, 1, 2).is_err());
        assert!(p("2,2").remove_rim_hook(3, 1, 1).is_err());
        let big = p("4,4,4,3,2");
        for i in 1..=big.len() {
            for j in 1..=big.part(i) {
                if big.hook_length(i, j) == Some(3) {
                    let (rest, _) = big.remove_rim_hook(i, j, 3).unwrap();
                    assert_eq!(rest.size(), 14);
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partition_count(12), 77);
        assert_eq!(Partition::all(3), vec![p("3"), p("2,1"), p("1,1,1")]);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(Partition::empty().to_string(), "-");
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
    }

    #[test]
    fn centralizers_sum_to_one() {
        use num_rational::BigRational;
        for n in 1..=8 {
            let total: BigRational = Partition::all(n)
                .iter()
                .map(|m| BigRational::new(BigInt::one(), m.centralizer_order()))
                .sum();
            assert_eq!(total, BigRational::one());
        }
    }
}
