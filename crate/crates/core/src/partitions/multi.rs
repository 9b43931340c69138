use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::Partition;
use crate::error::{Error, Result};

/// A tuple of partitions `(α^1, …, α^s)`. Used both for p-quotients and for
/// the character and class labels of wreath products.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MultiPartition(Vec<Partition>);

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        MultiPartition(components)
    }

    pub fn empty(arity: usize) -> Self {
        MultiPartition(vec![Partition::empty(); arity])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// Component `i`, 0-based.
    pub fn component(&self, i: usize) -> &Partition {
        &self.0[i]
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn with_component(&self, i: usize, part: Partition) -> Self {
        let mut c = self.0.clone();
        c[i] = part;
        MultiPartition(c)
    }

    /// Total size `Σ|α^i|`.
    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn reversed(&self) -> Self {
        MultiPartition(self.0.iter().rev().cloned().collect())
    }

    pub fn map(&self, f: impl Fn(&Partition) -> Partition) -> Self {
        MultiPartition(self.0.iter().map(f).collect())
    }

    /// Drops component `i` (0-based).
    pub fn without(&self, i: usize) -> Self {
        let mut c = self.0.clone();
        c.remove(i);
        MultiPartition(c)
    }

    /// Inserts `part` at position `i` (0-based).
    pub fn with_inserted(&self, i: usize, part: Partition) -> Self {
        let mut c = self.0.clone();
        c.insert(i, part);
        MultiPartition(c)
    }

    /// Every `arity`-tuple of partitions of total size `w`.
    pub fn all(arity: usize, w: usize) -> Vec<MultiPartition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(arity);
        fill(arity, w, &mut cur, &mut out);
        out
    }

    pub fn count(arity: usize, w: usize) -> usize {
        // Coefficient of x^w in P(x)^arity.
        let p: Vec<usize> = (0..=w).map(super::partition_count).collect();
        let mut acc = vec![0usize; w + 1];
        acc[0] = 1;
        for _ in 0..arity {
            let mut next = vec![0usize; w + 1];
            for (i, &a) in acc.iter().enumerate() {
                for j in 0..=w - i {
                    next[i + j] += a * p[j];
                }
            }
            acc = next;
        }
        acc[w]
    }
}

fn fill(arity: usize, rem: usize, cur: &mut Vec<Partition>, out: &mut Vec<MultiPartition>) {
    if cur.len() + 1 == arity {
        for last in Partition::all(rem) {
            cur.push(last);
            out.push(MultiPartition(cur.clone()));
            cur.pop();
        }
        return;
    }
    if arity == 0 {
        if rem == 0 {
            out.push(MultiPartition(Vec::new()));
        }
        return;
    }
    for k in (0..=rem).rev() {
        for part in Partition::all(k) {
            cur.push(part);
            fill(arity, rem - k, cur, out);
            cur.pop();
        }
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join("|"))
    }
}

impl FromStr for MultiPartition {
    type Err = Error;

    /// Parses `(1|2|1,1)`; empty components are `-`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidPartition(s.to_string()))?;
        let comps = inner.split('|').map(str::parse).collect::<Result<Vec<_>>>()?;
        Ok(MultiPartition(comps))
    }
}

impl Serialize for MultiPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_enumeration() {
        for arity in 1..=5 {
            for w in 0..=4 {
                assert_eq!(MultiPartition::all(arity, w).len(), MultiPartition::count(arity, w));
            }
        }
        assert_eq!(MultiPartition::count(3, 2), 9);
        assert_eq!(MultiPartition::count(2, 2), 5);
    }

    #[test]
    fn display_roundtrip() {
        let m: MultiPartition = "(1|2|1,1)".parse().unwrap();
        assert_eq!(m.to_string(), "(1|2|1,1)");
        assert_eq!(m.size(), 5);
        let e = MultiPartition::empty(3);
        assert_eq!(e.to_string(), "(-|-|-)");
        assert_eq!("(-|-|-)".parse::<MultiPartition>().unwrap(), e);
    }
}
