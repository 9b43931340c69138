//! Beta-sets and the p-abacus.
//!
//! A partition with `t` beads is encoded by the beta-numbers
//! `β_i = λ_i + t - i` (1-based `i`, zero parts padded). Runner `i` of the
//! p-abacus (1-based) holds the beads whose value is `≡ i-1 (mod p)`.
//! Quotients are always read from a beta-set whose bead count is the least
//! multiple of `p` that is at least the length of the partition; with that
//! choice conjugation reflects runner `i` onto runner `p+1-i`, so the middle
//! runner `(p+1)/2` is the fixed one.

use super::{MultiPartition, Partition};
use crate::error::{Error, Result};

pub type PQuotient = MultiPartition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaSet {
    /// Strictly decreasing.
    beads: Vec<usize>,
}

impl BetaSet {
    /// Beta-set of `λ` with `t ≥ len(λ)` beads.
    pub fn from_partition(lambda: &Partition, t: usize) -> Self {
        assert!(t >= lambda.len(), "bead count {t} below partition length");
        let beads = (1..=t).map(|i| lambda.part(i) + t - i).collect();
        BetaSet { beads }
    }

    pub fn from_beads(mut beads: Vec<usize>) -> Result<Self> {
        beads.sort_unstable_by(|a, b| b.cmp(a));
        if beads.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPartition(format!("repeated bead in {beads:?}")));
        }
        Ok(BetaSet { beads })
    }

    pub fn beads(&self) -> &[usize] {
        &self.beads
    }

    pub fn bead_count(&self) -> usize {
        self.beads.len()
    }

    pub fn to_partition(&self) -> Partition {
        let t = self.beads.len();
        Partition::from_unsorted(
            self.beads.iter().enumerate().map(|(i, &b)| b + i + 1 - t).collect(),
        )
    }

    fn contains(&self, x: usize) -> bool {
        self.beads.binary_search_by(|b| x.cmp(b)).is_ok()
    }

    /// Every removable `len`-rim-hook, as `(bead, leg length)`. Moving `bead`
    /// down to `bead - len` removes the hook.
    pub fn removable_hooks(&self, len: usize) -> Vec<(usize, usize)> {
        self.beads
            .iter()
            .filter(|&&b| b >= len && !self.contains(b - len))
            .map(|&b| (b, self.beads.iter().filter(|&&c| c > b - len && c < b).count()))
            .collect()
    }

    /// Moves bead `from` down by `len`.
    pub fn move_bead(&self, from: usize, len: usize) -> BetaSet {
        let mut beads: Vec<usize> = self
            .beads
            .iter()
            .map(|&b| if b == from { b - len } else { b })
            .collect();
        beads.sort_unstable_by(|a, b| b.cmp(a));
        BetaSet { beads }
    }

    /// Bead positions on each of the `p` runners, highest first.
    fn runners(&self, p: usize) -> Vec<Vec<usize>> {
        let mut runners = vec![Vec::new(); p];
        for &b in &self.beads {
            runners[b % p].push(b / p);
        }
        runners
    }
}

/// Rim hooks of length `len`, with their resulting partitions and leg lengths.
pub(crate) fn rim_hooks(lambda: &Partition, len: usize) -> Vec<(Partition, usize)> {
    let beta = BetaSet::from_partition(lambda, lambda.len());
    beta.removable_hooks(len)
        .into_iter()
        .map(|(b, leg)| (beta.move_bead(b, len).to_partition(), leg))
        .collect()
}

fn quotient_bead_count(lambda: &Partition, p: usize) -> usize {
    lambda.len().div_ceil(p) * p
}

pub fn p_core(lambda: &Partition, p: usize) -> Partition {
    assert!(p >= 2);
    let t = quotient_bead_count(lambda, p);
    let beta = BetaSet::from_partition(lambda, t);
    let runners = beta.runners(p);
    let beads = runners
        .iter()
        .enumerate()
        .flat_map(|(i, r)| (0..r.len()).map(move |k| k * p + i))
        .collect();
    BetaSet::from_beads(beads).expect("distinct runner slots").to_partition()
}

pub fn p_weight(lambda: &Partition, p: usize) -> usize {
    (lambda.size() - p_core(lambda, p).size()) / p
}

pub fn is_p_core(lambda: &Partition, p: usize) -> bool {
    p_core(lambda, p) == *lambda
}

pub fn p_quotient(lambda: &Partition, p: usize) -> PQuotient {
    assert!(p >= 2);
    let t = quotient_bead_count(lambda, p);
    let beta = BetaSet::from_partition(lambda, t);
    let components = beta
        .runners(p)
        .into_iter()
        .map(|positions| {
            let m = positions.len();
            Partition::from_unsorted(
                positions.iter().enumerate().map(|(j, &q)| q + j + 1 - m).collect(),
            )
        })
        .collect();
    MultiPartition::new(components)
}

/// Inverse of `(p_core, p_quotient)`.
pub fn from_core_quotient(core: &Partition, quotient: &PQuotient, p: usize) -> Result<Partition> {
    if !is_p_core(core, p) {
        return Err(Error::NotACore { partition: core.to_string(), p });
    }
    if quotient.arity() != p {
        return Err(Error::QuotientArity { got: quotient.arity(), expected: p });
    }
    let w = quotient.size();
    // Enough beads that every runner carries at least `w` of them.
    let t = (core.len() + p * (w + 1)).div_ceil(p) * p;
    let runners = BetaSet::from_partition(core, t).runners(p);
    let mut beads = Vec::with_capacity(t);
    for (i, positions) in runners.iter().enumerate() {
        let m = positions.len();
        let alpha = quotient.component(i);
        for j in 0..m {
            let q = (m - 1 - j) + alpha.part(j + 1);
            beads.push(q * p + i);
        }
    }
    Ok(BetaSet::from_beads(beads)?.to_partition())
}

/// `(-1)^(sum of leg lengths)` over a full removal of p-rim-hooks, taken
/// greedily from the highest movable bead.
pub fn p_sign(lambda: &Partition, p: usize) -> i64 {
    assert!(p >= 2);
    let mut beta = BetaSet::from_partition(lambda, lambda.len());
    let mut legs = 0;
    while let Some(&(b, leg)) = beta.removable_hooks(p).first() {
        legs += leg;
        beta = beta.move_bead(b, p);
    }
    if legs % 2 == 0 {
        1
    } else {
        -1
    }
}
