//! Characters of the symmetric group via the Murnaghan–Nakayama rule.

use std::collections::{BTreeMap, HashMap};
use std::io;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::intlinalg::RatMatrix;
use crate::partitions::{factorial, p_core, rim_hooks, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymClass {
    pub cycle_type: Partition,
    #[serde(serialize_with = "crate::serde_bigint")]
    pub size: BigInt,
}

impl SymClass {
    pub fn new(cycle_type: Partition) -> Self {
        let n = cycle_type.size();
        let size = factorial(n) / cycle_type.centralizer_order();
        SymClass { cycle_type, size }
    }
}

/// Memo for the rim-hook recursion, keyed by the remaining shape and the
/// remaining cycle parts (consumed from the largest).
#[derive(Default)]
pub struct MnCache {
    memo: HashMap<(Partition, Vec<usize>), i64>,
}

impl MnCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(&mut self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        if lambda.size() != mu.size() {
            return Err(Error::SizeMismatch(lambda.size(), mu.size()));
        }
        Ok(self.recurse(lambda, mu.parts()))
    }

    fn recurse(&mut self, lambda: &Partition, cycles: &[usize]) -> i64 {
        let Some((&k, rest)) = cycles.split_first() else {
            return 1;
        };
        if rest.is_empty() && k == lambda.size() {
            // A single cycle: nonzero only on hooks.
            return match lambda.parts().get(1) {
                None => 1,
                Some(_) if lambda.parts()[1..].iter().all(|&x| x == 1) => {
                    if (lambda.len() - 1).is_multiple_of(2) {
                        1
                    } else {
                        -1
                    }
                }
                Some(_) => 0,
            };
        }
        let key = (lambda.clone(), cycles.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for (smaller, leg) in rim_hooks(lambda, k) {
            let v = self.recurse(&smaller, rest);
            total += if leg % 2 == 0 { v } else { -v };
        }
        self.memo.insert(key, total);
        total
    }
}

/// `χ_λ` on the class of cycle type `μ`.
pub fn mn_value(lambda: &Partition, mu: &Partition) -> Result<i64> {
    MnCache::new().value(lambda, mu)
}

/// Classes of `S_n` in the order of `Partition::all`.
pub fn sym_classes(n: usize) -> Vec<SymClass> {
    Partition::all(n).into_iter().map(SymClass::new).collect()
}

pub fn p_regular_classes(n: usize, p: usize) -> Vec<SymClass> {
    sym_classes(n).into_iter().filter(|c| c.cycle_type.is_p_regular(p)).collect()
}

#[derive(Clone, Debug)]
pub struct SymCharTable {
    n: usize,
    characters: Vec<Partition>,
    classes: Vec<SymClass>,
    values: Vec<Vec<i64>>,
}

pub fn sym_table(n: usize) -> SymCharTable {
    let characters = Partition::all(n);
    let classes = sym_classes(n);
    let mut cache = MnCache::new();
    let values = characters
        .iter()
        .map(|l| {
            classes
                .iter()
                .map(|c| cache.value(l, &c.cycle_type).expect("same size"))
                .collect()
        })
        .collect();
    SymCharTable { n, characters, classes, values }
}

impl SymCharTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> BigInt {
        factorial(self.n)
    }

    pub fn characters(&self) -> &[Partition] {
        &self.characters
    }

    pub fn classes(&self) -> &[SymClass] {
        &self.classes
    }

    pub fn value(&self, chi: usize, class: usize) -> i64 {
        self.values[chi][class]
    }

    pub fn character_index(&self, lambda: &Partition) -> Option<usize> {
        self.characters.iter().position(|l| l == lambda)
    }

    pub fn class_index(&self, mu: &Partition) -> Option<usize> {
        self.classes.iter().position(|c| &c.cycle_type == mu)
    }

    pub fn p_regular_class_indices(&self, p: usize) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&j| self.classes[j].cycle_type.is_p_regular(p))
            .collect()
    }

    /// `(1/|G|) Σ_{g ∈ C} χ(g) ψ(g)` over the listed classes.
    pub fn inner_product(&self, chi: usize, psi: usize, classes: &[usize]) -> Rational {
        let sum: BigInt = classes
            .iter()
            .map(|&j| &self.classes[j].size * (self.values[chi][j] * self.values[psi][j]))
            .sum();
        Rational::new(sum, self.order())
    }

    /// Rows `chars`, columns `classes`.
    pub fn value_matrix(&self, chars: &[usize], classes: &[usize]) -> RatMatrix {
        RatMatrix::from_fn(chars.len(), classes.len(), |i, j| {
            Rational::from_integer(self.values[chars[i]][classes[j]].into())
        })
    }

    /// Both orthogonality relations, checked exactly.
    pub fn verify_orthogonality(&self) -> bool {
        let all: Vec<usize> = (0..self.classes.len()).collect();
        let k = self.characters.len();
        let first = (0..k).all(|i| {
            (i..k).all(|j| {
                let ip = self.inner_product(i, j, &all);
                if i == j {
                    ip.is_one()
                } else {
                    ip.is_zero()
                }
            })
        });
        let second = (0..k).all(|a| {
            (a..k).all(|b| {
                let s: i64 = (0..k).map(|i| self.values[i][a] * self.values[i][b]).sum();
                let expect = if a == b { self.classes[a].cycle_type.centralizer_order() } else { BigInt::zero() };
                BigInt::from(s) == expect
            })
        });
        first && second
    }

    pub fn write_csv<W: io::Write>(&self, out: W) -> Result<()> {
        let header = self.classes.iter().map(|c| c.cycle_type.to_string());
        let rows = self
            .characters
            .iter()
            .zip(&self.values)
            .map(|(l, r)| (l.to_string(), r.iter().map(|v| v.to_string()).collect()));
        crate::write_table_csv(out, header, rows)
    }
}

/// Connected components of the graph joining characters with nonzero inner
/// product over `classes`. Components and their members are sorted by index.
pub fn c_blocks(gram: impl Fn(usize, usize) -> bool, count: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..count).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for i in 0..count {
        for j in i + 1..count {
            if gram(i, j) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..count {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    groups.into_values().collect()
}

pub fn sym_c_blocks(table: &SymCharTable, classes: &[usize]) -> Vec<Vec<usize>> {
    c_blocks(
        |i, j| !table.inner_product(i, j, classes).is_zero(),
        table.characters().len(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDescriptor {
    pub p: usize,
    pub core: Partition,
    pub weight: usize,
    pub members: Vec<Partition>,
}

impl BlockDescriptor {
    pub fn n(&self) -> usize {
        self.core.size() + self.p * self.weight
    }

    /// The block containing `λ`.
    pub fn of(lambda: &Partition, p: usize) -> Self {
        let core = p_core(lambda, p);
        let weight = (lambda.size() - core.size()) / p;
        let members = Partition::all(lambda.size())
            .into_iter()
            .filter(|m| p_core(m, p) == core)
            .collect();
        BlockDescriptor { p, core, weight, members }
    }
}

/// Partitions of `n` grouped by p-core, in order of first appearance.
pub fn p_blocks(n: usize, p: usize) -> Vec<BlockDescriptor> {
    let mut out: Vec<BlockDescriptor> = Vec::new();
    for lambda in Partition::all(n) {
        let core = p_core(&lambda, p);
        match out.iter_mut().find(|b| b.core == core) {
            Some(b) => b.members.push(lambda),
            None => {
                let weight = (n - core.size()) / p;
                out.push(BlockDescriptor { p, core, weight, members: vec![lambda] });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn s3_table() {
        let t = sym_table(3);
        let degrees: Vec<i64> = (0..3).map(|i| t.value(i, t.class_index(&p("1,1,1")).unwrap())).collect();
        assert_eq!(degrees, vec![1, 2, 1]);
        assert_eq!(mn_value(&p("2,1"), &p("3")).unwrap(), -1);
        assert!(t.verify_orthogonality());
    }

    #[test]
    fn trivial_and_sign() {
        for mu in Partition::all(6) {
            assert_eq!(mn_value(&p("6"), &mu).unwrap(), 1);
            assert_eq!(mn_value(&Partition::column(6), &mu).unwrap(), mu.class_sign());
        }
        assert!(mn_value(&p("3"), &p("2")).is_err());
    }

    #[test]
    fn restricted_inner_products() {
        let t = sym_table(3);
        let chi = t.character_index(&p("2,1")).unwrap();
        let reg = t.p_regular_class_indices(3);
        assert_eq!(t.inner_product(chi, chi, &reg), ratio(2, 3));
        assert!(t.inner_product(chi, chi, &[]).is_zero());
    }

    #[test]
    fn regular_class_counts() {
        let cls: Vec<Partition> = p_regular_classes(3, 3).into_iter().map(|c| c.cycle_type).collect();
        assert_eq!(cls, vec![p("2,1"), p("1,1,1")]);
        assert_eq!(p_regular_classes(6, 3).len(), 7);
        assert_eq!(p_regular_classes(5, 5).len(), 6);
    }

    #[test]
    fn blocks_small() {
        let b = p_blocks(3, 3);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].weight, 1);
        assert_eq!(b[0].members.len(), 3);
        let sizes: Vec<usize> = p_blocks(4, 3).iter().map(|b| b.core.size()).collect();
        assert!(sizes.iter().all(|&s| s == 1 || s == 4));
        for b in p_blocks(9, 3) {
            assert_eq!(b.n(), 9);
        }
    }

    #[test]
    fn full_class_set_gives_singletons() {
        let t = sym_table(5);
        let all: Vec<usize> = (0..t.classes().len()).collect();
        assert!(sym_c_blocks(&t, &all).iter().all(|b| b.len() == 1));
    }
}
