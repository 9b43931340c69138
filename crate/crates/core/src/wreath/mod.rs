//! Wreath products `H ≀ S_w` for a small base group `H`: classes labelled by
//! cycle structures, characters labelled by tuples of partitions, values via
//! the wreath Murnaghan–Nakayama rule.

mod base;

pub use base::{base_group_cyclic, base_group_l, base_group_n, middle_runner, BaseGroupData};

use std::collections::HashMap;
use std::io;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{coordinate_matrix, AlgValue, Cyclotomic, Rational};
use crate::intlinalg::RatMatrix;
use crate::partitions::{factorial, rim_hooks, MultiPartition, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WreathClass {
    /// `π_i` collects the cycles whose cycle product lies in base class `i`.
    pub tuple: MultiPartition,
    #[serde(serialize_with = "crate::serde_bigint")]
    pub centralizer: BigInt,
    #[serde(serialize_with = "crate::serde_bigint")]
    pub size: BigInt,
    pub element_order: usize,
}

pub fn wreath_order(base: &BaseGroupData, w: usize) -> BigInt {
    BigInt::from(base.order).pow(w as u32) * factorial(w)
}

pub fn wreath_class(base: &BaseGroupData, tuple: MultiPartition) -> WreathClass {
    let w = tuple.size();
    let mut centralizer = BigInt::one();
    let mut element_order = 1usize;
    for (i, pi) in tuple.components().iter().enumerate() {
        for (k, m) in pi.multiplicities() {
            centralizer *= factorial(m) * BigInt::from(k * base.centralizers[i]).pow(m as u32);
            element_order = element_order.lcm(&(k * base.element_orders[i]));
        }
    }
    let size = wreath_order(base, w) / &centralizer;
    WreathClass { tuple, centralizer, size, element_order }
}

pub fn wreath_classes(base: &BaseGroupData, w: usize) -> Vec<WreathClass> {
    MultiPartition::all(base.class_count(), w)
        .into_iter()
        .map(|t| wreath_class(base, t))
        .collect()
}

/// Classes with an empty coordinate at the base group's distinguished class.
pub fn c_empty(base: &BaseGroupData, w: usize) -> Vec<WreathClass> {
    let d = base.distinguished.expect("base group has a distinguished class");
    wreath_classes(base, w)
        .into_iter()
        .filter(|c| c.tuple.component(d).is_empty())
        .collect()
}

/// Conjugates coordinate `r = (p+1)/2` of a `p`-tuple.
pub fn tilde(alpha: &MultiPartition) -> MultiPartition {
    let r = middle_runner(alpha.arity()) - 1;
    alpha.with_component(r, alpha.component(r).conjugate())
}

/// Which cycle the recursion removes first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PeelOrder {
    LongestFirst,
    ShortestFirst,
}

/// Memoized evaluator of `χ^α(π)`.
pub struct WreathMn<'a> {
    base: &'a BaseGroupData,
    order: PeelOrder,
    memo: HashMap<(MultiPartition, MultiPartition), Cyclotomic>,
}

impl<'a> WreathMn<'a> {
    pub fn new(base: &'a BaseGroupData, order: PeelOrder) -> Self {
        WreathMn { base, order, memo: HashMap::new() }
    }

    pub fn value(&mut self, alpha: &MultiPartition, class: &MultiPartition) -> Result<Cyclotomic> {
        let s = self.base.class_count();
        if alpha.arity() != s || class.arity() != s {
            return Err(Error::QuotientArity { got: alpha.arity().min(class.arity()), expected: s });
        }
        if alpha.size() != class.size() {
            return Err(Error::SizeMismatch(alpha.size(), class.size()));
        }
        Ok(self.recurse(alpha, class))
    }

    fn pick_cycle(&self, class: &MultiPartition) -> Option<(usize, usize, usize)> {
        // (coordinate, position within it, length)
        let mut best: Option<(usize, usize, usize)> = None;
        for (j, pi) in class.components().iter().enumerate() {
            for (pos, &k) in pi.parts().iter().enumerate() {
                let better = match (best, self.order) {
                    (None, _) => true,
                    (Some((_, _, b)), PeelOrder::LongestFirst) => k > b,
                    (Some((_, _, b)), PeelOrder::ShortestFirst) => k < b,
                };
                if better {
                    best = Some((j, pos, k));
                }
            }
        }
        best
    }

    fn recurse(&mut self, alpha: &MultiPartition, class: &MultiPartition) -> Cyclotomic {
        let m = self.base.cyclotomic_order;
        let Some((j, pos, k)) = self.pick_cycle(class) else {
            return Cyclotomic::one(m);
        };
        let key = (alpha.clone(), class.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut parts = class.component(j).parts().to_vec();
        parts.remove(pos);
        let rest = class.with_component(j, Partition::from_unsorted(parts));
        let mut total = Cyclotomic::zero(m);
        for s in 0..alpha.arity() {
            let psi = &self.base.table[s][j];
            if psi.is_zero() {
                continue;
            }
            for (smaller, leg) in rim_hooks(alpha.component(s), k) {
                let v = self.recurse(&alpha.with_component(s, smaller), &rest);
                let term = psi.mul(&v).expect("same order");
                total = if leg % 2 == 0 { total.add(&term) } else { total.sub(&term) }.expect("same order");
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

pub fn wreath_char_value(base: &BaseGroupData, alpha: &MultiPartition, class: &MultiPartition) -> Result<Cyclotomic> {
    WreathMn::new(base, PeelOrder::LongestFirst).value(alpha, class)
}

/// `w!·Π ψ_i(1)^{|α^i|} f^{α^i} / |α^i|!`.
pub fn wreath_degree(base: &BaseGroupData, alpha: &MultiPartition) -> BigInt {
    let mut num = factorial(alpha.size());
    for (i, a) in alpha.components().iter().enumerate() {
        num *= BigInt::from(base.degree(i)).pow(a.size() as u32) * a.num_standard_tableaux();
        num /= factorial(a.size());
    }
    num
}

#[derive(Clone, Debug)]
pub struct WreathTable {
    base: BaseGroupData,
    w: usize,
    characters: Vec<MultiPartition>,
    classes: Vec<WreathClass>,
    values: Vec<Vec<Cyclotomic>>,
}

pub fn wreath_table(base: &BaseGroupData, w: usize) -> WreathTable {
    let characters = MultiPartition::all(base.class_count(), w);
    let classes = wreath_classes(base, w);
    let mut mn = WreathMn::new(base, PeelOrder::LongestFirst);
    let values = characters
        .iter()
        .map(|a| classes.iter().map(|c| mn.recurse(a, &c.tuple)).collect())
        .collect();
    WreathTable { base: base.clone(), w, characters, classes, values }
}

impl WreathTable {
    pub fn base(&self) -> &BaseGroupData {
        &self.base
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn order(&self) -> BigInt {
        wreath_order(&self.base, self.w)
    }

    pub fn characters(&self) -> &[MultiPartition] {
        &self.characters
    }

    pub fn classes(&self) -> &[WreathClass] {
        &self.classes
    }

    pub fn value(&self, chi: usize, class: usize) -> &Cyclotomic {
        &self.values[chi][class]
    }

    pub fn character_index(&self, alpha: &MultiPartition) -> Option<usize> {
        self.characters.iter().position(|a| a == alpha)
    }

    pub fn class_index(&self, tuple: &MultiPartition) -> Option<usize> {
        self.classes.iter().position(|c| &c.tuple == tuple)
    }

    /// Indices of the classes in `C_∅` (`D_∅` for a cyclic base).
    pub fn c_empty_indices(&self) -> Vec<usize> {
        let d = self.base.distinguished.expect("distinguished class");
        (0..self.classes.len())
            .filter(|&j| self.classes[j].tuple.component(d).is_empty())
            .collect()
    }

    pub fn p_regular_indices(&self, p: usize) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&j| !self.classes[j].element_order.is_multiple_of(p))
            .collect()
    }

    pub fn inner_product(&self, chi: usize, psi: usize, classes: &[usize]) -> Result<Rational> {
        let mut sum = Cyclotomic::zero(self.base.cyclotomic_order);
        for &j in classes {
            let t = self.values[chi][j].mul(&self.values[psi][j].conj())?;
            sum = sum.add(&t.scale(&Rational::from_integer(self.classes[j].size.clone())))?;
        }
        let total = sum.to_rational().ok_or_else(|| Error::Irrational(sum.to_string()))?;
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
        let m = self.base.cyclotomic_order;
        for a in 0..k {
            for b in a..k {
                let mut s = Cyclotomic::zero(m);
                for row in &self.values {
                    s = s.add(&row[a].mul(&row[b].conj())?)?;
                }
                let expect = if a == b { self.classes[a].centralizer.clone() } else { BigInt::zero() };
                if s != Cyclotomic::rational(m, Rational::from_integer(expect)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn value_matrix(&self, chars: &[usize], classes: &[usize]) -> Result<RatMatrix> {
        let rows: Vec<Vec<AlgValue>> = chars
            .iter()
            .map(|&i| classes.iter().map(|&j| AlgValue::Cyclotomic(self.values[i][j].clone())).collect())
            .collect();
        coordinate_matrix(&rows, classes.len())
    }

    pub fn write_csv<W: io::Write>(&self, out: W) -> Result<()> {
        let header = self.classes.iter().map(|c| c.tuple.to_string());
        let rows = self
            .characters
            .iter()
            .zip(&self.values)
            .map(|(a, r)| (a.to_string(), r.iter().map(|v| v.to_string()).collect()));
        crate::write_table_csv(out, header, rows)
    }
}

/// Whether `χ^α` is constant on the classes of `Z_p^w ⊆ N^w`: tuples made
/// of 1-cycles whose cycle products are the identity or the p-cycle.
pub fn kernel_contains_base_p_part(table: &WreathTable, alpha: &MultiPartition) -> Result<bool> {
    let chi = table
        .character_index(alpha)
        .ok_or_else(|| Error::ClaimMismatch(format!("{alpha} is not a character label")))?;
    let s = table.base.class_count();
    let p_class = table.base.distinguished.expect("N has the p-cycle class");
    let identity = MultiPartition::empty(s).with_component(0, Partition::column(table.w));
    let one = table.class_index(&identity).expect("identity class");
    let degree = table.value(chi, one);
    for (j, c) in table.classes.iter().enumerate() {
        let in_p = c.tuple.components().iter().enumerate().all(|(i, pi)| {
            pi.is_empty() || ((i == 0 || i == p_class) && pi.parts().iter().all(|&x| x == 1))
        });
        if in_p && table.value(chi, j) != degree {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> MultiPartition {
        s.parse().unwrap()
    }

    #[test]
    fn class_counts_and_sizes() {
        let n3 = base_group_n(3).unwrap();
        assert_eq!(wreath_classes(&n3, 1).len(), 3);
        assert_eq!(wreath_classes(&n3, 2).len(), 9);
        for w in 0..=3 {
            let total: BigInt = wreath_classes(&n3, w).iter().map(|c| c.size.clone()).sum();
            assert_eq!(total, wreath_order(&n3, w));
        }
        assert_eq!(c_empty(&n3, 1).len(), 2);
    }

    #[test]
    fn trivial_character() {
        let n5 = base_group_n(5).unwrap();
        let t = wreath_table(&n5, 2);
        let triv = t.character_index(&mp("(2|-|-|-|-)")).unwrap();
        for j in 0..t.classes().len() {
            assert!(t.value(triv, j).to_rational().is_some_and(|v| v.is_one()));
        }
    }

    #[test]
    fn degrees_match_formula() {
        let n3 = base_group_n(3).unwrap();
        let t = wreath_table(&n3, 3);
        let one = t.class_index(&mp("(1,1,1|-|-)")).unwrap();
        let mut sum = BigInt::zero();
        for (i, a) in t.characters().iter().enumerate() {
            let d = wreath_degree(&n3, a);
            assert_eq!(t.value(i, one).to_rational(), Some(Rational::from_integer(d.clone())));
            sum += &d * &d;
        }
        assert_eq!(sum, t.order());
    }

    #[test]
    fn small_tables_orthogonal() {
        let n3 = base_group_n(3).unwrap();
        for w in 1..=2 {
            assert!(wreath_table(&n3, w).verify_orthogonality().unwrap());
        }
        assert!(wreath_table(&base_group_n(5).unwrap(), 1).verify_orthogonality().unwrap());
        assert!(wreath_table(&base_group_l(3).unwrap(), 2).verify_orthogonality().unwrap());
    }

    #[test]
    fn tilde_map() {
        assert_eq!(tilde(&mp("(1|2|-)")), mp("(1|1,1|-)"));
        let a = mp("(2,1|-|1)");
        assert_eq!(tilde(&a), a);
        let b = mp("(-|-|3|1|-)");
        assert_eq!(tilde(&tilde(&b)), b);
        assert_eq!(tilde(&b), mp("(-|-|1,1,1|1|-)"));
    }

    #[test]
    fn kernel_of_p_part() {
        let n3 = base_group_n(3).unwrap();
        for w in 1..=3 {
            let t = wreath_table(&n3, w);
            for a in t.characters() {
                let expect = a.component(1).is_empty();
                assert_eq!(kernel_contains_base_p_part(&t, a).unwrap(), expect, "{a}");
            }
        }
        let t0 = wreath_table(&n3, 0);
        assert!(kernel_contains_base_p_part(&t0, &MultiPartition::empty(3)).unwrap());
    }

    #[test]
    fn peel_order_independent() {
        let n3 = base_group_n(3).unwrap();
        let t = wreath_table(&n3, 3);
        let mut alt = WreathMn::new(&n3, PeelOrder::ShortestFirst);
        for (i, a) in t.characters().iter().enumerate() {
            for (j, c) in t.classes().iter().enumerate() {
                assert_eq!(&alt.value(a, &c.tuple).unwrap(), t.value(i, j));
            }
        }
    }

    #[test]
    fn size_mismatch() {
        let n3 = base_group_n(3).unwrap();
        assert_eq!(
            wreath_char_value(&n3, &mp("(1|-|-)"), &mp("(1,1|-|-)")),
            Err(Error::SizeMismatch(1, 2))
        );
    }
}
