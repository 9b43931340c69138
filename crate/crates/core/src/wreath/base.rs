use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{rat, Cyclotomic};

/// A small base group given by its character table.
#[derive(Clone, Debug, Serialize)]
pub struct BaseGroupData {
    pub name: String,
    pub order: usize,
    pub class_labels: Vec<String>,
    pub centralizers: Vec<usize>,
    pub element_orders: Vec<usize>,
    /// Characters × classes.
    #[serde(skip)]
    pub table: Vec<Vec<Cyclotomic>>,
    pub cyclotomic_order: u32,
    /// Class whose coordinate is required empty in `C_∅` (or `D_∅`).
    pub distinguished: Option<usize>,
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn check_odd_prime(p: usize) -> Result<()> {
    if p % 2 == 1 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p))
    }
}

/// `(p+1)/2`, 1-based.
pub fn middle_runner(p: usize) -> usize {
    p.div_ceil(2)
}

impl BaseGroupData {
    pub fn class_count(&self) -> usize {
        self.class_labels.len()
    }

    pub fn class_size(&self, i: usize) -> usize {
        self.order / self.centralizers[i]
    }

    pub fn degree(&self, chi: usize) -> usize {
        self.table[chi][0]
            .to_rational()
            .and_then(|r| r.to_integer().try_into().ok())
            .expect("degrees are positive integers")
    }
}

/// `N = Z_p ⋊ Z_{p-1}`. Classes: identity, then `b^1 … b^{p-2}` for a
/// generator `b` of the complement, then the p-cycle. Characters: `ψ_r` of
/// degree `p-1` at position `r = (p+1)/2`, and the lifts of the characters
/// `b ↦ ζ^j` of `Z_{p-1}` at the remaining positions in order of `j`.
pub fn base_group_n(p: usize) -> Result<BaseGroupData> {
    check_odd_prime(p)?;
    let m = (p - 1) as u32;
    let r = middle_runner(p) - 1;
    let mut class_labels = vec!["1".to_string()];
    let mut centralizers = vec![p * (p - 1)];
    let mut element_orders = vec![1];
    for k in 1..p - 1 {
        class_labels.push(format!("b^{k}"));
        centralizers.push(p - 1);
        element_orders.push((p - 1) / k.gcd(&(p - 1)));
    }
    class_labels.push("w".to_string());
    centralizers.push(p);
    element_orders.push(p);

    let mut table = Vec::with_capacity(p);
    let mut j = 0i64;
    for i in 0..p {
        if i == r {
            let mut row = vec![Cyclotomic::rational(m, rat((p - 1) as i64))];
            row.extend((1..p - 1).map(|_| Cyclotomic::zero(m)));
            row.push(Cyclotomic::rational(m, rat(-1)));
            table.push(row);
            continue;
        }
        let mut row = vec![Cyclotomic::one(m)];
        row.extend((1..p - 1).map(|k| Cyclotomic::zeta_pow(m, j * k as i64)));
        row.push(Cyclotomic::one(m));
        table.push(row);
        j += 1;
    }
    Ok(BaseGroupData {
        name: format!("N{p}"),
        order: p * (p - 1),
        class_labels,
        centralizers,
        element_orders,
        table,
        cyclotomic_order: m,
        distinguished: Some(p - 1),
    })
}

/// `Z_m` with classes `g^0 … g^{m-1}` and characters `g^k ↦ ζ^{jk}`.
/// The distinguished class is the identity.
pub fn base_group_cyclic(m: usize) -> BaseGroupData {
    let order = m as u32;
    let table = (0..m as i64)
        .map(|j| (0..m as i64).map(|k| Cyclotomic::zeta_pow(order, j * k)).collect())
        .collect();
    BaseGroupData {
        name: format!("Z{m}"),
        order: m,
        class_labels: (0..m).map(|k| format!("g^{k}")).collect(),
        centralizers: vec![m; m],
        element_orders: (0..m).map(|k| m / k.gcd(&m)).collect(),
        table,
        cyclotomic_order: order,
        distinguished: Some(0),
    }
}

/// `L = Z_p` with classes `ω^{i-1}`.
pub fn base_group_l(p: usize) -> Result<BaseGroupData> {
    check_odd_prime(p)?;
    let mut l = base_group_cyclic(p);
    l.name = format!("L{p}");
    Ok(l)
}
