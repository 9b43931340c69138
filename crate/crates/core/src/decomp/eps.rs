use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use super::LabeledIntMatrix;
use crate::error::{Error, Result};
use crate::intlinalg::{inverse, is_unimodular, permutation_matrix, permutation_of, IntMatrix};
use crate::partitions::Partition;

/// Involutions on the rows and columns of `D_B` with
/// `d[π(i)][σ(j)] = d[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EpsPairing {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl EpsPairing {
    pub fn fixed_rows(&self) -> Vec<usize> {
        (0..self.rows.len()).filter(|&i| self.rows[i] == i).collect()
    }

    pub fn fixed_cols(&self) -> Vec<usize> {
        (0..self.cols.len()).filter(|&j| self.cols[j] == j).collect()
    }
}

/// `λ ↦ λ*` on rows labelled by partitions.
pub fn eps_row_permutation(d_b: &LabeledIntMatrix) -> Result<Vec<usize>> {
    let parts: Vec<Partition> = d_b.row_labels.iter().map(|l| l.parse()).collect::<Result<_>>()?;
    parts
        .iter()
        .map(|l| {
            let c = l.conjugate();
            parts
                .iter()
                .position(|m| *m == c)
                .ok_or_else(|| Error::LabelMismatch(format!("row {l} present but {c} missing")))
        })
        .collect()
}

/// Square, nonnegative and unimodular, as `D_B` must be.
pub fn check_d_b(d_b: &LabeledIntMatrix) -> Result<()> {
    if d_b.rows() != d_b.cols() {
        return Err(Error::Dimension(format!("D_B is {}x{}", d_b.rows(), d_b.cols())));
    }
    if !d_b.is_nonnegative() {
        return Err(Error::MatrixFormat("decomposition numbers must be nonnegative".into()));
    }
    if !is_unimodular(&d_b.entries) {
        return Err(Error::MatrixFormat("D_B is not unimodular".into()));
    }
    Ok(())
}

/// Solves `Q^{-1} = D_B^{-1} P D_B` and reads the column involution off `Q`.
pub fn eps_column_action(d_b: &LabeledIntMatrix, row_perm: &[usize]) -> Result<EpsPairing> {
    let n = d_b.rows();
    if d_b.cols() != n || row_perm.len() != n {
        return Err(Error::Dimension(format!("D_B is {}x{}, row permutation has {}", n, d_b.cols(), row_perm.len())));
    }
    let p = permutation_matrix(row_perm);
    if permutation_of(&p).as_deref() != Some(row_perm) {
        return Err(Error::NotPermutation("row action".into()));
    }
    let d = d_b.entries.to_rational();
    let d_inv = inverse(&d).ok_or_else(|| Error::NotPermutation("D_B is singular".into()))?;
    let q_inv = d_inv.mul(&p.to_rational())?.mul(&d)?;
    let mut q_int = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let x = q_inv.get(i, j);
            if !x.is_integer() {
                return Err(Error::NotPermutation(format!("Q^-1 has entry {x}")));
            }
            q_int.set(i, j, x.to_integer());
        }
    }
    // Q^{-1}[i][τ(i)] = 1, so Q[τ(i)][i] = 1 and d[i][j] = d[π(i)][τ(j)].
    let tau = permutation_of(&q_int).ok_or_else(|| Error::NotPermutation("Q is not a permutation matrix".into()))?;
    for i in 0..n {
        for j in 0..n {
            if d_b.get(i, j) != d_b.get(row_perm[i], tau[j]) {
                return Err(Error::NotPermutation(format!("D_B is not equivariant at ({i},{j})")));
            }
        }
    }
    Ok(EpsPairing { rows: row_perm.to_vec(), cols: tau })
}

/// `D_{n,p}`: ε-fixed rows against ε-fixed columns.
pub fn extract_dnp(d_b: &LabeledIntMatrix, pairing: &EpsPairing) -> LabeledIntMatrix {
    d_b.select(&pairing.fixed_rows(), &pairing.fixed_cols())
}

fn split_labels(label: &str) -> [String; 2] {
    [format!("{label}+"), format!("{label}-")]
}

/// Representative of a row pair: the larger partition when both labels
/// parse, else the one listed first.
fn pair_rep(labels: &[String], i: usize, j: usize) -> usize {
    match (labels[i].parse::<Partition>(), labels[j].parse::<Partition>()) {
        (Ok(a), Ok(b)) => {
            if a >= b {
                i
            } else {
                j
            }
        }
        _ => i.min(j),
    }
}

/// Layout of the `A_n` matrix: for each S_n index, its output position(s).
struct Layout {
    labels: Vec<String>,
    /// `(+ position, − position)` for fixed indices, the single position
    /// (shared by both members) for a pair.
    slots: Vec<Slot>,
}

#[derive(Clone, Copy)]
enum Slot {
    Split(usize, usize),
    Pair(usize),
}

fn layout(labels: &[String], perm: &[usize], pick_rep: bool) -> Layout {
    let mut out = Vec::new();
    let mut slots = vec![Slot::Pair(usize::MAX); labels.len()];
    for i in 0..labels.len() {
        let j = perm[i];
        if j == i {
            let [a, b] = split_labels(&labels[i]);
            slots[i] = Slot::Split(out.len(), out.len() + 1);
            out.push(a);
            out.push(b);
        } else if i < j {
            let rep = if pick_rep { pair_rep(labels, i, j) } else { i };
            slots[i] = Slot::Pair(out.len());
            slots[j] = Slot::Pair(out.len());
            out.push(labels[rep].clone());
        }
    }
    Layout { labels: out, slots }
}

/// `D_{B_∅,A_n}` from `D_B` and the split data `D'_{n,p}`, whose rows and
/// columns are `<label>+`, `<label>-` for the fixed rows and columns of `D_B`.
pub fn transfer_to_alternating(
    d_b: &LabeledIntMatrix,
    pairing: &EpsPairing,
    d_prime: &LabeledIntMatrix,
) -> Result<LabeledIntMatrix> {
    let rows = layout(&d_b.row_labels, &pairing.rows, true);
    let cols = layout(&d_b.col_labels, &pairing.cols, false);
    let prime_row = |label: &str| {
        d_prime
            .row_index(label)
            .ok_or_else(|| Error::LabelMismatch(format!("D' has no row {label}")))
    };
    let prime_col = |label: &str| {
        d_prime
            .col_index(label)
            .ok_or_else(|| Error::LabelMismatch(format!("D' has no column {label}")))
    };
    let expected = 2 * pairing.fixed_rows().len();
    if d_prime.rows() != expected || d_prime.cols() != 2 * pairing.fixed_cols().len() {
        return Err(Error::LabelMismatch(format!(
            "D' is {}x{}, expected {}x{}",
            d_prime.rows(),
            d_prime.cols(),
            expected,
            2 * pairing.fixed_cols().len()
        )));
    }

    let mut out = IntMatrix::zeros(rows.labels.len(), cols.labels.len());
    let (n_r, n_c) = (d_b.rows(), d_b.cols());
    for i in 0..n_r {
        for j in 0..n_c {
            let d = d_b.get(i, j);
            match (rows.slots[i], cols.slots[j]) {
                (Slot::Split(rp, rm), Slot::Split(cp, cm)) => {
                    let [lp, lm] = split_labels(&d_b.row_labels[i]);
                    let [mp, mm] = split_labels(&d_b.col_labels[j]);
                    let (a_rp, a_rm) = (prime_row(&lp)?, prime_row(&lm)?);
                    let (a_cp, a_cm) = (prime_col(&mp)?, prime_col(&mm)?);
                    let a = d_prime.get(a_rp, a_cp);
                    let b = d_prime.get(a_rp, a_cm);
                    let shaped = d_prime.get(a_rm, a_cm) == a && d_prime.get(a_rm, a_cp) == b;
                    if !shaped || a.is_negative() || b.is_negative() || &(a + b) != d {
                        return Err(Error::BlockConstraint(format!(
                            "block ({}, {}) of D' must be [[a,b],[b,a]] with a+b = {d}",
                            d_b.row_labels[i], d_b.col_labels[j]
                        )));
                    }
                    out.set(rp, cp, a.clone());
                    out.set(rp, cm, b.clone());
                    out.set(rm, cp, b.clone());
                    out.set(rm, cm, a.clone());
                }
                (Slot::Split(rp, rm), Slot::Pair(c)) => {
                    out.set(rp, c, d.clone());
                    out.set(rm, c, d.clone());
                }
                (Slot::Pair(r), Slot::Split(cp, cm)) => {
                    if rows.labels[r] == d_b.row_labels[i] {
                        out.set(r, cp, d.clone());
                        out.set(r, cm, d.clone());
                    }
                }
                (Slot::Pair(r), Slot::Pair(c)) => {
                    if rows.labels[r] == d_b.row_labels[i] {
                        let sum: BigInt = out.get(r, c) + d;
                        out.set(r, c, sum);
                    }
                }
            }
        }
    }
    LabeledIntMatrix::new(rows.labels, cols.labels, out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationViolation {
    /// `i`, `ii` or `iii`.
    pub identity: &'static str,
    pub row: String,
    pub col: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationsReport {
    pub checked: usize,
    pub violations: Vec<RelationViolation>,
}

impl RelationsReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the identities linking `D_B`, its ε-pairing and an `A_n` matrix in
/// the layout produced by [`transfer_to_alternating`].
pub fn relations_check(sym: &LabeledIntMatrix, alt: &LabeledIntMatrix, pairing: &EpsPairing) -> RelationsReport {
    let mut report = RelationsReport { checked: 0, violations: Vec::new() };
    let flag = |report: &mut RelationsReport, identity: &'static str, row: &str, col: &str, ok: bool, detail: String| {
        report.checked += 1;
        if !ok {
            report.violations.push(RelationViolation { identity, row: row.into(), col: col.into(), detail });
        }
    };
    let rows = layout(&sym.row_labels, &pairing.rows, true);
    let cols = layout(&sym.col_labels, &pairing.cols, false);
    let zero = BigInt::from(0);
    let at = |r: usize, c: usize| -> &BigInt {
        alt.row_index(&rows.labels[r])
            .zip(alt.col_index(&cols.labels[c]))
            .map(|(i, j)| alt.get(i, j))
            .unwrap_or(&zero)
    };
    for l in rows.labels.iter() {
        flag(&mut report, "labels", l, "", alt.row_index(l).is_some(), "row missing".into());
    }
    for l in cols.labels.iter() {
        flag(&mut report, "labels", "", l, alt.col_index(l).is_some(), "column missing".into());
    }

    for i in 0..sym.rows() {
        for j in 0..sym.cols() {
            let (rl, cl) = (&sym.row_labels[i], &sym.col_labels[j]);
            let d = sym.get(i, j);
            let mirror = sym.get(pairing.rows[i], pairing.cols[j]);
            flag(&mut report, "i", rl, cl, d == mirror, format!("d = {d}, ε-image {mirror}"));
            match (rows.slots[i], cols.slots[j]) {
                (Slot::Split(rp, rm), Slot::Split(cp, cm)) => {
                    let (pp, pm, mp, mm) = (at(rp, cp), at(rp, cm), at(rm, cp), at(rm, cm));
                    flag(&mut report, "ii", rl, cl, &(pp + mp) == d, format!("{pp} + {mp} != {d}"));
                    flag(&mut report, "ii", rl, cl, &(pm + mm) == d, format!("{pm} + {mm} != {d}"));
                    flag(&mut report, "ii", rl, cl, pp == mm, format!("{pp} != {mm} on the diagonal"));
                    flag(&mut report, "ii", rl, cl, pm == mp, format!("{pm} != {mp} off the diagonal"));
                }
                (Slot::Split(rp, rm), Slot::Pair(c)) => {
                    for r in [rp, rm] {
                        let v = at(r, c);
                        flag(&mut report, "ii", &rows.labels[r], &cols.labels[c], v == d, format!("{v} != {d}"));
                    }
                }
                (Slot::Pair(r), Slot::Split(cp, cm)) => {
                    if rows.labels[r] == *rl {
                        for c in [cp, cm] {
                            let v = at(r, c);
                            flag(&mut report, "iii", rl, &cols.labels[c], v == d, format!("{v} != {d}"));
                        }
                    }
                }
                (Slot::Pair(r), Slot::Pair(c)) => {
                    if rows.labels[r] == *rl && cols.labels[c] == *cl {
                        let e = sym.get(i, pairing.cols[j]);
                        let v = at(r, c);
                        flag(&mut report, "iii", rl, cl, v == &(d + e), format!("{v} != {d} + {e}"));
                    }
                }
            }
        }
    }
    report
}
