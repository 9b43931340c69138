//! Decomposition-matrix bookkeeping for `S_n` and `A_n` relative to an
//! ε-stable basic set: expansion matrices, the ε-action on Brauer columns,
//! the transfer to `A_n`, its defining relations, and wedge shapes.
//!
//! Decomposition numbers are inputs. Column labels are opaque strings; the
//! ε-pairing of columns is always recomputed from the matrix itself.

mod eps;
mod wedge;

pub use eps::{
    check_d_b, eps_column_action, eps_row_permutation, extract_dnp, relations_check, transfer_to_alternating,
    EpsPairing, RelationViolation, RelationsReport,
};
pub use wedge::{reorder_alt, validate_wedge, wedge_shape, WedgeCertificate};

use std::collections::HashSet;
use std::fmt;
use std::io;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::basicsets::{verify_c_basic, BasicSetClaim};
use crate::error::{Error, Result};
use crate::intlinalg::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledIntMatrix {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    #[serde(serialize_with = "serialize_entries")]
    pub entries: IntMatrix,
}

fn serialize_entries<S: serde::Serializer>(m: &IntMatrix, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq((0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>()))
}

fn check_unique(labels: &[String], what: &str) -> Result<()> {
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(Error::LabelMismatch(format!("duplicate {what} label {l}")));
        }
    }
    Ok(())
}

impl LabeledIntMatrix {
    pub fn new(row_labels: Vec<String>, col_labels: Vec<String>, entries: IntMatrix) -> Result<Self> {
        if entries.rows() != row_labels.len() || entries.cols() != col_labels.len() {
            return Err(Error::Dimension(format!(
                "{}x{} entries for {} row and {} column labels",
                entries.rows(),
                entries.cols(),
                row_labels.len(),
                col_labels.len()
            )));
        }
        check_unique(&row_labels, "row")?;
        check_unique(&col_labels, "column")?;
        Ok(LabeledIntMatrix { row_labels, col_labels, entries })
    }

    pub fn from_i64(row_labels: &[&str], col_labels: &[&str], rows: &[Vec<i64>]) -> Result<Self> {
        let entries = IntMatrix::from_i64(rows, col_labels.len())?;
        Self::new(
            row_labels.iter().map(|s| s.to_string()).collect(),
            col_labels.iter().map(|s| s.to_string()).collect(),
            entries,
        )
    }

    pub fn rows(&self) -> usize {
        self.entries.rows()
    }

    pub fn cols(&self) -> usize {
        self.entries.cols()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        self.entries.get(i, j)
    }

    pub fn row_index(&self, label: &str) -> Option<usize> {
        self.row_labels.iter().position(|l| l == label)
    }

    pub fn col_index(&self, label: &str) -> Option<usize> {
        self.col_labels.iter().position(|l| l == label)
    }

    pub fn is_nonnegative(&self) -> bool {
        (0..self.rows()).all(|i| self.entries.row(i).iter().all(|x| !x.is_negative()))
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        LabeledIntMatrix {
            row_labels: rows.iter().map(|&i| self.row_labels[i].clone()).collect(),
            col_labels: cols.iter().map(|&j| self.col_labels[j].clone()).collect(),
            entries: self.entries.select(rows, cols),
        }
    }

    /// Reads the text format: `rows cols`, the row labels, the column labels,
    /// then the entries row by row. Tokens are whitespace-separated and `#`
    /// starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut tokens = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(str::split_whitespace);
        let bad = |m: &str| Error::MatrixFormat(m.to_string());
        let mut dim = || -> Result<usize> {
            tokens
                .next()
                .ok_or_else(|| bad("missing dimensions"))?
                .parse()
                .map_err(|_| bad("dimensions must be non-negative integers"))
        };
        let (r, c) = (dim()?, dim()?);
        let mut take = |k: usize, what: &str| -> Result<Vec<String>> {
            (0..k)
                .map(|_| tokens.next().map(str::to_string).ok_or_else(|| bad(&format!("missing {what}"))))
                .collect()
        };
        let row_labels = take(r, "row labels")?;
        let col_labels = take(c, "column labels")?;
        let raw = take(r * c, "entries")?;
        let mut entries = IntMatrix::zeros(r, c);
        for (k, s) in raw.iter().enumerate() {
            let v: BigInt = s.parse().map_err(|_| bad(&format!("entry {s} is not an integer")))?;
            entries.set(k / c.max(1), k % c.max(1), v);
        }
        if tokens.next().is_some() {
            return Err(bad("trailing tokens after entries"));
        }
        Self::new(row_labels, col_labels, entries)
    }

    pub fn write_csv<W: io::Write>(&self, out: W) -> Result<()> {
        let rows = self
            .row_labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), self.entries.row(i).iter().map(|x| x.to_string()).collect()));
        crate::write_table_csv(out, self.col_labels.iter().cloned(), rows)
    }
}

impl fmt::Display for LabeledIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows(), self.cols())?;
        writeln!(f, "{}", self.row_labels.join(" "))?;
        writeln!(f, "{}", self.col_labels.join(" "))?;
        for i in 0..self.rows() {
            let row: Vec<String> = self.entries.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// `P_B`: rows all characters, columns the members of a verified claim, with
/// `χ^C = Σ p_{χ,φ} φ^C`.
pub fn expansion_matrix(claim: &BasicSetClaim) -> Result<LabeledIntMatrix> {
    let verdict = verify_c_basic(claim, None)?;
    if !verdict.holds {
        return Err(Error::ClaimMismatch(format!("claim on {} does not verify", claim.group)));
    }
    let k = claim.members.len();
    let mut entries = IntMatrix::zeros(verdict.expansions.len(), k);
    for (i, e) in verdict.expansions.iter().enumerate() {
        if e.coefficients.len() != k {
            return Err(Error::Internal("expansion length".into()));
        }
        for (j, c) in e.coefficients.iter().enumerate() {
            if !c.is_zero() {
                entries.set(i, j, c.clone());
            }
        }
    }
    LabeledIntMatrix::new(
        verdict.expansions.iter().map(|e| e.character.to_string()).collect(),
        claim.members.iter().map(|m| m.to_string()).collect(),
        entries,
    )
}
