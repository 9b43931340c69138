use std::collections::HashSet;

use num_traits::{One, Zero};
use serde::Serialize;

use super::LabeledIntMatrix;
use crate::error::{Error, Result};

/// Row and column orders putting a matrix in lower unitriangular form. Rows
/// beyond the number of columns come last, in any order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WedgeCertificate {
    pub row_order: Vec<usize>,
    pub col_order: Vec<usize>,
}

/// Entrywise check of a certificate.
pub fn validate_wedge(m: &LabeledIntMatrix, cert: &WedgeCertificate) -> bool {
    let (r, c) = (m.rows(), m.cols());
    let is_perm = |v: &[usize], n: usize| v.len() == n && v.iter().collect::<HashSet<_>>().len() == n && v.iter().all(|&x| x < n);
    if r < c || !is_perm(&cert.row_order, r) || !is_perm(&cert.col_order, c) {
        return false;
    }
    (0..c).all(|k| {
        let row = cert.row_order[k];
        (0..c).all(|l| {
            let x = m.get(row, cert.col_order[l]);
            match l.cmp(&k) {
                std::cmp::Ordering::Equal => x.is_one(),
                std::cmp::Ordering::Greater => x.is_zero(),
                std::cmp::Ordering::Less => true,
            }
        })
    })
}

/// Rows whose entries on `cols` are a single 1 and zeros elsewhere, with the
/// column of the 1.
fn candidates(m: &LabeledIntMatrix, rows: &[usize], cols: &[usize]) -> Vec<(usize, usize)> {
    rows.iter()
        .filter_map(|&i| {
            let mut hit = None;
            for &j in cols {
                let x = m.get(i, j);
                if x.is_zero() {
                    continue;
                }
                if !x.is_one() || hit.is_some() {
                    return None;
                }
                hit = Some(j);
            }
            hit.map(|j| (i, j))
        })
        .collect()
}

const BACKTRACK_LIMIT: usize = 10;

/// Greedy peeling of rows with a single unit entry, with an exhaustive
/// search as fallback for at most ten columns.
pub fn wedge_shape(m: &LabeledIntMatrix) -> Option<WedgeCertificate> {
    if m.rows() < m.cols() {
        return None;
    }
    let greedy = peel(m, (0..m.rows()).collect(), (0..m.cols()).collect(), &mut Vec::new(), &mut Vec::new(), false, &mut HashSet::new());
    let cert = greedy.or_else(|| {
        (m.cols() <= BACKTRACK_LIMIT)
            .then(|| peel(m, (0..m.rows()).collect(), (0..m.cols()).collect(), &mut Vec::new(), &mut Vec::new(), true, &mut HashSet::new()))
            .flatten()
    })?;
    validate_wedge(m, &cert).then_some(cert)
}

fn peel(
    m: &LabeledIntMatrix,
    rows: Vec<usize>,
    cols: Vec<usize>,
    row_order: &mut Vec<usize>,
    col_order: &mut Vec<usize>,
    exhaustive: bool,
    dead: &mut HashSet<(Vec<usize>, Vec<usize>)>,
) -> Option<WedgeCertificate> {
    if cols.is_empty() {
        let mut ro = row_order.clone();
        ro.extend(rows);
        return Some(WedgeCertificate { row_order: ro, col_order: col_order.clone() });
    }
    if dead.contains(&(rows.clone(), cols.clone())) {
        return None;
    }
    let options = candidates(m, &rows, &cols);
    let tries = if exhaustive { options.len() } else { options.len().min(1) };
    for &(i, j) in &options[..tries] {
        row_order.push(i);
        col_order.push(j);
        let rest_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != i).collect();
        let rest_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != j).collect();
        if let Some(c) = peel(m, rest_rows, rest_cols, row_order, col_order, exhaustive, dead) {
            return Some(c);
        }
        row_order.pop();
        col_order.pop();
    }
    dead.insert((rows, cols));
    None
}

/// Lifts a certificate for `D_{n,p}` to `D'_{n,p}`, whose rows and columns
/// come in pairs `(2k, 2k+1)` matching row and column `k` of `D_{n,p}`.
pub fn reorder_alt(dnp_cert: &WedgeCertificate, d_prime: &LabeledIntMatrix) -> Result<WedgeCertificate> {
    let r = dnp_cert.col_order.len();
    if dnp_cert.row_order.len() != r || d_prime.rows() != 2 * r || d_prime.cols() != 2 * r {
        return Err(Error::Dimension(format!(
            "certificate of size {r} against D' of size {}x{}",
            d_prime.rows(),
            d_prime.cols()
        )));
    }
    for bi in 0..r {
        for bj in 0..r {
            let (a, b) = (d_prime.get(2 * bi, 2 * bj), d_prime.get(2 * bi, 2 * bj + 1));
            if d_prime.get(2 * bi + 1, 2 * bj + 1) != a || d_prime.get(2 * bi + 1, 2 * bj) != b {
                return Err(Error::BlockConstraint(format!("block ({bi}, {bj}) is not of the form [[a,b],[b,a]]")));
            }
        }
    }
    let mut row_order = Vec::with_capacity(2 * r);
    let mut col_order = Vec::with_capacity(2 * r);
    for t in 0..r {
        let (i, j) = (dnp_cert.row_order[t], dnp_cert.col_order[t]);
        let a = d_prime.get(2 * i, 2 * j);
        let b = d_prime.get(2 * i, 2 * j + 1);
        if a.is_one() && b.is_zero() {
            row_order.extend([2 * i, 2 * i + 1]);
        } else if a.is_zero() && b.is_one() {
            row_order.extend([2 * i + 1, 2 * i]);
        } else {
            return Err(Error::BlockConstraint(format!("diagonal block ({i}, {j}) is neither [[1,0],[0,1]] nor [[0,1],[1,0]]")));
        }
        col_order.extend([2 * j, 2 * j + 1]);
    }
    let cert = WedgeCertificate { row_order, col_order };
    if !validate_wedge(d_prime, &cert) {
        return Err(Error::Internal("lifted certificate fails the wedge check".into()));
    }
    Ok(cert)
}
