use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntMatrix, RatMatrix};
use crate::exactnum::{lcm_of_denominators, Rational};

/// Row Hermite normal form together with its transform.
#[derive(Clone, Debug)]
pub struct Hnf {
    /// `H = U·M`: pivots positive, zeros below each pivot, entries above a
    /// pivot reduced into `[0, pivot)`; zero rows at the bottom.
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// Pivot column of each nonzero row of `h`.
    pub pivots: Vec<usize>,
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Replaces rows `(a, b)` with `(x·a + y·b, z·a + w·b)`.
fn combine(m: &mut IntMatrix, a: usize, b: usize, x: &BigInt, y: &BigInt, z: &BigInt, w: &BigInt) {
    for j in 0..m.cols() {
        let ra = m.get(a, j).clone();
        let rb = m.get(b, j).clone();
        m.set(a, j, x * &ra + y * &rb);
        m.set(b, j, z * &ra + w * &rb);
    }
}

fn sub_multiple(m: &mut IntMatrix, target: usize, src: usize, q: &BigInt) {
    for j in 0..m.cols() {
        let v = m.get(target, j) - q * m.get(src, j);
        m.set(target, j, v);
    }
}

fn negate_row(m: &mut IntMatrix, i: usize) {
    for x in m.row_mut(i) {
        *x = -&*x;
    }
}

pub fn hnf_full(m: &IntMatrix) -> Hnf {
    let rows = m.rows();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        if r == rows {
            break;
        }
        for i in r + 1..rows {
            if h.get(i, c).is_zero() {
                continue;
            }
            if h.get(r, c).is_zero() {
                h.swap_rows(r, i);
                u.swap_rows(r, i);
                continue;
            }
            let a = h.get(r, c).clone();
            let b = h.get(i, c).clone();
            if b.is_multiple_of(&a) {
                let q = &b / &a;
                sub_multiple(&mut h, i, r, &q);
                sub_multiple(&mut u, i, r, &q);
                continue;
            }
            let eg = a.extended_gcd(&b);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let z = -(&b / &g);
            let w = &a / &g;
            combine(&mut h, r, i, &x, &y, &z, &w);
            combine(&mut u, r, i, &x, &y, &z, &w);
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            negate_row(&mut h, r);
            negate_row(&mut u, r);
        }
        let piv = h.get(r, c).clone();
        for i in 0..r {
            let q = h.get(i, c).div_floor(&piv);
            if !q.is_zero() {
                sub_multiple(&mut h, i, r, &q);
                sub_multiple(&mut u, i, r, &q);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Hnf { h, u, pivots }
}

/// `(H, U)` with `U` unimodular and `U·M = H` in row Hermite normal form.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let r = hnf_full(m);
    (r.h, r.u)
}

/// Per-column scale factors clearing every denominator in that column across
/// all the given matrices.
pub fn column_scales(mats: &[&RatMatrix]) -> Vec<BigInt> {
    let cols = mats.first().map_or(0, |m| m.cols());
    (0..cols)
        .map(|j| {
            lcm_of_denominators(mats.iter().flat_map(|m| (0..m.rows()).map(move |i| m.get(i, j))))
        })
        .collect()
}

pub fn scale_columns(m: &RatMatrix, scales: &[BigInt]) -> IntMatrix {
    IntMatrix::from_fn(m.rows(), m.cols(), |i, j| {
        let v = m.get(i, j) * Rational::from_integer(scales[j].clone());
        debug_assert!(v.is_integer());
        v.to_integer()
    })
}

/// Reusable integral solver for `x·A = b` against a fixed `A`.
pub struct IntegralSolver {
    scales: Vec<BigInt>,
    a_int: IntMatrix,
    hnf: Hnf,
}

impl IntegralSolver {
    pub fn new(a: &RatMatrix) -> Self {
        let scales = column_scales(&[a]);
        let a_int = scale_columns(a, &scales);
        let hnf = hnf_full(&a_int);
        IntegralSolver { scales, a_int, hnf }
    }

    pub fn rank(&self) -> usize {
        self.hnf.rank()
    }

    pub fn hnf(&self) -> &Hnf {
        &self.hnf
    }

    /// Integer `x` with `x·A = b`, verified by re-multiplication.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<BigInt>> {
        if b.len() != self.a_int.cols() {
            return None;
        }
        let mut residual = Vec::with_capacity(b.len());
        for (bj, s) in b.iter().zip(&self.scales) {
            let v = bj * Rational::from_integer(s.clone());
            if !v.is_integer() {
                return None;
            }
            residual.push(v.to_integer());
        }
        let target = residual.clone();
        let h = &self.hnf.h;
        let mut y = vec![BigInt::zero(); self.a_int.rows()];
        for (k, &c) in self.hnf.pivots.iter().enumerate() {
            let piv = h.get(k, c);
            let (q, rem) = residual[c].div_rem(piv);
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (j, rj) in residual.iter_mut().enumerate().skip(c) {
                    *rj -= &q * h.get(k, j);
                }
            }
            y[k] = q;
        }
        if residual.iter().any(|r| !r.is_zero()) {
            return None;
        }
        let x = self.hnf.u.left_mul_vec(&y).ok()?;
        (self.a_int.left_mul_vec(&x).ok()? == target).then_some(x)
    }

    /// Integer vectors `x ≠ 0` with `x·A = 0`, one per zero row of the HNF.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        (self.rank()..self.a_int.rows()).map(|i| self.hnf.u.row(i).to_vec()).collect()
    }
}

pub fn solve_integral(a: &RatMatrix, b: &[Rational]) -> Option<Vec<BigInt>> {
    IntegralSolver::new(a).solve(b)
}

/// Nonzero HNF rows after a common column scaling, compared directly.
pub fn z_span_equal(a: &RatMatrix, b: &RatMatrix) -> bool {
    if a.cols() != b.cols() {
        return false;
    }
    let scales = column_scales(&[a, b]);
    let ha = hnf_full(&scale_columns(a, &scales));
    let hb = hnf_full(&scale_columns(b, &scales));
    ha.rank() == hb.rank() && (0..ha.rank()).all(|i| ha.h.row(i) == hb.h.row(i))
}

/// Bareiss fraction-free elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                a.set(i, j, v);
            }
        }
        prev = a.get(k, k).clone();
    }
    sign * a.get(n - 1, n - 1)
}

pub fn is_unimodular(m: &IntMatrix) -> bool {
    m.is_square() && determinant(m).abs().is_one()
}

/// Reduced row echelon form over Q; returns the pivot columns.
fn rref(m: &mut RatMatrix) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        let Some(p) = (r..m.rows()).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = m.get(r, c).recip();
        for x in m.row_mut(r) {
            *x = &*x * &inv;
        }
        for i in 0..m.rows() {
            if i != r && !m.get(i, c).is_zero() {
                let f = m.get(i, c).clone();
                for j in 0..m.cols() {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.rows() {
            break;
        }
    }
    pivots
}

pub fn rank(m: &RatMatrix) -> usize {
    rref(&mut m.clone()).len()
}

pub fn inverse(m: &RatMatrix) -> Option<RatMatrix> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let mut aug = RatMatrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    let rows: Vec<usize> = (0..n).collect();
    Some(aug.select(&rows, &cols))
}

/// Some rational `x` with `x·A = b`.
pub fn solve_rational(a: &RatMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    if b.len() != a.cols() {
        return None;
    }
    // Solve Aᵀ xᵀ = bᵀ on the augmented matrix.
    let (n, m) = (a.cols(), a.rows());
    let mut aug = RatMatrix::from_fn(n, m + 1, |i, j| if j < m { a.get(j, i).clone() } else { b[i].clone() });
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&m) {
        return None;
    }
    let mut x = vec![Rational::zero(); m];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug.get(r, m).clone();
    }
    Some(x)
}

/// Nonzero invariant factors `d_1 | d_2 | …` of the Smith normal form.
pub fn smith_invariants(m: &IntMatrix) -> Vec<BigInt> {
    let mut cur = m.clone();
    // Alternate row and column HNF until only diagonal entries remain.
    loop {
        let h = hnf_full(&cur);
        let rows: Vec<usize> = (0..h.rank()).collect();
        let all: Vec<usize> = (0..h.h.cols()).collect();
        let trimmed = h.h.select(&rows, &all);
        let diagonal = (0..trimmed.rows()).all(|i| {
            trimmed.row(i).iter().enumerate().all(|(j, x)| x.is_zero() || j == h.pivots[i])
        });
        if diagonal {
            let mut d: Vec<BigInt> = (0..trimmed.rows()).map(|i| trimmed.get(i, h.pivots[i]).clone()).collect();
            for i in 0..d.len() {
                for j in i + 1..d.len() {
                    let g = d[i].gcd(&d[j]);
                    let l = d[i].lcm(&d[j]);
                    d[i] = g;
                    d[j] = l;
                }
            }
            return d;
        }
        cur = trimmed.transpose();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};

    fn im(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64(rows, rows.first().map_or(0, Vec::len)).unwrap()
    }

    fn rm(rows: &[Vec<i64>]) -> RatMatrix {
        im(rows).to_rational()
    }

    #[test]
    fn hnf_small() {
        let (h, u) = hnf(&im(&[vec![2, 4], vec![1, 3]]));
        // [[1,3],[0,2]] with the entry above the pivot reduced mod 2
        assert_eq!(h, im(&[vec![1, 1], vec![0, 2]]));
        assert_eq!(determinant(&h), determinant(&im(&[vec![2, 4], vec![1, 3]])).abs());
        assert_eq!(u.mul(&im(&[vec![2, 4], vec![1, 3]])).unwrap(), h);
        assert!(is_unimodular(&u));
        let (h, u) = hnf(&IntMatrix::identity(3));
        assert_eq!(h, IntMatrix::identity(3));
        assert_eq!(u, IntMatrix::identity(3));
        let (h, _) = hnf(&IntMatrix::zeros(2, 3));
        assert_eq!(h, IntMatrix::zeros(2, 3));
    }

    #[test]
    fn hnf_idempotent_and_unimodular() {
        let m = im(&[vec![3, 6, 9], vec![2, 5, 7], vec![4, -2, 0], vec![1, 1, 1]]);
        let (h, u) = hnf(&m);
        assert_eq!(u.mul(&m).unwrap(), h);
        assert!(is_unimodular(&u));
        assert_eq!(hnf(&h).0, h);
    }

    #[test]
    fn integral_solving() {
        let a = rm(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(solve_integral(&a, &[rat(3), rat(-1), rat(2)]).unwrap(), vec![3.into(), (-1).into(), 2.into()]);
        let a = rm(&[vec![1, 2], vec![3, 5]]);
        assert_eq!(solve_integral(&a, &[rat(2), rat(4)]).unwrap(), vec![2.into(), 0.into()]);
        assert!(solve_integral(&rm(&[vec![2]]), &[rat(1)]).is_none());
        assert!(solve_integral(&rm(&[vec![1, 0]]), &[rat(0), rat(1)]).is_none());
        let a = RatMatrix::from_rows(vec![vec![ratio(1, 2)]], 1).unwrap();
        assert_eq!(solve_integral(&a, &[rat(3)]).unwrap(), vec![6.into()]);
        assert!(solve_integral(&a, &[ratio(1, 3)]).is_none());
    }

    #[test]
    fn span_comparison() {
        let a = rm(&[vec![1, 2], vec![0, 3]]);
        assert!(z_span_equal(&a, &a));
        assert!(!z_span_equal(&a, &rm(&[vec![2, 4], vec![0, 3]])));
        assert!(z_span_equal(&a, &rm(&[vec![1, 5], vec![1, 2]])));
        assert!(z_span_equal(&a, &rm(&[vec![1, 5], vec![1, 2], vec![2, 7]])));
    }

    #[test]
    fn determinants_and_inverses() {
        assert_eq!(determinant(&im(&[vec![2, 4], vec![1, 3]])), 2.into());
        assert_eq!(determinant(&im(&[vec![0, 1], vec![1, 0]])), (-1).into());
        assert_eq!(determinant(&im(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]])), 0.into());
        let m = rm(&[vec![2, 1], vec![1, 1]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RatMatrix::identity(2));
        assert!(inverse(&rm(&[vec![1, 2], vec![2, 4]])).is_none());
    }

    #[test]
    fn rational_solutions() {
        let a = rm(&[vec![2, 0], vec![0, 2]]);
        assert_eq!(solve_rational(&a, &[rat(1), rat(1)]).unwrap(), vec![ratio(1, 2), ratio(1, 2)]);
        assert!(solve_rational(&rm(&[vec![1, 1]]), &[rat(1), rat(2)]).is_none());
        assert_eq!(rank(&rm(&[vec![1, 2], vec![2, 4], vec![0, 1]])), 2);
    }

    #[test]
    fn smith_forms() {
        assert_eq!(smith_invariants(&im(&[vec![2, 4], vec![1, 3]])), vec![1.into(), 2.into()]);
        assert_eq!(
            smith_invariants(&im(&[vec![2, 0], vec![0, 3]])),
            vec![1.into(), 6.into()]
        );
        assert_eq!(smith_invariants(&im(&[vec![4, 0], vec![0, 6], vec![0, 0]])), vec![2.into(), 12.into()]);
    }

    #[test]
    fn kernel_vectors() {
        let a = rm(&[vec![1, 2], vec![2, 4], vec![0, 1]]);
        let s = IntegralSolver::new(&a);
        assert_eq!(s.rank(), 2);
        let k = s.kernel_basis();
        assert_eq!(k.len(), 1);
        let ai = a.map(|x| x.to_integer());
        assert!(ai.left_mul_vec(&k[0]).unwrap().iter().all(Zero::is_zero));
    }
}
