use std::collections::VecDeque;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{BasicSetClaim, CharLabel, ClassUnion, GroupTag};
use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::partitions::{p_quotient, p_sign, MultiPartition, Partition};
use crate::symchar::{sym_table, BlockDescriptor, SymCharTable};
use crate::wreath::{base_group_l, base_group_n, middle_runner, tilde, wreath_table, WreathTable};

/// An entry where `Gram_S = diag(η)·Gram_W·diag(η)` fails, or where sign
/// propagation meets a contradiction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub row: usize,
    pub col: usize,
    #[serde(serialize_with = "crate::serde_rational")]
    pub source: Rational,
    #[serde(serialize_with = "crate::serde_rational")]
    pub target: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsometryReport {
    pub block: BlockDescriptor,
    pub target: GroupTag,
    pub bijection: Vec<(Partition, MultiPartition)>,
    /// Propagated signs, `+1` at the first member of each component.
    pub signs: Vec<i64>,
    pub candidate_signs: Vec<i64>,
    pub candidate_consistent: bool,
    #[serde(serialize_with = "crate::serde_rational_grid")]
    pub gram_source: Vec<Vec<Rational>>,
    #[serde(serialize_with = "crate::serde_rational_grid")]
    pub gram_target: Vec<Vec<Rational>>,
    pub verdict: bool,
    pub violation: Option<Violation>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Target {
    /// `N ≀ S_w` on `C_∅`, `λ ↦ tilde(α_λ)`.
    Wreath,
    /// `Z_p ≀ S_w` on `D_∅`, `λ ↦ α_λ`.
    Osima,
}

pub fn verify_isometry(block: &BlockDescriptor) -> Result<IsometryReport> {
    if block.weight == 0 {
        return Err(Error::WeightZero);
    }
    let wt = wreath_table(&base_group_n(block.p)?, block.weight);
    verify_isometry_in(block, &sym_table(block.n()), &wt)
}

pub fn verify_isometry_in(block: &BlockDescriptor, sym: &SymCharTable, wreath: &WreathTable) -> Result<IsometryReport> {
    compare(block, sym, wreath, Target::Wreath)
}

pub fn verify_osima_step(block: &BlockDescriptor) -> Result<IsometryReport> {
    if block.weight == 0 {
        return Err(Error::WeightZero);
    }
    let wt = wreath_table(&base_group_l(block.p)?, block.weight);
    verify_osima_step_in(block, &sym_table(block.n()), &wt)
}

pub fn verify_osima_step_in(block: &BlockDescriptor, sym: &SymCharTable, wreath: &WreathTable) -> Result<IsometryReport> {
    compare(block, sym, wreath, Target::Osima)
}

fn compare(block: &BlockDescriptor, sym: &SymCharTable, wreath: &WreathTable, kind: Target) -> Result<IsometryReport> {
    let (p, w) = (block.p, block.weight);
    if w == 0 {
        return Err(Error::WeightZero);
    }
    if sym.n() != block.n() || wreath.w() != w || wreath.base().class_count() != p {
        return Err(Error::ClaimMismatch(format!(
            "tables for S{} and weight {} do not fit the block",
            sym.n(),
            wreath.w()
        )));
    }
    let r = middle_runner(p) - 1;
    let target = match kind {
        Target::Wreath => GroupTag::Wreath { p, w },
        Target::Osima => GroupTag::Osima { p, w },
    };
    let mut bijection = Vec::with_capacity(block.members.len());
    let mut candidate_signs = Vec::with_capacity(block.members.len());
    for lambda in &block.members {
        let alpha = p_quotient(lambda, p);
        let sign = p_sign(lambda, p);
        match kind {
            Target::Wreath => {
                let odd = alpha.component(r).size() % 2 == 1;
                candidate_signs.push(if odd { -sign } else { sign });
                bijection.push((lambda.clone(), tilde(&alpha)));
            }
            Target::Osima => {
                candidate_signs.push(sign);
                bijection.push((lambda.clone(), alpha));
            }
        }
    }

    let sym_idx: Vec<usize> = block
        .members
        .iter()
        .map(|l| sym.character_index(l).ok_or_else(|| Error::Internal(format!("{l} missing"))))
        .collect::<Result<_>>()?;
    let wr_idx: Vec<usize> = bijection
        .iter()
        .map(|(_, a)| wreath.character_index(a).ok_or_else(|| Error::Internal(format!("{a} missing"))))
        .collect::<Result<_>>()?;
    let reg = sym.p_regular_class_indices(p);
    let empty = wreath.c_empty_indices();
    let k = sym_idx.len();
    let mut gram_source = vec![vec![Rational::zero(); k]; k];
    let mut gram_target = vec![vec![Rational::zero(); k]; k];
    for i in 0..k {
        for j in i..k {
            let s = sym.inner_product(sym_idx[i], sym_idx[j], &reg);
            let t = wreath.inner_product(wr_idx[i], wr_idx[j], &empty)?;
            gram_source[i][j] = s.clone();
            gram_source[j][i] = s;
            gram_target[i][j] = t.clone();
            gram_target[j][i] = t;
        }
    }

    let (signs, mut violation) = propagate(&gram_source, &gram_target);
    if violation.is_none() {
        violation = first_mismatch(&gram_source, &gram_target, &signs);
    }
    let candidate_consistent = first_mismatch(&gram_source, &gram_target, &candidate_signs).is_none();
    Ok(IsometryReport {
        block: block.clone(),
        target,
        bijection,
        signs,
        candidate_signs,
        candidate_consistent,
        gram_source,
        gram_target,
        verdict: violation.is_none(),
        violation,
    })
}

fn propagate(s: &[Vec<Rational>], t: &[Vec<Rational>]) -> (Vec<i64>, Option<Violation>) {
    let k = s.len();
    let mut signs = vec![0i64; k];
    let violation = |i: usize, j: usize| Violation { row: i, col: j, source: s[i][j].clone(), target: t[i][j].clone() };
    for start in 0..k {
        if signs[start] != 0 {
            continue;
        }
        signs[start] = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..k {
                if i == j || s[i][j].is_zero() {
                    continue;
                }
                if t[i][j].is_zero() || s[i][j].abs() != t[i][j].abs() {
                    return (signs, Some(violation(i, j)));
                }
                let flip = if s[i][j] == t[i][j] { 1 } else { -1 };
                let want = signs[i] * flip;
                if signs[j] == 0 {
                    signs[j] = want;
                    queue.push_back(j);
                } else if signs[j] != want {
                    return (signs, Some(violation(i, j)));
                }
            }
        }
    }
    (signs, None)
}

fn first_mismatch(s: &[Vec<Rational>], t: &[Vec<Rational>], signs: &[i64]) -> Option<Violation> {
    let k = s.len();
    for i in 0..k {
        for j in 0..k {
            let rhs = &t[i][j] * Rational::from_integer((signs[i] * signs[j]).into());
            if s[i][j] != rhs {
                return Some(Violation { row: i, col: j, source: s[i][j].clone(), target: t[i][j].clone() });
            }
        }
    }
    None
}

/// Image of a claim under the bijection of a verified report, in either
/// direction. The image is not re-verified here.
pub fn transport_basic_set(report: &IsometryReport, claim: &BasicSetClaim) -> Result<BasicSetClaim> {
    if !report.verdict {
        return Err(Error::UnverifiedReport);
    }
    let block = &report.block;
    let missing = |l: &CharLabel| Error::ClaimMismatch(format!("{l} is outside the block"));
    if claim.group == report.target {
        let members = claim
            .members
            .iter()
            .map(|m| match m {
                CharLabel::Wreath(a) => report
                    .bijection
                    .iter()
                    .find(|(_, b)| b == a)
                    .map(|(l, _)| CharLabel::Sym(l.clone()))
                    .ok_or_else(|| missing(m)),
                _ => Err(missing(m)),
            })
            .collect::<Result<_>>()?;
        Ok(BasicSetClaim {
            group: GroupTag::Sym { n: block.n() },
            classes: ClassUnion::PRegular { p: block.p },
            members,
        })
    } else if claim.group == (GroupTag::Sym { n: block.n() }) {
        let members = claim
            .members
            .iter()
            .map(|m| match m {
                CharLabel::Sym(l) => report
                    .bijection
                    .iter()
                    .find(|(k, _)| k == l)
                    .map(|(_, a)| CharLabel::Wreath(a.clone()))
                    .ok_or_else(|| missing(m)),
                _ => Err(missing(m)),
            })
            .collect::<Result<_>>()?;
        Ok(BasicSetClaim { group: report.target, classes: ClassUnion::Empty, members })
    } else {
        Err(Error::ClaimMismatch(format!(
            "claim on {} does not match {} or S{}",
            claim.group,
            report.target,
            block.n()
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basicsets::{construct_sym_basic, construct_wreath_basic, restrict_claim, verify_c_basic};
    use crate::exactnum::ratio;
    use crate::symchar::p_blocks;

    fn principal(n: usize, p: usize) -> BlockDescriptor {
        BlockDescriptor::of(&Partition::row(n), p)
    }

    #[test]
    fn s3_against_n3() {
        let r = verify_isometry(&principal(3, 3)).unwrap();
        assert!(r.verdict, "{:?}", r.violation);
        assert_eq!(r.bijection.len(), 3);
        assert_eq!(r.gram_source[1][1], ratio(2, 3));
        for i in 0..3 {
            assert_eq!(r.gram_source[i][i], r.gram_target[i][i]);
        }
        assert!(r.candidate_consistent);
    }

    #[test]
    fn s3_osima() {
        let r = verify_osima_step(&principal(3, 3)).unwrap();
        assert!(r.verdict);
        assert!(r.candidate_consistent);
        let mid = r.bijection.iter().position(|(l, _)| l == &"2,1".parse().unwrap()).unwrap();
        assert_eq!(r.candidate_signs[mid] * r.candidate_signs[0], -1);
    }

    #[test]
    fn s4_and_s6() {
        for b in p_blocks(4, 3).iter().filter(|b| b.weight > 0) {
            assert!(verify_osima_step(b).unwrap().verdict);
            assert!(verify_isometry(b).unwrap().verdict);
        }
        let r = verify_isometry(&principal(6, 3)).unwrap();
        assert!(r.verdict, "{:?}", r.violation);
        assert!(verify_osima_step(&principal(6, 3)).unwrap().verdict);
    }

    #[test]
    fn weight_zero_rejected() {
        let b = BlockDescriptor::of(&"3,1".parse().unwrap(), 3);
        assert_eq!(verify_isometry(&b).unwrap_err(), Error::WeightZero);
    }

    #[test]
    fn sign_conflict_reported() {
        let one = || Rational::from_integer(1.into());
        let s = vec![vec![one(), one(), one()], vec![one(), one(), one()], vec![one(), one(), one()]];
        let mut t = s.clone();
        t[1][2] = -one();
        t[2][1] = -one();
        let (_, v) = propagate(&s, &t);
        assert!(v.is_some());
    }

    #[test]
    fn transport_round_trip() {
        let block = principal(6, 3);
        let report = verify_isometry(&block).unwrap();
        let b = construct_wreath_basic(3, 2).unwrap();
        let image = transport_basic_set(&report, &b).unwrap();
        let scope: Vec<CharLabel> = block.members.iter().cloned().map(CharLabel::Sym).collect();
        let expected = restrict_claim(&construct_sym_basic(6, 3).unwrap(), &scope);
        let mut got = image.members.clone();
        let mut want = expected.members.clone();
        got.sort();
        want.sort();
        assert_eq!(got, want);
        assert!(verify_c_basic(&image, Some(&scope)).unwrap().holds);
        let back = transport_basic_set(&report, &image).unwrap();
        assert_eq!(back, b);

        let mut bad = report.clone();
        bad.verdict = false;
        assert_eq!(transport_basic_set(&bad, &b).unwrap_err(), Error::UnverifiedReport);
    }
}
