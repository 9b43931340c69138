use std::collections::BTreeSet;

use super::{BasicSetClaim, CharLabel, ClassUnion, GroupTag};
use crate::altchar::{AltChar, Sign};
use crate::error::{Error, Result};
use crate::partitions::{p_quotient, MultiPartition, Partition};
use crate::wreath::{base_group_n, middle_runner};

/// `Λ_∅`: partitions of `n` whose p-quotient is empty at runner `(p+1)/2`.
pub fn lambda_empty(n: usize, p: usize) -> Result<Vec<Partition>> {
    base_group_n(p)?;
    let r = middle_runner(p) - 1;
    Ok(Partition::all(n)
        .into_iter()
        .filter(|l| p_quotient(l, p).component(r).is_empty())
        .collect())
}

pub fn construct_sym_basic(n: usize, p: usize) -> Result<BasicSetClaim> {
    Ok(BasicSetClaim {
        group: GroupTag::Sym { n },
        classes: ClassUnion::PRegular { p },
        members: lambda_empty(n, p)?.into_iter().map(CharLabel::Sym).collect(),
    })
}

/// Both constituents for self-conjugate members of `Λ_∅`, one restriction
/// per conjugate pair otherwise.
pub fn construct_alt_basic(n: usize, p: usize) -> Result<BasicSetClaim> {
    let mut members = Vec::new();
    let mut seen = BTreeSet::new();
    for lambda in lambda_empty(n, p)? {
        match AltChar::restriction_of(&lambda) {
            AltChar::Split(l, _) => {
                members.push(CharLabel::Alt(AltChar::Split(l.clone(), Sign::Plus)));
                members.push(CharLabel::Alt(AltChar::Split(l, Sign::Minus)));
            }
            ch => {
                if seen.insert(ch.clone()) {
                    members.push(CharLabel::Alt(ch));
                }
            }
        }
    }
    Ok(BasicSetClaim { group: GroupTag::Alt { n }, classes: ClassUnion::PRegular { p }, members })
}

/// `B_∅ = {χ^α : α^r = ∅}` on `C_∅` of `(Z_p ⋊ Z_{p-1}) ≀ S_w`.
pub fn construct_wreath_basic(p: usize, w: usize) -> Result<BasicSetClaim> {
    base_group_n(p)?;
    let r = middle_runner(p) - 1;
    let members = MultiPartition::all(p, w)
        .into_iter()
        .filter(|a| a.component(r).is_empty())
        .map(CharLabel::Wreath)
        .collect();
    Ok(BasicSetClaim { group: GroupTag::Wreath { p, w }, classes: ClassUnion::Empty, members })
}

/// Union of per-block claims on a common group and class union.
pub fn assemble_blockwise(per_block: &[BasicSetClaim]) -> Result<BasicSetClaim> {
    let first = per_block
        .first()
        .ok_or_else(|| Error::ClaimMismatch("no blocks to assemble".into()))?;
    let mut seen = BTreeSet::new();
    let mut members = Vec::new();
    for claim in per_block {
        if claim.group != first.group || claim.classes != first.classes {
            return Err(Error::ClaimMismatch(format!(
                "block claim on {} mixed with {}",
                claim.group, first.group
            )));
        }
        for m in &claim.members {
            if !seen.insert(m.clone()) {
                return Err(Error::OverlappingBlocks(m.to_string()));
            }
            members.push(m.clone());
        }
    }
    Ok(BasicSetClaim { group: first.group, classes: first.classes, members })
}

/// Members of `claim` lying in `scope`, in claim order.
pub fn restrict_claim(claim: &BasicSetClaim, scope: &[CharLabel]) -> BasicSetClaim {
    BasicSetClaim {
        members: claim.members.iter().filter(|m| scope.contains(m)).cloned().collect(),
        ..claim.clone()
    }
}
