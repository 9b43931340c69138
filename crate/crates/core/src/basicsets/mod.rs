//! Basic sets: claims, their lattice verification, the `B_∅` constructions
//! and the isometries between blocks of `S_n` and wreath products.
//!
//! A claim `(G, C, B)` holds when the truncations `χ^C` of the members of `B`
//! are Z-linearly independent and Z-span the truncations of every character
//! in scope. Values are expanded into rational coordinates column by column
//! (see [`crate::exactnum::coordinate_matrix`]) and the span questions are
//! answered by Hermite normal forms.

mod construct;
mod isometry;

pub use construct::{
    assemble_blockwise, construct_alt_basic, construct_sym_basic, construct_wreath_basic,
    lambda_empty, restrict_claim,
};
pub use isometry::{
    transport_basic_set, verify_isometry, verify_isometry_in, verify_osima_step,
    verify_osima_step_in, IsometryReport, Violation,
};

use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::altchar::{alt_table, AltChar, AltCharTable};
use crate::error::{Error, Result};
use crate::exactnum::{coordinate_matrix, AlgValue, Rational};
use crate::intlinalg::{solve_rational, IntegralSolver, RatMatrix};
use crate::partitions::{MultiPartition, Partition};
use crate::symchar::{sym_table, SymCharTable};
use crate::wreath::{base_group_l, base_group_n, wreath_table, WreathTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GroupTag {
    Sym { n: usize },
    Alt { n: usize },
    /// `(Z_p ⋊ Z_{p-1}) ≀ S_w`.
    Wreath { p: usize, w: usize },
    /// `Z_p ≀ S_w`.
    Osima { p: usize, w: usize },
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Sym { n } => write!(f, "S{n}"),
            GroupTag::Alt { n } => write!(f, "A{n}"),
            GroupTag::Wreath { p, w } => write!(f, "N{p} wr S{w}"),
            GroupTag::Osima { p, w } => write!(f, "Z{p} wr S{w}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ClassUnion {
    All,
    PRegular { p: usize },
    /// `C_∅` for `N ≀ S_w`, `D_∅` for `Z_p ≀ S_w`.
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharLabel {
    Sym(Partition),
    Alt(AltChar),
    Wreath(MultiPartition),
}

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharLabel::Sym(l) => l.fmt(f),
            CharLabel::Alt(c) => c.fmt(f),
            CharLabel::Wreath(a) => a.fmt(f),
        }
    }
}

impl Serialize for CharLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl CharLabel {
    pub fn parse_for(group: GroupTag, s: &str) -> Result<CharLabel> {
        Ok(match group {
            GroupTag::Sym { .. } => CharLabel::Sym(s.parse()?),
            GroupTag::Alt { .. } => CharLabel::Alt(s.parse()?),
            GroupTag::Wreath { .. } | GroupTag::Osima { .. } => CharLabel::Wreath(s.parse()?),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasicSetClaim {
    pub group: GroupTag,
    pub classes: ClassUnion,
    pub members: Vec<CharLabel>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expansion {
    pub character: CharLabel,
    /// One coefficient per member of the claim, in claim order.
    #[serde(serialize_with = "crate::serde_bigint_vec")]
    pub coefficients: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `Σ c_i·b_i^C = 0` with integers `c` not all zero.
    Dependence {
        #[serde(serialize_with = "crate::serde_bigint_vec")]
        coefficients: Vec<BigInt>,
    },
    NotInRationalSpan { character: CharLabel },
    NonIntegral {
        character: CharLabel,
        #[serde(serialize_with = "crate::serde_rational_vec")]
        coefficients: Vec<Rational>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub group: GroupTag,
    pub members: Vec<CharLabel>,
    /// Rank of the truncated members.
    pub rank: usize,
    /// Rank of all truncated characters in scope.
    pub scope_rank: usize,
    pub expansions: Vec<Expansion>,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug)]
enum Tables {
    Sym(SymCharTable),
    Alt(AltCharTable),
    Wreath(WreathTable),
}

/// Character table of a tagged group plus the class unions it supports.
#[derive(Clone, Debug)]
pub struct GroupContext {
    tag: GroupTag,
    labels: Vec<CharLabel>,
    tables: Tables,
}

impl GroupContext {
    pub fn new(tag: GroupTag) -> Result<Self> {
        let tables = match tag {
            GroupTag::Sym { n } => Tables::Sym(sym_table(n)),
            GroupTag::Alt { n } => Tables::Alt(alt_table(n)?),
            GroupTag::Wreath { p, w } => Tables::Wreath(wreath_table(&base_group_n(p)?, w)),
            GroupTag::Osima { p, w } => Tables::Wreath(wreath_table(&base_group_l(p)?, w)),
        };
        Ok(Self::from_tables(tag, tables))
    }

    pub fn from_sym(table: SymCharTable) -> Self {
        Self::from_tables(GroupTag::Sym { n: table.n() }, Tables::Sym(table))
    }

    /// `table` must be a wreath table over `N_p` or `L_p`, matching `tag`.
    pub fn from_wreath(tag: GroupTag, table: WreathTable) -> Self {
        Self::from_tables(tag, Tables::Wreath(table))
    }

    fn from_tables(tag: GroupTag, tables: Tables) -> Self {
        let labels = match &tables {
            Tables::Sym(t) => t.characters().iter().cloned().map(CharLabel::Sym).collect(),
            Tables::Alt(t) => t.characters().iter().cloned().map(CharLabel::Alt).collect(),
            Tables::Wreath(t) => t.characters().iter().cloned().map(CharLabel::Wreath).collect(),
        };
        GroupContext { tag, labels, tables }
    }

    pub fn tag(&self) -> GroupTag {
        self.tag
    }

    pub fn labels(&self) -> &[CharLabel] {
        &self.labels
    }

    pub fn index_of(&self, label: &CharLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn sym_table(&self) -> Option<&SymCharTable> {
        match &self.tables {
            Tables::Sym(t) => Some(t),
            _ => None,
        }
    }

    pub fn wreath_table(&self) -> Option<&WreathTable> {
        match &self.tables {
            Tables::Wreath(t) => Some(t),
            _ => None,
        }
    }

    pub fn class_indices(&self, union: ClassUnion) -> Result<Vec<usize>> {
        let bad = || Error::ClaimMismatch(format!("class union {union:?} on {}", self.tag));
        Ok(match (&self.tables, union) {
            (Tables::Sym(t), ClassUnion::All) => (0..t.classes().len()).collect(),
            (Tables::Alt(t), ClassUnion::All) => (0..t.classes().len()).collect(),
            (Tables::Wreath(t), ClassUnion::All) => (0..t.classes().len()).collect(),
            (Tables::Sym(t), ClassUnion::PRegular { p }) => t.p_regular_class_indices(p),
            (Tables::Alt(t), ClassUnion::PRegular { p }) => t.p_regular_class_indices(p),
            (Tables::Wreath(t), ClassUnion::PRegular { p }) => t.p_regular_indices(p),
            (Tables::Wreath(t), ClassUnion::Empty) => t.c_empty_indices(),
            _ => return Err(bad()),
        })
    }

    /// Rational coordinates of the listed characters on the listed classes.
    pub fn value_matrix(&self, chars: &[usize], classes: &[usize]) -> Result<RatMatrix> {
        match &self.tables {
            Tables::Sym(t) => Ok(t.value_matrix(chars, classes)),
            Tables::Wreath(t) => t.value_matrix(chars, classes),
            Tables::Alt(t) => {
                // Lay out coordinates from every character so the columns
                // do not depend on which rows were picked.
                let all: Vec<Vec<AlgValue>> = t
                    .values()
                    .iter()
                    .map(|row| classes.iter().map(|&j| row[j].clone()).collect())
                    .collect();
                Ok(coordinate_matrix(&all, classes.len())?.select_rows(chars))
            }
        }
    }

    pub fn inner_product(&self, i: usize, j: usize, classes: &[usize]) -> Result<Rational> {
        match &self.tables {
            Tables::Sym(t) => Ok(t.inner_product(i, j, classes)),
            Tables::Alt(t) => t.inner_product(i, j, classes),
            Tables::Wreath(t) => t.inner_product(i, j, classes),
        }
    }

    fn indices(&self, labels: &[CharLabel]) -> Result<Vec<usize>> {
        labels
            .iter()
            .map(|l| {
                self.index_of(l)
                    .ok_or_else(|| Error::ClaimMismatch(format!("{l} is not a character of {}", self.tag)))
            })
            .collect()
    }
}

/// Checks a claim against every character in `scope` (all of `Irr(G)` when
/// `None`). Only members lying in the scope take part.
pub fn verify_c_basic(claim: &BasicSetClaim, scope: Option<&[CharLabel]>) -> Result<Verdict> {
    verify_c_basic_in(&GroupContext::new(claim.group)?, claim, scope)
}

pub fn verify_c_basic_in(ctx: &GroupContext, claim: &BasicSetClaim, scope: Option<&[CharLabel]>) -> Result<Verdict> {
    if ctx.tag() != claim.group {
        return Err(Error::ClaimMismatch(format!("claim for {} checked on {}", claim.group, ctx.tag())));
    }
    let classes = ctx.class_indices(claim.classes)?;
    let scope_idx = match scope {
        Some(s) => ctx.indices(s)?,
        None => (0..ctx.labels().len()).collect(),
    };
    let member_idx = ctx.indices(&claim.members)?;
    let members: Vec<usize> = member_idx.into_iter().filter(|i| scope_idx.contains(i)).collect();
    let member_labels: Vec<CharLabel> = members.iter().map(|&i| ctx.labels()[i].clone()).collect();

    let vb = ctx.value_matrix(&members, &classes)?;
    let solver = IntegralSolver::new(&vb);
    let scope_rank = crate::intlinalg::rank(&ctx.value_matrix(&scope_idx, &classes)?);
    let mut verdict = Verdict {
        holds: false,
        group: claim.group,
        members: member_labels,
        rank: solver.rank(),
        scope_rank,
        expansions: Vec::new(),
        witness: None,
    };
    if solver.rank() < members.len() {
        let coefficients = solver.kernel_basis().into_iter().next().expect("rank deficit");
        verdict.witness = Some(Witness::Dependence { coefficients });
        return Ok(verdict);
    }
    for &i in &scope_idx {
        let row = ctx.value_matrix(&[i], &classes)?;
        let target = row.row(0);
        let label = ctx.labels()[i].clone();
        match expand(&solver, &vb, target, label) {
            Ok(e) => verdict.expansions.push(e),
            Err(w) => {
                verdict.witness = Some(w);
                return Ok(verdict);
            }
        }
    }
    verdict.holds = true;
    Ok(verdict)
}

fn expand(solver: &IntegralSolver, vb: &RatMatrix, target: &[Rational], label: CharLabel) -> std::result::Result<Expansion, Witness> {
    if let Some(coefficients) = solver.solve(target) {
        return Ok(Expansion { character: label, coefficients });
    }
    Err(match solve_rational(vb, target) {
        Some(coefficients) => Witness::NonIntegral { character: label, coefficients },
        None => Witness::NotInRationalSpan { character: label },
    })
}
