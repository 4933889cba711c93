//! Exchange-axiom checkers, upper and lower matroids, and brute-force graph
//! matroids.
//!
//! A family `𝓕` is a delta-matroid when for all `F1, F2 ∈ 𝓕` and every
//! `x ∈ F1 Δ F2` there is a `y ∈ F1 Δ F2` (possibly `y = x`) with
//! `F1 Δ {x, y} ∈ 𝓕`. A matroid's bases satisfy the stricter version with
//! `x ∈ B1 ∖ B2`, `y ∈ B2 ∖ B1`.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::edgeset::{EdgeId, EdgeSet, SetFamily};
use crate::graph::LabeledGraph;
use crate::map::CombinatorialMap;
use crate::selection::{enumerate_feasible_gamma_with_limit, EnumError, MAX_ENUM_EDGES};
use crate::unionfind::UnionFind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeltaError {
    #[error("the family has no members")]
    EmptyFamily,
    #[error("not a delta-matroid: {0}")]
    NotDeltaMatroid(Violation),
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("graph edge labels must lie in 1..=64")]
    LabelOutOfRange,
    #[error(transparent)]
    Enumeration(#[from] EnumError),
}

/// The first pair of members (and element) at which an exchange axiom fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// No `y` completes the exchange for `element` taken from `first`.
    Exchange {
        first: EdgeSet,
        second: EdgeSet,
        element: EdgeId,
    },
    /// Two would-be bases of different size.
    UnequalSizes { first: EdgeSet, second: EdgeSet },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Exchange {
                first,
                second,
                element,
            } => write!(f, "F1={first}, F2={second}, x={element} has no valid y"),
            Violation::UnequalSizes { first, second } => {
                write!(f, "{first} and {second} differ in size")
            }
        }
    }
}

/// Symmetric exchange check. `Ok(None)` means the axiom holds; otherwise the
/// lexicographically first `(F1, F2, x)` in canonical member order is
/// returned.
pub fn check_symmetric_exchange(family: &SetFamily) -> Result<Option<Violation>, DeltaError> {
    if family.is_empty() {
        return Err(DeltaError::EmptyFamily);
    }
    let members = family.members();
    Ok(members.par_iter().find_map_first(|&first| {
        members.iter().find_map(|&second| {
            let diff = first.symmetric_difference(second);
            diff.iter()
                .find(|&x| !diff.iter().any(|y| family.contains(first.exchange(x, y))))
                .map(|element| Violation::Exchange {
                    first,
                    second,
                    element,
                })
        })
    }))
}

/// Basis exchange check; also requires all members to have equal size.
pub fn check_basis_exchange(family: &SetFamily) -> Result<Option<Violation>, DeltaError> {
    if family.is_empty() {
        return Err(DeltaError::EmptyFamily);
    }
    let members = family.members();
    Ok(members.par_iter().find_map_first(|&first| {
        members.iter().find_map(|&second| {
            if first.len() != second.len() {
                return Some(Violation::UnequalSizes { first, second });
            }
            let outside = second.difference(first);
            first
                .difference(second)
                .iter()
                .find(|&x| !outside.iter().any(|y| family.contains(first.exchange(x, y))))
                .map(|element| Violation::Exchange {
                    first,
                    second,
                    element,
                })
        })
    }))
}

/// A matroid given by its bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    bases: SetFamily,
}

impl Matroid {
    /// Wraps a nonempty equicardinal family without checking basis exchange.
    pub fn from_bases(bases: SetFamily) -> Result<Self, DeltaError> {
        match (bases.min_size(), bases.max_size()) {
            (None, _) => Err(DeltaError::EmptyFamily),
            (Some(lo), Some(hi)) if lo != hi => Err(DeltaError::NotDeltaMatroid(Violation::UnequalSizes {
                first: bases.members()[0],
                second: *bases.members().last().unwrap(),
            })),
            _ => Ok(Matroid { bases }),
        }
    }

    pub fn ground(&self) -> EdgeSet {
        self.bases.ground()
    }

    pub fn bases(&self) -> &SetFamily {
        &self.bases
    }

    pub fn rank(&self) -> usize {
        self.bases.members()[0].len()
    }
}

/// Bases: the feasible sets of largest cardinality.
pub fn upper_matroid(family: &SetFamily) -> Result<Matroid, DeltaError> {
    require_delta_matroid(family)?;
    Ok(extreme_matroid(family, family.max_size().unwrap()))
}

/// Bases: the feasible sets of least cardinality.
pub fn lower_matroid(family: &SetFamily) -> Result<Matroid, DeltaError> {
    require_delta_matroid(family)?;
    Ok(extreme_matroid(family, family.min_size().unwrap()))
}

fn require_delta_matroid(family: &SetFamily) -> Result<(), DeltaError> {
    match check_symmetric_exchange(family)? {
        None => Ok(()),
        Some(v) => Err(DeltaError::NotDeltaMatroid(v)),
    }
}

/// Upper and lower matroid of a family already known to be a delta-matroid.
pub(crate) fn extreme_matroid(family: &SetFamily, size: usize) -> Matroid {
    Matroid {
        bases: family.of_size(size),
    }
}

/// Edge sets of all spanning trees, by exhaustive search over edge subsets
/// of size `|V| − 1`. The family's ground set is every label of `g`, loops
/// included.
pub fn spanning_tree_bases(g: &LabeledGraph) -> Result<SetFamily, DeltaError> {
    let ground = g.label_set().ok_or(DeltaError::LabelOutOfRange)?;
    if !g.is_connected() {
        return Err(DeltaError::DisconnectedGraph);
    }
    let candidates: Vec<_> = g.edges().iter().filter(|e| !e.is_loop()).copied().collect();
    let need = g.vertex_count().saturating_sub(1);
    let mut trees = Vec::new();
    let mut chosen = Vec::with_capacity(need);
    extend_forest(&candidates, 0, need, &mut chosen, &mut trees, g.vertex_count());
    Ok(SetFamily::new(ground, trees))
}

/// Chooses `need` more edges from `candidates[start..]`, keeping only
/// acyclic choices.
fn extend_forest(
    candidates: &[crate::graph::LabeledEdge],
    start: usize,
    need: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<EdgeSet>,
    vertices: usize,
) {
    if need == 0 {
        out.push(chosen.iter().map(|&i| candidates[i].id).collect());
        return;
    }
    for i in start..candidates.len() {
        if candidates.len() - i < need {
            break;
        }
        chosen.push(i);
        let mut uf = UnionFind::new(vertices);
        let acyclic = chosen
            .iter()
            .all(|&j| uf.union(candidates[j].ends[0], candidates[j].ends[1]));
        if acyclic {
            extend_forest(candidates, i + 1, need - 1, chosen, out, vertices);
        }
        chosen.pop();
    }
}

/// Complements of spanning trees: the bases of the cocycle matroid.
pub fn cotree_bases(g: &LabeledGraph) -> Result<SetFamily, DeltaError> {
    Ok(spanning_tree_bases(g)?.complemented())
}

/// `true` when every member has the same cardinality parity.
pub fn parity_uniform(family: &SetFamily) -> Result<bool, DeltaError> {
    let first = family.members().first().ok_or(DeltaError::EmptyFamily)?;
    Ok(family.iter().all(|s| s.len() % 2 == first.len() % 2))
}

/// Ranks of the upper and lower matroid of the Hamiltonian delta-matroid,
/// next to the Euler characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankGap {
    pub upper: usize,
    pub lower: usize,
    pub euler: i64,
}

impl RankGap {
    /// `rank(upper) − rank(lower) = 2 − χ`.
    pub fn holds(&self) -> bool {
        self.upper as i64 - self.lower as i64 == 2 - self.euler
    }
}

pub fn rank_gap(map: &CombinatorialMap) -> Result<RankGap, DeltaError> {
    let family = enumerate_feasible_gamma_with_limit(map, MAX_ENUM_EDGES)?;
    Ok(RankGap {
        upper: upper_matroid(&family)?.rank(),
        lower: lower_matroid(&family)?.rank(),
        euler: map.euler_characteristic(),
    })
}

pub fn rank_gap_check(map: &CombinatorialMap) -> Result<bool, DeltaError> {
    Ok(rank_gap(map)?.holds())
}
