//! Exact solvers for the classical parameters of small boards: stability,
//! clique, chromatic and domination numbers.
//!
//! Every solver takes a [`SearchLimits`](crate::SearchLimits). When the budget
//! runs out the result carries the best witness found and `optimal = false`.
//! Witnesses are always checked with the independent predicates in this
//! module before they are returned.

mod blp;
mod clique;
mod coloring;
mod domination;
mod stable;

pub use blp::{build_blp, BlpModel};
pub use clique::max_clique;
pub use coloring::{
    chromatic_number_exact, dsatur_coloring, modular_coloring, verify_coloring, ChromaticResult,
    Coloring, ColoringCheck,
};
pub use domination::{
    domination_bounds, domination_number, domination_search, gamma_table_csv, greedy_dominating_set,
    monotonicity_check, MonotonicityReport,
};
pub use stable::{count_maximum_stable_sets, max_stable_set, StableCount};

use serde::{Deserialize, Serialize};

use crate::board::BitRow;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubsetKind {
    Stable,
    Clique,
    Dominating,
}

/// Outcome of one of the subset searches.
///
/// `value` is the size of `witness`. For a minimisation that hit its budget
/// the optimum lies in `[lower_bound, upper_bound]`; for a finished search
/// both equal `value`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexSubsetResult {
    #[serde(rename = "problem")]
    pub kind: SubsetKind,
    pub n: usize,
    pub value: usize,
    pub optimal: bool,
    pub lower_bound: usize,
    pub upper_bound: usize,
    /// 1-based linear labels, ascending.
    pub witness: Vec<usize>,
    pub nodes: u64,
    pub millis: u128,
}

impl VertexSubsetResult {
    /// Witness as 0-based vertex indices.
    pub fn vertices(&self) -> Vec<usize> {
        self.witness.iter().map(|l| l - 1).collect()
    }

    /// Re-checks the witness against the graph.
    pub fn witness_valid<G: Graph + ?Sized>(&self, g: &G) -> bool {
        let vs = self.vertices();
        match self.kind {
            SubsetKind::Stable => is_stable(g, &vs),
            SubsetKind::Clique => is_clique(g, &vs),
            SubsetKind::Dominating => is_dominating(g, &vs),
        }
    }
}

pub(crate) fn labels(mut vs: Vec<usize>) -> Vec<usize> {
    vs.sort_unstable();
    vs.into_iter().map(|v| v + 1).collect()
}

fn distinct_in_range(order: usize, vs: &[usize]) -> bool {
    let mut seen = vec![false; order];
    vs.iter().all(|&v| v < order && !std::mem::replace(&mut seen[v], true))
}

pub fn is_stable<G: Graph + ?Sized>(g: &G, vs: &[usize]) -> bool {
    distinct_in_range(g.order(), vs)
        && vs
            .iter()
            .enumerate()
            .all(|(k, &u)| vs[k + 1..].iter().all(|&v| !g.is_adjacent(u, v)))
}

pub fn is_clique<G: Graph + ?Sized>(g: &G, vs: &[usize]) -> bool {
    distinct_in_range(g.order(), vs)
        && vs
            .iter()
            .enumerate()
            .all(|(k, &u)| vs[k + 1..].iter().all(|&v| g.is_adjacent(u, v)))
}

pub fn is_dominating<G: Graph + ?Sized>(g: &G, vs: &[usize]) -> bool {
    if !distinct_in_range(g.order(), vs) {
        return false;
    }
    let mut covered = BitRow::new(g.order());
    for &v in vs {
        covered.set(v);
        covered.union_with(g.adjacency_row(v));
    }
    covered.count() == g.order()
}
