//! Minimum dominating sets.
//!
//! For `k` increasing from the proven lower bound, the search asks whether a
//! dominating set of size `k` exists. Each node picks an uncovered square and
//! branches on the squares that would cover it, most useful first. A square
//! whose branch failed is excluded from its later siblings, so no set is
//! visited twice. A node is cut when the `k` best remaining gains cannot
//! cover what is left.
//!
//! The first square branched on is the corner `(1,1)`; the transpose fixes
//! it and swaps its column with its row, so only the row and the diagonal
//! need to be tried there.

use serde::{Deserialize, Serialize};

use super::{is_dominating, labels, SubsetKind, VertexSubsetResult};
use crate::board::{BitRow, QueensGraph};
use crate::limits::{Budget, SearchLimits};

/// `(lower, upper)` for `gamma(Q(n))`: `ceil((n-1)/2)` raised to `2k+1` when
/// `n = 4k+1`, and `2p+q` for `n = 3p+q`.
pub fn domination_bounds(n: usize) -> (usize, usize) {
    let mut lower = n / 2;
    if n % 4 == 1 {
        lower = lower.max(2 * (n / 4) + 1);
    }
    (lower, 2 * (n / 3) + n % 3)
}

fn closed_neighborhoods(g: &QueensGraph) -> Vec<BitRow> {
    (0..g.order())
        .map(|v| {
            let mut r = g.adjacency_row(v).clone();
            r.set(v);
            r
        })
        .collect()
}

/// Greedy cover: repeatedly take the square covering the most uncovered
/// squares. Always dominating, rarely minimum.
pub fn greedy_dominating_set(g: &QueensGraph) -> Vec<usize> {
    let closed = closed_neighborhoods(g);
    let order = g.order();
    let mut uncovered = BitRow::new(order);
    for v in 0..order {
        uncovered.set(v);
    }
    let mut set = Vec::new();
    while !uncovered.is_empty() {
        let best = (0..order)
            .max_by_key(|&v| (closed[v].and_count(&uncovered), std::cmp::Reverse(v)))
            .expect("non-empty board");
        set.push(best);
        uncovered.difference_with(&closed[best]);
    }
    set
}

struct Search<'a> {
    n: usize,
    closed: &'a [BitRow],
    budget: Budget,
    chosen: Vec<usize>,
    gains: Vec<usize>,
}

impl Search<'_> {
    /// Finds a dominating set of exactly `k` more squares given the
    /// uncovered squares and the squares excluded from use.
    fn dfs(&mut self, uncovered: &BitRow, forbidden: &BitRow, k: usize) -> bool {
        let Some(u) = uncovered.iter().next() else {
            return true;
        };
        if k == 0 || !self.budget.tick() {
            return false;
        }
        let left = uncovered.count();
        let order = self.closed.len();
        let mut cands: Vec<(usize, usize)> = Vec::new();
        self.gains.clear();
        for v in 0..order {
            if forbidden.get(v) {
                continue;
            }
            let gain = self.closed[v].and_count(uncovered);
            if gain > 0 {
                self.gains.push(gain);
                if self.closed[u].get(v) {
                    cands.push((gain, v));
                }
            }
        }
        self.gains.sort_unstable_by(|a, b| b.cmp(a));
        if self.gains.iter().take(k).sum::<usize>() < left {
            return false;
        }
        if self.chosen.is_empty() && u == 0 {
            let n = self.n;
            // column 1 below the corner is the transpose of row 1
            cands.retain(|&(_, v)| v < n || v % (n + 1) == 0);
        }
        cands.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut excluded = forbidden.clone();
        for (_, v) in cands {
            let mut next = uncovered.clone();
            next.difference_with(&self.closed[v]);
            self.chosen.push(v);
            if self.dfs(&next, &excluded, k - 1) {
                return true;
            }
            self.chosen.pop();
            if self.budget.exhausted {
                return false;
            }
            excluded.set(v);
        }
        false
    }
}

/// Exact domination number. The search starts at the lower bound of
/// [`domination_bounds`]; use [`domination_search`] to start elsewhere.
pub fn domination_number(g: &QueensGraph, limits: SearchLimits) -> VertexSubsetResult {
    domination_search(g, domination_bounds(g.n()).0.max(1), limits)
}

/// Iterative deepening from `start`, which the caller asserts is a lower
/// bound for `gamma`.
pub fn domination_search(g: &QueensGraph, start: usize, limits: SearchLimits) -> VertexSubsetResult {
    let n = g.n();
    let order = g.order();
    let closed = closed_neighborhoods(g);
    let mut best = greedy_dominating_set(g);
    let mut search = Search {
        n,
        closed: &closed,
        budget: limits.start(),
        chosen: Vec::new(),
        gains: Vec::with_capacity(order),
    };
    let mut lower = start.max(1);
    let mut all = BitRow::new(order);
    for v in 0..order {
        all.set(v);
    }
    while lower < best.len() {
        search.chosen.clear();
        if search.dfs(&all, &BitRow::new(order), lower) {
            best = search.chosen.clone();
            break;
        }
        if search.budget.exhausted {
            break;
        }
        lower += 1;
    }
    debug_assert!(is_dominating(g, &best));
    let value = best.len();
    let upper_bound = value.min(domination_bounds(n).1);
    VertexSubsetResult {
        kind: SubsetKind::Dominating,
        n,
        value,
        optimal: lower >= value,
        lower_bound: lower.min(value),
        upper_bound,
        witness: labels(best),
        nodes: search.budget.nodes,
        millis: search.budget.millis(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotonicityReport {
    /// Consecutive pairs `(n, n+1)` that were checked.
    pub pairs: usize,
    /// `gamma(n+1) <= gamma(n) + 1` on every pair; this is a theorem.
    pub proposition_holds: bool,
    pub proposition_violations: Vec<usize>,
    /// `gamma(n) <= gamma(n+1)` on every pair; this is only conjectured and
    /// is reported, never asserted.
    pub conjecture_consistent: bool,
    pub conjecture_counterexamples: Vec<usize>,
}

/// Checks consecutive entries of a `(n, gamma)` table.
pub fn monotonicity_check(table: &[(usize, usize)]) -> MonotonicityReport {
    let mut sorted = table.to_vec();
    sorted.sort_unstable();
    let mut pairs = 0;
    let mut prop = Vec::new();
    let mut conj = Vec::new();
    for w in sorted.windows(2) {
        let ((n, a), (m, b)) = (w[0], w[1]);
        if m != n + 1 {
            continue;
        }
        pairs += 1;
        if b > a + 1 {
            prop.push(n);
        }
        if a > b {
            conj.push(n);
        }
    }
    MonotonicityReport {
        pairs,
        proposition_holds: prop.is_empty(),
        proposition_violations: prop,
        conjecture_consistent: conj.is_empty(),
        conjecture_counterexamples: conj,
    }
}

/// `i,j,value` rows with `n = 9i + j`.
pub fn gamma_table_csv(table: &[(usize, usize)]) -> String {
    let mut out = String::from("i,j,value\n");
    for &(n, g) in table {
        out.push_str(&format!("{},{},{}\n", n / 9, n % 9, g));
    }
    out
}
