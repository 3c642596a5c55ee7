//! Maximum stable sets by row-by-row queen placement.
//!
//! A stable set of `Q(n)` has at most one vertex per row, so the search walks
//! the rows in order and either places a queen on a free square of the row or
//! leaves the row empty.

use serde::{Deserialize, Serialize};

use super::{labels, SubsetKind, VertexSubsetResult};
use crate::board::{BitRow, QueensGraph};
use crate::limits::{Budget, SearchLimits};

struct Search<'a> {
    g: &'a QueensGraph,
    n: usize,
    budget: Budget,
    current: Vec<usize>,
    best: Vec<usize>,
    /// Stop as soon as a set of this size is found.
    target: usize,
}

impl Search<'_> {
    fn run(&mut self, row: usize, blocked: &BitRow) {
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        if row == self.n || self.best.len() >= self.target {
            return;
        }
        if self.current.len() + (self.n - row) <= self.best.len() {
            return;
        }
        if !self.budget.tick() {
            return;
        }
        for col in 0..self.n {
            let v = row * self.n + col;
            if blocked.get(v) {
                continue;
            }
            let mut next = blocked.clone();
            next.union_with(self.g.adjacency_row(v));
            next.set(v);
            self.current.push(v);
            self.run(row + 1, &next);
            self.current.pop();
            if self.budget.exhausted || self.best.len() >= self.target {
                return;
            }
        }
        self.run(row + 1, blocked);
    }
}

/// Exact stability number with a maximum stable set as witness.
pub fn max_stable_set(g: &QueensGraph, limits: SearchLimits) -> VertexSubsetResult {
    let n = g.n();
    let mut s = Search {
        g,
        n,
        budget: limits.start(),
        current: Vec::new(),
        best: Vec::new(),
        target: n,
    };
    s.run(0, &BitRow::new(g.order()));
    let value = s.best.len();
    let optimal = !s.budget.exhausted;
    VertexSubsetResult {
        kind: SubsetKind::Stable,
        n,
        value,
        optimal,
        lower_bound: value,
        upper_bound: if optimal { value } else { n },
        witness: labels(s.best),
        nodes: s.budget.nodes,
        millis: s.budget.millis(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableCount {
    pub n: usize,
    pub size: usize,
    pub count: u64,
    pub complete: bool,
    pub nodes: u64,
}

fn count_sets(
    g: &QueensGraph,
    row: usize,
    placed: usize,
    size: usize,
    blocked: &BitRow,
    budget: &mut Budget,
) -> u64 {
    let n = g.n();
    if placed == size {
        return 1;
    }
    if placed + (n - row) < size || !budget.tick() {
        return 0;
    }
    let mut total = 0;
    for col in 0..n {
        let v = row * n + col;
        if !blocked.get(v) {
            let mut next = blocked.clone();
            next.union_with(g.adjacency_row(v));
            next.set(v);
            total += count_sets(g, row + 1, placed + 1, size, &next, budget);
        }
    }
    total + count_sets(g, row + 1, placed, size, blocked, budget)
}

/// Number of distinct maximum stable sets. For `n >= 4` these are exactly the
/// solutions of the `n`-queens puzzle.
pub fn count_maximum_stable_sets(g: &QueensGraph, limits: SearchLimits) -> StableCount {
    let alpha = max_stable_set(g, limits);
    let mut budget = limits.start();
    let count = count_sets(g, 0, 0, alpha.value, &BitRow::new(g.order()), &mut budget);
    StableCount {
        n: g.n(),
        size: alpha.value,
        count,
        complete: alpha.optimal && !budget.exhausted,
        nodes: alpha.nodes + budget.nodes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_boards() {
        for (n, alpha) in [(1, 1), (2, 1), (3, 2), (4, 4), (5, 5), (6, 6)] {
            let g = QueensGraph::new(n).unwrap();
            let r = max_stable_set(&g, SearchLimits::UNLIMITED);
            assert_eq!(r.value, alpha, "n = {n}");
            assert!(r.optimal);
            assert!(r.witness_valid(&g));
        }
    }

    #[test]
    fn queens_puzzle_counts() {
        for (n, count) in [(4, 2), (5, 10), (6, 4)] {
            let c = count_maximum_stable_sets(&QueensGraph::new(n).unwrap(), SearchLimits::UNLIMITED);
            assert_eq!(c.count, count);
            assert!(c.complete);
        }
        let c3 = count_maximum_stable_sets(&QueensGraph::new(3).unwrap(), SearchLimits::UNLIMITED);
        assert_eq!((c3.size, c3.count), (2, 8));
    }

    #[test]
    fn cap_is_honest() {
        let g = QueensGraph::new(9).unwrap();
        let r = max_stable_set(&g, SearchLimits::nodes(3));
        assert!(!r.optimal);
        assert!(r.witness_valid(&g));
    }
}
