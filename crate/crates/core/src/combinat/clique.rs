//! Maximum clique by branch and bound with a greedy colouring bound.

use super::{labels, SubsetKind, VertexSubsetResult};
use crate::graph::Graph;
use crate::limits::{Budget, SearchLimits};

struct Search<'a, G: Graph + ?Sized> {
    g: &'a G,
    budget: Budget,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl<G: Graph + ?Sized> Search<'_, G> {
    /// Greedy sequential colouring of `cand`; returns the vertices ordered by
    /// colour together with the colour number of each.
    fn color_sort(&self, cand: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in cand {
            match classes
                .iter_mut()
                .find(|c| c.iter().all(|&u| !self.g.is_adjacent(u, v)))
            {
                Some(c) => c.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut order = Vec::with_capacity(cand.len());
        let mut bound = Vec::with_capacity(cand.len());
        for (k, c) in classes.into_iter().enumerate() {
            for v in c {
                order.push(v);
                bound.push(k + 1);
            }
        }
        (order, bound)
    }

    fn expand(&mut self, cand: Vec<usize>) {
        if !self.budget.tick() {
            return;
        }
        let (order, bound) = self.color_sort(&cand);
        for idx in (0..order.len()).rev() {
            if self.current.len() + bound[idx] <= self.best.len() {
                return;
            }
            let v = order[idx];
            self.current.push(v);
            let next: Vec<usize> = order[..idx]
                .iter()
                .copied()
                .filter(|&u| self.g.is_adjacent(u, v))
                .collect();
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            if self.budget.exhausted {
                return;
            }
        }
    }
}

/// Exact clique number. The `n` of the result is the board side when the
/// order is a perfect square and the order otherwise.
pub fn max_clique<G: Graph + ?Sized>(g: &G, limits: SearchLimits) -> VertexSubsetResult {
    let order = g.order();
    let mut s = Search {
        g,
        budget: limits.start(),
        current: Vec::new(),
        best: Vec::new(),
    };
    // vertices of large degree first so good cliques are found early
    let mut cand: Vec<usize> = (0..order).collect();
    cand.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    if order > 0 {
        s.expand(cand);
    }
    let value = s.best.len();
    let optimal = !s.budget.exhausted;
    VertexSubsetResult {
        kind: SubsetKind::Clique,
        n: board_side(order),
        value,
        optimal,
        lower_bound: value,
        upper_bound: if optimal { value } else { order },
        witness: labels(s.best),
        nodes: s.budget.nodes,
        millis: s.budget.millis(),
    }
}

fn board_side(order: usize) -> usize {
    let r = (order as f64).sqrt().round() as usize;
    if r * r == order {
        r
    } else {
        order
    }
}
