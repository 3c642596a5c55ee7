//! The 0-1 programme whose optimum gives the domination number:
//! maximise `sum x_v` subject to `(A + I) x <= d`, `x` binary, where `d` is
//! the degree vector.
//!
//! Row `v` says that at least one square of the closed neighbourhood of `v`
//! has `x = 0`, so the zero set `D* = {v : x_v = 0}` of any feasible point is
//! a dominating set and `gamma = |V| - max eta`.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlpModel {
    pub variables: usize,
    /// Support of each constraint row: the closed neighbourhood, ascending.
    pub rows: Vec<Vec<usize>>,
    /// Right-hand side of each row: the vertex degree.
    pub rhs: Vec<usize>,
}

pub fn build_blp<G: Graph + ?Sized>(g: &G) -> BlpModel {
    let order = g.order();
    let rows = (0..order)
        .map(|v| {
            let mut r: Vec<usize> = g.neighbors(v).to_vec();
            r.push(v);
            r.sort_unstable();
            r
        })
        .collect();
    BlpModel {
        variables: order,
        rows,
        rhs: (0..order).map(|v| g.degree(v)).collect(),
    }
}

impl BlpModel {
    pub fn constraint_count(&self) -> usize {
        self.rows.len()
    }

    /// `eta(x) = sum x_v`.
    pub fn objective(&self, x: &[bool]) -> usize {
        x.iter().filter(|&&b| b).count()
    }

    /// Index of the first violated row, if any.
    pub fn first_violation(&self, x: &[bool]) -> Option<usize> {
        if x.len() != self.variables {
            return Some(0);
        }
        (0..self.rows.len()).find(|&i| self.rows[i].iter().filter(|&&v| x[v]).count() > self.rhs[i])
    }

    pub fn is_feasible(&self, x: &[bool]) -> bool {
        self.first_violation(x).is_none()
    }

    /// `D* = {v : x_v = 0}`.
    pub fn decode(&self, x: &[bool]) -> Vec<usize> {
        (0..x.len()).filter(|&v| !x[v]).collect()
    }

    /// The point whose zero set is `set`.
    pub fn encode(&self, set: &[usize]) -> Vec<bool> {
        let mut x = vec![true; self.variables];
        for &v in set {
            x[v] = false;
        }
        x
    }
}
