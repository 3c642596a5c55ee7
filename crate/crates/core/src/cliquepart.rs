//! Edge clique partitions (ECPs) and the least-eigenvalue bound they give.
//!
//! If the edges of `G` are split into cliques and `m` is the largest number
//! of those cliques meeting at one vertex, every eigenvalue of `G` is at least
//! `-m`. The eigenspace of `-m` (when it exists) is the solution set of a
//! linear system: every clique sums to zero, and every vertex lying in fewer
//! than `m` cliques is zero. For `Q(n)` with rows, columns and diagonals as
//! the cliques, `m = 4`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::board::{BitRow, QueensGraph};
use crate::error::{Error, Result};
use crate::exactlin::{rat_kernel, RatMatrix};
use crate::graph::Graph;

/// A validated partition of `E(G)` into cliques. Parts are stored as sorted
/// vertex sets; the edge set of a part is every pair of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCliquePartition {
    parts: Vec<Vec<usize>>,
    clique_degree: Vec<usize>,
    max_clique_degree: usize,
}

impl EdgeCliquePartition {
    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `m_v(P)`: number of parts whose clique contains `v`.
    pub fn clique_degree(&self, v: usize) -> usize {
        self.clique_degree[v]
    }

    pub fn clique_degrees(&self) -> &[usize] {
        &self.clique_degree
    }

    /// `m_G(P)`.
    pub fn max_clique_degree(&self) -> usize {
        self.max_clique_degree
    }

    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for &m in &self.clique_degree {
            *h.entry(m).or_insert(0) += 1;
        }
        h
    }

    pub fn report(&self) -> EcpReport {
        EcpReport {
            parts: self
                .parts
                .iter()
                .map(|p| p.iter().map(|v| v + 1).collect())
                .collect(),
            clique_degree_histogram: self.histogram(),
            max_clique_degree: self.max_clique_degree,
        }
    }
}

/// JSON form: parts as lists of 1-based vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EcpReport {
    pub parts: Vec<Vec<usize>>,
    pub clique_degree_histogram: BTreeMap<usize, usize>,
    pub max_clique_degree: usize,
}

/// Checks that `parts` is an edge clique partition of `g` and computes the
/// clique degrees. Fails on the first part that is not a clique, repeats an
/// edge, or is degenerate, and afterwards on any uncovered edge.
pub fn verify_ecp<G: Graph + ?Sized>(g: &G, parts: Vec<Vec<usize>>) -> Result<EdgeCliquePartition> {
    let d = g.order();
    let mut covered: Vec<BitRow> = vec![BitRow::new(d); d];
    let mut clique_degree = vec![0usize; d];
    let mut sorted_parts = Vec::with_capacity(parts.len());
    for (k, mut part) in parts.into_iter().enumerate() {
        part.sort_unstable();
        if part.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPartition(format!("part {k} repeats a vertex")));
        }
        if part.len() < 2 {
            return Err(Error::InvalidPartition(format!("part {k} has no edges")));
        }
        if let Some(&v) = part.iter().find(|&&v| v >= d) {
            return Err(Error::InvalidPartition(format!(
                "part {k} names vertex {v} outside the graph"
            )));
        }
        for (a, &u) in part.iter().enumerate() {
            for &v in &part[a + 1..] {
                if !g.is_adjacent(u, v) {
                    return Err(Error::InvalidPartition(format!(
                        "part {k} is not a clique: {u} and {v} are not adjacent"
                    )));
                }
                if covered[u].get(v) {
                    return Err(Error::InvalidPartition(format!(
                        "part {k} overlaps an earlier part on edge {u}-{v}"
                    )));
                }
                covered[u].set(v);
                covered[v].set(u);
            }
            clique_degree[u] += 1;
        }
        sorted_parts.push(part);
    }
    for u in 0..d {
        if let Some(&v) = g.neighbors(u).iter().find(|&&v| !covered[u].get(v)) {
            return Err(Error::InvalidPartition(format!("edge {u}-{v} is not covered")));
        }
    }
    let max_clique_degree = clique_degree.iter().copied().max().unwrap_or(0);
    Ok(EdgeCliquePartition {
        parts: sorted_parts,
        clique_degree,
        max_clique_degree,
    })
}

/// The partition with one part per edge; every `m_v` equals the degree.
pub fn singleton_ecp<G: Graph + ?Sized>(g: &G) -> EdgeCliquePartition {
    let parts = (0..g.order())
        .flat_map(|u| {
            g.neighbors(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| vec![u, v])
        })
        .collect();
    verify_ecp(g, parts).expect("single edges always partition the edge set")
}

/// Vertex sets of the board lines used as cliques: rows, columns, then the
/// anti-diagonals `i + j = s` for `s` in `3..=2n-1`, then the diagonals
/// `i - j = t` for `t` in `-(n-2)..=n-2`. One-square corner diagonals carry no
/// edge and are left out.
pub fn queens_lines(n: usize) -> Vec<Vec<usize>> {
    let idx = |i: usize, j: usize| (i - 1) * n + (j - 1);
    let mut parts = Vec::with_capacity(6 * n);
    for i in 1..=n {
        parts.push((1..=n).map(|j| idx(i, j)).collect());
    }
    for j in 1..=n {
        parts.push((1..=n).map(|i| idx(i, j)).collect());
    }
    for s in 3..2 * n {
        parts.push(
            (1..=n)
                .filter(|&i| s > i && s - i >= 1 && s - i <= n)
                .map(|i| idx(i, s - i))
                .collect(),
        );
    }
    let span = n as isize - 2;
    for t in -span..=span {
        parts.push(
            (1..=n)
                .filter_map(|i| {
                    let j = i as isize - t;
                    (1..=n as isize).contains(&j).then(|| idx(i, j as usize))
                })
                .collect(),
        );
    }
    parts
}

pub fn queens_ecp(g: &QueensGraph) -> Result<EdgeCliquePartition> {
    if g.n() < 2 {
        return Err(Error::BoardSize {
            n: g.n(),
            reason: "the line partition needs n >= 2",
        });
    }
    verify_ecp(g, queens_lines(g.n()))
}

/// `-m_G(P)`, a lower bound on every eigenvalue.
pub fn eigen_lower_bound(p: &EdgeCliquePartition) -> i64 {
    -(p.max_clique_degree() as i64)
}

/// Coefficient matrix whose null space is the eigenspace of `-m` (trivial
/// when `-m` is not an eigenvalue): one row per part summing its clique, then
/// one unit row per vertex with `m_v != m`. Columns are vertices.
pub fn minus_m_eigen_system<G: Graph + ?Sized>(g: &G, p: &EdgeCliquePartition) -> RatMatrix {
    let order = g.order();
    let m = p.max_clique_degree();
    let mut sys = RatMatrix::zeros(0, order);
    let mut row = vec![0i64; order];
    for part in p.parts() {
        row.fill(0);
        for &v in part {
            row[v] = 1;
        }
        sys.push_row(&row);
    }
    for v in (0..order).filter(|&v| p.clique_degree(v) != m) {
        row.fill(0);
        row[v] = 1;
        sys.push_row(&row);
    }
    sys
}

/// Integer basis of the `-m` eigenspace, read off the condition system.
pub fn minus_m_eigenvectors<G: Graph + ?Sized>(g: &G, p: &EdgeCliquePartition) -> Vec<Vec<BigInt>> {
    rat_kernel(&minus_m_eigen_system(g, p))
}

/// Outcome of comparing the least eigenvalue with an ECP.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContentBound {
    pub neg_lambda_min: f64,
    pub max_clique_degree: usize,
    pub parts: usize,
    /// `-lambda_min <= m_G(P) <= |P|` within the tolerance.
    pub holds: bool,
}

/// `-lambda_min` is a lower bound on the content (the fewest parts of any
/// ECP). Checks the chain `-lambda_min <= m_G(P) <= |P|` for the supplied
/// partitions; the content itself is not computed.
pub fn content_lower_bound(lambda_min: f64, partitions: &[&EdgeCliquePartition], tol: f64) -> Vec<ContentBound> {
    partitions
        .iter()
        .map(|p| {
            let m = p.max_clique_degree();
            ContentBound {
                neg_lambda_min: -lambda_min,
                max_clique_degree: m,
                parts: p.len(),
                holds: -lambda_min <= m as f64 + tol && m <= p.len(),
            }
        })
        .collect()
}
