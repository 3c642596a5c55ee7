//! Board geometry and the adjacency structure of `Q(n)`.
//!
//! Squares are addressed by 1-based `(row, col)` with row 1 at the top. The
//! linear label of a square is `(row - 1) * n + col`; internally vertices are
//! the 0-based index `label - 1`, so label order and index order coincide.

use std::collections::VecDeque;
use std::fmt::Write as _;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::IntMatrix;

/// Largest board accepted unless the caller raises it.
pub const DEFAULT_MAX_N: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoardCoord {
    pub row: usize,
    pub col: usize,
}

impl BoardCoord {
    pub fn new(n: usize, row: usize, col: usize) -> Result<Self> {
        if row == 0 || col == 0 || row > n || col > n {
            return Err(Error::BadCoord { n, row, col });
        }
        Ok(BoardCoord { row, col })
    }

    /// 1-based linear label, left to right then top to bottom.
    pub fn label(&self, n: usize) -> usize {
        (self.row - 1) * n + self.col
    }

    pub fn index(&self, n: usize) -> usize {
        self.label(n) - 1
    }

    pub fn from_index(n: usize, index: usize) -> Self {
        BoardCoord {
            row: index / n + 1,
            col: index % n + 1,
        }
    }

    /// Peripheral ring, 1 for the border.
    pub fn ring(&self, n: usize) -> usize {
        self.row
            .min(self.col)
            .min(n + 1 - self.row)
            .min(n + 1 - self.col)
    }

    pub fn attacks(&self, other: &BoardCoord) -> bool {
        if self == other {
            return false;
        }
        let (i, j) = (self.row as isize, self.col as isize);
        let (p, q) = (other.row as isize, other.col as isize);
        i == p || j == q || i + j == p + q || i - j == p - q
    }
}

/// Growable bitset over vertex indices. Used for adjacency rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn new(len: usize) -> Self {
        BitRow {
            words: vec![0; len.div_ceil(64)],
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.words[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        self.words[i >> 6] &= !(1 << (i & 63));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    pub fn and_count(&self, other: &BitRow) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersect_with(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + t)
                }
            })
        })
    }
}

/// The n-Queens graph. Immutable once built.
#[derive(Debug, Clone)]
pub struct QueensGraph {
    n: usize,
    neighbors: Vec<Vec<usize>>,
    rows: Vec<BitRow>,
    degree: Vec<usize>,
}

impl QueensGraph {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_cap(n, DEFAULT_MAX_N)
    }

    pub fn with_cap(n: usize, max_n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::BoardSize {
                n,
                reason: "the board needs at least one square",
            });
        }
        if n > max_n {
            return Err(Error::BoardSize {
                n,
                reason: "exceeds the configured board cap",
            });
        }
        let order = n * n;
        let mut neighbors = vec![Vec::new(); order];
        let mut rows = vec![BitRow::new(order); order];
        for u in 0..order {
            let a = BoardCoord::from_index(n, u);
            for v in (u + 1)..order {
                let b = BoardCoord::from_index(n, v);
                if a.attacks(&b) {
                    neighbors[u].push(v);
                    neighbors[v].push(u);
                    rows[u].set(v);
                    rows[v].set(u);
                }
            }
        }
        let degree = neighbors.iter().map(Vec::len).collect();
        Ok(QueensGraph {
            n,
            neighbors,
            rows,
            degree,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.n * self.n
    }

    /// Sorted neighbour indices of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn adjacency_row(&self, v: usize) -> &BitRow {
        &self.rows[v]
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].get(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    pub fn coord(&self, v: usize) -> BoardCoord {
        BoardCoord::from_index(self.n, v)
    }

    pub fn index(&self, row: usize, col: usize) -> Result<usize> {
        Ok(BoardCoord::new(self.n, row, col)?.index(self.n))
    }

    pub fn edge_count(&self) -> usize {
        self.degree.iter().sum::<usize>() / 2
    }

    /// Edges as `(u, v)` index pairs with `u < v`, in label order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        self.degree.iter().copied().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degree.iter().copied().max().unwrap_or(0)
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        let d = self.order();
        let mut m = IntMatrix::zeros(d, d);
        for (u, ns) in self.neighbors.iter().enumerate() {
            for &v in ns {
                m.set(u, v, 1.into());
            }
        }
        m
    }

    pub fn adjacency_f64(&self) -> Vec<Vec<f64>> {
        let d = self.order();
        let mut m = vec![vec![0.0; d]; d];
        for (u, ns) in self.neighbors.iter().enumerate() {
            for &v in ns {
                m[u][v] = 1.0;
            }
        }
        m
    }

    /// Exact `A x` with integer entries, without materialising `A`.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        self.neighbors
            .iter()
            .map(|ns| ns.iter().map(|&v| x[v]).sum())
            .collect()
    }

    /// Eccentricity maximum over all vertices (BFS from every vertex).
    pub fn diameter(&self) -> usize {
        let d = self.order();
        let mut best = 0;
        let mut dist = vec![usize::MAX; d];
        let mut queue = VecDeque::new();
        for s in 0..d {
            dist.fill(usize::MAX);
            dist[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &v in &self.neighbors[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            best = best.max(dist.iter().copied().max().unwrap_or(0));
        }
        best
    }

    /// CSV edge list, one `u,v` line per edge with 1-based labels and `u < v`.
    pub fn edge_csv(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{},{}", u + 1, v + 1);
        }
        out
    }

    pub fn summary(&self) -> GraphSummary {
        GraphSummary {
            n: self.n,
            vertices: self.order(),
            edges: self.edge_count(),
            min_degree: self.min_degree(),
            max_degree: self.max_degree(),
            avg_degree: average_degree(self.n).to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub vertices: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    /// Exact rational, e.g. `"64/5"`.
    pub avg_degree: String,
}

/// `n(n-1)(5n-1)/3`.
pub fn edge_count_formula(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    n * (n - 1) * (5 * n - 1) / 3
}

/// `2(n-1)(5n-1)/(3n)`, equal to `2e/n^2`.
pub fn average_degree(n: usize) -> Rational64 {
    let n = n as i64;
    if n == 0 {
        return Rational64::from_integer(0);
    }
    Rational64::new(2 * (n - 1) * (5 * n - 1), 3 * n)
}

/// `3(n-1) + 2(ring - 1)`.
pub fn degree_formula(n: usize, coord: BoardCoord) -> usize {
    3 * (n - 1) + 2 * (coord.ring(n) - 1)
}

pub fn min_degree_formula(n: usize) -> usize {
    3 * (n - 1)
}

/// `4n-5` for even boards, `4n-4` for odd ones (`0` for the single square).
pub fn max_degree_formula(n: usize) -> usize {
    match n {
        0 | 1 => 0,
        _ if n % 2 == 0 => 4 * n - 5,
        _ => 4 * n - 4,
    }
}

/// Average and maximum degree, which bracket the largest eigenvalue.
pub fn index_bounds(n: usize) -> Result<(Rational64, usize)> {
    if n < 2 {
        return Err(Error::BoardSize {
            n,
            reason: "index bounds need n >= 2",
        });
    }
    Ok((average_degree(n), max_degree_formula(n)))
}

/// Concentric rings of squares, outermost first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeripheralPartition {
    pub n: usize,
    pub cells: Vec<Vec<usize>>,
}

impl PeripheralPartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// Closed-form ring sizes `4(n - (2i - 1))`, last ring 4 or 1.
    pub fn expected_sizes(n: usize) -> Vec<usize> {
        let rings = n.div_ceil(2);
        (1..=rings)
            .map(|i| {
                if i < rings {
                    4 * (n - (2 * i - 1))
                } else if n % 2 == 0 {
                    4
                } else {
                    1
                }
            })
            .collect()
    }
}

pub fn peripheral_partition(n: usize) -> Result<PeripheralPartition> {
    if n == 0 {
        return Err(Error::BoardSize {
            n,
            reason: "the board needs at least one square",
        });
    }
    let mut cells = vec![Vec::new(); n.div_ceil(2)];
    for v in 0..n * n {
        let ring = BoardCoord::from_index(n, v).ring(n);
        cells[ring - 1].push(v);
    }
    Ok(PeripheralPartition { n, cells })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_edges(n: usize) -> usize {
        let d = n * n;
        let mut count = 0;
        for u in 0..d {
            for v in (u + 1)..d {
                let (a, b) = (BoardCoord::from_index(n, u), BoardCoord::from_index(n, v));
                let (i, j, p, q) = (a.row as i64, a.col as i64, b.row as i64, b.col as i64);
                if i == p || j == q || (i - p).abs() == (j - q).abs() {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn rejects_empty_board() {
        assert!(QueensGraph::new(0).is_err());
        assert!(QueensGraph::with_cap(9, 8).is_err());
    }

    #[test]
    fn small_boards() {
        let g1 = QueensGraph::new(1).unwrap();
        assert_eq!((g1.order(), g1.edge_count()), (1, 0));
        let g2 = QueensGraph::new(2).unwrap();
        assert_eq!((g2.order(), g2.edge_count()), (4, 6));
        assert!(g2.degrees().iter().all(|&d| d == 3));
        assert_eq!(QueensGraph::new(4).unwrap().edge_count(), 76);
        assert_eq!(brute_edges(4), 76);
    }

    #[test]
    fn size_formula_values() {
        assert_eq!(edge_count_formula(1), 0);
        assert_eq!(edge_count_formula(2), 6);
        assert_eq!(edge_count_formula(8), brute_edges(8) as u64);
        assert_eq!(edge_count_formula(8), 728);
    }

    #[test]
    fn average_degree_values() {
        assert_eq!(average_degree(1), Rational64::from_integer(0));
        assert_eq!(average_degree(2), Rational64::from_integer(3));
        assert_eq!(
            average_degree(5),
            Rational64::new(2 * brute_edges(5) as i64, 25)
        );
        assert_eq!(average_degree(5), Rational64::new(64, 5));
    }

    #[test]
    fn degree_formula_values() {
        let g = QueensGraph::new(5).unwrap();
        let corner = BoardCoord::new(5, 1, 1).unwrap();
        let centre = BoardCoord::new(5, 3, 3).unwrap();
        assert_eq!(degree_formula(5, corner), 12);
        assert_eq!(g.degree(corner.index(5)), 12);
        assert_eq!(degree_formula(5, centre), 16);
        assert_eq!(g.degree(centre.index(5)), 16);
        let g4 = QueensGraph::new(4).unwrap();
        for v in &peripheral_partition(4).unwrap().cells[1] {
            assert_eq!(g4.degree(*v), 11);
            assert_eq!(degree_formula(4, g4.coord(*v)), 11);
        }
    }

    #[test]
    fn peripheral_sizes() {
        assert_eq!(peripheral_partition(5).unwrap().sizes(), vec![16, 8, 1]);
        assert_eq!(peripheral_partition(4).unwrap().sizes(), vec![12, 4]);
        assert_eq!(peripheral_partition(1).unwrap().sizes(), vec![1]);
        // the rings listed for the 5x5 board, as labels
        let p = peripheral_partition(5).unwrap();
        let labels: Vec<usize> = p.cells[1].iter().map(|v| v + 1).collect();
        assert_eq!(labels, vec![7, 8, 9, 12, 14, 17, 18, 19]);
        assert_eq!(p.cells[2], vec![12]);
    }

    #[test]
    fn index_bounds_values() {
        assert!(index_bounds(1).is_err());
        assert_eq!(index_bounds(2).unwrap(), (Rational64::from_integer(3), 3));
        assert_eq!(index_bounds(6).unwrap(), (Rational64::new(145, 9), 19));
        assert_eq!(index_bounds(5).unwrap(), (Rational64::new(64, 5), 16));
    }

    #[test]
    fn labels_follow_reading_order() {
        let c = BoardCoord::new(4, 2, 3).unwrap();
        assert_eq!(c.label(4), 7);
        assert_eq!(BoardCoord::from_index(4, 6), c);
        assert!(BoardCoord::new(4, 0, 1).is_err());
        assert!(BoardCoord::new(4, 1, 5).is_err());
    }

    #[test]
    fn diameters() {
        assert_eq!(QueensGraph::new(1).unwrap().diameter(), 0);
        assert_eq!(QueensGraph::new(2).unwrap().diameter(), 1);
        for n in 3..=8 {
            assert_eq!(QueensGraph::new(n).unwrap().diameter(), 2, "n={n}");
        }
    }

    #[test]
    fn csv_and_summary() {
        let g = QueensGraph::new(2).unwrap();
        assert_eq!(g.edge_csv(), "1,2\n1,3\n1,4\n2,3\n2,4\n3,4\n");
        let s = QueensGraph::new(5).unwrap().summary();
        assert_eq!(s.edges, 160);
        assert_eq!(s.avg_degree, "64/5");
        assert_eq!((s.min_degree, s.max_degree), (12, 16));
    }
}
