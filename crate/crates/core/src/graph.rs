//! A minimal graph interface so the generic results (clique partitions,
//! exact solvers) run on arbitrary small graphs as well as on `Q(n)`.

use crate::board::{BitRow, QueensGraph};

pub trait Graph {
    fn order(&self) -> usize;
    fn neighbors(&self, v: usize) -> &[usize];
    fn adjacency_row(&self, v: usize) -> &BitRow;

    fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency_row(u).get(v)
    }

    fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    fn edge_count(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).sum::<usize>() / 2
    }
}

impl Graph for QueensGraph {
    fn order(&self) -> usize {
        QueensGraph::order(self)
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        QueensGraph::neighbors(self, v)
    }

    fn adjacency_row(&self, v: usize) -> &BitRow {
        QueensGraph::adjacency_row(self, v)
    }
}

/// Undirected simple graph given by an edge list.
#[derive(Debug, Clone)]
pub struct SimpleGraph {
    neighbors: Vec<Vec<usize>>,
    rows: Vec<BitRow>,
}

impl SimpleGraph {
    /// Self-loops and repeated edges are ignored.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Self {
        let mut rows = vec![BitRow::new(order); order];
        for &(u, v) in edges {
            if u != v {
                rows[u].set(v);
                rows[v].set(u);
            }
        }
        let neighbors = rows.iter().map(|r| r.iter().collect()).collect();
        SimpleGraph { neighbors, rows }
    }

    pub fn complete(order: usize) -> Self {
        let edges: Vec<_> = (0..order)
            .flat_map(|u| ((u + 1)..order).map(move |v| (u, v)))
            .collect();
        Self::from_edges(order, &edges)
    }

    pub fn cycle(order: usize) -> Self {
        let edges: Vec<_> = (0..order).map(|u| (u, (u + 1) % order)).collect();
        Self::from_edges(order, &edges)
    }

    pub fn adjacency_f64(&self) -> Vec<Vec<f64>> {
        let d = self.neighbors.len();
        let mut m = vec![vec![0.0; d]; d];
        for (u, ns) in self.neighbors.iter().enumerate() {
            for &v in ns {
                m[u][v] = 1.0;
            }
        }
        m
    }
}

impl Graph for SimpleGraph {
    fn order(&self) -> usize {
        self.neighbors.len()
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    fn adjacency_row(&self, v: usize) -> &BitRow {
        &self.rows[v]
    }
}

/// Exact integer adjacency matrix of any [`Graph`].
pub fn adjacency_matrix<G: Graph + ?Sized>(g: &G) -> crate::exactlin::IntMatrix {
    let d = g.order();
    let mut m = crate::exactlin::IntMatrix::zeros(d, d);
    for u in 0..d {
        for &v in g.neighbors(u) {
            m.set(u, v, 1.into());
        }
    }
    m
}
