//! The folded equitable partition of `Q(n)` and its divisor matrix.
//!
//! Squares are folded into the top-left quadrant, `r = min(i, n+1-i)` and
//! `c = min(j, n+1-j)`, then across the main diagonal, `a = min(r, c)` and
//! `b = max(r, c)`. The cell is numbered column by column through the
//! triangle `1 <= a <= b <= ceil(n/2)`: `cell = b(b-1)/2 + a - 1`. This is the
//! labelling obtained by numbering the triangle and reflecting it across the
//! board's symmetry axes.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::board::QueensGraph;
use crate::error::{Error, Result};
use crate::exactlin::{char_poly, main_poly, poly_divides, IntMatrix, IntPoly};
use crate::graph::Graph;
use crate::spectra::jacobi_eigen;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquitablePartition {
    pub n: usize,
    /// Cell index of each vertex.
    pub cell_of: Vec<usize>,
    /// Vertices of each cell, ascending.
    pub cells: Vec<Vec<usize>>,
}

impl EquitablePartition {
    pub fn from_labels(n: usize, cell_of: Vec<usize>) -> Self {
        let k = cell_of.iter().copied().max().map_or(0, |m| m + 1);
        let mut cells = vec![Vec::new(); k];
        for (v, &c) in cell_of.iter().enumerate() {
            cells[c].push(v);
        }
        EquitablePartition { n, cell_of, cells }
    }

    /// Each vertex in its own cell.
    pub fn singletons(order: usize) -> Self {
        Self::from_labels((order as f64).sqrt() as usize, (0..order).collect())
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// 0/1 characteristic matrix: one row per vertex, one column per cell.
    pub fn characteristic_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cell_of.len(), self.cells.len(), |v, c| {
            BigInt::from((self.cell_of[v] == c) as i64)
        })
    }

    pub fn export(&self) -> PartitionExport {
        PartitionExport {
            n: self.n,
            k: self.cell_count(),
            cell_of: self.cell_of.clone(),
            cell_sizes: self.cell_sizes(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionExport {
    pub n: usize,
    #[serde(rename = "K")]
    pub k: usize,
    pub cell_of: Vec<usize>,
    pub cell_sizes: Vec<usize>,
}

/// `(m+1)m/2` with `m = ceil(n/2)`.
pub fn expected_cell_count(n: usize) -> usize {
    let m = n.div_ceil(2);
    (m + 1) * m / 2
}

/// Cell label of square `(row, col)`, both 1-based.
pub fn fold_label(n: usize, row: usize, col: usize) -> usize {
    let r = row.min(n + 1 - row);
    let c = col.min(n + 1 - col);
    let (a, b) = (r.min(c), r.max(c));
    b * (b - 1) / 2 + a - 1
}

pub fn algorithm1_partition(n: usize) -> Result<EquitablePartition> {
    if n < 3 {
        return Err(Error::BoardSize {
            n,
            reason: "the folded partition needs n >= 3",
        });
    }
    let labels = (0..n * n)
        .map(|v| fold_label(n, v / n + 1, v % n + 1))
        .collect();
    Ok(EquitablePartition::from_labels(n, labels))
}

/// Neighbour count of `v` into every cell.
fn profile<G: Graph + ?Sized>(g: &G, cell_of: &[usize], cells: usize, v: usize) -> Vec<usize> {
    let mut counts = vec![0; cells];
    for &u in g.neighbors(v) {
        counts[cell_of[u]] += 1;
    }
    counts
}

/// Checks that all vertices of each cell see every cell equally often; the
/// error names two vertices of one cell and the cell they disagree on.
pub fn verify_equitable<G: Graph + ?Sized>(g: &G, p: &EquitablePartition) -> Result<()> {
    if p.cell_of.len() != g.order() {
        return Err(Error::Dimension {
            expected: format!("{} labels", g.order()),
            got: format!("{}", p.cell_of.len()),
        });
    }
    let k = p.cell_count();
    for cell in &p.cells {
        let Some((&first, rest)) = cell.split_first() else {
            continue;
        };
        let reference = profile(g, &p.cell_of, k, first);
        for &v in rest {
            let other = profile(g, &p.cell_of, k, v);
            if let Some(j) = (0..k).find(|&j| reference[j] != other[j]) {
                return Err(Error::NotEquitable {
                    u: first,
                    v,
                    cell: j,
                    count_u: reference[j],
                    count_v: other[j],
                });
            }
        }
    }
    Ok(())
}

/// `B` with `b_ij` the number of neighbours a vertex of cell `i` has in cell `j`.
pub fn divisor_matrix<G: Graph + ?Sized>(g: &G, p: &EquitablePartition) -> Result<IntMatrix> {
    verify_equitable(g, p)?;
    let k = p.cell_count();
    let mut b = IntMatrix::zeros(k, k);
    for (i, cell) in p.cells.iter().enumerate() {
        if let Some(&v) = cell.first() {
            for (j, c) in profile(g, &p.cell_of, k, v).into_iter().enumerate() {
                b.set(i, j, BigInt::from(c));
            }
        }
    }
    Ok(b)
}

/// Exact test of `A C = C B`.
pub fn verify_ac_equals_cb(a: &IntMatrix, c: &IntMatrix, b: &IntMatrix) -> bool {
    match (a.mul(c), c.mul(b)) {
        (Ok(ac), Ok(cb)) => ac == cb,
        _ => false,
    }
}

/// Eigenvalues of a divisor matrix, largest first. `B` is similar to the
/// symmetric `D^{1/2} B D^{-1/2}` with `D` the cell sizes, which is what gets
/// diagonalised.
pub fn divisor_eigenvalues(b: &IntMatrix, sizes: &[usize]) -> Result<Vec<f64>> {
    let k = b.rows();
    let bf = b.to_f64();
    let s: Vec<f64> = sizes.iter().map(|&x| (x as f64).sqrt()).collect();
    let sym: Vec<Vec<f64>> = (0..k)
        .map(|i| (0..k).map(|j| s[i] * bf[i][j] / s[j]).collect())
        .collect();
    // symmetrise away rounding noise
    let sym: Vec<Vec<f64>> = (0..k)
        .map(|i| (0..k).map(|j| 0.5 * (sym[i][j] + sym[j][i])).collect())
        .collect();
    Ok(jacobi_eigen(&sym)?.values)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityChain {
    pub n: usize,
    pub char_a: IntPoly,
    pub p_b: IntPoly,
    pub main: IntPoly,
    pub main_divides_p_b: bool,
    pub p_b_divides_char_a: bool,
    /// Number of main eigenvalues.
    pub main_degree: usize,
}

impl DivisibilityChain {
    pub fn holds(&self) -> bool {
        self.main_divides_p_b && self.p_b_divides_char_a
    }
}

/// `M_G | p_B | char(A)` for the folded partition, all by exact division.
pub fn divisibility_chain(g: &QueensGraph) -> Result<DivisibilityChain> {
    let n = g.n();
    let a = g.adjacency_matrix();
    let b = if n >= 3 {
        divisor_matrix(g, &algorithm1_partition(n)?)?
    } else {
        divisor_matrix(g, &EquitablePartition::singletons(g.order()))?
    };
    let char_a = char_poly(&a)?;
    let p_b = char_poly(&b)?;
    let ones = vec![BigInt::from(1); g.order()];
    let main = main_poly(&a, &ones)?;
    Ok(DivisibilityChain {
        n,
        main_divides_p_b: poly_divides(&main, &p_b),
        p_b_divides_char_a: poly_divides(&p_b, &char_a),
        main_degree: main.degree().unwrap_or(0),
        char_a,
        p_b,
        main,
    })
}

/// `|mu_1(A) - mu_1(B)|`, the gap between the two largest eigenvalues.
pub fn largest_eig_gap(g: &QueensGraph, b: &IntMatrix, sizes: &[usize]) -> Result<f64> {
    let mu_a = jacobi_eigen(&g.adjacency_f64())?.values[0];
    let mu_b = divisor_eigenvalues(b, sizes)?[0];
    Ok((mu_a - mu_b).abs())
}

/// Divisor matrix as CSV, one row per line.
pub fn matrix_csv(b: &IntMatrix) -> String {
    (0..b.rows())
        .map(|i| {
            let row: Vec<String> = b.row(i).iter().map(ToString::to_string).collect();
            row.join(",") + "\n"
        })
        .collect()
}

/// Consistency of `B` with the cell sizes: `|V_i| b_ij = |V_j| b_ji`.
pub fn divisor_is_balanced(b: &IntMatrix, sizes: &[usize]) -> bool {
    let k = b.rows();
    (0..k).all(|i| {
        (0..k).all(|j| {
            let lhs = BigInt::from(sizes[i]) * b.get(i, j);
            let rhs = BigInt::from(sizes[j]) * b.get(j, i);
            (lhs - rhs).is_zero()
        })
    })
}
