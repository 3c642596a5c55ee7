//! Explicit integer eigenvectors of `Q(n)`.
//!
//! * `F`: translates of a 4x4 `0/±1` stencil, eigenvalue `-4`.
//! * `Y`: `C_i + C_{n+1-i} - R_i - R_{n+1-i}`, eigenvalue `n - 4`.
//! * `Z`: `D_0 - S_{n+1}`, eigenvalue `n - 4` on odd boards only.
//!
//! Vectors are indexed by vertex (`(row - 1) * n + col - 1`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The basic `-4` stencil on a 4x4 board.
pub const X4: [[i64; 4]; 4] = [
    [0, 1, -1, 0],
    [-1, 0, 0, 1],
    [1, 0, 0, -1],
    [0, -1, 1, 0],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyKind {
    F,
    Y,
    Z,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvectorFamily {
    pub kind: FamilyKind,
    pub n: usize,
    /// The eigenvalue the members are expected to satisfy.
    pub lambda: i64,
    pub vectors: Vec<Vec<i64>>,
}

impl EigenvectorFamily {
    /// Number of members that satisfy `A v = lambda v` exactly.
    pub fn verified_members(&self, apply: impl Fn(&[i64]) -> Vec<i64>) -> Vec<bool> {
        self.vectors
            .iter()
            .map(|v| {
                v.iter().any(|&x| x != 0)
                    && apply(v).iter().zip(v).all(|(av, x)| *av == self.lambda * x)
            })
            .collect()
    }
}

fn line_vector(n: usize, on: impl Fn(usize, usize) -> bool) -> Vec<i64> {
    (0..n * n)
        .map(|v| i64::from(on(v / n + 1, v % n + 1)))
        .collect()
}

/// `R_i`: ones on row `i`.
pub fn row_vector(n: usize, i: usize) -> Vec<i64> {
    line_vector(n, |x, _| x == i)
}

/// `C_j`: ones on column `j`.
pub fn col_vector(n: usize, j: usize) -> Vec<i64> {
    line_vector(n, |_, y| y == j)
}

/// `S_k`: ones where `row + col = k`.
pub fn sum_vector(n: usize, k: usize) -> Vec<i64> {
    line_vector(n, |x, y| x + y == k)
}

/// `D_l`: ones where `row - col = l`.
pub fn diff_vector(n: usize, l: isize) -> Vec<i64> {
    line_vector(n, |x, y| x as isize - y as isize == l)
}

/// `X4` placed with its top-left corner on square `(a, b)`.
pub fn stencil_at(n: usize, a: usize, b: usize) -> Vec<i64> {
    let mut v = vec![0; n * n];
    for (di, row) in X4.iter().enumerate() {
        for (dj, &x) in row.iter().enumerate() {
            v[(a - 1 + di) * n + (b - 1 + dj)] = x;
        }
    }
    v
}

/// The `(n-3)^2` stencil translates, ordered by `(a, b)` lexicographically.
pub fn build_f_family(n: usize) -> Result<EigenvectorFamily> {
    if n < 4 {
        return Err(Error::BoardSize {
            n,
            reason: "the -4 stencil needs n >= 4",
        });
    }
    let vectors = (1..=n - 3)
        .flat_map(|a| (1..=n - 3).map(move |b| stencil_at(n, a, b)))
        .collect();
    Ok(EigenvectorFamily {
        kind: FamilyKind::F,
        n,
        lambda: -4,
        vectors,
    })
}

fn combine(parts: &[(&[i64], i64)]) -> Vec<i64> {
    let len = parts[0].0.len();
    (0..len)
        .map(|k| parts.iter().map(|(v, c)| c * v[k]).sum())
        .collect()
}

/// `Y` has `ceil(n/2)` members; `Z` has one, an eigenvector only for odd `n`.
pub fn build_yz_families(n: usize) -> Result<(EigenvectorFamily, EigenvectorFamily)> {
    if n < 3 {
        return Err(Error::BoardSize {
            n,
            reason: "the n-4 families need n >= 3",
        });
    }
    let lambda = n as i64 - 4;
    let y = (1..=n.div_ceil(2))
        .map(|i| {
            let (ci, cj) = (col_vector(n, i), col_vector(n, n + 1 - i));
            let (ri, rj) = (row_vector(n, i), row_vector(n, n + 1 - i));
            combine(&[(&ci, 1), (&cj, 1), (&ri, -1), (&rj, -1)])
        })
        .collect();
    let z = combine(&[(&diff_vector(n, 0), 1), (&sum_vector(n, n + 1), -1)]);
    Ok((
        EigenvectorFamily {
            kind: FamilyKind::Y,
            n,
            lambda,
            vectors: y,
        },
        EigenvectorFamily {
            kind: FamilyKind::Z,
            n,
            lambda,
            vectors: vec![z],
        },
    ))
}
