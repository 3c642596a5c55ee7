//! Integer eigenvalues of `Q(n)`, compared against the conjectured pattern.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::jacobi::jacobi_eigen;
use crate::board::QueensGraph;
use crate::error::Result;
use crate::exactlin::{char_poly, int_rank, integer_roots};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanMethod {
    /// Integer roots of the exact characteristic polynomial.
    CharPoly,
    /// Floating candidates confirmed by the exact corank of `A - kI`.
    FloatCorank,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerEigenScan {
    pub n: usize,
    pub method: ScanMethod,
    /// `(eigenvalue, multiplicity)`, largest first.
    pub eigenvalues: Vec<(i64, usize)>,
    /// The conjectured integer eigenvalues, for `n >= 4`.
    pub conjectured: Option<Vec<i64>>,
    /// Whether the observed set equals the conjectured set; reported only.
    pub agrees: Option<bool>,
}

impl IntegerEigenScan {
    pub fn distinct(&self) -> Vec<i64> {
        self.eigenvalues.iter().map(|&(k, _)| k).collect()
    }
}

/// `{-4, n-4}` for even `n`; `{-4, ..., (n-11)/2} ∪ {(n-5)/2, ..., n-4}` for odd `n`.
pub fn conjectured_integer_eigenvalues(n: usize) -> Option<BTreeSet<i64>> {
    if n < 4 {
        return None;
    }
    let n = n as i64;
    if n % 2 == 0 {
        return Some([-4, n - 4].into_iter().collect());
    }
    let low = -4..=(n - 11) / 2;
    let high = (n - 5) / 2..=n - 4;
    Some(low.chain(high).collect())
}

/// Integer eigenvalues with multiplicities.
///
/// Boards with `n^2 <= exact_cap` go through the exact characteristic
/// polynomial; larger ones take integer candidates from the floating spectrum
/// and confirm each with the exact corank of `A - kI` (a symmetric matrix, so
/// the corank is the multiplicity).
pub fn integer_eigenvalue_scan(g: &QueensGraph, exact_cap: usize) -> Result<IntegerEigenScan> {
    let n = g.n();
    let a = g.adjacency_matrix();
    let (method, eigenvalues) = if g.order() <= exact_cap {
        (ScanMethod::CharPoly, integer_roots(&char_poly(&a)?))
    } else {
        let eig = jacobi_eigen(&g.adjacency_f64())?;
        let candidates: BTreeSet<i64> = eig
            .values
            .iter()
            .filter(|x| (*x - x.round()).abs() < 1e-6)
            .map(|x| x.round() as i64)
            .collect();
        let mut found = Vec::new();
        for &k in candidates.iter().rev() {
            let mut shifted = a.clone();
            shifted.add_scaled_identity(&BigInt::from(-k));
            let corank = g.order() - int_rank(&shifted);
            if corank > 0 {
                found.push((k, corank));
            }
        }
        (ScanMethod::FloatCorank, found)
    };
    let conjectured = conjectured_integer_eigenvalues(n);
    let agrees = conjectured.as_ref().map(|c| {
        let seen: BTreeSet<i64> = eigenvalues.iter().map(|&(k, _)| k).collect();
        &seen == c
    });
    Ok(IntegerEigenScan {
        n,
        method,
        eigenvalues,
        conjectured: conjectured.map(|c| c.into_iter().rev().collect()),
        agrees,
    })
}
