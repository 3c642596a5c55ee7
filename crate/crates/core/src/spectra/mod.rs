//! Spectrum of `Q(n)`.
//!
//! Two tiers: a floating symmetric eigensolver produces the full spectrum,
//! while every multiplicity claim is settled with exact integer or rational
//! arithmetic (coranks, ranks, exact matrix-vector products).

mod families;
mod jacobi;
mod scan;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub use families::{
    build_f_family, build_yz_families, col_vector, diff_vector, row_vector, stencil_at, sum_vector,
    EigenvectorFamily, FamilyKind, X4,
};
pub use jacobi::{jacobi_eigen, SymmetricEigen, MAX_SWEEPS};
pub use scan::{conjectured_integer_eigenvalues, integer_eigenvalue_scan, IntegerEigenScan, ScanMethod};

use crate::board::QueensGraph;
use crate::cliquepart::{minus_m_eigen_system, queens_ecp};
use crate::error::{Error, Result};
use crate::exactlin::{rat_rank, RatMatrix};

/// Largest board diagonalised densely unless the caller says otherwise.
pub const DEFAULT_DENSE_MAX_N: usize = 32;

/// Default relative clustering tolerance.
pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cluster {
    pub value: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub lambda: i64,
    pub multiplicity_lower_bound: usize,
    /// True when the bound is the exact multiplicity.
    pub exact: bool,
    pub method: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenReport {
    pub n: usize,
    /// All eigenvalues, largest first.
    pub eigenvalues: Vec<f64>,
    pub clusters: Vec<Cluster>,
    pub residual_bound: f64,
    pub exact_certificates: Vec<Certificate>,
}

impl EigenReport {
    pub fn lambda_max(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn lambda_min(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    /// Multiplicity of the cluster containing `value`, or 0.
    pub fn multiplicity_near(&self, value: f64, tol: f64) -> usize {
        self.clusters
            .iter()
            .find(|c| (c.value - value).abs() <= tol)
            .map_or(0, |c| c.multiplicity)
    }

    /// `n,lambda,multiplicity,certified` lines, header first.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,lambda,multiplicity,certified\n");
        for c in &self.clusters {
            let certified = self.exact_certificates.iter().any(|cert| {
                (cert.lambda as f64 - c.value).abs() < 1e-6
                    && cert.exact
                    && cert.multiplicity_lower_bound == c.multiplicity
            });
            let _ = writeln!(out, "{},{},{},{}", self.n, c.value, c.multiplicity, certified);
        }
        out
    }
}

/// Groups sorted (decreasing) eigenvalues whose consecutive gaps are at most `gap`.
pub fn cluster_eigenvalues(values: &[f64], gap: f64) -> Vec<Cluster> {
    let mut clusters: Vec<(f64, usize, f64)> = Vec::new();
    for &x in values {
        match clusters.last_mut() {
            Some((sum, count, last)) if (*last - x).abs() <= gap => {
                *sum += x;
                *count += 1;
                *last = x;
            }
            _ => clusters.push((x, 1, x)),
        }
    }
    clusters
        .into_iter()
        .map(|(sum, count, _)| Cluster {
            value: sum / count as f64,
            multiplicity: count,
        })
        .collect()
}

fn cluster_gap(g: &QueensGraph, tol: f64) -> f64 {
    tol * (g.max_degree() as f64).max(1.0)
}

pub fn eigen_decomposition(g: &QueensGraph, max_n: usize) -> Result<SymmetricEigen> {
    if g.n() > max_n {
        return Err(Error::BoardSize {
            n: g.n(),
            reason: "exceeds the dense eigensolver cap",
        });
    }
    jacobi_eigen(&g.adjacency_f64())
}

/// Full spectrum with clusters, residual bound and the exact certificates
/// available for this board (`-4` for `n >= 4`, `n - 4` for `n >= 3`).
pub fn dense_spectrum(g: &QueensGraph, tol: f64) -> Result<EigenReport> {
    dense_spectrum_with_cap(g, tol, DEFAULT_DENSE_MAX_N)
}

pub fn dense_spectrum_with_cap(g: &QueensGraph, tol: f64, max_n: usize) -> Result<EigenReport> {
    if !(tol > 0.0) {
        return Err(Error::Invalid(format!("tolerance must be positive, got {tol}")));
    }
    let eig = eigen_decomposition(g, max_n)?;
    let residual_bound = eig.residual_bound(&g.adjacency_f64());
    let clusters = cluster_eigenvalues(&eig.values, cluster_gap(g, tol));
    let mut exact_certificates = Vec::new();
    if g.n() >= 4 {
        let c = minus4_certificate(g)?;
        exact_certificates.push(Certificate {
            lambda: -4,
            multiplicity_lower_bound: c.corank,
            exact: true,
            method: "corank of the clique-partition condition system".into(),
        });
    }
    if g.n() >= 3 {
        let c = n_minus_4_certificate(g)?;
        exact_certificates.push(Certificate {
            lambda: g.n() as i64 - 4,
            multiplicity_lower_bound: c.rank,
            exact: false,
            method: "rank of exactly verified Y/Z eigenvectors".into(),
        });
    }
    Ok(EigenReport {
        n: g.n(),
        eigenvalues: eig.values,
        clusters,
        residual_bound,
        exact_certificates,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MainFlag {
    pub value: f64,
    pub multiplicity: usize,
    /// Norm of the projection of the all-ones vector onto the eigenspace.
    pub projection: f64,
    pub main: bool,
}

/// Marks each cluster main when the all-ones vector has a projection of norm
/// above `tol` on its eigenspace. `clusters` must come from `eig.values`.
pub fn classify_main(eig: &SymmetricEigen, clusters: &[Cluster], tol: f64) -> Vec<MainFlag> {
    let mut out = Vec::with_capacity(clusters.len());
    let mut k = 0;
    for c in clusters {
        let norm2: f64 = eig.vectors[k..k + c.multiplicity]
            .iter()
            .map(|v| v.iter().sum::<f64>().powi(2))
            .sum();
        k += c.multiplicity;
        let projection = norm2.sqrt();
        out.push(MainFlag {
            value: c.value,
            multiplicity: c.multiplicity,
            projection,
            main: projection > tol,
        });
    }
    out
}

/// Exact evidence for the `-4` eigenspace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Minus4Certificate {
    pub n: usize,
    pub system_rows: usize,
    /// Dimension of the solution space of the condition system.
    pub corank: usize,
    pub family_size: usize,
    pub family_rank: usize,
    /// Every stencil vector satisfies `A v = -4 v` exactly.
    pub family_eigen: bool,
    /// Every stencil vector satisfies each line-sum and corner condition.
    pub family_conditions: bool,
    /// Every stencil vector sums to zero, so `-4` is not a main eigenvalue.
    pub family_orthogonal_to_ones: bool,
    pub expected: usize,
}

impl Minus4Certificate {
    pub fn holds(&self) -> bool {
        self.corank == self.expected
            && self.family_size == self.expected
            && self.family_rank == self.expected
            && self.family_eigen
            && self.family_conditions
            && self.family_orthogonal_to_ones
    }
}

pub fn minus4_certificate(g: &QueensGraph) -> Result<Minus4Certificate> {
    let n = g.n();
    let ecp = queens_ecp(g)?;
    let system = minus_m_eigen_system(g, &ecp);
    let corank = g.order() - rat_rank(&system);
    let family = build_f_family(n)?;
    let family_eigen = family.verified_members(|v| g.apply(v)).iter().all(|&ok| ok);
    let corners = [0, n - 1, n * (n - 1), n * n - 1];
    let family_conditions = family.vectors.iter().all(|v| {
        ecp.parts()
            .iter()
            .all(|part| part.iter().map(|&u| v[u]).sum::<i64>() == 0)
            && corners.iter().all(|&c| v[c] == 0)
    });
    let mut fm = RatMatrix::zeros(0, g.order());
    for v in &family.vectors {
        fm.push_row(v);
    }
    Ok(Minus4Certificate {
        n,
        system_rows: system.rows(),
        corank,
        family_size: family.vectors.len(),
        family_rank: rat_rank(&fm),
        family_eigen,
        family_conditions,
        family_orthogonal_to_ones: family.vectors.iter().all(|v| v.iter().sum::<i64>() == 0),
        expected: (n - 3) * (n - 3),
    })
}

/// Multiplicity of `-4`, certified exactly; an error when any part of the
/// certificate disagrees with `(n-3)^2`.
pub fn certify_minus4_multiplicity(n: usize) -> Result<usize> {
    let g = QueensGraph::new(n)?;
    let c = minus4_certificate(&g)?;
    if !c.holds() {
        return Err(Error::Invalid(format!("-4 certificate failed: {c:?}")));
    }
    Ok(c.corank)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NMinus4Certificate {
    pub n: usize,
    pub lambda: i64,
    pub y_verified: Vec<bool>,
    pub z_verified: bool,
    /// Rank of the verified vectors (all of `Y`, plus `Z` when verified).
    pub rank: usize,
    pub expected: usize,
}

impl NMinus4Certificate {
    pub fn holds(&self) -> bool {
        self.y_verified.iter().all(|&b| b) && self.z_verified == (self.n % 2 == 1) && self.rank == self.expected
    }
}

pub fn n_minus_4_certificate(g: &QueensGraph) -> Result<NMinus4Certificate> {
    let n = g.n();
    let (y, z) = build_yz_families(n)?;
    let y_verified = y.verified_members(|v| g.apply(v));
    let z_verified = z.verified_members(|v| g.apply(v))[0];
    let mut m = RatMatrix::zeros(0, g.order());
    for (v, ok) in y.vectors.iter().zip(&y_verified) {
        if *ok {
            m.push_row(v);
        }
    }
    if z_verified {
        m.push_row(&z.vectors[0]);
    }
    Ok(NMinus4Certificate {
        n,
        lambda: y.lambda,
        y_verified,
        z_verified,
        rank: rat_rank(&m),
        expected: if n % 2 == 0 { (n - 2) / 2 } else { (n + 1) / 2 },
    })
}

/// Certified lower bound on the multiplicity of `n - 4`.
pub fn certify_n_minus_4_lower_bound(n: usize) -> Result<usize> {
    let g = QueensGraph::new(n)?;
    let c = n_minus_4_certificate(&g)?;
    if !c.holds() {
        return Err(Error::Invalid(format!("n-4 certificate failed: {c:?}")));
    }
    Ok(c.rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectrum_of_two() {
        let g = QueensGraph::new(2).unwrap();
        let r = dense_spectrum(&g, DEFAULT_TOL).unwrap();
        assert_eq!(r.clusters.len(), 2);
        assert!((r.clusters[0].value - 3.0).abs() < 1e-12 && r.clusters[0].multiplicity == 1);
        assert!((r.clusters[1].value + 1.0).abs() < 1e-12 && r.clusters[1].multiplicity == 3);
        assert!(r.residual_bound < 1e-12);
    }

    #[test]
    fn spectrum_of_three() {
        let r = dense_spectrum(&QueensGraph::new(3).unwrap(), DEFAULT_TOL).unwrap();
        let s57 = 57f64.sqrt();
        assert!((r.lambda_max() - (5.0 + s57) / 2.0).abs() < 1e-9);
        assert!((r.lambda_min() - (-1.0 - 2f64.sqrt())).abs() < 1e-9);
        assert_eq!(r.multiplicity_near(-1.0, 1e-9), 2);
        assert_eq!(r.multiplicity_near(1.0, 1e-9), 1);
    }

    #[test]
    fn minus_four_on_four() {
        let g = QueensGraph::new(4).unwrap();
        let r = dense_spectrum(&g, DEFAULT_TOL).unwrap();
        assert_eq!(r.multiplicity_near(-4.0, 1e-6), 1);
        assert_eq!(certify_minus4_multiplicity(4).unwrap(), 1);
        assert!(certify_minus4_multiplicity(3).is_err());
    }

    #[test]
    fn minus_four_on_six_matches_floats() {
        let g = QueensGraph::new(6).unwrap();
        let r = dense_spectrum(&g, DEFAULT_TOL).unwrap();
        assert_eq!(certify_minus4_multiplicity(6).unwrap(), 9);
        assert_eq!(r.multiplicity_near(-4.0, 1e-6), 9);
    }

    #[test]
    fn n_minus_four_bounds() {
        assert_eq!(certify_n_minus_4_lower_bound(6).unwrap(), 2);
        assert_eq!(certify_n_minus_4_lower_bound(5).unwrap(), 3);
        assert_eq!(certify_n_minus_4_lower_bound(3).unwrap(), 2);
        assert!(certify_n_minus_4_lower_bound(2).is_err());
    }

    #[test]
    fn main_classification() {
        let g = QueensGraph::new(2).unwrap();
        let eig = eigen_decomposition(&g, 8).unwrap();
        let cl = cluster_eigenvalues(&eig.values, 1e-8);
        let flags = classify_main(&eig, &cl, 1e-6);
        assert!(flags[0].main && !flags[1].main);

        let g = QueensGraph::new(6).unwrap();
        let eig = eigen_decomposition(&g, 8).unwrap();
        let cl = cluster_eigenvalues(&eig.values, 1e-8 * 19.0);
        let flags = classify_main(&eig, &cl, 1e-6);
        assert_eq!(flags.iter().filter(|f| f.main).count(), 6);
        let minus4 = flags.iter().find(|f| (f.value + 4.0).abs() < 1e-6).unwrap();
        assert!(!minus4.main);
    }

    #[test]
    fn clustering() {
        let cl = cluster_eigenvalues(&[3.0, 1.0 + 1e-12, 1.0, -1.0], 1e-9);
        assert_eq!(cl.iter().map(|c| c.multiplicity).collect::<Vec<_>>(), vec![1, 2, 1]);
    }

    #[test]
    fn csv_rows() {
        let r = dense_spectrum(&QueensGraph::new(4).unwrap(), DEFAULT_TOL).unwrap();
        let csv = r.to_csv();
        assert!(csv.starts_with("n,lambda,multiplicity,certified\n"));
        assert!(csv.lines().any(|l| l.starts_with("4,-4") && l.ends_with(",1,true")));
    }

    #[test]
    fn rejects_bad_tolerance_and_cap() {
        let g = QueensGraph::new(4).unwrap();
        assert!(dense_spectrum(&g, 0.0).is_err());
        assert!(dense_spectrum_with_cap(&g, 1e-8, 3).is_err());
    }
}
