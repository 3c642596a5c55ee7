//! Cyclic Jacobi eigensolver for dense symmetric matrices.

use crate::error::{Error, Result};

/// Sweep limit; running out is an error, never a silent best effort.
pub const MAX_SWEEPS: usize = 100;

/// Eigenpairs of a real symmetric matrix, eigenvalues in decreasing order.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    /// `vectors[k]` is the unit eigenvector belonging to `values[k]`.
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

impl SymmetricEigen {
    /// `max_k ||M v_k - lambda_k v_k||_inf` against the original matrix.
    pub fn residual_bound(&self, m: &[Vec<f64>]) -> f64 {
        self.values
            .iter()
            .zip(&self.vectors)
            .map(|(&lambda, v)| {
                m.iter()
                    .zip(v)
                    .map(|(row, &vi)| {
                        let mv: f64 = row.iter().zip(v).map(|(a, b)| a * b).sum();
                        (mv - lambda * vi).abs()
                    })
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    }
}

/// Diagonalises `m` (assumed symmetric; only the matrix as given is used).
pub fn jacobi_eigen(m: &[Vec<f64>]) -> Result<SymmetricEigen> {
    let d = m.len();
    let mut a: Vec<f64> = m.iter().flat_map(|r| r.iter().copied()).collect();
    assert_eq!(a.len(), d * d, "matrix must be square");
    let mut v = vec![0.0; d * d];
    for i in 0..d {
        v[i * d + i] = 1.0;
    }
    let frob: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = 1e-15 * frob.max(f64::MIN_POSITIVE);
    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..d {
            for j in (i + 1)..d {
                s += 2.0 * a[i * d + j] * a[i * d + j];
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= target {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        sweeps += 1;
        for p in 0..d {
            for q in (p + 1)..d {
                let apq = a[p * d + q];
                if apq.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                let app = a[p * d + p];
                let aqq = a[q * d + q];
                let tau = (aqq - app) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..d {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * d + p];
                    let akq = a[k * d + q];
                    let nkp = c * akp - s * akq;
                    let nkq = s * akp + c * akq;
                    a[k * d + p] = nkp;
                    a[p * d + k] = nkp;
                    a[k * d + q] = nkq;
                    a[q * d + k] = nkq;
                }
                a[p * d + p] = app - t * apq;
                a[q * d + q] = aqq + t * apq;
                a[p * d + q] = 0.0;
                a[q * d + p] = 0.0;
                for k in 0..d {
                    let vkp = v[k * d + p];
                    let vkq = v[k * d + q];
                    v[k * d + p] = c * vkp - s * vkq;
                    v[k * d + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| a[j * d + j].total_cmp(&a[i * d + i]));
    let values = order.iter().map(|&i| a[i * d + i]).collect();
    let vectors = order
        .iter()
        .map(|&i| (0..d).map(|k| v[k * d + i]).collect())
        .collect();
    Ok(SymmetricEigen {
        values,
        vectors,
        sweeps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let e = jacobi_eigen(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        assert!((e.values[0] - 3.0).abs() < 1e-14);
        assert!((e.values[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn complete_graph() {
        let k5: Vec<Vec<f64>> = (0..5)
            .map(|i| (0..5).map(|j| if i == j { 0.0 } else { 1.0 }).collect())
            .collect();
        let e = jacobi_eigen(&k5).unwrap();
        assert!((e.values[0] - 4.0).abs() < 1e-12);
        assert!(e.values[1..].iter().all(|&x| (x + 1.0).abs() < 1e-12));
        assert!(e.residual_bound(&k5) < 1e-12);
    }

    #[test]
    fn path_graph_closed_form() {
        // P_6 has eigenvalues 2 cos(k pi / 7)
        let d = 6;
        let m: Vec<Vec<f64>> = (0..d)
            .map(|i: usize| (0..d).map(|j| if i.abs_diff(j) == 1 { 1.0 } else { 0.0 }).collect())
            .collect();
        let e = jacobi_eigen(&m).unwrap();
        for (k, &x) in e.values.iter().enumerate() {
            let exact = 2.0 * ((k + 1) as f64 * std::f64::consts::PI / 7.0).cos();
            assert!((x - exact).abs() < 1e-13, "{x} vs {exact}");
        }
    }

    #[test]
    fn empty_and_diagonal() {
        assert!(jacobi_eigen(&[]).unwrap().values.is_empty());
        let e = jacobi_eigen(&[vec![0.0, 0.0], vec![0.0, -2.0]]).unwrap();
        assert_eq!(e.values, vec![0.0, -2.0]);
        assert_eq!(e.sweeps, 0);
    }
}
