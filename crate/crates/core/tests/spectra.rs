use num_bigint::BigInt;
use proptest::prelude::*;

use queens_core::exactlin::{char_poly, int_rank, main_poly, IntMatrix};
use queens_core::spectra::{
    build_f_family, build_yz_families, classify_main, cluster_eigenvalues, dense_spectrum,
    integer_eigenvalue_scan, jacobi_eigen, n_minus_4_certificate, DEFAULT_TOL,
};
use queens_core::QueensGraph;

fn symmetric_f64() -> impl Strategy<Value = Vec<Vec<f64>>> {
    (1usize..=10).prop_flat_map(|d| {
        prop::collection::vec(-5.0f64..5.0, d * d).prop_map(move |x| {
            (0..d)
                .map(|i| (0..d).map(|j| x[i.min(j) * d + i.max(j)]).collect())
                .collect()
        })
    })
}

proptest! {
    #[test]
    fn jacobi_invariants(m in symmetric_f64()) {
        let e = jacobi_eigen(&m).unwrap();
        let d = m.len();
        let trace: f64 = (0..d).map(|i| m[i][i]).sum();
        let frob: f64 = m.iter().flatten().map(|x| x * x).sum();
        prop_assert!((e.values.iter().sum::<f64>() - trace).abs() < 1e-9);
        prop_assert!((e.values.iter().map(|x| x * x).sum::<f64>() - frob).abs() < 1e-8 * frob.max(1.0));
        prop_assert!(e.residual_bound(&m) < 1e-9);
        prop_assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
        for (a, b) in e.vectors.iter().zip(&e.vectors) {
            let norm: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
            prop_assert!((norm - 1.0).abs() < 1e-10);
        }
    }
}

#[test]
fn minus4_multiplicity_matches_clusters() {
    for n in 4..=10 {
        let r = dense_spectrum(&QueensGraph::new(n).unwrap(), DEFAULT_TOL).unwrap();
        let want = (n - 3) * (n - 3);
        assert_eq!(r.multiplicity_near(-4.0, 1e-6), want, "n={n}");
        assert!(r.lambda_min() >= -4.0 - 1e-9);
        assert!(r.residual_bound < 1e-9);
    }
}

#[test]
fn minus4_corank_by_bareiss() {
    // independent of the clique system: corank of A + 4I
    for n in 4..=8 {
        let mut a = QueensGraph::new(n).unwrap().adjacency_matrix();
        a.add_scaled_identity(&BigInt::from(4));
        assert_eq!(n * n - int_rank(&a), (n - 3) * (n - 3), "n={n}");
    }
}

#[test]
fn n_minus_4_certificates() {
    for n in 3..=12 {
        let c = n_minus_4_certificate(&QueensGraph::new(n).unwrap()).unwrap();
        assert!(c.holds(), "n={n}: {c:?}");
    }
    let (y, z) = build_yz_families(6).unwrap();
    assert_eq!(y.vectors.len(), 3);
    assert_eq!(z.vectors.len(), 1);
    let g = QueensGraph::new(6).unwrap();
    assert!(!z.verified_members(|v| g.apply(v))[0]);
}

#[test]
fn f_family_is_independent_and_eigen() {
    for n in 4..=9 {
        let g = QueensGraph::new(n).unwrap();
        let f = build_f_family(n).unwrap();
        assert_eq!(f.vectors.len(), (n - 3) * (n - 3));
        assert!(f.verified_members(|v| g.apply(v)).iter().all(|&b| b));
        let m = IntMatrix::from_rows(&f.vectors);
        assert_eq!(int_rank(&m), (n - 3) * (n - 3));
    }
}

#[test]
fn main_count_matches_walk_space() {
    for n in 2..=8 {
        let g = QueensGraph::new(n).unwrap();
        let a = g.adjacency_matrix();
        let m = main_poly(&a, &vec![BigInt::from(1); n * n]).unwrap();
        let eig = jacobi_eigen(&g.adjacency_f64()).unwrap();
        let clusters = cluster_eigenvalues(&eig.values, 1e-7);
        let flags = classify_main(&eig, &clusters, 1e-6);
        let main = flags.iter().filter(|f| f.main).count();
        assert_eq!(Some(main), m.degree(), "n={n}");
        // -4 is never main
        assert!(flags.iter().filter(|f| (f.value + 4.0).abs() < 1e-6).all(|f| !f.main));
    }
}

#[test]
fn scan_routes_agree() {
    for n in 3..=7 {
        let g = QueensGraph::new(n).unwrap();
        let exact = integer_eigenvalue_scan(&g, usize::MAX).unwrap();
        let float = integer_eigenvalue_scan(&g, 0).unwrap();
        assert_eq!(exact.eigenvalues, float.eigenvalues, "n={n}");
        if n >= 4 {
            assert_eq!(exact.agrees, Some(true));
        }
    }
}

#[test]
fn twelve_follows_the_even_pattern() {
    let s = integer_eigenvalue_scan(&QueensGraph::new(12).unwrap(), 0).unwrap();
    assert_eq!(s.distinct(), vec![8, -4]);
    assert_eq!(s.agrees, Some(true));
}

#[test]
fn char_poly_roots_match_floats() {
    let g = QueensGraph::new(4).unwrap();
    let p = char_poly(&g.adjacency_matrix()).unwrap();
    // expand prod (x - lambda) in floats and compare with the exact coefficients
    let mut prod = vec![1.0f64];
    for x in jacobi_eigen(&g.adjacency_f64()).unwrap().values {
        let mut next = vec![0.0; prod.len() + 1];
        for (k, &c) in prod.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= x * c;
        }
        prod = next;
    }
    let exact: Vec<f64> = p.coeffs().iter().map(|c| c.to_string().parse().unwrap()).collect();
    assert_eq!(prod.len(), exact.len());
    let scale = exact.iter().fold(1.0f64, |m, c| m.max(c.abs()));
    for (a, b) in prod.iter().zip(&exact) {
        assert!((a - b).abs() < 1e-9 * scale, "{a} vs {b}");
    }
}
