use proptest::prelude::*;

use queens_core::equipart::{
    algorithm1_partition, divisibility_chain, divisor_eigenvalues, divisor_is_balanced,
    divisor_matrix, expected_cell_count, fold_label, largest_eig_gap, verify_ac_equals_cb,
    verify_equitable, EquitablePartition,
};
use queens_core::QueensGraph;

/// Orbits of the dihedral group of the square acting on the board; the
/// folded partition must coincide with them.
fn orbits(n: usize) -> Vec<usize> {
    let maps: [fn(usize, usize, usize) -> (usize, usize); 8] = [
        |_, i, j| (i, j),
        |n, i, j| (j, n - 1 - i),
        |n, i, j| (n - 1 - i, n - 1 - j),
        |n, i, j| (n - 1 - j, i),
        |n, i, j| (i, n - 1 - j),
        |n, i, j| (n - 1 - i, j),
        |_, i, j| (j, i),
        |n, i, j| (n - 1 - j, n - 1 - i),
    ];
    let mut label = vec![usize::MAX; n * n];
    let mut next = 0;
    for v in 0..n * n {
        if label[v] != usize::MAX {
            continue;
        }
        for m in maps {
            let (i, j) = m(n, v / n, v % n);
            label[i * n + j] = next;
        }
        next += 1;
    }
    label
}

fn same_partition(a: &[usize], b: &[usize]) -> bool {
    (0..a.len()).all(|u| (0..a.len()).all(|v| (a[u] == a[v]) == (b[u] == b[v])))
}

proptest! {
    #[test]
    fn folded_cells(n in 3usize..=16) {
        let g = QueensGraph::new(n).unwrap();
        let p = algorithm1_partition(n).unwrap();
        prop_assert_eq!(p.cell_count(), expected_cell_count(n));
        prop_assert!(p.cell_sizes().iter().all(|s| [1, 4, 8].contains(s)));
        prop_assert_eq!(p.cell_sizes().iter().sum::<usize>(), n * n);
        prop_assert!(same_partition(&p.cell_of, &orbits(n)));
        prop_assert!(verify_equitable(&g, &p).is_ok());
        let b = divisor_matrix(&g, &p).unwrap();
        prop_assert!(divisor_is_balanced(&b, &p.cell_sizes()));
        prop_assert!(verify_ac_equals_cb(&g.adjacency_matrix(), &p.characteristic_matrix(), &b));
        // row sums of B are the degrees
        for (i, cell) in p.cells.iter().enumerate() {
            let sum: i64 = b.row(i).iter().map(|x| i64::try_from(x).unwrap()).sum();
            prop_assert_eq!(sum as usize, g.degree(cell[0]));
        }
    }

    #[test]
    fn fold_is_symmetric(n in 3usize..=15, i in 1usize..=15, j in 1usize..=15) {
        let (i, j) = ((i - 1) % n + 1, (j - 1) % n + 1);
        let l = fold_label(n, i, j);
        prop_assert_eq!(l, fold_label(n, j, i));
        prop_assert_eq!(l, fold_label(n, n + 1 - i, j));
        prop_assert_eq!(l, fold_label(n, i, n + 1 - j));
    }
}

#[test]
fn chain_and_top_eigenvalue() {
    for n in 3..=7 {
        let g = QueensGraph::new(n).unwrap();
        let c = divisibility_chain(&g).unwrap();
        assert!(c.holds(), "n={n}");
        let p = algorithm1_partition(n).unwrap();
        let b = divisor_matrix(&g, &p).unwrap();
        assert!(largest_eig_gap(&g, &b, &p.cell_sizes()).unwrap() < 1e-9);
        // every eigenvalue of B is an eigenvalue of A
        let sigma_a = queens_core::spectra::jacobi_eigen(&g.adjacency_f64()).unwrap().values;
        for mu in divisor_eigenvalues(&b, &p.cell_sizes()).unwrap() {
            assert!(sigma_a.iter().any(|x| (x - mu).abs() < 1e-8), "n={n} mu={mu}");
        }
    }
}

#[test]
fn walk_space_fits_in_the_quotient() {
    for n in 3..=8 {
        let c = divisibility_chain(&QueensGraph::new(n).unwrap()).unwrap();
        assert!(c.main_degree <= expected_cell_count(n), "n={n}");
        assert_eq!(c.p_b.degree(), Some(expected_cell_count(n)));
    }
}

#[test]
fn a_coarser_split_is_rejected() {
    let g = QueensGraph::new(5).unwrap();
    // merge two cells of the folded partition
    let p = algorithm1_partition(5).unwrap();
    let labels = p.cell_of.iter().map(|&c| if c == 1 { 0 } else { c }).collect();
    let merged = EquitablePartition::from_labels(5, labels);
    assert!(verify_equitable(&g, &merged).is_err());
}

#[test]
fn export_shape() {
    let e = algorithm1_partition(6).unwrap().export();
    let json = serde_json::to_value(&e).unwrap();
    assert_eq!(json["K"], 6);
    assert_eq!(json["cell_sizes"].as_array().unwrap().len(), 6);
}
