use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use queens_core::board::{
    degree_formula, edge_count_formula, max_degree_formula, min_degree_formula, peripheral_partition,
    GraphSummary, PeripheralPartition,
};
use queens_core::combinat::{domination_bounds, domination_number, monotonicity_check, VertexSubsetResult};
use queens_core::equipart::{
    algorithm1_partition, divisibility_chain, divisor_matrix, expected_cell_count, verify_ac_equals_cb,
    verify_equitable,
};
use queens_core::exactlin::IntPoly;
use queens_core::spectra::{
    dense_spectrum_with_cap, integer_eigenvalue_scan, jacobi_eigen, minus4_certificate, n_minus_4_certificate,
    EigenReport, IntegerEigenScan,
};
use queens_core::QueensGraph;

use crate::{dense_cap, Common, Format, Report};

/// Integer eigenvalues by board size, largest first, for `n = 3..=11`.
const TABLE3: [&[i64]; 9] = [
    &[1, -1],
    &[0, -4],
    &[1, 0, -3, -4],
    &[2, -4],
    &[3, 2, 1, -2, -3, -4],
    &[4, -4],
    &[5, 4, 3, 2, -1, -2, -3, -4],
    &[6, -4],
    &[7, 6, 5, 4, 3, 0, -1, -2, -3, -4],
];

/// Published domination numbers for `n = 1..=17`.
const KNOWN_GAMMA: [usize; 17] = [1, 1, 1, 2, 3, 3, 4, 5, 5, 5, 5, 6, 7, 8, 9, 9, 9];

fn table3(n: usize) -> Option<&'static [i64]> {
    (3..=11).contains(&n).then(|| TABLE3[n - 3])
}

fn envelope(command: &str, results: Value, failures: &[String]) -> String {
    let mut s = serde_json::to_string_pretty(&json!({
        "command": command,
        "results": results,
        "failures": failures,
    }))
    .expect("report serialises");
    s.push('\n');
    s
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report serialises")
}

fn build(n: usize) -> Result<QueensGraph, String> {
    QueensGraph::new(n).map_err(|e| e.to_string())
}

/// Runs `f` on every size in parallel, keeping the order of the sizes.
fn per_size<T: Send>(common: &Common, f: impl Fn(usize) -> Result<T, String> + Sync + Send) -> Result<Vec<T>, String> {
    common.n.sizes().into_par_iter().map(f).collect()
}

#[derive(Serialize)]
struct GraphReport {
    #[serde(flatten)]
    summary: GraphSummary,
    diameter: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge_list: Option<Vec<[usize; 2]>>,
}

pub fn graph(common: &Common, with_edges: bool) -> Result<Report, String> {
    let graphs = per_size(common, build)?;
    let mut failures = Vec::new();
    for g in &graphs {
        if g.edge_count() as u64 != edge_count_formula(g.n() as u64) {
            failures.push(format!("n={}: edge count {} disagrees with the formula", g.n(), g.edge_count()));
        }
    }
    let body = match common.format {
        Format::Csv => {
            let mut s = String::from("n,u,v\n");
            for g in &graphs {
                for (u, v) in g.edges() {
                    s.push_str(&format!("{},{},{}\n", g.n(), u + 1, v + 1));
                }
            }
            s
        }
        Format::Json => {
            let reports: Vec<GraphReport> = graphs
                .iter()
                .map(|g| GraphReport {
                    summary: g.summary(),
                    diameter: g.diameter(),
                    edge_list: with_edges.then(|| g.edges().map(|(u, v)| [u + 1, v + 1]).collect()),
                })
                .collect();
            envelope("graph", to_value(&reports), &failures)
        }
    };
    Ok(Report { body, failures })
}

pub fn spectrum(common: &Common) -> Result<Report, String> {
    let cap = dense_cap()?;
    let reports: Vec<EigenReport> = per_size(common, |n| {
        dense_spectrum_with_cap(&build(n)?, common.tol, cap).map_err(|e| format!("n={n}: {e}"))
    })?;
    let body = match common.format {
        Format::Csv => {
            let mut s = String::from("n,lambda,multiplicity,certified\n");
            for r in &reports {
                s.extend(r.to_csv().lines().skip(1).map(|l| format!("{l}\n")));
            }
            s
        }
        Format::Json => envelope("spectrum", to_value(&reports), &[]),
    };
    Ok(Report { body, failures: Vec::new() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
struct Check {
    name: &'static str,
    status: Status,
    detail: String,
}

impl Check {
    fn of(name: &'static str, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name,
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    fn skipped(name: &'static str, why: impl Into<String>) -> Self {
        Check {
            name,
            status: Status::Skipped,
            detail: why.into(),
        }
    }
}

#[derive(Serialize)]
struct VerifyReport {
    n: usize,
    checks: Vec<Check>,
}

fn verify_one(n: usize, chain_max_n: usize, cap: usize) -> Result<VerifyReport, String> {
    let g = build(n)?;
    let mut checks = Vec::new();

    let e = edge_count_formula(n as u64);
    checks.push(Check::of("size formula", g.edge_count() as u64 == e, format!("{} edges", g.edge_count())));

    let (lo, hi) = (min_degree_formula(n), max_degree_formula(n));
    let bad = (0..g.order()).find(|&v| {
        let d = g.degree(v);
        d != degree_formula(n, g.coord(v)) || d < lo || d > hi
    });
    checks.push(Check::of(
        "degree theorem",
        bad.is_none(),
        match bad {
            None => format!("degrees in [{lo}, {hi}]"),
            Some(v) => format!("vertex {} has degree {}", v + 1, g.degree(v)),
        },
    ));

    let p = peripheral_partition(n).map_err(|e| e.to_string())?;
    checks.push(Check::of(
        "peripheral rings",
        p.sizes() == PeripheralPartition::expected_sizes(n),
        format!("{:?}", p.sizes()),
    ));

    if n >= 4 {
        let c = minus4_certificate(&g).map_err(|e| e.to_string())?;
        checks.push(Check::of(
            "-4 multiplicity",
            c.holds(),
            format!("corank {} of {} conditions, expected {}", c.corank, c.system_rows, c.expected),
        ));
        checks.push(Check::of(
            "-4 non-main",
            c.family_orthogonal_to_ones && c.family_rank == c.corank,
            "eigenspace basis orthogonal to all-ones",
        ));
    } else {
        checks.push(Check::skipped("-4 multiplicity", "needs n >= 4"));
    }

    if n >= 3 {
        let c = n_minus_4_certificate(&g).map_err(|e| e.to_string())?;
        checks.push(Check::of(
            "n-4 lower bound",
            c.holds(),
            format!("eigenvalue {} with multiplicity >= {} (expected {})", c.lambda, c.rank, c.expected),
        ));
    } else {
        checks.push(Check::skipped("n-4 lower bound", "needs n >= 3"));
    }

    if n <= cap {
        let eig = jacobi_eigen(&g.adjacency_f64()).map_err(|e| e.to_string())?;
        let least = eig.values.last().copied().unwrap_or(0.0);
        checks.push(Check::of("least eigenvalue >= -4", least >= -4.0 - 1e-6, format!("{least:.12}")));
    } else {
        checks.push(Check::skipped("least eigenvalue >= -4", format!("n above dense cap {cap}")));
    }

    if n >= 3 {
        let part = algorithm1_partition(n).map_err(|e| e.to_string())?;
        let verdict = verify_equitable(&g, &part)
            .and_then(|()| divisor_matrix(&g, &part))
            .map(|b| verify_ac_equals_cb(&g.adjacency_matrix(), &part.characteristic_matrix(), &b));
        let ok = part.cell_count() == expected_cell_count(n) && matches!(verdict, Ok(true));
        let detail = match verdict {
            Err(e) => e.to_string(),
            Ok(_) => format!("{} cells", part.cell_count()),
        };
        checks.push(Check::of("equitable partition", ok, detail));
    } else {
        checks.push(Check::skipped("equitable partition", "needs n >= 3"));
    }

    if (3..=chain_max_n).contains(&n) {
        let c = divisibility_chain(&g).map_err(|e| e.to_string())?;
        checks.push(Check::of(
            "divisibility chain",
            c.holds(),
            format!("main polynomial degree {}, quotient degree {}", c.main_degree, c.p_b.degree().unwrap_or(0)),
        ));
        if n == 6 {
            let printed = IntPoly::from_i64(&[-8, 580, -686, 109, 73, -21, 1]);
            checks.push(Check::of("quotient polynomial n=6", c.p_b == printed, c.p_b.to_string()));
        }
    } else {
        checks.push(Check::skipped("divisibility chain", format!("runs for 3 <= n <= {chain_max_n}")));
    }

    if let Some(want) = table3(n) {
        let s = integer_eigenvalue_scan(&g, 64).map_err(|e| e.to_string())?;
        checks.push(Check::of("integer eigenvalues", s.distinct() == want, format!("{:?}", s.distinct())));
    }
    Ok(VerifyReport { n, checks })
}

pub fn verify(common: &Common, chain_max_n: usize) -> Result<Report, String> {
    let cap = dense_cap()?;
    let reports = per_size(common, |n| verify_one(n, chain_max_n, cap))?;
    let failures: Vec<String> = reports
        .iter()
        .flat_map(|r| {
            r.checks
                .iter()
                .filter(|c| c.status == Status::Fail)
                .map(move |c| format!("n={}: {}: {}", r.n, c.name, c.detail))
        })
        .collect();
    let body = match common.format {
        Format::Csv => {
            let mut s = String::from("n,check,status,detail\n");
            for r in &reports {
                for c in &r.checks {
                    let status = to_value(&c.status);
                    s.push_str(&format!(
                        "{},{},{},\"{}\"\n",
                        r.n,
                        c.name,
                        status.as_str().unwrap_or_default(),
                        c.detail.replace('"', "\"\"")
                    ));
                }
            }
            s
        }
        Format::Json => envelope("verify", to_value(&reports), &failures),
    };
    Ok(Report { body, failures })
}

pub fn domination(common: &Common) -> Result<Report, String> {
    let limits = common.limits();
    let results: Vec<VertexSubsetResult> = per_size(common, |n| Ok(domination_number(&build(n)?, limits)))?;
    let mut failures = Vec::new();
    for r in &results {
        let n = r.n;
        let g = build(n)?;
        if !r.witness_valid(&g) {
            failures.push(format!("n={n}: witness does not dominate"));
        }
        let (lo, hi) = domination_bounds(n);
        if r.lower_bound < lo || r.upper_bound > hi || r.lower_bound > r.upper_bound {
            failures.push(format!(
                "n={n}: bracket [{}, {}] inconsistent with bounds [{lo}, {hi}]",
                r.lower_bound, r.upper_bound
            ));
        }
        if let Some(&known) = KNOWN_GAMMA.get(n - 1) {
            if !(r.lower_bound <= known && known <= r.upper_bound) {
                failures.push(format!(
                    "n={n}: bracket [{}, {}] excludes the published value {known}",
                    r.lower_bound, r.upper_bound
                ));
            }
        }
    }
    let exact: Vec<(usize, usize)> = results.iter().filter(|r| r.optimal).map(|r| (r.n, r.value)).collect();
    let mono = monotonicity_check(&exact);
    if !mono.proposition_holds {
        failures.push(format!(
            "gamma(n+1) <= gamma(n) + 1 fails after n = {:?}",
            mono.proposition_violations
        ));
    }
    let body = match common.format {
        Format::Csv => {
            let mut s = String::from("i,j,value,lower,upper,optimal\n");
            for r in &results {
                let value = if r.optimal { r.value.to_string() } else { String::new() };
                s.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.n / 9,
                    r.n % 9,
                    value,
                    r.lower_bound,
                    r.upper_bound,
                    r.optimal
                ));
            }
            s
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&json!({
                "command": "domination",
                "results": to_value(&results),
                "monotonicity": to_value(&mono),
                "failures": failures,
            }))
            .expect("report serialises");
            s.push('\n');
            s
        }
    };
    Ok(Report { body, failures })
}

#[derive(Serialize)]
struct ConjectureReport {
    #[serde(flatten)]
    scan: IntegerEigenScan,
    /// Published integer eigenvalues, for `3 <= n <= 11`.
    published: Option<Vec<i64>>,
    matches_published: Option<bool>,
}

pub fn conjecture(common: &Common, exact_cap: usize) -> Result<Report, String> {
    let reports: Vec<ConjectureReport> = per_size(common, |n| {
        let scan = integer_eigenvalue_scan(&build(n)?, exact_cap).map_err(|e| format!("n={n}: {e}"))?;
        let published = table3(n).map(<[i64]>::to_vec);
        let matches_published = published.as_ref().map(|p| *p == scan.distinct());
        Ok(ConjectureReport {
            scan,
            published,
            matches_published,
        })
    })?;
    let failures: Vec<String> = reports
        .iter()
        .filter(|r| r.matches_published == Some(false))
        .map(|r| format!("n={}: integer eigenvalues {:?} differ from the published list", r.scan.n, r.scan.distinct()))
        .collect();
    let body = match common.format {
        Format::Csv => {
            let mut s = String::from("n,eigenvalue,multiplicity,conjectured\n");
            for r in &reports {
                for &(k, m) in &r.scan.eigenvalues {
                    let conj = r.scan.conjectured.as_ref().map(|c| c.contains(&k).to_string());
                    s.push_str(&format!("{},{},{},{}\n", r.scan.n, k, m, conj.unwrap_or_default()));
                }
            }
            s
        }
        Format::Json => envelope("conjecture", to_value(&reports), &failures),
    };
    Ok(Report { body, failures })
}
