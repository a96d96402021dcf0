//! Acceptance gate: one PASS/FAIL line per criterion, exit status nonzero if
//! any criterion fails. All comparisons are exact integer equalities; the only
//! tolerances are the wall-clock limits below.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use chromhom_core::graph::{connected_graphs, is_planar, Graph};
use chromhom_core::homology::{homology_group, smith_normal_form, IntMatrix};
use chromhom_core::lift::{k33_seed, k5_seed, CanonicalSeed};
use chromhom_core::oracle::oracle_restricted_matrices;
use chromhom_core::worked_examples::run_worked_examples;
use chromhom_core::{build_restricted_complex, check_certificate, Partition};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const WORKED_EXAMPLES_LIMIT: Duration = Duration::from_secs(5);
const SEED_LIMIT: Duration = Duration::from_secs(30);
const ORACLE_LIMIT: Duration = Duration::from_secs(600);
const LIFT_LIMIT: Duration = Duration::from_secs(600);
const SURVEY_LIMIT: Duration = Duration::from_secs(1800);

const RANDOM_GRAPHS: usize = 100;
const RANDOM_MATRICES: usize = 200;
const SEED: u64 = 0x5eed_c401;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn graph(n: usize, edges: &[(u16, u16)]) -> Graph {
    Graph::new(n, edges.iter().copied()).expect("literal graph")
}

fn k2(n: usize) -> Partition {
    Partition::two_column(n, 2).expect("n >= 4")
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chromhom"))
}

fn worked_examples() -> Outcome {
    let start = Instant::now();
    let outcomes = run_worked_examples(None);
    let failed: Vec<String> = outcomes.iter().filter(|o| !o.passed).map(|o| o.to_string()).collect();
    ensure(failed.is_empty(), || failed.join("; "))?;
    let status = bin().arg("verify-paper").output().map_err(|e| e.to_string())?;
    ensure(status.status.success(), || format!("verify-paper exited with {}", status.status))?;
    within(start, WORKED_EXAMPLES_LIMIT)?;
    Ok(format!("{} checks, library and binary", outcomes.len()))
}

fn seed_check(seed: &CanonicalSeed) -> Result<String, String> {
    let start = Instant::now();
    let (cert, complex) = seed.certificate().map_err(|e| e.to_string())?;
    let v = check_certificate(&cert, &complex).map_err(|e| e.to_string())?;
    ensure(v.is_valid(), || format!("{}: {v:?}", seed.graph.id()))?;
    let h = homology_group(complex.d1(), complex.d2()).map_err(|e| e.to_string())?;
    ensure(h.has_z2(), || format!("{}: no even invariant factor in {h:?}", seed.graph.id()))?;
    within(start, SEED_LIMIT)?;
    let factors: Vec<String> = h.invariant_factors.iter().map(ToString::to_string).collect();
    Ok(format!("{} factors [{}]", seed.shape, factors.join(",")))
}

fn seeds() -> Outcome {
    let k5 = seed_check(&k5_seed())?;
    let k33 = seed_check(&k33_seed().map_err(|e| e.to_string())?)?;
    Ok(format!("K5 {k5}; K3,3 {k33}"))
}

/// Ten pinned six-vertex graphs.
fn six_vertex_sample() -> Vec<Graph> {
    vec![
        Graph::complete(6),
        Graph::complete_bipartite(3, 3),
        Graph::cycle(6),
        Graph::path(6),
        graph(6, &[(1, 2), (1, 3), (1, 4), (1, 5), (1, 6)]),
        graph(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 6), (2, 6), (3, 6), (4, 6), (5, 6)]),
        graph(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)]),
        graph(6, &[(1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (2, 6), (3, 5), (3, 6), (4, 5), (4, 6)]),
        graph(6, &[(1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5)]),
        graph(6, &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5), (5, 6)]),
    ]
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut graphs: Vec<Graph> = (4..=5).flat_map(connected_graphs).collect();
    graphs.extend(six_vertex_sample());
    for g in &graphs {
        let shape = k2(g.n());
        let c = build_restricted_complex(g, &shape).map_err(|e| format!("{}: {e}", g.id()))?;
        let (d1, d2) = oracle_restricted_matrices(g, &shape).map_err(|e| format!("{}: {e}", g.id()))?;
        ensure(*c.d1() == d1, || format!("d1 differs on {}", g.id()))?;
        ensure(*c.d2() == d2, || format!("d2 differs on {}", g.id()))?;
    }
    within(start, ORACLE_LIMIT)?;
    Ok(format!("{} graphs at k = 2", graphs.len()))
}

fn random_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.random_range(4..=8usize);
    let mut edges = Vec::new();
    for a in 1..=n as u16 {
        for b in a + 1..=n as u16 {
            if rng.random_bool(0.5) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, edges).expect("random graph")
}

fn complex_validity() -> Outcome {
    let mut graphs: Vec<Graph> = (4..=6).flat_map(connected_graphs).collect();
    let exhaustive = graphs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    graphs.extend((0..RANDOM_GRAPHS).map(|_| random_graph(&mut rng)));
    let mut complexes = 0;
    for g in &graphs {
        for k in 2..=3 {
            if 2 * k > g.n() {
                continue;
            }
            let shape = Partition::two_column(g.n(), k).expect("fits");
            let c = build_restricted_complex(g, &shape).map_err(|e| format!("{} k={k}: {e}", g.id()))?;
            ensure(c.d1().mul(c.d2()).is_zero(), || format!("d1 d2 != 0 on {} k={k}", g.id()))?;
            complexes += 1;
        }
    }
    Ok(format!("{exhaustive} connected graphs n <= 6 and {RANDOM_GRAPHS} random n <= 8; {complexes} complexes"))
}

fn lift_targets() -> Vec<(&'static str, Graph)> {
    let k5 = Graph::complete(5);
    let k5_1 = k5.subdivide(1, 2).expect("edge");
    let k5_2 = k5_1.subdivide(3, 4).expect("edge");
    let k5_3 = k5_2.subdivide(1, 6).expect("edge");
    let k33 = Graph::complete_bipartite(3, 3);
    let pendant = k33.with_isolated(1).add_edge(1, 7).expect("new edge");
    vec![
        ("K5", k5),
        ("K3,3", k33),
        ("K5 + 1 subdivision", k5_1),
        ("K5 + 2 subdivisions", k5_2),
        ("K5 + 3 subdivisions", k5_3),
        ("K6", Graph::complete(6)),
        ("K3,3 + pendant", pendant),
        ("Petersen", Graph::petersen()),
    ]
}

/// Certifies in one process and checks in another, from files only.
fn certify_and_check(dir: &Path, name: &str, g: &Graph) -> Result<(), String> {
    let stem = name.replace([' ', ',', '+'], "_");
    let graph_file = dir.join(format!("{stem}.txt"));
    let cert_file = dir.join(format!("{stem}.cert.json"));
    std::fs::write(&graph_file, g.to_edge_list()).map_err(|e| e.to_string())?;
    let out = bin()
        .arg("certify")
        .arg(&graph_file)
        .arg("--out")
        .arg(&cert_file)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!("{name}: certify exited {} ({})", out.status, String::from_utf8_lossy(&out.stderr).trim())
    })?;
    let out = bin()
        .arg("check")
        .arg(&cert_file)
        .arg("--graph")
        .arg(&graph_file)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || format!("{name}: check exited {}", out.status))?;
    let report: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure(report["valid"] == Value::Bool(true), || format!("{name}: {report}"))
}

fn lifting_pipeline() -> Outcome {
    let start = Instant::now();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut direct = 0;
    let targets = lift_targets();
    for (name, g) in &targets {
        ensure(!is_planar(g), || format!("{name} should be non-planar"))?;
        certify_and_check(dir.path(), name, g)?;
        if g.n() <= 7 {
            let c = build_restricted_complex(g, &k2(g.n())).map_err(|e| e.to_string())?;
            let h = homology_group(c.d1(), c.d2()).map_err(|e| e.to_string())?;
            ensure(h.has_z2(), || format!("{name}: homology {h:?} has no Z/2"))?;
            direct += 1;
        }
    }
    within(start, LIFT_LIMIT)?;
    Ok(format!("{} targets checked in fresh processes, {direct} confirmed by direct homology", targets.len()))
}

/// Determinant by expansion over permutations (Heap's algorithm), for
/// matrices of size at most 7.
fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1i32;
    let term = |p: &[usize], s: i32| {
        let prod = p.iter().enumerate().fold(BigInt::one(), |acc, (i, &j)| acc * &m[i][j]);
        if s > 0 {
            prod
        } else {
            -prod
        }
    };
    let mut total = term(&perm, sign);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            total += term(&perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `d_k`: gcd of all `k x k` minors.
fn determinantal_divisors(m: &[Vec<BigInt>], rows: usize, cols: usize) -> Vec<BigInt> {
    (1..=rows.min(cols))
        .map(|k| {
            let mut g = BigInt::zero();
            for r in subsets(rows, k) {
                for c in subsets(cols, k) {
                    let minor: Vec<Vec<BigInt>> = r.iter().map(|&i| c.iter().map(|&j| m[i][j].clone()).collect()).collect();
                    g = g.gcd(&det(&minor));
                }
            }
            g
        })
        .collect()
}

fn random_matrix(rng: &mut ChaCha8Rng) -> (usize, usize, Vec<Vec<BigInt>>) {
    let rows = rng.random_range(1..=7usize);
    let cols = rng.random_range(1..=7usize);
    // Half of the suite is a product through a narrow middle, so low rank
    // and large invariant factors both occur.
    let m: Vec<Vec<i64>> = if rng.random_bool(0.5) {
        let mid = rng.random_range(1..=rows.min(cols));
        let a: Vec<Vec<i64>> = (0..rows).map(|_| (0..mid).map(|_| rng.random_range(-4..=4)).collect()).collect();
        let b: Vec<Vec<i64>> = (0..mid).map(|_| (0..cols).map(|_| rng.random_range(-4..=4)).collect()).collect();
        (0..rows)
            .map(|i| (0..cols).map(|j| (0..mid).map(|t| a[i][t] * b[t][j]).sum()).collect())
            .collect()
    } else {
        (0..rows).map(|_| (0..cols).map(|_| rng.random_range(-9..=9)).collect()).collect()
    };
    let big = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    (rows, cols, big)
}

fn to_rows(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

fn snf_algebra() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xface);
    let mut nontrivial = 0;
    for case in 0..RANDOM_MATRICES {
        let (rows, cols, m) = random_matrix(&mut rng);
        let a = IntMatrix::from_rows(&m);
        let f = smith_normal_form(&a);

        ensure(f.u.mul(&a).mul(&f.v) == f.s, || format!("case {case}: U m V != S"))?;
        for i in 0..rows {
            for j in 0..cols {
                let on_diag = i == j && i < f.rank;
                ensure(on_diag || f.s[(i, j)].is_zero(), || format!("case {case}: S not diagonal"))?;
            }
        }
        ensure(det(&to_rows(&f.u)).abs().is_one(), || format!("case {case}: U not unimodular"))?;
        ensure(det(&to_rows(&f.v)).abs().is_one(), || format!("case {case}: V not unimodular"))?;
        ensure(f.v.mul(&f.v_inv) == IntMatrix::identity(cols), || format!("case {case}: V V^-1 != I"))?;

        // s_1 ... s_k = d_k for every k.
        let dk = determinantal_divisors(&m, rows, cols);
        let diag: Vec<BigInt> = (0..rows.min(cols)).map(|i| f.s[(i, i)].clone()).collect();
        let mut prod = BigInt::one();
        for (k, d) in dk.iter().enumerate() {
            prod *= &diag[k];
            ensure(prod == *d, || format!("case {case}: product of first {} factors {prod} != d_{} = {d}", k + 1, k + 1))?;
        }
        if f.invariant_factors().iter().any(|x| *x > BigInt::one()) {
            nontrivial += 1;
        }
    }
    Ok(format!("{RANDOM_MATRICES} matrices up to 7x7, {nontrivial} with nontrivial torsion"))
}

fn survey_lines(cache: &Path) -> Result<String, String> {
    let out = bin()
        .args(["survey", "--generate", "6", "--format", "jsonl", "--cache"])
        .arg(cache)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!("survey exited {}: {}", out.status, String::from_utf8_lossy(&out.stderr).trim())
    })?;
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn survey_consistency() -> Outcome {
    let start = Instant::now();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let text = survey_lines(dir.path())?;
    let mut counts = [[0usize; 2]; 2];
    let mut records = 0;
    for line in text.lines() {
        let r: Value = serde_json::from_str(line).map_err(|e| e.to_string())?;
        let planar = r["planar"].as_bool().ok_or("missing planar")?;
        let has_z2 = r["has_z2"].as_bool().ok_or("missing has_z2")?;
        ensure(planar || has_z2, || format!("non-planar without Z/2: {}", r["id"]))?;
        if !planar {
            ensure(r["direct_z2"] == Value::Bool(true), || format!("direct homology misses Z/2: {}", r["id"]))?;
            ensure(r["certificate"].is_string(), || format!("no certificate: {}", r["id"]))?;
        }
        counts[planar as usize][has_z2 as usize] += 1;
        records += 1;
    }
    ensure(records == 143, || format!("expected 143 connected graphs, got {records}"))?;
    let again = survey_lines(dir.path())?;
    ensure(again == text, || "warm-cache rerun differs".into())?;
    within(start, SURVEY_LIMIT)?;
    Ok(format!(
        "{records} graphs; non-planar with Z/2 {}; planar with Z/2 {}, planar without {} (evidence only)",
        counts[0][1], counts[1][1], counts[1][0]
    ))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("worked examples", worked_examples),
        ("seed certificates", seeds),
        ("oracle equivalence", oracle_equivalence),
        ("complex validity", complex_validity),
        ("lifting pipeline", lifting_pipeline),
        ("SNF algebra", snf_algebra),
        ("survey consistency", survey_consistency),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match result {
            Ok(detail) => println!("PASS {} {name} ({t:.2?}): {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {} {name} ({t:.2?}): {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
