//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p maxmin --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use maxmin::bijection::{
    count_perms_by_weight, enumerate_stems, in_table_region, stem_count, stem_to_partition,
    target_weight, verify_stem_paths,
};
use maxmin::eulerian::{eulerian_polynomial, maxwt, q_eulerian, QEulerianTable};
use maxmin::min_decomp::{build_min_decomp, verify_injectivity};
use maxmin::partitions::{t_nk, t_nk_contributions, t_triangle};
use maxmin::perm::all_permutations;
use maxmin::tree::build_max_weight_tree;
use maxmin::weight::{weight_accelerated, weight_via_ranges};
use maxmin::{EnumConfig, Permutation};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const PUBLISHED_Q_EULERIAN: [(usize, &str); 4] = [
    (3, "1 + x(q + 3) + x^2"),
    (4, "1 + x(q^2 + 3q + 7) + x^2(q^2 + 4q + 6) + x^3"),
    (
        5,
        "1 + x(q^3 + 3q^2 + 7q + 15) + x^2(q^4 + 4q^3 + 11q^2 + 25q + 25) + x^3(q^3 + 5q^2 + 10q + 10) + x^4",
    ),
    (
        6,
        "1 + x(q^4 + 3q^3 + 7q^2 + 15q + 31) + x^2(q^6 + 4q^5 + 11q^4 + 31q^3 + 58q^2 + 107q + 90) + x^3(q^6 + 5q^5 + 16q^4 + 34q^3 + 76q^2 + 105q + 65) + x^4(q^4 + 6q^3 + 15q^2 + 20q + 15) + x^5",
    ),
];

fn q_eulerian_exactness() -> Outcome {
    let cfg = EnumConfig::default();
    for (n, text) in PUBLISHED_Q_EULERIAN {
        let got = q_eulerian(n, &cfg).map_err(|e| e.to_string())?.to_string();
        ensure(got == text, || format!("E_{n}: got {got}"))?;
    }
    let e6 = q_eulerian(6, &cfg).map_err(|e| e.to_string())?;
    ensure(e6.x_coefficient(2) == [90, 107, 58, 31, 11, 4, 1], || {
        "E_6 x^2".into()
    })?;
    Ok("E_3..E_6 term-for-term".into())
}

fn eulerian_consistency() -> Outcome {
    let cfg = EnumConfig::default();
    let e4 = eulerian_polynomial(4, &cfg).map_err(|e| e.to_string())?;
    ensure(e4 == [1, 11, 11, 1], || format!("E_4 = {e4:?}"))?;
    for n in 1..=9 {
        let e = eulerian_polynomial(n, &cfg).map_err(|e| e.to_string())?;
        let q = q_eulerian(n, &cfg).map_err(|e| e.to_string())?;
        ensure(q.at_q_one() == e, || format!("n={n}: q=1 mismatch"))?;
        let fact: u64 = (1..=n as u64).product();
        ensure(e.iter().sum::<u64>() == fact, || {
            format!("n={n}: sum != n!")
        })?;
        ensure(q.coefficient_sum() == fact, || {
            format!("n={n}: q sum != n!")
        })?;
    }
    Ok("n <= 9, sums n!".into())
}

const PUBLISHED_WD: [[u64; 6]; 4] = [
    [1, 3, 7, 15, 31, 63],
    [1, 4, 11, 31, 65, 157],
    [1, 5, 16, 41, 112, 244],
    [1, 6, 22, 63, 155, 393],
];

fn wd_rows(threads: usize) -> Result<(Vec<Vec<u64>>, Duration), String> {
    let start = Instant::now();
    let table = QEulerianTable::new(EnumConfig::default().with_threads(threads));
    let rows = (1..=4)
        .map(|d| table.wd_series(d, 6).map(|s| s.coefficients))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    Ok((rows, start.elapsed()))
}

fn wd_series_values() -> Outcome {
    let single_budget = Duration::from_secs(600);
    let parallel_budget = Duration::from_secs(120);
    let (single, t1) = wd_rows(1)?;
    let (parallel, t8) = wd_rows(8)?;
    for (d, row) in single.iter().enumerate() {
        ensure(row[..] == PUBLISHED_WD[d], || {
            format!("W_{}: {row:?}", d + 1)
        })?;
    }
    ensure(single == parallel, || "thread count changed results".into())?;
    ensure(t1 <= single_budget, || format!("1 thread took {t1:.1?}"))?;
    ensure(t8 <= parallel_budget, || format!("8 threads took {t8:.1?}"))?;
    Ok(format!("W_1..W_4, 1 thread {t1:.2?}, 8 threads {t8:.2?}"))
}

fn stabilization() -> Outcome {
    let table = QEulerianTable::new(EnumConfig::default());
    let mut checked = 0;
    for d in 1..=3 {
        for k in 0..=3 {
            let s = table.stabilization(d, k, 9).map_err(|e| e.to_string())?;
            ensure(s.is_stable(), || format!("d={d} k={k}: {:?}", s.values))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (d, k) pairs constant through n = 9"))
}

const PUBLISHED_TRIANGLE: [&[u64]; 11] = [
    &[1],
    &[1, 1],
    &[2, 3, 1],
    &[3, 6, 4, 1],
    &[5, 12, 11, 5, 1],
    &[7, 20, 24, 16, 6, 1],
    &[11, 35, 49, 41, 22, 7, 1],
    &[15, 54, 89, 91, 63, 29, 8, 1],
    &[22, 86, 158, 186, 155, 92, 37, 9, 1],
    &[30, 128, 262, 351, 342, 247, 129, 46, 10, 1],
    &[42, 192, 428, 635, 700, 590, 376, 175, 56, 11, 1],
];

const PARTITIONS_OF_EIGHT: [(&str, u64); 7] = [
    ("41111", 1),
    ("32111", 1),
    ("311111", 6),
    ("22211", 1),
    ("221111", 6),
    ("2111111", 21),
    ("11111111", 56),
];

fn partition_triangle() -> Outcome {
    let t = t_triangle(10);
    let mut cells = 0;
    for (n, row) in PUBLISHED_TRIANGLE.iter().enumerate() {
        ensure(t.rows[n] == *row, || format!("row {n}: {:?}", t.rows[n]))?;
        cells += row.len();
    }
    ensure(cells == 66, || format!("{cells} cells"))?;
    let got: BTreeSet<(String, u64)> = t_nk_contributions(8, 5)
        .into_iter()
        .map(|(p, c)| (p.to_string(), c))
        .collect();
    let expected: BTreeSet<(String, u64)> = PARTITIONS_OF_EIGHT
        .iter()
        .map(|&(p, c)| (p.to_string(), c))
        .collect();
    ensure(got == expected, || format!("T(8,5) contributions {got:?}"))?;
    ensure(t_nk(8, 5) == 92, || "T(8,5) != 92".into())?;
    Ok(format!("{cells} cells (rows 0..=10), T(8,5) = 92"))
}

fn bijection() -> Outcome {
    let table = QEulerianTable::new(EnumConfig::default());
    let mut pairs = 0;
    for n in 2..=10 {
        for d in 1..n {
            if !in_table_region(n, d) {
                continue;
            }
            let w = target_weight(n, d);
            let brute = count_perms_by_weight(n, d, w, &table).map_err(|e| e.to_string())?;
            let t = t_nk(n as u32 - 1, d as u32);
            let stems: u64 = enumerate_stems(n, d).iter().map(stem_count).sum();
            ensure(brute == t && stems == t, || {
                format!("n={n} d={d}: brute {brute}, T {t}, stems {stems}")
            })?;
            if (n, d) == (9, 5) {
                ensure(t == 92, || "(9,5) != 92".into())?;
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (n, d) pairs with n <= 10, 2d >= n-1"))
}

fn stem_machinery() -> Outcome {
    let stems = enumerate_stems(9, 5);
    let labels: Vec<Vec<u32>> = stems.iter().map(|s| s.labels().to_vec()).collect();
    let expected_labels: Vec<Vec<u32>> = vec![
        vec![1, 2, 3, 4],
        vec![1, 2, 3, 5],
        vec![1, 2, 3, 6],
        vec![1, 2, 3, 7],
        vec![1, 2, 4, 5],
        vec![1, 2, 4, 6],
        vec![1, 3, 4, 5],
    ];
    ensure(labels == expected_labels, || format!("stems {labels:?}"))?;
    let counts: Vec<u64> = stems.iter().map(stem_count).collect();
    ensure(counts == [56, 21, 6, 1, 6, 1, 1], || {
        format!("counts {counts:?}")
    })?;
    let mut images = BTreeSet::new();
    for (s, &c) in stems.iter().zip(&counts) {
        let p = stem_to_partition(s).map_err(|e| e.to_string())?.to_string();
        ensure(PARTITIONS_OF_EIGHT.contains(&(p.as_str(), c)), || {
            format!("stem {s} -> {p} with count {c}")
        })?;
        images.insert(p);
    }
    ensure(images.len() == 7, || "partition images not distinct".into())?;
    Ok("seven stems, counts and partition images".into())
}

fn algorithm_agreement() -> Outcome {
    let check = |p: &Permutation| -> Result<(), String> {
        let tree = build_max_weight_tree(p);
        let w = [
            tree.weight_recursive(),
            tree.weight_via_descent_sums(),
            weight_via_ranges(p),
            weight_accelerated(p),
            build_min_decomp(p).weight_via_leaves(),
        ];
        ensure(w.iter().all(|&x| x == w[0]), || {
            if p.len() <= 20 {
                format!("{p}: {w:?}")
            } else {
                format!("length {}: {w:?}", p.len())
            }
        })
    };
    let mut count = 0;
    for p in all_permutations(8) {
        check(&p)?;
        count += 1;
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        check(&random_permutation(&mut rng, 200))?;
    }
    Ok(format!("{count} of S_8 and 1000 of length 200"))
}

fn random_permutation(rng: &mut StdRng, n: usize) -> Permutation {
    let mut w: Vec<u32> = (1..=n as u32).collect();
    w.shuffle(rng);
    Permutation::new(w).expect("shuffled identity")
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn performance() -> Outcome {
    let mut rng = StdRng::seed_from_u64(42);
    let big = random_permutation(&mut rng, 100_000);
    let (_, fast) = timed(|| weight_accelerated(&big));
    ensure(fast < Duration::from_secs(1), || {
        format!("accelerated 1e5 took {fast:.2?}")
    })?;

    let mid = random_permutation(&mut rng, 10_000);
    let (w_range, quad) = timed(|| weight_via_ranges(&mid));
    ensure(quad < Duration::from_secs(5), || {
        format!("ranges 1e4 took {quad:.2?}")
    })?;
    ensure(w_range == weight_accelerated(&mid), || {
        "1e4 weights differ".into()
    })?;

    // Scaling on the identity, where every scan in the range algorithm runs
    // to the end: doubling n should roughly quadruple its time.
    let mut report = Vec::new();
    for n in [2_000, 4_000, 8_000] {
        let p = Permutation::identity(n);
        let (_, tq) = timed(|| weight_via_ranges(&p));
        let (_, tf) = timed(|| weight_accelerated(&p));
        report.push(format!("n={n} ranges {tq:.1?} fast {tf:.1?}"));
    }
    println!("    scaling: {}", report.join("; "));
    Ok(format!("accelerated 1e5 {fast:.2?}, ranges 1e4 {quad:.2?}"))
}

fn structural_lemmas() -> Outcome {
    let cfg = EnumConfig::default();
    let mut moves = 0u64;
    for n in 1..=8 {
        for p in all_permutations(n) {
            let tree = build_max_weight_tree(&p);
            let decomp = build_min_decomp(&p);
            let mut expected: Vec<u32> = p.descent_values();
            expected.push(n as u32 + 1);
            expected.sort_unstable();
            ensure(decomp.leaves() == expected, || format!("{p}: leaves"))?;
            for v in 1..=n as u32 + 1 {
                ensure(tree.subtree(v) == decomp.descendants(v), || {
                    format!("{p}: subtree of {v}")
                })?;
            }
            let w = decomp.weight_via_leaves();
            for leaf in decomp.leaves() {
                let parent = decomp.parent(leaf).expect("leaves have parents");
                if parent == decomp.root() || decomp.children(parent).len() < 2 {
                    continue;
                }
                let moved = decomp.move_up(leaf).map_err(|e| e.to_string())?;
                ensure(moved.weight_via_leaves() + 1 == w, || {
                    format!("{p}: move {leaf}")
                })?;
                moves += 1;
            }
        }
        ensure(
            verify_injectivity(n, &cfg).map_err(|e| e.to_string())?,
            || format!("not injective at n={n}"),
        )?;
    }
    let table = QEulerianTable::new(cfg);
    let mut path_checked = 0;
    for n in 1..=9 {
        let poly = table.get(n).map_err(|e| e.to_string())?;
        for d in 0..n {
            ensure(
                poly.q_degree_at(d as u32) == Some(maxwt(n, d) as u32),
                || format!("max weight n={n} d={d}"),
            )?;
        }
        let r = verify_stem_paths(n, &cfg).map_err(|e| e.to_string())?;
        ensure(r.violations.is_empty(), || {
            format!("n={n}: branching stem {}", r.violations[0])
        })?;
        path_checked += r.checked;
    }
    Ok(format!(
        "n <= 8 ({moves} leaf moves), max weight and path stems n <= 9 ({path_checked} perms)"
    ))
}

struct Criterion {
    id: &'static str,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        id: "AC1",
        name: "q-Eulerian exactness",
        budget: Duration::from_secs(1),
        run: q_eulerian_exactness,
    },
    Criterion {
        id: "AC2",
        name: "Eulerian consistency",
        budget: Duration::from_secs(30),
        run: eulerian_consistency,
    },
    Criterion {
        id: "AC3",
        name: "W_d series",
        budget: Duration::from_secs(720),
        run: wd_series_values,
    },
    Criterion {
        id: "AC4",
        name: "stabilization",
        budget: Duration::from_secs(30),
        run: stabilization,
    },
    Criterion {
        id: "AC5",
        name: "partition triangle",
        budget: Duration::from_secs(1),
        run: partition_triangle,
    },
    Criterion {
        id: "AC6",
        name: "bijection counts",
        budget: Duration::from_secs(600),
        run: bijection,
    },
    Criterion {
        id: "AC7",
        name: "stem machinery",
        budget: Duration::from_secs(1),
        run: stem_machinery,
    },
    Criterion {
        id: "AC8",
        name: "algorithm agreement",
        budget: Duration::from_secs(60),
        run: algorithm_agreement,
    },
    Criterion {
        id: "AC9",
        name: "performance",
        budget: Duration::from_secs(60),
        run: performance,
    },
    Criterion {
        id: "AC10",
        name: "structural lemmas",
        budget: Duration::from_secs(120),
        run: structural_lemmas,
    },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let (outcome, elapsed) = timed(c.run);
        let outcome = outcome.and_then(|detail| {
            ensure(elapsed <= c.budget, || {
                format!("over budget {:.0?}", c.budget)
            })
            .map(|_| detail)
        });
        match outcome {
            Ok(detail) => println!("PASS {} {} ({elapsed:.2?}): {detail}", c.id, c.name),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {} ({elapsed:.2?}): {why}", c.id, c.name);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
