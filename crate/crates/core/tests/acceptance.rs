//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//!
//! Run with `cargo test -p sigma-core --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sigma_core::canon::Partition;
use sigma_core::family;
use sigma_core::verify::{
    enumerate_connected, enumerate_connected_with, verify_good_cyclic_no_bridge,
    verify_good_cyclic_no_cutvertex, verify_main_theorem, verify_sigma1_at_least_m,
    verify_structural_claims, CheckOptions, GeneratorConfig, GraphCorpus, Strategy,
    VerificationReport,
};
use sigma_core::{
    canonical_key, from_graph6, is_connected, sigma0_recursive, sigma1_recursive,
    sigma_bruteforce, sigma_spectrum, to_graph6, Graph, MemoTable,
};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn within(elapsed: Duration, limit: Duration, mut o: Outcome) -> Outcome {
    if elapsed > limit {
        o.passed = false;
        o.detail.push_str(&format!(
            "; runtime {:.2}s exceeds {:.0}s",
            elapsed.as_secs_f64(),
            limit.as_secs_f64()
        ));
    } else {
        o.detail
            .push_str(&format!("; {:.2}s", elapsed.as_secs_f64()));
    }
    o
}

fn both_methods(g: &Graph) -> (u64, u64) {
    (
        sigma_bruteforce(g, 1).unwrap().value,
        sigma1_recursive(g, &mut MemoTable::new()).unwrap().value,
    )
}

fn base_cases() -> Outcome {
    let start = Instant::now();
    let cases = [
        ("K4", family::complete(4).unwrap(), 6),
        ("K4-e", family::k4_minus_edge(), 5),
        ("K2,2", family::complete_bipartite(2, 2).unwrap(), 4),
        ("K3", family::complete(3).unwrap(), 3),
    ];
    let mut bad = Vec::new();
    for (name, g, want) in &cases {
        let (b, r) = both_methods(g);
        if b != *want || r != *want {
            bad.push(format!("{name}: brute={b} recursive={r} want={want}"));
        }
    }
    let o = outcome(bad.is_empty(), if bad.is_empty() { "6, 5, 4, 3 by both methods".into() } else { bad.join("; ") });
    within(start.elapsed(), Duration::from_secs(1), o)
}

fn extremal_families() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 4..=12usize {
        let (b, r) = both_methods(&family::star(n).unwrap());
        if b != n as u64 - 1 || r != n as u64 - 1 {
            bad.push(format!("star n={n}: {b}/{r}"));
        }
        let (b, r) = both_methods(&family::complete_bipartite(2, n - 2).unwrap());
        if b != 2 * n as u64 - 4 || r != 2 * n as u64 - 4 {
            bad.push(format!("K2,{} : {b}/{r}", n - 2));
        }
    }
    let o = outcome(bad.is_empty(), if bad.is_empty() { "n = 4..12, both methods".into() } else { bad.join("; ") });
    within(start.elapsed(), Duration::from_secs(5), o)
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    let mut mismatches = 0;
    for n in 1..=7 {
        for g in enumerate_connected(n).unwrap().iter() {
            total += 1;
            let r1 = sigma1_recursive(g, &mut MemoTable::new()).unwrap().value;
            let r0 = sigma0_recursive(g, &mut MemoTable::new()).unwrap().value;
            if r1 != sigma_bruteforce(g, 1).unwrap().value || r0 != sigma_bruteforce(g, 0).unwrap().value {
                mismatches += 1;
            }
        }
    }
    let o = outcome(
        total >= 995 && mismatches == 0,
        format!("{total} connected graphs (n <= 7), {mismatches} mismatches"),
    );
    within(start.elapsed(), Duration::from_secs(60), o)
}

fn summarize(reports: &[VerificationReport]) -> Outcome {
    let failing: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("n={} {} counterexamples (first: {:?})", r.min_order, r.counterexamples.len(), r.counterexamples.first()))
        .collect();
    let checked: usize = reports.iter().map(|r| r.graphs_checked).sum();
    if failing.is_empty() {
        outcome(true, format!("{checked} graphs, 0 counterexamples"))
    } else {
        outcome(false, failing.join("; "))
    }
}

struct BundleResult {
    sigma_m: Outcome,
    main: Outcome,
    lemmas: Outcome,
}

fn theorem_bundle() -> BundleResult {
    let start = Instant::now();
    let opts = CheckOptions {
        workers: 4,
        audit_fraction: 0.01,
    };
    let mut sigma_m = Vec::new();
    let mut main = Vec::new();
    let mut lemmas = Vec::new();
    let mut main_witnesses_ok = true;
    let mut notes = Vec::new();
    for n in 2..=8 {
        let corpus = enumerate_connected(n).unwrap();
        sigma_m.push(verify_sigma1_at_least_m(&corpus, &opts).unwrap());
        if n >= 3 {
            let r = verify_main_theorem(&corpus, &opts).unwrap();
            let expected = if n == 3 {
                family::complete(3).unwrap()
            } else {
                family::complete_bipartite(2, n - 2).unwrap()
            };
            let keys: Vec<_> = r
                .witnesses
                .iter()
                .map(|w| canonical_key(&from_graph6(w).unwrap()).unwrap())
                .collect();
            if keys != vec![canonical_key(&expected).unwrap()] {
                main_witnesses_ok = false;
                notes.push(format!("n={n} witnesses {:?}", r.witnesses));
            }
            main.push(r);
            lemmas.push(verify_good_cyclic_no_bridge(&corpus, &opts).unwrap());
            lemmas.push(verify_good_cyclic_no_cutvertex(&corpus, &opts).unwrap());
        }
    }
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(600);
    let mut main_o = summarize(&main);
    if !main_witnesses_ok {
        main_o.passed = false;
        main_o.detail.push_str(&format!("; {}", notes.join("; ")));
    } else {
        main_o.detail.push_str("; equality sets {K3}, {K2,n-2}");
    }
    BundleResult {
        sigma_m: within(elapsed, limit, summarize(&sigma_m)),
        main: within(elapsed, limit, main_o),
        lemmas: within(elapsed, limit, summarize(&lemmas)),
    }
}

fn structural_claims() -> Outcome {
    let start = Instant::now();
    let opts = CheckOptions {
        workers: 4,
        audit_fraction: 0.01,
    };
    let mut merged: Option<VerificationReport> = None;
    for n in 4..=7 {
        let r = verify_structural_claims(&enumerate_connected(n).unwrap(), &opts).unwrap();
        match &mut merged {
            None => merged = Some(r),
            Some(m) => m.merge(r),
        }
    }
    let r = merged.unwrap();
    let claims: Vec<String> = r
        .claims
        .iter()
        .map(|c| format!("({}) {} on {}", c.claim, c.verdict(), c.applicable))
        .collect();
    let all = r.claims.len() == 5 && r.claims.iter().all(|c| c.failures == 0) && r.passed();
    let o = outcome(all, claims.join(", "));
    within(start.elapsed(), Duration::from_secs(600), o)
}

fn partition_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut bad = 0;
    for _ in 0..500 {
        let n = rng.gen_range(0..=12);
        let g = common::random_graph(&mut rng, n);
        if sigma_spectrum(&g).unwrap().iter().sum::<u64>() != 1 << n {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("500 random graphs (n <= 12), {bad} failures"))
}

fn corpus_counts() -> Outcome {
    let expected = [2usize, 6, 21, 112, 853, 11117];
    let mut details = Vec::new();
    let mut ok = true;
    let second = GeneratorConfig {
        strategy: Strategy::EdgeAugmentation,
        partition: Partition::Degree,
        workers: 0,
    };
    for (n, &want) in (3..=8).zip(&expected) {
        let corpus = enumerate_connected(n).unwrap();
        let got = corpus.len();
        let cross = if n <= 6 {
            let oracle: BTreeSet<(usize, u64)> = common::all_labeled(n)
                .filter(is_connected)
                .map(|g| common::brute_canon(&g))
                .collect();
            let mine: BTreeSet<(usize, u64)> = corpus.iter().map(common::brute_canon).collect();
            (oracle == mine, oracle.len(), "labeled")
        } else {
            let other: GraphCorpus = enumerate_connected_with(n, &second).unwrap();
            (other.keys() == corpus.keys(), other.len(), "edge-augmentation")
        };
        if got != want || !cross.0 || cross.1 != want {
            ok = false;
        }
        details.push(format!("n={n}: {got} ({} {})", cross.2, cross.1));
    }
    outcome(ok, details.join(", "))
}

fn graph6_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut bad = 0;
    for _ in 0..10_000 {
        let n = rng.gen_range(0..=20);
        let g = common::random_graph(&mut rng, n);
        let s = to_graph6(&g).unwrap();
        let back = from_graph6(&s).unwrap();
        if back != g || to_graph6(&back).unwrap() != s {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("10000 random graphs (n <= 20), {bad} mismatches"))
}

fn main() -> ExitCode {
    let mut results: Vec<(usize, &str, Outcome)> = vec![
        (1, "base-case values", base_cases()),
        (2, "extremal families", extremal_families()),
        (3, "recursion = brute force", oracle_equivalence()),
    ];
    let bundle = theorem_bundle();
    results.push((4, "sigma1 >= m, equality iff good (n 2..8)", bundle.sigma_m));
    results.push((5, "cyclic lower bound and extremal graphs (n 3..8)", bundle.main));
    results.push((6, "good cyclic: no bridge, no cut vertex (n 3..8)", bundle.lemmas));
    results.push((7, "structural claims (a)-(e) (n 4..7)", structural_claims()));
    results.push((8, "power-set partition", partition_identity()));
    results.push((9, "corpus counts", corpus_counts()));
    results.push((10, "graph6 round-trip", graph6_round_trip()));

    let mut failed = 0;
    for (id, name, o) in &results {
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {id:>2}: {name}: {}", o.detail);
        failed += usize::from(!o.passed);
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
