//! One line per acceptance criterion, each backed by a verification suite.

use std::time::Duration;

use newtonpoly::par::Exec;
use newtonpoly::verify::run_suite;

const SEED: u64 = 1729;

/// `(criterion, suite, time limit)`.
const CRITERIA: [(u32, &str, Option<u64>); 10] = [
    (1, "laws", Some(10)),
    (2, "puiseux", Some(60)),
    (3, "product-realization", None),
    (4, "mixed-volume", None),
    (5, "intersection", None),
    (6, "merle", Some(300)),
    (7, "invariants", None),
    (8, "multiplicity", None),
    (9, "dual-degree", None),
    (10, "briancon-speder", None),
];

fn main() {
    let mut failed = Vec::new();
    for (n, suite, limit) in CRITERIA {
        let o = run_suite(suite, SEED, Exec::default()).unwrap();
        let in_time = limit.is_none_or(|s| o.elapsed < Duration::from_secs(s));
        let ok = o.passed() && in_time;
        let limit_text = limit.map_or(String::new(), |s| format!(", limit {s} s"));
        println!(
            "criterion {n:>2} [{suite}]: {} ({} checks, {:.2} s{limit_text})",
            if ok { "PASS" } else { "FAIL" },
            o.cases,
            o.elapsed.as_secs_f64()
        );
        for f in &o.failures {
            println!("    {f}");
        }
        if !ok {
            failed.push(n);
        }
    }
    let extra = [
        (
            "roundtrip",
            run_suite("roundtrip", SEED, Exec::default())
                .unwrap()
                .passed(),
        ),
        ("determinism", {
            let a = run_suite("mixed-volume", 7, Exec::Parallel).unwrap();
            let b = run_suite("mixed-volume", 7, Exec::Sequential).unwrap();
            (a.cases, a.failures) == (b.cases, b.failures)
        }),
    ];
    for (name, ok) in extra {
        println!("extra [{name}]: {}", if ok { "PASS" } else { "FAIL" });
    }
    if !failed.is_empty() || extra.iter().any(|e| !e.1) {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
