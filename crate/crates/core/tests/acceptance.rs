//! The ten acceptance criteria, one PASS/FAIL line each.

use std::time::{Duration, Instant};

use teich0::exactalg::Rational;
use teich0::verify::{run, Config};

struct Criterion {
    id: usize,
    title: &'static str,
    runs: &'static [(&'static str, usize)],
    budget: Duration,
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, title: "braid identities", runs: &[("braid", 4)], budget: Duration::from_secs(5) },
    Criterion { id: 2, title: "universal-category axioms", runs: &[("ucat", 4)], budget: Duration::from_secs(60) },
    Criterion { id: 3, title: "contraction axioms", runs: &[("contraction", 4)], budget: Duration::from_secs(60) },
    Criterion { id: 4, title: "quotient-category machinery", runs: &[("cat", 4)], budget: Duration::from_secs(60) },
    Criterion { id: 5, title: "Lie-algebra structure", runs: &[("lie", 4)], budget: Duration::from_secs(30) },
    Criterion { id: 6, title: "associator solver", runs: &[("assoc", 4)], budget: Duration::from_secs(60) },
    Criterion { id: 7, title: "graded representation", runs: &[("graded", 4)], budget: Duration::from_secs(60) },
    Criterion { id: 8, title: "i.b.m.c. contraction", runs: &[("ibmc", 4)], budget: Duration::from_secs(60) },
    Criterion { id: 9, title: "GT machinery", runs: &[("gt", 3), ("gt", 4)], budget: Duration::from_secs(120) },
    Criterion { id: 10, title: "GRT shadow", runs: &[("grt", 3)], budget: Duration::from_secs(120) },
];

fn evaluate(c: &Criterion) -> (bool, String) {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut total = 0;
    for &(section, degree) in c.runs {
        let cfg = Config { degree, mu: Rational::one(), seed: 0 };
        match run(section, &cfg) {
            Ok(report) => {
                total += report.lines.len();
                failures.extend(report.lines.iter().filter(|l| !l.pass).map(|l| format!("N={degree} {}", l.render())));
            }
            Err(e) => failures.push(format!("{section} at N={degree}: {e}")),
        }
    }
    let elapsed = start.elapsed();
    if elapsed > c.budget {
        failures.push(format!("runtime {:.2} s exceeds {} s", elapsed.as_secs_f64(), c.budget.as_secs()));
    }
    let pass = failures.is_empty() && total > 0;
    let detail = if pass { format!("{total} checks, {:.2} s", elapsed.as_secs_f64()) } else { failures.join("; ") };
    (pass, detail)
}

#[test]
fn acceptance_criteria() {
    let mut all = true;
    for c in CRITERIA {
        let (pass, detail) = evaluate(c);
        println!("criterion {:>2} {}: {} ({detail})", c.id, c.title, if pass { "PASS" } else { "FAIL" });
        all &= pass;
    }
    assert!(all, "some acceptance criteria failed");
}
