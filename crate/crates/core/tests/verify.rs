use teich0::exactalg::{q, qq};
use teich0::verify::{run, Config, SECTIONS};

#[test]
fn every_section_passes_at_low_degree() {
    for degree in [2, 3] {
        let cfg = Config { degree, mu: q(1), seed: 7 };
        let r = run("all", &cfg).unwrap();
        let failures: Vec<_> = r.lines.iter().filter(|l| !l.pass).map(|l| l.render()).collect();
        assert!(failures.is_empty(), "N={degree}: {failures:?}");
    }
}

#[test]
fn other_couplings_pass() {
    let cfg = Config { degree: 3, mu: qq(-1, 2), seed: 3 };
    for section in ["assoc", "ucat", "graded", "gt", "grt"] {
        assert!(run(section, &cfg).unwrap().all_pass(), "{section}");
    }
}

#[test]
fn reports_are_sorted_and_deterministic() {
    let cfg = Config { degree: 3, mu: q(1), seed: 11 };
    let strip = |s: String| s.lines().filter(|l| !l.contains("runtime") && !l.contains("run time")).map(str::to_owned).collect::<Vec<_>>();
    let a = run("cat", &cfg).unwrap();
    let b = run("cat", &cfg).unwrap();
    assert_eq!(strip(a.to_text()), strip(b.to_text()));
    let keys: Vec<_> = a.lines.iter().map(|l| (l.anchor.clone(), l.name.clone())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(a.to_text().starts_with("seed=11 N=3 mu=1"));
}

#[test]
fn section_names() {
    for s in SECTIONS {
        assert!(run(s, &Config { degree: 2, ..Config::default() }).unwrap().lines.iter().all(|l| l.anchor == s));
    }
    assert!(run("nope", &Config::default()).is_err());
    assert!(Config { degree: 0, ..Config::default() }.validate().is_err());
}
