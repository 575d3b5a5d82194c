use std::time::Instant;

use cuntz::axioms::AxiomConfig;
use cuntz::gallery::lookup;

fn verify(name: &str, cases: usize) {
    let t = Instant::now();
    let entry = lookup(name).unwrap();
    let report = entry.verify(AxiomConfig::new(11, cases));
    eprintln!("{name}: {:?}", t.elapsed());
    assert!(report.passed(), "{}", report.to_human());
}

#[test]
fn trivial_entries() {
    for name in ["uhf:2", "uhf:3", "w", "uhf-circle:2", "uhf-circle:3", "w-circle:2", "w-circle:3"] {
        verify(name, 300);
    }
}

#[test]
fn pullback_entries() {
    for name in ["pullback-uhf:2", "pullback-uhf:3", "pullback-w:2", "pullback-w:3"] {
        verify(name, 300);
    }
}

#[test]
fn nonstable() {
    verify("nonstable", 300);
}
