use cuntz::axioms::{check_axioms, AxiomConfig};
use cuntz::concrete::{FnSemigroup, StepLsc, UhfCu};
use cuntz::{CuSemigroup, ExtNats, ExtRats};

fn assert_suite<S: CuSemigroup>(s: &S, cases: usize) {
    let report = check_axioms(s, AxiomConfig::new(42, cases));
    assert!(report.passed(), "{}", report.to_structured());
}

#[test]
fn uhf_semigroups() {
    assert_suite(&UhfCu::new(2).unwrap(), 1000);
    assert_suite(&UhfCu::new(3).unwrap(), 1000);
}

#[test]
fn step_functions_over_nat() {
    assert_suite(&StepLsc::new(ExtNats), 1000);
}

#[test]
fn step_functions_over_uhf() {
    assert_suite(&StepLsc::new(UhfCu::new(2).unwrap()), 1000);
}

#[test]
fn step_functions_over_rat() {
    assert_suite(&StepLsc::new(ExtRats), 300);
}

#[test]
fn function_semigroups() {
    assert_suite(&FnSemigroup::over_group(ExtNats, &[2]).unwrap(), 1000);
    assert_suite(&FnSemigroup::over_group(ExtNats, &[3]).unwrap(), 1000);
    assert_suite(&FnSemigroup::over_group(UhfCu::new(2).unwrap(), &[2]).unwrap(), 500);
}
