//! Seeded property checks for the Cu axioms and for Cu-morphisms.
//!
//! Every check draws its cases from a [`CaseRng`] seeded from the report
//! seed and the check's position, so a report can be replayed exactly.
//! Suprema are validated against the order-theoretic characterisation
//! rather than against the closed forms they are meant to confirm: `u` is
//! the supremum of an increasing sequence iff it bounds every term and
//! each canonical approximant of `u` is dominated by some term.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};

use crate::error::Result;
use crate::ext_nat::ExtNat;
use crate::semigroup::{AtomSearch, CaseRng, Chain, CuMorphism, CuSemigroup, Elem};

/// Term indices probed when searching an increasing sequence:
/// `0..=8` followed by `16, 32, …, 2⁴⁰`.
fn probe_indices() -> impl Iterator<Item = u64> {
    (0..=8u64).chain((4..=40).map(|e| 1u64 << e))
}

/// Approximants of a candidate supremum that must be reached by the
/// sequence: `0..=8` followed by `16, …, 2¹⁶`. The gap to the term probes
/// leaves room for sequences that grow slowly.
fn approximant_indices() -> impl Iterator<Item = u64> {
    (0..=8u64).chain((4..=16).map(|e| 1u64 << e))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomConfig {
    pub seed: u64,
    pub cases: usize,
}

impl AxiomConfig {
    pub fn new(seed: u64, cases: usize) -> Self {
        AxiomConfig { seed, cases }
    }
}

impl Default for AxiomConfig {
    fn default() -> Self {
        AxiomConfig { seed: 42, cases: 1000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomRecord {
    pub name: String,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl AxiomRecord {
    pub fn line(&self) -> String {
        match (&self.counterexample, self.passed) {
            (_, true) => format!("AXIOM {} PASS", self.name),
            (Some(c), false) => format!("AXIOM {} FAIL {}", self.name, c),
            (None, false) => format!("AXIOM {} FAIL", self.name),
        }
    }
}

/// A line-oriented verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub subject: String,
    pub seed: u64,
    pub cases: usize,
    pub records: Vec<AxiomRecord>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    pub fn record(&self, name: &str) -> Option<&AxiomRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomRecord> {
        self.records.iter().filter(|r| !r.passed)
    }

    pub fn to_structured(&self) -> String {
        let mut out = String::new();
        writeln!(out, "SUBJECT {}", self.subject).unwrap();
        writeln!(out, "SEED {}", self.seed).unwrap();
        writeln!(out, "CASES {}", self.cases).unwrap();
        for r in &self.records {
            writeln!(out, "{}", r.line()).unwrap();
        }
        writeln!(out, "RESULT {}", if self.passed() { "PASS" } else { "FAIL" }).unwrap();
        out
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} (seed {}, {} cases)", self.subject, self.seed, self.cases).unwrap();
        for r in &self.records {
            let status = if r.passed { "pass" } else { "FAIL" };
            write!(out, "  {:<24} {}", r.name, status).unwrap();
            if let Some(c) = &r.counterexample {
                write!(out, "  [{c}]").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Runs named checks, each over `cases` seeded cases, stopping a check at
/// its first counterexample.
pub struct CaseRunner {
    subject: String,
    config: AxiomConfig,
    records: Vec<AxiomRecord>,
}

impl CaseRunner {
    pub fn new(subject: impl Into<String>, config: AxiomConfig) -> Self {
        CaseRunner {
            subject: subject.into(),
            config,
            records: Vec::new(),
        }
    }

    /// `case` returns `Ok(None)` on success and `Ok(Some(description))` for
    /// a counterexample; errors are counterexamples too.
    pub fn run<F>(&mut self, name: &str, mut case: F)
    where
        F: FnMut(&mut CaseRng) -> Result<Option<String>>,
    {
        let index = self.records.len() as u64;
        let mut rng = CaseRng::seed_from_u64(
            self.config.seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15),
        );
        let mut counterexample = None;
        for i in 0..self.config.cases {
            match case(&mut rng) {
                Ok(None) => {}
                Ok(Some(c)) => {
                    counterexample = Some(format!("case={i} {c}"));
                    break;
                }
                Err(e) => {
                    counterexample = Some(format!("case={i} error: {e}"));
                    break;
                }
            }
        }
        self.records.push(AxiomRecord {
            name: name.to_string(),
            passed: counterexample.is_none(),
            counterexample,
        });
    }

    /// Records a single deterministic check.
    pub fn record(&mut self, name: &str, outcome: Result<Option<String>>) {
        let counterexample = match outcome {
            Ok(c) => c,
            Err(e) => Some(format!("error: {e}")),
        };
        self.records.push(AxiomRecord {
            name: name.to_string(),
            passed: counterexample.is_none(),
            counterexample,
        });
    }

    pub fn config(&self) -> AxiomConfig {
        self.config
    }

    /// Appends the records of another report under a name prefix.
    pub fn absorb(&mut self, prefix: &str, report: AxiomReport) {
        for rec in report.records {
            self.records.push(AxiomRecord {
                name: format!("{prefix}{}", rec.name),
                ..rec
            });
        }
    }

    pub fn finish(self) -> AxiomReport {
        AxiomReport {
            subject: self.subject,
            seed: self.config.seed,
            cases: self.config.cases,
            records: self.records,
        }
    }
}

/// Searches the probe indices for a term of `term` dominating `w`.
pub fn eventually_dominates<S, F>(s: &S, w: &S::Elem, mut term: F) -> Result<Option<u64>>
where
    S: CuSemigroup,
    F: FnMut(u64) -> Result<S::Elem>,
{
    for k in probe_indices() {
        if s.leq(w, &term(k)?)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Checks that `candidate` is the supremum of the increasing sequence
/// `term`; returns a description of the first failure.
pub fn lub_failure<S, F>(s: &S, candidate: &S::Elem, term: F) -> Result<Option<String>>
where
    S: CuSemigroup,
    F: Fn(u64) -> Result<S::Elem>,
{
    let mut cache: Vec<(u64, S::Elem)> = Vec::new();
    let mut at = |k: u64| -> Result<S::Elem> {
        if let Some((_, t)) = cache.iter().find(|(i, _)| *i == k) {
            return Ok(t.clone());
        }
        let t = term(k)?;
        cache.push((k, t.clone()));
        Ok(t)
    };
    for k in probe_indices() {
        let t = at(k)?;
        if !s.leq(&t, candidate)? {
            return Ok(Some(format!(
                "term {k} = {} exceeds {}",
                s.format(&t),
                s.format(candidate)
            )));
        }
    }
    // Approximants increase with j, so the first dominating probe only
    // moves forward.
    let probes: Vec<u64> = probe_indices().collect();
    let mut from = 0;
    for j in approximant_indices() {
        let w = s.approximant(candidate, j);
        let mut found = false;
        while from < probes.len() {
            if s.leq(&w, &at(probes[from])?)? {
                found = true;
                break;
            }
            from += 1;
        }
        if !found {
            return Ok(Some(format!(
                "approximant {j} = {} of {} is never reached",
                s.format(&w),
                s.format(candidate)
            )));
        }
    }
    Ok(None)
}

/// Checks the supremum of a registered chain both ways: the closed form
/// must be the least upper bound of the terms.
pub fn chain_sup_failure<S: CuSemigroup>(s: &S, chain: &Chain<S::Elem>) -> Result<Option<String>> {
    let sup = s.sup_chain(chain)?;
    s.check(&sup)?;
    lub_failure(s, &sup, |k| s.chain_term(chain, k))
}

pub fn sample_leq_pair<S: CuSemigroup>(s: &S, rng: &mut CaseRng) -> Result<(S::Elem, S::Elem)> {
    let x = s.sample(rng);
    match rng.random_range(0..4) {
        0 => Ok((x.clone(), x)),
        1 => {
            let k = rng.random_range(0..6);
            Ok((s.approximant(&x, k), x))
        }
        _ => {
            let z = s.sample(rng);
            let y = s.add(&x, &z)?;
            Ok((x, y))
        }
    }
}

/// A pair `x ≪ y` when the draw allows it; random pairs are mixed in so
/// that the rule is also exercised away from approximants.
pub fn sample_wb_pair<S: CuSemigroup>(s: &S, rng: &mut CaseRng) -> Result<(S::Elem, S::Elem)> {
    let y = s.sample(rng);
    match rng.random_range(0..5) {
        0 => Ok((s.sample(rng), y)),
        1 => Ok((s.zero(), y)),
        2 => Ok((y.clone(), y)),
        _ => {
            let k = rng.random_range(0..6);
            let x = s.approximant(&y, k);
            if rng.random_bool(0.5) {
                let z = s.sample(rng);
                Ok((x, s.add(&y, &z)?))
            } else {
                Ok((x, y))
            }
        }
    }
}

pub fn sample_registered_chain<S: CuSemigroup>(s: &S, rng: &mut CaseRng) -> Result<Chain<S::Elem>> {
    Ok(match rng.random_range(0..4) {
        0 | 1 => Chain::Approximants(s.sample(rng)),
        2 => Chain::Multiples(s.sample(rng)),
        _ => {
            let mut xs = vec![s.sample(rng)];
            for _ in 0..rng.random_range(0..4) {
                let next = s.add(xs.last().unwrap(), &s.sample(rng))?;
                xs.push(next);
            }
            Chain::Finite(xs)
        }
    })
}

fn fmt2<S: CuSemigroup>(s: &S, x: &S::Elem, y: &S::Elem) -> String {
    format!("x={} y={}", s.format(x), s.format(y))
}

fn fail_if(cond: bool, msg: impl FnOnce() -> String) -> Result<Option<String>> {
    Ok(if cond { Some(msg()) } else { None })
}

/// Runs the order, addition, ≪ and O1–O4 checks on `s`.
pub fn check_axioms<S: CuSemigroup>(s: &S, config: AxiomConfig) -> AxiomReport {
    let mut r = CaseRunner::new(s.name(), config);
    run_axioms(s, &mut r);
    r.finish()
}

/// Adds the axiom checks for `s` to an existing runner.
pub fn run_axioms<S: CuSemigroup>(s: &S, r: &mut CaseRunner) {
    r.run("SAMPLE-CANONICAL", |rng| {
        let x = s.sample(rng);
        s.check(&x)?;
        let round = s.parse(&s.format(&x))?;
        fail_if(round != x, || format!("x={} reparses as {}", s.format(&x), s.format(&round)))
    });
    r.run("ORDER-REFLEXIVE", |rng| {
        let x = s.sample(rng);
        fail_if(!s.leq(&x, &x)?, || format!("x={}", s.format(&x)))
    });
    r.run("ORDER-TRANSITIVE", |rng| {
        let (x, y) = sample_leq_pair(s, rng)?;
        let z = if rng.random_bool(0.5) { s.add(&y, &s.sample(rng))? } else { s.sample(rng) };
        if s.leq(&x, &y)? && s.leq(&y, &z)? && !s.leq(&x, &z)? {
            return Ok(Some(format!("{} z={}", fmt2(s, &x, &y), s.format(&z))));
        }
        Ok(None)
    });
    r.run("ORDER-ANTISYMMETRIC", |rng| {
        let x = s.sample(rng);
        let y = match rng.random_range(0..3) {
            0 => s.add(&x, &s.zero())?,
            1 => s.sup_chain(&Chain::Approximants(x.clone()))?,
            _ => s.sample(rng),
        };
        fail_if(s.leq(&x, &y)? && s.leq(&y, &x)? && x != y, || fmt2(s, &x, &y))
    });
    r.run("ADD-COMMUTATIVE", |rng| {
        let (x, y) = (s.sample(rng), s.sample(rng));
        fail_if(s.add(&x, &y)? != s.add(&y, &x)?, || fmt2(s, &x, &y))
    });
    r.run("ADD-ASSOCIATIVE", |rng| {
        let (x, y, z) = (s.sample(rng), s.sample(rng), s.sample(rng));
        let left = s.add(&s.add(&x, &y)?, &z)?;
        let right = s.add(&x, &s.add(&y, &z)?)?;
        fail_if(left != right, || format!("{} z={}", fmt2(s, &x, &y), s.format(&z)))
    });
    r.run("ADD-ZERO", |rng| {
        let x = s.sample(rng);
        fail_if(s.add(&x, &s.zero())? != x || !s.leq(&s.zero(), &x)?, || {
            format!("x={}", s.format(&x))
        })
    });
    r.run("ADD-MONOTONE", |rng| {
        let (x, x2) = sample_leq_pair(s, rng)?;
        let (y, y2) = sample_leq_pair(s, rng)?;
        let ok = s.leq(&s.add(&x, &y)?, &s.add(&x2, &y2)?)?;
        fail_if(!ok, || format!("x={} x'={} y={} y'={}", s.format(&x), s.format(&x2), s.format(&y), s.format(&y2)))
    });
    r.run("NAT-SCALE", |rng| {
        let x = s.sample(rng);
        let n = rng.random_range(0..5u64);
        let mut acc = s.zero();
        for _ in 0..n {
            acc = s.add(&acc, &x)?;
        }
        let scaled = s.nat_scale(ExtNat::Fin(n), &x);
        if scaled != acc {
            return Ok(Some(format!("n={n} x={}", s.format(&x))));
        }
        chain_sup_failure(s, &Chain::Multiples(x.clone()))
            .map(|f| f.map(|m| format!("x={} {m}", s.format(&x))))
    });
    r.run("WB-IMPLIES-LEQ", |rng| {
        let (x, y) = sample_wb_pair(s, rng)?;
        fail_if(s.way_below(&x, &y)? && !s.leq(&x, &y)?, || fmt2(s, &x, &y))
    });
    r.run("WB-SANDWICH", |rng| {
        let (x, y) = sample_wb_pair(s, rng)?;
        if !s.way_below(&x, &y)? {
            return Ok(None);
        }
        let w = match rng.random_range(0..3) {
            0 => s.zero(),
            1 => s.approximant(&x, rng.random_range(0..4)),
            _ => x.clone(),
        };
        let z = s.add(&y, &s.sample(rng))?;
        fail_if(!s.way_below(&w, &z)?, || {
            format!("w={} {} z={}", s.format(&w), fmt2(s, &x, &y), s.format(&z))
        })
    });
    r.run("WB-ZERO", |rng| {
        let x = s.sample(rng);
        fail_if(!s.way_below(&s.zero(), &x)?, || format!("x={}", s.format(&x)))
    });
    r.run("WB-CHAIN", |rng| {
        let (x, y) = sample_wb_pair(s, rng)?;
        if !s.way_below(&x, &y)? {
            return Ok(None);
        }
        let reached = eventually_dominates(s, &x, |k| Ok(s.approximant(&y, k)))?;
        fail_if(reached.is_none(), || fmt2(s, &x, &y))
    });
    r.run("O1", |rng| {
        let chain = sample_registered_chain(s, rng)?;
        if let Chain::Finite(xs) = &chain {
            let sup = s.sup_chain(&chain)?;
            for x in xs {
                if !s.leq(x, &sup)? {
                    return Ok(Some(format!("finite chain sup {} below {}", s.format(&sup), s.format(x))));
                }
            }
        }
        chain_sup_failure(s, &chain).map(|f| f.map(|m| format!("{} chain: {m}", chain.family_name())))
    });
    r.run("O2", |rng| {
        let x = s.sample(rng);
        let k = rng.random_range(0..8);
        let (a, b) = (s.approximant(&x, k), s.approximant(&x, k + 1));
        if !s.way_below(&a, &b)? {
            return Ok(Some(format!("x={} k={k}: a_k={} not << a_k+1={}", s.format(&x), s.format(&a), s.format(&b))));
        }
        if !s.leq(&a, &x)? {
            return Ok(Some(format!("x={} k={k}: a_k={} not <= x", s.format(&x), s.format(&a))));
        }
        if s.sup_chain(&Chain::Approximants(x.clone()))? != x {
            return Ok(Some(format!("x={}: sup of approximants differs", s.format(&x))));
        }
        chain_sup_failure(s, &Chain::Approximants(x.clone())).map(|f| f.map(|m| format!("x={} {m}", s.format(&x))))
    });
    r.run("O3", |rng| {
        let a = sample_registered_chain(s, rng)?;
        let b = sample_registered_chain(s, rng)?;
        let expected = s.add(&s.sup_chain(&a)?, &s.sup_chain(&b)?)?;
        let sum = Chain::sum(a.clone(), b.clone());
        let got = s.sup_chain(&sum)?;
        if got != expected {
            return Ok(Some(format!("sup(s+t)={} but sup s + sup t={}", s.format(&got), s.format(&expected))));
        }
        lub_failure(s, &expected, |k| s.chain_term(&sum, k)).map(|f| {
            f.map(|m| format!("{}+{} chains: {m}", a.family_name(), b.family_name()))
        })
    });
    r.run("O4", |rng| {
        let (x1, y1) = sample_wb_pair(s, rng)?;
        let (x2, y2) = sample_wb_pair(s, rng)?;
        if !(s.way_below(&x1, &y1)? && s.way_below(&x2, &y2)?) {
            return Ok(None);
        }
        fail_if(!s.way_below(&s.add(&x1, &x2)?, &s.add(&y1, &y2)?)?, || {
            format!("x1={} y1={} x2={} y2={}", s.format(&x1), s.format(&y1), s.format(&x2), s.format(&y2))
        })
    });
}

/// Checks additivity, zero, order, M1 on registered chains and M2 on
/// sampled ≪ pairs.
pub fn check_morphism<M: CuMorphism>(m: &M, config: AxiomConfig) -> AxiomReport {
    let mut r = CaseRunner::new(m.name(), config);
    run_morphism_checks(m, &mut r, "");
    r.finish()
}

pub fn run_morphism_checks<M: CuMorphism>(m: &M, r: &mut CaseRunner, prefix: &str) {
    let (s, t) = (m.source(), m.target());
    let name = |n: &str| format!("{prefix}{n}");
    r.run(&name("MOR-ZERO"), |_| {
        let z = m.apply(&s.zero())?;
        fail_if(z != t.zero(), || format!("image of zero is {}", t.format(&z)))
    });
    r.run(&name("MOR-ADD"), |rng| {
        let (x, y) = (s.sample(rng), s.sample(rng));
        let lhs = m.apply(&s.add(&x, &y)?)?;
        let rhs = t.add(&m.apply(&x)?, &m.apply(&y)?)?;
        t.check(&lhs)?;
        fail_if(lhs != rhs, || fmt2(s, &x, &y))
    });
    r.run(&name("MOR-ORDER"), |rng| {
        let (x, y) = sample_leq_pair(s, rng)?;
        if !s.leq(&x, &y)? {
            return Ok(None);
        }
        fail_if(!t.leq(&m.apply(&x)?, &m.apply(&y)?)?, || fmt2(s, &x, &y))
    });
    r.run(&name("M1"), |rng| {
        let chain = sample_registered_chain(s, rng)?;
        let image_sup = m.apply(&s.sup_chain(&chain)?)?;
        lub_failure(t, &image_sup, |k| m.apply(&s.chain_term(&chain, k)?))
            .map(|f| f.map(|msg| format!("{} chain: {msg}", chain.family_name())))
    });
    r.run(&name("M2"), |rng| {
        let (x, y) = sample_wb_pair(s, rng)?;
        if !s.way_below(&x, &y)? {
            return Ok(None);
        }
        fail_if(!t.way_below(&m.apply(&x)?, &m.apply(&y)?)?, || fmt2(s, &x, &y))
    });
}

/// Debug mutation: replaces `≪` by `≤`. Every law that only involves the
/// order still holds; the chain characterisation of `≪` does not.
#[derive(Debug, Clone)]
pub struct WayBelowAsOrder<S>(pub S);

impl<S: CuSemigroup> CuSemigroup for WayBelowAsOrder<S> {
    type Elem = Elem<S>;

    fn name(&self) -> String {
        format!("{}[wb=leq]", self.0.name())
    }
    fn zero(&self) -> Self::Elem {
        self.0.zero()
    }
    fn check(&self, x: &Self::Elem) -> Result<()> {
        self.0.check(x)
    }
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem> {
        self.0.add(x, y)
    }
    fn leq(&self, x: &Self::Elem, y: &Self::Elem) -> Result<bool> {
        self.0.leq(x, y)
    }
    fn way_below(&self, x: &Self::Elem, y: &Self::Elem) -> Result<bool> {
        self.0.leq(x, y)
    }
    fn approximant(&self, x: &Self::Elem, k: u64) -> Self::Elem {
        self.0.approximant(x, k)
    }
    fn nat_scale(&self, n: ExtNat, x: &Self::Elem) -> Self::Elem {
        self.0.nat_scale(n, x)
    }
    fn sample(&self, rng: &mut CaseRng) -> Self::Elem {
        self.0.sample(rng)
    }
    fn parse(&self, literal: &str) -> Result<Self::Elem> {
        self.0.parse(literal)
    }
    fn format(&self, x: &Self::Elem) -> String {
        self.0.format(x)
    }
    fn atoms(&self) -> AtomSearch<Self::Elem> {
        self.0.atoms()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext_nat::{ExtNat, ExtNats};
    use crate::ext_rat::ExtRats;
    use crate::semigroup::MapMorphism;

    #[test]
    fn ext_nat_passes() {
        let report = check_axioms(&ExtNats, AxiomConfig::new(42, 1000));
        assert!(report.passed(), "{}", report.to_structured());
    }

    #[test]
    fn ext_rat_passes() {
        let report = check_axioms(&ExtRats, AxiomConfig::new(42, 1000));
        assert!(report.passed(), "{}", report.to_structured());
    }

    #[test]
    fn mutation_is_caught_by_chain_probe_only() {
        let report = check_axioms(&WayBelowAsOrder(ExtNats), AxiomConfig::new(42, 1000));
        assert!(report.record("O4").unwrap().passed);
        assert!(report.record("O2").unwrap().passed);
        let probe = report.record("WB-CHAIN").unwrap();
        assert!(!probe.passed);
        assert!(probe.counterexample.as_deref().unwrap().contains("nat:inf"));
    }

    #[test]
    fn lub_oracle_rejects_wrong_candidates() {
        let s = ExtNats;
        assert!(lub_failure(&s, &ExtNat::Inf, |k| Ok(ExtNat::Fin(k))).unwrap().is_none());
        assert!(lub_failure(&s, &ExtNat::Fin(3), |k| Ok(ExtNat::Fin(k))).unwrap().is_some());
        assert!(lub_failure(&s, &ExtNat::Inf, |_| Ok(ExtNat::Fin(3))).unwrap().is_some());
    }

    #[test]
    fn doubling_is_a_morphism_but_truncation_is_not() {
        let double = MapMorphism::new("double", ExtNats, ExtNats, |x: &ExtNat| Ok(ExtNat::Fin(2) * *x));
        assert!(check_morphism(&double, AxiomConfig::new(3, 300)).passed());
        let cap = MapMorphism::new("cap", ExtNats, ExtNats, |x: &ExtNat| Ok(x.truncate(5)));
        let report = check_morphism(&cap, AxiomConfig::new(3, 300));
        assert!(!report.record("MOR-ADD").unwrap().passed);
    }

    #[test]
    fn reports_are_replayable() {
        let a = check_axioms(&ExtRats, AxiomConfig::new(9, 200)).to_structured();
        let b = check_axioms(&ExtRats, AxiomConfig::new(9, 200)).to_structured();
        assert_eq!(a, b);
        assert!(a.starts_with("SUBJECT rat\nSEED 9\nCASES 200\n"));
    }
}
