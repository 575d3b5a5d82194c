//! Worked equivariant Cuntz semigroups: each entry builds a semimodule from
//! the constructions and checks the stated formulas before running the
//! axiom and semimodule suites.

use std::sync::Arc;

use num::Zero;
use rand::{Rng, SeedableRng};

use crate::axioms::{check_axioms, lub_failure, run_axioms, run_morphism_checks, AxiomConfig, AxiomReport, CaseRunner};
use crate::concrete::step::frac;
use crate::concrete::{count_atoms, AtomCount, FnElem, FnSemigroup, StepFn, StepLsc, UhfCu, UhfElem};
use crate::constructions::{
    fixed_point_nc, make_pullback, make_semimodule, run_semimodule_checks, triviality_failure, verify_automorphisms,
    CuGModule, Dual, FixedPoint, GroupAction, IndexTranslation, LiftingMorphism, OnSecondLeg, PbElem, ProjectA,
    ProjectB, Pullback, Rotation, Semimodule, Trivial,
};
use crate::error::{CuError, Result};
use crate::ext_nat::{ExtNat, ExtNats};
use crate::ext_rat::{ExtRat, ExtRats};
use crate::literal::{int, rat, Rational};
use crate::registry::{erase, DynSemigroup};
use crate::rep::{load_group, regular_rep, CuGElem, FiniteGroup};
use crate::semigroup::{CaseRng, CuMorphism, CuSemigroup, MapMorphism};

/// A gallery entry: a named semimodule with its formula checks.
pub trait GalleryEntry: Send + Sync {
    fn name(&self) -> String;

    /// The carrier as a literal-level semigroup.
    fn carrier(&self) -> Box<dyn DynSemigroup>;

    /// `KEY value` facts about the construction, reported before the checks.
    fn facts(&self) -> Vec<(String, String)>;

    /// The stated formulas.
    fn run_checks(&self, r: &mut CaseRunner);

    /// The carrier axioms and, when there is a semimodule, its suite.
    fn run_suites(&self, r: &mut CaseRunner);

    fn verify(&self, config: AxiomConfig) -> AxiomReport {
        let mut r = CaseRunner::new(format!("example:{}", self.name()), config);
        self.run_checks(&mut r);
        self.run_suites(&mut r);
        r.finish()
    }

    fn axioms(&self, config: AxiomConfig) -> AxiomReport {
        let mut r = CaseRunner::new(format!("example:{}", self.name()), config);
        self.run_suites(&mut r);
        r.finish()
    }
}

/// Entry names accepted by [`lookup`].
pub const ENTRY_NAMES: [&str; 7] = ["uhf:<m>", "uhf-circle:<n>", "w", "w-circle:<n>", "pullback-uhf:<n>", "pullback-w:<n>", "nonstable"];

/// Sampled elements for the triviality check.
const TRIVIALITY_SAMPLES: usize = 100;

fn parse_order(arg: Option<&str>, what: &str) -> Result<u64> {
    let arg = arg.ok_or_else(|| CuError::parse(format!("`{what}` needs an integer argument")))?;
    let n: u64 = arg.parse().map_err(|_| CuError::parse(format!("bad integer `{arg}` in `{what}`")))?;
    if n < 2 {
        return Err(CuError::InvalidElement(format!("`{what}` needs an order of at least 2")));
    }
    Ok(n)
}

pub fn lookup(name: &str) -> Result<Box<dyn GalleryEntry>> {
    let (head, arg) = match name.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (name, None),
    };
    let no_arg = |entry: Box<dyn GalleryEntry>| match arg {
        None => Ok(entry),
        Some(_) => Err(CuError::parse(format!("`{head}` takes no argument"))),
    };
    match head {
        "uhf" => Ok(Box::new(example_uhf(&load_group(&format!("cyclic:{}", parse_order(arg, head)?), None)?)?)),
        "uhf-circle" => {
            let n = parse_order(arg, head)?;
            Ok(Box::new(example_circle(format!("uhf-circle:{n}"), UhfCu::new(n)?, n)?))
        }
        "w" => no_arg(Box::new(example_w()?)),
        "w-circle" => {
            let n = parse_order(arg, head)?;
            Ok(Box::new(example_circle(format!("w-circle:{n}"), ExtRats, n)?))
        }
        "pullback-uhf" => Ok(Box::new(example_pullback_uhf(parse_order(arg, head)?)?)),
        "pullback-w" => Ok(Box::new(example_pullback_w(parse_order(arg, head)?)?)),
        "nonstable" => no_arg(Box::new(NonStable)),
        _ => Err(CuError::parse(format!("unknown example `{name}`; expected one of {}", ENTRY_NAMES.join(", ")))),
    }
}

fn triviality_bound(group: &FiniteGroup) -> u64 {
    if 3u64.checked_pow(group.irrep_count() as u32).is_some_and(|c| c <= 4096) {
        2
    } else {
        1
    }
}

fn record_triviality<M: Semimodule>(m: &M, r: &mut CaseRunner, seed: u64) {
    let mut rng = CaseRng::seed_from_u64(seed);
    let samples: Vec<_> = (0..TRIVIALITY_SAMPLES).map(|_| m.carrier().sample(&mut rng)).collect();
    r.record("TRIVIAL-ACTION", triviality_failure(m, triviality_bound(m.ring().group()), &samples));
}

/// A carrier with the trivial `Cu(G)` action.
pub struct TrivialEntry<S> {
    name: String,
    module: CuGModule<S, Trivial>,
    extra: fn(&CuGModule<S, Trivial>, &mut CaseRunner),
    facts: Vec<(String, String)>,
}

impl<S> TrivialEntry<S> {
    pub fn module(&self) -> &CuGModule<S, Trivial> {
        &self.module
    }
}

impl<S> GalleryEntry for TrivialEntry<S>
where
    S: CuSemigroup + Clone + Send + Sync + 'static,
{
    fn name(&self) -> String {
        self.name.clone()
    }
    fn carrier(&self) -> Box<dyn DynSemigroup> {
        erase(self.module.carrier().clone())
    }
    fn facts(&self) -> Vec<(String, String)> {
        let mut facts = vec![
            ("CARRIER".to_string(), self.module.carrier().name()),
            ("GROUP".to_string(), self.module.ring().group().name().to_string()),
            ("ACTION".to_string(), "trivial".to_string()),
        ];
        facts.extend(self.facts.iter().cloned());
        facts
    }
    fn run_checks(&self, r: &mut CaseRunner) {
        (self.extra)(&self.module, r);
        record_triviality(&self.module, r, 0);
    }
    fn run_suites(&self, r: &mut CaseRunner) {
        run_axioms(self.module.carrier(), r);
        run_semimodule_checks(&self.module, r);
    }
}

fn uhf_checks(m: &CuGModule<UhfCu, Trivial>, r: &mut CaseRunner) {
    let g = m.ring().group();
    let n = m.carrier().n() as i64;
    let unit = UhfElem::compact(1, n);
    let per_irrep = (0..g.irrep_count()).try_fold(None, |found, pi| {
        if found.is_some() {
            return Ok(found);
        }
        let got = m.act(&CuGElem::irrep(g, pi), &unit)?;
        let want = UhfElem::compact(g.dims()[pi] as i64, n);
        Ok::<_, CuError>((got != want).then(|| format!("irrep {pi} sends compact:1/{n} to {got}, expected {want}")))
    });
    r.record("IRREP-ACTS-BY-DIMENSION", per_irrep);
    let regular = m.act(&regular_rep(g), &unit).map(|got| {
        (got != UhfElem::compact(1, 1)).then(|| format!("regular rep sends compact:1/{n} to {got}"))
    });
    r.record("REGULAR-REP-FILLS-UNIT", regular);
}

/// `Cu^G(M_{m^∞}, μ^G) ≅ Z≥0[1/m] ⊔ (0, ∞]` with trivial action, `m = |G|`.
pub fn example_uhf(group: &Arc<FiniteGroup>) -> Result<TrivialEntry<UhfCu>> {
    let m = group.order() as u64;
    if m < 2 {
        return Err(CuError::InvalidGroup("the UHF example needs a nontrivial group".into()));
    }
    let name = if group.name() == format!("cyclic:{m}") {
        format!("uhf:{m}")
    } else {
        format!("uhf:{m}[{}]", group.name())
    };
    Ok(TrivialEntry {
        name,
        module: make_semimodule(UhfCu::new(m)?, group, Trivial)?,
        extra: uhf_checks,
        facts: Vec::new(),
    })
}

fn w_checks(m: &CuGModule<ExtRats, Trivial>, r: &mut CaseRunner) {
    let s = m.carrier();
    let one = ExtRat::integer(1);
    r.record(
        "SUP-ONE-MINUS-RECIPROCALS",
        lub_failure(s, &one, |k| ExtRat::new(int(1) - rat(1, k.min(i64::MAX as u64 - 2) as i64 + 2))),
    );
    let half = ExtRat::ratio(1, 2);
    r.record(
        "NO-NONZERO-COMPACTS",
        s.way_below(&half, &half).map(|wb| wb.then(|| "1/2 is way below itself".to_string())),
    );
}

/// `Cu^G(W, μ) ≅ [0, ∞]` with trivial action, here for `G = Z₂`.
pub fn example_w() -> Result<TrivialEntry<ExtRats>> {
    let g = load_group("cyclic:2", None)?;
    Ok(TrivialEntry {
        name: "w".into(),
        module: make_semimodule(ExtRats, &g, Trivial)?,
        extra: w_checks,
        facts: Vec::new(),
    })
}

pub type CircleInvariant<B> = FixedPoint<StepLsc<B>, Rotation>;

/// Invariance under rotation by `1/n`, decided by evaluating at every
/// breakpoint, every shifted breakpoint and the midpoints between them.
pub fn rotation_invariant_by_evaluation<B: CuSemigroup>(steps: &StepLsc<B>, f: &StepFn<B::Elem>, n: u64) -> bool {
    let shift = rat(1, n as i64);
    let mut pts: Vec<_> = f
        .breaks()
        .iter()
        .flat_map(|b| (0..n).map(move |j| frac(&(b + rat(j as i64, n as i64)))))
        .collect();
    pts.push(Rational::zero());
    pts.sort();
    pts.dedup();
    let mut probes = pts.clone();
    for (i, p) in pts.iter().enumerate() {
        let next = pts.get(i + 1).cloned().unwrap_or_else(|| &pts[0] + int(1));
        probes.push(frac(&((p + next) / int(2))));
    }
    probes.iter().all(|x| steps.eval(f, x) == steps.eval(f, &frac(&(x + &shift))))
}

fn circle_checks<B>(m: &CuGModule<CircleInvariant<B>, Trivial>, r: &mut CaseRunner)
where
    B: CuSemigroup,
{
    let fp = m.carrier();
    let steps = fp.base();
    let n = fp.action().n;
    r.run("CONSTANTS-ARE-MEMBERS", |rng| {
        let f = steps.constant(steps.base().sample(rng));
        Ok((!fp.is_member(&f)?).then(|| format!("f={}", steps.format(&f))))
    });
    r.run("MEMBERSHIP-IS-ROTATION-INVARIANCE", |rng| {
        let f = if rng.random_bool(0.5) { steps.sample(rng) } else { steps.sample_periodic(rng, n, false) };
        let member = fp.is_member(&f)?;
        let invariant = rotation_invariant_by_evaluation(steps, &f, n);
        Ok((member != invariant).then(|| format!("f={} member={member} invariant={invariant}", steps.format(&f))))
    });
    r.run("INVARIANT-APPROXIMANTS", |rng| {
        let f = steps.sample_periodic(rng, n, false);
        for k in 0..crate::constructions::APPROXIMANT_DEPTH {
            let a = steps.approximant(&f, k);
            if !rotation_invariant_by_evaluation(steps, &a, n) {
                return Ok(Some(format!("f={} k={k}", steps.format(&f))));
            }
        }
        Ok(None)
    });
}

/// Rotation-invariant lower semicontinuous step functions `T → S` with the
/// trivial `Cu(Z_n)` action.
pub fn example_circle<B>(name: String, base: B, n: u64) -> Result<TrivialEntry<CircleInvariant<B>>>
where
    B: CuSemigroup + Clone,
{
    let carrier = fixed_point_nc(StepLsc::new(base), Rotation { n })?;
    let g = load_group(&format!("cyclic:{n}"), None)?;
    Ok(TrivialEntry {
        name,
        module: make_semimodule(carrier, &g, Trivial)?,
        extra: circle_checks::<B>,
        facts: Vec::new(),
    })
}

/// `f ↦ f(1)` on rotation-invariant step functions (the point `1 ∈ T` is
/// the origin of the parametrization).
#[derive(Clone)]
pub struct EvalAtOrigin<B> {
    source: CircleInvariant<B>,
}

impl<B: CuSemigroup> EvalAtOrigin<B> {
    fn orbit(&self) -> Vec<Rational> {
        let n = self.source.action().n;
        (0..n).map(|j| rat(j as i64, n as i64)).collect()
    }
}

impl<B: CuSemigroup> CuMorphism for EvalAtOrigin<B> {
    type Source = CircleInvariant<B>;
    type Target = B;

    fn source(&self) -> &Self::Source {
        &self.source
    }
    fn target(&self) -> &B {
        self.source.base().base()
    }
    fn apply(&self, f: &StepFn<B::Elem>) -> Result<B::Elem> {
        Ok(self.source.base().eval(f, &Rational::zero()))
    }
    fn name(&self) -> String {
        "eval1".into()
    }
}

impl<B: CuSemigroup> LiftingMorphism for EvalAtOrigin<B> {
    /// The step approximant with value `t` near each `n`-th root of unity.
    fn lift_approximant(&self, f: &StepFn<B::Elem>, t: &B::Elem, k: u64) -> StepFn<B::Elem> {
        self.source.base().pinned_approximant(f, &self.orbit(), Some(t), k)
    }

    /// The constant `t` plus an invariant function vanishing on the orbit.
    fn sample_fiber(&self, t: &B::Elem, rng: &mut CaseRng) -> StepFn<B::Elem> {
        let steps = self.source.base();
        let bump = steps.sample_periodic(rng, self.source.action().n, true);
        steps
            .add(&steps.constant(t.clone()), &bump)
            .unwrap_or_else(|_| steps.constant(t.clone()))
    }
}

pub type CirclePullback<B, X> = Pullback<EvalAtOrigin<B>, MapMorphism<FnSemigroup<X>, B>>;
pub type DualOnFiber = Dual<OnSecondLeg<IndexTranslation>>;

/// A pullback of rotation-invariant step functions and functions on `Ẑ_n`
/// over `S`, with `Ẑ_n` translating the second leg.
pub struct PullbackEntry<B: CuSemigroup, X: CuSemigroup> {
    name: String,
    n: u64,
    module: CuGModule<CirclePullback<B, X>, DualOnFiber>,
    /// Literals that must parse, and literals that must violate the constraint.
    valid: Vec<String>,
    invalid: Vec<String>,
    /// `(x, τ, τ·x)`.
    action_example: (String, usize, String),
    /// `Σ g(η)` computed without the morphism.
    direct_sum: fn(&[X::Elem]) -> B::Elem,
}

impl<B: CuSemigroup, X: CuSemigroup> PullbackEntry<B, X> {
    pub fn module(&self) -> &CuGModule<CirclePullback<B, X>, DualOnFiber> {
        &self.module
    }

    pub fn pullback(&self) -> &CirclePullback<B, X> {
        self.module.carrier()
    }

    fn translate_directly(&self, g: &[X::Elem], tau: usize) -> Vec<X::Elem> {
        let n = self.n as usize;
        (0..n).map(|eta| g[(tau + eta) % n].clone()).collect()
    }
}

fn pullback_of<B, X>(base: B, values: X, n: u64, sum: fn(&B, &FnElem<X::Elem>) -> Result<B::Elem>) -> Result<CirclePullback<B, X>>
where
    B: CuSemigroup + Clone + Send + Sync + 'static,
    X: CuSemigroup + Clone + Send + Sync + 'static,
{
    let circle = fixed_point_nc(StepLsc::new(base.clone()), Rotation { n })?;
    let fns = FnSemigroup::over_group(values, &[n])?;
    let target = base.clone();
    let sigma = MapMorphism::new("sum", fns, base, move |g: &FnElem<X::Elem>| sum(&target, g));
    make_pullback(EvalAtOrigin { source: circle }, sigma)
}

fn dual_module<B, X>(pb: CirclePullback<B, X>, n: u64) -> Result<CuGModule<CirclePullback<B, X>, DualOnFiber>>
where
    B: CuSemigroup + Clone + Send + Sync + 'static,
    X: CuSemigroup + Clone + Send + Sync + 'static,
{
    let group = load_group(&format!("cyclic:{n}"), None)?;
    make_semimodule(pb, &group, Dual(OnSecondLeg(IndexTranslation::new(&[n]))))
}

fn uhf_sum(target: &UhfCu, g: &FnElem<ExtNat>) -> Result<UhfElem> {
    Ok(target.embed(g.0.iter().copied().sum()))
}

fn uhf_direct_sum(g: &[ExtNat]) -> UhfElem {
    if g.contains(&ExtNat::Inf) {
        UhfElem::soft_inf()
    } else {
        UhfElem::compact(g.iter().map(|v| v.finite().unwrap_or(0) as i64).sum(), 1)
    }
}

fn rat_sum(target: &ExtRats, g: &FnElem<ExtRat>) -> Result<ExtRat> {
    target.sum_all(&g.0)
}

fn rat_direct_sum(g: &[ExtRat]) -> ExtRat {
    let mut total = Rational::zero();
    for v in g {
        match v.finite() {
            Some(q) => total += q,
            None => return ExtRat::Inf,
        }
    }
    ExtRat::Fin(total)
}

fn fn_literal(parts: &[&str]) -> String {
    format!("fn:{}", parts.join(","))
}

fn const_step(value: &str) -> String {
    format!("step{{b=; arcs={value}; pts=}}")
}

/// The pullback with `Lsc(T, Z≥0[1/n] ⊔ (0, ∞])` and `C(Ẑ_n, Z̄≥0)`
/// glued along `f(1) = Σ_η g(η)`.
pub fn example_pullback_uhf(n: u64) -> Result<PullbackEntry<UhfCu, ExtNats>> {
    let uhf = UhfCu::new(n)?;
    let pb = pullback_of(uhf, ExtNats, n, uhf_sum)?;
    let nats = |first: &str, rest: &str| {
        let mut v = vec![first.to_string()];
        v.extend((1..n).map(|_| rest.to_string()));
        v
    };
    let lit = |v: Vec<String>| fn_literal(&v.iter().map(String::as_str).collect::<Vec<_>>());
    let one = const_step(&format!("uhf{n}:compact:1/1"));
    let g10 = lit(nats("nat:1", "nat:0"));
    let mut g01 = nats("nat:0", "nat:0");
    g01[n as usize - 1] = "nat:1".into();
    let g01 = lit(g01);
    let valid = vec![
        format!("pb({one} | {g10})"),
        format!("pb({} | {})", const_step(&format!("uhf{n}:soft:inf")), lit(nats("nat:inf", "nat:inf"))),
        format!("pb({} | {})", const_step(&format!("uhf{n}:compact:0/1")), lit(nats("nat:0", "nat:0"))),
    ];
    let invalid = vec![
        format!("pb({one} | {})", lit(nats("nat:0", "nat:0"))),
        format!("pb({} | {g10})", const_step(&format!("uhf{n}:soft:1/1"))),
    ];
    Ok(PullbackEntry {
        name: format!("pullback-uhf:{n}"),
        n,
        module: dual_module(pb, n)?,
        valid,
        invalid,
        action_example: (format!("pb({one} | {g10})"), 1, format!("pb({one} | {g01})")),
        direct_sum: uhf_direct_sum,
    })
}

/// The same pullback with `[0, ∞]` on both legs.
pub fn example_pullback_w(n: u64) -> Result<PullbackEntry<ExtRats, ExtRats>> {
    let pb = pullback_of(ExtRats, ExtRats, n, rat_sum)?;
    let pad = |head: &[&str]| {
        let mut v: Vec<String> = head.iter().map(|s| s.to_string()).collect();
        v.resize(n as usize, "rat:0/1".into());
        fn_literal(&v.iter().map(String::as_str).collect::<Vec<_>>())
    };
    let three_halves = const_step("rat:3/2");
    let g = pad(&["rat:1/1", "rat:1/2"]);
    let mut swapped = vec!["rat:1/2".to_string(); 1];
    swapped.resize(n as usize, "rat:0/1".into());
    swapped[n as usize - 1] = "rat:1/1".into();
    let swapped = fn_literal(&swapped.iter().map(String::as_str).collect::<Vec<_>>());
    let valid = vec![
        format!("pb({three_halves} | {g})"),
        format!("pb({} | {})", const_step("rat:0/1"), pad(&[])),
        format!("pb({} | {})", const_step("rat:inf"), pad(&["rat:inf"])),
    ];
    let invalid = vec![format!("pb({three_halves} | {})", pad(&["rat:1/1"]))];
    Ok(PullbackEntry {
        name: format!("pullback-w:{n}"),
        n,
        module: dual_module(pb, n)?,
        valid,
        invalid,
        action_example: (format!("pb({three_halves} | {g})"), 1, format!("pb({three_halves} | {swapped})")),
        direct_sum: rat_direct_sum,
    })
}

impl<B, X> GalleryEntry for PullbackEntry<B, X>
where
    B: CuSemigroup + Clone + Send + Sync + 'static,
    X: CuSemigroup + Clone + Send + Sync + 'static,
{
    fn name(&self) -> String {
        self.name.clone()
    }

    fn carrier(&self) -> Box<dyn DynSemigroup> {
        erase(self.pullback().clone())
    }

    fn facts(&self) -> Vec<(String, String)> {
        vec![
            ("CARRIER".to_string(), self.pullback().name()),
            ("GROUP".to_string(), format!("cyclic:{}", self.n)),
            ("ACTION".to_string(), format!("dual, translation of the second leg by Z{}", self.n)),
        ]
    }

    fn run_checks(&self, r: &mut CaseRunner) {
        let pb = self.pullback();
        let steps = pb.left().base();
        let fns = pb.right();
        let m = &self.module;
        let fail_at = |what: &str, lit: &str| Some(format!("{what}: {lit}"));

        let examples = (|| {
            for lit in &self.valid {
                if let Err(e) = pb.parse(lit) {
                    return Ok(fail_at(&format!("rejected ({e})"), lit));
                }
            }
            for lit in &self.invalid {
                match pb.parse(lit) {
                    Err(CuError::ConstraintViolation(_)) => {}
                    Err(e) => return Ok(fail_at(&format!("wrong error ({e})"), lit)),
                    Ok(_) => return Ok(fail_at("accepted", lit)),
                }
            }
            Ok(None)
        })();
        r.record("CONSTRAINT-EXAMPLES", examples);

        r.run("CONSTRAINT-EXACT", |rng| {
            let x = pb.sample(rng);
            pb.check(&x)?;
            let f = pb.left().sample(rng);
            let g = if rng.random_bool(0.5) { fns.sample(rng) } else { x.b.clone() };
            let f = if rng.random_bool(0.5) { f } else { x.a.clone() };
            let holds = steps.eval(&f, &Rational::zero()) == (self.direct_sum)(&g.0);
            let accepted = pb.make(f.clone(), g.clone()).is_ok();
            Ok((holds != accepted).then(|| format!("f={} g={} holds={holds}", steps.format(&f), fns.format(&g))))
        });

        run_morphism_checks(pb.psi(), r, "SIGMA-");
        r.run("SIGMA-FORMULA", |rng| {
            let g = fns.sample(rng);
            let got = pb.psi().apply(&g)?;
            let want = (self.direct_sum)(&g.0);
            Ok((got != want).then(|| format!("g={}", fns.format(&g))))
        });
        run_morphism_checks(pb.phi(), r, "EVAL-");
        run_morphism_checks(&ProjectA(pb.clone()), r, "PROJECT-A-");
        run_morphism_checks(&ProjectB(pb.clone()), r, "PROJECT-B-");

        let (x, tau, want) = &self.action_example;
        let example = (|| {
            let got = m.act(&CuGElem::irrep(m.ring().group(), *tau), &pb.parse(x)?)?;
            let want = pb.parse(want)?;
            Ok((got != want).then(|| format!("tau={tau} x={x} gave {}", pb.format(&got))))
        })();
        r.record("ACTION-EXAMPLE", example);

        r.run("ACTION-FORMULA", |rng| {
            let x = pb.sample(rng);
            for tau in 0..self.n as usize {
                let got = m.act(&CuGElem::irrep(m.ring().group(), tau), &x)?;
                let want = PbElem {
                    a: x.a.clone(),
                    b: FnElem(self.translate_directly(&x.b.0, tau)),
                };
                if got != want {
                    return Ok(Some(format!("tau={tau} x={}", pb.format(&x))));
                }
            }
            Ok(None)
        });

        let action = OnSecondLeg(IndexTranslation::new(&[self.n]));
        let order = (|| {
            let mut rng = CaseRng::seed_from_u64(1);
            let zero = fns.base().zero();
            let Some(v) = (0..100).map(|_| fns.base().sample(&mut rng)).find(|v| *v != zero) else {
                return Ok(Some("no nonzero value sampled".into()));
            };
            let point = fns.point_mass(0, v);
            let x = pb.make(steps.constant(pb.psi().apply(&point)?), point)?;
            let mut y = x.clone();
            for j in 1..=self.n as usize {
                y = action.apply(pb, 1, &y)?;
                if (y == x) != (j == self.n as usize) {
                    return Ok(Some(format!("generator to the power {j} on {}", pb.format(&x))));
                }
            }
            Ok(None)
        })();
        r.record("ACTION-ORDER", order);

        let mut rng = CaseRng::seed_from_u64(3);
        let automorphism = verify_automorphisms(pb, &action, &mut rng, r.config().cases).map(|()| None);
        r.record("ACTION-AUTOMORPHISM", automorphism);
    }

    fn run_suites(&self, r: &mut CaseRunner) {
        run_axioms(self.pullback(), r);
        run_semimodule_checks(&self.module, r);
    }
}

/// `Cu^G(M_2, α) ≅ Z̄≥0` against `Cu(G) ⊗ Z̄≥0 ≅ Z̄≥0⁴`: the atom counts
/// differ, so the two are not isomorphic.
pub struct NonStable;

impl NonStable {
    pub fn semigroups(&self) -> Result<(ExtNats, FnSemigroup<ExtNats>)> {
        Ok((ExtNats, FnSemigroup::new(ExtNats, 4)?))
    }

    pub fn atom_counts(&self) -> Result<(AtomCount, AtomCount)> {
        let (a, b) = self.semigroups()?;
        Ok((count_atoms(&a)?, count_atoms(&b)?))
    }
}

impl GalleryEntry for NonStable {
    fn name(&self) -> String {
        "nonstable".into()
    }

    fn carrier(&self) -> Box<dyn DynSemigroup> {
        erase(ExtNats)
    }

    fn facts(&self) -> Vec<(String, String)> {
        let mut facts = vec![("LEFT".to_string(), "nat".to_string()), ("RIGHT".to_string(), "fn[nat;4]".to_string())];
        if let Ok((a, b)) = self.atom_counts() {
            facts.push(("ATOMS_LEFT".into(), a.to_string()));
            facts.push(("ATOMS_RIGHT".into(), b.to_string()));
            facts.push(("ISOMORPHIC".into(), if a == b { "undecided" } else { "no" }.into()));
        }
        facts
    }

    fn run_checks(&self, r: &mut CaseRunner) {
        let counts = self.atom_counts();
        r.record(
            "ATOMS-LEFT",
            counts.clone().map(|(a, _)| (a != AtomCount::Count(1)).then(|| format!("counted {a}"))),
        );
        r.record(
            "ATOMS-RIGHT",
            counts.clone().map(|(_, b)| (b != AtomCount::Count(4)).then(|| format!("counted {b}"))),
        );
        r.record(
            "NON-ISOMORPHIC",
            counts.map(|(a, b)| (a == b).then(|| "atom counts agree".to_string())),
        );
    }

    fn run_suites(&self, r: &mut CaseRunner) {
        match self.semigroups() {
            Ok((a, b)) => {
                r.absorb("LEFT-", check_axioms(&a, r.config()));
                r.absorb("RIGHT-", check_axioms(&b, r.config()));
            }
            Err(e) => r.record("SEMIGROUPS", Err(e)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uhf_over_z2() {
        let g = load_group("cyclic:2", None).unwrap();
        let entry = example_uhf(&g).unwrap();
        let m = entry.module();
        assert_eq!(m.carrier().name(), "uhf2");
        let half = UhfElem::compact(1, 2);
        assert_eq!(m.act(&CuGElem::irrep(&g, 1), &half).unwrap(), half);
        assert_eq!(m.act(&regular_rep(&g), &half).unwrap(), UhfElem::compact(1, 1));
        assert!(entry.verify(AxiomConfig::new(1, 50)).passed());
    }

    #[test]
    fn w_facts() {
        let entry = example_w().unwrap();
        let s = entry.module().carrier();
        let chain = |k: u64| ExtRat::new(int(1) - rat(1, k as i64 + 2));
        assert_eq!(lub_failure(s, &ExtRat::integer(1), &chain).unwrap(), None);
        assert!(lub_failure(s, &ExtRat::ratio(2, 1), &chain).unwrap().is_some());
        let half = ExtRat::ratio(1, 2);
        assert!(!s.way_below(&half, &half).unwrap());
    }

    #[test]
    fn circle_membership() {
        let entry = example_circle("uhf-circle:2".into(), UhfCu::new(2).unwrap(), 2).unwrap();
        let fp = entry.module().carrier();
        let steps = fp.base();
        let (a, b) = (UhfElem::compact(1, 2), UhfElem::compact(1, 1));
        assert!(fp.is_member(&steps.constant(b.clone())).unwrap());
        let two_arc = steps
            .make(vec![rat(0, 1), rat(1, 2)], vec![a.clone(), b.clone()], vec![a.clone(), a.clone()])
            .unwrap();
        assert!(!fp.is_member(&two_arc).unwrap());
        let four_arc = steps
            .make(
                vec![rat(0, 1), rat(1, 4), rat(1, 2), rat(3, 4)],
                vec![a.clone(), b.clone(), a.clone(), b.clone()],
                vec![a.clone(), a.clone(), a.clone(), a],
            )
            .unwrap();
        assert!(fp.is_member(&four_arc).unwrap());
    }

    #[test]
    fn uhf_pullback_elements() {
        let entry = example_pullback_uhf(2).unwrap();
        let pb = entry.pullback();
        let x = pb.parse("pb(step{b=; arcs=uhf2:compact:1/1; pts=} | fn:nat:1,nat:0)").unwrap();
        let tau = CuGElem::irrep(entry.module().ring().group(), 1);
        let moved = entry.module().act(&tau, &x).unwrap();
        assert_eq!(pb.format(&moved), "pb(step{b=; arcs=uhf2:compact:1/1; pts=} | fn:nat:0,nat:1)");
        assert!(pb.parse("pb(step{b=; arcs=uhf2:soft:inf; pts=} | fn:nat:inf,nat:inf)").is_ok());
        let wrong = pb.parse("pb(step{b=; arcs=uhf2:compact:1/1; pts=} | fn:nat:1,nat:1)");
        assert!(matches!(wrong, Err(CuError::ConstraintViolation(_))));
    }

    #[test]
    fn w_pullback_elements() {
        let entry = example_pullback_w(2).unwrap();
        let pb = entry.pullback();
        let x = pb.parse("pb(step{b=; arcs=rat:3/2; pts=} | fn:rat:1/1,rat:1/2)").unwrap();
        let tau = CuGElem::irrep(entry.module().ring().group(), 1);
        let moved = entry.module().act(&tau, &x).unwrap();
        assert_eq!(moved.b.0, vec![ExtRat::ratio(1, 2), ExtRat::integer(1)]);
        assert_eq!(moved.a, x.a);
        assert!(pb.check(&pb.zero()).is_ok());
    }

    #[test]
    fn nonstable_counts() {
        let (a, b) = NonStable.atom_counts().unwrap();
        assert_eq!((a, b), (AtomCount::Count(1), AtomCount::Count(4)));
        assert!(NonStable.facts().contains(&("ISOMORPHIC".to_string(), "no".to_string())));
    }

    #[test]
    fn lookup_names() {
        for name in ["uhf:2", "uhf-circle:3", "w", "w-circle:2", "pullback-uhf:2", "pullback-w:3", "nonstable"] {
            assert_eq!(lookup(name).ok().unwrap().name(), name);
        }
        for bad in ["uhf", "uhf:1", "w:2", "torus"] {
            assert!(lookup(bad).is_err());
        }
    }
}
