//! Cu(G)-semimodules: a Cu-semigroup with an action of the representation
//! semiring, specified on irreps and extended additively.

use std::sync::Arc;

use rand::{Rng, SeedableRng};

use crate::axioms::{lub_failure, AxiomConfig, AxiomReport, CaseRunner};
use crate::concrete::{FnElem, FnSemigroup};
use crate::constructions::action::GroupAction;
use crate::error::{CuError, Result};
use crate::ext_nat::ExtNat;
use crate::rep::{cug_leq, cug_way_below, direct_sum, CuGElem, FiniteGroup, RepSemiring};
use crate::semigroup::{CaseRng, Chain, CuSemigroup, Elem};

pub trait Semimodule {
    type Carrier: CuSemigroup;

    fn carrier(&self) -> &Self::Carrier;

    fn ring(&self) -> &RepSemiring;

    fn name(&self) -> String;

    /// `[π]·x` for an irrep `π`.
    fn act_irrep(&self, pi: usize, x: &Elem<Self::Carrier>) -> Result<Elem<Self::Carrier>>;

    /// `[μ]·x = Σ_π m_π(μ)·([π]·x)`; an infinite multiplicity is the
    /// supremum of its truncations.
    fn act(&self, r: &CuGElem, x: &Elem<Self::Carrier>) -> Result<Elem<Self::Carrier>> {
        let s = self.carrier();
        if r.mult().len() != self.ring().group().irrep_count() {
            return Err(CuError::mismatch(format!("{r} acting on a {} module", self.ring().group().name())));
        }
        let mut acc = s.zero();
        for (pi, &m) in r.mult().iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            acc = s.add(&acc, &s.nat_scale(m, &self.act_irrep(pi, x)?))?;
        }
        Ok(acc)
    }

    /// Whether the unit and ⊗-compatibility laws are claimed.
    fn module_laws(&self) -> bool {
        true
    }
}

/// How irreps act on a carrier `S`.
pub trait ActionRule<S: CuSemigroup> {
    fn name(&self) -> String;

    fn act_irrep(&self, s: &S, group: &FiniteGroup, pi: usize, x: &S::Elem) -> Result<S::Elem>;

    fn module_laws(&self) -> bool {
        true
    }
}

/// `[π]·x = d_π·x`.
#[derive(Debug, Clone, Copy)]
pub struct Trivial;

impl<S: CuSemigroup> ActionRule<S> for Trivial {
    fn name(&self) -> String {
        "trivial".into()
    }
    fn act_irrep(&self, s: &S, group: &FiniteGroup, pi: usize, x: &S::Elem) -> Result<S::Elem> {
        let d = *group
            .dims()
            .get(pi)
            .ok_or_else(|| CuError::mismatch(format!("irrep {pi} of {}", group.name())))?;
        Ok(s.nat_scale(ExtNat::Fin(d), x))
    }
}

/// For abelian `G`, characters act through an action of `Ĝ` whose elements
/// are indexed like the irreps.
#[derive(Debug, Clone)]
pub struct Dual<A>(pub A);

impl<S: CuSemigroup, A: GroupAction<S>> ActionRule<S> for Dual<A> {
    fn name(&self) -> String {
        format!("dual[{}]", self.0.name())
    }
    fn act_irrep(&self, s: &S, _group: &FiniteGroup, pi: usize, x: &S::Elem) -> Result<S::Elem> {
        self.0.apply(s, pi, x)
    }
}

/// `([μ]·f)(π) = m_π(μ)·f(π)` on functions over `Ĝ`. This is additive and
/// order-compatible but is not unital: `[1]·f` keeps only `f(1)`.
#[derive(Debug, Clone, Copy)]
pub struct TensorScaling;

impl<B: CuSemigroup> ActionRule<FnSemigroup<B>> for TensorScaling {
    fn name(&self) -> String {
        "tensor-scaling".into()
    }
    fn act_irrep(&self, s: &FnSemigroup<B>, group: &FiniteGroup, pi: usize, x: &FnElem<B::Elem>) -> Result<FnElem<B::Elem>> {
        if s.size() != group.irrep_count() || pi >= s.size() {
            return Err(CuError::mismatch(format!(
                "functions over {} points, {} irreps",
                s.size(),
                group.irrep_count()
            )));
        }
        s.check(x)?;
        Ok(s.point_mass(pi, x.0[pi].clone()))
    }
    fn module_laws(&self) -> bool {
        false
    }
}

#[derive(Clone)]
pub struct CuGModule<S, R> {
    carrier: S,
    ring: RepSemiring,
    rule: R,
}

const SPOT_CHECKS: usize = 32;

/// Wraps a carrier and an action rule, spot-checking additivity, zero and
/// compatibility with `≤` and `≪`.
pub fn make_semimodule<S, R>(carrier: S, group: &Arc<FiniteGroup>, rule: R) -> Result<CuGModule<S, R>>
where
    S: CuSemigroup,
    R: ActionRule<S>,
{
    let m = CuGModule {
        carrier,
        ring: RepSemiring::new(Arc::clone(group)),
        rule,
    };
    let bad = |what: String| CuError::InvalidAction(format!("{}: {what}", m.name()));
    let s = &m.carrier;
    let mut rng = CaseRng::seed_from_u64(0);
    for pi in 0..group.irrep_count() {
        if m.act_irrep(pi, &s.zero())? != s.zero() {
            return Err(bad(format!("irrep {pi} does not fix zero")));
        }
    }
    for _ in 0..SPOT_CHECKS {
        let pi = rng.random_range(0..group.irrep_count());
        let (x, y) = (s.sample(&mut rng), s.sample(&mut rng));
        let (px, py) = (m.act_irrep(pi, &x)?, m.act_irrep(pi, &y)?);
        s.check(&px).map_err(|e| bad(format!("irrep {pi} leaves the carrier: {e}")))?;
        if m.act_irrep(pi, &s.add(&x, &y)?)? != s.add(&px, &py)? {
            return Err(bad(format!("irrep {pi} is not additive at {} and {}", s.format(&x), s.format(&y))));
        }
        if s.leq(&x, &y)? && !s.leq(&px, &py)? {
            return Err(bad(format!("irrep {pi} does not preserve the order")));
        }
        let a = s.approximant(&x, 2);
        if !s.way_below(&m.act_irrep(pi, &a)?, &px)? {
            return Err(bad(format!("irrep {pi} does not preserve way-below at {}", s.format(&x))));
        }
    }
    Ok(m)
}

impl<S: CuSemigroup, R: ActionRule<S>> CuGModule<S, R> {
    pub fn rule(&self) -> &R {
        &self.rule
    }
}

impl<S: CuSemigroup, R: ActionRule<S>> Semimodule for CuGModule<S, R> {
    type Carrier = S;

    fn carrier(&self) -> &S {
        &self.carrier
    }

    fn ring(&self) -> &RepSemiring {
        &self.ring
    }

    fn name(&self) -> String {
        format!("mod[{};{};{}]", self.carrier.name(), self.ring.group().name(), self.rule.name())
    }

    fn act_irrep(&self, pi: usize, x: &S::Elem) -> Result<S::Elem> {
        self.rule.act_irrep(&self.carrier, self.ring.group(), pi, x)
    }

    fn module_laws(&self) -> bool {
        self.rule.module_laws()
    }
}

fn fmt_rx<M: Semimodule>(m: &M, r: &CuGElem, x: &Elem<M::Carrier>) -> String {
    format!("r={r} x={}", m.carrier().format(x))
}

fn sample_leq_reps(ring: &RepSemiring, rng: &mut CaseRng) -> Result<(CuGElem, CuGElem)> {
    let r = ring.sample(rng);
    Ok(match rng.random_range(0..3) {
        0 => (r.clone(), r),
        1 => (ring.approximant(&r, rng.random_range(0..4)), r),
        _ => {
            let s = direct_sum(&r, &ring.sample(rng))?;
            (r, s)
        }
    })
}

fn sample_wb_reps(ring: &RepSemiring, rng: &mut CaseRng) -> Result<(CuGElem, CuGElem)> {
    let s = ring.sample(rng);
    Ok(match rng.random_range(0..3) {
        0 => (ring.sample(rng), s),
        _ => (ring.approximant(&s, rng.random_range(0..4)), s),
    })
}

/// Runs the semimodule checks: zero, additivity in both arguments, the
/// order laws `r ≤ s, x ≤ y ⇒ r·x ≤ s·y` and `r ≪ s, x ≪ y ⇒ r·x ≪ s·y`,
/// and suprema in each argument separately and jointly. When the module
/// claims them, also `1·x = x` and `(r⊗s)·x = r·(s·x)`.
pub fn check_semimodule<M: Semimodule>(m: &M, config: AxiomConfig) -> AxiomReport {
    let mut r = CaseRunner::new(m.name(), config);
    run_semimodule_checks(m, &mut r);
    r.finish()
}

pub fn run_semimodule_checks<M: Semimodule>(m: &M, r: &mut CaseRunner) {
    let s = m.carrier();
    let ring = m.ring();
    let zero_rep = ring.zero();
    r.run("SM-ZERO", |rng| {
        let (rep, x) = (ring.sample(rng), s.sample(rng));
        let ok = m.act(&zero_rep, &x)? == s.zero() && m.act(&rep, &s.zero())? == s.zero();
        Ok((!ok).then(|| fmt_rx(m, &rep, &x)))
    });
    r.run("SM-ADD-RING", |rng| {
        let (a, b, x) = (ring.sample(rng), ring.sample(rng), s.sample(rng));
        let lhs = m.act(&direct_sum(&a, &b)?, &x)?;
        let rhs = s.add(&m.act(&a, &x)?, &m.act(&b, &x)?)?;
        Ok((lhs != rhs).then(|| format!("r={a} r'={b} x={}", s.format(&x))))
    });
    r.run("SM-ADD-CARRIER", |rng| {
        let (a, x, y) = (ring.sample(rng), s.sample(rng), s.sample(rng));
        let lhs = m.act(&a, &s.add(&x, &y)?)?;
        s.check(&lhs)?;
        let rhs = s.add(&m.act(&a, &x)?, &m.act(&a, &y)?)?;
        Ok((lhs != rhs).then(|| format!("r={a} x={} y={}", s.format(&x), s.format(&y))))
    });
    r.run("SM-O2", |rng| {
        let (a, b) = sample_leq_reps(ring, rng)?;
        let (x, y) = crate::axioms::sample_leq_pair(s, rng)?;
        if !(cug_leq(&a, &b)? && s.leq(&x, &y)?) {
            return Ok(None);
        }
        let ok = s.leq(&m.act(&a, &x)?, &m.act(&b, &y)?)?;
        Ok((!ok).then(|| format!("r={a} s={b} x={} y={}", s.format(&x), s.format(&y))))
    });
    r.run("SM-O3", |rng| {
        let (a, b) = sample_wb_reps(ring, rng)?;
        let (x, y) = crate::axioms::sample_wb_pair(s, rng)?;
        if !(cug_way_below(&a, &b)? && s.way_below(&x, &y)?) {
            return Ok(None);
        }
        let ok = s.way_below(&m.act(&a, &x)?, &m.act(&b, &y)?)?;
        Ok((!ok).then(|| format!("r={a} s={b} x={} y={}", s.format(&x), s.format(&y))))
    });
    r.run("SM-O4-LEFT", |rng| {
        let (a, x) = (ring.sample(rng), s.sample(rng));
        let chain = ring_chain(&a, rng);
        let sup = ring.sup_chain(&chain)?;
        lub_failure(s, &m.act(&sup, &x)?, |k| m.act(&ring.chain_term(&chain, k)?, &x))
            .map(|f| f.map(|msg| format!("{} x={}: {msg}", chain_label(&chain), s.format(&x))))
    });
    r.run("SM-O4-RIGHT", |rng| {
        let a = ring.sample(rng);
        let chain = crate::axioms::sample_registered_chain(s, rng)?;
        let sup = s.sup_chain(&chain)?;
        lub_failure(s, &m.act(&a, &sup)?, |k| m.act(&a, &s.chain_term(&chain, k)?))
            .map(|f| f.map(|msg| format!("r={a} {} chain: {msg}", chain.family_name())))
    });
    r.run("SM-O4", |rng| {
        let a = ring.sample(rng);
        let rc = ring_chain(&a, rng);
        let xc = crate::axioms::sample_registered_chain(s, rng)?;
        let target = m.act(&ring.sup_chain(&rc)?, &s.sup_chain(&xc)?)?;
        // Past 2²⁴ the product of two growing chains leaves u64, so the
        // deepest probes reuse that term.
        lub_failure(s, &target, |k| {
            let j = k.min(1 << 24);
            m.act(&ring.chain_term(&rc, j)?, &s.chain_term(&xc, j)?)
        })
            .map(|f| f.map(|msg| format!("{} with {} chain: {msg}", chain_label(&rc), xc.family_name())))
    });
    if m.module_laws() {
        r.run("MOD-UNIT", |rng| {
            let x = s.sample(rng);
            let y = m.act(&ring.unit(), &x)?;
            Ok((y != x).then(|| format!("x={} 1.x={}", s.format(&x), s.format(&y))))
        });
        r.run("MOD-TENSOR", |rng| {
            let (a, b, x) = (ring.sample(rng), ring.sample(rng), s.sample(rng));
            let lhs = m.act(&ring.tensor(&a, &b)?, &x)?;
            let rhs = m.act(&a, &m.act(&b, &x)?)?;
            Ok((lhs != rhs).then(|| format!("r={a} s={b} x={}", s.format(&x))))
        });
    }
}

fn ring_chain(a: &CuGElem, rng: &mut CaseRng) -> Chain<CuGElem> {
    match rng.random_range(0..3) {
        0 => Chain::Multiples(a.clone()),
        _ => Chain::Approximants(a.clone()),
    }
}

fn chain_label(c: &Chain<CuGElem>) -> String {
    match c {
        Chain::Approximants(r) => format!("truncations of r={r}"),
        Chain::Multiples(r) => format!("multiples of r={r}"),
        other => other.family_name().to_string(),
    }
}

/// For a module that is trivial, checks that `r·x` only depends on
/// `Σ m_π d_π`: every pair of multiplicity vectors with entries at most
/// `bound` and equal weighted dimension acts identically on each sample.
pub fn triviality_failure<M: Semimodule>(m: &M, bound: u64, samples: &[Elem<M::Carrier>]) -> Result<Option<String>> {
    let group = m.ring().group();
    let k = group.irrep_count();
    let combos = (bound + 1).checked_pow(k as u32).filter(|&c| c <= 1 << 16).ok_or_else(|| {
        CuError::Unsupported(format!("{} multiplicity vectors", bound + 1))
    })?;
    let mut by_dim: std::collections::BTreeMap<ExtNat, Vec<CuGElem>> = Default::default();
    for code in 0..combos {
        let mut counts = Vec::with_capacity(k);
        let mut c = code;
        for _ in 0..k {
            counts.push(c % (bound + 1));
            c /= bound + 1;
        }
        let rep = CuGElem::from_counts(group, &counts)?;
        by_dim.entry(rep.dimension()).or_default().push(rep);
    }
    let s = m.carrier();
    for x in samples {
        for reps in by_dim.values() {
            let first = m.act(&reps[0], x)?;
            for rep in &reps[1..] {
                let y = m.act(rep, x)?;
                if y != first {
                    return Ok(Some(format!(
                        "{}.{} = {} but {}.{} = {}",
                        reps[0],
                        s.format(x),
                        s.format(&first),
                        rep,
                        s.format(x),
                        s.format(&y)
                    )));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concrete::UhfCu;
    use crate::constructions::action::IndexTranslation;
    use crate::ext_nat::ExtNats;
    use crate::ext_rat::ExtRats;
    use crate::rep::load_group;
    use ExtNat::{Fin, Inf};

    #[test]
    fn trivial_scales_by_dimension() {
        let g = load_group("s3", None).unwrap();
        let m = make_semimodule(ExtNats, &g, Trivial).unwrap();
        let std = CuGElem::irrep(&g, 2);
        assert_eq!(m.act(&std, &Fin(3)).unwrap(), Fin(6));
        assert_eq!(m.act(&CuGElem::zero(&g), &Fin(3)).unwrap(), Fin(0));
        let big = CuGElem::new(&g, vec![Fin(0), Inf, Fin(0)]).unwrap();
        assert_eq!(m.act(&big, &Fin(1)).unwrap(), Inf);
        assert_eq!(m.act(&big, &Fin(0)).unwrap(), Fin(0));
    }

    #[test]
    fn trivial_module_suites() {
        let g = load_group("s3", None).unwrap();
        for report in [
            check_semimodule(&make_semimodule(ExtNats, &g, Trivial).unwrap(), AxiomConfig::new(4, 300)),
            check_semimodule(&make_semimodule(ExtRats, &g, Trivial).unwrap(), AxiomConfig::new(4, 300)),
            check_semimodule(&make_semimodule(UhfCu::new(6).unwrap(), &g, Trivial).unwrap(), AxiomConfig::new(4, 300)),
        ] {
            assert!(report.passed(), "{}", report.to_human());
        }
    }

    #[test]
    fn dual_translation() {
        let g = load_group("cyclic:3", None).unwrap();
        let fns = FnSemigroup::over_group(ExtNats, &[3]).unwrap();
        let m = make_semimodule(fns, &g, Dual(IndexTranslation::new(&[3]))).unwrap();
        let h = FnElem(vec![Fin(1), Fin(2), Fin(3)]);
        assert_eq!(m.act(&CuGElem::irrep(&g, 1), &h).unwrap(), FnElem(vec![Fin(2), Fin(3), Fin(1)]));
        let report = check_semimodule(&m, AxiomConfig::new(5, 300));
        assert!(report.passed(), "{}", report.to_human());
        assert!(report.record("MOD-TENSOR").is_some());
    }

    #[test]
    fn tensor_scaling_is_not_unital() {
        let g = load_group("cyclic:2", None).unwrap();
        let fns = FnSemigroup::over_group(ExtNats, &[2]).unwrap();
        let m = make_semimodule(fns, &g, TensorScaling).unwrap();
        let h = FnElem(vec![Fin(3), Fin(4)]);
        let mu = CuGElem::from_counts(&g, &[2, 1]).unwrap();
        assert_eq!(m.act(&mu, &h).unwrap(), FnElem(vec![Fin(6), Fin(4)]));
        assert_eq!(m.act(&CuGElem::trivial(&g), &h).unwrap(), FnElem(vec![Fin(3), Fin(0)]));
        let report = check_semimodule(&m, AxiomConfig::new(5, 300));
        assert!(report.passed(), "{}", report.to_human());
        assert!(report.record("MOD-UNIT").is_none());
    }

    #[test]
    fn triviality_detects_non_trivial_actions() {
        let g = load_group("cyclic:2", None).unwrap();
        let samples: Vec<_> = (0..5).map(Fin).collect();
        let m = make_semimodule(ExtNats, &g, Trivial).unwrap();
        assert_eq!(triviality_failure(&m, 2, &samples).unwrap(), None);
        let fns = FnSemigroup::over_group(ExtNats, &[2]).unwrap();
        let d = make_semimodule(fns, &g, Dual(IndexTranslation::new(&[2]))).unwrap();
        assert!(triviality_failure(&d, 2, &[FnElem(vec![Fin(1), Fin(0)])]).unwrap().is_some());
    }

    struct Squaring;

    impl ActionRule<ExtNats> for Squaring {
        fn name(&self) -> String {
            "square".into()
        }
        fn act_irrep(&self, _s: &ExtNats, _g: &FiniteGroup, _pi: usize, x: &ExtNat) -> Result<ExtNat> {
            Ok(*x * *x)
        }
    }

    #[test]
    fn rejects_non_additive_rules() {
        let g = load_group("cyclic:2", None).unwrap();
        assert!(matches!(make_semimodule(ExtNats, &g, Squaring), Err(CuError::InvalidAction(_))));
    }
}
