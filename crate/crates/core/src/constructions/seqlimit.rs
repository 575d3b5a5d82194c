//! Sequential direct limits `S_1 → S_2 → …` that are constant from a
//! declared stage on.
//!
//! Every class has a representative at the stabilization stage `N`, and two
//! classes compare as their images there. Elements are stored as those
//! images, so structural equality is equality in the limit.

use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;

use crate::error::{CuError, Result};
use crate::ext_nat::ExtNat;
use crate::semigroup::{CaseRng, CuMorphism, CuSemigroup};

/// A connecting map between stages of the same semigroup type.
pub type StageMap<S> = Arc<dyn CuMorphism<Source = S, Target = S> + Send + Sync>;

/// A limit class, held as its image at the stabilization stage.
#[derive(Debug, Clone, PartialEq)]
pub struct LimElem<E>(pub E);

impl<E: fmt::Display> fmt::Display for LimElem<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone)]
pub struct SeqLimit<S: CuSemigroup> {
    stages: Vec<S>,
    maps: Vec<StageMap<S>>,
    stable: usize,
}

/// Samples used to confirm that maps past the stabilization stage are
/// identities.
const STABILITY_SAMPLES: usize = 64;

/// `stages[k-1]` is `S_k`, `maps[k-1]` is `φ_k: S_k → S_{k+1}`. Maps past
/// stage `stable` may be listed; they must be identities.
pub fn make_seq_limit<S>(stages: Vec<S>, maps: Vec<StageMap<S>>, stable: usize) -> Result<SeqLimit<S>>
where
    S: CuSemigroup,
{
    if stable == 0 || stable > stages.len() {
        return Err(CuError::mismatch(format!(
            "stabilization stage {stable} with {} stages",
            stages.len()
        )));
    }
    if maps.len() + 1 < stable {
        return Err(CuError::mismatch(format!("{} maps cannot reach stage {stable}", maps.len())));
    }
    for (i, m) in maps.iter().enumerate() {
        let (from, to) = (i, (i + 1).min(stages.len() - 1));
        if m.source().name() != stages[from].name() || m.target().name() != stages[to].name() {
            return Err(CuError::mismatch(format!(
                "map {} goes {} -> {}, stages are {} and {}",
                i + 1,
                m.source().name(),
                m.target().name(),
                stages[from].name(),
                stages[to].name()
            )));
        }
    }
    let mut rng = CaseRng::seed_from_u64(0);
    for (i, m) in maps.iter().enumerate().skip(stable - 1) {
        for _ in 0..STABILITY_SAMPLES {
            let x = m.source().sample(&mut rng);
            if m.apply(&x)? != x {
                return Err(CuError::Unsupported(format!(
                    "map {} past the declared stabilization stage {stable} is not the identity",
                    i + 1
                )));
            }
        }
    }
    Ok(SeqLimit { stages, maps, stable })
}

impl<S: CuSemigroup> SeqLimit<S> {
    pub fn stable_stage(&self) -> usize {
        self.stable
    }

    pub fn stage(&self, k: usize) -> Result<&S> {
        self.stages
            .get(k.checked_sub(1).ok_or_else(|| CuError::mismatch("stages are numbered from 1"))?)
            .or_else(|| self.stages.last())
            .ok_or_else(|| CuError::mismatch("no stages"))
    }

    fn stable_semigroup(&self) -> &S {
        &self.stages[self.stable - 1]
    }

    /// `φ_{m-1} ∘ … ∘ φ_k (x)` for `k ≤ m`.
    pub fn push(&self, k: usize, m: usize, x: &S::Elem) -> Result<S::Elem> {
        if k == 0 || k > m {
            return Err(CuError::mismatch(format!("cannot push from stage {k} to stage {m}")));
        }
        self.stage(k)?.check(x)?;
        let mut y = x.clone();
        for j in k..m.min(self.stable) {
            y = self.maps[j - 1].apply(&y)?;
        }
        Ok(y)
    }

    /// The canonical injection `ψ_k(x)`.
    pub fn inject(&self, k: usize, x: &S::Elem) -> Result<LimElem<S::Elem>> {
        Ok(LimElem(self.push(k, self.stable.max(k), x)?))
    }

    /// `ψ_k` as a morphism.
    pub fn injection(&self, k: usize) -> Result<Injection<S>>
    where
        S: Clone,
    {
        self.stage(k)?;
        Ok(Injection {
            limit: self.clone(),
            k,
        })
    }
}

impl<S: CuSemigroup> CuSemigroup for SeqLimit<S> {
    type Elem = LimElem<S::Elem>;

    fn name(&self) -> String {
        let parts: Vec<String> = self.maps.iter().take(self.stable - 1).map(|m| m.name()).collect();
        format!("lim[{};{}]", parts.join(","), self.stable_semigroup().name())
    }

    fn zero(&self) -> Self::Elem {
        LimElem(self.stable_semigroup().zero())
    }

    fn check(&self, x: &Self::Elem) -> Result<()> {
        self.stable_semigroup().check(&x.0)
    }

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem> {
        Ok(LimElem(self.stable_semigroup().add(&x.0, &y.0)?))
    }

    fn leq(&self, x: &Self::Elem, y: &Self::Elem) -> Result<bool> {
        self.stable_semigroup().leq(&x.0, &y.0)
    }

    fn way_below(&self, x: &Self::Elem, y: &Self::Elem) -> Result<bool> {
        self.stable_semigroup().way_below(&x.0, &y.0)
    }

    fn approximant(&self, x: &Self::Elem, k: u64) -> Self::Elem {
        LimElem(self.stable_semigroup().approximant(&x.0, k))
    }

    fn nat_scale(&self, n: ExtNat, x: &Self::Elem) -> Self::Elem {
        LimElem(self.stable_semigroup().nat_scale(n, &x.0))
    }

    fn sample(&self, rng: &mut CaseRng) -> Self::Elem {
        use rand::Rng;
        let k = rng.random_range(1..=self.stable);
        let x = self.stages[k - 1].sample(rng);
        self.inject(k, &x).unwrap_or_else(|_| self.zero())
    }

    /// `lim(<k>: <literal in S_k>)`.
    fn parse(&self, literal: &str) -> Result<Self::Elem> {
        let body = literal
            .trim()
            .strip_prefix("lim(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| CuError::parse(format!("expected `lim(k: …)`, got `{literal}`")))?;
        let (k, x) = body
            .split_once(':')
            .ok_or_else(|| CuError::parse(format!("expected `lim(k: …)`, got `{literal}`")))?;
        let k: usize = k.trim().parse().map_err(|_| CuError::parse(format!("bad stage `{k}`")))?;
        if k == 0 {
            return Err(CuError::parse("stages are numbered from 1"));
        }
        let x = self.stage(k)?.parse(x.trim())?;
        self.inject(k, &x)
    }

    fn format(&self, x: &Self::Elem) -> String {
        format!("lim({}: {})", self.stable, self.stable_semigroup().format(&x.0))
    }

    fn atoms(&self) -> crate::semigroup::AtomSearch<Self::Elem> {
        use crate::semigroup::AtomSearch;
        match self.stable_semigroup().atoms() {
            AtomSearch::Unsupported => AtomSearch::Unsupported,
            AtomSearch::Candidates(c) => AtomSearch::Candidates(c.into_iter().map(LimElem).collect()),
            AtomSearch::Divisible(w) => AtomSearch::Divisible(w.into_iter().map(|(x, y)| (LimElem(x), LimElem(y))).collect()),
        }
    }
}

/// `ψ_k: S_k → lim S`.
#[derive(Clone)]
pub struct Injection<S: CuSemigroup> {
    limit: SeqLimit<S>,
    k: usize,
}

impl<S: CuSemigroup> CuMorphism for Injection<S> {
    type Source = S;
    type Target = SeqLimit<S>;

    fn source(&self) -> &S {
        self.limit.stage(self.k).expect("stage checked at construction")
    }
    fn target(&self) -> &SeqLimit<S> {
        &self.limit
    }
    fn apply(&self, x: &S::Elem) -> Result<LimElem<S::Elem>> {
        self.limit.inject(self.k, x)
    }
    fn name(&self) -> String {
        format!("inject{}", self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_axioms, check_morphism, AxiomConfig};
    use crate::ext_nat::ExtNats;
    use crate::semigroup::{Identity, MapMorphism};
    use ExtNat::{Fin, Inf};

    fn doubling() -> StageMap<ExtNats> {
        Arc::new(MapMorphism::new("double", ExtNats, ExtNats, |x: &ExtNat| Ok(*x + *x)))
    }

    #[test]
    fn constant_system_is_the_stage() {
        let lim = make_seq_limit(vec![ExtNats], vec![Arc::new(Identity(ExtNats)) as StageMap<_>], 1).unwrap();
        let mut rng = CaseRng::seed_from_u64(5);
        for _ in 0..200 {
            let (x, y) = (ExtNats.sample(&mut rng), ExtNats.sample(&mut rng));
            let (lx, ly) = (lim.inject(1, &x).unwrap(), lim.inject(1, &y).unwrap());
            assert_eq!(lim.leq(&lx, &ly).unwrap(), x <= y);
        }
        assert!(check_axioms(&lim, AxiomConfig::new(1, 200)).passed());
    }

    #[test]
    fn doubling_then_stable() {
        let lim = make_seq_limit(vec![ExtNats, ExtNats], vec![doubling(), Arc::new(Identity(ExtNats))], 2).unwrap();
        assert_eq!(lim.inject(1, &Fin(1)).unwrap(), lim.inject(2, &Fin(2)).unwrap());
        assert_eq!(lim.parse("lim(1: nat:1)").unwrap(), lim.parse("lim(2: nat:2)").unwrap());
        assert_eq!(lim.inject(1, &Fin(0)).unwrap(), lim.zero());
        assert_eq!(lim.inject(2, &Fin(0)).unwrap(), lim.zero());
        assert_eq!(lim.inject(1, &Inf).unwrap(), LimElem(Inf));
        // ψ₂ ∘ φ₁ = ψ₁
        for x in [Fin(0), Fin(3), Inf] {
            assert_eq!(lim.inject(2, &doubling().apply(&x).unwrap()).unwrap(), lim.inject(1, &x).unwrap());
        }
        for k in 1..=3 {
            assert!(check_morphism(&lim.injection(k).unwrap(), AxiomConfig::new(2, 100)).passed());
        }
    }

    #[test]
    fn rejects_bad_declarations() {
        let late = make_seq_limit(vec![ExtNats, ExtNats], vec![doubling(), doubling()], 2);
        assert!(matches!(late, Err(CuError::Unsupported(_))));
        let short = make_seq_limit(vec![ExtNats, ExtNats, ExtNats], vec![doubling()], 3);
        assert!(matches!(short, Err(CuError::DomainMismatch(_))));
        assert!(make_seq_limit(vec![ExtNats], vec![], 2).is_err());
    }
}
