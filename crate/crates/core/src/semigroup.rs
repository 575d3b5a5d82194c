//! The contract shared by every Cu-semigroup in the crate.
//!
//! Elements are always held in canonical form, so structural equality is
//! order-equivalence. Suprema are computed for finite ascending lists and
//! for the registered chain families in [`Chain`]; anything else is
//! rejected with [`CuError::UnsupportedChain`].

use std::fmt;
use std::sync::Arc;

use rand_chacha::ChaCha8Rng;

use crate::error::{CuError, Result};
use crate::ext_nat::ExtNat;

/// Deterministic generator used by every sampler and by the axiom runner.
pub type CaseRng = ChaCha8Rng;

/// Shorthand for the element type of a semigroup.
pub type Elem<S> = <S as CuSemigroup>::Elem;

/// An increasing sequence of elements.
#[derive(Clone)]
pub enum Chain<E> {
    /// A finite ascending list; its supremum is the last entry.
    Finite(Vec<E>),
    /// `k ↦ approximant(x, k)`, with supremum `x`.
    Approximants(E),
    /// `k ↦ k·x`, with supremum `∞·x`.
    Multiples(E),
    /// Termwise sum of two chains.
    Sum(Box<Chain<E>>, Box<Chain<E>>),
    /// An arbitrary increasing sequence. Terms can be evaluated but no
    /// closed-form supremum is known.
    Sequence(Arc<dyn Fn(u64) -> E + Send + Sync>),
}

impl<E> Chain<E> {
    pub fn sum(a: Chain<E>, b: Chain<E>) -> Self {
        Chain::Sum(Box::new(a), Box::new(b))
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            Chain::Finite(_) => "finite",
            Chain::Approximants(_) => "approximants",
            Chain::Multiples(_) => "multiples",
            Chain::Sum(..) => "sum",
            Chain::Sequence(_) => "sequence",
        }
    }
}

impl<E: fmt::Debug> fmt::Debug for Chain<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chain::Finite(xs) => f.debug_tuple("Finite").field(xs).finish(),
            Chain::Approximants(x) => f.debug_tuple("Approximants").field(x).finish(),
            Chain::Multiples(x) => f.debug_tuple("Multiples").field(x).finish(),
            Chain::Sum(a, b) => f.debug_tuple("Sum").field(a).field(b).finish(),
            Chain::Sequence(_) => f.write_str("Sequence(..)"),
        }
    }
}

/// How a semigroup exposes its minimal nonzero compact elements.
#[derive(Debug, Clone)]
pub enum AtomSearch<E> {
    Unsupported,
    /// A finite list containing every minimal nonzero compact element
    /// (non-minimal entries are allowed and filtered out).
    Candidates(Vec<E>),
    /// Every nonzero compact element has a strictly smaller nonzero compact
    /// element below it. Each pair `(x, y)` is a witness `0 < y < x` with both
    /// compact, spot-checked by the atom counter.
    Divisible(Vec<(E, E)>),
}

pub trait CuSemigroup {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    /// Registry name, e.g. `nat` or `uhf2`.
    fn name(&self) -> String;

    fn zero(&self) -> Self::Elem;

    /// Checks that `x` is a canonical element of this semigroup.
    fn check(&self, x: &Self::Elem) -> Result<()>;

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;

    fn leq(&self, x: &Self::Elem, y: &Self::Elem) -> Result<bool>;

    fn way_below(&self, x: &Self::Elem, y: &Self::Elem) -> Result<bool>;

    /// The `k`-th term of the canonical rapidly increasing sequence with
    /// supremum `x`.
    fn approximant(&self, x: &Self::Elem, k: u64) -> Self::Elem;

    /// `n·x`; for `n = ∞` this is the supremum of `k·x`.
    fn nat_scale(&self, n: ExtNat, x: &Self::Elem) -> Self::Elem;

    /// Draws a canonical element for property checks.
    fn sample(&self, rng: &mut CaseRng) -> Self::Elem;

    fn parse(&self, literal: &str) -> Result<Self::Elem>;

    fn format(&self, x: &Self::Elem) -> String;

    fn atoms(&self) -> AtomSearch<Self::Elem> {
        AtomSearch::Unsupported
    }

    fn is_compact(&self, x: &Self::Elem) -> Result<bool> {
        self.way_below(x, x)
    }

    fn sum_all<'a, I>(&self, items: I) -> Result<Self::Elem>
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .try_fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// Evaluates the `k`-th term of a chain.
    fn chain_term(&self, chain: &Chain<Self::Elem>, k: u64) -> Result<Self::Elem> {
        match chain {
            Chain::Finite(xs) => {
                if xs.is_empty() {
                    return Ok(self.zero());
                }
                let i = usize::try_from(k).unwrap_or(usize::MAX).min(xs.len() - 1);
                Ok(xs[i].clone())
            }
            Chain::Approximants(x) => Ok(self.approximant(x, k)),
            Chain::Multiples(x) => Ok(self.nat_scale(ExtNat::Fin(k), x)),
            Chain::Sum(a, b) => self.add(&self.chain_term(a, k)?, &self.chain_term(b, k)?),
            Chain::Sequence(f) => Ok(f(k)),
        }
    }

    /// Least upper bound of a finite ascending list or a registered family.
    fn sup_chain(&self, chain: &Chain<Self::Elem>) -> Result<Self::Elem> {
        match chain {
            Chain::Finite(xs) => {
                for x in xs {
                    self.check(x)?;
                }
                for (i, w) in xs.windows(2).enumerate() {
                    if !self.leq(&w[0], &w[1])? {
                        return Err(CuError::NotAscending(i + 1));
                    }
                }
                Ok(xs.last().cloned().unwrap_or_else(|| self.zero()))
            }
            Chain::Approximants(x) => {
                self.check(x)?;
                Ok(x.clone())
            }
            Chain::Multiples(x) => {
                self.check(x)?;
                Ok(self.nat_scale(ExtNat::Inf, x))
            }
            Chain::Sum(a, b) => self.add(&self.sup_chain(a)?, &self.sup_chain(b)?),
            Chain::Sequence(_) => Err(CuError::UnsupportedChain(
                "no closed-form supremum for an unregistered sequence".into(),
            )),
        }
    }
}

/// A structure-preserving map between Cu-semigroups: additive, zero and
/// order preserving, and preserving suprema (M1) and ≪ (M2).
pub trait CuMorphism {
    type Source: CuSemigroup;
    type Target: CuSemigroup;

    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;
    fn apply(&self, x: &Elem<Self::Source>) -> Result<Elem<Self::Target>>;

    fn name(&self) -> String {
        format!("{} -> {}", self.source().name(), self.target().name())
    }
}

impl<M: CuMorphism + ?Sized> CuMorphism for Box<M> {
    type Source = M::Source;
    type Target = M::Target;

    fn source(&self) -> &Self::Source {
        (**self).source()
    }
    fn target(&self) -> &Self::Target {
        (**self).target()
    }
    fn apply(&self, x: &Elem<Self::Source>) -> Result<Elem<Self::Target>> {
        (**self).apply(x)
    }
    fn name(&self) -> String {
        (**self).name()
    }
}

/// The identity endomorphism.
#[derive(Debug, Clone)]
pub struct Identity<S>(pub S);

impl<S: CuSemigroup> CuMorphism for Identity<S> {
    type Source = S;
    type Target = S;

    fn source(&self) -> &S {
        &self.0
    }
    fn target(&self) -> &S {
        &self.0
    }
    fn apply(&self, x: &S::Elem) -> Result<S::Elem> {
        self.0.check(x)?;
        Ok(x.clone())
    }
    fn name(&self) -> String {
        format!("id[{}]", self.0.name())
    }
}

type MapFn<S, T> = Arc<dyn Fn(&Elem<S>) -> Result<Elem<T>> + Send + Sync>;

/// A morphism given by an element map. The map is trusted to be a
/// Cu-morphism; `axioms::check_morphism` verifies it on samples.
pub struct MapMorphism<S: CuSemigroup, T: CuSemigroup> {
    name: String,
    source: S,
    target: T,
    map: MapFn<S, T>,
}

impl<S: CuSemigroup, T: CuSemigroup> MapMorphism<S, T> {
    pub fn new<F>(name: impl Into<String>, source: S, target: T, map: F) -> Self
    where
        F: Fn(&Elem<S>) -> Result<Elem<T>> + Send + Sync + 'static,
    {
        MapMorphism {
            name: name.into(),
            source,
            target,
            map: Arc::new(map),
        }
    }
}

impl<S: CuSemigroup + Clone, T: CuSemigroup + Clone> Clone for MapMorphism<S, T> {
    fn clone(&self) -> Self {
        MapMorphism {
            name: self.name.clone(),
            source: self.source.clone(),
            target: self.target.clone(),
            map: Arc::clone(&self.map),
        }
    }
}

impl<S: CuSemigroup, T: CuSemigroup> CuMorphism for MapMorphism<S, T> {
    type Source = S;
    type Target = T;

    fn source(&self) -> &S {
        &self.source
    }
    fn target(&self) -> &T {
        &self.target
    }
    fn apply(&self, x: &Elem<S>) -> Result<Elem<T>> {
        self.source.check(x)?;
        (self.map)(x)
    }
    fn name(&self) -> String {
        self.name.clone()
    }
}
