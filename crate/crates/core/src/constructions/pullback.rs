//! Pullbacks `S_A ×_T S_B` of a cospan of Cu-morphisms.

use std::fmt;

use crate::constructions::action::GroupAction;
use crate::error::{CuError, Result};
use crate::ext_nat::ExtNat;
use crate::literal::split_top_level;
use crate::semigroup::{CaseRng, CuMorphism, CuSemigroup, Elem};

/// A morphism along which approximants and samples can be lifted: the
/// pullback needs, for each approximant `t_k` of the target constraint, an
/// approximant of `x` lying over `t_k`.
pub trait LiftingMorphism: CuMorphism {
    /// An element with image exactly `t`, rapidly increasing in `k` when the
    /// `t` are, and with supremum `x` along any sequence `t → φ(x)`.
    /// Requires `t ≪ φ(x)` or `t = φ(x)`.
    fn lift_approximant(&self, x: &Elem<Self::Source>, t: &Elem<Self::Target>, k: u64) -> Elem<Self::Source>;

    /// A random element with image `t`.
    fn sample_fiber(&self, t: &Elem<Self::Target>, rng: &mut CaseRng) -> Elem<Self::Source>;
}

#[derive(Debug, Clone, PartialEq)]
pub struct PbElem<A, B> {
    pub a: A,
    pub b: B,
}

impl<A: fmt::Display, B: fmt::Display> fmt::Display for PbElem<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// Pairs `(a, b)` with `φ(a) = ψ(b)`, ordered componentwise.
#[derive(Clone)]
pub struct Pullback<P, Q> {
    phi: P,
    psi: Q,
}

type PbOf<P, Q> = PbElem<Elem<<P as CuMorphism>::Source>, Elem<<Q as CuMorphism>::Source>>;

pub fn make_pullback<P, Q>(phi: P, psi: Q) -> Result<Pullback<P, Q>>
where
    P: LiftingMorphism,
    Q: CuMorphism<Target = P::Target>,
{
    if phi.target().name() != psi.target().name() {
        return Err(CuError::mismatch(format!(
            "pullback legs land in {} and {}",
            phi.target().name(),
            psi.target().name()
        )));
    }
    Ok(Pullback { phi, psi })
}

impl<P, Q> Pullback<P, Q>
where
    P: LiftingMorphism,
    Q: CuMorphism<Target = P::Target>,
{
    pub fn phi(&self) -> &P {
        &self.phi
    }

    pub fn psi(&self) -> &Q {
        &self.psi
    }

    pub fn left(&self) -> &P::Source {
        self.phi.source()
    }

    pub fn right(&self) -> &Q::Source {
        self.psi.source()
    }

    /// Builds a pair, rejecting it unless `φ(a) = ψ(b)`.
    pub fn make(&self, a: Elem<P::Source>, b: Elem<Q::Source>) -> Result<PbOf<P, Q>> {
        let x = PbElem { a, b };
        self.check(&x)?;
        Ok(x)
    }
}

impl<P, Q> CuSemigroup for Pullback<P, Q>
where
    P: LiftingMorphism,
    Q: CuMorphism<Target = P::Target>,
{
    type Elem = PbOf<P, Q>;

    fn name(&self) -> String {
        format!("pb[{} | {}]", self.phi.name(), self.psi.name())
    }

    fn zero(&self) -> Self::Elem {
        PbElem {
            a: self.left().zero(),
            b: self.right().zero(),
        }
    }

    fn check(&self, x: &Self::Elem) -> Result<()> {
        self.left().check(&x.a)?;
        self.right().check(&x.b)?;
        let (fa, gb) = (self.phi.apply(&x.a)?, self.psi.apply(&x.b)?);
        if fa != gb {
            let t = self.phi.target();
            return Err(CuError::ConstraintViolation(format!(
                "{} maps to {} but {} maps to {}",
                self.left().format(&x.a),
                t.format(&fa),
                self.right().format(&x.b),
                t.format(&gb)
            )));
        }
        Ok(())
    }

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem> {
        Ok(PbElem {
            a: self.left().add(&x.a, &y.a)?,
            b: self.right().add(&x.b, &y.b)?,
        })
    }

    fn leq(&self, x: &Self::Elem, y: &Self::Elem) -> Result<bool> {
        Ok(self.left().leq(&x.a, &y.a)? && self.right().leq(&x.b, &y.b)?)
    }

    fn way_below(&self, x: &Self::Elem, y: &Self::Elem) -> Result<bool> {
        Ok(self.left().way_below(&x.a, &y.a)? && self.right().way_below(&x.b, &y.b)?)
    }

    /// `b_k` is the approximant of `b`, and `a_k` the lift of `a` over `ψ(b_k)`.
    fn approximant(&self, x: &Self::Elem, k: u64) -> Self::Elem {
        let b = self.right().approximant(&x.b, k);
        let a = match self.psi.apply(&b) {
            Ok(t) => self.phi.lift_approximant(&x.a, &t, k),
            Err(_) => self.left().zero(),
        };
        PbElem { a, b }
    }

    fn nat_scale(&self, n: ExtNat, x: &Self::Elem) -> Self::Elem {
        PbElem {
            a: self.left().nat_scale(n, &x.a),
            b: self.right().nat_scale(n, &x.b),
        }
    }

    fn sample(&self, rng: &mut CaseRng) -> Self::Elem {
        let b = self.right().sample(rng);
        let a = match self.psi.apply(&b) {
            Ok(t) => self.phi.sample_fiber(&t, rng),
            Err(_) => return self.zero(),
        };
        PbElem { a, b }
    }

    /// `pb(<a> | <b>)`.
    fn parse(&self, literal: &str) -> Result<Self::Elem> {
        let body = literal
            .trim()
            .strip_prefix("pb(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| CuError::parse(format!("expected `pb(… | …)`, got `{literal}`")))?;
        let parts = split_top_level(body, '|');
        if parts.len() != 2 {
            return Err(CuError::parse(format!("expected two legs in `{literal}`")));
        }
        let a = self.left().parse(parts[0].trim())?;
        let b = self.right().parse(parts[1].trim())?;
        let x = PbElem { a, b };
        self.check(&x).map_err(|e| match e {
            CuError::ConstraintViolation(_) => e,
            other => CuError::parse(other.to_string()),
        })?;
        Ok(x)
    }

    fn format(&self, x: &Self::Elem) -> String {
        format!("pb({} | {})", self.left().format(&x.a), self.right().format(&x.b))
    }
}

/// `(a, b) ↦ a`.
#[derive(Clone)]
pub struct ProjectA<P, Q>(pub Pullback<P, Q>);

/// `(a, b) ↦ b`.
#[derive(Clone)]
pub struct ProjectB<P, Q>(pub Pullback<P, Q>);

impl<P, Q> CuMorphism for ProjectA<P, Q>
where
    P: LiftingMorphism,
    Q: CuMorphism<Target = P::Target>,
{
    type Source = Pullback<P, Q>;
    type Target = P::Source;

    fn source(&self) -> &Self::Source {
        &self.0
    }
    fn target(&self) -> &Self::Target {
        self.0.left()
    }
    fn apply(&self, x: &Elem<Self::Source>) -> Result<Elem<Self::Target>> {
        Ok(x.a.clone())
    }
}

impl<P, Q> CuMorphism for ProjectB<P, Q>
where
    P: LiftingMorphism,
    Q: CuMorphism<Target = P::Target>,
{
    type Source = Pullback<P, Q>;
    type Target = Q::Source;

    fn source(&self) -> &Self::Source {
        &self.0
    }
    fn target(&self) -> &Self::Target {
        self.0.right()
    }
    fn apply(&self, x: &Elem<Self::Source>) -> Result<Elem<Self::Target>> {
        Ok(x.b.clone())
    }
}

/// An action on the second leg, fixing the first. It preserves the
/// constraint exactly when `ψ` is invariant under it.
#[derive(Debug, Clone)]
pub struct OnSecondLeg<A>(pub A);

impl<P, Q, A> GroupAction<Pullback<P, Q>> for OnSecondLeg<A>
where
    P: LiftingMorphism,
    Q: CuMorphism<Target = P::Target>,
    A: GroupAction<Q::Source>,
{
    fn name(&self) -> String {
        format!("right[{}]", self.0.name())
    }
    fn order(&self) -> usize {
        self.0.order()
    }
    fn apply(&self, s: &Pullback<P, Q>, g: usize, x: &Elem<Pullback<P, Q>>) -> Result<Elem<Pullback<P, Q>>> {
        Ok(PbElem {
            a: x.a.clone(),
            b: self.0.apply(s.right(), g, &x.b)?,
        })
    }
    fn generators(&self) -> Vec<usize> {
        self.0.generators()
    }
}
