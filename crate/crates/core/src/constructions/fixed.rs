//! Fixed-point subsemigroups `S^γ` and `S^γ_ℕ` of a finite group action.

use rand::SeedableRng;

use crate::constructions::action::{verify_automorphisms, GroupAction};
use crate::error::{CuError, Result};
use crate::ext_nat::ExtNat;
use crate::semigroup::{CaseRng, CuSemigroup};

/// Approximant indices checked for invariance by the `S^γ_ℕ` predicate.
pub const APPROXIMANT_DEPTH: u64 = 8;

/// `S^γ_ℕ`: invariant elements whose canonical approximants are invariant,
/// with the structure inherited from `S`.
#[derive(Debug, Clone)]
pub struct FixedPoint<S, A> {
    base: S,
    action: A,
}

/// Builds the fixed-point data after spot-checking that the action is by
/// Cu-automorphisms.
pub fn fixed_point_nc<S, A>(base: S, action: A) -> Result<FixedPoint<S, A>>
where
    S: CuSemigroup,
    A: GroupAction<S>,
{
    let mut rng = CaseRng::seed_from_u64(0);
    verify_automorphisms(&base, &action, &mut rng, 32)?;
    Ok(FixedPoint { base, action })
}

impl<S: CuSemigroup, A: GroupAction<S>> FixedPoint<S, A> {
    pub fn base(&self) -> &S {
        &self.base
    }

    pub fn action(&self) -> &A {
        &self.action
    }

    /// Membership in `S^γ`.
    pub fn is_invariant(&self, x: &S::Elem) -> Result<bool> {
        for g in self.action.generators() {
            if self.action.apply(&self.base, g, x)? != *x {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Membership in `S^γ_ℕ`.
    pub fn is_member(&self, x: &S::Elem) -> Result<bool> {
        if !self.is_invariant(x)? {
            return Ok(false);
        }
        for k in 0..APPROXIMANT_DEPTH {
            if !self.is_invariant(&self.base.approximant(x, k))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Σ_g γ_g(x)`.
    pub fn orbit_sum(&self, x: &S::Elem) -> Result<S::Elem> {
        let mut acc = self.base.zero();
        for g in 0..self.action.order() {
            acc = self.base.add(&acc, &self.action.apply(&self.base, g, x)?)?;
        }
        Ok(acc)
    }
}

impl<S: CuSemigroup, A: GroupAction<S>> CuSemigroup for FixedPoint<S, A> {
    type Elem = S::Elem;

    fn name(&self) -> String {
        format!("fix[{};{}]", self.base.name(), self.action.name())
    }

    fn zero(&self) -> S::Elem {
        self.base.zero()
    }

    fn check(&self, x: &S::Elem) -> Result<()> {
        self.base.check(x)?;
        if !self.is_member(x)? {
            return Err(CuError::InvalidElement(format!(
                "{} is not in the fixed-point subsemigroup of {}",
                self.base.format(x),
                self.action.name()
            )));
        }
        Ok(())
    }

    fn add(&self, x: &S::Elem, y: &S::Elem) -> Result<S::Elem> {
        self.base.add(x, y)
    }

    fn leq(&self, x: &S::Elem, y: &S::Elem) -> Result<bool> {
        self.base.leq(x, y)
    }

    fn way_below(&self, x: &S::Elem, y: &S::Elem) -> Result<bool> {
        self.base.way_below(x, y)
    }

    fn approximant(&self, x: &S::Elem, k: u64) -> S::Elem {
        self.base.approximant(x, k)
    }

    fn nat_scale(&self, n: ExtNat, x: &S::Elem) -> S::Elem {
        self.base.nat_scale(n, x)
    }

    fn sample(&self, rng: &mut CaseRng) -> S::Elem {
        if let Some(x) = self.action.sample_invariant(&self.base, rng) {
            return x;
        }
        let x = self.base.sample(rng);
        self.orbit_sum(&x).unwrap_or_else(|_| self.base.zero())
    }

    fn parse(&self, literal: &str) -> Result<S::Elem> {
        let x = self.base.parse(literal)?;
        self.check(&x).map_err(|e| CuError::parse(e.to_string()))?;
        Ok(x)
    }

    fn format(&self, x: &S::Elem) -> String {
        self.base.format(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concrete::{FnElem, FnSemigroup, StepLsc};
    use crate::constructions::action::{IndexTranslation, Rotation, TrivialAction};
    use crate::ext_nat::ExtNats;
    use crate::literal::rat;
    use ExtNat::{Fin, Inf};

    #[test]
    fn trivial_action_fixes_everything() {
        let fp = fixed_point_nc(ExtNats, TrivialAction { order: 3 }).unwrap();
        for x in [Fin(0), Fin(4), Inf] {
            assert!(fp.is_member(&x).unwrap());
        }
    }

    #[test]
    fn half_turn_on_step_functions() {
        let steps = StepLsc::new(ExtNats);
        let fp = fixed_point_nc(steps.clone(), Rotation { n: 2 }).unwrap();
        let two_arc = steps.make(vec![rat(0, 1), rat(1, 2)], vec![Fin(1), Fin(2)], vec![Fin(0), Fin(1)]).unwrap();
        assert!(!fp.is_member(&two_arc).unwrap());
        let four_arc = steps
            .make(
                vec![rat(0, 1), rat(1, 4), rat(1, 2), rat(3, 4)],
                vec![Fin(1), Fin(2), Fin(1), Fin(2)],
                vec![Fin(0), Fin(1), Fin(0), Fin(1)],
            )
            .unwrap();
        assert!(fp.is_member(&four_arc).unwrap());
        assert!(fp.check(&two_arc).is_err());
    }

    #[test]
    fn swap_fixes_the_diagonal() {
        let pairs = FnSemigroup::over_group(ExtNats, &[2]).unwrap();
        let fp = fixed_point_nc(pairs, IndexTranslation::new(&[2])).unwrap();
        assert!(fp.is_member(&FnElem(vec![Fin(3), Fin(3)])).unwrap());
        assert!(fp.is_member(&FnElem(vec![Inf, Inf])).unwrap());
        assert!(!fp.is_member(&FnElem(vec![Fin(3), Fin(4)])).unwrap());
    }
}
