//! Finite group actions by Cu-automorphisms.

use crate::concrete::{FnSemigroup, StepLsc};
use crate::error::{CuError, Result};
use crate::literal::rat;
use crate::semigroup::{CaseRng, CuSemigroup};

/// An action of a finite group with elements `0..order` (0 the identity).
pub trait GroupAction<S: CuSemigroup> {
    fn name(&self) -> String;

    fn order(&self) -> usize;

    fn apply(&self, s: &S, g: usize, x: &S::Elem) -> Result<S::Elem>;

    /// Elements whose fixed points are the fixed points of the whole group.
    fn generators(&self) -> Vec<usize> {
        (1..self.order()).collect()
    }

    /// A sampler of invariant elements, if the action has a better one
    /// than orbit sums.
    fn sample_invariant(&self, _s: &S, _rng: &mut CaseRng) -> Option<S::Elem> {
        None
    }
}

/// Every group element acts as the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrivialAction {
    pub order: usize,
}

impl<S: CuSemigroup> GroupAction<S> for TrivialAction {
    fn name(&self) -> String {
        format!("trivial{}", self.order)
    }
    fn order(&self) -> usize {
        self.order
    }
    fn apply(&self, _s: &S, _g: usize, x: &S::Elem) -> Result<S::Elem> {
        Ok(x.clone())
    }
    fn generators(&self) -> Vec<usize> {
        Vec::new()
    }
}

/// `Z_n` acting on step functions by `γ_k(f)(z) = f(ω_n^k z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rotation {
    pub n: u64,
}

impl<B: CuSemigroup> GroupAction<StepLsc<B>> for Rotation {
    fn name(&self) -> String {
        format!("rot{}", self.n)
    }
    fn order(&self) -> usize {
        self.n as usize
    }
    fn apply(&self, s: &StepLsc<B>, g: usize, f: &<StepLsc<B> as CuSemigroup>::Elem) -> Result<<StepLsc<B> as CuSemigroup>::Elem> {
        if g >= self.n as usize {
            return Err(CuError::InvalidElement(format!("rotation {g} outside Z{}", self.n)));
        }
        Ok(s.rotate(f, &rat(g as i64, self.n as i64)))
    }
    fn generators(&self) -> Vec<usize> {
        vec![1]
    }
    fn sample_invariant(&self, s: &StepLsc<B>, rng: &mut CaseRng) -> Option<<StepLsc<B> as CuSemigroup>::Elem> {
        Some(s.sample_periodic(rng, self.n, false))
    }
}

/// The index group `Z_{n₁} × … × Z_{n_r}` of a function semigroup acting by
/// `(τ·h)(η) = h(τ + η)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexTranslation {
    orders: Vec<u64>,
}

impl IndexTranslation {
    pub fn new(orders: &[u64]) -> Self {
        IndexTranslation { orders: orders.to_vec() }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }
}

impl<B: CuSemigroup> GroupAction<FnSemigroup<B>> for IndexTranslation {
    fn name(&self) -> String {
        let parts: Vec<String> = self.orders.iter().map(|n| format!("z{n}")).collect();
        format!("translate[{}]", parts.join("x"))
    }
    fn order(&self) -> usize {
        self.orders.iter().product::<u64>() as usize
    }
    fn apply(&self, s: &FnSemigroup<B>, g: usize, h: &<FnSemigroup<B> as CuSemigroup>::Elem) -> Result<<FnSemigroup<B> as CuSemigroup>::Elem> {
        if s.orders() != Some(&self.orders[..]) {
            return Err(CuError::mismatch("translation group differs from the index group"));
        }
        s.translate(g, h)
    }
    /// The unit vectors of the mixed radix.
    fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut stride = 1usize;
        for &n in self.orders.iter().rev() {
            gens.push(stride);
            stride *= n as usize;
        }
        gens
    }
}

/// Spot-checks that every generator acts by a Cu-automorphism of order
/// dividing the group order: it preserves zero, sums, `≤` and `≪` in both
/// directions and the canonical form, and its `order`-th power is the
/// identity.
pub fn verify_automorphisms<S, A>(s: &S, action: &A, rng: &mut CaseRng, cases: usize) -> Result<()>
where
    S: CuSemigroup,
    A: GroupAction<S>,
{
    let bad = |g: usize, what: &str| CuError::InvalidAction(format!("{}: element {g} {what}", action.name()));
    for g in action.generators() {
        if action.apply(s, g, &s.zero())? != s.zero() {
            return Err(bad(g, "does not fix zero"));
        }
        for _ in 0..cases {
            let (x, y) = (s.sample(rng), s.sample(rng));
            let (gx, gy) = (action.apply(s, g, &x)?, action.apply(s, g, &y)?);
            s.check(&gx).map_err(|_| bad(g, "leaves the canonical elements"))?;
            if action.apply(s, g, &s.add(&x, &y)?)? != s.add(&gx, &gy)? {
                return Err(bad(g, "is not additive"));
            }
            if s.leq(&x, &y)? != s.leq(&gx, &gy)? {
                return Err(bad(g, "does not preserve the order"));
            }
            if s.way_below(&x, &y)? != s.way_below(&gx, &gy)? {
                return Err(bad(g, "does not preserve way-below"));
            }
            let a = s.approximant(&x, 3);
            if s.way_below(&a, &x)? != s.way_below(&action.apply(s, g, &a)?, &gx)? {
                return Err(bad(g, "does not preserve way-below"));
            }
            let mut power = x.clone();
            for _ in 0..action.order() {
                power = action.apply(s, g, &power)?;
            }
            if power != x {
                return Err(bad(g, "has order not dividing the group order"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext_nat::ExtNats;
    use rand::SeedableRng;

    #[test]
    fn shipped_actions_are_automorphisms() {
        let mut rng = CaseRng::seed_from_u64(1);
        let steps = StepLsc::new(ExtNats);
        verify_automorphisms(&steps, &Rotation { n: 2 }, &mut rng, 50).unwrap();
        verify_automorphisms(&steps, &Rotation { n: 3 }, &mut rng, 50).unwrap();
        let fns = FnSemigroup::over_group(ExtNats, &[2, 2]).unwrap();
        let t = IndexTranslation::new(&[2, 2]);
        assert_eq!(GroupAction::<FnSemigroup<ExtNats>>::generators(&t), vec![1, 2]);
        verify_automorphisms(&fns, &t, &mut rng, 50).unwrap();
    }

    struct Doubling;

    impl GroupAction<ExtNats> for Doubling {
        fn name(&self) -> String {
            "double".into()
        }
        fn order(&self) -> usize {
            2
        }
        fn apply(&self, _s: &ExtNats, _g: usize, x: &crate::ExtNat) -> Result<crate::ExtNat> {
            Ok(*x + *x)
        }
    }

    #[test]
    fn rejects_non_automorphisms() {
        let mut rng = CaseRng::seed_from_u64(1);
        assert!(matches!(
            verify_automorphisms(&ExtNats, &Doubling, &mut rng, 50),
            Err(CuError::InvalidAction(_))
        ));
    }
}
