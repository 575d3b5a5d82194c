//! Functions from a finite index set into a Cu-semigroup, with the
//! componentwise structure. Indexed by `Ĝ` this realizes `Cu(G) ⊗ S`, and
//! indexed by `Ẑ_n` it is `C(Ẑ_n, S)`.

use std::fmt;

use crate::error::{CuError, Result};
use crate::ext_nat::ExtNat;
use crate::literal::{split_list, strip_prefix};
use crate::rep::group::{digits, undigits};
use crate::rep::CuGElem;
use crate::semigroup::{AtomSearch, CaseRng, CuSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FnElem<E>(pub Vec<E>);

impl<E> FnElem<E> {
    pub fn values(&self) -> &[E] {
        &self.0
    }
}

impl<E: fmt::Display> fmt::Display for FnElem<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(E::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `S^K`. When `K` is a product of cyclic groups (in mixed radix, first
/// factor most significant) it also supports translation.
#[derive(Debug, Clone, PartialEq)]
pub struct FnSemigroup<S> {
    base: S,
    size: usize,
    orders: Option<Vec<u64>>,
}

impl<S: CuSemigroup> FnSemigroup<S> {
    /// `S^K` for a plain index set of the given size.
    pub fn new(base: S, size: usize) -> Result<Self> {
        if size == 0 {
            return Err(CuError::InvalidElement("index set must be nonempty".into()));
        }
        Ok(FnSemigroup { base, size, orders: None })
    }

    /// `S^K` for `K = Z_{n₁} × … × Z_{n_r}`.
    pub fn over_group(base: S, orders: &[u64]) -> Result<Self> {
        if orders.is_empty() || orders.contains(&0) {
            return Err(CuError::InvalidElement("cyclic orders must be positive".into()));
        }
        let size = orders.iter().product::<u64>() as usize;
        Ok(FnSemigroup {
            base,
            size,
            orders: Some(orders.to_vec()),
        })
    }

    pub fn base(&self) -> &S {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn orders(&self) -> Option<&[u64]> {
        self.orders.as_deref()
    }

    pub fn make(&self, values: Vec<S::Elem>) -> Result<FnElem<S::Elem>> {
        let h = FnElem(values);
        self.check(&h)?;
        Ok(h)
    }

    /// `(τ·h)(η) = h(τ + η)`.
    pub fn translate(&self, tau: usize, h: &FnElem<S::Elem>) -> Result<FnElem<S::Elem>> {
        let orders = self
            .orders
            .as_ref()
            .ok_or_else(|| CuError::Unsupported("index set has no group structure".into()))?;
        if tau >= self.size {
            return Err(CuError::InvalidElement(format!("translation {tau} outside the index group")));
        }
        let t = digits(tau, orders);
        let values = (0..self.size)
            .map(|eta| {
                let e = digits(eta, orders);
                let sum: Vec<u64> = t.iter().zip(&e).zip(orders).map(|((a, b), m)| (a + b) % m).collect();
                h.0[undigits(&sum, orders)].clone()
            })
            .collect();
        Ok(FnElem(values))
    }

    /// `([μ]·h)(π) = m_π(μ)·h(π)` for `h` indexed by `Ĝ`.
    pub fn tensor_action(&self, mu: &CuGElem, h: &FnElem<S::Elem>) -> Result<FnElem<S::Elem>> {
        if mu.mult().len() != self.size || h.0.len() != self.size {
            return Err(CuError::mismatch(format!(
                "action of a {}-irrep group on functions over {} points",
                mu.mult().len(),
                self.size
            )));
        }
        Ok(FnElem(
            mu.mult().iter().zip(&h.0).map(|(&m, x)| self.base.nat_scale(m, x)).collect(),
        ))
    }

    /// The function that is `x` at `i` and zero elsewhere.
    pub fn point_mass(&self, i: usize, x: S::Elem) -> FnElem<S::Elem> {
        let mut v = vec![self.base.zero(); self.size];
        v[i] = x;
        FnElem(v)
    }

    fn each2(&self, x: &FnElem<S::Elem>, y: &FnElem<S::Elem>, op: impl Fn(&S::Elem, &S::Elem) -> Result<bool>) -> Result<bool> {
        self.check_len(x)?;
        self.check_len(y)?;
        for (a, b) in x.0.iter().zip(&y.0) {
            if !op(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_len(&self, x: &FnElem<S::Elem>) -> Result<()> {
        if x.0.len() != self.size {
            return Err(CuError::mismatch(format!("function with {} values on {} points", x.0.len(), self.size)));
        }
        Ok(())
    }
}

impl<S: CuSemigroup> CuSemigroup for FnSemigroup<S> {
    type Elem = FnElem<S::Elem>;

    fn name(&self) -> String {
        match &self.orders {
            Some(o) if o.len() == 1 => format!("fn[{};z{}]", self.base.name(), o[0]),
            Some(o) => {
                let parts: Vec<String> = o.iter().map(|n| format!("z{n}")).collect();
                format!("fn[{};{}]", self.base.name(), parts.join("x"))
            }
            None => format!("fn[{};{}]", self.base.name(), self.size),
        }
    }

    fn zero(&self) -> Self::Elem {
        FnElem(vec![self.base.zero(); self.size])
    }

    fn check(&self, x: &Self::Elem) -> Result<()> {
        self.check_len(x)?;
        x.0.iter().try_for_each(|v| self.base.check(v))
    }

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(FnElem(
            x.0.iter().zip(&y.0).map(|(a, b)| self.base.add(a, b)).collect::<Result<_>>()?,
        ))
    }

    fn leq(&self, x: &Self::Elem, y: &Self::Elem) -> Result<bool> {
        self.each2(x, y, |a, b| self.base.leq(a, b))
    }

    fn way_below(&self, x: &Self::Elem, y: &Self::Elem) -> Result<bool> {
        self.each2(x, y, |a, b| self.base.way_below(a, b))
    }

    fn approximant(&self, x: &Self::Elem, k: u64) -> Self::Elem {
        FnElem(x.0.iter().map(|v| self.base.approximant(v, k)).collect())
    }

    fn nat_scale(&self, n: ExtNat, x: &Self::Elem) -> Self::Elem {
        FnElem(x.0.iter().map(|v| self.base.nat_scale(n, v)).collect())
    }

    fn sample(&self, rng: &mut CaseRng) -> Self::Elem {
        FnElem((0..self.size).map(|_| self.base.sample(rng)).collect())
    }

    fn parse(&self, literal: &str) -> Result<Self::Elem> {
        let values = split_list(strip_prefix(literal, "fn:")?)
            .into_iter()
            .map(|v| self.base.parse(v))
            .collect::<Result<Vec<_>>>()?;
        let h = FnElem(values);
        self.check(&h).map_err(|e| CuError::parse(e.to_string()))?;
        Ok(h)
    }

    fn format(&self, x: &Self::Elem) -> String {
        let parts: Vec<String> = x.0.iter().map(|v| self.base.format(v)).collect();
        format!("fn:{}", parts.join(","))
    }

    /// Minimal nonzero compacts of a product sit in a single coordinate.
    fn atoms(&self) -> AtomSearch<Self::Elem> {
        match self.base.atoms() {
            AtomSearch::Unsupported => AtomSearch::Unsupported,
            AtomSearch::Candidates(c) => AtomSearch::Candidates(
                (0..self.size)
                    .flat_map(|i| c.iter().map(move |a| (i, a.clone())))
                    .map(|(i, a)| self.point_mass(i, a))
                    .collect(),
            ),
            AtomSearch::Divisible(w) => AtomSearch::Divisible(
                w.into_iter()
                    .map(|(x, y)| (self.point_mass(0, x), self.point_mass(0, y)))
                    .collect(),
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext_nat::ExtNats;
    use crate::rep::load_group;
    use ExtNat::{Fin, Inf};

    #[test]
    fn translation() {
        let s = FnSemigroup::over_group(ExtNats, &[2]).unwrap();
        let h = FnElem(vec![Fin(3), Fin(5)]);
        assert_eq!(s.translate(0, &h).unwrap(), h);
        assert_eq!(s.translate(1, &h).unwrap(), FnElem(vec![Fin(5), Fin(3)]));
        let t = FnSemigroup::over_group(ExtNats, &[3]).unwrap();
        let h = FnElem(vec![Fin(1), Fin(2), Fin(3)]);
        assert_eq!(t.translate(1, &h).unwrap(), FnElem(vec![Fin(2), Fin(3), Fin(1)]));
        let mut x = h.clone();
        for _ in 0..3 {
            x = t.translate(1, &x).unwrap();
        }
        assert_eq!(x, h);
        assert!(FnSemigroup::new(ExtNats, 2).unwrap().translate(1, &FnElem(vec![Fin(0), Fin(0)])).is_err());
    }

    #[test]
    fn scaling_action() {
        let g = load_group("cyclic:2", None).unwrap();
        let s = FnSemigroup::over_group(ExtNats, &[2]).unwrap();
        let h = FnElem(vec![Fin(3), Fin(4)]);
        let mu = CuGElem::from_counts(&g, &[2, 0]).unwrap();
        assert_eq!(s.tensor_action(&mu, &h).unwrap(), FnElem(vec![Fin(6), Fin(0)]));
        let inf = CuGElem::new(&g, vec![Inf, Fin(1)]).unwrap();
        assert_eq!(s.tensor_action(&inf, &h).unwrap(), FnElem(vec![Inf, Fin(4)]));
    }

    #[test]
    fn literals() {
        let s = FnSemigroup::over_group(ExtNats, &[2]).unwrap();
        let h = s.parse("fn:nat:1,nat:inf").unwrap();
        assert_eq!(h, FnElem(vec![Fin(1), Inf]));
        assert_eq!(s.format(&h), "fn:nat:1,nat:inf");
        assert!(s.parse("fn:nat:1").unwrap_err().is_parse());
        assert_eq!(s.name(), "fn[nat;z2]");
    }
}
