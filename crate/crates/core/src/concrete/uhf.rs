//! `Z≥0[1/n] ⊔ (0, ∞]`, the Cuntz semigroup of a UHF algebra of type `n^∞`.

use std::fmt;

use num::{BigInt, Signed, Zero};
use rand::Rng;

use crate::error::{CuError, Result};
use crate::ext_nat::ExtNat;
use crate::ext_rat::{sample_positive_rational, shrink, ExtRat};
use crate::literal::{denominator_divides_power, format_rational, parse_nonneg_rational, rat, Rational};
use crate::semigroup::{AtomSearch, CaseRng, CuSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum UhfElem {
    /// Class of a projection, `q ∈ Z≥0[1/n]`.
    Compact(Rational),
    /// Soft class of rank `t > 0`.
    Soft(ExtRat),
}

impl UhfElem {
    pub fn zero() -> Self {
        UhfElem::Compact(Rational::zero())
    }

    pub fn compact(p: i64, q: i64) -> Self {
        UhfElem::Compact(rat(p, q))
    }

    pub fn soft(p: i64, q: i64) -> Self {
        UhfElem::Soft(ExtRat::ratio(p, q))
    }

    pub fn soft_inf() -> Self {
        UhfElem::Soft(ExtRat::Inf)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, UhfElem::Compact(q) if q.is_zero())
    }

    /// The rank `q` or `t`.
    pub fn value(&self) -> ExtRat {
        match self {
            UhfElem::Compact(q) => ExtRat::Fin(q.clone()),
            UhfElem::Soft(t) => t.clone(),
        }
    }
}

impl fmt::Display for UhfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UhfElem::Compact(q) => write!(f, "compact:{}", format_rational(q)),
            UhfElem::Soft(t) => write!(f, "soft:{t}"),
        }
    }
}

/// `UhfCu(n)`. Order: compacts and softs are each ordered by value,
/// `Soft(t) ≤ Compact(q)` iff `t ≤ q`, and `Compact(q) ≤ Soft(t)` iff `q < t`
/// (or `q = 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UhfCu {
    n: u64,
}

impl UhfCu {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(CuError::InvalidElement(format!("UHF type needs n ≥ 2, got {n}")));
        }
        Ok(UhfCu { n })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `ExtNat → UhfCu(n)`: `k ↦ Compact(k)`, `∞ ↦ Soft(∞)`.
    pub fn embed(&self, k: ExtNat) -> UhfElem {
        match k {
            ExtNat::Fin(k) => UhfElem::Compact(Rational::from_integer(BigInt::from(k))),
            ExtNat::Inf => UhfElem::soft_inf(),
        }
    }

    fn leq_values(x: &UhfElem, y: &UhfElem) -> bool {
        use UhfElem::*;
        match (x, y) {
            (Compact(a), Compact(b)) => a <= b,
            (Soft(s), Soft(t)) => s <= t,
            (Soft(t), Compact(q)) => match t {
                ExtRat::Fin(t) => t <= q,
                ExtRat::Inf => false,
            },
            (Compact(q), Soft(t)) => q.is_zero() || ExtRat::Fin(q.clone()) < *t,
        }
    }
}

impl CuSemigroup for UhfCu {
    type Elem = UhfElem;

    fn name(&self) -> String {
        format!("uhf{}", self.n)
    }

    fn zero(&self) -> UhfElem {
        UhfElem::zero()
    }

    fn check(&self, x: &UhfElem) -> Result<()> {
        match x {
            UhfElem::Compact(q) if q.is_negative() => Err(CuError::InvalidElement(format!("negative rank {q}"))),
            UhfElem::Compact(q) if !denominator_divides_power(q, self.n) => Err(CuError::InvalidElement(format!(
                "compact rank {} is not in Z[1/{}]",
                format_rational(q),
                self.n
            ))),
            UhfElem::Soft(t) if t.is_zero() || matches!(t, ExtRat::Fin(q) if q.is_negative()) => {
                Err(CuError::InvalidElement("soft rank must be positive".into()))
            }
            _ => Ok(()),
        }
    }

    fn add(&self, x: &UhfElem, y: &UhfElem) -> Result<UhfElem> {
        Ok(match (x, y) {
            (UhfElem::Compact(a), UhfElem::Compact(b)) => UhfElem::Compact(a + b),
            _ => UhfElem::Soft(&x.value() + &y.value()),
        })
    }

    fn leq(&self, x: &UhfElem, y: &UhfElem) -> Result<bool> {
        Ok(UhfCu::leq_values(x, y))
    }

    fn way_below(&self, x: &UhfElem, y: &UhfElem) -> Result<bool> {
        let leq = UhfCu::leq_values(x, y);
        Ok(match (x, y) {
            _ if x.is_zero() => true,
            (UhfElem::Compact(_), _) | (_, UhfElem::Compact(_)) => leq,
            (UhfElem::Soft(s), UhfElem::Soft(t)) => s.is_finite() && s < t,
        })
    }

    fn approximant(&self, x: &UhfElem, k: u64) -> UhfElem {
        match x {
            UhfElem::Compact(_) => x.clone(),
            UhfElem::Soft(ExtRat::Fin(t)) => UhfElem::Soft(ExtRat::Fin(shrink(t, k))),
            UhfElem::Soft(ExtRat::Inf) => UhfElem::Soft(ExtRat::integer(k.saturating_add(1))),
        }
    }

    fn nat_scale(&self, n: ExtNat, x: &UhfElem) -> UhfElem {
        if n.is_zero() || x.is_zero() {
            return UhfElem::zero();
        }
        match (n, x) {
            (ExtNat::Fin(n), UhfElem::Compact(q)) => UhfElem::Compact(q * Rational::from_integer(BigInt::from(n))),
            (ExtNat::Inf, _) => UhfElem::soft_inf(),
            (n, UhfElem::Soft(t)) => UhfElem::Soft(t.scale(n)),
        }
    }

    fn sample(&self, rng: &mut CaseRng) -> UhfElem {
        match rng.random_range(0..12) {
            0 => UhfElem::zero(),
            1 => UhfElem::soft_inf(),
            2..=6 => {
                let denom = self.n.pow(rng.random_range(0..=3));
                let p = rng.random_range(1..=3 * denom);
                UhfElem::Compact(Rational::new(BigInt::from(p), BigInt::from(denom)))
            }
            _ => {
                // soft ranks also hit values shared with compacts half the time
                if rng.random_bool(0.5) {
                    let denom = self.n.pow(rng.random_range(0..=2));
                    let p = rng.random_range(1..=3 * denom);
                    UhfElem::Soft(ExtRat::Fin(Rational::new(BigInt::from(p), BigInt::from(denom))))
                } else {
                    UhfElem::Soft(ExtRat::Fin(sample_positive_rational(rng)))
                }
            }
        }
    }

    fn parse(&self, literal: &str) -> Result<UhfElem> {
        let prefix = format!("uhf{}:", self.n);
        let body = literal
            .trim()
            .strip_prefix(&prefix)
            .ok_or_else(|| CuError::parse(format!("expected `{prefix}…`, got `{literal}`")))?;
        let x = if let Some(v) = body.strip_prefix("compact:") {
            UhfElem::Compact(parse_nonneg_rational(v)?)
        } else if let Some(v) = body.strip_prefix("soft:") {
            UhfElem::Soft(ExtRat::parse_value(v)?)
        } else {
            return Err(CuError::parse(format!("expected `compact:` or `soft:` in `{literal}`")));
        };
        self.check(&x).map_err(|e| CuError::parse(e.to_string()))?;
        Ok(x)
    }

    fn format(&self, x: &UhfElem) -> String {
        format!("uhf{}:{x}", self.n)
    }

    fn atoms(&self) -> AtomSearch<UhfElem> {
        let n = self.n as i64;
        let pairs = [(1, 1), (1, n), (3, n * n), (1, n * n * n)]
            .into_iter()
            .map(|(p, q)| (UhfElem::compact(p, q), UhfElem::compact(p, q * n)))
            .collect();
        AtomSearch::Divisible(pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use UhfElem as U;

    #[test]
    fn order_convention() {
        let s = UhfCu::new(2).unwrap();
        assert!(s.leq(&U::compact(1, 2), &U::compact(3, 4)).unwrap());
        assert!(s.leq(&U::soft(1, 1), &U::compact(1, 1)).unwrap());
        assert!(!s.leq(&U::compact(1, 1), &U::soft(1, 1)).unwrap());
        assert!(s.leq(&U::zero(), &U::soft(1, 3)).unwrap());
    }

    #[test]
    fn way_below_table() {
        let s = UhfCu::new(2).unwrap();
        assert!(s.way_below(&U::compact(1, 2), &U::soft(3, 4)).unwrap());
        assert!(!s.way_below(&U::soft(1, 1), &U::soft(1, 1)).unwrap());
        assert!(s.way_below(&U::soft(1, 1), &U::compact(1, 1)).unwrap());
        assert!(!s.way_below(&U::soft_inf(), &U::soft_inf()).unwrap());
        assert!(s.way_below(&U::compact(1, 1), &U::compact(1, 1)).unwrap());
    }

    #[test]
    fn arithmetic() {
        let s = UhfCu::new(3).unwrap();
        assert_eq!(s.add(&U::compact(1, 3), &U::soft(1, 2)).unwrap(), U::soft(5, 6));
        assert_eq!(s.nat_scale(ExtNat::Inf, &U::compact(1, 9)), U::soft_inf());
        assert_eq!(s.nat_scale(ExtNat::Fin(3), &U::compact(1, 9)), U::compact(1, 3));
        assert_eq!(s.approximant(&U::soft_inf(), 4), U::soft(5, 1));
    }

    #[test]
    fn literals() {
        let s = UhfCu::new(2).unwrap();
        assert_eq!(s.parse("uhf2:compact:1/2").unwrap(), U::compact(1, 2));
        assert_eq!(s.parse("uhf2:soft:inf").unwrap(), U::soft_inf());
        assert!(s.parse("uhf2:compact:1/3").is_err());
        assert!(s.parse("uhf2:soft:0").is_err());
        assert!(s.parse("uhf3:soft:1").is_err());
        assert_eq!(s.format(&U::soft(2, 3)), "uhf2:soft:2/3");
    }

    /// Exhaustive interpolation on `{k/8 : k ≤ 16}` compacts and softs.
    #[test]
    fn interpolation_on_grid() {
        let s = UhfCu::new(2).unwrap();
        let mut grid: Vec<U> = (0..=16).map(|k| U::compact(k, 8)).collect();
        grid.extend((1..=16).map(|k| U::soft(k, 8)));
        for x in &grid {
            for z in &grid {
                if !s.way_below(x, z).unwrap() {
                    continue;
                }
                let found = grid
                    .iter()
                    .any(|y| s.way_below(x, y).unwrap() && s.way_below(y, z).unwrap());
                assert!(found, "no interpolant for {x} ≪ {z}");
            }
        }
    }
}
