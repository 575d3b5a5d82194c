//! Extended natural numbers `{0, 1, 2, …, ∞}`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use rand::Rng;

use crate::error::{CuError, Result};
use crate::literal::strip_prefix;
use crate::semigroup::{AtomSearch, CaseRng, CuSemigroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtNat {
    Fin(u64),
    Inf,
}

impl ExtNat {
    pub const ZERO: ExtNat = ExtNat::Fin(0);
    pub const ONE: ExtNat = ExtNat::Fin(1);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Fin(_))
    }

    pub fn is_zero(self) -> bool {
        self == ExtNat::ZERO
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Fin(n) => Some(n),
            ExtNat::Inf => None,
        }
    }

    /// `min(self, k)`, the `k`-th truncation.
    pub fn truncate(self, k: u64) -> ExtNat {
        match self {
            ExtNat::Fin(n) => ExtNat::Fin(n.min(k)),
            ExtNat::Inf => ExtNat::Fin(k),
        }
    }
}

impl Default for ExtNat {
    fn default() -> Self {
        ExtNat::ZERO
    }
}

impl From<u64> for ExtNat {
    fn from(n: u64) -> Self {
        ExtNat::Fin(n)
    }
}

impl PartialOrd for ExtNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtNat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtNat::Fin(a), ExtNat::Fin(b)) => a.cmp(b),
            (ExtNat::Fin(_), ExtNat::Inf) => Ordering::Less,
            (ExtNat::Inf, ExtNat::Fin(_)) => Ordering::Greater,
            (ExtNat::Inf, ExtNat::Inf) => Ordering::Equal,
        }
    }
}

impl Add for ExtNat {
    type Output = ExtNat;

    fn add(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            (ExtNat::Fin(a), ExtNat::Fin(b)) => {
                ExtNat::Fin(a.checked_add(b).expect("extended natural overflow"))
            }
            _ => ExtNat::Inf,
        }
    }
}

/// `∞·0 = 0`, `∞·n = ∞` for `n > 0`.
impl Mul for ExtNat {
    type Output = ExtNat;

    fn mul(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            (ExtNat::Fin(0), _) | (_, ExtNat::Fin(0)) => ExtNat::ZERO,
            (ExtNat::Fin(a), ExtNat::Fin(b)) => {
                ExtNat::Fin(a.checked_mul(b).expect("extended natural overflow"))
            }
            _ => ExtNat::Inf,
        }
    }
}

impl std::iter::Sum for ExtNat {
    fn sum<I: Iterator<Item = ExtNat>>(iter: I) -> Self {
        iter.fold(ExtNat::ZERO, Add::add)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Fin(n) => write!(f, "{n}"),
            ExtNat::Inf => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtNat {
    type Err = CuError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" || s == "∞" {
            return Ok(ExtNat::Inf);
        }
        s.parse::<u64>()
            .map(ExtNat::Fin)
            .map_err(|_| CuError::parse(format!("expected a natural number or `inf`, got `{s}`")))
    }
}

pub(crate) fn sample_ext_nat(rng: &mut CaseRng) -> ExtNat {
    if rng.random_ratio(1, 6) {
        ExtNat::Inf
    } else {
        ExtNat::Fin(rng.random_range(0..=6))
    }
}

/// The Cu-semigroup of extended naturals. `n ≪ m` iff `n` is finite and `n ≤ m`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExtNats;

impl CuSemigroup for ExtNats {
    type Elem = ExtNat;

    fn name(&self) -> String {
        "nat".into()
    }

    fn zero(&self) -> ExtNat {
        ExtNat::ZERO
    }

    fn check(&self, _: &ExtNat) -> Result<()> {
        Ok(())
    }

    fn add(&self, x: &ExtNat, y: &ExtNat) -> Result<ExtNat> {
        Ok(*x + *y)
    }

    fn leq(&self, x: &ExtNat, y: &ExtNat) -> Result<bool> {
        Ok(x <= y)
    }

    fn way_below(&self, x: &ExtNat, y: &ExtNat) -> Result<bool> {
        Ok(x.is_finite() && x <= y)
    }

    fn approximant(&self, x: &ExtNat, k: u64) -> ExtNat {
        match x {
            ExtNat::Fin(_) => *x,
            ExtNat::Inf => ExtNat::Fin(k),
        }
    }

    fn nat_scale(&self, n: ExtNat, x: &ExtNat) -> ExtNat {
        n * *x
    }

    fn sample(&self, rng: &mut CaseRng) -> ExtNat {
        sample_ext_nat(rng)
    }

    fn parse(&self, literal: &str) -> Result<ExtNat> {
        strip_prefix(literal, "nat:")?.parse()
    }

    fn format(&self, x: &ExtNat) -> String {
        format!("nat:{x}")
    }

    fn atoms(&self) -> AtomSearch<ExtNat> {
        AtomSearch::Candidates(vec![ExtNat::Fin(1), ExtNat::Fin(2)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::Chain;
    use ExtNat::{Fin, Inf};

    #[test]
    fn arithmetic() {
        assert_eq!(Fin(2) + Fin(3), Fin(5));
        assert_eq!(Inf + Fin(7), Inf);
        assert_eq!(Inf * Fin(0), Fin(0));
        assert_eq!(Inf * Fin(2), Inf);
        assert_eq!(ExtNats.nat_scale(Fin(3), &Fin(2)), Fin(6));
        assert_eq!(ExtNats.nat_scale(Inf, &Fin(0)), Fin(0));
        assert_eq!(ExtNats.nat_scale(Inf, &Fin(2)), Inf);
    }

    #[test]
    fn order_and_way_below() {
        let s = ExtNats;
        assert!(s.leq(&Fin(3), &Inf).unwrap());
        assert!(!s.leq(&Inf, &Fin(3)).unwrap());
        assert!(s.way_below(&Fin(5), &Inf).unwrap());
        assert!(!s.way_below(&Inf, &Inf).unwrap());
        for x in [Fin(0), Fin(4), Inf] {
            assert!(s.way_below(&Fin(0), &x).unwrap());
        }
    }

    #[test]
    fn approximants_and_sups() {
        let s = ExtNats;
        for k in 0..10 {
            assert_eq!(s.approximant(&Inf, k), Fin(k));
            assert_eq!(s.approximant(&Fin(5), k), Fin(5));
        }
        assert_eq!(s.sup_chain(&Chain::Finite(vec![Fin(1), Fin(2), Fin(3)])).unwrap(), Fin(3));
        assert_eq!(s.sup_chain(&Chain::Approximants(Inf)).unwrap(), Inf);
        assert_eq!(
            s.sup_chain(&Chain::Finite(vec![Fin(2), Fin(1)])),
            Err(CuError::NotAscending(1))
        );
        let seq = Chain::Sequence(std::sync::Arc::new(Fin));
        assert!(matches!(s.sup_chain(&seq), Err(CuError::UnsupportedChain(_))));
    }

    #[test]
    fn literals() {
        let s = ExtNats;
        assert_eq!(s.parse("nat:inf").unwrap(), Inf);
        assert_eq!(s.parse("nat:12").unwrap(), Fin(12));
        assert!(s.parse("rat:1").is_err());
        assert_eq!(s.format(&Inf), "nat:inf");
    }
}
