//! Extended nonnegative rationals, the exact stand-in for `[0, ∞]`.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, Signed, Zero};
use rand::Rng;

use crate::error::{CuError, Result};
use crate::ext_nat::ExtNat;
use crate::literal::{format_rational, int, parse_nonneg_rational, rat, strip_prefix, Rational};
use crate::semigroup::{AtomSearch, CaseRng, CuSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtRat {
    Fin(Rational),
    Inf,
}

impl ExtRat {
    pub fn new(q: Rational) -> Result<Self> {
        if q.is_negative() {
            return Err(CuError::InvalidElement(format!("negative value {q}")));
        }
        Ok(ExtRat::Fin(q))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        ExtRat::new(rat(p, q)).expect("nonnegative ratio")
    }

    pub fn integer(n: u64) -> Self {
        ExtRat::Fin(Rational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        ExtRat::Fin(Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtRat::Fin(q) if q.is_zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRat::Fin(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtRat::Fin(q) => Some(q),
            ExtRat::Inf => None,
        }
    }

    pub fn scale(&self, n: ExtNat) -> ExtRat {
        match (n, self) {
            (ExtNat::Fin(0), _) => ExtRat::zero(),
            (_, x) if x.is_zero() => ExtRat::zero(),
            (ExtNat::Fin(n), ExtRat::Fin(q)) => ExtRat::Fin(q * Rational::from_integer(BigInt::from(n))),
            _ => ExtRat::Inf,
        }
    }

    pub fn parse_value(s: &str) -> Result<ExtRat> {
        match s.trim() {
            "inf" | "∞" => Ok(ExtRat::Inf),
            v => Ok(ExtRat::Fin(parse_nonneg_rational(v)?)),
        }
    }
}

impl std::ops::Add for &ExtRat {
    type Output = ExtRat;

    fn add(self, rhs: &ExtRat) -> ExtRat {
        match (self, rhs) {
            (ExtRat::Fin(a), ExtRat::Fin(b)) => ExtRat::Fin(a + b),
            _ => ExtRat::Inf,
        }
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRat::Fin(a), ExtRat::Fin(b)) => a.cmp(b),
            (ExtRat::Fin(_), ExtRat::Inf) => Ordering::Less,
            (ExtRat::Inf, ExtRat::Fin(_)) => Ordering::Greater,
            (ExtRat::Inf, ExtRat::Inf) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Fin(q) => f.write_str(&format_rational(q)),
            ExtRat::Inf => f.write_str("inf"),
        }
    }
}

pub(crate) fn sample_positive_rational(rng: &mut CaseRng) -> Rational {
    const DENOMS: [i64; 6] = [1, 2, 3, 4, 6, 8];
    let q = DENOMS[rng.random_range(0..DENOMS.len())];
    let p = rng.random_range(1..=3 * q);
    rat(p, q)
}

/// `(k + 1)/(k + 2)·x`, strictly increasing to `x` when `x > 0`.
pub(crate) fn shrink(x: &Rational, k: u64) -> Rational {
    let k = k.min(i64::MAX as u64 - 2) as i64;
    x * rat(k + 1, k + 2)
}

/// `[0, ∞]` restricted to rationals. The only compact element is `0`;
/// `x ≪ y` iff `x = 0` or `x < y` with `x` finite.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExtRats;

impl CuSemigroup for ExtRats {
    type Elem = ExtRat;

    fn name(&self) -> String {
        "rat".into()
    }

    fn zero(&self) -> ExtRat {
        ExtRat::zero()
    }

    fn check(&self, x: &ExtRat) -> Result<()> {
        match x {
            ExtRat::Fin(q) if q.is_negative() => Err(CuError::InvalidElement(format!("negative value {q}"))),
            _ => Ok(()),
        }
    }

    fn add(&self, x: &ExtRat, y: &ExtRat) -> Result<ExtRat> {
        Ok(x + y)
    }

    fn leq(&self, x: &ExtRat, y: &ExtRat) -> Result<bool> {
        Ok(x <= y)
    }

    fn way_below(&self, x: &ExtRat, y: &ExtRat) -> Result<bool> {
        Ok(x.is_zero() || (x.is_finite() && x < y))
    }

    fn approximant(&self, x: &ExtRat, k: u64) -> ExtRat {
        match x {
            ExtRat::Fin(q) => ExtRat::Fin(shrink(q, k)),
            ExtRat::Inf => ExtRat::Fin(int(k.min(i64::MAX as u64) as i64)),
        }
    }

    fn nat_scale(&self, n: ExtNat, x: &ExtRat) -> ExtRat {
        x.scale(n)
    }

    fn sample(&self, rng: &mut CaseRng) -> ExtRat {
        match rng.random_range(0..10) {
            0 => ExtRat::Inf,
            1 => ExtRat::zero(),
            _ => ExtRat::Fin(sample_positive_rational(rng)),
        }
    }

    fn parse(&self, literal: &str) -> Result<ExtRat> {
        ExtRat::parse_value(strip_prefix(literal, "rat:")?)
    }

    fn format(&self, x: &ExtRat) -> String {
        format!("rat:{x}")
    }

    fn atoms(&self) -> AtomSearch<ExtRat> {
        AtomSearch::Candidates(Vec::new())
    }
}
