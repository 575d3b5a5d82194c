//! The representation semiring `Cu(G)` of a finite group: classes of
//! representations as multiplicity vectors over `Ĝ`.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{CuError, Result};
use crate::ext_nat::ExtNat;
use crate::literal::{split_list, strip_prefix};
use crate::rep::finite::FiniteGroup;
use crate::semigroup::{AtomSearch, CaseRng, CuSemigroup};

/// `[μ] = Σ_π m_π(μ)·[π]`.
#[derive(Clone, PartialEq)]
pub struct CuGElem {
    group: Arc<FiniteGroup>,
    mult: Vec<ExtNat>,
}

impl fmt::Debug for CuGElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_mult(&self.mult))
    }
}

fn format_mult(m: &[ExtNat]) -> String {
    let parts: Vec<String> = m.iter().map(ExtNat::to_string).collect();
    format!("rep:{}", parts.join(","))
}

impl CuGElem {
    pub fn new(group: &Arc<FiniteGroup>, mult: Vec<ExtNat>) -> Result<Self> {
        if mult.len() != group.irrep_count() {
            return Err(CuError::InvalidElement(format!(
                "{} multiplicities for {} irreps of {}",
                mult.len(),
                group.irrep_count(),
                group.name()
            )));
        }
        Ok(CuGElem {
            group: Arc::clone(group),
            mult,
        })
    }

    pub fn from_counts(group: &Arc<FiniteGroup>, counts: &[u64]) -> Result<Self> {
        CuGElem::new(group, counts.iter().map(|&c| ExtNat::Fin(c)).collect())
    }

    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        CuGElem {
            group: Arc::clone(group),
            mult: vec![ExtNat::ZERO; group.irrep_count()],
        }
    }

    /// The class of a single irrep.
    pub fn irrep(group: &Arc<FiniteGroup>, pi: usize) -> Self {
        let mut m = CuGElem::zero(group);
        m.mult[pi] = ExtNat::ONE;
        m
    }

    pub fn trivial(group: &Arc<FiniteGroup>) -> Self {
        CuGElem::irrep(group, group.trivial_irrep())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn mult(&self) -> &[ExtNat] {
        &self.mult
    }

    pub fn multiplicity(&self, pi: usize) -> ExtNat {
        self.mult[pi]
    }

    /// `Σ_π m_π d_π`.
    pub fn dimension(&self) -> ExtNat {
        self.mult
            .iter()
            .zip(self.group.dims())
            .map(|(&m, d)| m * ExtNat::Fin(d))
            .sum()
    }

    pub fn is_finite(&self) -> bool {
        self.mult.iter().all(|m| m.is_finite())
    }

    /// Truncates every multiplicity at `k`.
    pub fn truncate(&self, k: u64) -> Self {
        CuGElem {
            group: Arc::clone(&self.group),
            mult: self.mult.iter().map(|m| m.truncate(k)).collect(),
        }
    }

    fn same_group(&self, other: &CuGElem) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) || *self.group == *other.group {
            Ok(())
        } else {
            Err(CuError::mismatch(format!(
                "representations of {} and {}",
                self.group.name(),
                other.group.name()
            )))
        }
    }
}

impl fmt::Display for CuGElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_mult(&self.mult))
    }
}

pub fn direct_sum(a: &CuGElem, b: &CuGElem) -> Result<CuGElem> {
    a.same_group(b)?;
    Ok(CuGElem {
        group: Arc::clone(&a.group),
        mult: a.mult.iter().zip(&b.mult).map(|(&x, &y)| x + y).collect(),
    })
}

/// `m_π(a⊗b) = Σ_{σ,τ} m_σ(a) m_τ(b) N^π_{στ}`.
pub fn tensor(a: &CuGElem, b: &CuGElem) -> Result<CuGElem> {
    a.same_group(b)?;
    let g = &a.group;
    let mut out = vec![ExtNat::ZERO; g.irrep_count()];
    for (s, &ms) in a.mult.iter().enumerate() {
        if ms.is_zero() {
            continue;
        }
        for (t, &mt) in b.mult.iter().enumerate() {
            if mt.is_zero() {
                continue;
            }
            let weight = ms * mt;
            for (slot, &n) in out.iter_mut().zip(g.fusion(s, t)) {
                *slot = *slot + weight * ExtNat::Fin(n);
            }
        }
    }
    Ok(CuGElem {
        group: Arc::clone(g),
        mult: out,
    })
}

pub fn cug_leq(a: &CuGElem, b: &CuGElem) -> Result<bool> {
    a.same_group(b)?;
    Ok(a.mult.iter().zip(&b.mult).all(|(x, y)| x <= y))
}

/// Componentwise `≪` in `ExtNat^Ĝ`: every multiplicity finite and dominated.
pub fn cug_way_below(a: &CuGElem, b: &CuGElem) -> Result<bool> {
    a.same_group(b)?;
    Ok(a.mult.iter().zip(&b.mult).all(|(x, y)| x.is_finite() && x <= y))
}

/// `π ↦ d_π`.
pub fn regular_rep(group: &Arc<FiniteGroup>) -> CuGElem {
    CuGElem::from_counts(group, &group.dims()).expect("one dimension per irrep")
}

pub fn fusion_coefficients(group: &FiniteGroup, sigma: usize, tau: usize) -> Result<Vec<u64>> {
    let k = group.irrep_count();
    if sigma >= k || tau >= k {
        return Err(CuError::InvalidElement(format!("irrep index out of range for {}", group.name())));
    }
    Ok(group.fusion(sigma, tau).to_vec())
}

/// `Cu(G)` as a Cu-semigroup under direct sum.
#[derive(Debug, Clone)]
pub struct RepSemiring {
    group: Arc<FiniteGroup>,
}

impl RepSemiring {
    pub fn new(group: Arc<FiniteGroup>) -> Self {
        RepSemiring { group }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn tensor(&self, a: &CuGElem, b: &CuGElem) -> Result<CuGElem> {
        self.check(a)?;
        self.check(b)?;
        tensor(a, b)
    }

    pub fn unit(&self) -> CuGElem {
        CuGElem::trivial(&self.group)
    }

    /// Finite classes with multiplicities up to `bound`, drawn uniformly.
    pub fn sample_finite(&self, rng: &mut CaseRng, bound: u64) -> CuGElem {
        let mult = (0..self.group.irrep_count())
            .map(|_| ExtNat::Fin(rng.random_range(0..=bound)))
            .collect();
        CuGElem {
            group: Arc::clone(&self.group),
            mult,
        }
    }
}

impl CuSemigroup for RepSemiring {
    type Elem = CuGElem;

    fn name(&self) -> String {
        format!("rep[{}]", self.group.name())
    }

    fn zero(&self) -> CuGElem {
        CuGElem::zero(&self.group)
    }

    fn check(&self, x: &CuGElem) -> Result<()> {
        if !(Arc::ptr_eq(&self.group, &x.group) || *self.group == *x.group) {
            return Err(CuError::mismatch(format!(
                "representation of {} used in Cu({})",
                x.group.name(),
                self.group.name()
            )));
        }
        if x.mult.len() != self.group.irrep_count() {
            return Err(CuError::InvalidElement("wrong number of multiplicities".into()));
        }
        Ok(())
    }

    fn add(&self, x: &CuGElem, y: &CuGElem) -> Result<CuGElem> {
        self.check(x)?;
        direct_sum(x, y)
    }

    fn leq(&self, x: &CuGElem, y: &CuGElem) -> Result<bool> {
        self.check(x)?;
        cug_leq(x, y)
    }

    fn way_below(&self, x: &CuGElem, y: &CuGElem) -> Result<bool> {
        self.check(x)?;
        cug_way_below(x, y)
    }

    fn approximant(&self, x: &CuGElem, k: u64) -> CuGElem {
        x.truncate_infinite(k)
    }

    fn nat_scale(&self, n: ExtNat, x: &CuGElem) -> CuGElem {
        CuGElem {
            group: Arc::clone(&x.group),
            mult: x.mult.iter().map(|&m| n * m).collect(),
        }
    }

    fn sample(&self, rng: &mut CaseRng) -> CuGElem {
        let mult = (0..self.group.irrep_count())
            .map(|_| {
                if rng.random_ratio(1, 6) {
                    ExtNat::Inf
                } else {
                    ExtNat::Fin(rng.random_range(0..=3))
                }
            })
            .collect();
        CuGElem {
            group: Arc::clone(&self.group),
            mult,
        }
    }

    fn parse(&self, literal: &str) -> Result<CuGElem> {
        let body = strip_prefix(literal, "rep:")?;
        let mult = split_list(body)
            .into_iter()
            .map(str::parse)
            .collect::<Result<Vec<ExtNat>>>()?;
        CuGElem::new(&self.group, mult).map_err(|e| CuError::parse(e.to_string()))
    }

    fn format(&self, x: &CuGElem) -> String {
        x.to_string()
    }

    fn atoms(&self) -> AtomSearch<CuGElem> {
        AtomSearch::Candidates(
            (0..self.group.irrep_count())
                .map(|pi| CuGElem::irrep(&self.group, pi))
                .collect(),
        )
    }
}

impl CuGElem {
    /// The canonical approximant: infinite multiplicities become `k`.
    pub fn truncate_infinite(&self, k: u64) -> Self {
        CuGElem {
            group: Arc::clone(&self.group),
            mult: self
                .mult
                .iter()
                .map(|&m| if m.is_finite() { m } else { ExtNat::Fin(k) })
                .collect(),
        }
    }
}
