//! Semigroups addressed by name, with literal-level operations for the
//! command line.

use std::path::PathBuf;
use std::sync::Arc;

use crate::axioms::{check_axioms, AxiomConfig, AxiomReport, WayBelowAsOrder};
use crate::concrete::{count_atoms, AtomCount, FnSemigroup, StepLsc, UhfCu};
use crate::error::{CuError, Result};
use crate::ext_nat::{ExtNat, ExtNats};
use crate::ext_rat::ExtRats;
use crate::rep::{load_group, FiniteGroup, RepSemiring};
use crate::semigroup::CuSemigroup;

/// Order and way-below between two elements, both directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Relation {
    pub leq: bool,
    pub geq: bool,
    pub way_below: bool,
    pub way_above: bool,
}

impl Relation {
    /// `LT`, `EQ`, `GT` or `INCOMPARABLE`. `LE` and `GE` never arise for an
    /// antisymmetric order; they are kept in the vocabulary for preorders.
    pub fn label(&self) -> &'static str {
        match (self.leq, self.geq) {
            (true, true) => "EQ",
            (true, false) => "LT",
            (false, true) => "GT",
            (false, false) => "INCOMPARABLE",
        }
    }
}

/// A semigroup whose elements are handled as literals.
pub trait DynSemigroup: Send + Sync {
    fn name(&self) -> String;

    /// Parses and reformats a literal.
    fn canonical(&self, literal: &str) -> Result<String>;

    fn relation(&self, a: &str, b: &str) -> Result<Relation>;

    fn add(&self, a: &str, b: &str) -> Result<String>;

    fn scale(&self, n: ExtNat, a: &str) -> Result<String>;

    /// The axiom suite; with `mutate`, `≪` is replaced by `≤` first.
    fn axioms(&self, config: AxiomConfig, mutate: bool) -> AxiomReport;

    fn atoms(&self) -> Result<AtomCount>;
}

pub struct Erased<S>(pub S);

impl<S> DynSemigroup for Erased<S>
where
    S: CuSemigroup + Clone + Send + Sync,
{
    fn name(&self) -> String {
        self.0.name()
    }

    fn canonical(&self, literal: &str) -> Result<String> {
        Ok(self.0.format(&self.0.parse(literal)?))
    }

    fn relation(&self, a: &str, b: &str) -> Result<Relation> {
        let s = &self.0;
        let (x, y) = (s.parse(a)?, s.parse(b)?);
        Ok(Relation {
            leq: s.leq(&x, &y)?,
            geq: s.leq(&y, &x)?,
            way_below: s.way_below(&x, &y)?,
            way_above: s.way_below(&y, &x)?,
        })
    }

    fn add(&self, a: &str, b: &str) -> Result<String> {
        let s = &self.0;
        Ok(s.format(&s.add(&s.parse(a)?, &s.parse(b)?)?))
    }

    fn scale(&self, n: ExtNat, a: &str) -> Result<String> {
        let s = &self.0;
        Ok(s.format(&s.nat_scale(n, &s.parse(a)?)))
    }

    fn axioms(&self, config: AxiomConfig, mutate: bool) -> AxiomReport {
        if mutate {
            check_axioms(&WayBelowAsOrder(self.0.clone()), config)
        } else {
            check_axioms(&self.0, config)
        }
    }

    fn atoms(&self) -> Result<AtomCount> {
        count_atoms(&self.0)
    }
}

pub fn erase<S>(s: S) -> Box<dyn DynSemigroup>
where
    S: CuSemigroup + Clone + Send + Sync + 'static,
{
    Box::new(Erased(s))
}

fn uhf_order(name: &str) -> Option<u64> {
    name.strip_prefix("uhf")?.parse().ok()
}

/// `z2`, `z2xz3`: cyclic orders of an index group.
fn index_orders(spec: &str) -> Option<Vec<u64>> {
    spec.split('x').map(|p| p.strip_prefix('z')?.parse().ok()).collect()
}

macro_rules! with_base {
    ($name:expr, |$b:ident| $body:expr) => {{
        let name: &str = $name;
        if name == "nat" {
            let $b = ExtNats;
            Ok($body)
        } else if name == "rat" {
            let $b = ExtRats;
            Ok($body)
        } else if let Some(n) = uhf_order(name) {
            let $b = UhfCu::new(n)?;
            Ok($body)
        } else {
            Err(CuError::parse(format!("unknown base semigroup `{name}` (expected nat, rat or uhf<n>)")))
        }
    }};
}

/// Files behind the `table` group descriptor.
#[derive(Debug, Clone, Default)]
pub struct GroupFiles {
    pub group_table: Option<PathBuf>,
    pub char_table: Option<PathBuf>,
}

impl GroupFiles {
    /// Resolves a group descriptor, reading `table` from the group table
    /// file.
    pub fn load(&self, spec: &str) -> Result<Arc<FiniteGroup>> {
        let spec = spec.trim();
        let chars = self.char_table.as_deref();
        if spec == "table" {
            let path = self
                .group_table
                .as_ref()
                .ok_or_else(|| CuError::parse("the `table` group needs a group table file"))?;
            return load_group(&format!("table:{}", path.display()), chars);
        }
        load_group(spec, chars)
    }
}

/// Looks up `nat`, `rat`, `uhf<n>`, `step[<base>]`, `fn[<base>;z<n>x…]`,
/// `fn[<base>;<size>]` and `rep[<group>]`, where `<base>` is `nat`, `rat`
/// or `uhf<n>`. `example:<entry>` is the carrier of a gallery entry.
pub fn lookup(name: &str) -> Result<Box<dyn DynSemigroup>> {
    lookup_with(name, &GroupFiles::default())
}

pub fn lookup_with(name: &str, files: &GroupFiles) -> Result<Box<dyn DynSemigroup>> {
    let name = name.trim();
    if let Some(entry) = name.strip_prefix("example:") {
        return Ok(crate::gallery::lookup(entry)?.carrier());
    }
    if let Some(inner) = name.strip_prefix("step[").and_then(|s| s.strip_suffix(']')) {
        return with_base!(inner, |b| erase(StepLsc::new(b)));
    }
    if let Some(inner) = name.strip_prefix("fn[").and_then(|s| s.strip_suffix(']')) {
        let (base, index) = inner
            .split_once(';')
            .ok_or_else(|| CuError::parse(format!("expected `fn[<base>;<index>]`, got `{name}`")))?;
        if let Some(orders) = index_orders(index) {
            return with_base!(base, |b| erase(FnSemigroup::over_group(b, &orders)?));
        }
        let size: usize = index
            .parse()
            .map_err(|_| CuError::parse(format!("bad index set `{index}`")))?;
        return with_base!(base, |b| erase(FnSemigroup::new(b, size)?));
    }
    if let Some(inner) = name.strip_prefix("rep[").and_then(|s| s.strip_suffix(']')) {
        return Ok(erase(RepSemiring::new(files.load(inner)?)));
    }
    with_base!(name, |b| erase(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_labels() {
        let uhf = lookup("uhf2").unwrap();
        let r = uhf.relation("uhf2:compact:1", "uhf2:soft:1").unwrap();
        assert_eq!(r.label(), "GT");
        assert!(!r.way_below && r.way_above);
        let nat = lookup("nat").unwrap();
        let r = nat.relation("nat:3", "nat:inf").unwrap();
        assert_eq!((r.label(), r.way_below), ("LT", true));
        let r = nat.relation("nat:inf", "nat:inf").unwrap();
        assert_eq!((r.label(), r.way_below), ("EQ", false));
    }

    #[test]
    fn names_round_trip() {
        for name in ["nat", "rat", "uhf3", "step[nat]", "step[uhf2]", "fn[nat;z2]", "fn[uhf2;z2xz2]", "fn[rat;4]", "rep[s3]"] {
            assert_eq!(lookup(name).unwrap().name(), name);
        }
        assert!(lookup("foo").err().unwrap().is_parse());
        assert!(lookup("step[foo]").err().unwrap().is_parse());
    }
}
