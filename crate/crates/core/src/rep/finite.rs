//! Finite groups bundled with their irreducible characters and fusion rules.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use crate::error::{CuError, Result};
use crate::rep::bundled;
use crate::rep::characters::CharacterData;
use crate::rep::group::{digits, undigits, GroupTable};

/// A finite group together with `Ĝ`. For groups built from cyclic factors
/// the fusion rule is the group law on `Ĝ`; otherwise it is computed once
/// from the characters and cached.
pub struct FiniteGroup {
    name: String,
    table: GroupTable,
    chars: CharacterData,
    factors: Option<Vec<u64>>,
    fusion: Vec<Vec<u64>>,
    residue: f64,
    trivial: usize,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({})", self.name)
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.table == other.table
    }
}

impl FiniteGroup {
    pub fn cyclic(n: u64) -> Result<Self> {
        let mut g = FiniteGroup::product(&[n])?;
        g.name = format!("cyclic:{n}");
        Ok(g)
    }

    /// `Z_{n₁} × … × Z_{n_r}`; irreps are residue tuples in the same
    /// mixed radix as the elements.
    pub fn product(orders: &[u64]) -> Result<Self> {
        if orders.iter().any(|&n| n < 1) {
            return Err(CuError::InvalidGroup("cyclic orders must be positive".into()));
        }
        let table = GroupTable::abelian(orders)?;
        let chars = CharacterData::abelian(&table, orders);
        let k = table.order();
        let fusion = (0..k * k)
            .map(|st| {
                let (s, t) = (digits(st / k, orders), digits(st % k, orders));
                let sum: Vec<u64> = s.iter().zip(&t).zip(orders).map(|((a, b), m)| (a + b) % m).collect();
                let mut v = vec![0; k];
                v[undigits(&sum, orders)] = 1;
                v
            })
            .collect();
        let list: Vec<String> = orders.iter().map(u64::to_string).collect();
        Ok(FiniteGroup {
            name: format!("product:{}", list.join(",")),
            table,
            chars,
            factors: Some(orders.to_vec()),
            fusion,
            residue: 0.0,
            trivial: 0,
        })
    }

    /// A group given by its table and validated character data; fusion is
    /// computed numerically and gated on the rounding residue.
    pub fn with_characters(name: impl Into<String>, table: GroupTable, chars: CharacterData) -> Result<Self> {
        chars.validate(&table)?;
        let k = chars.irrep_count();
        let mut fusion = Vec::with_capacity(k * k);
        let mut residue: f64 = 0.0;
        for s in 0..k {
            for t in 0..k {
                let (n, r) = chars.numeric_fusion(s, t)?;
                residue = residue.max(r);
                fusion.push(n);
            }
        }
        let e = chars.exponent as usize;
        let mut one = vec![0i64; e];
        one[0] = 1;
        let trivial = (0..k)
            .find(|&i| chars.irreps[i].values.iter().all(|v| *v == one))
            .ok_or_else(|| CuError::CharacterInconsistent("no trivial character".into()))?;
        Ok(FiniteGroup {
            name: name.into(),
            table,
            chars,
            factors: None,
            fusion,
            residue,
            trivial,
        })
    }

    pub fn s3() -> Result<Self> {
        let (t, c) = bundled::s3()?;
        FiniteGroup::with_characters("s3", t, c)
    }

    pub fn d4() -> Result<Self> {
        let (t, c) = bundled::d4()?;
        FiniteGroup::with_characters("d4", t, c)
    }

    pub fn q8() -> Result<Self> {
        let (t, c) = bundled::q8()?;
        FiniteGroup::with_characters("q8", t, c)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn characters(&self) -> &CharacterData {
        &self.chars
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn irrep_count(&self) -> usize {
        self.chars.irrep_count()
    }

    pub fn dims(&self) -> Vec<u64> {
        self.chars.dims()
    }

    /// Cyclic orders when the group was built as a product of cyclic groups.
    pub fn factors(&self) -> Option<&[u64]> {
        self.factors.as_deref()
    }

    pub fn trivial_irrep(&self) -> usize {
        self.trivial
    }

    /// Largest rounding residue seen while building the fusion table.
    pub fn fusion_residue(&self) -> f64 {
        self.residue
    }

    /// `N^π_{στ}` for every `π`.
    pub fn fusion(&self, sigma: usize, tau: usize) -> &[u64] {
        &self.fusion[sigma * self.irrep_count() + tau]
    }

    /// The same multiplicities recomputed from characters, independent of
    /// how the cached table was built.
    pub fn numeric_fusion(&self, sigma: usize, tau: usize) -> Result<(Vec<u64>, f64)> {
        self.chars.numeric_fusion(sigma, tau)
    }

    /// Group law on `Ĝ` for abelian groups: the irrep index of `σ + τ`.
    pub fn dual_add(&self, sigma: usize, tau: usize) -> Result<usize> {
        let orders = self
            .factors
            .as_ref()
            .ok_or_else(|| CuError::UnsupportedGroup(format!("{} has no cyclic decomposition", self.name)))?;
        let (s, t) = (digits(sigma, orders), digits(tau, orders));
        let sum: Vec<u64> = s.iter().zip(&t).zip(orders).map(|((a, b), m)| (a + b) % m).collect();
        Ok(undigits(&sum, orders))
    }

    pub fn dual_neg(&self, sigma: usize) -> Result<usize> {
        let orders = self
            .factors
            .as_ref()
            .ok_or_else(|| CuError::UnsupportedGroup(format!("{} has no cyclic decomposition", self.name)))?;
        let s: Vec<u64> = digits(sigma, orders).iter().zip(orders).map(|(a, m)| (m - a) % m).collect();
        Ok(undigits(&s, orders))
    }
}

/// Resolves a group descriptor: `cyclic:<n>`, `product:<n1>,<n2>,…`,
/// `s3`, `d4`, `q8` or `table:<path>`. A table-loaded group needs a
/// character table file unless it is literally one of the bundled tables.
pub fn load_group(spec: &str, char_table: Option<&Path>) -> Result<Arc<FiniteGroup>> {
    let spec = spec.trim();
    let parse_order = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| CuError::parse(format!("bad cyclic order `{s}`")))
    };
    let group = if let Some(n) = spec.strip_prefix("cyclic:") {
        let n = parse_order(n)?;
        if n < 1 {
            return Err(CuError::InvalidGroup("cyclic order must be positive".into()));
        }
        FiniteGroup::cyclic(n)?
    } else if let Some(list) = spec.strip_prefix("product:") {
        let orders = list.split(',').map(parse_order).collect::<Result<Vec<_>>>()?;
        FiniteGroup::product(&orders)?
    } else if let Some(path) = spec.strip_prefix("table:") {
        let text = std::fs::read_to_string(path).map_err(|e| CuError::Io(format!("{path}: {e}")))?;
        let table = GroupTable::parse(&text)?;
        match char_table {
            Some(cpath) => {
                let ctext =
                    std::fs::read_to_string(cpath).map_err(|e| CuError::Io(format!("{}: {e}", cpath.display())))?;
                let chars = CharacterData::parse(&ctext, &table)?;
                FiniteGroup::with_characters(spec, table, chars)?
            }
            None => {
                let bundled = [("s3", bundled::s3()?), ("d4", bundled::d4()?), ("q8", bundled::q8()?)];
                let (_, (_, chars)) = bundled
                    .into_iter()
                    .find(|(_, (t, _))| *t == table)
                    .ok_or_else(|| {
                        CuError::UnsupportedGroup(format!("no character data for the group in {path}"))
                    })?;
                FiniteGroup::with_characters(spec, table, chars)?
            }
        }
    } else {
        match spec {
            "s3" => FiniteGroup::s3()?,
            "d4" => FiniteGroup::d4()?,
            "q8" => FiniteGroup::q8()?,
            _ => return Err(CuError::parse(format!("unknown group descriptor `{spec}`"))),
        }
    };
    if char_table.is_some() && !spec.starts_with("table:") {
        return Err(CuError::parse("a character table only applies to `table:` groups"));
    }
    Ok(Arc::new(group))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_fusion_is_group_law() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(z2.fusion(1, 1), &[1, 0]);
        let v4 = FiniteGroup::product(&[2, 2]).unwrap();
        assert_eq!(v4.irrep_count(), 4);
        assert_eq!(v4.fusion(1, 2), &[0, 0, 0, 1]);
        assert_eq!(v4.dual_add(3, 1).unwrap(), 2);
    }

    #[test]
    fn s3_standard_squared() {
        let s3 = FiniteGroup::s3().unwrap();
        assert_eq!(s3.fusion(2, 2), &[1, 1, 1]);
        assert_eq!(s3.trivial_irrep(), 0);
        assert!(s3.fusion_residue() < 1e-9);
    }

    #[test]
    fn descriptors() {
        assert_eq!(load_group("cyclic:3", None).unwrap().irrep_count(), 3);
        assert_eq!(load_group("product:2,3", None).unwrap().order(), 6);
        assert!(load_group("cyclic:x", None).unwrap_err().is_parse());
        assert!(load_group("s4", None).unwrap_err().is_parse());
        assert!(matches!(load_group("table:/nonexistent", None), Err(CuError::Io(_))));
    }
}
