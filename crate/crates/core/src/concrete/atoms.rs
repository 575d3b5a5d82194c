//! Counting minimal nonzero compact elements, an isomorphism invariant.

use std::fmt;

use crate::error::{CuError, Result};
use crate::semigroup::{AtomSearch, CuSemigroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtomCount {
    Count(u64),
    /// Every nonzero compact element has a smaller nonzero compact below it.
    None,
}

impl fmt::Display for AtomCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AtomCount::Count(n) => write!(f, "{n}"),
            AtomCount::None => f.write_str("none"),
        }
    }
}

/// Filters the declared candidates down to the minimal nonzero compacts,
/// or checks the divisibility witnesses.
pub fn count_atoms<S: CuSemigroup>(s: &S) -> Result<AtomCount> {
    let zero = s.zero();
    match s.atoms() {
        AtomSearch::Unsupported => Err(CuError::Unsupported(format!("{} has no finite atom search", s.name()))),
        AtomSearch::Candidates(cands) => {
            let mut compact = Vec::new();
            for x in cands {
                s.check(&x)?;
                if x != zero && s.is_compact(&x)? && !compact.contains(&x) {
                    compact.push(x);
                }
            }
            let mut count = 0;
            for x in &compact {
                let mut minimal = true;
                for y in &compact {
                    if y != x && s.leq(y, x)? {
                        minimal = false;
                        break;
                    }
                }
                if minimal {
                    count += 1;
                }
            }
            Ok(AtomCount::Count(count))
        }
        AtomSearch::Divisible(witnesses) => {
            for (x, y) in &witnesses {
                let ok = s.is_compact(x)? && s.is_compact(y)? && *y != zero && y != x && s.leq(y, x)?;
                if !ok {
                    return Err(CuError::InvalidElement(format!(
                        "{} is not a smaller nonzero compact below {}",
                        s.format(y),
                        s.format(x)
                    )));
                }
            }
            Ok(AtomCount::None)
        }
    }
}
