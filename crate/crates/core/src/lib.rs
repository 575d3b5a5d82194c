//! Cuntz semigroups, the representation semiring `Cu(G)` of a finite group,
//! `Cu(G)`-semimodules, and the constructions used to assemble explicit
//! equivariant Cuntz semigroups: pullbacks, stabilised sequential limits, and
//! fixed-point subsemigroups.

pub mod axioms;
pub mod concrete;
pub mod constructions;
pub mod error;
pub mod ext_nat;
pub mod ext_rat;
pub mod gallery;
pub mod literal;
pub mod registry;
pub mod rep;
pub mod semigroup;

pub use error::{CuError, Result};
pub use ext_nat::{ExtNat, ExtNats};
pub use ext_rat::{ExtRat, ExtRats};
pub use semigroup::{AtomSearch, CaseRng, Chain, CuMorphism, CuSemigroup, Elem, Identity, MapMorphism};
