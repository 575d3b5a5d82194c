//! Finite groups, their characters, and the representation semiring `Cu(G)`.

pub mod bundled;
pub mod characters;
pub mod finite;
pub mod group;
pub mod semiring;

pub use characters::{CharacterData, IrrepCharacter, RESIDUE_GATE};
pub use finite::{load_group, FiniteGroup};
pub use group::GroupTable;
pub use semiring::{cug_leq, cug_way_below, direct_sum, fusion_coefficients, regular_rep, tensor, CuGElem, RepSemiring};
