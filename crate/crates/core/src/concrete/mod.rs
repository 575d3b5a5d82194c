//! The explicit semigroups of the worked examples.

pub mod atoms;
pub mod func;
pub mod step;
pub mod uhf;

pub use atoms::{count_atoms, AtomCount};
pub use func::{FnElem, FnSemigroup};
pub use step::{StepFn, StepLsc};
pub use uhf::{UhfCu, UhfElem};
