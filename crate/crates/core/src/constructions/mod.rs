//! Categorical constructions: group actions and their fixed points,
//! pullbacks, stabilizing sequential limits and Cu(G)-semimodules.

pub mod action;
pub mod fixed;
pub mod pullback;
pub mod semimodule;
pub mod seqlimit;

pub use action::{verify_automorphisms, GroupAction, IndexTranslation, Rotation, TrivialAction};
pub use fixed::{fixed_point_nc, FixedPoint, APPROXIMANT_DEPTH};
pub use pullback::{make_pullback, LiftingMorphism, OnSecondLeg, PbElem, ProjectA, ProjectB, Pullback};
pub use semimodule::{
    check_semimodule, make_semimodule, run_semimodule_checks, triviality_failure, ActionRule, CuGModule, Dual, Semimodule,
    TensorScaling, Trivial,
};
pub use seqlimit::{make_seq_limit, Injection, LimElem, SeqLimit, StageMap};
