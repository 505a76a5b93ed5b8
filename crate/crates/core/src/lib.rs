//! Finite, exact models of matrix categories over rig categories, their
//! group completions, one-sided bar constructions, edgewise subdivision and
//! an explicit contraction, with validators for every identity involved.

pub mod counters;
pub mod delta;
pub mod error;
pub mod homology;
pub mod matrix;
pub mod perm;
pub mod rig;
pub mod sset;
pub mod subdiv;
pub mod tm;
pub mod tmat;
pub mod bar;
pub mod contraction;
pub mod ring;

pub use error::{Error, Result};
pub use perm::Perm;
pub use rig::{GrRing, Mor, Obj, Pi0Rig, RigCategory};
