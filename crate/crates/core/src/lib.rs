//! Computation with finite quasigroups, loops and quandles given by Cayley
//! tables: property checks, multiplication groups, constructions, affine and
//! Belousov-Onoi representations, quandle envelopes, an identity language with
//! a small model finder, and census enumeration up to isomorphism.

pub mod cayley;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod identities;
pub mod multgroup;
pub mod perm;
pub mod represent;

pub use cayley::{CayleyTable, LoopView, Property};
pub use error::{Error, Result};
pub use perm::{PermGroup, Permutation};
