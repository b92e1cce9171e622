//! Finite loops (quasigroups with identity) as Cayley tables: identity
//! checks, nuclei, translation representations, autotopisms, isotopes, an
//! exhaustive small-order enumerator and a registry of machine-checkable
//! statements about central loops.
//!
//! Maps act on the right and composites are read left to right; see
//! [`perm`].

pub mod autotopy;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod groups;
pub mod isotopy;
pub mod perm;
pub mod props;
pub mod registry;
pub mod repr;
pub mod table;
pub mod text;

pub use autotopy::Triple;
pub use error::{Error, Result};
pub use perm::Perm;
pub use props::Property;
pub use repr::PermSet;
pub use table::{LoopTable, Side};
