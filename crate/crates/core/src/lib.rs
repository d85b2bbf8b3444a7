//! Heat-kernel counting machinery for finite and compact groups.

pub mod error;
pub mod group;
pub mod group_spec;
pub mod perm;

pub use error::{Error, Result};
pub use group::{ConjugacyClass, Elem, FiniteGroup, Subgroup};
pub use group_spec::{build_group, build_group_with_cap, GroupSpec};
pub mod characters;
pub mod numfmt;
pub mod counting;
pub mod heat;
pub mod lie;

pub use characters::{CharacterTable, ClassFunction, IrrepData};
pub use counting::{CountResult, SpectralSum, WordEquation};
