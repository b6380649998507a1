//! Computation with finite regular semigroups and their structural
//! invariants: biordered sets, sandwich sets, fundamental semigroups built from
//! ω-isomorphisms, inductive groupoids, idempotent-generated presentations and
//! normal categories with their cone semigroups.

pub mod biorder;
pub mod category;
pub mod config;
pub mod error;
pub mod fundamental;
pub mod groupoid;
pub mod idempotent;
pub mod semigroup;

pub use biorder::BiorderedSet;
pub use config::Caps;
pub use error::{Error, Result};
pub use semigroup::{Family, Semigroup};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/semigroups.md")]
    mod semigroups {}
    #[doc = include_str!("../../../book/src/biorders.md")]
    mod biorders {}
    #[doc = include_str!("../../../book/src/fundamental.md")]
    mod fundamental {}
    #[doc = include_str!("../../../book/src/groupoids.md")]
    mod groupoids {}
    #[doc = include_str!("../../../book/src/presentations.md")]
    mod presentations {}
    #[doc = include_str!("../../../book/src/categories.md")]
    mod categories {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
