//! Triangle-free projective-planar graphs of diameter two.
//!
//! The crate builds every graph of the characterization ([`catalog`]),
//! recognizes membership with a checkable witness ([`classify`]) backed by
//! canonical forms ([`iso`]) and minor models ([`minor`]), re-derives the
//! characterization by isomorph-free enumeration ([`enumerate`]), and runs
//! the exhaustive colored-mixed, signed and pushable clique searches
//! ([`mncliques`]). [`cli`] wraps everything behind the `pp2` binary.

pub mod catalog;
pub mod classify;
pub mod cli;
pub mod enumerate;
pub mod graph;
pub mod iso;
pub mod minor;
pub mod mncliques;

pub use catalog::{FamilySpec, Special};
pub use classify::{classify, domination_number, Classification};
pub use graph::{Graph, GraphError};
pub use iso::{are_isomorphic, canonical_form, CanonicalForm};
pub use minor::{find_minor, obstruction_certificate, verify_model, MinorModel, Obstruction};
