//! String combinatorics, indecomposable modules and the King-stability
//! wall-and-chamber fan for the special biserial algebras `B(n)`.
//!
//! `B(n)` is the quotient of the path algebra of the quiver with vertices
//! `0..=n` and arrows `α_i: i+1 → i`, `β_i: i → i+1` by the ideal generated by
//! `β_i α_i − α_{i+1} β_{i+1}`, `α_i α_{i+1}`, `β_{i+1} β_i` (for
//! `i ∈ [0, n−2]`) and `α_0 β_0`. Its module category models middle perverse
//! sheaves on complex projective `n`-space with the Schubert stratification.
//!
//! The crate provides, in exact rational arithmetic throughout:
//!
//! * walks, strings and the band test on `(Q(n), I(n))` ([`quiver`]),
//! * the parameterisation of string classes by triples `(a, b, η)` ([`classes`]),
//! * the full catalogue of indecomposable representations ([`rep`]),
//! * an exhaustive subobject oracle over `F₂` plus combinatorial closed forms
//!   ([`subobjects`]),
//! * a polyhedral cone engine with double description ([`cones`]),
//! * stability cones, closed-form wall descriptions, and the wall list
//!   ([`stability`]),
//! * the chamber decomposition of the interval-hyperplane arrangement
//!   ([`fan`]).
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to evaluate concurrently without
//! coordination.
//!
//! See the `examples/` directory for one runnable program per capability and
//! the `bnfan` binary for the command-line interface.

pub mod classes;
pub mod cones;
pub mod fan;
pub mod linalg;
pub mod quiver;
pub mod rep;
pub mod report;
pub mod stability;
pub mod subobjects;
pub mod verify;

pub use classes::{phi, profile, psi, star_classes, Eta, Profile, StringClass};
pub use cones::{
    cone_dim, cone_eq, cone_subset, contains_point, double_description, v_to_h, ConeH, ConeV,
};
pub use fan::{arrangement_regions, chambers, interval_hyperplanes, ChamberStructure};
pub use linalg::Rat;
pub use quiver::{
    build_quiver, enumerate_strings, find_bands, is_band, is_string, Arrow, ArrowKind, Letter,
    QuiverPresentation, Walk,
};
pub use rep::{
    biserial_module, check_relations, enumerate_indecomposables, string_module, CatalogueEntry,
    DimVector, ModuleId, Representation,
};
pub use stability::{closed_form_cone, nonthin_cone, stability_cone, walls, NonThin};
pub use subobjects::{
    quotient_dimvectors, subobject_dimvectors, thin_quotient_supports, thin_subobject_supports,
    SubobjectField, SupportInterval,
};

/// Errors produced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("walk is not a string: {0}")]
    NotAString(String),
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    AmbientMismatch { expected: usize, got: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
