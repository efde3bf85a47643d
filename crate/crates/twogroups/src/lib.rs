//! Finite 2-groups as concrete data.
//!
//! Everything here is table-backed and desk-scale: groups are multiplication
//! tables with the identity pinned at index 0, cochains are value tables
//! indexed by tuples, and homology-style questions are answered by integer
//! Smith normal form.
//!
//! The main pieces:
//!
//! - [`fingroup`]: finite groups, homomorphisms, actions, subgroups, quotients,
//!   and cyclic decompositions of abelian groups.
//! - [`cohomology`]: cochains `G^n -> A`, the coboundary operator, `H^n` for
//!   `n <= 3`, and coboundary membership.
//! - [`grcat`]: skeletal Gr-categories `(G, A, rho, a)`, morphism arithmetic,
//!   the Sinh invariant, and the equivalence decision.
//! - [`xmod`]: crossed modules, strict 2-groups, and skeletalization.
//! - [`pic`]: Pic-categories modelled on 2-term chain complexes.
//! - [`coherence`]: parenthesized tensor words, rotation paths, and executable
//!   coherence checks.
//! - [`nerve`]: truncated simplicial nerves of groups and strict 2-groups and
//!   their low-dimensional homology.
//! - [`codec`]: the text file formats consumed by the CLI.

pub mod codec;
pub mod coherence;
pub mod cohomology;
pub mod exec;
pub mod fingroup;
pub mod fixtures;
pub mod grcat;
pub mod nerve;
pub mod pic;
pub mod rng;
pub mod snf;
pub mod xmod;

pub use fingroup::{AbelianGroup, FiniteGroup, GAction, GroupAction, GroupError, GroupHom};
