//! Finite groups as multiplication tables.
//!
//! The identity is pinned at index 0 in every table, which keeps file formats
//! canonical and removes an identity search from every construction. All
//! values are immutable after validation and every operation is pure.

mod abelian;
mod action;
mod group;
mod hom;

pub use abelian::AbelianGroup;
pub use action::{GAction, GroupAction};
pub use group::{FiniteGroup, SubgroupQuotient};
pub use hom::{automorphisms, isomorphisms, isomorphisms_bounded, GroupHom};

use thiserror::Error;

/// Default cap on group orders for automorphism/isomorphism searches.
pub const DEFAULT_ORDER_BOUND: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("table is not square or has no rows")]
    BadShape,
    #[error("table entry at ({row}, {col}) is {entry}, outside [0, {order})")]
    NotClosed { row: usize, col: usize, entry: usize, order: usize },
    #[error("associativity fails at ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("index 0 is not an identity: fails against {elem}")]
    NoIdentityAtZero { elem: usize },
    #[error("element {elem} has no inverse")]
    MissingInverse { elem: usize },
    #[error("images are not a homomorphism at ({i}, {j})")]
    NotHomomorphic { i: usize, j: usize },
    #[error("hom has wrong number of images: expected {expected}, got {got}")]
    BadHomShape { expected: usize, got: usize },
    #[error("image {image} out of range for target of order {order}")]
    ImageOutOfRange { image: usize, order: usize },
    #[error("group is not abelian: {i} and {j} do not commute")]
    NotAbelian { i: usize, j: usize },
    #[error("elements do not form a subgroup (witness {i} * {j})")]
    NotSubgroup { i: usize, j: usize },
    #[error("subgroup is not normal: conjugating {h} by {g} leaves it")]
    NotNormal { g: usize, h: usize },
    #[error("perm for element {g} is not an automorphism")]
    NotAutomorphism { g: usize },
    #[error("action is not functorial at ({g}, {h})")]
    NotFunctorial { g: usize, h: usize },
    #[error("map is not an isomorphism")]
    NotIsomorphism,
    #[error("group order {order} exceeds the search bound {bound}")]
    OrderBound { order: usize, bound: usize },
}
