//! Finite-group computations around products of conjugacy classes.
//!
//! The library builds structured finite groups (cyclic groups, direct
//! products, wreath products, affine groups, Cayley-table groups),
//! computes conjugacy classes and products of classes, decomposes
//! G-invariant sets into classes, and packages a collection of
//! executable verifiers for quantitative claims about those quantities
//! in p-groups.

pub mod classes;
pub mod constructions;
pub mod element;
pub mod error;
pub mod group;
pub mod limits;
pub mod spec;
pub mod table;
pub mod theorems;

pub use element::Element;
pub use error::{Error, Result};
pub use group::Group;
pub use limits::Limits;
pub use spec::{Action, GroupSpec};
