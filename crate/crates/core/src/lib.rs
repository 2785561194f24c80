//! Explicit Hamiltonian cycles in the Kneser graph of triangulations of a
//! convex polygon, and in the Kneser graph of the permutohedron.
//!
//! Two triangulations of the labeled convex n-gon are adjacent in the Kneser
//! graph `KG(T_n)` when they share no diagonal. The pipeline implemented here
//! builds a cycle through all `C(n-2)` triangulations:
//!
//! 1. [`orbits`] partitions the triangulations into rotation orbits; every
//!    orbit of size at least three is already a cycle of the Kneser graph.
//! 2. [`guide`] builds a Hamiltonian cycle of the flip graph on the
//!    (n-1)-gon and lifts it by appending the ear `{1, n-1}`. The lifted cycle
//!    meets every orbit.
//! 3. [`bridges`] walks that guide cycle to get a spanning tree on orbits, and
//!    turns each tree edge into a Kneser edge between the two orbits.
//! 4. [`splice`] merges the orbit cycles along the tree.
//!
//! Every stage is checked independently by [`verify`]. The [`perm`] module
//! covers the permutohedron.

pub mod bridges;
pub mod error;
pub mod exec;
pub mod format;
pub mod guide;
pub mod orbits;
pub mod perm;
pub mod polygon;
pub mod splice;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Execution;
pub use polygon::{catalan, Catalog, Diagonal, PolygonSize, Triangulation};
