//! Super commuting graphs of finite groups.
//!
//! Given a finite group `G` and an equivalence relation on its elements
//! (equality, conjugacy, or same-order), the super commuting graph puts an
//! edge between distinct `g` and `h` whenever they share a class or some
//! representatives of their classes commute. This crate builds the groups
//! from presentations by coset enumeration, constructs the graphs, recognizes
//! their `K_a v (K_p1 + ... + K_pk)` clique-join structure, and computes
//! first/second Zagreb indices exactly.

pub mod graph;
pub mod group;
pub mod presentation;
pub mod structure;
pub mod zagreb;

pub use graph::Graph;
pub use group::{Group, Partition, Relation};
pub use presentation::{Family, FamilySpec, Presentation};
pub use structure::CliqueJoinForm;
pub use zagreb::ZagrebReport;
