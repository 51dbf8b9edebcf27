//! Plane subcubic graphs and their decompositions into a spanning tree, a
//! 2-regular subgraph and a matching, or into a forest and a matching.

pub mod classes;
pub mod connectivity;
pub mod catalog;
pub mod decompose;
pub mod embed;
pub mod generators;
pub mod io;
pub mod plane_graph;
pub mod sweep;
pub mod verify;

pub use decompose::{ThreeDecomposition, TwoDecomposition};
pub use plane_graph::{Dart, EdgeId, Face, PlaneGraph, VertexId};
