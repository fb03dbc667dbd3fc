//! Properly coloured paths and cycles in edge-coloured graphs.
//!
//! The crate bundles an exact oracle for longest p.c. paths and cycles, the
//! rotation-extension toolkit on path tuples, Yeo's cut-vertex certificate
//! for p.c.-cycle-free graphs, the extremal constructions for colour-degree
//! bounds, and checkers that test those bounds against the oracle.

pub mod blocks;
pub mod generators;
pub mod graph;
pub mod io;
pub mod neighbourhood;
pub mod oracle;
pub mod path;
pub mod rotation;
pub mod verify;
pub mod yeo;

pub use graph::{Colour, EdgeColouredGraph, GraphError, Vertex};
pub use neighbourhood::{eligible_endpoint_set, ColourNeighbourhoodChoice, End};
pub use path::{is_pc_cycle, is_pc_path, is_rainbow, ColouredCycle, ColouredPath, PathError};
