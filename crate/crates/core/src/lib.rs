//! Median-graph toolkit for groups acting on CAT(0) cube complexes.
//!
//! A cube complex is represented by its 1-skeleton, a median graph with the
//! hop metric. Hyperplanes, cubes, bridges, sectors and checkpoint systems
//! are all derived from that graph.

pub mod actions;
pub mod artin;
pub mod bridge;
pub mod checkpoint;
pub mod complex;
pub mod cubes;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod hyperplane;
pub mod separation;

pub use complex::{CubeComplex, Vertex};
pub use error::{Error, Result};
pub use hyperplane::{Arrangement, Halfspace, Side};
