//! Combinatorial laboratory for 4-critical graphs of small Ore-degree:
//! Ore-compositions with replayable certificates, the scaled potential
//! function, critical extensions, collapsibility, degree-three reductions,
//! an iterated discharging engine, and a desk-scale verification census.

pub mod canon;
pub mod census;
pub mod coloring;
pub mod collapse;
pub mod discharge;
pub mod error;
pub mod extension;
pub mod graph;
pub mod graph6;
pub mod ore;
pub mod potential;
pub mod scaled;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use scaled::Scaled;
