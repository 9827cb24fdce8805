//! Toolkit for uniquely 3-colorable plane graphs: rotation-system plane
//! graphs with face analysis, coloring-partition census and uniqueness
//! checks, edge-criticality reports, an exact-arithmetic face-charging
//! audit, generators for the relevant graph families, and an exhaustive
//! small-graph search harness.

pub mod coloring;
pub mod criticality;
pub mod discharging;
pub mod families;
pub mod io_formats;
pub mod plane_graph;
pub mod search;

pub use plane_graph::{AbstractGraph, EmbeddedSubgraph, Face, FacePair, PlaneGraph};
