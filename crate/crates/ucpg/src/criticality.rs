//! Edge-criticality of uniquely k-colorable graphs: a graph is
//! edge-critical when deleting any single edge destroys unique
//! k-colorability. Deletion works on the abstract graph, since
//! uniqueness does not depend on the embedding.

use thiserror::Error;

use crate::coloring::{edge_lower_bound, is_uniquely_k_colorable};
use crate::plane_graph::{AbstractGraph, Edge};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriticalityError {
    #[error("graph is not uniquely {0}-colorable")]
    NotUniquelyColorable(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalityReport {
    pub is_edge_critical: bool,
    /// Edges whose removal keeps the graph uniquely k-colorable, in
    /// canonical order. Empty iff the graph is edge-critical.
    pub removable_edges: Vec<Edge>,
    /// True when the verdict came from the edge-count shortcut: a uniquely
    /// k-colorable graph with exactly `(k-1) n - k(k-1)/2` edges is
    /// edge-critical without any per-edge work.
    pub used_fast_path: bool,
}

/// Tests every edge by deletion plus a uniqueness re-check, taking the
/// minimum-edge-count shortcut when it applies.
pub fn criticality_report(
    g: &AbstractGraph,
    k: usize,
) -> Result<CriticalityReport, CriticalityError> {
    report_inner(g, k, true)
}

/// The same report with the shortcut disabled, so every edge is checked.
pub fn criticality_report_exhaustive(
    g: &AbstractGraph,
    k: usize,
) -> Result<CriticalityReport, CriticalityError> {
    report_inner(g, k, false)
}

fn report_inner(
    g: &AbstractGraph,
    k: usize,
    allow_fast_path: bool,
) -> Result<CriticalityReport, CriticalityError> {
    if !is_uniquely_k_colorable(g, k) {
        return Err(CriticalityError::NotUniquelyColorable(k));
    }
    if allow_fast_path {
        if let Ok(bound) = edge_lower_bound(g.vertex_count(), k) {
            if g.edge_count() == bound {
                return Ok(CriticalityReport {
                    is_edge_critical: true,
                    removable_edges: Vec::new(),
                    used_fast_path: true,
                });
            }
        }
    }
    let mut removable_edges = Vec::new();
    for (u, v) in g.edges() {
        let reduced = g.delete_edge(u, v).expect("edge taken from the edge list");
        if is_uniquely_k_colorable(&reduced, k) {
            removable_edges.push((u, v));
        }
    }
    Ok(CriticalityReport {
        is_edge_critical: removable_edges.is_empty(),
        removable_edges,
        used_fast_path: false,
    })
}
