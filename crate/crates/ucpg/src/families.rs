//! Generators for the graph families under study, with their published
//! statistics.
//!
//! The `gk` family is a cycle `v_0 .. v_{3k-1}` with two hubs: `u` inside
//! the cycle joined to every `v_i` with `i = 1, 2 (mod 3)`, and `w`
//! outside joined to every `v_i` with `i = 0, 1 (mod 3)`, for odd
//! `k >= 3`. It is uniquely 3-colorable, edge-critical, 3-connected, and
//! its faces are 2k triangles and 2k quadrilaterals arranged so that
//! every triangle borders only quadrilaterals.

use std::collections::BTreeMap;

use num_rational::Rational64;
use thiserror::Error;

use crate::plane_graph::PlaneGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("k must be odd and at least 3, got {0}")]
    InvalidK(usize),
    #[error("need at least {min} vertices, got {got}")]
    TooFewVertices { got: usize, min: usize },
}

/// Published statistics of a generated family member, for cross-checking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyStats {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub face_degrees: BTreeMap<usize, usize>,
    pub uniquely_3_colorable: bool,
    pub edge_critical: bool,
}

/// Cycle length `3k` plus the two hubs. Vertices are labeled `v_i = i`
/// for `i < 3k`, `u = 3k`, `w = 3k + 1`.
pub fn generate_gk(k: usize) -> Result<PlaneGraph, FamilyError> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(FamilyError::InvalidK(k));
    }
    let cycle = 3 * k;
    let hub_u = cycle;
    let hub_w = cycle + 1;
    let n = cycle + 2;
    let mut rotations: Vec<Vec<usize>> = (0..cycle)
        .map(|i| {
            let next = (i + 1) % cycle;
            let prev = (i + cycle - 1) % cycle;
            let mut rot = vec![next];
            if i % 3 == 1 || i % 3 == 2 {
                rot.push(hub_u);
            }
            rot.push(prev);
            if i % 3 == 0 || i % 3 == 1 {
                rot.push(hub_w);
            }
            rot
        })
        .collect();
    rotations.push((0..cycle).filter(|i| i % 3 == 1 || i % 3 == 2).collect());
    rotations.push((0..cycle).rev().filter(|i| i % 3 == 0 || i % 3 == 1).collect());
    Ok(PlaneGraph::from_rotation_system(n, rotations)
        .expect("the gk rotation system is a sphere embedding"))
}

pub fn gk_stats(k: usize) -> Result<FamilyStats, FamilyError> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(FamilyError::InvalidK(k));
    }
    Ok(FamilyStats {
        vertex_count: 3 * k + 2,
        edge_count: 7 * k,
        face_degrees: BTreeMap::from([(3, 2 * k), (4, 2 * k)]),
        uniquely_3_colorable: true,
        edge_critical: true,
    })
}

/// The fan: hub `0` adjacent to the path `1 .. n-1`. A maximal
/// outerplanar graph with `n - 2` triangular faces and one `n`-face.
pub fn generate_fan(n: usize) -> Result<PlaneGraph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::TooFewVertices { got: n, min: 3 });
    }
    let mut rotations = vec![(1..n).collect::<Vec<usize>>()];
    for p in 1..n {
        let mut rot = Vec::new();
        if p + 1 < n {
            rot.push(p + 1);
        }
        rot.push(0);
        if p > 1 {
            rot.push(p - 1);
        }
        rotations.push(rot);
    }
    Ok(PlaneGraph::from_rotation_system(n, rotations)
        .expect("the fan rotation system is a sphere embedding"))
}

pub fn fan_stats(n: usize) -> Result<FamilyStats, FamilyError> {
    if n < 3 {
        return Err(FamilyError::TooFewVertices { got: n, min: 3 });
    }
    let face_degrees = if n == 3 {
        BTreeMap::from([(3, 2)])
    } else {
        BTreeMap::from([(3, n - 2), (n, 1)])
    };
    Ok(FamilyStats {
        vertex_count: n,
        edge_count: 2 * n - 3,
        face_degrees,
        uniquely_3_colorable: true,
        edge_critical: true,
    })
}

/// The octahedron: hub `0`, equator cycle `1 2 3 4`, hub `5`. The
/// smallest maximal plane graph with every vertex degree even; its
/// unique 3-coloring is the three antipodal pairs.
pub fn generate_octahedron() -> PlaneGraph {
    let rotations = vec![
        vec![1, 2, 3, 4],
        vec![2, 0, 4, 5],
        vec![3, 0, 1, 5],
        vec![4, 0, 2, 5],
        vec![1, 0, 3, 5],
        vec![4, 3, 2, 1],
    ];
    PlaneGraph::from_rotation_system(6, rotations)
        .expect("the octahedron rotation system is a sphere embedding")
}

pub fn octahedron_stats() -> FamilyStats {
    FamilyStats {
        vertex_count: 6,
        edge_count: 12,
        face_degrees: BTreeMap::from([(3, 8)]),
        uniquely_3_colorable: true,
        edge_critical: false,
    }
}

/// Exact bounds on the maximum edge count of an edge-critical uniquely
/// 3-colorable planar graph on `n` vertices: `7n/3 - 14/3` from the `gk`
/// family and `8n/3 - 17/3` from above.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeBounds {
    pub lower: Rational64,
    pub upper: Rational64,
    /// True when the lower bound is witnessed by a family member, which
    /// needs `n >= 11`, `n` odd and `n = 2 (mod 3)`.
    pub lower_witnessed: bool,
}

pub fn size_bounds(n: usize) -> Result<SizeBounds, FamilyError> {
    if n < 3 {
        return Err(FamilyError::TooFewVertices { got: n, min: 3 });
    }
    let n_int = n as i64;
    Ok(SizeBounds {
        lower: Rational64::new(7 * n_int - 14, 3),
        upper: Rational64::new(8 * n_int - 17, 3),
        lower_witnessed: n >= 11 && n % 2 == 1 && n % 3 == 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::unique_coloring;

    #[test]
    fn gk_counts_for_small_k() {
        for k in [3usize, 5, 7] {
            let g = generate_gk(k).unwrap();
            assert_eq!(g.vertex_count(), 3 * k + 2);
            assert_eq!(g.edge_count(), 7 * k);
            assert_eq!(g.face_degree_multiset(), gk_stats(k).unwrap().face_degrees);
        }
    }

    #[test]
    fn gk_rejects_even_or_small_k() {
        assert_eq!(generate_gk(4).unwrap_err(), FamilyError::InvalidK(4));
        assert_eq!(generate_gk(1).unwrap_err(), FamilyError::InvalidK(1));
        assert_eq!(generate_gk(0).unwrap_err(), FamilyError::InvalidK(0));
    }

    #[test]
    fn gk_face_pairs_avoid_3_3_and_3_5() {
        let g = generate_gk(3).unwrap();
        let degrees = g.face_pair_degrees();
        assert!(degrees.contains(&(3, 4)));
        assert!(!degrees.contains(&(3, 3)));
        assert!(!degrees.contains(&(3, 5)));
    }

    #[test]
    fn g3_unique_partition_matches_the_construction() {
        let g = generate_gk(3).unwrap();
        let partition = unique_coloring(&g.abstract_graph(), 3).unwrap();
        // u with the v_{3j}, the v_{3j+1} alone, w with the v_{3j+2}
        assert_eq!(
            partition.classes(),
            &[vec![0, 3, 6, 9], vec![1, 4, 7], vec![2, 5, 8, 10]]
        );
    }

    #[test]
    fn g3_deleting_a_hub_spoke_keeps_it_connected() {
        let g = generate_gk(3).unwrap();
        let sub = g.delete_edge(9, 1).unwrap();
        assert_eq!(sub.edge_count(), 20);
        assert!(sub.is_connected());
    }

    #[test]
    fn fan_structure() {
        let g = generate_fan(6).unwrap();
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.face_degree_multiset(), BTreeMap::from([(3, 4), (6, 1)]));
        let degrees = g.face_pair_degrees();
        assert_eq!(degrees, vec![(3, 3), (3, 6)]);
    }

    #[test]
    fn fan_of_three_is_the_triangle() {
        let g = generate_fan(3).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(generate_fan(2).is_err());
    }

    #[test]
    fn fan_unique_partition() {
        let g = generate_fan(6).unwrap();
        let partition = unique_coloring(&g.abstract_graph(), 3).unwrap();
        assert_eq!(partition.classes(), &[vec![0], vec![1, 3, 5], vec![2, 4]]);
    }

    #[test]
    fn gk_is_three_connected() {
        for k in [3usize, 5, 7, 9] {
            assert!(generate_gk(k).unwrap().is_k_connected(3));
        }
        assert!(!generate_fan(6).unwrap().is_k_connected(3));
    }

    #[test]
    fn gk_class_pair_structure() {
        // hub-to-cycle pairs are trees; the hub-to-hub pair splits into k
        // internally disjoint paths through the cycle
        use crate::coloring::class_pair_subgraph;
        for k in [3usize, 5] {
            let g = generate_gk(k).unwrap();
            let a = g.abstract_graph();
            let partition = unique_coloring(&a, 3).unwrap();
            let u_vs_alone = class_pair_subgraph(&a, &partition, 0, 1).unwrap();
            assert!(u_vs_alone.is_tree);
            let w_vs_alone = class_pair_subgraph(&a, &partition, 1, 2).unwrap();
            assert!(w_vs_alone.is_tree);

            let hub_to_hub = class_pair_subgraph(&a, &partition, 0, 2).unwrap();
            assert!(!hub_to_hub.is_tree);
            assert_eq!(hub_to_hub.paths.len(), k);
            let (hub_u, hub_w) = (3 * k, 3 * k + 1);
            let mut interiors = Vec::new();
            for path in &hub_to_hub.paths {
                assert_eq!(path.len(), 4);
                assert_eq!(path.first(), Some(&hub_u));
                assert_eq!(path.last(), Some(&hub_w));
                interiors.extend_from_slice(&path[1..3]);
            }
            interiors.sort_unstable();
            interiors.dedup();
            assert_eq!(interiors.len(), 2 * k, "paths share no interior vertex");
        }
    }

    #[test]
    fn fan_meets_the_edge_bound_with_equality() {
        use crate::coloring::edge_lower_bound;
        use crate::criticality::{criticality_report, criticality_report_exhaustive};
        for n in [6usize, 7, 9] {
            let g = generate_fan(n).unwrap();
            let a = g.abstract_graph();
            assert!(unique_coloring(&a, 3).is_some());
            assert_eq!(g.edge_count(), 2 * n - 3);
            assert_eq!(g.edge_count(), edge_lower_bound(n, 3).unwrap());
            let fast = criticality_report(&a, 3).unwrap();
            assert!(fast.used_fast_path && fast.is_edge_critical);
            let full = criticality_report_exhaustive(&a, 3).unwrap();
            assert!(!full.used_fast_path);
            assert_eq!(fast.is_edge_critical, full.is_edge_critical);
            assert_eq!(fast.removable_edges, full.removable_edges);
        }
    }

    #[test]
    fn octahedron_structure() {
        let g = generate_octahedron();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.trace_faces().len(), 8);
        assert_eq!(g.face_pair_degrees(), vec![(3, 3)]);
        assert!(unique_coloring(&g.abstract_graph(), 3).is_some());
    }

    #[test]
    fn size_bounds_values() {
        let b11 = size_bounds(11).unwrap();
        assert_eq!(b11.lower, Rational64::from_integer(21));
        assert_eq!(b11.upper, Rational64::new(71, 3));
        assert!(b11.lower_witnessed);

        let b17 = size_bounds(17).unwrap();
        assert_eq!(b17.lower, Rational64::from_integer(35));
        assert_eq!(b17.upper, Rational64::new(119, 3));
        assert!(b17.lower_witnessed);

        let b12 = size_bounds(12).unwrap();
        assert!(!b12.lower_witnessed);

        assert!(size_bounds(2).is_err());
    }
}
