//! Randomized invariants over the small-graph catalog.

use std::sync::OnceLock;

use proptest::prelude::*;

use ucpg::coloring::partition_census;
use ucpg::discharging::audit;
use ucpg::io_formats::{parse_planar_code, write_planar_code};
use ucpg::search::tiny_plane_graphs;
use ucpg::PlaneGraph;

fn catalog() -> &'static Vec<PlaneGraph> {
    static CATALOG: OnceLock<Vec<PlaneGraph>> = OnceLock::new();
    CATALOG.get_or_init(|| tiny_plane_graphs(6).expect("catalog"))
}

fn catalog_graph() -> impl Strategy<Value = PlaneGraph> {
    (0..catalog().len()).prop_map(|i| catalog()[i].clone())
}

proptest! {
    /// planar_code round trip is byte-identical on anything the writer accepts.
    #[test]
    fn planar_code_round_trip(g in catalog_graph()) {
        let bytes = write_planar_code(&g).unwrap();
        let parsed = parse_planar_code(&bytes).unwrap();
        prop_assert_eq!(parsed.len(), 1);
        prop_assert_eq!(write_planar_code(&parsed[0]).unwrap(), bytes);
    }

    /// The census does not depend on vertex labels.
    #[test]
    fn census_is_relabeling_invariant(
        g in catalog_graph(),
        seed in any::<u64>(),
    ) {
        let a = g.abstract_graph();
        let n = a.vertex_count();
        // cheap deterministic shuffle from the seed
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let relabeled = a.relabel(&perm);
        prop_assert_eq!(partition_census(&a, 3), partition_census(&relabeled, 3));
    }

    /// Deleting an edge and re-inserting it at the original rotation
    /// positions reproduces the rotations bit for bit.
    #[test]
    fn delete_then_restore_is_identity(g in catalog_graph(), pick in any::<usize>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick % edges.len()];
        let pos_v = g.rotation(u).iter().position(|&w| w == v).unwrap();
        let pos_u = g.rotation(v).iter().position(|&w| w == u).unwrap();
        let sub = g.delete_edge(u, v).unwrap();
        let mut rotations = sub.rotations().to_vec();
        rotations[u].insert(pos_v, v);
        rotations[v].insert(pos_u, u);
        prop_assert_eq!(rotations.as_slice(), g.rotations());
    }

    /// Charge conservation holds exactly on every audited graph, and the
    /// face degree sum is twice the edge count.
    #[test]
    fn audit_conserves_charge(g in catalog_graph()) {
        let ledger = audit(&g);
        prop_assert!(ledger.conservation_holds);
        let face_degree_sum: usize = ledger.face_degrees.iter().sum();
        prop_assert_eq!(face_degree_sum, 2 * g.edge_count());
    }
}
