//! Executable audit of a face-charging argument, in exact arithmetic.
//!
//! Every face starts with charge equal to its degree. When the graph has a
//! triangular face and no two faces of degrees `(3, k)` with `k <= 5`
//! share an edge, each edge of each 3-face has a face of degree at least 6
//! on its other side, and that face sends 1/3 across the edge. Charges are
//! integer numerators over the fixed denominator 3, so conservation can be
//! asserted exactly: the total charge stays `2|E|` and every face ends at
//! 4 or more, which forces `|E| >= 2|F|`.

use num_rational::Rational64;

use crate::plane_graph::{normalize_edge, Dart, Edge, FacePair, PlaneGraph};

/// One application of the transfer rule: a 6⁺-face sends 1/3 to a 3-face
/// through a shared edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChargeTransfer {
    pub donor_face: usize,
    pub receiver_face: usize,
    pub edge: Edge,
}

/// Full account of one audit. Charges are stored as numerators over the
/// fixed denominator 3. The verdict fields below `transfers` are only
/// meaningful when `hypothesis_met` is true; without the hypothesis no
/// charge moves and the audit stops at reporting that fact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditLedger {
    /// The graph has at least one 3-face and no adjacent `(3, k)`-faces
    /// with `k <= 5`.
    pub hypothesis_met: bool,
    pub has_triangle_face: bool,
    /// A witnessing low pair when the hypothesis fails on face adjacency.
    pub offending_pair: Option<FacePair>,
    pub face_degrees: Vec<usize>,
    pub initial_charge_thirds: Vec<i64>,
    pub final_charge_thirds: Vec<i64>,
    pub transfers: Vec<ChargeTransfer>,
    /// Sum of final charges equals the sum of initial charges, which is
    /// `2|E|` exactly.
    pub conservation_holds: bool,
    /// Every final charge is at least 4 (numerator at least 12).
    pub all_final_charges_at_least_four: bool,
    /// `|E| >= 2|F|`.
    pub concludes_edge_face_bound: bool,
}

impl AuditLedger {
    pub fn face_count(&self) -> usize {
        self.face_degrees.len()
    }

    pub fn initial_charge(&self, face: usize) -> Rational64 {
        Rational64::new(self.initial_charge_thirds[face], 3)
    }

    pub fn final_charge(&self, face: usize) -> Rational64 {
        Rational64::new(self.final_charge_thirds[face], 3)
    }
}

/// Runs the charging scheme on `g` and reports the ledger. All failure
/// modes are ledger fields; the audit itself cannot fail.
pub fn audit(g: &PlaneGraph) -> AuditLedger {
    let faces = g.trace_faces();
    let face_degrees: Vec<usize> = faces.iter().map(|f| f.degree()).collect();
    let has_triangle_face = face_degrees.contains(&3);
    let offending_pair = g
        .adjacent_face_pairs()
        .into_iter()
        .find(|pair| pair.degrees.0 == 3 && pair.degrees.1 <= 5);
    let hypothesis_met = has_triangle_face && offending_pair.is_none();

    let initial_charge_thirds: Vec<i64> = face_degrees.iter().map(|&d| 3 * d as i64).collect();
    let mut final_charge_thirds = initial_charge_thirds.clone();
    let mut transfers = Vec::new();

    if hypothesis_met {
        // face on each side of every dart
        let mut side = std::collections::BTreeMap::<Dart, usize>::new();
        for (idx, face) in faces.iter().enumerate() {
            for &dart in face.darts() {
                side.insert(dart, idx);
            }
        }
        for (receiver, face) in faces.iter().enumerate() {
            if face.degree() != 3 {
                continue;
            }
            for &(u, v) in face.darts() {
                let donor = side[&(v, u)];
                debug_assert!(face_degrees[donor] >= 6);
                final_charge_thirds[donor] -= 1;
                final_charge_thirds[receiver] += 1;
                transfers.push(ChargeTransfer {
                    donor_face: donor,
                    receiver_face: receiver,
                    edge: normalize_edge(u, v),
                });
            }
        }
    }

    let total_initial: i64 = initial_charge_thirds.iter().sum();
    let total_final: i64 = final_charge_thirds.iter().sum();
    let conservation_holds =
        total_initial == total_final && total_initial == 6 * g.edge_count() as i64;
    let all_final_charges_at_least_four =
        hypothesis_met && final_charge_thirds.iter().all(|&c| c >= 12);
    let concludes_edge_face_bound = hypothesis_met && g.edge_count() >= 2 * face_degrees.len();

    AuditLedger {
        hypothesis_met,
        has_triangle_face,
        offending_pair,
        face_degrees,
        initial_charge_thirds,
        final_charge_thirds,
        transfers,
        conservation_holds,
        all_final_charges_at_least_four,
        concludes_edge_face_bound,
    }
}

/// The inequality chain behind the main structural result: whenever the
/// charging hypothesis holds, the edge count is squeezed by
/// `|E| >= 2|F|` and, via Euler's formula, `|E| <= 2|V| - 4`. Returns
/// true when the chain holds (vacuously when the hypothesis fails), so a
/// scan over uniquely 3-colorable graphs can confirm that none of them
/// meets the hypothesis with room to spare.
pub fn verify_hypothesis_bounds(g: &PlaneGraph) -> bool {
    let ledger = audit(g);
    if !ledger.hypothesis_met {
        return true;
    }
    ledger.concludes_edge_face_bound && g.edge_count() + 4 <= 2 * g.vertex_count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io_formats::parse_rotation_text;

    /// Triangular prism with the three vertical edges subdivided:
    /// n = 9, m = 12, faces {3, 3, 6, 6, 6}.
    pub(crate) const SUBDIVIDED_PRISM_ROT: &str = "\
0: 1 6 2
1: 2 7 0
2: 0 8 1
3: 4 5 6
4: 5 3 7
5: 3 4 8
6: 0 3
7: 1 4
8: 2 5
";

    fn subdivided_prism() -> PlaneGraph {
        parse_rotation_text(SUBDIVIDED_PRISM_ROT).unwrap()
    }

    #[test]
    fn prism_fixture_has_the_expected_shape() {
        let g = subdivided_prism();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.edge_count(), 12);
        let mut degrees: Vec<usize> = g.trace_faces().iter().map(|f| f.degree()).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![3, 3, 6, 6, 6]);
    }

    #[test]
    fn audit_of_the_subdivided_prism() {
        let g = subdivided_prism();
        let ledger = audit(&g);
        assert!(ledger.hypothesis_met);
        assert_eq!(ledger.transfers.len(), 6);
        for (face, &degree) in ledger.face_degrees.iter().enumerate() {
            match degree {
                3 => assert_eq!(ledger.final_charge(face), Rational64::from_integer(4)),
                6 => assert_eq!(ledger.final_charge(face), Rational64::new(16, 3)),
                other => panic!("unexpected face degree {other}"),
            }
        }
        assert!(ledger.conservation_holds);
        let total: i64 = ledger.final_charge_thirds.iter().sum();
        assert_eq!(total, 6 * 12); // 2m in thirds
        assert!(ledger.all_final_charges_at_least_four);
        assert!(ledger.concludes_edge_face_bound);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(ledger.face_count(), 5);
    }

    #[test]
    fn k3_fails_the_hypothesis_on_adjacent_triangles() {
        let g = PlaneGraph::from_rotation_system(3, vec![vec![1, 2], vec![2, 0], vec![0, 1]])
            .unwrap();
        let ledger = audit(&g);
        assert!(!ledger.hypothesis_met);
        assert!(ledger.has_triangle_face);
        assert_eq!(ledger.offending_pair.unwrap().degrees, (3, 3));
        assert!(ledger.transfers.is_empty());
        assert_eq!(ledger.initial_charge_thirds, ledger.final_charge_thirds);
        assert!(ledger.conservation_holds);
    }

    #[test]
    fn bound_chain_holds_on_the_prism_and_vacuously_on_k3() {
        assert!(verify_hypothesis_bounds(&subdivided_prism()));
        let k3 = PlaneGraph::from_rotation_system(3, vec![vec![1, 2], vec![2, 0], vec![0, 1]])
            .unwrap();
        assert!(verify_hypothesis_bounds(&k3));
    }

    #[test]
    fn gk_fails_the_hypothesis_on_a_3_4_pair() {
        let g = crate::families::generate_gk(3).unwrap();
        let ledger = audit(&g);
        assert!(!ledger.hypothesis_met);
        assert!(ledger.has_triangle_face);
        assert_eq!(ledger.offending_pair.unwrap().degrees, (3, 4));
    }

    #[test]
    fn bound_chain_holds_across_the_tiny_catalog() {
        for g in crate::search::tiny_plane_graphs(6).unwrap() {
            assert!(verify_hypothesis_bounds(&g));
        }
    }

    #[test]
    fn prism_is_not_uniquely_3_colorable() {
        let g = subdivided_prism();
        assert!(!crate::coloring::is_uniquely_k_colorable(&g.abstract_graph(), 3));
    }

    #[test]
    fn audit_is_independent_of_face_order() {
        // relabeling the vertices permutes the face list; the verdicts stay
        let g = subdivided_prism();
        let perm = [4, 7, 2, 0, 8, 1, 3, 6, 5];
        let mut rotations = vec![Vec::new(); 9];
        for (v, rot) in g.rotations().iter().enumerate() {
            rotations[perm[v]] = rot.iter().map(|&w| perm[w]).collect();
        }
        let relabeled = PlaneGraph::from_rotation_system(9, rotations).unwrap();
        let a = audit(&g);
        let b = audit(&relabeled);
        assert_eq!(a.hypothesis_met, b.hypothesis_met);
        assert_eq!(a.conservation_holds, b.conservation_holds);
        assert_eq!(a.concludes_edge_face_bound, b.concludes_edge_face_bound);
        let mut fa = a.final_charge_thirds.clone();
        let mut fb = b.final_charge_thirds.clone();
        fa.sort_unstable();
        fb.sort_unstable();
        assert_eq!(fa, fb);
    }
}
