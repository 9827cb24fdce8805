//! Plane graphs given as rotation systems.
//!
//! A [`PlaneGraph`] stores, for every vertex, the counterclockwise cyclic
//! order of its neighbors. Everything else (edge set, darts, faces) is
//! derived from the rotations. Construction validates the full contract:
//! simple, connected, and a sphere embedding (Euler's formula with the
//! traced faces).

use std::collections::BTreeMap;
use std::collections::VecDeque;

use thiserror::Error;

/// An undirected edge, stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// A dart is one of the two directed halves of an edge.
pub type Dart = (usize, usize);

pub fn normalize_edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlaneGraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("expected {expected} rotation lists, got {got}")]
    RotationCountMismatch { expected: usize, got: usize },
    #[error("vertex label {label} out of range 0..{n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("neighbor {neighbor} repeated in the rotation of vertex {vertex}")]
    RepeatedNeighbor { vertex: usize, neighbor: usize },
    #[error("asymmetric adjacency: {0} lists {1} but {1} does not list {0}")]
    AsymmetricAdjacency(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("not a sphere embedding: n={n}, m={m} and {faces} traced faces violate Euler's formula")]
    NonzeroGenus { n: usize, m: usize, faces: usize },
    #[error("edge ({0}, {1}) not present")]
    EdgeNotPresent(usize, usize),
}

/// A face traced from the rotation system: the cyclic sequence of darts on
/// its boundary. A bridge contributes both of its darts to the same face,
/// so it is counted twice in the face degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    darts: Vec<Dart>,
}

impl Face {
    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn degree(&self) -> usize {
        self.darts.len()
    }

    /// Vertices on the boundary walk, in walk order (with repetitions).
    pub fn walk_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().map(|&(u, _)| u)
    }

    /// Undirected edges on the boundary, deduplicated and sorted.
    pub fn boundary_edges(&self) -> Vec<Edge> {
        let mut edges: Vec<Edge> = self.darts.iter().map(|&(u, v)| normalize_edge(u, v)).collect();
        edges.sort_unstable();
        edges.dedup();
        edges
    }
}

/// Two distinct faces sharing at least one edge, with their degree pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FacePair {
    /// Indices into the face list, smaller first.
    pub faces: (usize, usize),
    /// Face degrees `(i, j)` with `i <= j`.
    pub degrees: (usize, usize),
    /// Number of undirected edges the two faces share.
    pub shared_edges: usize,
}

/// A connected simple plane graph with a fixed combinatorial embedding.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaneGraph {
    rotations: Vec<Vec<usize>>,
    edge_count: usize,
}

impl PlaneGraph {
    /// Validates a rotation system and wraps it. `rotations[v]` is the
    /// counterclockwise cyclic order of the neighbors of `v`.
    pub fn from_rotation_system(
        n: usize,
        rotations: Vec<Vec<usize>>,
    ) -> Result<Self, PlaneGraphError> {
        if n == 0 {
            return Err(PlaneGraphError::Empty);
        }
        if rotations.len() != n {
            return Err(PlaneGraphError::RotationCountMismatch {
                expected: n,
                got: rotations.len(),
            });
        }
        let mut dart_total = 0usize;
        for (v, rot) in rotations.iter().enumerate() {
            let mut seen = vec![false; n];
            for &w in rot {
                if w >= n {
                    return Err(PlaneGraphError::LabelOutOfRange { label: w, n });
                }
                if w == v {
                    return Err(PlaneGraphError::SelfLoop(v));
                }
                if seen[w] {
                    return Err(PlaneGraphError::RepeatedNeighbor { vertex: v, neighbor: w });
                }
                seen[w] = true;
            }
            dart_total += rot.len();
        }
        for (v, rot) in rotations.iter().enumerate() {
            for &w in rot {
                if !rotations[w].contains(&v) {
                    return Err(PlaneGraphError::AsymmetricAdjacency(v, w));
                }
            }
        }
        let edge_count = dart_total / 2;
        let graph = PlaneGraph { rotations, edge_count };
        if !graph.is_connected_internal() {
            return Err(PlaneGraphError::Disconnected);
        }
        let faces = trace_face_cycles(&graph.rotations);
        let face_count = if edge_count == 0 { 1 } else { faces.len() };
        if n + face_count != edge_count + 2 {
            return Err(PlaneGraphError::NonzeroGenus { n, m: edge_count, faces: face_count });
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.rotations.len() && self.rotations[u].contains(&v)
    }

    /// All undirected edges, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut edges = Vec::with_capacity(self.edge_count);
        for (u, rot) in self.rotations.iter().enumerate() {
            for &v in rot {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        edges.sort_unstable();
        edges
    }

    fn is_connected_internal(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.rotations[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }

    /// Traces every face of the embedding. Deterministic: each trace starts
    /// at the lowest dart (by tail vertex, rotation slot) not yet visited.
    /// An edgeless graph has the single sphere face, reported empty.
    pub fn trace_faces(&self) -> Vec<Face> {
        let cycles = trace_face_cycles(&self.rotations);
        if self.edge_count == 0 {
            return vec![Face { darts: Vec::new() }];
        }
        cycles.into_iter().map(|darts| Face { darts }).collect()
    }

    pub fn face_degree_multiset(&self) -> BTreeMap<usize, usize> {
        let mut multiset = BTreeMap::new();
        for face in self.trace_faces() {
            *multiset.entry(face.degree()).or_insert(0) += 1;
        }
        multiset
    }

    /// All unordered pairs of distinct faces sharing at least one edge.
    /// A bridge has the same face on both sides and contributes no pair.
    pub fn adjacent_face_pairs(&self) -> Vec<FacePair> {
        let faces = self.trace_faces();
        // face index on each side of every dart
        let mut side: BTreeMap<Dart, usize> = BTreeMap::new();
        for (idx, face) in faces.iter().enumerate() {
            for &dart in face.darts() {
                side.insert(dart, idx);
            }
        }
        let mut shared: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (u, v) in self.edges() {
            let f1 = side[&(u, v)];
            let f2 = side[&(v, u)];
            if f1 != f2 {
                let key = if f1 < f2 { (f1, f2) } else { (f2, f1) };
                *shared.entry(key).or_insert(0) += 1;
            }
        }
        shared
            .into_iter()
            .map(|((f1, f2), count)| {
                let (d1, d2) = (faces[f1].degree(), faces[f2].degree());
                let degrees = if d1 <= d2 { (d1, d2) } else { (d2, d1) };
                FacePair { faces: (f1, f2), degrees, shared_edges: count }
            })
            .collect()
    }

    /// Degree pairs of the adjacent face pairs, as a deduplicated set.
    pub fn face_pair_degrees(&self) -> Vec<(usize, usize)> {
        let mut degrees: Vec<(usize, usize)> =
            self.adjacent_face_pairs().iter().map(|p| p.degrees).collect();
        degrees.sort_unstable();
        degrees.dedup();
        degrees
    }

    /// Vertex connectivity test for `k` in `1..=3`: true iff `|V| > k` and
    /// removing any vertex set smaller than `k` leaves the graph connected.
    pub fn is_k_connected(&self, k: usize) -> bool {
        self.abstract_graph().is_k_connected(k)
    }

    /// Number of vertex triples inducing a 3-cycle of the abstract graph.
    pub fn count_triangles(&self) -> usize {
        self.abstract_graph().count_triangles()
    }

    /// Removes an edge from both rotations, keeping the positions of every
    /// other neighbor. The result may be disconnected and is therefore not
    /// a `PlaneGraph`; it is flagged instead.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<EmbeddedSubgraph, PlaneGraphError> {
        if !self.has_edge(u, v) {
            return Err(PlaneGraphError::EdgeNotPresent(u, v));
        }
        let mut rotations = self.rotations.clone();
        rotations[u].retain(|&w| w != v);
        rotations[v].retain(|&w| w != u);
        let connected = connected_with_rotations(&rotations);
        Ok(EmbeddedSubgraph { rotations, connected })
    }

    /// The underlying abstract graph (embedding discarded).
    pub fn abstract_graph(&self) -> AbstractGraph {
        let adj = self
            .rotations
            .iter()
            .map(|rot| {
                let mut sorted = rot.clone();
                sorted.sort_unstable();
                sorted
            })
            .collect();
        AbstractGraph { adj }
    }
}

/// Face tracing shared with partial embeddings: returns the dart cycles of
/// the rotation system. From dart `(u, v)` the walk continues with `(v, w)`
/// where `w` immediately precedes `u` in the rotation at `v`.
pub(crate) fn trace_face_cycles(rotations: &[Vec<usize>]) -> Vec<Vec<Dart>> {
    let n = rotations.len();
    let mut slot_of: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0usize);
    let mut dart_tail = Vec::new();
    for (v, rot) in rotations.iter().enumerate() {
        for (slot, &w) in rot.iter().enumerate() {
            slot_of[v].insert(w, slot);
            dart_tail.push(v);
        }
        offsets.push(offsets.last().unwrap() + rot.len());
    }
    let mut visited = vec![false; dart_tail.len()];
    let mut faces = Vec::new();
    for start in 0..dart_tail.len() {
        if visited[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut dart = start;
        loop {
            visited[dart] = true;
            let u = dart_tail[dart];
            let v = rotations[u][dart - offsets[u]];
            cycle.push((u, v));
            let slot_u_at_v = slot_of[v][&u];
            let deg_v = rotations[v].len();
            let next_slot = (slot_u_at_v + deg_v - 1) % deg_v;
            dart = offsets[v] + next_slot;
            if dart == start {
                break;
            }
        }
        faces.push(cycle);
    }
    faces
}

fn connected_with_rotations(rotations: &[Vec<usize>]) -> bool {
    let n = rotations.len();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    seen[0] = true;
    queue.push_back(0);
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for &v in &rotations[u] {
            if !seen[v] {
                seen[v] = true;
                reached += 1;
                queue.push_back(v);
            }
        }
    }
    reached == n
}

/// Result of deleting an edge from a plane graph: the embedded subgraph
/// with the edge removed from both rotations. Kept out of `PlaneGraph`
/// because it may be disconnected; face-level operations are barred, the
/// abstract graph remains available for colorability checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedSubgraph {
    rotations: Vec<Vec<usize>>,
    connected: bool,
}

impl EmbeddedSubgraph {
    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotations.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Re-validates as a plane graph (connectivity and genus re-derived).
    pub fn into_plane_graph(self) -> Result<PlaneGraph, PlaneGraphError> {
        let n = self.rotations.len();
        PlaneGraph::from_rotation_system(n, self.rotations)
    }

    pub fn abstract_graph(&self) -> AbstractGraph {
        let adj = self
            .rotations
            .iter()
            .map(|rot| {
                let mut sorted = rot.clone();
                sorted.sort_unstable();
                sorted
            })
            .collect();
        AbstractGraph { adj }
    }
}

/// A simple undirected graph without embedding data, used wherever a
/// property does not depend on the drawing (colorings, connectivity,
/// triangle counts, edge deletion for criticality).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbstractGraph {
    adj: Vec<Vec<usize>>, // sorted neighbor lists
}

impl AbstractGraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, PlaneGraphError> {
        if n == 0 {
            return Err(PlaneGraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(PlaneGraphError::LabelOutOfRange { label: u, n });
            }
            if v >= n {
                return Err(PlaneGraphError::LabelOutOfRange { label: v, n });
            }
            if u == v {
                return Err(PlaneGraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            for pair in list.windows(2) {
                if pair[0] == pair[1] {
                    return Err(PlaneGraphError::RepeatedNeighbor { vertex: v, neighbor: pair[0] });
                }
            }
        }
        Ok(AbstractGraph { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut edges = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        edges
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self, PlaneGraphError> {
        if !self.has_edge(u, v) {
            return Err(PlaneGraphError::EdgeNotPresent(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u].retain(|&w| w != v);
        adj[v].retain(|&w| w != u);
        Ok(AbstractGraph { adj })
    }

    /// Relabels the vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.adj.len();
        assert_eq!(perm.len(), n);
        let mut adj = vec![Vec::new(); n];
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                adj[perm[u]].push(perm[v]);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        AbstractGraph { adj }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_avoiding(&[])
    }

    fn is_connected_avoiding(&self, removed: &[usize]) -> bool {
        let n = self.adj.len();
        let mut blocked = vec![false; n];
        for &v in removed {
            blocked[v] = true;
        }
        let Some(start) = (0..n).find(|&v| !blocked[v]) else {
            return false;
        };
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[start] = true;
        queue.push_back(start);
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] && !blocked[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n - removed.len()
    }

    /// Brute-force vertex connectivity test, `k` in `1..=3`: removes every
    /// vertex subset of size below `k` and re-tests connectivity.
    pub fn is_k_connected(&self, k: usize) -> bool {
        assert!((1..=3).contains(&k), "k must be between 1 and 3");
        let n = self.adj.len();
        if n <= k {
            return false;
        }
        if !self.is_connected() {
            return false;
        }
        if k >= 2 {
            for v in 0..n {
                if !self.is_connected_avoiding(&[v]) {
                    return false;
                }
            }
        }
        if k >= 3 {
            for u in 0..n {
                for v in u + 1..n {
                    if !self.is_connected_avoiding(&[u, v]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn count_triangles(&self) -> usize {
        let mut count = 0;
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if v <= u {
                    continue;
                }
                // common neighbors above v, via the sorted lists
                let mut a = self.adj[u].iter().filter(|&&w| w > v).peekable();
                let mut b = self.adj[v].iter().filter(|&&w| w > v).peekable();
                while let (Some(&&x), Some(&&y)) = (a.peek(), b.peek()) {
                    match x.cmp(&y) {
                        std::cmp::Ordering::Less => {
                            a.next();
                        }
                        std::cmp::Ordering::Greater => {
                            b.next();
                        }
                        std::cmp::Ordering::Equal => {
                            count += 1;
                            a.next();
                            b.next();
                        }
                    }
                }
            }
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn k3() -> PlaneGraph {
        PlaneGraph::from_rotation_system(3, vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap()
    }

    pub(crate) fn k2() -> PlaneGraph {
        PlaneGraph::from_rotation_system(2, vec![vec![1], vec![0]]).unwrap()
    }

    #[test]
    fn k3_accepted() {
        let g = k3();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn k2_is_a_single_bridge() {
        let g = k2();
        assert_eq!(g.edge_count(), 1);
        let faces = g.trace_faces();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].degree(), 2);
    }

    #[test]
    fn asymmetric_adjacency_rejected() {
        let err = PlaneGraph::from_rotation_system(2, vec![vec![1], vec![]]).unwrap_err();
        assert_eq!(err, PlaneGraphError::AsymmetricAdjacency(0, 1));
    }

    #[test]
    fn self_loop_rejected() {
        let err = PlaneGraph::from_rotation_system(2, vec![vec![0, 1], vec![0]]).unwrap_err();
        assert_eq!(err, PlaneGraphError::SelfLoop(0));
    }

    #[test]
    fn multi_edge_rejected() {
        let err = PlaneGraph::from_rotation_system(2, vec![vec![1, 1], vec![0, 0]]).unwrap_err();
        assert_eq!(err, PlaneGraphError::RepeatedNeighbor { vertex: 0, neighbor: 1 });
    }

    #[test]
    fn disconnected_rejected() {
        let err =
            PlaneGraph::from_rotation_system(4, vec![vec![1], vec![0], vec![3], vec![2]])
                .unwrap_err();
        assert_eq!(err, PlaneGraphError::Disconnected);
    }

    #[test]
    fn nonzero_genus_rejected() {
        // K4 with one rotation flipped embeds on the torus, not the sphere
        let err = PlaneGraph::from_rotation_system(
            4,
            vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 3, 1], vec![0, 1, 2]],
        )
        .unwrap_err();
        assert!(matches!(err, PlaneGraphError::NonzeroGenus { .. }));
    }

    #[test]
    fn k4_sphere_embedding_accepted() {
        let g = PlaneGraph::from_rotation_system(
            4,
            vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
        )
        .unwrap();
        assert_eq!(g.trace_faces().len(), 4);
        assert_eq!(g.count_triangles(), 4);
    }

    #[test]
    fn k3_faces() {
        let g = k3();
        let faces = g.trace_faces();
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|f| f.degree() == 3));
        // Euler and the degree sum
        let degree_sum: usize = faces.iter().map(Face::degree).sum();
        assert_eq!(degree_sum, 2 * g.edge_count());
    }

    #[test]
    fn single_vertex_has_one_empty_face() {
        let g = PlaneGraph::from_rotation_system(1, vec![vec![]]).unwrap();
        let faces = g.trace_faces();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].degree(), 0);
    }

    #[test]
    fn face_tracing_is_deterministic() {
        let g = k3();
        assert_eq!(g.trace_faces(), g.trace_faces());
    }

    #[test]
    fn k3_face_pairs() {
        let pairs = k3().adjacent_face_pairs();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].degrees, (3, 3));
        assert_eq!(pairs[0].shared_edges, 3);
    }

    #[test]
    fn bridge_contributes_no_pair() {
        assert!(k2().adjacent_face_pairs().is_empty());
    }

    #[test]
    fn connectivity_conventions() {
        assert!(k3().is_k_connected(1));
        assert!(k3().is_k_connected(2));
        assert!(!k3().is_k_connected(3)); // |V| = 3 is not > 3
        assert!(!k2().is_k_connected(2)); // |V| = 2 is not > 2
        assert!(k2().is_k_connected(1));
    }

    #[test]
    fn triangle_counts() {
        assert_eq!(k3().count_triangles(), 1);
        assert_eq!(k2().count_triangles(), 0);
    }

    #[test]
    fn delete_edge_from_k3_leaves_a_path() {
        let sub = k3().delete_edge(0, 1).unwrap();
        assert!(sub.is_connected());
        assert_eq!(sub.edge_count(), 2);
        let path = sub.into_plane_graph().unwrap();
        let faces = path.trace_faces();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].degree(), 4);
    }

    #[test]
    fn delete_bridge_flags_disconnected() {
        let sub = k2().delete_edge(0, 1).unwrap();
        assert!(!sub.is_connected());
        assert_eq!(sub.edge_count(), 0);
    }

    #[test]
    fn delete_missing_edge_is_an_error() {
        let err = k3().delete_edge(0, 0).unwrap_err();
        assert_eq!(err, PlaneGraphError::EdgeNotPresent(0, 0));
    }

    #[test]
    fn delete_and_restore_reproduces_rotations() {
        let g = k3();
        let (u, v) = (1, 2);
        let pos_v_in_u = g.rotation(u).iter().position(|&w| w == v).unwrap();
        let pos_u_in_v = g.rotation(v).iter().position(|&w| w == u).unwrap();
        let sub = g.delete_edge(u, v).unwrap();
        let mut rotations = sub.rotations().to_vec();
        rotations[u].insert(pos_v_in_u, v);
        rotations[v].insert(pos_u_in_v, u);
        assert_eq!(rotations.as_slice(), g.rotations());
    }

    #[test]
    fn abstract_graph_triangle_count_on_overlapping_triangles() {
        // two triangles sharing an edge
        let g = AbstractGraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (1, 3), (2, 3)]).unwrap();
        assert_eq!(g.count_triangles(), 2);
        assert!(g.is_k_connected(2));
        assert!(!g.is_k_connected(3));
    }
}
