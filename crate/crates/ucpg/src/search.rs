//! Exhaustive desk-scale search: a generator for all small connected
//! plane graphs, per-graph property records, filtered catalog scans, and
//! the counterexample hunts built on them.
//!
//! Graph enumeration works in two steps. Connected abstract graphs are
//! grown one vertex at a time and deduplicated by their canonical form
//! (minimum adjacency encoding over all vertex orderings). Sphere
//! embeddings of each representative are then enumerated directly: a
//! partial embedding is extended by placing the next vertex inside one of
//! its faces, attaching it to chosen occurrences of its neighbors on the
//! face walk. Every genus-0 rotation system arises exactly once this way,
//! and non-planar graphs are the ones with no completion, so the same
//! recursion serves both the all-embeddings catalog and the
//! one-representative catalog.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::coloring::{class_pair_connectivity, edge_lower_bound, unique_coloring};
use crate::plane_graph::{trace_face_cycles, AbstractGraph, PlaneGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("nMax must be between 1 and {MAX_TINY_VERTICES}, got {0}")]
    NMaxOutOfRange(usize),
    #[error("forbidden pair ({0}, {1}) is not one of (3,3), (3,4), (3,5)")]
    InvalidForbiddenPair(usize, usize),
    #[error("forbidding all of (3,3), (3,4), (3,5) leaves nothing for a graph with 3-faces")]
    AllPairsForbidden,
}

/// Combinatorial blow-up guard for the built-in generator.
pub const MAX_TINY_VERTICES: usize = 8;

const CANONICAL_VERTEX_LIMIT: usize = 11;

/// Minimum adjacency encoding of `g` over all vertex orderings. Bits are
/// laid out pairwise: for position `v` taken in order, the adjacency of
/// `v` against positions `0..v`, earlier bits more significant. Computed
/// by branch-and-bound over partial orderings.
pub fn canonical_code(g: &AbstractGraph) -> u64 {
    let n = g.vertex_count();
    assert!(
        n <= CANONICAL_VERTEX_LIMIT,
        "canonical codes limited to {CANONICAL_VERTEX_LIMIT} vertices"
    );
    let total_bits = n * (n - 1) / 2;
    let mut adj_masks = vec![0u64; n];
    for (u, v) in g.edges() {
        adj_masks[u] |= 1 << v;
        adj_masks[v] |= 1 << u;
    }
    let mut best = if total_bits == 64 { u64::MAX } else { (1u64 << total_bits) - 1 };
    let mut order = Vec::with_capacity(n);
    minimize_code(&adj_masks, &mut order, 0, 0, 0, total_bits, &mut best);
    best
}

fn minimize_code(
    adj_masks: &[u64],
    order: &mut Vec<usize>,
    used: u64,
    partial: u64,
    bits_done: usize,
    total_bits: usize,
    best: &mut u64,
) {
    let n = adj_masks.len();
    let pos = order.len();
    if pos == n {
        if partial < *best {
            *best = partial;
        }
        return;
    }
    for cand in 0..n {
        if used >> cand & 1 == 1 {
            continue;
        }
        let mut extended = partial;
        for &prev in order.iter() {
            extended = (extended << 1) | (adj_masks[cand] >> prev & 1);
        }
        let bits_now = bits_done + pos;
        if bits_now > 0 && extended > (*best >> (total_bits - bits_now)) {
            continue;
        }
        order.push(cand);
        minimize_code(adj_masks, order, used | (1 << cand), extended, bits_now, total_bits, best);
        order.pop();
    }
}

/// Rebuilds the canonically labeled graph from its code.
pub fn graph_from_code(n: usize, code: u64) -> AbstractGraph {
    let total_bits = n * (n - 1) / 2;
    let mut edges = Vec::new();
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if code >> (total_bits - 1 - bit) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    AbstractGraph::from_edges(n, &edges).expect("codes only encode simple graphs")
}

/// All connected simple graphs with at most `n_max` vertices, one
/// canonically labeled representative per isomorphism class, ordered by
/// vertex count and then by code.
pub fn connected_graphs_up_to(n_max: usize) -> Result<Vec<AbstractGraph>, SearchError> {
    if n_max == 0 || n_max > MAX_TINY_VERTICES {
        return Err(SearchError::NMaxOutOfRange(n_max));
    }
    let mut catalog = vec![AbstractGraph::from_edges(1, &[]).expect("single vertex")];
    let mut level: Vec<u64> = vec![0]; // the one-vertex graph
    for n in 2..=n_max {
        // every connected graph on n vertices is a connected graph on
        // n - 1 vertices plus one vertex attached to a nonempty subset
        let mut next = std::collections::BTreeSet::new();
        let parents: Vec<AbstractGraph> =
            level.iter().map(|&code| graph_from_code(n - 1, code)).collect();
        let codes = map_parents_to_child_codes(&parents, n);
        for code_set in codes {
            next.extend(code_set);
        }
        level = next.into_iter().collect();
        catalog.extend(level.iter().map(|&code| graph_from_code(n, code)));
    }
    Ok(catalog)
}

fn child_codes_of(parent: &AbstractGraph, n: usize) -> Vec<u64> {
    let base_edges = parent.edges();
    let mut codes = Vec::with_capacity((1usize << (n - 1)) - 1);
    for subset in 1u32..(1 << (n - 1)) {
        let mut edges = base_edges.clone();
        for u in 0..n - 1 {
            if subset >> u & 1 == 1 {
                edges.push((u, n - 1));
            }
        }
        let child = AbstractGraph::from_edges(n, &edges).expect("extension stays simple");
        codes.push(canonical_code(&child));
    }
    codes
}

#[cfg(feature = "parallel")]
fn map_parents_to_child_codes(parents: &[AbstractGraph], n: usize) -> Vec<Vec<u64>> {
    parents.par_iter().map(|parent| child_codes_of(parent, n)).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_parents_to_child_codes(parents: &[AbstractGraph], n: usize) -> Vec<Vec<u64>> {
    parents.iter().map(|parent| child_codes_of(parent, n)).collect()
}

/// Every sphere embedding of a connected graph, as distinct rotation
/// systems. Empty when the graph is non-planar or disconnected.
pub fn planar_embeddings(g: &AbstractGraph) -> Vec<PlaneGraph> {
    embed(g, None)
}

/// One sphere embedding, or `None` for non-planar input.
pub fn one_planar_embedding(g: &AbstractGraph) -> Option<PlaneGraph> {
    embed(g, Some(1)).pop()
}

fn embed(g: &AbstractGraph, limit: Option<usize>) -> Vec<PlaneGraph> {
    let n = g.vertex_count();
    if !g.is_connected() {
        return Vec::new();
    }
    if n == 1 {
        return vec![PlaneGraph::from_rotation_system(1, vec![vec![]]).expect("single vertex")];
    }
    let order = insertion_order(g);
    let mut rotations = vec![Vec::new(); n];
    rotations[order[0]] = vec![order[1]];
    rotations[order[1]] = vec![order[0]];
    let mut placed = vec![false; n];
    placed[order[0]] = true;
    placed[order[1]] = true;
    let mut results = Vec::new();
    insert_vertices(g, &order, 2, &mut placed, &rotations, limit, &mut results);
    results
}

/// Dense-first connected order: grow from a maximum-degree vertex, always
/// taking the unplaced vertex with the most placed neighbors. Dense
/// prefixes keep the number of partial embeddings small.
fn insertion_order(g: &AbstractGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let start = (0..n)
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .expect("graph is nonempty");
    let mut placed = vec![false; n];
    placed[start] = true;
    let mut order = vec![start];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let placed_neighbors = g.neighbors(v).iter().filter(|&&u| placed[u]).count();
                (placed_neighbors, g.degree(v), std::cmp::Reverse(v))
            })
            .expect("vertices remain");
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Places `order[idx..]` one vertex at a time. The new vertex goes inside
/// one face of the partial embedding; for each of its already-placed
/// neighbors one occurrence on the face walk is chosen, the new edges
/// split the face there. Distinct choices yield distinct embeddings, and
/// all embeddings of the extended graph arise, so the recursion
/// enumerates exactly the genus-0 rotation systems. Returns true when the
/// result limit is reached.
fn insert_vertices(
    g: &AbstractGraph,
    order: &[usize],
    idx: usize,
    placed: &mut Vec<bool>,
    rotations: &[Vec<usize>],
    limit: Option<usize>,
    results: &mut Vec<PlaneGraph>,
) -> bool {
    let n = g.vertex_count();
    if idx == n {
        let graph = PlaneGraph::from_rotation_system(n, rotations.to_vec())
            .expect("face insertion preserves the sphere embedding");
        results.push(graph);
        return limit.is_some_and(|cap| results.len() >= cap);
    }
    let v = order[idx];
    let neighbors: Vec<usize> =
        g.neighbors(v).iter().copied().filter(|&u| placed[u]).collect();
    debug_assert!(!neighbors.is_empty(), "insertion order keeps prefixes connected");
    let faces = trace_face_cycles(rotations);
    placed[v] = true;
    for face in &faces {
        let walk_len = face.len();
        let occurrences: Vec<Vec<usize>> = neighbors
            .iter()
            .map(|&u| {
                (0..walk_len).filter(|&t| face[t].0 == u).collect::<Vec<usize>>()
            })
            .collect();
        if occurrences.iter().any(Vec::is_empty) {
            continue;
        }
        // odometer over one occurrence per neighbor
        let mut choice = vec![0usize; neighbors.len()];
        loop {
            let mut chosen: Vec<(usize, usize)> = neighbors
                .iter()
                .enumerate()
                .map(|(i, &u)| (occurrences[i][choice[i]], u))
                .collect();
            chosen.sort_unstable();
            let mut extended = rotations.to_vec();
            extended[v] = chosen.iter().map(|&(_, u)| u).collect();
            for &(t, u) in &chosen {
                let before = face[(t + walk_len - 1) % walk_len].0;
                let pos = extended[u]
                    .iter()
                    .position(|&w| w == before)
                    .expect("walk predecessor is a neighbor");
                extended[u].insert(pos, v);
            }
            if insert_vertices(g, order, idx + 1, placed, &extended, limit, results) {
                placed[v] = false;
                return true;
            }
            // advance the odometer
            let mut slot = 0;
            loop {
                if slot == choice.len() {
                    break;
                }
                choice[slot] += 1;
                if choice[slot] < occurrences[slot].len() {
                    break;
                }
                choice[slot] = 0;
                slot += 1;
            }
            if slot == choice.len() {
                break;
            }
        }
    }
    placed[v] = false;
    false
}

/// Which embeddings the catalog keeps per abstract isomorphism class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbeddingMode {
    /// One sphere embedding per graph.
    Representative,
    /// Every sphere embedding. Uniqueness and edge bounds do not depend
    /// on the embedding, but face structure does, so face-level scans
    /// default to this mode.
    AllEmbeddings,
}

/// All connected simple plane graphs with at most `n_max` vertices, one
/// embedding per abstract isomorphism class, in deterministic order.
pub fn tiny_plane_graphs(n_max: usize) -> Result<Vec<PlaneGraph>, SearchError> {
    tiny_catalog(n_max, EmbeddingMode::Representative)
}

/// The built-in catalog in either embedding mode.
pub fn tiny_catalog(n_max: usize, mode: EmbeddingMode) -> Result<Vec<PlaneGraph>, SearchError> {
    let graphs = connected_graphs_up_to(n_max)?;
    let embedded: Vec<Vec<PlaneGraph>> = match mode {
        EmbeddingMode::Representative => {
            map_graphs(&graphs, |g| one_planar_embedding(g).into_iter().collect())
        }
        EmbeddingMode::AllEmbeddings => map_graphs(&graphs, planar_embeddings),
    };
    Ok(embedded.into_iter().flatten().collect())
}

#[cfg(feature = "parallel")]
fn map_graphs<F>(graphs: &[AbstractGraph], f: F) -> Vec<Vec<PlaneGraph>>
where
    F: Fn(&AbstractGraph) -> Vec<PlaneGraph> + Sync + Send,
{
    graphs.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_graphs<F>(graphs: &[AbstractGraph], f: F) -> Vec<Vec<PlaneGraph>>
where
    F: Fn(&AbstractGraph) -> Vec<PlaneGraph> + Sync + Send,
{
    graphs.iter().map(f).collect()
}

/// Named property failures a scan can record. Each one is a claim that
/// holds for every uniquely 3-colorable plane graph, so a populated list
/// is a counterexample candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// Uniquely 3-colorable but no adjacent (3, k)-faces with k <= 5.
    FacePairBound,
    /// Some union of two color classes is disconnected.
    ClassPairConnectivity,
    /// Fewer than 2n - 3 edges.
    EdgeBound,
    /// Fewer than 2 triangles at n >= 4, or fewer than 3 at n >= 5.
    TriangleBound,
}

impl Violation {
    pub const ALL: [Violation; 4] = [
        Violation::FacePairBound,
        Violation::ClassPairConnectivity,
        Violation::EdgeBound,
        Violation::TriangleBound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Violation::FacePairBound => "face-pair-bound",
            Violation::ClassPairConnectivity => "class-pair-connectivity",
            Violation::EdgeBound => "edge-bound",
            Violation::TriangleBound => "triangle-bound",
        }
    }

    pub fn from_name(name: &str) -> Option<Violation> {
        Violation::ALL.into_iter().find(|v| v.name() == name)
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-graph verdict bundle. Reproducible from the catalog and the index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchRecord {
    /// Index of the graph in its catalog.
    pub id: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub uniquely_3_colorable: bool,
    /// Degree pairs of adjacent faces, deduplicated and sorted.
    pub face_pair_degrees: Vec<(usize, usize)>,
    /// Minimum `k` such that an adjacent (3, k) pair exists.
    pub min_adjacent_3k: Option<usize>,
    pub triangle_count: usize,
    pub is_3_connected: bool,
    pub violations: Vec<Violation>,
}

impl SearchRecord {
    /// Stable one-line text form, the scan output format.
    pub fn to_line(&self) -> String {
        let pairs = if self.face_pair_degrees.is_empty() {
            "-".to_string()
        } else {
            self.face_pair_degrees
                .iter()
                .map(|(i, j)| format!("{i}-{j}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        let min3k = match self.min_adjacent_3k {
            Some(k) => k.to_string(),
            None => "none".to_string(),
        };
        let violations = if self.violations.is_empty() {
            "-".to_string()
        } else {
            self.violations.iter().map(|v| v.name().to_string()).collect::<Vec<_>>().join(",")
        };
        format!(
            "id={} n={} m={} unique3={} pairs={} min3k={} triangles={} conn3={} violations={}",
            self.id,
            self.vertex_count,
            self.edge_count,
            yes_no(self.uniquely_3_colorable),
            pairs,
            min3k,
            self.triangle_count,
            yes_no(self.is_3_connected),
            violations,
        )
    }

    /// Parses a line produced by [`SearchRecord::to_line`].
    pub fn parse_line(line: &str) -> Option<SearchRecord> {
        let mut fields = BTreeMap::new();
        for token in line.split_whitespace() {
            let (key, value) = token.split_once('=')?;
            fields.insert(key.to_string(), value.to_string());
        }
        let face_pair_degrees = match fields.get("pairs")?.as_str() {
            "-" => Vec::new(),
            text => text
                .split(',')
                .map(|pair| {
                    let (i, j) = pair.split_once('-')?;
                    Some((i.parse().ok()?, j.parse().ok()?))
                })
                .collect::<Option<Vec<_>>>()?,
        };
        let min_adjacent_3k = match fields.get("min3k")?.as_str() {
            "none" => None,
            text => Some(text.parse().ok()?),
        };
        let violations = match fields.get("violations")?.as_str() {
            "-" => Vec::new(),
            text => text.split(',').map(Violation::from_name).collect::<Option<Vec<_>>>()?,
        };
        Some(SearchRecord {
            id: fields.get("id")?.parse().ok()?,
            vertex_count: fields.get("n")?.parse().ok()?,
            edge_count: fields.get("m")?.parse().ok()?,
            uniquely_3_colorable: parse_yes_no(fields.get("unique3")?)?,
            face_pair_degrees,
            min_adjacent_3k,
            triangle_count: fields.get("triangles")?.parse().ok()?,
            is_3_connected: parse_yes_no(fields.get("conn3")?)?,
            violations,
        })
    }
}

fn yes_no(value: bool) -> &'static str {
    if value {
        "yes"
    } else {
        "no"
    }
}

fn parse_yes_no(text: &str) -> Option<bool> {
    match text {
        "yes" => Some(true),
        "no" => Some(false),
        _ => None,
    }
}

/// Evaluates every property of one catalog graph.
pub fn evaluate_record(id: usize, g: &PlaneGraph) -> SearchRecord {
    let abstract_graph = g.abstract_graph();
    let n = g.vertex_count();
    let m = g.edge_count();
    let unique = unique_coloring(&abstract_graph, 3);
    let face_pair_degrees = g.face_pair_degrees();
    let min_adjacent_3k =
        face_pair_degrees.iter().filter(|&&(i, _)| i == 3).map(|&(_, j)| j).min();
    let triangle_count = abstract_graph.count_triangles();
    let is_3_connected = n > 3 && abstract_graph.is_k_connected(3);

    let mut violations = Vec::new();
    if let Some(partition) = &unique {
        if min_adjacent_3k.is_none_or(|k| k > 5) {
            violations.push(Violation::FacePairBound);
        }
        let connectivity = class_pair_connectivity(&abstract_graph, partition)
            .expect("witness partition is proper");
        if !connectivity.all_connected {
            violations.push(Violation::ClassPairConnectivity);
        }
        let bound = edge_lower_bound(n, 3).expect("uniquely 3-colorable needs n >= 3");
        if m < bound {
            violations.push(Violation::EdgeBound);
        }
        if (n >= 4 && triangle_count < 2) || (n >= 5 && triangle_count < 3) {
            violations.push(Violation::TriangleBound);
        }
    }
    SearchRecord {
        id,
        vertex_count: n,
        edge_count: m,
        uniquely_3_colorable: unique.is_some(),
        face_pair_degrees,
        min_adjacent_3k,
        triangle_count,
        is_3_connected,
        violations,
    }
}

/// Conjunction of record predicates.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FilterSpec {
    pub require_pairs: Vec<(usize, usize)>,
    pub forbid_pairs: Vec<(usize, usize)>,
    pub require_unique3: bool,
    pub require_3_connected: bool,
    /// Inclusive vertex-count range.
    pub vertex_range: Option<(usize, usize)>,
}

impl FilterSpec {
    pub fn matches(&self, record: &SearchRecord) -> bool {
        if self.require_unique3 && !record.uniquely_3_colorable {
            return false;
        }
        if self.require_3_connected && !record.is_3_connected {
            return false;
        }
        if let Some((lo, hi)) = self.vertex_range {
            if record.vertex_count < lo || record.vertex_count > hi {
                return false;
            }
        }
        for pair in &self.require_pairs {
            if !record.face_pair_degrees.contains(pair) {
                return false;
            }
        }
        for pair in &self.forbid_pairs {
            if record.face_pair_degrees.contains(pair) {
                return false;
            }
        }
        true
    }
}

/// One record per catalog graph passing the filter, in catalog order.
/// Record ids are catalog indices regardless of the filter.
pub fn scan_catalog(graphs: &[PlaneGraph], filter: &FilterSpec) -> Vec<SearchRecord> {
    scan_range(graphs, filter, 0, graphs.len())
}

/// Sequential twin of [`scan_catalog`]; also the fallback used when the
/// crate is built without the `parallel` feature.
pub fn scan_catalog_sequential(graphs: &[PlaneGraph], filter: &FilterSpec) -> Vec<SearchRecord> {
    let mut records = Vec::new();
    for (id, g) in graphs.iter().enumerate() {
        let record = evaluate_record(id, g);
        if filter.matches(&record) {
            records.push(record);
        }
    }
    records
}

fn scan_range(
    graphs: &[PlaneGraph],
    filter: &FilterSpec,
    start: usize,
    end: usize,
) -> Vec<SearchRecord> {
    let evaluated = evaluate_range(graphs, start, end);
    evaluated.into_iter().filter(|record| filter.matches(record)).collect()
}

#[cfg(feature = "parallel")]
fn evaluate_range(graphs: &[PlaneGraph], start: usize, end: usize) -> Vec<SearchRecord> {
    (start..end)
        .into_par_iter()
        .map(|id| evaluate_record(id, &graphs[id]))
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn evaluate_range(graphs: &[PlaneGraph], start: usize, end: usize) -> Vec<SearchRecord> {
    (start..end).map(|id| evaluate_record(id, &graphs[id])).collect()
}

/// Chunked scan for long runs: records accumulate from `offset` onward
/// and `on_progress` fires after each chunk with the index reached and
/// the records gathered so far, so the caller can persist a checkpoint.
pub fn scan_catalog_resumable<F>(
    graphs: &[PlaneGraph],
    filter: &FilterSpec,
    offset: usize,
    chunk_size: usize,
    mut on_progress: F,
) -> Vec<SearchRecord>
where
    F: FnMut(usize, &[SearchRecord]),
{
    let chunk_size = chunk_size.max(1);
    let mut records = Vec::new();
    let mut next = offset.min(graphs.len());
    while next < graphs.len() {
        let end = (next + chunk_size).min(graphs.len());
        records.extend(scan_range(graphs, filter, next, end));
        next = end;
        on_progress(next, &records);
    }
    records
}

/// Summary of the minimum adjacent (3, k) values over the 3-connected
/// uniquely 3-colorable graphs of a catalog. Any such graph whose minimum
/// is 5 or more, or that has no (3, k) pair at all, is a counterexample
/// candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub scanned: usize,
    /// Count of 3-connected uniquely 3-colorable graphs.
    pub eligible: usize,
    /// Minimum adjacent (3, k) value, histogrammed over eligible graphs.
    pub histogram: BTreeMap<usize, usize>,
    pub candidates: Vec<SearchRecord>,
}

pub fn conjecture_report(graphs: &[PlaneGraph]) -> ConjectureReport {
    let filter = FilterSpec {
        require_unique3: true,
        require_3_connected: true,
        ..FilterSpec::default()
    };
    let records = scan_catalog(graphs, &filter);
    let mut histogram = BTreeMap::new();
    let mut candidates = Vec::new();
    for record in &records {
        match record.min_adjacent_3k {
            Some(k) => {
                *histogram.entry(k).or_insert(0) += 1;
                if k >= 5 {
                    candidates.push(record.clone());
                }
            }
            None => candidates.push(record.clone()),
        }
    }
    ConjectureReport { scanned: graphs.len(), eligible: records.len(), histogram, candidates }
}

const LOW_PAIRS: [(usize, usize); 3] = [(3, 3), (3, 4), (3, 5)];

/// Uniquely 3-colorable graphs from the catalog avoiding every forbidden
/// low pair: the machine substitute for hand-drawn witnesses. At most two
/// of the three low pairs may be forbidden.
pub fn witness_search(
    graphs: &[PlaneGraph],
    forbidden: &[(usize, usize)],
) -> Result<Vec<SearchRecord>, SearchError> {
    for &(i, j) in forbidden {
        if !LOW_PAIRS.contains(&(i, j)) {
            return Err(SearchError::InvalidForbiddenPair(i, j));
        }
    }
    let mut distinct: Vec<(usize, usize)> = forbidden.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() >= 3 {
        return Err(SearchError::AllPairsForbidden);
    }
    let filter = FilterSpec {
        require_unique3: true,
        forbid_pairs: distinct,
        ..FilterSpec::default()
    };
    Ok(scan_catalog(graphs, &filter))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate_fan, generate_gk, generate_octahedron};

    #[test]
    fn canonical_code_is_isomorphism_invariant() {
        let path = AbstractGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let relabeled = path.relabel(&[2, 0, 3, 1]);
        assert_eq!(canonical_code(&path), canonical_code(&relabeled));
        let star = AbstractGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_code(&path), canonical_code(&star));
    }

    #[test]
    fn code_round_trip() {
        let g = AbstractGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let code = canonical_code(&g);
        let rebuilt = graph_from_code(5, code);
        assert_eq!(canonical_code(&rebuilt), code);
        assert_eq!(rebuilt.edge_count(), 5);
    }

    #[test]
    fn connected_graph_counts_match_the_census() {
        // per-order counts of connected graphs: 1, 1, 2, 6, 21, 112 (A001349)
        let catalog = connected_graphs_up_to(6).unwrap();
        let mut by_n = BTreeMap::new();
        for g in &catalog {
            *by_n.entry(g.vertex_count()).or_insert(0usize) += 1;
        }
        assert_eq!(
            by_n,
            BTreeMap::from([(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
        );
    }

    #[test]
    fn planar_connected_counts_match_the_census() {
        // connected planar graphs: 1, 1, 2, 6, 20, 99 (A003094)
        let catalog = tiny_plane_graphs(6).unwrap();
        let mut by_n = BTreeMap::new();
        for g in &catalog {
            *by_n.entry(g.vertex_count()).or_insert(0usize) += 1;
        }
        assert_eq!(
            by_n,
            BTreeMap::from([(1, 1), (2, 1), (3, 2), (4, 6), (5, 20), (6, 99)])
        );
    }

    #[test]
    fn tiny_catalog_of_order_three() {
        let catalog = tiny_plane_graphs(3).unwrap();
        assert_eq!(catalog.len(), 4); // K1, K2, P3, K3
    }

    #[test]
    fn tiny_catalog_guard() {
        assert!(matches!(tiny_plane_graphs(9), Err(SearchError::NMaxOutOfRange(9))));
        assert!(matches!(tiny_plane_graphs(0), Err(SearchError::NMaxOutOfRange(0))));
    }

    #[test]
    fn catalog_has_no_duplicate_canonical_forms() {
        let catalog = tiny_plane_graphs(5).unwrap();
        let mut codes: Vec<(usize, u64)> = catalog
            .iter()
            .map(|g| (g.vertex_count(), canonical_code(&g.abstract_graph())))
            .collect();
        codes.sort_unstable();
        let before = codes.len();
        codes.dedup();
        assert_eq!(codes.len(), before);
    }

    #[test]
    fn catalog_contains_k4() {
        let k4_code = canonical_code(
            &AbstractGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
                .unwrap(),
        );
        let catalog = tiny_plane_graphs(4).unwrap();
        assert!(catalog
            .iter()
            .any(|g| g.vertex_count() == 4 && canonical_code(&g.abstract_graph()) == k4_code));
    }

    #[test]
    fn k5_has_no_embedding() {
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        let k5 = AbstractGraph::from_edges(5, &edges).unwrap();
        assert!(one_planar_embedding(&k5).is_none());
        assert!(planar_embeddings(&k5).is_empty());
    }

    #[test]
    fn k33_has_no_embedding() {
        let k33 = AbstractGraph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert!(one_planar_embedding(&k33).is_none());
    }

    /// Normalizes each rotation cyclically so the smallest neighbor leads.
    fn normalized(rotations: &[Vec<usize>]) -> Vec<Vec<usize>> {
        rotations
            .iter()
            .map(|rot| {
                if rot.is_empty() {
                    return rot.clone();
                }
                let lead = rot
                    .iter()
                    .enumerate()
                    .min_by_key(|&(_, &w)| w)
                    .map(|(i, _)| i)
                    .unwrap();
                let mut out = rot[lead..].to_vec();
                out.extend_from_slice(&rot[..lead]);
                out
            })
            .collect()
    }

    fn permutations_fixing_first(items: &[usize]) -> Vec<Vec<usize>> {
        if items.is_empty() {
            return vec![vec![]];
        }
        let first = items[0];
        let rest: Vec<usize> = items[1..].to_vec();
        let mut perms = Vec::new();
        permute(&rest, &mut Vec::new(), &mut perms);
        perms
            .into_iter()
            .map(|tail| {
                let mut rot = vec![first];
                rot.extend(tail);
                rot
            })
            .collect()
    }

    fn permute(rest: &[usize], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == rest.len() {
            out.push(prefix.clone());
            return;
        }
        for &item in rest {
            if !prefix.contains(&item) {
                prefix.push(item);
                permute(rest, prefix, out);
                prefix.pop();
            }
        }
    }

    /// Brute-force oracle: filter every rotation system for genus 0.
    fn genus0_systems_bruteforce(g: &AbstractGraph) -> std::collections::BTreeSet<Vec<Vec<usize>>> {
        let n = g.vertex_count();
        let per_vertex: Vec<Vec<Vec<usize>>> =
            (0..n).map(|v| permutations_fixing_first(g.neighbors(v))).collect();
        let mut found = std::collections::BTreeSet::new();
        let mut choice = vec![0usize; n];
        loop {
            let rotations: Vec<Vec<usize>> =
                (0..n).map(|v| per_vertex[v][choice[v]].clone()).collect();
            if PlaneGraph::from_rotation_system(n, rotations.clone()).is_ok() {
                found.insert(normalized(&rotations));
            }
            let mut slot = 0;
            loop {
                if slot == n {
                    break;
                }
                choice[slot] += 1;
                if choice[slot] < per_vertex[slot].len() {
                    break;
                }
                choice[slot] = 0;
                slot += 1;
            }
            if slot == n {
                break;
            }
        }
        found
    }

    #[test]
    fn embedder_matches_the_brute_force_oracle_up_to_order_five() {
        for g in connected_graphs_up_to(5).unwrap() {
            let expected = genus0_systems_bruteforce(&g);
            let produced = planar_embeddings(&g);
            let produced_set: std::collections::BTreeSet<Vec<Vec<usize>>> =
                produced.iter().map(|pg| normalized(pg.rotations())).collect();
            assert_eq!(produced_set.len(), produced.len(), "duplicate embedding emitted");
            assert_eq!(produced_set, expected, "embeddings differ on {:?}", g.edges());
        }
    }

    #[test]
    fn all_embeddings_catalog_is_deterministic() {
        let a = tiny_catalog(5, EmbeddingMode::AllEmbeddings).unwrap();
        let b = tiny_catalog(5, EmbeddingMode::AllEmbeddings).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn record_evaluation_of_gk() {
        let g = generate_gk(3).unwrap();
        let record = evaluate_record(0, &g);
        assert!(record.uniquely_3_colorable);
        assert!(record.face_pair_degrees.contains(&(3, 4)));
        assert!(!record.face_pair_degrees.contains(&(3, 3)));
        assert!(!record.face_pair_degrees.contains(&(3, 5)));
        assert_eq!(record.min_adjacent_3k, Some(4));
        assert_eq!(record.triangle_count, 6);
        assert!(record.is_3_connected);
        assert!(record.violations.is_empty());
    }

    #[test]
    fn scan_with_forbidden_pair_filters_the_octahedron() {
        let graphs = vec![generate_octahedron()];
        let filter = FilterSpec { forbid_pairs: vec![(3, 3)], ..FilterSpec::default() };
        assert!(scan_catalog(&graphs, &filter).is_empty());
    }

    #[test]
    fn parallel_and_sequential_scans_agree() {
        let graphs = tiny_catalog(5, EmbeddingMode::AllEmbeddings).unwrap();
        let filter = FilterSpec::default();
        assert_eq!(scan_catalog(&graphs, &filter), scan_catalog_sequential(&graphs, &filter));
    }

    #[test]
    fn resumable_scan_matches_the_oneshot_scan() {
        let graphs = tiny_plane_graphs(5).unwrap();
        let filter = FilterSpec { require_unique3: true, ..FilterSpec::default() };
        let oneshot = scan_catalog(&graphs, &filter);
        let mut progress_points = Vec::new();
        let resumed = scan_catalog_resumable(&graphs, &filter, 0, 7, |done, _| {
            progress_points.push(done)
        });
        assert_eq!(oneshot, resumed);
        assert_eq!(progress_points.last(), Some(&graphs.len()));
    }

    #[test]
    fn record_line_round_trip() {
        let g = generate_fan(6).unwrap();
        let record = evaluate_record(17, &g);
        let line = record.to_line();
        assert_eq!(SearchRecord::parse_line(&line), Some(record));
    }

    #[test]
    fn conjecture_report_on_the_families() {
        let graphs = vec![generate_gk(3).unwrap(), generate_gk(5).unwrap()];
        let report = conjecture_report(&graphs);
        assert_eq!(report.eligible, 2);
        assert_eq!(report.histogram, BTreeMap::from([(4, 2)]));
        assert!(report.candidates.is_empty());

        let octa = conjecture_report(&[generate_octahedron()]);
        assert_eq!(octa.histogram, BTreeMap::from([(3, 1)]));
    }

    #[test]
    fn witness_search_finds_the_families() {
        let gk = witness_search(&[generate_gk(3).unwrap()], &[(3, 3), (3, 5)]).unwrap();
        assert_eq!(gk.len(), 1);
        let fan = witness_search(&[generate_fan(6).unwrap()], &[(3, 4), (3, 5)]).unwrap();
        assert_eq!(fan.len(), 1);
    }

    #[test]
    fn witness_search_guards() {
        assert!(matches!(
            witness_search(&[], &[(3, 3), (3, 4), (3, 5)]),
            Err(SearchError::AllPairsForbidden)
        ));
        assert!(matches!(
            witness_search(&[], &[(3, 6)]),
            Err(SearchError::InvalidForbiddenPair(3, 6))
        ));
    }
}
