//! Proper-coloring partitions: exhaustive census, unique k-colorability,
//! class-pair structure, and the edge lower bound.
//!
//! Uniqueness is decided on partition counts, not on the chromatic
//! polynomial: `P(G, k) = k!` also holds for graphs with chromatic number
//! below `k` (K2 has `P(., 3) = 6`), so the census is the reliable
//! criterion. The polynomial is kept as an independent oracle, since
//! `P(G, 3) = 3 N1 + 6 N2 + 6 N3` ties the two routes together exactly.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::collections::VecDeque;
use std::ops::ControlFlow;

use num_bigint::BigUint;
use thiserror::Error;

use crate::plane_graph::{normalize_edge, AbstractGraph, Edge};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("classes do not partition the vertex set")]
    NotAPartition,
    #[error("class {0} is empty")]
    EmptyClass(usize),
    #[error("class {class} is not independent: contains edge ({u}, {v})")]
    ClassNotIndependent { class: usize, u: usize, v: usize },
    #[error("class index {0} out of range for {1} classes")]
    ClassIndexOutOfRange(usize, usize),
    #[error("class indices must differ")]
    EqualClassIndices,
    #[error("need n >= k, got n={n}, k={k}")]
    TooFewVertices { n: usize, k: usize },
}

/// A partition of the vertex set into independent color classes. Classes
/// are stored sorted and ordered by their smallest vertex, so equality of
/// partitions is plain equality of the representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColorPartition {
    classes: Vec<Vec<usize>>,
    vertex_count: usize,
}

impl ColorPartition {
    /// Validates `classes` as a proper partition of the vertices of `g`.
    pub fn new(g: &AbstractGraph, classes: Vec<Vec<usize>>) -> Result<Self, ColoringError> {
        let n = g.vertex_count();
        let mut owner = vec![usize::MAX; n];
        for (idx, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(ColoringError::EmptyClass(idx));
            }
            for &v in class {
                if v >= n || owner[v] != usize::MAX {
                    return Err(ColoringError::NotAPartition);
                }
                owner[v] = idx;
            }
        }
        if owner.contains(&usize::MAX) {
            return Err(ColoringError::NotAPartition);
        }
        for (u, v) in g.edges() {
            if owner[u] == owner[v] {
                return Err(ColoringError::ClassNotIndependent { class: owner[u], u, v });
            }
        }
        let mut classes: Vec<Vec<usize>> = classes
            .into_iter()
            .map(|mut class| {
                class.sort_unstable();
                class
            })
            .collect();
        classes.sort_by_key(|class| class[0]);
        Ok(ColorPartition { classes, vertex_count: n })
    }

    fn from_assignment(assignment: &[usize]) -> Self {
        let class_count = assignment.iter().max().map_or(0, |&c| c + 1);
        let mut classes = vec![Vec::new(); class_count];
        for (v, &c) in assignment.iter().enumerate() {
            classes[c].push(v);
        }
        classes.sort_by_key(|class| class[0]);
        ColorPartition { classes, vertex_count: assignment.len() }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|class| class.binary_search(&v).is_ok())
    }

    /// Checks that this partition is a proper partition of `g`.
    pub fn validate_for(&self, g: &AbstractGraph) -> Result<(), ColoringError> {
        if self.vertex_count != g.vertex_count() {
            return Err(ColoringError::NotAPartition);
        }
        ColorPartition::new(g, self.classes.clone()).map(|_| ())
    }
}

/// Partition counts by class number: `count(i)` is the number of proper
/// partitions of the vertex set into exactly `i` nonempty independent
/// classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionCensus {
    counts: Vec<BigUint>,
}

impl PartitionCensus {
    /// Number of proper partitions into exactly `classes` classes
    /// (1-based, up to the census bound).
    pub fn count(&self, classes: usize) -> &BigUint {
        &self.counts[classes - 1]
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn max_classes(&self) -> usize {
        self.counts.len()
    }
}

const CENSUS_VERTEX_LIMIT: usize = 64;

/// Vertices in descending degree order; faster forced propagation.
fn census_order(g: &AbstractGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// Symmetry-reduced backtracking over proper partitions into at most
/// `max_classes` classes: a vertex may open class `i` only when classes
/// `0..i` are already open, so each set partition is visited exactly once.
/// The visitor receives the per-vertex class assignment and the number of
/// classes used, and may stop the search early.
fn for_each_partition<F>(g: &AbstractGraph, max_classes: usize, visit: &mut F)
where
    F: FnMut(&[usize], usize) -> ControlFlow<()>,
{
    let n = g.vertex_count();
    assert!(
        n <= CENSUS_VERTEX_LIMIT,
        "partition census limited to {CENSUS_VERTEX_LIMIT} vertices"
    );
    if max_classes == 0 {
        return;
    }
    let mut adj_mask = vec![0u64; n];
    for (u, v) in g.edges() {
        adj_mask[u] |= 1 << v;
        adj_mask[v] |= 1 << u;
    }
    let mut search = CensusSearch {
        order: census_order(g),
        adj_mask,
        max_classes,
        class_masks: vec![0u64; max_classes],
        assignment: vec![usize::MAX; n],
    };
    let _ = search.recurse(0, 0, visit);
}

struct CensusSearch {
    order: Vec<usize>,
    adj_mask: Vec<u64>,
    max_classes: usize,
    class_masks: Vec<u64>,
    assignment: Vec<usize>,
}

impl CensusSearch {
    fn recurse<F>(&mut self, pos: usize, open: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize], usize) -> ControlFlow<()>,
    {
        if pos == self.order.len() {
            return visit(&self.assignment, open);
        }
        let v = self.order[pos];
        let limit = (open + 1).min(self.max_classes);
        for class in 0..limit {
            if self.class_masks[class] & self.adj_mask[v] == 0 {
                self.class_masks[class] |= 1 << v;
                self.assignment[v] = class;
                let flow = self.recurse(pos + 1, open.max(class + 1), visit);
                self.class_masks[class] &= !(1u64 << v);
                self.assignment[v] = usize::MAX;
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// Exact partition counts by exhaustive symmetry-reduced backtracking.
pub fn partition_census(g: &AbstractGraph, max_classes: usize) -> PartitionCensus {
    let mut counts = vec![BigUint::ZERO; max_classes];
    for_each_partition(g, max_classes, &mut |_, used| {
        counts[used - 1] += 1u32;
        ControlFlow::Continue(())
    });
    PartitionCensus { counts }
}

/// Decides unique k-colorability (`N_k = 1` and `N_i = 0` for `i < k`) and
/// returns the unique partition as the witness. Terminates as soon as the
/// predicate is refuted.
pub fn unique_coloring(g: &AbstractGraph, k: usize) -> Option<ColorPartition> {
    let mut witness: Option<ColorPartition> = None;
    let mut refuted = false;
    for_each_partition(g, k, &mut |assignment, used| {
        if used < k || witness.is_some() {
            refuted = true;
            return ControlFlow::Break(());
        }
        witness = Some(ColorPartition::from_assignment(assignment));
        ControlFlow::Continue(())
    });
    if refuted {
        None
    } else {
        witness
    }
}

pub fn is_uniquely_k_colorable(g: &AbstractGraph, k: usize) -> bool {
    unique_coloring(g, k).is_some()
}

const POLYNOMIAL_VERTEX_LIMIT: usize = 16;

/// `P(G, k)`: the number of proper colorings with `k` labeled colors,
/// by deletion-contraction with memoization. Serves as the independent
/// oracle for the census via `P(G, 3) = 3 N1 + 6 N2 + 6 N3`.
pub fn chromatic_polynomial_value(g: &AbstractGraph, colors: usize) -> BigUint {
    let n = g.vertex_count();
    assert!(
        n <= POLYNOMIAL_VERTEX_LIMIT,
        "chromatic polynomial evaluation limited to {POLYNOMIAL_VERTEX_LIMIT} vertices"
    );
    let mut bits: u128 = 0;
    for (u, v) in g.edges() {
        bits |= 1u128 << pair_bit(u, v);
    }
    let mut memo = HashMap::new();
    deletion_contraction(n, bits, colors, &mut memo)
}

/// Bit index for the edge `{u, v}` with `u < v`.
fn pair_bit(u: usize, v: usize) -> usize {
    v * (v - 1) / 2 + u
}

fn deletion_contraction(
    n: usize,
    edges: u128,
    colors: usize,
    memo: &mut HashMap<(usize, u128), BigUint>,
) -> BigUint {
    if edges == 0 {
        return BigUint::from(colors).pow(n as u32);
    }
    if let Some(hit) = memo.get(&(n, edges)) {
        return hit.clone();
    }
    let bit = edges.trailing_zeros() as usize;
    let (u, v) = bit_pair(bit);
    let deleted = deletion_contraction(n, edges & !(1u128 << bit), colors, memo);
    // contract v into u: drop v, relabel w > v to w - 1, simplify multi-edges
    let mut contracted: u128 = 0;
    let mut rest = edges & !(1u128 << bit);
    while rest != 0 {
        let b = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (mut a, mut c) = bit_pair(b);
        if a == v {
            a = u;
        }
        if c == v {
            c = u;
        }
        if a == c {
            continue;
        }
        let (a, c) = if a < c { (a, c) } else { (c, a) };
        let a = if a > v { a - 1 } else { a };
        let c = if c > v { c - 1 } else { c };
        contracted |= 1u128 << pair_bit(a, c);
    }
    let merged = deletion_contraction(n - 1, contracted, colors, memo);
    let value = deleted - merged;
    memo.insert((n, edges), value.clone());
    value
}

fn bit_pair(bit: usize) -> (usize, usize) {
    let mut v = 1;
    while (v + 1) * v / 2 <= bit {
        v += 1;
    }
    (bit - v * (v - 1) / 2, v)
}

/// Connectivity verdict for the subgraph induced by each pair of classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPairConnectivity {
    /// One verdict per unordered class pair `(i, j)`, `i < j`.
    pub pair_verdicts: Vec<((usize, usize), bool)>,
    pub all_connected: bool,
}

/// For each pair of classes, reports whether the subgraph induced by
/// their union is connected.
pub fn class_pair_connectivity(
    g: &AbstractGraph,
    partition: &ColorPartition,
) -> Result<ClassPairConnectivity, ColoringError> {
    partition.validate_for(g)?;
    let k = partition.class_count();
    let mut pair_verdicts = Vec::new();
    let mut all_connected = true;
    for i in 0..k {
        for j in i + 1..k {
            let connected = union_connected(g, &partition.classes()[i], &partition.classes()[j]);
            all_connected &= connected;
            pair_verdicts.push(((i, j), connected));
        }
    }
    Ok(ClassPairConnectivity { pair_verdicts, all_connected })
}

fn union_connected(g: &AbstractGraph, class_a: &[usize], class_b: &[usize]) -> bool {
    let mut member = vec![false; g.vertex_count()];
    for &v in class_a.iter().chain(class_b) {
        member[v] = true;
    }
    let total = class_a.len() + class_b.len();
    let start = class_a[0];
    let mut seen = vec![false; g.vertex_count()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if member[v] && !seen[v] {
                seen[v] = true;
                reached += 1;
                queue.push_back(v);
            }
        }
    }
    reached == total
}

/// The edge set between two classes together with its structure: whether
/// it forms a tree on its support, and its decomposition into maximal
/// paths (paths whose internal vertices have degree 2 in the subgraph;
/// a cycle component is reported as a closed walk).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPairSubgraph {
    pub edges: Vec<Edge>,
    /// Vertices incident to at least one edge of the pair, sorted.
    pub support: Vec<usize>,
    pub is_tree: bool,
    pub paths: Vec<Vec<usize>>,
}

pub fn class_pair_subgraph(
    g: &AbstractGraph,
    partition: &ColorPartition,
    class_i: usize,
    class_j: usize,
) -> Result<ClassPairSubgraph, ColoringError> {
    partition.validate_for(g)?;
    let k = partition.class_count();
    if class_i >= k {
        return Err(ColoringError::ClassIndexOutOfRange(class_i, k));
    }
    if class_j >= k {
        return Err(ColoringError::ClassIndexOutOfRange(class_j, k));
    }
    if class_i == class_j {
        return Err(ColoringError::EqualClassIndices);
    }
    let in_i: Vec<bool> = membership(g.vertex_count(), &partition.classes()[class_i]);
    let in_j: Vec<bool> = membership(g.vertex_count(), &partition.classes()[class_j]);
    let mut edges: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| (in_i[u] && in_j[v]) || (in_j[u] && in_i[v]))
        .map(|(u, v)| normalize_edge(u, v))
        .collect();
    edges.sort_unstable();

    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(u, v) in &edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let support: Vec<usize> = adj.keys().copied().collect();
    let is_tree = !support.is_empty()
        && edges.len() + 1 == support.len()
        && subgraph_connected(&adj, &support);
    let paths = maximal_paths(&adj);
    Ok(ClassPairSubgraph { edges, support, is_tree, paths })
}

fn membership(n: usize, class: &[usize]) -> Vec<bool> {
    let mut member = vec![false; n];
    for &v in class {
        member[v] = true;
    }
    member
}

fn subgraph_connected(adj: &BTreeMap<usize, Vec<usize>>, support: &[usize]) -> bool {
    let start = support[0];
    let mut seen = vec![start];
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[&u] {
            if !seen.contains(&v) {
                seen.push(v);
                queue.push_back(v);
            }
        }
    }
    seen.len() == support.len()
}

/// Splits the subgraph into maximal paths at the vertices whose degree is
/// not 2. Components in which every vertex has degree 2 are cycles and
/// come back as closed walks (first vertex repeated at the end).
fn maximal_paths(adj: &BTreeMap<usize, Vec<usize>>) -> Vec<Vec<usize>> {
    let mut used: Vec<Edge> = Vec::new();
    let mut paths = Vec::new();
    let branch_vertices: Vec<usize> =
        adj.iter().filter(|(_, nbrs)| nbrs.len() != 2).map(|(&v, _)| v).collect();
    for &start in &branch_vertices {
        for &first in &adj[&start] {
            if used.contains(&normalize_edge(start, first)) {
                continue;
            }
            let mut path = vec![start];
            let mut prev = start;
            let mut cur = first;
            used.push(normalize_edge(prev, cur));
            path.push(cur);
            while adj[&cur].len() == 2 {
                let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
                used.push(normalize_edge(cur, next));
                path.push(next);
                prev = cur;
                cur = next;
            }
            paths.push(path);
        }
    }
    // leftover edges belong to cycle components
    for (&start, nbrs) in adj {
        for &first in nbrs {
            if used.contains(&normalize_edge(start, first)) {
                continue;
            }
            let mut walk = vec![start];
            let mut prev = start;
            let mut cur = first;
            used.push(normalize_edge(prev, cur));
            walk.push(cur);
            while cur != start {
                let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
                used.push(normalize_edge(cur, next));
                walk.push(next);
                prev = cur;
                cur = next;
            }
            paths.push(walk);
        }
    }
    paths.sort();
    paths
}

/// The minimum edge count of a uniquely k-colorable graph on `n`
/// vertices: `(k - 1) n - k (k - 1) / 2`.
pub fn edge_lower_bound(n: usize, k: usize) -> Result<usize, ColoringError> {
    if n < k {
        return Err(ColoringError::TooFewVertices { n, k });
    }
    Ok((k - 1) * n - k * (k - 1) / 2)
}
