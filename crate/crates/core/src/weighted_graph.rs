//! Vertex-weighted simple graphs and their matching-theoretic predicates.
//!
//! A weighted graph is a simple base graph on vertices `0..n` whose vertices
//! carry positive integer weights. A matching is a multiset of edges in which
//! every vertex appears at most as often as its weight; `ν` is the largest
//! size of such a multiset.

use std::fmt;

use thiserror::Error;

use crate::matching;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Polarizations up to this many vertices are searched by branch and bound;
/// larger ones go through the blossom algorithm.
pub const BRANCH_AND_BOUND_LIMIT: u64 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    UnknownVertex { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} has weight 0; weights must be positive")]
    ZeroWeight(usize),
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("cannot collapse {0:?}: {1}")]
    InvalidCollapse(VertexSet, &'static str),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("operation requires all weights to be 1")]
    NotSimple,
}

/// How `Ω − N_Ω(i)` is read in the saturating condition.
///
/// `Neighborhood` is the definition: delete the open neighborhood of `i`.
/// `VertexOnly` deletes just `i` itself. On the weighted paw (triangle
/// `0,1,2` plus edge `2-3`, weights `1,1,2,1`) the two readings disagree at
/// `t = 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DeletionReading {
    #[default]
    Neighborhood,
    VertexOnly,
}

/// A simple graph on `0..n` with positive vertex weights.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightedGraph {
    adj: Vec<VertexSet>,
    weights: Vec<u32>,
}

impl WeightedGraph {
    /// Graph on `n` isolated vertices of weight 1.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(WeightedGraph {
            adj: vec![VertexSet::EMPTY; n],
            weights: vec![1; n],
        })
    }

    /// Builds a weighted graph. Duplicate edges (in either orientation) are
    /// merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)], weights: &[u32]) -> Result<Self, GraphError> {
        if weights.len() != n {
            return Err(GraphError::WeightCount {
                expected: n,
                got: weights.len(),
            });
        }
        let mut g = Self::empty(n)?;
        for (v, &w) in weights.iter().enumerate() {
            if w == 0 {
                return Err(GraphError::ZeroWeight(v));
            }
        }
        g.weights = weights.to_vec();
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph with all weights 1.
    pub fn simple(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::from_edges(n, edges, &vec![1; n])
    }

    /// Builds from neighbor masks; the masks must be symmetric and loop-free.
    pub(crate) fn from_parts(adj: Vec<VertexSet>, weights: Vec<u32>) -> Self {
        debug_assert_eq!(adj.len(), weights.len());
        debug_assert!(adj.iter().enumerate().all(|(v, a)| !a.contains(v)));
        WeightedGraph { adj, weights }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::UnknownVertex { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Copy with the given weights on the same base graph.
    pub fn with_weights(&self, weights: &[u32]) -> Result<Self, GraphError> {
        Self::from_edges(self.n(), &self.edges(), weights)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().map(|&w| w as u64).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn adjacency(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub(crate) fn adjacency_masks(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex { vertex: v, n: self.n() })
        }
    }

    /// Open neighborhood `N_Ω(v)`.
    pub fn neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    /// Sum of the weights of the neighbors of `v`.
    pub fn weighted_degree(&self, v: usize) -> Result<u64, GraphError> {
        self.check_vertex(v)?;
        Ok(self.weight_of(self.adj[v]))
    }

    /// Sum of the weights of the vertices in `s`.
    pub fn weight_of(&self, s: VertexSet) -> u64 {
        s.iter().map(|v| self.weights[v] as u64).sum()
    }

    /// Closed neighborhood `N[U]`.
    pub fn closed_neighborhood(&self, u: VertexSet) -> VertexSet {
        u.iter().fold(u, |acc, v| acc.union(self.adj[v]))
    }

    /// Induced weighted subgraph on `keep`, vertices renumbered in ascending
    /// order. The second component maps new ids to old ones.
    pub fn induced(&self, keep: VertexSet) -> (WeightedGraph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().filter(|&v| v < self.n()).collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = old
            .iter()
            .map(|&v| self.adj[v].intersection(keep).iter().map(|u| new_id[u]).collect())
            .collect();
        let weights = old.iter().map(|&v| self.weights[v]).collect();
        (WeightedGraph::from_parts(adj, weights), old)
    }

    /// `Ω − S`: the induced weighted subgraph on the remaining vertices.
    pub fn delete_vertices(&self, s: VertexSet) -> WeightedGraph {
        self.induced(self.vertices().difference(s)).0
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> WeightedGraph {
        let n = self.n();
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut weights = vec![0; n];
        for v in 0..n {
            weights[perm[v]] = self.weights[v];
            adj[perm[v]] = self.adj[v].iter().map(|u| perm[u]).collect();
        }
        WeightedGraph::from_parts(adj, weights)
    }

    /// Connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for v in 0..self.n() {
            if seen.contains(v) {
                continue;
            }
            let mut comp = VertexSet::singleton(v);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = frontier
                    .iter()
                    .fold(VertexSet::EMPTY, |acc, u| acc.union(self.adj[u]))
                    .difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Matching number `ν(Ω)`.
    pub fn matching_number(&self) -> usize {
        self.matching_number_on(self.vertices())
    }

    /// `ν` of the induced weighted subgraph on `alive`.
    pub(crate) fn matching_number_on(&self, alive: VertexSet) -> usize {
        // a vertex is never used more often than its neighbors can absorb
        let mut caps = vec![0u32; self.n()];
        let mut total = 0u64;
        for v in alive {
            let room = self.weight_of(self.adj[v].intersection(alive));
            let c = (self.weights[v] as u64).min(room) as u32;
            caps[v] = c;
            total += c as u64;
        }
        if total <= BRANCH_AND_BOUND_LIMIT {
            matching::capacitated_branch_and_bound(&self.adj, &caps, alive)
        } else {
            let (lists, _) = polarized_lists(&self.adj, &caps, alive);
            matching::blossom(&lists).iter().filter(|m| m.is_some()).count() / 2
        }
    }

    /// A maximum matching, as an edge multiset.
    pub fn maximum_matching(&self) -> Matching {
        let caps = self.weights.clone();
        let (lists, origin) = polarized_lists(&self.adj, &caps, self.vertices());
        let mate = matching::blossom(&lists);
        let mut edges = Vec::new();
        for (x, m) in mate.iter().enumerate() {
            if let Some(y) = *m {
                if x < y {
                    let (u, v) = (origin[x], origin[y]);
                    edges.push((u.min(v), u.max(v)));
                }
            }
        }
        edges.sort_unstable();
        Matching { edges }
    }

    /// Polarization: each vertex `v` becomes `weight(v)` pairwise
    /// non-adjacent clones sharing the neighborhood of `v`. Clones are
    /// numbered by `(original, index)` in lexicographic order.
    pub fn polarize(&self) -> Result<Polarization, GraphError> {
        let total = self.total_weight() as usize;
        if total > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(total));
        }
        let mut origin = Vec::with_capacity(total);
        let mut first = Vec::with_capacity(self.n());
        for v in 0..self.n() {
            first.push(origin.len());
            origin.extend(std::iter::repeat_n(v, self.weights[v] as usize));
        }
        let clones_of = |v: usize| -> VertexSet { (first[v]..first[v] + self.weights[v] as usize).collect() };
        let adj = origin
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .fold(VertexSet::EMPTY, |acc, u| acc.union(clones_of(u)))
            })
            .collect();
        Ok(Polarization {
            graph: WeightedGraph::from_parts(adj, vec![1; total]),
            origin,
        })
    }

    /// Merges a group of pairwise non-adjacent vertices with identical
    /// neighborhoods into one vertex carrying the summed weight. The merged
    /// vertex takes the position of the smallest group member; the other ids
    /// shift down.
    pub fn collapse(&self, group: VertexSet) -> Result<WeightedGraph, GraphError> {
        let Some(keep) = group.first() else {
            return Err(GraphError::InvalidCollapse(group, "empty group"));
        };
        for v in group {
            self.check_vertex(v)?;
        }
        for v in group {
            if self.adj[v].intersects(group) {
                return Err(GraphError::InvalidCollapse(group, "group vertices are adjacent"));
            }
            if self.adj[v] != self.adj[keep] {
                return Err(GraphError::InvalidCollapse(group, "neighborhoods differ"));
            }
        }
        let weight: u32 = group.iter().map(|v| self.weights[v]).sum();
        let survivors = self.vertices().difference(group).with(keep);
        let (mut g, _) = self.induced(survivors);
        let new_keep = survivors.iter().position(|v| v == keep).expect("keep survives");
        g.weights[new_keep] = weight;
        Ok(g)
    }

    /// Whether the graph is `t`-saturating: `ν(Ω) < t` and
    /// `ν(Ω − N(i)) ≥ t − deg(i)` for every vertex `i`.
    pub fn is_t_saturating(&self, t: u32) -> bool {
        self.is_t_saturating_with(t, DeletionReading::Neighborhood)
    }

    pub fn is_t_saturating_with(&self, t: u32, reading: DeletionReading) -> bool {
        let t = t as i64;
        let nu = self.matching_number() as i64;
        if nu >= t {
            return false;
        }
        let all = self.vertices();
        (0..self.n()).all(|i| {
            let need = t - self.weight_of(self.adj[i]) as i64;
            if need <= 0 {
                return true;
            }
            if need > nu {
                return false;
            }
            let alive = match reading {
                DeletionReading::Neighborhood => all.difference(self.adj[i]),
                DeletionReading::VertexOnly => all.without(i),
            };
            self.matching_number_on(alive) as i64 >= need
        })
    }

    /// Isolated vertices aside, whether the graph is empty of edges.
    pub fn has_edges(&self) -> bool {
        self.adj.iter().any(|a| !a.is_empty())
    }
}

impl fmt::Debug for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightedGraph(n={}, edges={:?}", self.n(), self.edges())?;
        if !self.is_simple() {
            write!(f, ", weights={:?}", self.weights)?;
        }
        write!(f, ")")
    }
}

fn polarized_lists(adj: &[VertexSet], caps: &[u32], alive: VertexSet) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut first = vec![0usize; adj.len()];
    let mut origin = Vec::new();
    for v in alive {
        first[v] = origin.len();
        origin.extend(std::iter::repeat_n(v, caps[v] as usize));
    }
    let lists = origin
        .iter()
        .map(|&v| {
            adj[v]
                .intersection(alive)
                .iter()
                .flat_map(|u| first[u]..first[u] + caps[u] as usize)
                .collect()
        })
        .collect();
    (lists, origin)
}

/// A simple graph obtained by polarizing a weighted graph, together with
/// the clone-to-original provenance map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polarization {
    pub graph: WeightedGraph,
    pub origin: Vec<usize>,
}

impl Polarization {
    /// Clone ids of original vertex `v`.
    pub fn clones(&self, v: usize) -> VertexSet {
        self.origin
            .iter()
            .enumerate()
            .filter(|&(_, &o)| o == v)
            .map(|(c, _)| c)
            .collect()
    }
}

/// A multiset of edges of a weighted graph in which every vertex appears at
/// most as often as its weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(g: &WeightedGraph, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut uses = vec![0u32; g.n()];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(GraphError::InvalidMatching(format!("{{{u},{v}}} is not an edge")));
            }
            uses[u] += 1;
            uses[v] += 1;
            normalized.push((u.min(v), u.max(v)));
        }
        if let Some(v) = (0..g.n()).find(|&v| uses[v] > g.weight(v)) {
            return Err(GraphError::InvalidMatching(format!(
                "vertex {v} used {} times but has weight {}",
                uses[v],
                g.weight(v)
            )));
        }
        normalized.sort_unstable();
        Ok(Matching { edges: normalized })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices touched by the matching.
    pub fn covered(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    fn mates(&self, n: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; n];
        for &(u, v) in &self.edges {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }
}

/// Lexicographically least odd closed walk through the uncovered vertex `i`
/// that alternates between non-matching and matching edges, with both edges
/// at `i` outside `m`.
///
/// Requires a simple graph (all weights 1) and a matching in which every
/// vertex appears at most once. Returns `Ok(None)` when no such cycle exists.
pub fn find_augmenting_cycle(g: &WeightedGraph, m: &Matching, i: usize) -> Result<Option<Vec<usize>>, GraphError> {
    if !g.is_simple() {
        return Err(GraphError::NotSimple);
    }
    g.check_vertex(i)?;
    // revalidate against g: a Matching built for another graph may not fit
    Matching::new(g, &m.edges)?;
    if m.covered().contains(i) {
        return Err(GraphError::InvalidMatching(format!("vertex {i} is covered")));
    }
    let mate = m.mates(g.n());
    let mut path = vec![i];
    let found = cycle_search(g, &mate, i, VertexSet::singleton(i), &mut path);
    Ok(found.then_some(path))
}

fn cycle_search(
    g: &WeightedGraph,
    mate: &[Option<usize>],
    root: usize,
    visited: VertexSet,
    path: &mut Vec<usize>,
) -> bool {
    let x = *path.last().expect("path starts at root");
    for y in g.adjacency(x) {
        if Some(y) == mate[x] {
            continue;
        }
        if y == root {
            if path.len() >= 3 {
                path.push(root);
                return true;
            }
            continue;
        }
        if visited.contains(y) {
            continue;
        }
        let Some(z) = mate[y] else { continue };
        if visited.contains(z) {
            continue;
        }
        path.push(y);
        path.push(z);
        if cycle_search(g, mate, root, visited.with(y).with(z), path) {
            return true;
        }
        path.truncate(path.len() - 2);
    }
    false
}

/// Weights in ascending order.
pub(crate) fn weight_multiset(g: &WeightedGraph) -> Vec<u32> {
    let mut w = g.weights().to_vec();
    w.sort_unstable();
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Triangle {0,1,2} plus edge {2,3}, weights (1,1,2,1).
    fn weighted_paw() -> WeightedGraph {
        WeightedGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)], &[1, 1, 2, 1]).unwrap()
    }

    #[test]
    fn weighted_paw_matching_and_degrees() {
        let g = weighted_paw();
        assert_eq!(g.matching_number(), 2);
        let degs: Vec<u64> = (0..4).map(|v| g.weighted_degree(v).unwrap()).collect();
        assert_eq!(degs, vec![3, 3, 3, 2]);
    }

    #[test]
    fn weighted_paw_deletions() {
        let g = weighted_paw();
        // Ω − N(2) is vertex 2 alone with weight 2: no edges
        let rest = g.delete_vertices(g.neighborhood(2).unwrap());
        assert_eq!(rest.n(), 1);
        assert_eq!(rest.weights(), &[2]);
        assert_eq!(rest.matching_number(), 0);
        // deleting just the vertex leaves matching numbers 2,2,1,2
        let by_vertex: Vec<usize> = (0..4)
            .map(|v| g.delete_vertices(VertexSet::singleton(v)).matching_number())
            .collect();
        assert_eq!(by_vertex, vec![2, 2, 1, 2]);
    }

    #[test]
    fn weighted_paw_saturating_under_both_readings() {
        let g = weighted_paw();
        let def: Vec<bool> = (2..=4).map(|t| g.is_t_saturating(t)).collect();
        assert_eq!(def, vec![false, true, false]);
        let vertex: Vec<bool> = (2..=4)
            .map(|t| g.is_t_saturating_with(t, DeletionReading::VertexOnly))
            .collect();
        assert_eq!(vertex, vec![false, true, true]);
    }

    #[test]
    fn trivial_matching_numbers() {
        assert_eq!(WeightedGraph::simple(2, &[(0, 1)]).unwrap().matching_number(), 1);
        assert_eq!(WeightedGraph::empty(5).unwrap().matching_number(), 0);
        assert_eq!(WeightedGraph::empty(0).unwrap().matching_number(), 0);
    }

    #[test]
    fn single_vertex_not_saturating() {
        let g = WeightedGraph::empty(1).unwrap();
        assert!(!g.is_t_saturating(1));
        assert!(!g.is_t_saturating(3));
        assert_eq!(g.weighted_degree(0).unwrap(), 0);
        assert!(g.neighborhood(0).unwrap().is_empty());
    }

    #[test]
    fn unknown_vertex_errors() {
        let g = weighted_paw();
        assert_eq!(g.neighborhood(7), Err(GraphError::UnknownVertex { vertex: 7, n: 4 }));
        assert!(g.weighted_degree(4).is_err());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(WeightedGraph::simple(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            WeightedGraph::from_edges(2, &[(0, 1)], &[1, 0]),
            Err(GraphError::ZeroWeight(1))
        );
        assert!(WeightedGraph::simple(2, &[(0, 2)]).is_err());
        assert!(WeightedGraph::empty(65).is_err());
        let g = WeightedGraph::simple(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn polarize_weighted_paw() {
        let p = weighted_paw().polarize().unwrap();
        assert_eq!(p.graph.n(), 5);
        assert_eq!(p.origin, vec![0, 1, 2, 2, 3]);
        // clones 2 and 3 of vertex 2 are non-adjacent and both see 0, 1, 4
        assert!(!p.graph.has_edge(2, 3));
        for c in [2, 3] {
            assert_eq!(p.graph.adjacency(c).to_vec(), vec![0, 1, 4]);
        }
        assert_eq!(p.graph.edge_count(), 7);
        assert_eq!(p.graph.matching_number(), 2);
        assert_eq!(p.clones(2).to_vec(), vec![2, 3]);
    }

    #[test]
    fn polarize_simple_is_identity() {
        let g = WeightedGraph::simple(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let p = g.polarize().unwrap();
        assert_eq!(p.graph, g);
        assert_eq!(p.origin, vec![0, 1, 2, 3]);
    }

    #[test]
    fn collapse_inverts_polarize() {
        let p = weighted_paw().polarize().unwrap();
        let back = p.graph.collapse([2, 3].into_iter().collect()).unwrap();
        assert_eq!(back, weighted_paw());
        // singleton group is a no-op
        assert_eq!(
            weighted_paw().collapse(VertexSet::singleton(1)).unwrap(),
            weighted_paw()
        );
    }

    #[test]
    fn collapse_rejects_bad_groups() {
        let g = weighted_paw();
        assert!(matches!(
            g.collapse([0, 1].into_iter().collect()),
            Err(GraphError::InvalidCollapse(_, "group vertices are adjacent"))
        ));
        assert!(matches!(
            g.collapse([0, 3].into_iter().collect()),
            Err(GraphError::InvalidCollapse(_, "neighborhoods differ"))
        ));
        assert!(g.collapse(VertexSet::EMPTY).is_err());
    }

    #[test]
    fn delete_empty_set_is_identity() {
        assert_eq!(weighted_paw().delete_vertices(VertexSet::EMPTY), weighted_paw());
    }

    #[test]
    fn maximum_matching_is_valid() {
        let g = weighted_paw();
        let m = g.maximum_matching();
        assert_eq!(m.len(), 2);
        assert!(Matching::new(&g, m.edges()).is_ok());
    }

    #[test]
    fn matching_validation() {
        let g = weighted_paw();
        assert!(Matching::new(&g, &[(0, 2), (1, 2)]).is_ok());
        assert!(Matching::new(&g, &[(0, 2), (1, 2), (2, 3)]).is_err());
        assert!(Matching::new(&g, &[(0, 3)]).is_err());
    }

    #[test]
    fn augmenting_cycle_in_triangle() {
        let g = WeightedGraph::simple(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let m = Matching::new(&g, &[(1, 2)]).unwrap();
        assert_eq!(find_augmenting_cycle(&g, &m, 0).unwrap(), Some(vec![0, 1, 2, 0]));
    }

    #[test]
    fn augmenting_cycle_two_triangles() {
        let g = WeightedGraph::simple(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let m = Matching::new(&g, &[(1, 2), (4, 5)]).unwrap();
        assert_eq!(find_augmenting_cycle(&g, &m, 0).unwrap(), Some(vec![0, 1, 2, 0]));
        assert_eq!(find_augmenting_cycle(&g, &m, 3).unwrap(), Some(vec![3, 4, 5, 3]));
    }

    #[test]
    fn augmenting_cycle_absent_on_path() {
        let g = WeightedGraph::simple(3, &[(0, 1), (1, 2)]).unwrap();
        let m = Matching::new(&g, &[(1, 2)]).unwrap();
        assert_eq!(find_augmenting_cycle(&g, &m, 0).unwrap(), None);
        assert!(find_augmenting_cycle(&g, &m, 1).is_err());
        assert!(find_augmenting_cycle(&weighted_paw(), &m, 0).is_err());
    }
}
