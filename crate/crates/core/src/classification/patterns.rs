//! Weighted pattern graphs and the bijective matcher behind "spanned by".

use crate::vertex_set::VertexSet;
use crate::weighted_graph::{weight_multiset, WeightedGraph};

/// How a pattern must sit inside a graph of the same order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// The graph is isomorphic to the pattern.
    ExactGraph,
    /// The pattern is a spanning subgraph of the graph.
    SpannedBy,
    /// Each pattern component spans its image and no edge joins the images
    /// of different components.
    DisjointUnion,
}

/// A weighted template together with its matching semantics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    graph: WeightedGraph,
    mode: Mode,
    // pairs of pattern vertices whose images must not be adjacent
    forbidden: Vec<VertexSet>,
    degrees_desc: Vec<usize>,
    order: Vec<usize>,
}

impl Pattern {
    pub fn new(graph: WeightedGraph, mode: Mode) -> Self {
        let n = graph.n();
        let all = graph.vertices();
        let forbidden = match mode {
            Mode::SpannedBy => vec![VertexSet::EMPTY; n],
            Mode::ExactGraph => (0..n).map(|v| all.without(v).difference(graph.adjacency(v))).collect(),
            Mode::DisjointUnion => {
                let comps = graph.components();
                (0..n)
                    .map(|v| {
                        let own = *comps.iter().find(|c| c.contains(v)).expect("vertex in a component");
                        all.difference(own)
                    })
                    .collect()
            }
        };
        let mut degrees_desc: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
        degrees_desc.sort_unstable_by(|a, b| b.cmp(a));
        let order = search_order(&graph);
        Pattern {
            graph,
            mode,
            forbidden,
            degrees_desc,
            order,
        }
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    fn admits_counts(&self, g: &WeightedGraph) -> bool {
        if g.n() != self.n() {
            return false;
        }
        let ge = g.edge_count();
        let pe = self.graph.edge_count();
        match self.mode {
            Mode::ExactGraph => ge == pe,
            Mode::SpannedBy | Mode::DisjointUnion => ge >= pe,
        }
    }
}

// Highest-degree vertex first, then always a vertex with the most already
// placed neighbors, so edge checks prune early.
fn search_order(p: &WeightedGraph) -> Vec<usize> {
    let n = p.n();
    let mut placed = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = p
            .vertices()
            .difference(placed)
            .iter()
            .max_by_key(|&v| {
                (
                    p.adjacency(v).intersection(placed).len(),
                    p.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex");
        placed.insert(next);
        order.push(next);
    }
    order
}

fn degrees_desc(g: &WeightedGraph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

fn prefilter(g: &WeightedGraph, p: &Pattern) -> bool {
    if !p.admits_counts(g) || weight_multiset(g) != weight_multiset(&p.graph) {
        return false;
    }
    let gd = degrees_desc(g);
    match p.mode {
        Mode::ExactGraph => gd == p.degrees_desc,
        _ => gd.iter().zip(&p.degrees_desc).all(|(a, b)| a >= b),
    }
}

/// Whether `g` matches `p` under the pattern's mode. Weights must agree
/// exactly under the bijection.
pub fn spanned_by(g: &WeightedGraph, p: &Pattern) -> bool {
    if !prefilter(g, p) {
        return false;
    }
    let mut image = vec![usize::MAX; p.n()];
    let mut found = false;
    extend(g, p, 0, VertexSet::EMPTY, &mut image, &mut |_| {
        found = true;
        true
    });
    found
}

/// Every bijection `m` (pattern vertex `v` to graph vertex `m[v]`) under
/// which `g` matches `p`, in lexicographic order of the search.
pub fn embeddings(g: &WeightedGraph, p: &Pattern) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if !prefilter(g, p) {
        return out;
    }
    let mut image = vec![usize::MAX; p.n()];
    extend(g, p, 0, VertexSet::EMPTY, &mut image, &mut |m| {
        out.push(m.to_vec());
        false
    });
    out
}

// Returns true to stop the search.
fn extend(
    g: &WeightedGraph,
    p: &Pattern,
    depth: usize,
    used: VertexSet,
    image: &mut [usize],
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if depth == p.n() {
        return visit(image);
    }
    let v = p.order[depth];
    let pg = &p.graph;
    for x in g.vertices().difference(used) {
        if g.weight(x) != pg.weight(v) || g.degree(x) < pg.degree(v) {
            continue;
        }
        if p.mode == Mode::ExactGraph && g.degree(x) != pg.degree(v) {
            continue;
        }
        let ok = p.order[..depth].iter().all(|&u| {
            let adjacent = g.has_edge(x, image[u]);
            if pg.has_edge(v, u) {
                adjacent
            } else {
                !(adjacent && p.forbidden[v].contains(u))
            }
        });
        if !ok {
            continue;
        }
        image[v] = x;
        if extend(g, p, depth + 1, used.with(x), image, visit) {
            return true;
        }
    }
    image[v] = usize::MAX;
    false
}

/// Builders for the shapes the tables are written in.
pub mod shapes {
    use crate::weighted_graph::WeightedGraph;

    pub fn graph(n: usize, edges: &[(usize, usize)]) -> WeightedGraph {
        WeightedGraph::simple(n, edges).expect("valid shape")
    }

    pub fn weighted(n: usize, edges: &[(usize, usize)], weights: &[u32]) -> WeightedGraph {
        WeightedGraph::from_edges(n, edges, weights).expect("valid shape")
    }

    pub fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    }

    pub fn complete_edges(n: usize) -> Vec<(usize, usize)> {
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
    }

    pub fn cycle(n: usize) -> WeightedGraph {
        graph(n, &cycle_edges(n))
    }

    pub fn complete(n: usize) -> WeightedGraph {
        graph(n, &complete_edges(n))
    }

    /// Disjoint union, second graph's vertices shifted past the first.
    pub fn disjoint(a: &WeightedGraph, b: &WeightedGraph) -> WeightedGraph {
        let shift = a.n();
        let mut edges = a.edges();
        edges.extend(b.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        let mut weights = a.weights().to_vec();
        weights.extend_from_slice(b.weights());
        weighted(a.n() + b.n(), &edges, &weights)
    }
}

/// Two triangles `{0,1,2}` and `{4,5,6}` joined by the path `2-3-4`.
pub fn two_triangles_by_path() -> Pattern {
    let g = shapes::graph(7, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)]);
    Pattern::new(g, Mode::SpannedBy)
}
