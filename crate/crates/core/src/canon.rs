//! Canonical forms for small weighted graphs and exhaustive graph
//! enumeration.
//!
//! Canonical labeling is color refinement followed by an individualize-and-
//! refine search tree. Branches on interchangeable twins inside a cell are
//! pruned, which keeps complete and edgeless graphs linear. The enumeration
//! helpers use it to produce one representative per isomorphism class.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::vertex_set::VertexSet;
use crate::weighted_graph::WeightedGraph;

/// Isomorphism-invariant encoding of a weighted graph. Two graphs are
/// isomorphic (weights included) iff their canonical forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    weights: Vec<u32>,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.weights.len()
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> WeightedGraph {
        let adj = self.rows.iter().map(|&r| VertexSet::from_bits(r)).collect();
        WeightedGraph::from_parts(adj, self.weights.clone())
    }
}

/// Canonical form of `g`.
pub fn canonical_form(g: &WeightedGraph) -> CanonicalForm {
    let perm = canonical_labeling(g);
    encode(g, &perm)
}

/// A permutation `perm` (vertex `v` goes to `perm[v]`) such that
/// `g.relabel(&perm)` is the canonical representative.
pub fn canonical_labeling(g: &WeightedGraph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut distinct: Vec<u32> = g.weights().to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let colors: Vec<u32> = g
        .weights()
        .iter()
        .map(|w| distinct.binary_search(w).expect("weight present") as u32)
        .collect();
    let colors = refine(g, colors);
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search(g, colors, &mut best);
    best.expect("search visits at least one leaf").1
}

fn encode(g: &WeightedGraph, perm: &[usize]) -> CanonicalForm {
    let n = g.n();
    let mut weights = vec![0; n];
    let mut rows = vec![0u64; n];
    for v in 0..n {
        weights[perm[v]] = g.weight(v);
        rows[perm[v]] = g.adjacency(v).iter().fold(0u64, |acc, u| acc | (1u64 << perm[u]));
    }
    CanonicalForm { weights, rows }
}

fn rows_for(g: &WeightedGraph, perm: &[usize]) -> Vec<u64> {
    let mut rows = vec![0u64; g.n()];
    for v in 0..g.n() {
        rows[perm[v]] = g.adjacency(v).iter().fold(0u64, |acc, u| acc | (1u64 << perm[u]));
    }
    rows
}

/// Equitable refinement. Colors are dense ranks; a vertex's new color is the
/// rank of (old color, sorted neighbor colors), so the result depends only on
/// the colored graph, never on vertex ids.
fn refine(g: &WeightedGraph, mut colors: Vec<u32>) -> Vec<u32> {
    let n = g.n();
    let mut classes = count_classes(&colors);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.adjacency(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| sorted.binary_search(&s).expect("signature present") as u32)
            .collect();
        let next_classes = sorted.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn search(g: &WeightedGraph, colors: Vec<u32>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let n = g.n();
    let classes = count_classes(&colors);
    if classes == n {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let rows = rows_for(g, &perm);
        if best.as_ref().is_none_or(|(b, _)| rows > *b) {
            *best = Some((rows, perm));
        }
        return;
    }

    // first smallest non-singleton cell
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c as usize] += 1;
    }
    let target = (0..n)
        .filter(|&c| sizes[c] > 1)
        .min_by_key(|&c| (sizes[c], c))
        .expect("non-discrete coloring has a non-singleton cell") as u32;
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();

    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        // swapping twins in the same cell is an automorphism of the colored
        // graph, so their subtrees produce the same leaves
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let split: Vec<u32> = (0..n)
            .map(|u| 2 * colors[u] + u32::from(colors[u] == target && u != v))
            .collect();
        let ranked = rerank(&split);
        search(g, refine(g, ranked), best);
    }
}

fn rerank(colors: &[u32]) -> Vec<u32> {
    let mut d = colors.to_vec();
    d.sort_unstable();
    d.dedup();
    colors
        .iter()
        .map(|c| d.binary_search(c).expect("color present") as u32)
        .collect()
}

fn are_twins(g: &WeightedGraph, u: usize, v: usize) -> bool {
    g.adjacency(u).without(v) == g.adjacency(v).without(u)
}

/// Whether `g` and `h` are isomorphic as weighted graphs.
pub fn isomorphic(g: &WeightedGraph, h: &WeightedGraph) -> bool {
    g.n() == h.n() && g.edge_count() == h.edge_count() && canonical_form(g) == canonical_form(h)
}

/// Number of vertex pairs on `n` vertices.
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The simple graph on `n` vertices whose edge set is selected by `mask`,
/// bit `k` standing for the `k`-th pair in lexicographic order
/// `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn labeled_graph(n: usize, mask: u64) -> WeightedGraph {
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> k & 1 == 1 {
                adj[u].insert(v);
                adj[v].insert(u);
            }
            k += 1;
        }
    }
    WeightedGraph::from_parts(adj, vec![1; n])
}

/// Largest `n` for which [`nonisomorphic_graphs`] is cached.
pub const ENUMERATION_LIMIT: usize = 8;

/// One representative of every isomorphism class of simple graphs on `n`
/// vertices, in canonical-form order. Supported for `n <= 8`.
pub fn nonisomorphic_graphs(n: usize) -> &'static [WeightedGraph] {
    assert!(
        n <= ENUMERATION_LIMIT,
        "enumeration supported up to {ENUMERATION_LIMIT} vertices"
    );
    static CACHE: [OnceLock<Vec<WeightedGraph>>; ENUMERATION_LIMIT + 1] =
        [const { OnceLock::new() }; ENUMERATION_LIMIT + 1];
    CACHE[n].get_or_init(|| {
        if n == 0 {
            return vec![WeightedGraph::from_parts(Vec::new(), Vec::new())];
        }
        let mut seen: HashSet<CanonicalForm> = HashSet::new();
        for g in nonisomorphic_graphs(n - 1) {
            for nbrs in 0..(1u64 << (n - 1)) {
                let mut adj: Vec<VertexSet> = g.adjacency_masks().to_vec();
                adj.push(VertexSet::from_bits(nbrs));
                for u in VertexSet::from_bits(nbrs) {
                    adj[u].insert(n - 1);
                }
                let h = WeightedGraph::from_parts(adj, vec![1; n]);
                seen.insert(canonical_form(&h));
            }
        }
        let mut forms: Vec<CanonicalForm> = seen.into_iter().collect();
        forms.sort();
        forms.iter().map(CanonicalForm::to_graph).collect()
    })
}

/// Connected members of [`nonisomorphic_graphs`].
pub fn connected_graphs(n: usize) -> Vec<WeightedGraph> {
    nonisomorphic_graphs(n)
        .iter()
        .filter(|g| g.is_connected())
        .cloned()
        .collect()
}

/// All vectors in `lo..=hi` of length `n`, in lexicographic order.
pub fn bounded_vectors(n: usize, lo: u32, hi: u32) -> impl Iterator<Item = Vec<u32>> {
    let mut cur = if lo <= hi { Some(vec![lo; n]) } else { None };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let next = {
            let v = cur.as_mut().expect("checked above");
            let mut i = n;
            loop {
                if i == 0 {
                    break false;
                }
                i -= 1;
                if v[i] < hi {
                    v[i] += 1;
                    for x in &mut v[i + 1..] {
                        *x = lo;
                    }
                    break true;
                }
            }
        };
        if !next {
            cur = None;
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force canonical form: maximum row encoding over all permutations.
    fn brute_form(g: &WeightedGraph) -> (Vec<u32>, Vec<u64>) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<(Vec<u32>, Vec<u64>)> = None;
        permute(&mut perm, 0, &mut |p| {
            let f = encode(g, p);
            let key = (f.weights.clone(), f.rows.clone());
            // weights sorted ascending, then rows maximal
            let mut sorted = f.weights.clone();
            sorted.sort_unstable();
            if f.weights != sorted {
                return;
            }
            if best.as_ref().is_none_or(|b| key.1 > b.1) {
                best = Some(key);
            }
        });
        best.unwrap()
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn class_counts_match_known_sequence() {
        let counts: Vec<usize> = (0..=7).map(|n| nonisomorphic_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
        let connected: Vec<usize> = (1..=7).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn labeled_classes_agree_with_brute_force() {
        for n in 1..=5 {
            let mut fast = HashSet::new();
            let mut slow = HashSet::new();
            for mask in 0..(1u64 << pair_count(n)) {
                let g = labeled_graph(n, mask);
                fast.insert(canonical_form(&g));
                slow.insert(brute_form(&g));
            }
            assert_eq!(fast.len(), slow.len(), "n = {n}");
            assert_eq!(fast.len(), nonisomorphic_graphs(n).len());
        }
    }

    #[test]
    fn weighted_forms_separate_weight_placements() {
        // path 0-1-2 with the weight-2 vertex at an end vs in the middle
        let end = WeightedGraph::from_edges(3, &[(0, 1), (1, 2)], &[2, 1, 1]).unwrap();
        let end2 = WeightedGraph::from_edges(3, &[(0, 1), (1, 2)], &[1, 1, 2]).unwrap();
        let mid = WeightedGraph::from_edges(3, &[(0, 1), (1, 2)], &[1, 2, 1]).unwrap();
        assert!(isomorphic(&end, &end2));
        assert!(!isomorphic(&end, &mid));
    }

    #[test]
    fn canonical_representative_round_trips() {
        for g in nonisomorphic_graphs(6) {
            let f = canonical_form(g);
            assert_eq!(canonical_form(&f.to_graph()), f);
            let perm = canonical_labeling(g);
            assert_eq!(g.relabel(&perm), f.to_graph());
        }
    }

    #[test]
    fn bounded_vectors_enumerates_lexicographically() {
        let all: Vec<Vec<u32>> = bounded_vectors(2, 0, 2).collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[1], vec![0, 1]);
        assert_eq!(all[8], vec![2, 2]);
        assert_eq!(bounded_vectors(0, 0, 3).count(), 1);
        assert_eq!(bounded_vectors(3, 2, 1).count(), 0);
    }
}
