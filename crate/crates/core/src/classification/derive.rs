//! Enumerations that produce the parts of the tables not given as explicit
//! shapes: the 6-vertex four-triangle type and the weighted templates.
//!
//! Weighted 4-saturating graphs are exactly the collapses of 4-saturating
//! simple graphs, since polarizing preserves the property. Collapsing every
//! simple 4-saturating graph in all possible ways therefore lists them all;
//! the templates are the members that stop being 4-saturating when any
//! single edge is removed.

use std::collections::BTreeSet;
use std::fmt::Write;

use rayon::prelude::*;

use super::{classify4, Mode, Pattern, SatType, Table};
use crate::canon::{canonical_form, nonisomorphic_graphs, CanonicalForm};
use crate::vertex_set::VertexSet;
use crate::weighted_graph::WeightedGraph;

/// `g` with the edge `{u, v}` removed.
pub fn without_edge(g: &WeightedGraph, u: usize, v: usize) -> WeightedGraph {
    let mut adj = g.adjacency_masks().to_vec();
    adj[u].remove(v);
    adj[v].remove(u);
    WeightedGraph::from_parts(adj, g.weights().to_vec())
}

/// Whether `g` is `t`-saturating and no single-edge deletion is.
pub fn is_edge_minimal(g: &WeightedGraph, t: u32) -> bool {
    g.is_t_saturating(t)
        && g.edges()
            .into_iter()
            .all(|(u, v)| !without_edge(g, u, v).is_t_saturating(t))
}

/// Edge-minimal `t`-saturating simple graphs on `n` vertices, one per
/// isomorphism class.
pub fn minimal_simple_saturating(n: usize, t: u32) -> Vec<WeightedGraph> {
    nonisomorphic_graphs(n)
        .iter()
        .filter(|g| is_edge_minimal(g, t))
        .cloned()
        .collect()
}

/// Edge-minimal 4-saturating graphs on 6 vertices that neither the cone
/// over a pentagon nor the prism span.
pub fn derive_four_triangle_type() -> Vec<WeightedGraph> {
    let explicit = [SatType::new(Table::T2, 2), SatType::new(Table::T2, 4)];
    minimal_simple_saturating(6, 4)
        .into_iter()
        .filter(|g| !explicit.iter().any(|ty| ty.spec().matches(g)))
        .collect()
}

/// Classes of pairwise twins: vertices with equal open neighborhoods.
pub fn twin_classes(g: &WeightedGraph) -> Vec<VertexSet> {
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut seen = VertexSet::EMPTY;
    for v in g.vertices() {
        if seen.contains(v) {
            continue;
        }
        let class: VertexSet = g
            .vertices()
            .iter()
            .filter(|&u| g.adjacency(u) == g.adjacency(v))
            .collect();
        seen = seen.union(class);
        classes.push(class);
    }
    classes
}

/// All set partitions of `s`, each as a list of blocks.
pub fn set_partitions(s: VertexSet) -> Vec<Vec<VertexSet>> {
    let items = s.to_vec();
    let mut out = Vec::new();
    let mut blocks: Vec<VertexSet> = Vec::new();
    fn go(items: &[usize], k: usize, blocks: &mut Vec<VertexSet>, out: &mut Vec<Vec<VertexSet>>) {
        if k == items.len() {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].insert(items[k]);
            go(items, k + 1, blocks, out);
            blocks[b].remove(items[k]);
        }
        blocks.push(VertexSet::singleton(items[k]));
        go(items, k + 1, blocks, out);
        blocks.pop();
    }
    go(&items, 0, &mut blocks, &mut out);
    out
}

/// Every weighted graph obtained from `g` by collapsing groups of twins,
/// `g` itself included.
pub fn all_collapses(g: &WeightedGraph) -> Vec<WeightedGraph> {
    let mut groups: Vec<Vec<VertexSet>> = vec![Vec::new()];
    for class in twin_classes(g).into_iter().filter(|c| c.len() > 1) {
        let parts = set_partitions(class);
        groups = groups
            .iter()
            .flat_map(|acc| {
                parts.iter().map(move |p| {
                    let mut next = acc.clone();
                    next.extend(p.iter().copied().filter(|b| b.len() > 1));
                    next
                })
            })
            .collect();
    }
    groups.into_iter().map(|gs| collapse_all(g, &gs)).collect()
}

// Collapses disjoint groups; ids shift, so merge one group at a time on
// the original labels and relabel at the end.
fn collapse_all(g: &WeightedGraph, groups: &[VertexSet]) -> WeightedGraph {
    let mut weights = g.weights().to_vec();
    let mut keep = g.vertices();
    for &grp in groups {
        let head = grp.first().expect("nonempty group");
        weights[head] = grp.iter().map(|v| g.weight(v)).sum();
        keep = keep.difference(grp.without(head));
    }
    let (base, old) = g.induced(keep);
    let w: Vec<u32> = old.iter().map(|&v| weights[v]).collect();
    WeightedGraph::from_parts(base.adjacency_masks().to_vec(), w)
}

/// All 4-saturating weighted graphs with some weight above 1, one per
/// isomorphism class, found by collapsing the 4-saturating simple graphs on
/// 6 to 8 vertices (the simple types on 5 and 9 vertices have no twins).
pub fn weighted_saturating_graphs() -> Vec<WeightedGraph> {
    let forms: BTreeSet<CanonicalForm> = (6..=8)
        .flat_map(|n| nonisomorphic_graphs(n).iter())
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter(|g| classify4(g).is_some_and(|ty| ty.table == Table::T2))
        .flat_map_iter(|g| {
            all_collapses(g)
                .into_iter()
                .filter(|h| !h.is_simple())
                .map(|h| canonical_form(&h))
                .collect::<Vec<_>>()
        })
        .collect();
    forms.iter().map(CanonicalForm::to_graph).collect()
}

/// Edge-minimal members of [`weighted_saturating_graphs`]: the weighted
/// templates, in canonical order.
pub fn weighted_templates() -> Vec<WeightedGraph> {
    weighted_saturating_graphs()
        .into_iter()
        .filter(|g| is_edge_minimal(g, 4))
        .collect()
}

/// Mode a derived template should be matched with: connected templates of
/// total weight at most 7 cannot reach a 4-matching whatever edges are
/// added, so spanning suffices; heavier ones must stay disconnected.
pub fn template_mode(g: &WeightedGraph) -> Mode {
    if g.total_weight() <= 7 && g.is_connected() {
        Mode::SpannedBy
    } else {
        Mode::DisjointUnion
    }
}

/// Markdown listing of the derived types, as shipped in `docs/`.
pub fn derived_types_document() -> String {
    let mut out = String::new();
    out.push_str("# Derived 4-saturating types\n\n");
    out.push_str("Generated by `edgesat::classification::derive`. Vertices are 0-based.\n\n");
    out.push_str("## Four-triangle type (T2/3)\n\n");
    for g in derive_four_triangle_type() {
        writeln!(out, "- edges {:?}", g.edges()).unwrap();
    }
    out.push_str("\n## Weighted templates\n\n");
    out.push_str("| type | name | mode | weights | edges |\n|---|---|---|---|---|\n");
    for g in weighted_templates() {
        let ty = classify4(&g);
        let (code, name) = match ty {
            Some(t) => (t.to_string(), t.name()),
            None => ("unassigned".to_string(), "-"),
        };
        writeln!(
            out,
            "| {code} | {name} | {:?} | {:?} | {:?} |",
            template_mode(&g),
            g.weights(),
            g.edges()
        )
        .unwrap();
    }
    let all = weighted_saturating_graphs();
    writeln!(
        out,
        "\nWeighted 4-saturating graphs found by collapsing: {}.",
        all.len()
    )
    .unwrap();
    out.push_str("\n## Shapes generating the embedded primes of the fourth power\n\n");
    out.push_str("| id | from type | vertices | edges |\n|---|---|---|---|\n");
    for p in crate::associated_primes::table4_patterns() {
        writeln!(
            out,
            "| {} | {} | {} | {:?} |",
            p.id,
            p.source,
            p.graph.n(),
            p.graph.edges()
        )
        .unwrap();
    }
    out
}

/// Pattern for a derived template under [`template_mode`].
pub fn template_pattern(g: &WeightedGraph) -> Pattern {
    Pattern::new(g.clone(), template_mode(g))
}
