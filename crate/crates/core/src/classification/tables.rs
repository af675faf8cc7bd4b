//! The type tables. The four-triangle type `T2/3` and every weighted `T3`
//! template were obtained by the enumerations in [`super::derive`]; tests
//! there check that rerunning them reproduces these lists.

use std::sync::OnceLock;

use super::patterns::shapes::*;
use super::patterns::{two_triangles_by_path, Mode, Pattern};
use super::{derive, SatType, Table};
use crate::weighted_graph::WeightedGraph;

/// One row of a table: a type and the patterns that realize it.
#[derive(Debug, Clone)]
pub struct TypeSpec {
    pub ty: SatType,
    /// Short identifier, e.g. `K5`.
    pub name: &'static str,
    pub description: &'static str,
    pub patterns: Vec<Pattern>,
}

impl TypeSpec {
    pub fn matches(&self, g: &WeightedGraph) -> bool {
        self.patterns.iter().any(|p| super::spanned_by(g, p))
    }
}

fn spec(table: Table, index: u8, name: &'static str, description: &'static str, patterns: Vec<Pattern>) -> TypeSpec {
    TypeSpec {
        ty: SatType::new(table, index),
        name,
        description,
        patterns,
    }
}

fn triangle() -> WeightedGraph {
    complete(3)
}

fn bowtie() -> WeightedGraph {
    graph(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
}

/// All types of all tables, in (table, index) order.
pub fn type_specs() -> &'static [TypeSpec] {
    static SPECS: OnceLock<Vec<TypeSpec>> = OnceLock::new();
    SPECS.get_or_init(|| {
        let mut specs = table1();
        specs.extend(table2());
        specs.extend(table3());
        specs
    })
}

fn table1() -> Vec<TypeSpec> {
    use Mode::*;
    use Table::T1;
    vec![
        spec(
            T1,
            1,
            "K3(2,2,1)",
            "triangle with weights (2,2,1)",
            vec![Pattern::new(weighted(3, &cycle_edges(3), &[2, 2, 1]), ExactGraph)],
        ),
        spec(
            T1,
            2,
            "paw(1,1,2,1)",
            "spanned by a triangle and an edge meeting at a vertex of weight 2",
            vec![Pattern::new(
                weighted(4, &[(0, 1), (0, 2), (1, 2), (2, 3)], &[1, 1, 2, 1]),
                SpannedBy,
            )],
        ),
        spec(
            T1,
            3,
            "K4",
            "complete graph on 4 vertices",
            vec![Pattern::new(complete(4), ExactGraph)],
        ),
        spec(
            T1,
            4,
            "2K3",
            "disjoint union of two triangles",
            vec![Pattern::new(disjoint(&triangle(), &triangle()), DisjointUnion)],
        ),
        spec(
            T1,
            5,
            "bowtie",
            "spanned by two triangles meeting at a vertex",
            vec![Pattern::new(bowtie(), SpannedBy)],
        ),
        spec(
            T1,
            6,
            "C5",
            "spanned by a pentagon",
            vec![Pattern::new(cycle(5), SpannedBy)],
        ),
    ]
}

fn table2() -> Vec<TypeSpec> {
    use Mode::*;
    use Table::T2;
    let mut wheel = cycle_edges(5);
    wheel.extend((0..5).map(|v| (v, 5)));
    let four_triangles = [
        (0, 2),
        (0, 3),
        (0, 4),
        (0, 5),
        (1, 2),
        (1, 3),
        (1, 4),
        (1, 5),
        (2, 3),
        (4, 5),
    ];
    let prism = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)];
    let triangle_pentagon = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 2)];
    let two_pentagons = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5), (5, 6), (6, 0)];
    let three_triangles = [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5), (0, 6), (5, 6)];
    vec![
        spec(
            T2,
            1,
            "K5",
            "complete graph on 5 vertices",
            vec![Pattern::new(complete(5), ExactGraph)],
        ),
        spec(
            T2,
            2,
            "W5",
            "spanned by a cone over a pentagon",
            vec![Pattern::new(graph(6, &wheel), SpannedBy)],
        ),
        spec(
            T2,
            3,
            "4K3",
            "spanned by four triangles: two non-adjacent apexes joined to both ends of two disjoint edges",
            vec![Pattern::new(graph(6, &four_triangles), SpannedBy)],
        ),
        spec(
            T2,
            4,
            "prism",
            "spanned by a triangular prism",
            vec![Pattern::new(graph(6, &prism), SpannedBy)],
        ),
        spec(
            T2,
            5,
            "K3+C5",
            "disjoint union of a triangle and a graph spanned by a pentagon",
            vec![Pattern::new(disjoint(&triangle(), &cycle(5)), DisjointUnion)],
        ),
        spec(
            T2,
            6,
            "K3+bowtie",
            "disjoint union of a triangle and a graph spanned by two triangles meeting at a vertex",
            vec![Pattern::new(disjoint(&triangle(), &bowtie()), DisjointUnion)],
        ),
        spec(
            T2,
            7,
            "K3+K4",
            "disjoint union of a triangle and a complete graph on 4 vertices",
            vec![Pattern::new(disjoint(&triangle(), &complete(4)), DisjointUnion)],
        ),
        spec(
            T2,
            8,
            "C7",
            "spanned by a 7-cycle",
            vec![Pattern::new(cycle(7), SpannedBy)],
        ),
        spec(
            T2,
            9,
            "K3.C5",
            "spanned by a triangle and a pentagon meeting at a vertex",
            vec![Pattern::new(graph(7, &triangle_pentagon), SpannedBy)],
        ),
        spec(
            T2,
            10,
            "C5:C5",
            "spanned by two pentagons sharing a path of length 2",
            vec![Pattern::new(graph(7, &two_pentagons), SpannedBy)],
        ),
        spec(
            T2,
            11,
            "3K3.",
            "spanned by three triangles meeting at a vertex",
            vec![Pattern::new(graph(7, &three_triangles), SpannedBy)],
        ),
        spec(
            T2,
            12,
            "K3-P-K3",
            "spanned by two disjoint triangles joined by a path of length 2",
            vec![two_triangles_by_path()],
        ),
        spec(
            T2,
            13,
            "3K3",
            "disjoint union of three triangles",
            vec![Pattern::new(
                disjoint(&disjoint(&triangle(), &triangle()), &triangle()),
                DisjointUnion,
            )],
        ),
    ]
}

// (weights, edges) of each template.
type Template = (&'static [u32], &'static [(usize, usize)]);

fn templates(list: &[Template]) -> Vec<Pattern> {
    list.iter()
        .map(|(w, e)| derive::template_pattern(&weighted(w.len(), e, w)))
        .collect()
}

fn table3() -> Vec<TypeSpec> {
    use Table::T3;
    vec![
        spec(T3, 1, "K3w", "triangle with weights (2,2,2), (3,2,2) or (3,3,1)", templates(&[
            (&[1, 3, 3], &[(0, 1), (0, 2), (1, 2)]),
            (&[2, 2, 2], &[(0, 1), (0, 2), (1, 2)]),
            (&[2, 2, 3], &[(0, 1), (0, 2), (1, 2)]),
        ])),
        spec(T3, 2, "K3+e", "spanned by a weighted triangle with a pendant edge", templates(&[
            (&[1, 1, 2, 3], &[(0, 1), (0, 3), (1, 3), (2, 3)]),
            (&[1, 1, 2, 3], &[(0, 2), (0, 3), (1, 3), (2, 3)]),
            (&[1, 2, 2, 2], &[(0, 1), (1, 2), (1, 3), (2, 3)]),
        ])),
        spec(T3, 3, "K3+2e", "spanned by a weighted triangle with two more edges", templates(&[
            (&[1, 1, 1, 1, 3], &[(0, 1), (0, 4), (1, 4), (2, 4), (3, 4)]),
            (&[1, 1, 1, 2, 2], &[(0, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
            (&[1, 1, 1, 2, 2], &[(0, 1), (0, 3), (1, 3), (2, 4), (3, 4)]),
        ])),
        spec(T3, 4, "2K3w", "spanned by two weighted triangles sharing a vertex or an edge", templates(&[
            (&[1, 1, 1, 1, 2], &[(0, 1), (0, 4), (1, 4), (2, 3), (2, 4), (3, 4)]),
            (&[1, 1, 1, 2, 2], &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]),
            (&[1, 1, 2, 2], &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        ])),
        spec(T3, 5, "2K3+e", "spanned by two triangles and an edge, one vertex of weight 2", templates(&[
            (&[1, 1, 1, 1, 1, 2], &[(0, 1), (0, 2), (1, 2), (2, 5), (3, 4), (3, 5), (4, 5)]),
            (&[1, 1, 1, 1, 1, 2], &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 5), (3, 5), (4, 5)]),
            (&[1, 1, 1, 1, 1, 2], &[(0, 1), (0, 5), (1, 5), (2, 3), (2, 5), (3, 5), (4, 5)]),
        ])),
        spec(T3, 6, "C5w", "spanned by a pentagon with an edge of weights (2,2)", templates(&[(
            &[1, 1, 1, 2, 2],
            &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)],
        )])),
        spec(T3, 7, "C5+e", "spanned by a pentagon and an edge meeting at a vertex of weight 2", templates(&[(
            &[1, 1, 1, 1, 1, 2],
            &[(0, 1), (0, 2), (1, 3), (2, 5), (3, 5), (4, 5)],
        )])),
        spec(T3, 8, "C4.K3", "spanned by a square and a triangle meeting at a vertex of weight 2", templates(&[(
            &[1, 1, 1, 1, 1, 2],
            &[(0, 1), (0, 2), (1, 5), (2, 5), (3, 4), (3, 5), (4, 5)],
        )])),
        spec(T3, 9, "K3+K3(2,2,1)", "disjoint union of a triangle and a triangle with weights (2,2,1)", templates(&[(
            &[1, 1, 1, 1, 2, 2],
            &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)],
        )])),
        spec(
            T3,
            10,
            "K3+paw",
            "disjoint union of a triangle and a graph spanned by a triangle and an edge meeting at a vertex of weight 2",
            templates(&[(
                &[1, 1, 1, 1, 1, 1, 2],
                &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 6), (4, 6), (5, 6)],
            )]),
        ),
    ]
}
