use edgesat::canon::{bounded_vectors, labeled_graph, nonisomorphic_graphs, pair_count};
use edgesat::{find_augmenting_cycle, DeletionReading, GraphError, Matching, VertexSet, WeightedGraph};
use proptest::prelude::*;

/// Largest multiset of edges respecting vertex capacities, by exhaustive
/// search over edge multiplicities.
fn brute_matching_number(g: &WeightedGraph) -> usize {
    fn go(edges: &[(usize, usize)], k: usize, cap: &mut [u32]) -> usize {
        if k == edges.len() {
            return 0;
        }
        let (u, v) = edges[k];
        let mut best = go(edges, k + 1, cap);
        let mut used = 0;
        while cap[u] > 0 && cap[v] > 0 {
            cap[u] -= 1;
            cap[v] -= 1;
            used += 1;
            best = best.max(used + go(edges, k + 1, cap));
        }
        cap[u] += used as u32;
        cap[v] += used as u32;
        best
    }
    let mut cap = g.weights().to_vec();
    go(&g.edges(), 0, &mut cap)
}

fn brute_saturating(g: &WeightedGraph, t: u32) -> bool {
    let nu = brute_matching_number(g) as i64;
    nu < t as i64
        && (0..g.n()).all(|i| {
            let rest = g.delete_vertices(g.adjacency(i));
            brute_matching_number(&rest) as i64 >= t as i64 - g.weighted_degree(i).unwrap() as i64
        })
}

fn all_weighted(n_max: usize, cap: u32) -> impl Iterator<Item = WeightedGraph> {
    (1..=n_max).flat_map(move |n| {
        (0..1u64 << pair_count(n)).flat_map(move |mask| {
            let g = labeled_graph(n, mask);
            bounded_vectors(n, 1, cap).map(move |w| g.with_weights(&w).unwrap())
        })
    })
}

#[test]
fn matching_number_matches_brute_force() {
    for g in all_weighted(5, 3) {
        assert_eq!(g.matching_number(), brute_matching_number(&g), "{g:?}");
    }
}

#[test]
fn maximum_matching_is_valid_and_maximum() {
    for g in all_weighted(5, 2) {
        let m = g.maximum_matching();
        assert_eq!(m.len(), g.matching_number());
        Matching::new(&g, m.edges()).unwrap();
    }
}

#[test]
fn saturation_matches_brute_force() {
    for g in all_weighted(4, 3) {
        for t in 1..=5 {
            let sat = g.is_t_saturating(t);
            assert_eq!(sat, brute_saturating(&g, t), "{g:?} t={t}");
            if sat {
                let slack = t as u64 - g.matching_number() as u64;
                assert!((0..g.n()).all(|i| g.weighted_degree(i).unwrap() >= slack));
            }
        }
    }
}

#[test]
fn large_capacities_use_the_polarized_route() {
    // total weight above the branch-and-bound limit
    let g = WeightedGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)], &[5, 5, 5]).unwrap();
    assert_eq!(g.matching_number(), 7);
    let star = WeightedGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)], &[9, 2, 2, 2]).unwrap();
    assert_eq!(star.matching_number(), 6);
}

#[test]
fn polarization_preserves_matching_and_saturation() {
    for g in all_weighted(4, 3) {
        let p = g.polarize().unwrap();
        assert!(p.graph.is_simple());
        assert_eq!(p.graph.n() as u64, g.total_weight());
        assert_eq!(p.graph.matching_number(), g.matching_number());
        for v in 0..g.n() {
            assert_eq!(p.clones(v).len() as u32, g.weight(v));
            for c in p.clones(v) {
                assert_eq!(p.graph.degree(c) as u64, g.weighted_degree(v).unwrap());
            }
        }
        for t in 1..=5 {
            assert_eq!(p.graph.is_t_saturating(t), g.is_t_saturating(t));
        }
    }
}

#[test]
fn collapse_of_twins_inverts_polarization() {
    for g in all_weighted(3, 3) {
        let p = g.polarize().unwrap();
        let mut h = p.graph.clone();
        // collapse clones of the highest original vertex first so ids stay stable
        for v in (0..g.n()).rev() {
            let clones = p.clones(v);
            if clones.len() > 1 {
                h = h.collapse(clones).unwrap();
            }
        }
        assert_eq!(h.n(), g.n());
        assert_eq!(h.total_weight(), g.total_weight());
        assert_eq!(h.matching_number(), g.matching_number());
        assert!(edgesat::canon::isomorphic(&h, &g), "{g:?} vs {h:?}");
    }
}

#[test]
fn collapse_rejects_non_twins() {
    let path = WeightedGraph::simple(3, &[(0, 1), (1, 2)]).unwrap();
    assert!(path.collapse(VertexSet::from_bits(0b011)).is_err());
    assert!(path.collapse(VertexSet::from_bits(0b101)).is_ok());
}

#[test]
fn deleting_vertices_recounts_degrees() {
    for g in all_weighted(4, 2) {
        for bits in 0..1u64 << g.n() {
            let s = VertexSet::from_bits(bits);
            let (h, old) = g.induced(g.vertices().difference(s));
            assert_eq!(h, g.delete_vertices(s));
            for (v, &o) in old.iter().enumerate() {
                let expected: u64 = g.adjacency(o).difference(s).iter().map(|u| g.weight(u) as u64).sum();
                assert_eq!(h.weighted_degree(v).unwrap(), expected);
                assert_eq!(h.weight(v), g.weight(o));
            }
        }
    }
}

#[test]
fn invalid_input_is_rejected() {
    assert!(matches!(
        WeightedGraph::from_edges(2, &[(0, 0)], &[1, 1]),
        Err(GraphError::SelfLoop(0))
    ));
    assert!(WeightedGraph::from_edges(2, &[(0, 2)], &[1, 1]).is_err());
    assert!(WeightedGraph::from_edges(2, &[(0, 1)], &[1, 0]).is_err());
    assert!(WeightedGraph::from_edges(2, &[(0, 1)], &[1]).is_err());
    assert!(WeightedGraph::empty(65).is_err());
    let g = WeightedGraph::simple(2, &[(0, 1)]).unwrap();
    assert!(g.neighborhood(2).is_err());
    assert!(Matching::new(&g, &[(0, 1), (0, 1)]).is_err());
}

#[test]
fn worked_example_readings() {
    let g = WeightedGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)], &[1, 1, 2, 1]).unwrap();
    assert_eq!(g.matching_number(), 2);
    let degrees: Vec<u64> = (0..4).map(|v| g.weighted_degree(v).unwrap()).collect();
    assert_eq!(degrees, [3, 3, 3, 2]);
    let vertex_only: Vec<bool> = (2..=4)
        .map(|t| g.is_t_saturating_with(t, DeletionReading::VertexOnly))
        .collect();
    assert_eq!(vertex_only, [false, true, true]);
    assert!(g.is_t_saturating(3));
    assert!(!g.is_t_saturating(4));
}

/// Every uncovered vertex of a maximum matching of a 4-saturating simple
/// graph with matching number 3 lies on an alternating odd cycle.
#[test]
fn augmenting_cycles_on_saturating_graphs() {
    let mut seen = 0;
    for n in 1..=8 {
        for g in nonisomorphic_graphs(n) {
            if g.matching_number() != 3 || !g.is_t_saturating(4) {
                continue;
            }
            let m = g.maximum_matching();
            for i in g.vertices().difference(m.covered()) {
                let cycle = find_augmenting_cycle(g, &m, i).unwrap().expect("cycle");
                assert_eq!(cycle.first(), Some(&i));
                assert_eq!(cycle.last(), Some(&i));
                assert_eq!(cycle.len() % 2, 0, "odd cycle as closed walk {cycle:?}");
                for (k, w) in cycle.windows(2).enumerate() {
                    assert!(g.has_edge(w[0], w[1]));
                    let in_m = m.edges().contains(&(w[0].min(w[1]), w[0].max(w[1])));
                    assert_eq!(in_m, k % 2 == 1, "{cycle:?}");
                }
                seen += 1;
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn augmenting_cycle_requires_uncovered_vertex() {
    let k3 = WeightedGraph::simple(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let m = Matching::new(&k3, &[(0, 1)]).unwrap();
    assert!(find_augmenting_cycle(&k3, &m, 0).is_err());
    assert_eq!(find_augmenting_cycle(&k3, &m, 2).unwrap(), Some(vec![2, 0, 1, 2]));
    let p3 = WeightedGraph::simple(3, &[(0, 1), (1, 2)]).unwrap();
    let m = Matching::new(&p3, &[(0, 1)]).unwrap();
    assert_eq!(find_augmenting_cycle(&p3, &m, 2).unwrap(), None);
}

fn arb_graph(max_n: usize, max_w: u32) -> impl Strategy<Value = WeightedGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs = pair_count(n);
        (0..1u64 << pairs, proptest::collection::vec(1..=max_w, n))
            .prop_map(move |(mask, w)| labeled_graph(n, mask).with_weights(&w).unwrap())
    })
}

proptest! {
    #[test]
    fn matching_number_bounds(g in arb_graph(8, 4)) {
        let nu = g.matching_number() as u64;
        prop_assert!(nu <= g.total_weight() / 2);
        prop_assert!(nu <= g.edges().iter().map(|&(u, v)| g.weight(u).min(g.weight(v)) as u64).sum::<u64>());
        if g.has_edges() {
            prop_assert!(nu >= 1);
        }
    }

    #[test]
    fn matching_number_monotone_under_deletion(g in arb_graph(8, 3), v in 0usize..8) {
        let v = v % g.n();
        let h = g.delete_vertices(VertexSet::singleton(v));
        prop_assert!(h.matching_number() <= g.matching_number());
        prop_assert!(g.matching_number() <= h.matching_number() + g.weight(v) as usize);
    }

    #[test]
    fn saturating_graphs_have_no_light_vertices(g in arb_graph(7, 3), t in 1u32..6) {
        if g.is_t_saturating(t) {
            let slack = t as u64 - g.matching_number() as u64;
            for i in 0..g.n() {
                prop_assert!(g.weighted_degree(i).unwrap() >= slack);
            }
        }
    }

    #[test]
    fn relabeling_preserves_invariants(g in arb_graph(7, 3), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm);
        prop_assert_eq!(h.matching_number(), g.matching_number());
        for t in 1..=5 {
            prop_assert_eq!(h.is_t_saturating(t), g.is_t_saturating(t));
        }
        prop_assert!(edgesat::canon::isomorphic(&g, &h));
    }
}
