//! Maximum-cardinality matching engines.
//!
//! Two engines live here: Edmonds' blossom algorithm on adjacency lists for
//! arbitrary simple graphs, and a capacitated branch-and-bound search that
//! works directly on a small weighted graph. The weighted graph layer picks
//! between them by the size of the polarization.

use std::collections::VecDeque;

use crate::vertex_set::VertexSet;

const NONE: usize = usize::MAX;

/// Maximum matching of a simple graph given as adjacency lists.
///
/// Returns the mate array: `mate[v]` is the vertex matched to `v`.
pub fn blossom(adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let n = adj.len();
    let mut mate = vec![NONE; n];

    // greedy start
    for v in 0..n {
        if mate[v] == NONE {
            if let Some(&u) = adj[v].iter().find(|&&u| u != v && mate[u] == NONE) {
                mate[v] = u;
                mate[u] = v;
            }
        }
    }

    let mut search = BlossomSearch::new(n);
    for root in 0..n {
        if mate[root] == NONE {
            if let Some(end) = search.find_augmenting_path(adj, &mate, root) {
                let mut v = end;
                while v != NONE {
                    let pv = search.parent[v];
                    let next = mate[pv];
                    mate[v] = pv;
                    mate[pv] = v;
                    v = next;
                }
            }
        }
    }

    mate.into_iter()
        .map(|m| if m == NONE { None } else { Some(m) })
        .collect()
}

struct BlossomSearch {
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    lca_mark: Vec<bool>,
    queue: VecDeque<usize>,
}

impl BlossomSearch {
    fn new(n: usize) -> Self {
        BlossomSearch {
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            lca_mark: vec![false; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    fn lca(&mut self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        self.lca_mark.iter_mut().for_each(|m| *m = false);
        loop {
            a = self.base[a];
            self.lca_mark[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if self.lca_mark[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    fn find_augmenting_path(&mut self, adj: &[Vec<usize>], mate: &[usize], root: usize) -> Option<usize> {
        let n = adj.len();
        for v in 0..n {
            self.parent[v] = NONE;
            self.base[v] = v;
            self.used[v] = false;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for &to in &adj[v] {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    let cur = self.lca(mate, v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(mate, v, cur, to);
                    self.mark_path(mate, to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    self.used[mate[to]] = true;
                    self.queue.push_back(mate[to]);
                }
            }
        }
        None
    }
}

/// Capacitated matching number by branch and bound.
///
/// `adj` holds neighbor masks, `caps[v]` the number of times `v` may still be
/// used, and only vertices in `alive` take part. Exponential in the total
/// capacity; callers keep that small.
pub fn capacitated_branch_and_bound(adj: &[VertexSet], caps: &[u32], alive: VertexSet) -> usize {
    let mut caps = caps.to_vec();
    let alive = alive.iter().filter(|&v| caps[v] > 0).collect::<VertexSet>();
    bb(adj, &mut caps, alive)
}

fn bb(adj: &[VertexSet], caps: &mut [u32], alive: VertexSet) -> usize {
    // only vertices with a live neighbor can contribute
    let mut useful = VertexSet::EMPTY;
    let mut total = 0u32;
    for v in alive {
        if adj[v].intersects(alive) {
            useful.insert(v);
            total += caps[v];
        }
    }
    let Some(v) = useful.first() else {
        return 0;
    };
    let upper = (total / 2) as usize;

    let mut best = 0usize;
    for u in adj[v].intersection(useful) {
        caps[v] -= 1;
        caps[u] -= 1;
        let mut next = useful;
        if caps[v] == 0 {
            next.remove(v);
        }
        if caps[u] == 0 {
            next.remove(u);
        }
        let r = 1 + bb(adj, caps, next);
        caps[v] += 1;
        caps[u] += 1;
        if r > best {
            best = r;
            if best >= upper {
                return best;
            }
        }
    }
    let r = bb(adj, caps, useful.without(v));
    best.max(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lists(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    fn masks(n: usize, edges: &[(usize, usize)]) -> Vec<VertexSet> {
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        adj
    }

    fn size(mate: &[Option<usize>]) -> usize {
        mate.iter().filter(|m| m.is_some()).count() / 2
    }

    #[test]
    fn blossom_on_odd_cycles() {
        // pentagon with a pendant: greedy can get stuck, blossom must not
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5)];
        let mate = blossom(&lists(6, &edges));
        assert_eq!(size(&mate), 3);
        for (v, m) in mate.iter().enumerate() {
            if let Some(u) = m {
                assert_eq!(mate[*u], Some(v));
            }
        }
    }

    #[test]
    fn blossom_petersen_is_perfect() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let edges: Vec<_> = outer.chain(spokes).chain(inner).collect();
        assert_eq!(size(&blossom(&lists(10, &edges))), 5);
    }

    #[test]
    fn branch_and_bound_capacities() {
        // triangle with capacities (2,2,1) -> 2 ; (2,2,2) -> 3
        let adj = masks(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(capacitated_branch_and_bound(&adj, &[2, 2, 1], VertexSet::full(3)), 2);
        assert_eq!(capacitated_branch_and_bound(&adj, &[2, 2, 2], VertexSet::full(3)), 3);
        assert_eq!(capacitated_branch_and_bound(&adj, &[5, 5, 0], VertexSet::full(3)), 5);
        assert_eq!(capacitated_branch_and_bound(&adj, &[1, 1, 1], VertexSet::EMPTY), 0);
    }
}
