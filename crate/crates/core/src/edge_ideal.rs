//! Membership of monomials `x^a` in powers of an edge ideal and in their
//! saturations.
//!
//! The ideal is never written down. `x^a ∈ I^t` holds exactly when the
//! weighted graph `Γ_a` (the induced subgraph on the support of `a`, weighted
//! by `a`) has a matching of size `t`, and every other question reduces to
//! that one.

use std::fmt;

use thiserror::Error;

use crate::classification::{classify4, embeddings, patterns, SatType, Table};
use crate::partition::Partition;
use crate::vertex_set::VertexSet;
use crate::weighted_graph::{GraphError, WeightedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("ambient graph must have all weights 1")]
    WeightedAmbient,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Exponent vector `a ∈ N^n` of a monomial `x^a`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Support `V_a = {i : a_i > 0}`.
    pub fn support(&self) -> VertexSet {
        self.0
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Total degree `deg(x^a)`.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// `a + k·e_i`.
    pub fn bumped(&self, i: usize, k: u32) -> Self {
        let mut v = self.0.clone();
        v[i] += k;
        ExponentVector(v)
    }

    /// Each exponent replaced by `min(a_i, cap)`.
    pub fn capped(&self, cap: u32) -> Self {
        ExponentVector(self.0.iter().map(|&e| e.min(cap)).collect())
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &ExponentVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A simple graph `Γ` on `V = {0..n-1}`; stands for its edge ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AmbientGraph(WeightedGraph);

impl AmbientGraph {
    pub fn new(g: WeightedGraph) -> Result<Self, IdealError> {
        if !g.is_simple() {
            return Err(IdealError::WeightedAmbient);
        }
        Ok(AmbientGraph(g))
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, IdealError> {
        Ok(AmbientGraph(WeightedGraph::simple(n, edges)?))
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn vertices(&self) -> VertexSet {
        self.0.vertices()
    }

    pub fn adjacency(&self, v: usize) -> VertexSet {
        self.0.adjacency(v)
    }

    pub fn closed_neighborhood(&self, u: VertexSet) -> VertexSet {
        self.0.closed_neighborhood(u)
    }

    /// Whether `s` dominates the graph under the given reading.
    pub fn is_dominating(&self, s: VertexSet, reading: Domination) -> bool {
        match reading {
            Domination::Inclusive => self.closed_neighborhood(s) == self.vertices(),
            Domination::Strict => self.vertices().iter().all(|v| self.adjacency(v).intersects(s)),
        }
    }

    fn check(&self, a: &ExponentVector) {
        assert_eq!(
            a.len(),
            self.n(),
            "exponent vector has length {}, ambient graph has {} vertices",
            a.len(),
            self.n()
        );
    }
}

impl fmt::Debug for AmbientGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AmbientGraph(n={}, edges={:?})", self.n(), self.0.edges())
    }
}

/// Which vertices count as dominated by a set `S`.
///
/// `Inclusive`: every vertex lies in `S` or has a neighbor in `S`.
/// `Strict`: every vertex, members of `S` included, has a neighbor in `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Domination {
    #[default]
    Inclusive,
    Strict,
}

/// `Γ_a`: the induced subgraph of `gamma` on the support of `a`, weighted by
/// `a`, with vertices renumbered in ascending order of the support.
///
/// # Panics
///
/// If `a` does not have one entry per vertex of `gamma`.
pub fn restriction(gamma: &AmbientGraph, a: &ExponentVector) -> WeightedGraph {
    restriction_with_support(gamma, a).0
}

pub(crate) fn restriction_with_support(gamma: &AmbientGraph, a: &ExponentVector) -> (WeightedGraph, Vec<usize>) {
    gamma.check(a);
    let support = a.support();
    let (base, old) = gamma.graph().induced(support);
    let weights: Vec<u32> = old.iter().map(|&v| a.as_slice()[v]).collect();
    let g = WeightedGraph::from_parts(base.adjacency_masks().to_vec(), weights);
    (g, old)
}

/// Whether `x^a ∈ I^t`.
pub fn in_power(gamma: &AmbientGraph, a: &ExponentVector, t: u32) -> bool {
    restriction(gamma, a).matching_number() >= t as usize
}

/// Whether `x^a` lies in the saturation of `I^t`, decided by the matching
/// criterion: either `x^a ∈ I^t`, or `Γ_a` is `t`-saturating and every vertex
/// `i` outside the support satisfies `ν(Γ_a − N_a(i)) ≥ t − deg_a(i)`.
pub fn in_saturation(gamma: &AmbientGraph, a: &ExponentVector, t: u32) -> bool {
    let (ga, support) = restriction_with_support(gamma, a);
    if ga.matching_number() >= t as usize {
        return true;
    }
    ga.is_t_saturating(t) && outside_condition(gamma, a, &ga, &support, t, gamma.vertices())
}

/// Checks `ν(Γ_a − N_a(i)) ≥ t − deg_a(i)` for every `i ∈ among \ V_a`.
pub(crate) fn outside_condition(
    gamma: &AmbientGraph,
    a: &ExponentVector,
    ga: &WeightedGraph,
    support: &[usize],
    t: u32,
    among: VertexSet,
) -> bool {
    let supp = a.support();
    let local = |s: VertexSet| -> VertexSet {
        support
            .iter()
            .enumerate()
            .filter(|&(_, &v)| s.contains(v))
            .map(|(k, _)| k)
            .collect()
    };
    among.difference(supp).iter().all(|i| {
        let nbrs = gamma.adjacency(i).intersection(supp);
        let deg: u64 = nbrs.iter().map(|j| a.as_slice()[j] as u64).sum();
        let need = t as i64 - deg as i64;
        need <= 0 || ga.matching_number_on(ga.vertices().difference(local(nbrs))) as i64 >= need
    })
}

/// Saturation membership straight from the definition `(I^t : m^∞)`: for
/// every variable `x_i`, `x^a · x_i^{2t} ∈ I^t`.
pub fn in_saturation_oracle(gamma: &AmbientGraph, a: &ExponentVector, t: u32) -> bool {
    gamma.check(a);
    if gamma.n() == 0 {
        return in_power(gamma, a, t);
    }
    (0..gamma.n()).all(|i| in_power(gamma, &a.bumped(i, 2 * t), t))
}

/// Which branch of the degree-four trichotomy certified membership in
/// `sat(I^4) \ I^4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sat4Case {
    /// `Γ_a` is a triangle plus a disjoint `K_4`; every outside vertex sees
    /// the triangle or at least two vertices of the `K_4`.
    TriangleAndK4,
    /// `Γ_a` is spanned by two triangles joined through a middle vertex;
    /// the path ends are adjacent or every outside vertex sees a triangle.
    TwoTrianglesByPath,
    /// Any other 4-saturating type, with `deg_a(i) > 7 − deg(x^a)` outside.
    DegreeBound,
}

/// Decides `x^a ∈ sat(I^4) \ I^4` by the degree-four classification: `V_a`
/// must dominate `Γ`, `Γ_a` must be a classified 4-saturating type, and the
/// type's side condition must hold. Returns the branch that fired.
pub fn is_sat4_member(gamma: &AmbientGraph, a: &ExponentVector) -> Option<Sat4Case> {
    gamma.check(a);
    let supp = a.support();
    if !gamma.is_dominating(supp, Domination::Inclusive) {
        return None;
    }
    let (ga, support) = restriction_with_support(gamma, a);
    let ty = classify4(&ga)?;
    let outside = gamma.vertices().difference(supp);
    let local_nbrs = |i: usize| -> VertexSet {
        let nbrs = gamma.adjacency(i);
        support
            .iter()
            .enumerate()
            .filter(|&(_, &v)| nbrs.contains(v))
            .map(|(k, _)| k)
            .collect()
    };

    match ty {
        SatType {
            table: Table::T2,
            index: 7,
        } => {
            let comps = ga.components();
            let triangle = *comps.iter().find(|c| c.len() == 3).expect("triangle component");
            let k4 = *comps.iter().find(|c| c.len() == 4).expect("K4 component");
            outside
                .iter()
                .all(|i| {
                    let nb = local_nbrs(i);
                    nb.intersects(triangle) || nb.intersection(k4).len() >= 2
                })
                .then_some(Sat4Case::TriangleAndK4)
        }
        SatType {
            table: Table::T2,
            index: 12,
        } => {
            let pattern = &patterns::two_triangles_by_path();
            // pattern vertices: triangles {0,1,2} and {4,5,6}, path 2-3-4
            let ok = embeddings(&ga, pattern).into_iter().any(|m| {
                let (left, right) = (
                    [m[0], m[1], m[2]].into_iter().collect::<VertexSet>(),
                    [m[4], m[5], m[6]].into_iter().collect::<VertexSet>(),
                );
                ga.has_edge(m[2], m[4])
                    || outside.iter().all(|i| {
                        let nb = local_nbrs(i);
                        nb.intersects(left) || nb.intersects(right)
                    })
            });
            ok.then_some(Sat4Case::TwoTrianglesByPath)
        }
        _ => {
            let total = a.degree() as i64;
            outside
                .iter()
                .all(|i| {
                    let deg: i64 = gamma.adjacency(i).iter().map(|j| a.as_slice()[j] as i64).sum();
                    deg > 7 - total
                })
                .then_some(Sat4Case::DegreeBound)
        }
    }
}

/// Number of exponent vectors with entries in `0..=cap` on `n` vertices.
pub fn exponent_space_size(n: usize, cap: u32) -> u64 {
    (cap as u64 + 1).pow(n as u32)
}

/// The `index`-th vector of `{0..=cap}^n` in lexicographic order.
pub fn exponent_at(n: usize, cap: u32, mut index: u64) -> ExponentVector {
    let base = cap as u64 + 1;
    let mut v = vec![0u32; n];
    for slot in v.iter_mut().rev() {
        *slot = (index % base) as u32;
        index /= base;
    }
    ExponentVector(v)
}

/// All `a` with `a_i <= cap` and `x^a ∈ sat(I^t) \ I^t`, in lexicographic
/// order.
pub fn saturation_gap_witnesses(gamma: &AmbientGraph, t: u32, cap: u32) -> Vec<ExponentVector> {
    saturation_gap_witnesses_in(gamma, t, cap, Partition::WHOLE)
}

/// [`saturation_gap_witnesses`] restricted to one lexicographic block.
pub fn saturation_gap_witnesses_in(gamma: &AmbientGraph, t: u32, cap: u32, part: Partition) -> Vec<ExponentVector> {
    let n = gamma.n();
    part.range(exponent_space_size(n, cap))
        .map(|k| exponent_at(n, cap, k))
        .filter(|a| !in_power(gamma, a, t) && in_saturation(gamma, a, t))
        .collect()
}

/// Precomputed `x^a ∈ I^t` for a fixed graph and power.
///
/// Since a `t`-matching uses no vertex more than `t` times, membership only
/// depends on `min(a, t)`; the table stores `min(ν, t)` for every vector in
/// `{0..=t}^n`, filled by the recursion "the first usable vertex is either
/// retired or matched to one of its neighbors".
pub struct PowerTable {
    n: usize,
    t: u32,
    nu: Vec<u8>,
}

impl PowerTable {
    /// # Panics
    ///
    /// If `(t+1)^n` exceeds `2^26` entries.
    pub fn new(gamma: &AmbientGraph, t: u32) -> Self {
        let n = gamma.n();
        let base = t as usize + 1;
        let size = base.checked_pow(n as u32).filter(|&s| s <= 1 << 26);
        let size = size.expect("power table too large");
        let mut stride = vec![1usize; n];
        for v in 1..n {
            stride[v] = stride[v - 1] * base;
        }
        let mut nu = vec![0u8; size];
        let mut digits = vec![0usize; n];
        for idx in 0..size {
            if idx > 0 {
                // increment little-endian digits
                let mut k = 0;
                loop {
                    digits[k] += 1;
                    if digits[k] < base {
                        break;
                    }
                    digits[k] = 0;
                    k += 1;
                }
            }
            let alive: VertexSet = (0..n).filter(|&v| digits[v] > 0).collect();
            let first = alive.iter().find(|&v| gamma.adjacency(v).intersects(alive));
            let Some(v) = first else { continue };
            let mut best = nu[idx - digits[v] * stride[v]];
            for u in gamma.adjacency(v).intersection(alive) {
                let r = 1 + nu[idx - stride[v] - stride[u]];
                best = best.max(r);
            }
            nu[idx] = best.min(t as u8);
        }
        PowerTable { n, t, nu }
    }

    fn index(&self, a: &[u32]) -> usize {
        let base = self.t as usize + 1;
        a.iter()
            .rev()
            .fold(0usize, |acc, &e| acc * base + e.min(self.t) as usize)
    }

    /// Whether `x^a ∈ I^t`.
    pub fn contains(&self, a: &[u32]) -> bool {
        debug_assert_eq!(a.len(), self.n);
        self.nu[self.index(a)] as u32 >= self.t
    }

    /// `min(ν(Γ_a), t)`.
    pub fn truncated_matching_number(&self, a: &[u32]) -> u32 {
        self.nu[self.index(a)] as u32
    }
}
