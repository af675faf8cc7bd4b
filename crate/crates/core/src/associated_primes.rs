//! Associated primes of powers of edge ideals, described by vertex covers.
//!
//! A monomial prime `P_F` is named by the cover `F` of its variables. Minimal
//! primes are the minimal covers; an embedded `P_F` needs a witness monomial
//! `x^a` whose weighted graph is `t`-saturating, with `F` minimal among the
//! covers containing `N[V_a]`. Three routes are provided: a generic witness
//! search for any `t`, a pattern-driven search for `t = 4`, and an oracle
//! working from the colon ideals directly.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use thiserror::Error;

use crate::canon::canonical_form;
use crate::classification::{classify4, spanned_by, Mode, Pattern, SatType, Table};
use crate::edge_ideal::{
    exponent_at, exponent_space_size, is_sat4_member, outside_condition, restriction_with_support, AmbientGraph,
    ExponentVector, PowerTable,
};
use crate::vertex_set::VertexSet;
use crate::weighted_graph::WeightedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssError {
    #[error("{0:?} is not a vertex cover")]
    NotACover(VertexSet),
    #[error("graph has no edges, so the ideal is zero")]
    Edgeless,
}

/// A vertex cover `F`, standing for the prime generated by its variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cover(VertexSet);

impl Cover {
    pub fn new(gamma: &AmbientGraph, f: VertexSet) -> Result<Self, AssError> {
        if is_cover(gamma, f) {
            Ok(Cover(f))
        } else {
            Err(AssError::NotACover(f))
        }
    }

    pub fn vertices(&self) -> VertexSet {
        self.0
    }
}

/// Covers compare by their sorted vertex lists.
impl Ord for Cover {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.to_vec().cmp(&other.0.to_vec())
    }
}

impl PartialOrd for Cover {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

pub fn is_cover(gamma: &AmbientGraph, f: VertexSet) -> bool {
    gamma
        .vertices()
        .difference(f)
        .iter()
        .all(|v| gamma.adjacency(v).is_subset(f))
}

/// `N[U]`: `U` together with every vertex adjacent to it.
pub fn closed_neighborhood(gamma: &AmbientGraph, u: VertexSet) -> VertexSet {
    gamma.closed_neighborhood(u)
}

/// Vertices of `F` with no neighbor outside `F`.
pub fn core(gamma: &AmbientGraph, f: VertexSet) -> Result<VertexSet, AssError> {
    if !is_cover(gamma, f) {
        return Err(AssError::NotACover(f));
    }
    Ok(f.iter().filter(|&v| gamma.adjacency(v).is_subset(f)).collect())
}

/// Inclusion-minimal vertex covers in lexicographic order, computed as the
/// complements of the maximal independent sets.
pub fn minimal_covers(gamma: &AmbientGraph) -> Vec<Cover> {
    let all = gamma.vertices();
    let mut out = Vec::new();
    maximal_independent(gamma, VertexSet::EMPTY, all, VertexSet::EMPTY, &mut |s| {
        out.push(Cover(all.difference(s)));
    });
    out.sort();
    out
}

// Bron–Kerbosch with pivoting on the complement graph.
fn maximal_independent(
    gamma: &AmbientGraph,
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    emit: &mut dyn FnMut(VertexSet),
) {
    if p.is_empty() && x.is_empty() {
        emit(r);
        return;
    }
    let non_nbrs = |v: usize| gamma.vertices().difference(gamma.adjacency(v)).without(v);
    let pivot = p.union(x).iter().max_by_key(|&u| non_nbrs(u).intersection(p).len());
    let skip = pivot.map(non_nbrs).unwrap_or(VertexSet::EMPTY);
    for v in p.difference(skip) {
        let nv = non_nbrs(v);
        maximal_independent(gamma, r.with(v), p.intersection(nv), x.intersection(nv), emit);
        p.remove(v);
        x.insert(v);
    }
}

/// Whether `F` is a cover containing `n` and no cover strictly between.
///
/// Covers are closed upwards, so it is enough that dropping any single
/// vertex of `F \ n` loses the cover property.
pub fn is_minimal_over(gamma: &AmbientGraph, f: VertexSet, n: VertexSet) -> bool {
    n.is_subset(f) && is_cover(gamma, f) && f.difference(n).iter().all(|v| !gamma.adjacency(v).is_subset(f))
}

/// All covers minimal among those containing `n`: `n` plus a minimal cover
/// of the graph left after deleting `n`.
pub fn minimal_covers_over(gamma: &AmbientGraph, n: VertexSet) -> Vec<Cover> {
    let rest = gamma.vertices().difference(n);
    let (sub, old) = gamma.graph().induced(rest);
    let sub = AmbientGraph::new(sub).expect("induced subgraph of a simple graph");
    let mut out: Vec<Cover> = minimal_covers(&sub)
        .into_iter()
        .map(|c| Cover(n.union(c.0.iter().map(|v| old[v]).collect())))
        .collect();
    out.sort();
    out
}

/// Why a cover is associated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AssWitness {
    /// A minimal cover: a minimal prime.
    MinimalCover,
    /// An embedded prime with a witness monomial `x^a`.
    Monomial(ExponentVector),
}

fn require_edges(gamma: &AmbientGraph) -> Result<(), AssError> {
    if gamma.graph().has_edges() {
        Ok(())
    } else {
        Err(AssError::Edgeless)
    }
}

/// Checks the full witness condition for `F` and `a`: `Γ_a` is
/// `t`-saturating, `F` is minimal among covers containing `N[V_a]`, and
/// `ν(Γ_a − N_a(i)) ≥ t − deg_a(i)` for all `i ∈ core(F) \ V_a`.
pub fn is_witness(gamma: &AmbientGraph, f: VertexSet, a: &ExponentVector, t: u32) -> bool {
    let supp = a.support();
    if supp.is_empty() || !is_minimal_over(gamma, f, gamma.closed_neighborhood(supp)) {
        return false;
    }
    let (ga, support) = restriction_with_support(gamma, a);
    let Ok(c) = core(gamma, f) else { return false };
    ga.is_t_saturating(t) && outside_condition(gamma, a, &ga, &support, t, c)
}

/// Decides whether `P_F` is associated to `I^t`. Embedded witnesses are
/// searched among `a` with `a_i <= t`, by total degree and then
/// lexicographically, so the returned witness has minimal degree.
pub fn is_associated_prime(gamma: &AmbientGraph, f: VertexSet, t: u32) -> Result<Option<AssWitness>, AssError> {
    require_edges(gamma)?;
    let c = core(gamma, f)?;
    if c.is_empty() {
        return Ok(Some(AssWitness::MinimalCover));
    }
    // a witness support lies in core(F), since N[V_a] ⊆ F
    let core_vs = c.to_vec();
    let mut candidates: Vec<ExponentVector> = (1..exponent_space_size(core_vs.len(), t))
        .map(|k| {
            let local = exponent_at(core_vs.len(), t, k);
            let mut a = vec![0u32; gamma.n()];
            for (j, &v) in core_vs.iter().enumerate() {
                a[v] = local.as_slice()[j];
            }
            ExponentVector::new(a)
        })
        .collect();
    candidates.sort_by(|x, y| x.degree().cmp(&y.degree()).then_with(|| x.cmp(y)));
    Ok(candidates
        .into_iter()
        .find(|a| is_witness(gamma, f, a, t))
        .map(AssWitness::Monomial))
}

/// An embedded prime with the witness that certified it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedPrime {
    pub cover: Cover,
    pub witness: ExponentVector,
    /// 1-based index into [`table4_patterns`] when found by the pattern route.
    pub pattern_id: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssReport {
    pub minimal: Vec<Cover>,
    pub embedded: Vec<EmbeddedPrime>,
}

impl AssReport {
    /// Every cover, minimal and embedded, in lexicographic order.
    pub fn covers(&self) -> Vec<Cover> {
        let mut all: Vec<Cover> = self.minimal.clone();
        all.extend(self.embedded.iter().map(|e| e.cover));
        all.sort();
        all
    }

    pub fn contains(&self, f: VertexSet) -> bool {
        self.minimal.iter().any(|c| c.0 == f) || self.embedded.iter().any(|e| e.cover.0 == f)
    }
}

/// All associated primes of `I^t` by the generic witness search over every
/// cover with nonempty core. Exponential in the number of vertices.
pub fn ass_primes(gamma: &AmbientGraph, t: u32) -> Result<AssReport, AssError> {
    require_edges(gamma)?;
    let minimal = minimal_covers(gamma);
    let mut embedded = Vec::new();
    for bits in 0..1u64 << gamma.n() {
        let f = VertexSet::from_bits(bits);
        if !is_cover(gamma, f) || core(gamma, f)?.is_empty() {
            continue;
        }
        if let Some(AssWitness::Monomial(a)) = is_associated_prime(gamma, f, t)? {
            embedded.push(EmbeddedPrime {
                cover: Cover(f),
                witness: a,
                pattern_id: None,
            });
        }
    }
    embedded.sort_by_key(|x| x.cover);
    Ok(AssReport { minimal, embedded })
}

/// A subgraph shape whose closed neighborhoods generate the embedded
/// primes of `I^4`.
#[derive(Debug, Clone)]
pub struct AssPattern {
    /// 1-based position in [`table4_patterns`].
    pub id: usize,
    /// The type the shape was taken from.
    pub source: SatType,
    pub graph: WeightedGraph,
    pattern: Pattern,
}

/// Shapes reducible to smaller ones: a witness of one of these types can be
/// traded for a witness on a smaller support with the same cover.
fn reducible(ty: SatType, template: &WeightedGraph) -> bool {
    match (ty.table, ty.index) {
        // cone over a pentagon, four triangles, prism, triangle with K4
        (Table::T2, 2 | 3 | 4 | 7) => true,
        // two triangles sharing an edge of weight (2, 2)
        (Table::T3, 4) => template.n() == 4,
        _ => false,
    }
}

/// The derived shape list for `I^4`: the unweighted base graph of every
/// non-reducible 4-saturating template, one per isomorphism class. Two
/// triangles joined by a path only enter with the path ends adjacent; with
/// non-adjacent ends they reduce to two disjoint triangles.
pub fn table4_patterns() -> &'static [AssPattern] {
    static PATTERNS: OnceLock<Vec<AssPattern>> = OnceLock::new();
    PATTERNS.get_or_init(|| {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for spec in crate::classification::type_specs() {
            if spec.ty.table == Table::T1 {
                continue;
            }
            for p in &spec.patterns {
                if reducible(spec.ty, p.graph()) {
                    continue;
                }
                let mut base = p.graph().with_weights(&vec![1; p.n()]).expect("positive weights");
                if spec.ty == SatType::new(Table::T2, 12) {
                    base.add_edge(2, 4).expect("path ends are vertices");
                }
                if seen.insert(canonical_form(&base)) {
                    out.push(AssPattern {
                        id: out.len() + 1,
                        source: spec.ty,
                        pattern: Pattern::new(base.clone(), Mode::SpannedBy),
                        graph: base,
                    });
                }
            }
        }
        out
    })
}

fn subsets_of_size(all: VertexSet, k: usize) -> Vec<VertexSet> {
    let items = all.to_vec();
    let mut out = Vec::new();
    fn go(items: &[usize], k: usize, start: usize, cur: VertexSet, out: &mut Vec<VertexSet>) {
        if cur.len() == k {
            out.push(cur);
            return;
        }
        for i in start..items.len() {
            go(items, k, i + 1, cur.with(items[i]), out);
        }
    }
    go(&items, k, 0, VertexSet::EMPTY, &mut out);
    out
}

/// Vertex sets `U` whose induced subgraph is spanned by the pattern.
pub fn pattern_occurrences(gamma: &AmbientGraph, p: &AssPattern) -> Vec<VertexSet> {
    subsets_of_size(gamma.vertices(), p.graph.n())
        .into_iter()
        .filter(|&u| spanned_by(&gamma.graph().induced(u).0, &p.pattern))
        .collect()
}

/// Associated primes of `I^4` from the derived shape list: for every
/// occurrence `U` of a shape, every cover `F` minimal over `N[U]` is tried
/// with the weightings of `U` (entries 1 to 4) that the 4-saturating
/// classifier accepts, and kept when the outside condition holds on
/// `core(F) \ U`.
pub fn ass_primes_4(gamma: &AmbientGraph) -> Result<AssReport, AssError> {
    require_edges(gamma)?;
    let minimal = minimal_covers(gamma);
    let mut best: BTreeMap<Cover, (u64, ExponentVector, usize)> = BTreeMap::new();
    for p in table4_patterns() {
        for u in pattern_occurrences(gamma, p) {
            let covers = minimal_covers_over(gamma, gamma.closed_neighborhood(u));
            let verts = u.to_vec();
            for k in 0..exponent_space_size(verts.len(), 3) {
                let local = exponent_at(verts.len(), 3, k);
                let mut a = vec![0u32; gamma.n()];
                for (j, &v) in verts.iter().enumerate() {
                    a[v] = local.as_slice()[j] + 1;
                }
                let a = ExponentVector::new(a);
                let (ga, support) = restriction_with_support(gamma, &a);
                if classify4(&ga).is_none() {
                    continue;
                }
                for f in &covers {
                    let c = core(gamma, f.0)?;
                    if !outside_condition(gamma, &a, &ga, &support, 4, c) {
                        continue;
                    }
                    let key = (a.degree(), a.clone(), p.id);
                    let entry = best.entry(*f).or_insert_with(|| key.clone());
                    if (key.0, &key.1) < (entry.0, &entry.1) {
                        *entry = key;
                    }
                }
            }
        }
    }
    let embedded = best
        .into_iter()
        .map(|(cover, (_, witness, id))| EmbeddedPrime {
            cover,
            witness,
            pattern_id: Some(id),
        })
        .collect();
    Ok(AssReport { minimal, embedded })
}

/// Associated primes straight from colon ideals: `F` is reported when some
/// `a` with `a_i <= cap` has `(I^t : x^a) = P_F`, that is `x_i x^a ∈ I^t`
/// for every `i ∈ F` while no monomial in the variables outside `F` moves
/// `x^a` into `I^t`.
pub fn ass_primes_oracle(gamma: &AmbientGraph, t: u32, cap: u32) -> Result<Vec<Cover>, AssError> {
    require_edges(gamma)?;
    let n = gamma.n();
    let table = PowerTable::new(gamma, t);
    let mut found = std::collections::BTreeSet::new();
    let mut a = vec![0u32; n];
    for k in 0..exponent_space_size(n, cap) {
        a.copy_from_slice(exponent_at(n, cap, k).as_slice());
        if table.contains(&a) {
            continue;
        }
        let mut f = VertexSet::EMPTY;
        for i in 0..n {
            a[i] += 1;
            if table.contains(&a) {
                f.insert(i);
            }
            a[i] -= 1;
        }
        let mut outside = a.clone();
        for i in gamma.vertices().difference(f) {
            outside[i] += t;
        }
        if !table.contains(&outside) {
            found.insert(Cover(f));
        }
    }
    Ok(found.into_iter().collect())
}

/// Whether `depth R/I^4 > 0`, i.e. `I^4` is saturated: no `x^a` with
/// `a_i <= 4` lies in `sat(I^4) \ I^4`. Supports are restricted to
/// dominating sets carrying a total degree between 5 and 9, outside which
/// the degree-four criterion never fires.
pub fn depth4_positive(gamma: &AmbientGraph) -> Result<bool, AssError> {
    require_edges(gamma)?;
    let all = gamma.vertices();
    for bits in 1..1u64 << gamma.n() {
        let u = VertexSet::from_bits(bits);
        if u.len() > 9 || gamma.closed_neighborhood(u) != all {
            continue;
        }
        let verts = u.to_vec();
        for k in 0..exponent_space_size(verts.len(), 3) {
            let local = exponent_at(verts.len(), 3, k);
            let degree: u64 = local.as_slice().iter().map(|&e| e as u64 + 1).sum();
            if !(5..=9).contains(&degree) {
                continue;
            }
            let mut a = vec![0u32; gamma.n()];
            for (j, &v) in verts.iter().enumerate() {
                a[v] = local.as_slice()[j] + 1;
            }
            if is_sat4_member(gamma, &ExponentVector::new(a)).is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A graph on which a theorem route and the oracle disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleMismatch {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub expected: Vec<Cover>,
    pub got: Vec<Cover>,
    /// Set when only the depth test disagreed.
    pub depth_only: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OracleDiffReport {
    pub graphs: u64,
    pub disagreement_count: u64,
    pub disagreements: Vec<OracleMismatch>,
}

/// Compares the associated primes from the theorems with
/// [`ass_primes_oracle`] on every connected graph with `2..=n_max`
/// vertices (one per isomorphism class). For `t = 4` the shape-driven
/// [`ass_primes_4`] and [`depth4_positive`] are checked; otherwise the
/// generic witness search.
pub fn oracle_diff(t: u32, n_max: usize, cap: u32, partition: crate::partition::Partition) -> OracleDiffReport {
    use rayon::prelude::*;
    let graphs: Vec<WeightedGraph> = (2..=n_max).flat_map(crate::canon::connected_graphs).collect();
    let range = partition.range(graphs.len() as u64);
    let results: Vec<Option<OracleMismatch>> = graphs[range.start as usize..range.end as usize]
        .par_iter()
        .map(|g| {
            let gamma = AmbientGraph::new(g.clone()).expect("enumerated graphs are simple");
            let expected = ass_primes_oracle(&gamma, t, cap).expect("connected graphs have edges");
            let (got, depth_ok) = if t == 4 {
                let got = ass_primes_4(&gamma).expect("has edges").covers();
                let full_in_oracle = expected.iter().any(|c| c.vertices() == gamma.vertices());
                let depth = depth4_positive(&gamma).expect("has edges");
                (got, depth != full_in_oracle)
            } else {
                (ass_primes(&gamma, t).expect("has edges").covers(), true)
            };
            (got != expected || !depth_ok).then(|| OracleMismatch {
                n: g.n(),
                edges: g.edges(),
                depth_only: got == expected,
                expected,
                got,
            })
        })
        .collect();
    let mut report = OracleDiffReport {
        graphs: results.len() as u64,
        ..Default::default()
    };
    for m in results.into_iter().flatten() {
        report.disagreement_count += 1;
        if report.disagreements.len() < 100 {
            report.disagreements.push(m);
        }
    }
    report
}
