//! Recognition of the 3- and 4-saturating weighted graph types, and
//! exhaustive verification of the recognizers against the saturating
//! predicate.

pub mod derive;
pub mod patterns;
mod tables;

use std::collections::BTreeMap;
use std::fmt;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::canon::{labeled_graph, nonisomorphic_graphs, pair_count};
use crate::partition::Partition;
use crate::weighted_graph::WeightedGraph;

pub use patterns::{embeddings, spanned_by, Mode, Pattern};
pub use tables::{type_specs, TypeSpec};

/// Which classification table a type belongs to: 3-saturating graphs,
/// 4-saturating simple graphs, or 4-saturating graphs with a weight above 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Table {
    T1,
    T2,
    T3,
}

/// A classified type, `(table, index)` with 1-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SatType {
    pub table: Table,
    pub index: u8,
}

impl SatType {
    pub const fn new(table: Table, index: u8) -> Self {
        SatType { table, index }
    }

    pub fn spec(&self) -> &'static TypeSpec {
        type_specs()
            .iter()
            .find(|s| s.ty == *self)
            .unwrap_or_else(|| panic!("no such type {self}"))
    }

    pub fn name(&self) -> &'static str {
        self.spec().name
    }

    pub fn description(&self) -> &'static str {
        self.spec().description
    }
}

impl fmt::Display for SatType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{}", self.table, self.index)
    }
}

fn tables_for(t: u32) -> &'static [Table] {
    match t {
        3 => &[Table::T1],
        4 => &[Table::T2, Table::T3],
        _ => panic!("classification exists for t = 3 and t = 4 only, got {t}"),
    }
}

/// Every type of the tables for `t` that `g` matches, in (table, index) order.
///
/// # Panics
///
/// If `t` is not 3 or 4.
pub fn classify_all(g: &WeightedGraph, t: u32) -> Vec<SatType> {
    let tables = tables_for(t);
    type_specs()
        .iter()
        .filter(|s| tables.contains(&s.ty.table))
        .filter(|s| s.matches(g))
        .map(|s| s.ty)
        .collect()
}

fn classify_first(g: &WeightedGraph, t: u32) -> Option<SatType> {
    let tables = tables_for(t);
    type_specs()
        .iter()
        .filter(|s| tables.contains(&s.ty.table))
        .find(|s| s.matches(g))
        .map(|s| s.ty)
}

/// The first 3-saturating type `g` belongs to.
pub fn classify3(g: &WeightedGraph) -> Option<SatType> {
    classify_first(g, 3)
}

/// The first 4-saturating type `g` belongs to, simple types before
/// weighted ones.
pub fn classify4(g: &WeightedGraph) -> Option<SatType> {
    classify_first(g, 4)
}

/// Which graphs a verification run sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphSpace {
    /// Every labeled simple graph on `1..=n_max` vertices.
    Labeled,
    /// One graph per isomorphism class on `1..=n_max` vertices.
    Unlabeled,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub t: u32,
    pub n_max: usize,
    /// Each vertex weight ranges over `1..=weight_cap`.
    pub weight_cap: u32,
    /// Skip weightings whose total exceeds this.
    pub max_total_weight: Option<u64>,
    pub space: GraphSpace,
    pub partition: Partition,
    /// How many disagreements to keep in full.
    pub max_recorded: usize,
}

impl VerifyOptions {
    pub fn new(t: u32, n_max: usize, weight_cap: u32) -> Self {
        VerifyOptions {
            t,
            n_max,
            weight_cap,
            max_total_weight: None,
            space: GraphSpace::Labeled,
            partition: Partition::WHOLE,
            max_recorded: 100,
        }
    }
}

/// A graph on which the predicate and the classifier disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub weights: Vec<u32>,
    pub saturating: bool,
    pub classified: Option<SatType>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassificationReport {
    pub total_graphs: u64,
    pub saturating: u64,
    pub per_type_counts: BTreeMap<SatType, u64>,
    /// Graphs matching several types, keyed by the full match list.
    pub overlaps: BTreeMap<Vec<SatType>, u64>,
    pub disagreement_count: u64,
    pub disagreements: Vec<Disagreement>,
}

impl ClassificationReport {
    /// Combines the reports of two shards, keeping at most `keep` recorded
    /// disagreements.
    pub fn merge(mut self, other: Self, keep: usize) -> Self {
        self.total_graphs += other.total_graphs;
        self.saturating += other.saturating;
        for (k, v) in other.per_type_counts {
            *self.per_type_counts.entry(k).or_default() += v;
        }
        for (k, v) in other.overlaps {
            *self.overlaps.entry(k).or_default() += v;
        }
        self.disagreement_count += other.disagreement_count;
        self.disagreements.extend(other.disagreements);
        self.disagreements.truncate(keep);
        self
    }

    /// Records one graph; returns whether predicate and classifier agree.
    pub fn record(&mut self, g: &WeightedGraph, t: u32, keep: usize) -> bool {
        self.total_graphs += 1;
        let saturating = g.is_t_saturating(t);
        let matches = classify_all(g, t);
        if saturating {
            self.saturating += 1;
        }
        if let Some(&first) = matches.first() {
            *self.per_type_counts.entry(first).or_default() += 1;
        }
        if matches.len() > 1 {
            *self.overlaps.entry(matches.clone()).or_default() += 1;
        }
        let agree = saturating == !matches.is_empty();
        if !agree {
            self.disagreement_count += 1;
            if self.disagreements.len() < keep {
                self.disagreements.push(Disagreement {
                    n: g.n(),
                    edges: g.edges(),
                    weights: g.weights().to_vec(),
                    saturating,
                    classified: matches.first().copied(),
                });
            }
        }
        agree
    }
}

/// Sweeps the graph space in `opts`, comparing `is_t_saturating(g, t)` with
/// the classifier on every weighted graph. Runs in parallel; the report does
/// not depend on scheduling.
pub fn verify(opts: &VerifyOptions) -> ClassificationReport {
    let blocks = blocks(opts);
    let total: u64 = blocks.iter().map(|b| b.len()).sum();
    let range = opts.partition.range(total);
    let keep = opts.max_recorded;
    let chunk = 1 << 12;
    let starts: Vec<u64> = (range.start..range.end).step_by(chunk).collect();
    starts
        .into_par_iter()
        .map(|s| {
            let mut rep = ClassificationReport::default();
            let end = (s + chunk as u64).min(range.end);
            for k in s..end {
                if let Some(g) = graph_at(opts, &blocks, k) {
                    rep.record(&g, opts.t, keep);
                }
            }
            rep
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(ClassificationReport::default(), |a, b| a.merge(b, keep))
}

/// Compares predicate and classifier on `samples` uniformly random labeled
/// simple graphs on `n` vertices. Sample `k` is drawn from its own ChaCha
/// stream keyed by `seed`, so any partition of the sample range reproduces
/// the same graphs.
pub fn verify_sampled(t: u32, n: usize, samples: u64, seed: u64, partition: Partition) -> ClassificationReport {
    assert!(pair_count(n) <= 64, "sampling supports up to 11 vertices");
    let keep = 100;
    let range = partition.range(samples);
    let chunk = 1u64 << 12;
    let starts: Vec<u64> = (range.start..range.end).step_by(chunk as usize).collect();
    starts
        .into_par_iter()
        .map(|s| {
            let mut rep = ClassificationReport::default();
            for k in s..(s + chunk).min(range.end) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(k);
                let bits = pair_count(n);
                let mask = if bits == 64 {
                    rng.next_u64()
                } else {
                    rng.next_u64() & ((1u64 << bits) - 1)
                };
                rep.record(&labeled_graph(n, mask), t, keep);
            }
            rep
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(ClassificationReport::default(), |a, b| a.merge(b, keep))
}

/// `verify` over labeled graphs with the given parameters.
pub fn verify_classification(t: u32, n_max: usize, weight_cap: u32) -> ClassificationReport {
    verify(&VerifyOptions::new(t, n_max, weight_cap))
}

struct Block {
    n: usize,
    graphs: u64,
    weightings: u64,
}

impl Block {
    fn len(&self) -> u64 {
        self.graphs * self.weightings
    }
}

fn blocks(opts: &VerifyOptions) -> Vec<Block> {
    (1..=opts.n_max)
        .map(|n| Block {
            n,
            graphs: match opts.space {
                GraphSpace::Labeled => 1u64 << pair_count(n),
                GraphSpace::Unlabeled => nonisomorphic_graphs(n).len() as u64,
            },
            weightings: (opts.weight_cap as u64).pow(n as u32),
        })
        .collect()
}

// The `k`-th weighted graph of the sweep, or `None` if its weighting is
// over the total-weight bound.
fn graph_at(opts: &VerifyOptions, blocks: &[Block], mut k: u64) -> Option<WeightedGraph> {
    for b in blocks {
        if k >= b.len() {
            k -= b.len();
            continue;
        }
        let (gi, mut wi) = (k / b.weightings, k % b.weightings);
        let mut weights = vec![1u32; b.n];
        for w in weights.iter_mut().rev() {
            *w = 1 + (wi % opts.weight_cap as u64) as u32;
            wi /= opts.weight_cap as u64;
        }
        let total: u64 = weights.iter().map(|&w| w as u64).sum();
        if opts.max_total_weight.is_some_and(|m| total > m) {
            return None;
        }
        let adj = match opts.space {
            GraphSpace::Labeled => labeled_graph(b.n, gi).adjacency_masks().to_vec(),
            GraphSpace::Unlabeled => nonisomorphic_graphs(b.n)[gi as usize].adjacency_masks().to_vec(),
        };
        return Some(WeightedGraph::from_parts(adj, weights));
    }
    unreachable!("index inside the sweep")
}
