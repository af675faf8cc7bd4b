use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use edgesat::associated_primes::{ass_primes, ass_primes_4, depth4_positive, oracle_diff, AssReport, Cover};
use edgesat::classification::{classify_all, verify, verify_sampled, ClassificationReport, GraphSpace, VerifyOptions};
use edgesat::edge_ideal::{exponent_at, exponent_space_size, in_power, in_saturation, is_sat4_member, AmbientGraph};
use edgesat::partition::Partition;
use edgesat::{DeletionReading, VertexSet, WeightedGraph};
use serde_json::{json, Value};

use crate::document::parse_graph;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_DISAGREEMENT: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "edgesat",
    version,
    about = "Saturation and associated primes of powers of edge ideals"
)]
pub struct Cli {
    /// Read the graph from this file instead of standard input.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Reading {
    /// Delete the neighborhood of each vertex.
    Definition,
    /// Delete only the vertex itself.
    VertexOnly,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test whether a weighted graph is t-saturating.
    Saturating {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
        #[arg(long, value_enum, default_value_t = Reading::Definition)]
        reading: Reading,
    },
    /// Name the 3- or 4-saturating type of a weighted graph.
    Classify {
        #[arg(long)]
        t: u32,
    },
    /// List x^a in sat(I^t) \ I^t with every exponent at most the cap.
    SatMembers {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
        /// Largest exponent; defaults to t.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        cap: Option<u32>,
        #[arg(long, default_value_t = Partition::WHOLE)]
        partition: Partition,
    },
    /// Associated primes of I^t as vertex covers.
    AssPrimes {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
    },
    /// Whether depth R/I^4 is positive.
    Depth4,
    /// Check the type tables against the saturating predicate.
    Verify {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        weight_cap: u32,
        /// Skip weightings with a larger total.
        #[arg(long)]
        max_total: Option<u64>,
        /// Sweep one graph per isomorphism class instead of labeled graphs.
        #[arg(long)]
        unlabeled: bool,
        /// Check this many random labeled graphs on exactly nmax vertices
        /// instead of sweeping.
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = Partition::WHOLE)]
        partition: Partition,
    },
    /// Compare associated primes from the theorems with the colon oracle on
    /// all connected graphs up to nmax vertices.
    OracleDiff {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
        #[arg(long)]
        nmax: usize,
        /// Largest exponent tried by the oracle; defaults to 2t.
        #[arg(long)]
        cap: Option<u32>,
        #[arg(long, default_value_t = Partition::WHOLE)]
        partition: Partition,
    },
}

impl Command {
    pub fn reads_graph(&self) -> bool {
        !matches!(self, Command::Verify { .. } | Command::OracleDiff { .. })
    }
}

/// Exit code and text produced by one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn report(code: i32, v: Value) -> Self {
        let mut stdout = serde_json::to_string_pretty(&v).expect("json values serialize");
        stdout.push('\n');
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn domain(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_DOMAIN,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

fn verdict(disagreements: u64) -> i32 {
    if disagreements == 0 {
        EXIT_OK
    } else {
        EXIT_DISAGREEMENT
    }
}

fn one_based(s: VertexSet) -> Vec<usize> {
    s.iter().map(|v| v + 1).collect()
}

fn edges_json(edges: &[(usize, usize)]) -> Value {
    json!(edges.iter().map(|&(u, v)| [u + 1, v + 1]).collect::<Vec<_>>())
}

/// Runs `command` on the graph text `input` (ignored by commands that do
/// not read a graph).
pub fn run(command: &Command, input: &str) -> Outcome {
    let graph = if command.reads_graph() {
        let doc = match parse_graph(input) {
            Ok(d) => d,
            Err(e) => return Outcome::domain(e),
        };
        match doc.to_graph() {
            Ok(g) => Some(g),
            Err(e) => return Outcome::domain(e),
        }
    } else {
        None
    };
    let ambient = || -> Result<AmbientGraph, Outcome> {
        AmbientGraph::new(graph.clone().expect("graph read")).map_err(Outcome::domain)
    };

    match *command {
        Command::Saturating { t, reading } => saturating(graph.as_ref().expect("graph read"), t, reading),
        Command::Classify { t } => classify(graph.as_ref().expect("graph read"), t),
        Command::SatMembers { t, cap, partition } => match ambient() {
            Ok(g) => sat_members(&g, t, cap.unwrap_or(t), partition),
            Err(o) => o,
        },
        Command::AssPrimes { t } => match ambient() {
            Ok(g) => ass(&g, t),
            Err(o) => o,
        },
        Command::Depth4 => match ambient() {
            Ok(g) => depth4(&g),
            Err(o) => o,
        },
        Command::Verify {
            t,
            nmax,
            weight_cap,
            max_total,
            unlabeled,
            samples,
            seed,
            partition,
        } => {
            if t != 3 && t != 4 {
                return Outcome::domain(format!("types are tabulated for t = 3 and t = 4, not {t}"));
            }
            if let Some(samples) = samples {
                if !(1..=11).contains(&nmax) {
                    return Outcome::domain("sampling supports 1 to 11 vertices");
                }
                let rep = verify_sampled(t, nmax, samples, seed, partition);
                let params =
                    json!({"t": t, "n": nmax, "samples": samples, "seed": seed, "partition": partition.to_string()});
                return Outcome::report(verdict(rep.disagreement_count), classification_json(params, &rep));
            }
            let limit = if unlabeled {
                edgesat::canon::ENUMERATION_LIMIT
            } else {
                8
            };
            if nmax > limit {
                return Outcome::domain(format!("exhaustive sweeps support up to {limit} vertices"));
            }
            let opts = VerifyOptions {
                t,
                n_max: nmax,
                weight_cap,
                max_total_weight: max_total,
                space: if unlabeled {
                    GraphSpace::Unlabeled
                } else {
                    GraphSpace::Labeled
                },
                partition,
                max_recorded: 100,
            };
            let rep = verify(&opts);
            let params = json!({
                "t": t,
                "nmax": nmax,
                "weight_cap": weight_cap,
                "max_total": max_total,
                "space": if unlabeled { "unlabeled" } else { "labeled" },
                "partition": partition.to_string(),
            });
            Outcome::report(verdict(rep.disagreement_count), classification_json(params, &rep))
        }
        Command::OracleDiff {
            t,
            nmax,
            cap,
            partition,
        } => {
            if nmax > edgesat::canon::ENUMERATION_LIMIT {
                return Outcome::domain(format!(
                    "graph enumeration supports up to {} vertices",
                    edgesat::canon::ENUMERATION_LIMIT
                ));
            }
            let cap = cap.unwrap_or(2 * t);
            let rep = oracle_diff(t, nmax, cap, partition);
            let examples: Vec<Value> = rep
                .disagreements
                .iter()
                .take(10)
                .map(|m| {
                    json!({
                        "n": m.n,
                        "edges": edges_json(&m.edges),
                        "oracle": covers_json(&m.expected),
                        "theorem": covers_json(&m.got),
                        "depth_only": m.depth_only,
                    })
                })
                .collect();
            Outcome::report(
                verdict(rep.disagreement_count),
                json!({
                    "parameters": {"t": t, "nmax": nmax, "cap": cap, "partition": partition.to_string()},
                    "graphs": rep.graphs,
                    "disagreements": rep.disagreement_count,
                    "examples": examples,
                }),
            )
        }
    }
}

fn saturating(g: &WeightedGraph, t: u32, reading: Reading) -> Outcome {
    let reading_core = match reading {
        Reading::Definition => DeletionReading::Neighborhood,
        Reading::VertexOnly => DeletionReading::VertexOnly,
    };
    let vertices: Vec<Value> = (0..g.n())
        .map(|i| {
            let deleted = match reading {
                Reading::Definition => g.adjacency(i),
                Reading::VertexOnly => VertexSet::singleton(i),
            };
            let deg = g.weighted_degree(i).expect("vertex in range");
            json!({
                "vertex": i + 1,
                "weighted_degree": deg,
                "residual_matching_number": g.delete_vertices(deleted).matching_number(),
                "required": (t as i64 - deg as i64).max(0),
            })
        })
        .collect();
    Outcome::report(
        EXIT_OK,
        json!({
            "t": t,
            "reading": match reading { Reading::Definition => "definition", Reading::VertexOnly => "vertex-only" },
            "matching_number": g.matching_number(),
            "saturating": g.is_t_saturating_with(t, reading_core),
            "vertices": vertices,
        }),
    )
}

fn classify(g: &WeightedGraph, t: u32) -> Outcome {
    if t != 3 && t != 4 {
        return Outcome::domain(format!("types are tabulated for t = 3 and t = 4, not {t}"));
    }
    let matches = classify_all(g, t);
    let saturating = g.is_t_saturating(t);
    let first = matches.first();
    let code = if saturating == first.is_some() {
        EXIT_OK
    } else {
        EXIT_DISAGREEMENT
    };
    Outcome::report(
        code,
        json!({
            "t": t,
            "type": first.map(|ty| ty.to_string()),
            "name": first.map(|ty| ty.name()),
            "description": first.map(|ty| ty.description()),
            "matches": matches.iter().map(|ty| ty.to_string()).collect::<Vec<_>>(),
            "saturating": saturating,
        }),
    )
}

fn sat_members(g: &AmbientGraph, t: u32, cap: u32, partition: Partition) -> Outcome {
    let n = g.n();
    let mut witnesses = Vec::new();
    let mut disagreements = 0u64;
    for k in partition.range(exponent_space_size(n, cap)) {
        let a = exponent_at(n, cap, k);
        let member = !in_power(g, &a, t) && in_saturation(g, &a, t);
        let case = if t == 4 { is_sat4_member(g, &a) } else { None };
        if t == 4 && case.is_some() != member {
            disagreements += 1;
        }
        if member {
            let mut w = json!({"exponents": a.as_slice(), "degree": a.degree()});
            if let Some(c) = case {
                w["case"] = json!(format!("{c:?}"));
            }
            witnesses.push(w);
        }
    }
    let mut out = json!({
        "t": t,
        "cap": cap,
        "partition": partition.to_string(),
        "count": witnesses.len(),
        "witnesses": witnesses,
    });
    if t == 4 {
        out["disagreements"] = json!(disagreements);
    }
    Outcome::report(verdict(disagreements), out)
}

fn covers_json(covers: &[Cover]) -> Value {
    json!(covers.iter().map(|c| one_based(c.vertices())).collect::<Vec<_>>())
}

fn ass_json(g: &AmbientGraph, rep: &AssReport) -> Value {
    let embedded: Vec<Value> = rep
        .embedded
        .iter()
        .map(|e| {
            json!({
                "cover": one_based(e.cover.vertices()),
                "witness": e.witness.as_slice(),
                "pattern_id": e.pattern_id,
            })
        })
        .collect();
    json!({
        "graph": {"n": g.n(), "edges": edges_json(&g.graph().edges())},
        "minimal": covers_json(&rep.minimal),
        "embedded": embedded,
    })
}

fn ass(g: &AmbientGraph, t: u32) -> Outcome {
    let rep = if t == 4 { ass_primes_4(g) } else { ass_primes(g, t) };
    match rep {
        Ok(rep) => {
            let mut out = ass_json(g, &rep);
            out["t"] = json!(t);
            Outcome::report(EXIT_OK, out)
        }
        Err(e) => Outcome::domain(e),
    }
}

fn depth4(g: &AmbientGraph) -> Outcome {
    let positive = match depth4_positive(g) {
        Ok(p) => p,
        Err(e) => return Outcome::domain(e),
    };
    let via_primes = match ass_primes_4(g) {
        Ok(rep) => !rep.contains(g.vertices()),
        Err(e) => return Outcome::domain(e),
    };
    let mut out = json!({"depth4_positive": positive});
    if positive != via_primes {
        out["disagreement"] = json!(true);
        return Outcome::report(EXIT_DISAGREEMENT, out);
    }
    Outcome::report(EXIT_OK, out)
}

fn classification_json(params: Value, rep: &ClassificationReport) -> Value {
    let per_type: serde_json::Map<String, Value> = rep
        .per_type_counts
        .iter()
        .map(|(ty, c)| (ty.to_string(), json!(c)))
        .collect();
    let overlaps: serde_json::Map<String, Value> = rep
        .overlaps
        .iter()
        .map(|(tys, c)| {
            let key: Vec<String> = tys.iter().map(|t| t.to_string()).collect();
            (key.join("+"), json!(c))
        })
        .collect();
    let disagreements: Vec<Value> = rep
        .disagreements
        .iter()
        .map(|d| {
            json!({
                "n": d.n,
                "edges": edges_json(&d.edges),
                "weights": d.weights,
                "saturating": d.saturating,
                "classified": d.classified.map(|t| t.to_string()),
            })
        })
        .collect();
    json!({
        "parameters": params,
        "total_graphs": rep.total_graphs,
        "saturating_graphs": rep.saturating,
        "per_type_counts": per_type,
        "overlaps": overlaps,
        "disagreement_count": rep.disagreement_count,
        "disagreements": disagreements,
    })
}
