//! Acceptance gate. Each criterion prints one PASS/FAIL line; the binary
//! exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use edgesat::associated_primes::{ass_primes_oracle, oracle_diff};
use edgesat::canon::{canonical_form, connected_graphs, labeled_graph, nonisomorphic_graphs, pair_count};
use edgesat::classification::derive::{twin_classes, weighted_templates};
use edgesat::classification::{
    type_specs, verify, verify_classification, verify_sampled, GraphSpace, Table, VerifyOptions,
};
use edgesat::edge_ideal::{
    in_power, in_saturation, in_saturation_oracle, is_sat4_member, AmbientGraph, ExponentVector,
};
use edgesat::partition::Partition;
use edgesat::{DeletionReading, VertexSet, WeightedGraph};
use rayon::prelude::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn weightings(n: usize, cap: u32) -> impl Iterator<Item = Vec<u32>> {
    edgesat::canon::bounded_vectors(n, 1, cap)
}

fn with_weights(g: &WeightedGraph, w: &[u32]) -> WeightedGraph {
    g.with_weights(w).expect("positive weights")
}

fn weighted_paw() -> WeightedGraph {
    WeightedGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)], &[1, 1, 2, 1]).unwrap()
}

fn criterion_1() -> Outcome {
    let g = weighted_paw();
    let nu = g.matching_number();
    let degrees: Vec<u64> = (0..4).map(|v| g.weighted_degree(v).unwrap()).collect();
    let expected = [false, true, true];
    let mut lines = Vec::new();
    let mut any = false;
    for (name, reading) in [
        ("definition", DeletionReading::Neighborhood),
        ("vertex-only", DeletionReading::VertexOnly),
    ] {
        let got: Vec<bool> = (2..=4).map(|t| g.is_t_saturating_with(t, reading)).collect();
        any |= got == expected;
        lines.push(format!("{name} t=2..4 {got:?}"));
    }
    let pass = nu == 2 && degrees == [3, 3, 3, 2] && any;
    outcome(pass, format!("nu={nu} degrees={degrees:?}; {}", lines.join("; ")))
}

fn criterion_2() -> Outcome {
    let k5 = canonical_form(&labeled_graph(5, (1 << pair_count(5)) - 1));
    let mut found = Vec::new();
    for mask in 0..1u64 << pair_count(5) {
        let g = labeled_graph(5, mask);
        if g.matching_number() < 3 && g.is_t_saturating(4) {
            found.push(canonical_form(&g));
        }
    }
    let pass = found == vec![k5];
    outcome(
        pass,
        format!(
            "{} labeled graphs with nu<3 are 4-saturating, all K5: {pass}",
            found.len()
        ),
    )
}

fn criterion_3() -> Outcome {
    let rep = verify_classification(4, 7, 1);
    let s8 = verify_sampled(4, 8, 1_000_000, 8, Partition::WHOLE);
    let s9 = verify_sampled(4, 9, 1_000_000, 9, Partition::WHOLE);
    let pass = rep.disagreement_count == 0
        && rep.total_graphs == (1..=7).map(|n| 1u64 << pair_count(n)).sum::<u64>()
        && s8.disagreement_count == 0
        && s9.disagreement_count == 0;
    outcome(
        pass,
        format!(
            "labeled n<=7: {} graphs, {} 4-saturating, {} disagreements; sampled n=8: {} graphs, {} disagreements; n=9: {} graphs, {} disagreements",
            rep.total_graphs,
            rep.saturating,
            rep.disagreement_count,
            s8.total_graphs,
            s8.disagreement_count,
            s9.total_graphs,
            s9.disagreement_count
        ),
    )
}

fn criterion_4() -> Outcome {
    let derived: BTreeSet<_> = weighted_templates().iter().map(canonical_form).collect();
    let table: BTreeSet<_> = type_specs()
        .iter()
        .filter(|s| s.ty.table == Table::T3)
        .flat_map(|s| s.patterns.iter().map(|p| canonical_form(p.graph())))
        .collect();
    let mut opts = VerifyOptions::new(4, 8, 4);
    opts.space = GraphSpace::Unlabeled;
    opts.max_total_weight = Some(9);
    let rep = verify(&opts);
    let weighted: u64 = rep
        .per_type_counts
        .iter()
        .filter(|(ty, _)| ty.table == Table::T3)
        .map(|(_, c)| c)
        .sum();
    let pass = derived == table && rep.disagreement_count == 0;
    outcome(
        pass,
        format!(
            "{} derived templates match the table: {}; {} weighted graphs (n<=8, weights<=4, total<=9), {} 4-saturating ({} weighted), {} disagreements",
            derived.len(),
            derived == table,
            rep.total_graphs,
            rep.saturating,
            weighted,
            rep.disagreement_count
        ),
    )
}

fn criterion_5() -> Outcome {
    let violations: u64 = (1..=5)
        .flat_map(|n| (0..1u64 << pair_count(n)).map(move |m| (n, m)))
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&(n, mask)| {
            let base = labeled_graph(n, mask);
            let mut bad = 0u64;
            for w in weightings(n, 3) {
                let g = with_weights(&base, &w);
                let nu = g.matching_number();
                let p = g.polarize().unwrap().graph;
                if p.matching_number() != nu {
                    bad += 1;
                }
                for t in 1..=5 {
                    if g.is_t_saturating(t) != p.is_t_saturating(t) {
                        bad += 1;
                    }
                }
                for class in twin_classes(&g).into_iter().filter(|c| c.len() > 1) {
                    for bits in 1..1u64 << class.len() {
                        let group: VertexSet = class
                            .iter()
                            .enumerate()
                            .filter(|(k, _)| bits >> k & 1 == 1)
                            .map(|(_, v)| v)
                            .collect();
                        let c = g.collapse(group).unwrap();
                        if c.matching_number() != nu {
                            bad += 1;
                        }
                        if (1..=5).any(|t| c.is_t_saturating(t) != g.is_t_saturating(t)) {
                            bad += 1;
                        }
                    }
                }
            }
            bad
        })
        .sum();
    outcome(
        violations == 0,
        format!("{violations} violations over all labeled graphs n<=5, weights<=3"),
    )
}

fn exponent_vectors(n: usize, cap: u32) -> Vec<ExponentVector> {
    edgesat::canon::bounded_vectors(n, 0, cap)
        .map(ExponentVector::new)
        .collect()
}

fn criterion_6() -> Outcome {
    let cases: Vec<(usize, u64)> = (1..=5)
        .flat_map(|n| (0..1u64 << pair_count(n)).map(move |m| (n, m)))
        .collect();
    let (checked, bad): (u64, u64) = cases
        .par_iter()
        .map(|&(n, mask)| {
            let gamma = AmbientGraph::new(labeled_graph(n, mask)).unwrap();
            let mut checked = 0;
            let mut bad = 0;
            for a in exponent_vectors(n, 3) {
                for t in 2..=4 {
                    checked += 1;
                    if in_saturation(&gamma, &a, t) != in_saturation_oracle(&gamma, &a, t) {
                        bad += 1;
                    }
                }
            }
            (checked, bad)
        })
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
    outcome(
        bad == 0,
        format!("{checked} (graph, a, t) cases over labeled n<=5, {bad} disagreements"),
    )
}

fn criterion_7() -> Outcome {
    let graphs: Vec<&WeightedGraph> = (1..=7).flat_map(|n| nonisomorphic_graphs(n).iter()).collect();
    let (checked, members, bad): (u64, u64, u64) = graphs
        .par_iter()
        .map(|g| {
            let gamma = AmbientGraph::new((*g).clone()).unwrap();
            let (mut checked, mut members, mut bad) = (0, 0, 0);
            for a in exponent_vectors(g.n(), 3) {
                if !(5..=9).contains(&a.degree()) {
                    continue;
                }
                checked += 1;
                let by_theorem = is_sat4_member(&gamma, &a).is_some();
                let by_matching = in_saturation(&gamma, &a, 4) && !in_power(&gamma, &a, 4);
                members += by_matching as u64;
                bad += (by_theorem != by_matching) as u64;
            }
            (checked, members, bad)
        })
        .reduce(|| (0, 0, 0), |x, y| (x.0 + y.0, x.1 + y.1, x.2 + y.2));
    outcome(
        bad == 0,
        format!(
            "{checked} (graph, a) cases over all {} graphs n<=7, {members} members of sat(I^4)\\I^4, {bad} disagreements",
            graphs.len()
        ),
    )
}

fn criterion_8() -> Outcome {
    let rep = oracle_diff(4, 6, 8, Partition::WHOLE);
    let depth = rep.disagreements.iter().filter(|d| d.depth_only).count();
    outcome(
        rep.disagreement_count == 0,
        format!(
            "{} connected graphs n<=6, {} disagreements ({depth} depth-only)",
            rep.graphs, rep.disagreement_count
        ),
    )
}

fn has_dominating_triangle(gamma: &AmbientGraph) -> bool {
    let n = gamma.n();
    (0..n).any(|a| {
        (a + 1..n).any(|b| {
            (b + 1..n).any(|c| {
                let g = gamma.graph();
                g.has_edge(a, b)
                    && g.has_edge(b, c)
                    && g.has_edge(a, c)
                    && gamma.closed_neighborhood([a, b, c].into_iter().collect()) == gamma.vertices()
            })
        })
    })
}

fn criterion_9() -> Outcome {
    let graphs: Vec<WeightedGraph> = (2..=6).flat_map(connected_graphs).collect();
    let bad: usize = graphs
        .par_iter()
        .filter(|g| {
            let gamma = AmbientGraph::new((*g).clone()).unwrap();
            let oracle = ass_primes_oracle(&gamma, 2, 6).unwrap();
            let full = oracle.iter().any(|c| c.vertices() == gamma.vertices());
            full != has_dominating_triangle(&gamma)
        })
        .count();
    outcome(
        bad == 0,
        format!("{} connected graphs n<=6, {bad} disagreements", graphs.len()),
    )
}

fn run_cli(args: &[&str], input: &str) -> (i32, Vec<u8>) {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_edgesat"))
        .args(args)
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .expect("spawn edgesat");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn criterion_10() -> Outcome {
    let fig1 = "p 4\ne 1 2\ne 2 3\ne 1 3\ne 3 4\nw 1 1 2 1\n";
    let k4_triangle = "p 7\ne 1 2\ne 2 3\ne 1 3\ne 4 5\ne 4 6\ne 4 7\ne 5 6\ne 5 7\ne 6 7\n";
    let bowtie = "p 5\ne 1 2\ne 1 3\ne 2 3\ne 3 4\ne 3 5\ne 4 5\n";
    let runs: Vec<(Vec<&str>, &str)> = vec![
        (vec!["saturating", "--t", "3"], fig1),
        (vec!["saturating", "--t", "4", "--reading", "vertex-only"], fig1),
        (vec!["classify", "--t", "4"], k4_triangle),
        (vec!["classify", "--t", "3"], fig1),
        (vec!["sat-members", "--t", "4"], bowtie),
        (
            vec!["sat-members", "--t", "3", "--cap", "2", "--partition", "2/3"],
            bowtie,
        ),
        (vec!["ass-primes", "--t", "4"], k4_triangle),
        (vec!["ass-primes", "--t", "2"], bowtie),
        (vec!["depth4"], k4_triangle),
        (vec!["verify", "--t", "4", "--nmax", "5"], ""),
        (
            vec!["verify", "--t", "4", "--nmax", "8", "--samples", "2000", "--seed", "11"],
            "",
        ),
        (vec!["oracle-diff", "--t", "4", "--nmax", "4"], ""),
    ];
    let mut failures = Vec::new();
    for (args, input) in &runs {
        let first = run_cli(args, input);
        let second = run_cli(args, input);
        if first != second || first.0 != 0 || first.1.is_empty() {
            failures.push(format!("{args:?} exit {}", first.0));
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{} commands run twice, {} not byte-identical or failed {failures:?}",
            runs.len(),
            failures.len()
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 weighted paw", criterion_1, Duration::from_secs(1)),
        ("2 nu<3 gives K5", criterion_2, Duration::from_secs(10)),
        (
            "3 simple 4-saturating classification",
            criterion_3,
            Duration::from_secs(600),
        ),
        (
            "4 weighted 4-saturating classification",
            criterion_4,
            Duration::from_secs(3600),
        ),
        (
            "5 polarization and collapse invariance",
            criterion_5,
            Duration::from_secs(3600),
        ),
        (
            "6 saturation criterion vs colon oracle",
            criterion_6,
            Duration::from_secs(300),
        ),
        (
            "7 degree-four saturation trichotomy",
            criterion_7,
            Duration::from_secs(3600),
        ),
        (
            "8 associated primes of I^4 and depth",
            criterion_8,
            Duration::from_secs(1800),
        ),
        ("9 dominating triangles for I^2", criterion_9, Duration::from_secs(3600)),
        ("10 CLI determinism", criterion_10, Duration::from_secs(3600)),
    ];
    let mut failed = 0;
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let out = check();
        let elapsed = start.elapsed();
        let pass = out.pass && elapsed <= budget;
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {name}: {} ({:.2?}, budget {:?}) {}",
            if pass { "PASS" } else { "FAIL" },
            elapsed,
            budget,
            out.detail
        );
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
