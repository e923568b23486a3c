//! End-to-end verification runs. Each run recomputes one family of claims
//! from scratch and records every check it makes; the CLI `verify` command
//! and the acceptance test target both drive these.

pub mod oracle;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::families::{matching_graph, petersen as petersen_graph, shaebani_graph, shaebani_tree, FamilyParams};
use crate::graph::{enumerate_matchings, make_graph, Edge, LabeledGraph};
use crate::homcert::certified_chi;
use crate::kneser::{build_matching_kneser, kneser_graph};
use crate::report::{gap_report, sequence_report, SolveOptions, Verdict};
use crate::solvers::{chromatic_number, lovasz_chi, LowerBound};
use crate::subsets::binomial;
use crate::turan::{generalized_turan, min_deletion_set, refute_smaller_deletions};

fn fmt_edges(edges: &[Edge]) -> String {
    let parts: Vec<String> = edges.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(" "))
}

/// Seed of the random graphs used by [`proposition_duality`].
pub const RANDOM_GRAPH_SEED: u64 = 0x6b6e_6573_6572;
pub const RANDOM_GRAPH_COUNT: usize = 200;

/// One instance on which both χ(G, rK₂) and |E| − ex(G, rK₂) are known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiSample {
    pub instance: String,
    pub chi: usize,
    pub removal_bound: usize,
}

/// Outcome of a verification run.
#[derive(Debug, Clone, Default)]
pub struct Run {
    pub checks: Vec<Check>,
    pub samples: Vec<ChiSample>,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub passed: bool,
    pub what: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "ok  " } else { "FAIL" };
        write!(f, "[{tag}] {}", self.what)
    }
}

impl Run {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn check(&mut self, passed: bool, what: impl Into<String>) -> bool {
        self.checks.push(Check {
            passed,
            what: what.into(),
        });
        passed
    }

    fn expect_eq<T: PartialEq + fmt::Debug>(&mut self, what: &str, got: T, want: T) -> bool {
        let passed = got == want;
        self.check(passed, format!("{what}: {got:?} (expected {want:?})"))
    }

    fn sample(&mut self, instance: impl Into<String>, chi: usize, removal_bound: usize) {
        self.samples.push(ChiSample {
            instance: instance.into(),
            chi,
            removal_bound,
        });
    }
}

/// The Petersen graph with r = 5: six perfect matchings, pairwise
/// intersecting, so `χ = 1`, while three deletions are needed and every
/// set of one or two edges is refuted explicitly.
pub fn petersen(opts: &SolveOptions) -> Result<Run> {
    let mut run = Run::default();
    let g = petersen_graph();
    let r = 5;

    run.expect_eq("Petersen |V|, |E|", (g.vertex_count(), g.edge_count()), (10, 15));
    run.check((0..10).all(|v| g.degree(v) == 3), "Petersen graph is 3-regular");
    run.expect_eq("perfect matchings", enumerate_matchings(&g, r).len(), 6);

    let kg = build_matching_kneser(&g, r, opts.kneser_cap)?;
    run.expect_eq("(P, 5K2) vertices, edges", (kg.vertex_count(), kg.edge_count()), (6, 0));
    let chi = chromatic_number(&kg.to_graph(), &mut opts.budget())?;
    run.expect_eq("chi(P, 5K2)", chi.k, 1);
    run.check(
        chi.lower_bound == LowerBound::Edgeless && chi.check(&kg.to_graph()).is_ok(),
        "chi certificate is an edgeless witness and checks",
    );

    let cert = min_deletion_set(&g, r, &mut opts.budget())?;
    run.expect_eq("minimum deletion size", (cert.size, cert.optimal), (3, true));
    run.check(cert.check(&g).is_ok(), format!("deleting {} leaves no 5-matching", fmt_edges(&cert.deleted)));
    match refute_smaller_deletions(&g, r, cert.size, &mut opts.budget())? {
        Ok(checked) => {
            run.expect_eq("smaller deletion sets refuted", checked, 120);
        }
        Err(set) => {
            run.check(false, format!("smaller deletion set {} destroys all 5-matchings", fmt_edges(&set)));
        }
    }

    let rep = gap_report("petersen", &g, r, opts)?;
    run.expect_eq("gap report (D, chi, gap)", (rep.removal_bound, rep.chi, rep.gap), (Some(3), Some(1), Some(2)));
    run.expect_eq("verdict", rep.verdict, Verdict::Violated);
    run.sample("petersen r=5", chi.k, cert.size);
    Ok(run)
}

/// χ(K(l, r)) = l − 2r + 2 for r ≤ 3 and 2r − 1 ≤ l ≤ 8, by exact search.
/// For each pair the disjoint-edge host lK₂ also gets its deletion number
/// checked against l − r + 1.
pub fn lovasz(opts: &SolveOptions) -> Result<Run> {
    let mut run = Run::default();
    for r in 1..=3 {
        for l in 2 * r - 1..=8 {
            let g = kneser_graph(l, r)?;
            let cert = chromatic_number(&g, &mut opts.budget())?;
            let want = lovasz_chi(l, r)?;
            run.expect_eq(&format!("chi(K({l},{r}))"), cert.k, want);
            run.check(cert.check(&g).is_ok(), format!("K({l},{r}) certificate checks"));

            let host = matching_graph(l);
            let del = min_deletion_set(&host, r, &mut opts.budget())?;
            run.expect_eq(&format!("|E| - ex({l}K2, {r}K2)"), (del.size, del.optimal), (l - r + 1, true));
            run.sample(format!("{l}K2 r={r}"), cert.k, del.size);
        }
    }
    Ok(run)
}

pub const THEOREM_GRID: [(usize, usize, usize); 6] =
    [(3, 1, 1), (3, 2, 1), (3, 3, 1), (4, 1, 1), (4, 1, 2), (4, 2, 2)];

/// For each `(r, Θ, Γ)` of the grid: the construction has the closed-form
/// size, is connected and bipartite, χ(G, rK₂) = Θ via both homomorphisms,
/// and exactly Θ + Γ deletions are needed (smaller sets refuted
/// exhaustively).
pub fn theorem(opts: &SolveOptions) -> Result<Run> {
    let mut run = Run::default();
    for (r, theta, gamma) in THEOREM_GRID {
        let p = FamilyParams::new(r, theta, gamma)?;
        let tag = p.label();
        let g = shaebani_graph(&p);
        run.expect_eq(
            &format!("{tag}: |V|, |E|"),
            (g.vertex_count(), g.edge_count()),
            (2 * p.l() + p.t() + p.w_count(), p.l() + p.t() * (p.l() + p.w_count())),
        );
        run.check(g.is_connected() && g.is_bipartite(), format!("{tag}: connected and bipartite"));

        let cert = certified_chi(&p, opts.kneser_cap, &mut opts.budget())?;
        run.expect_eq(&format!("{tag}: certified chi"), cert.chi(), theta);
        run.check(
            true,
            format!(
                "{tag}: forward and backward homomorphisms verified over {} r-matchings ({})",
                cert.vertex_count,
                if cert.explicit { "explicit" } else { "implicit" }
            ),
        );

        let del = min_deletion_set(&g, r, &mut opts.budget())?;
        run.expect_eq(&format!("{tag}: minimum deletion"), (del.size, del.optimal), (theta + gamma, true));
        run.check(del.check(&g).is_ok(), format!("{tag}: deletion certificate checks"));
        match refute_smaller_deletions(&g, r, del.size, &mut opts.budget())? {
            Ok(checked) => {
                let expected: usize = (1..del.size).map(|s| binomial(g.edge_count(), s).unwrap_or(0)).sum();
                run.expect_eq(&format!("{tag}: smaller deletion sets refuted"), checked, expected);
            }
            Err(set) => {
                run.check(false, format!("{tag}: smaller deletion set {} suffices", fmt_edges(&set)));
            }
        }
        run.sample(tag, cert.chi(), del.size);
    }
    Ok(run)
}

/// Θ ∈ {1, 2}, r ∈ {3, 4}: the trees have radius 2 and report
/// `D = Θ + r − 2`, `χ = Θ`, verdict VIOLATED.
pub fn corollary(opts: &SolveOptions) -> Result<Run> {
    let mut run = Run::default();
    for theta in [1, 2] {
        for r in [3, 4] {
            let t = shaebani_tree(r, theta)?;
            let tag = format!("tree(r={r},theta={theta})");
            run.check(t.is_tree() && t.radius()? == 2, format!("{tag}: tree of radius 2"));
            let rep = sequence_report(theta, &[r], opts)?.remove(0);
            run.expect_eq(
                &format!("{tag}: (D, chi, verdict)"),
                (rep.removal_bound, rep.chi, rep.verdict),
                (Some(theta + r - 2), Some(theta), Verdict::Violated),
            );
            if let (Some(d), Some(c)) = (rep.removal_bound, rep.chi) {
                run.sample(tag, c, d);
            }
        }
    }
    Ok(run)
}

/// `RANDOM_GRAPH_COUNT` seeded random connected graphs on at most 8 vertices
/// and 12 edges, each with r = 2 and r = 3.
pub fn random_connected_graphs(seed: u64, count: usize) -> Vec<LabeledGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n: usize = rng.gen_range(2..=8);
            let mut pairs: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
            let m = rng.gen_range(n - 1..=(n * (n - 1) / 2).min(12));
            while pairs.len() < m {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                let (a, b) = (a.min(b), a.max(b));
                if a != b && !pairs.contains(&(a, b)) {
                    pairs.push((a, b));
                }
            }
            make_graph(n, &pairs).expect("generated pairs are valid")
        })
        .collect()
}

/// Duality against brute force: `ex` equals the largest spanning
/// subgraph without an r-matching, and `|E| − ex` the smallest deletion set.
/// χ(G, rK₂) is computed where the search finishes, for the bound check.
pub fn proposition_duality(opts: &SolveOptions) -> Result<Run> {
    let mut run = Run::default();
    let graphs = random_connected_graphs(RANDOM_GRAPH_SEED, RANDOM_GRAPH_COUNT);
    let mut agreed = 0;
    let mut total = 0;
    let well_formed = graphs
        .iter()
        .all(|g| g.is_connected() && g.vertex_count() <= 8 && g.edge_count() <= 12);
    run.check(well_formed, "random graphs are connected with n <= 8, |E| <= 12");
    for (i, g) in graphs.iter().enumerate() {
        for r in [2, 3] {
            total += 1;
            let ex = generalized_turan(g, r, &mut opts.budget())?;
            let brute_ex = oracle::max_free_subgraph(g, r);
            let brute_min = oracle::min_deletion_by_size(g, r);
            if ex == brute_ex && g.edge_count() - ex == brute_min {
                agreed += 1;
            } else {
                run.check(false, format!("graph #{i}, r={r}: ex {ex}, brute ex {brute_ex}, brute min deletion {brute_min}"));
            }
            if let Ok(kg) = build_matching_kneser(g, r, opts.kneser_cap) {
                if let Ok(c) = chromatic_number(&kg.to_graph(), &mut opts.budget()) {
                    run.sample(format!("random #{i} r={r}"), c.k, g.edge_count() - ex);
                }
            }
        }
    }
    run.expect_eq("instances agreeing with brute force", agreed, total);
    run.expect_eq("instances checked", total, 2 * RANDOM_GRAPH_COUNT);
    Ok(run)
}

/// χ ≤ |E| − ex on every sample.
pub fn conjectured_bound(samples: &[ChiSample]) -> Run {
    let mut run = Run::default();
    let bad: Vec<_> = samples.iter().filter(|s| s.chi > s.removal_bound).collect();
    for s in &bad {
        run.check(false, format!("{}: chi {} > D {}", s.instance, s.chi, s.removal_bound));
    }
    run.check(
        bad.is_empty() && !samples.is_empty(),
        format!("chi <= |E| - ex on all {} instances", samples.len()),
    );
    run
}

/// Θ = 1, r = 3, 4, 5: the gap D − χ equals r − 2 and strictly increases.
pub fn growth(opts: &SolveOptions) -> Result<Run> {
    let mut run = Run::default();
    let rs = [3, 4, 5];
    let reps = sequence_report(1, &rs, opts)?;
    for (rep, r) in reps.iter().zip(rs) {
        run.expect_eq(&format!("tree r={r}: D"), rep.removal_bound, Some(1 + r - 2));
        run.expect_eq(&format!("tree r={r}: chi"), rep.chi, Some(1));
        run.check(rep.deletion.optimal, format!("tree r={r}: ex confirmed exactly"));
        run.check(
            rep.predicted.as_ref().is_some_and(|p| p.matches),
            format!("tree r={r}: closed-form prediction matches"),
        );
    }
    let gaps: Vec<Option<i64>> = reps.iter().map(|r| r.gap).collect();
    run.expect_eq("gaps", gaps.clone(), vec![Some(1), Some(2), Some(3)]);
    run.check(gaps.windows(2).all(|w| w[0] < w[1]), "gaps strictly increase");
    Ok(run)
}
