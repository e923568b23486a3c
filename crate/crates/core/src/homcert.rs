//! The two homomorphisms between `(G, rK₂)` and `K(l, r − t)` for the family
//! graphs, and the certificate `χ(G, rK₂) = Θ` assembled from them.
//!
//! Forward, an r-matching goes to the `r − t` smallest indices `i` with
//! xᵢyᵢ in the matching. Backward, a subset `S` of colex rank `ρ` goes to
//! `{xᵢyᵢ : i ∈ S}` plus the t-matching `{w_{(ρ−1)t+j} z_j : j = 1..t}`, so
//! distinct subsets get w-blocks that never share an edge.

use std::fmt;
use std::fmt::Write as _;
use std::ops::ControlFlow;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::families::{shaebani_graph, FamilyParams};
use crate::graph::{count_matchings_up_to, enumerate_matchings, Adjacency, Matching, VertexId};
use crate::kneser::{build_matching_kneser, kneser_graph, too_many_matchings, ImplicitKneser};
use crate::solvers::{chromatic_number, colors_used, lovasz_chi, ChiCertificate, LowerBound};
use crate::subsets::{check_subset, colex_rank, format_subset, subsets_colex};

/// What a vertex of a witness graph stands for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexDesc {
    Matching(Matching),
    Subset(Vec<usize>),
}

impl fmt::Display for VertexDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexDesc::Matching(m) => write!(f, "{m}"),
            VertexDesc::Subset(s) => f.write_str(&format_subset(s)),
        }
    }
}

/// An explicit vertex map between two graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomWitness {
    pub source: Vec<VertexDesc>,
    pub target: Vec<VertexDesc>,
    pub map: Vec<usize>,
}

/// Why a vertex map fails to be a homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomViolation {
    NotTotal { mapped: usize, vertices: usize },
    OutOfRange { vertex: VertexId, image: usize },
    /// The lowest source edge whose image is not an edge.
    EdgeNotPreserved { u: VertexId, v: VertexId },
}

impl fmt::Display for HomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomViolation::NotTotal { mapped, vertices } => {
                write!(f, "map covers {mapped} of {vertices} source vertices")
            }
            HomViolation::OutOfRange { vertex, image } => {
                write!(f, "vertex {vertex} maps to nonexistent target {image}")
            }
            HomViolation::EdgeNotPreserved { u, v } => {
                write!(f, "source edge ({u},{v}) is not mapped to a target edge")
            }
        }
    }
}

/// Checks every source edge; no sampling.
pub fn verify_homomorphism<S, T>(
    map: &[usize],
    source: &S,
    target: &T,
) -> std::result::Result<(), HomViolation>
where
    S: Adjacency,
    T: Adjacency,
{
    check_shape(map, source, target)?;
    match source.for_each_edge(|u, v| {
        if target.adjacent(map[u], map[v]) {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break((u, v))
        }
    }) {
        ControlFlow::Continue(()) => Ok(()),
        ControlFlow::Break((u, v)) => Err(HomViolation::EdgeNotPreserved { u, v }),
    }
}

fn check_shape<S: Adjacency, T: Adjacency>(
    map: &[usize],
    source: &S,
    target: &T,
) -> std::result::Result<(), HomViolation> {
    if map.len() != source.order() {
        return Err(HomViolation::NotTotal {
            mapped: map.len(),
            vertices: source.order(),
        });
    }
    if let Some((vertex, &image)) = map.iter().enumerate().find(|(_, t)| **t >= target.order()) {
        return Err(HomViolation::OutOfRange { vertex, image });
    }
    Ok(())
}

/// The `r − t` smallest indices `i` with xᵢyᵢ in `m`.
pub fn forward_map(m: &Matching, p: &FamilyParams) -> Result<Vec<usize>> {
    let mut indices: Vec<usize> = m.edges().iter().filter_map(|e| p.xy_index(e)).collect();
    indices.sort_unstable();
    let need = p.subset_size();
    if indices.len() < need {
        return Err(Error::Internal(format!(
            "matching {m} has {} xy-edges, at least {need} expected",
            indices.len()
        )));
    }
    indices.truncate(need);
    Ok(indices)
}

/// `{xᵢyᵢ : i ∈ S}` together with the w/z block for the colex rank of `S`.
pub fn backward_map(subset: &[usize], p: &FamilyParams) -> Result<Matching> {
    check_subset(subset, p.l(), p.subset_size())?;
    let rank = colex_rank(subset);
    let mut edges: Vec<_> = subset.iter().map(|&i| p.xy_edge(i)).collect();
    edges.extend((1..=p.t()).map(|j| p.wz_edge((rank - 1) * p.t() + j, j)));
    edges.sort_unstable();
    Ok(Matching::from_sorted(edges))
}

/// Writes one line `src -> tgt # src_desc | tgt_desc` per source vertex.
pub fn write_hom_witness(w: &HomWitness) -> String {
    let mut out = String::from("# subset ranking: colex, 1-based elements\n");
    for (src, &tgt) in w.map.iter().enumerate() {
        let _ = writeln!(out, "{src} -> {tgt} # {} | {}", w.source[src], w.target[tgt]);
    }
    out
}

/// `χ(G, rK₂) = Θ` for a family instance, with everything needed to audit it.
#[derive(Debug, Clone)]
pub struct CertifiedChi {
    pub params: FamilyParams,
    /// Certificate on the vertices of `(G, rK₂)` in enumeration order: the
    /// pulled-back coloring and the backward homomorphism as lower bound.
    pub certificate: ChiCertificate,
    /// Exact chromatic number of `K(l, r − t)`.
    pub target: ChiCertificate,
    /// `(G, rK₂) → K(l, r − t)`.
    pub forward: HomWitness,
    /// Number of r-matchings of `G`.
    pub vertex_count: usize,
    /// Whether `(G, rK₂)` was built explicitly (false: adjacency was
    /// evaluated on demand because the instance exceeds the cap).
    pub explicit: bool,
    /// Whether the forward map was checked on every pair of r-matchings.
    /// When false it was checked vertex by vertex: each image lies inside
    /// the xy-indices of its matching, and edge-disjoint matchings have
    /// disjoint xy-indices.
    pub forward_exhaustive: bool,
}

impl CertifiedChi {
    pub fn chi(&self) -> usize {
        self.certificate.k
    }

    /// The backward witness stored in the lower bound.
    pub fn backward(&self) -> &HomWitness {
        match &self.certificate.lower_bound {
            LowerBound::Homomorphism { witness, .. } => witness,
            _ => unreachable!("certified_chi always stores a homomorphism lower bound"),
        }
    }
}

/// Most r-matchings [`certified_chi`] will enumerate. Past this the
/// exhaustive forward check is out of reach anyway.
pub const MATCHING_LIMIT: usize = 1_000_000;

/// Above this many pairs of r-matchings the forward map is checked vertex by
/// vertex instead of pair by pair.
pub const EXHAUSTIVE_PAIRS: usize = 500_000_000;

/// Adjacent pairs sampled when checking the pulled-back coloring on the
/// implicit route.
pub const COLORING_SAMPLES: usize = 100_000;
const COLORING_SEED: u64 = 0x636f_6c6f_7273;

/// Certifies `χ(G, rK₂) = Θ` without colouring `(G, rK₂)` directly:
/// both homomorphisms are checked edge by edge and `χ(K(l, r − t))` is
/// computed exactly and compared with the closed form.
///
/// Homomorphism failures are internal errors. The target colouring and the
/// forward check tick the budget, so large instances end in a timeout.
pub fn certified_chi(p: &FamilyParams, kneser_cap: usize, budget: &mut Budget) -> Result<CertifiedChi> {
    let g = shaebani_graph(p);
    let (l, k) = (p.l(), p.subset_size());

    let target_graph = kneser_graph(l, k)?;
    let target = chromatic_number(&target_graph, budget)?;
    let closed_form = lovasz_chi(l, k)?;
    if target.k != closed_form || target.k != p.theta() {
        return Err(Error::Internal(format!(
            "chi(K({l},{k})) = {} but closed form gives {closed_form} and theta = {}",
            target.k,
            p.theta()
        )));
    }

    let count = count_matchings_up_to(&g, p.r(), MATCHING_LIMIT);
    if count > MATCHING_LIMIT {
        return Err(too_many_matchings(&g, p.r(), MATCHING_LIMIT));
    }
    let matchings = enumerate_matchings(&g, p.r());
    let subsets = subsets_colex(l, k);

    let mut forward_map_table = Vec::with_capacity(matchings.len());
    for m in &matchings {
        forward_map_table.push(colex_rank(&forward_map(m, p)?) - 1);
    }
    let mut backward_map_table = Vec::with_capacity(subsets.len());
    for s in &subsets {
        let image = backward_map(s, p)?;
        let idx = matchings.binary_search(&image).map_err(|_| {
            Error::Internal(format!("backward image {image} is not an r-matching"))
        })?;
        if forward_map(&image, p)? != *s {
            return Err(Error::Internal(format!(
                "forward(backward({})) differs",
                format_subset(s)
            )));
        }
        backward_map_table.push(idx);
    }
    let mut images = backward_map_table.clone();
    images.sort_unstable();
    if images.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Internal("backward map is not injective".into()));
    }

    let coloring: Vec<usize> = forward_map_table.iter().map(|&i| target.coloring[i]).collect();

    let explicit = matchings.len() <= kneser_cap;
    let n = matchings.len();
    let forward_exhaustive = explicit || n * n.saturating_sub(1) / 2 <= EXHAUSTIVE_PAIRS;
    if explicit {
        let kg = build_matching_kneser(&g, p.r(), kneser_cap)?;
        check_forward(&forward_map_table, &kg, &target_graph, budget)?;
        check_backward(&backward_map_table, &target_graph, &kg)?;
        check_coloring(&kg, &coloring, budget)?;
    } else {
        let kg = ImplicitKneser {
            vertices: &matchings,
        };
        if forward_exhaustive {
            check_forward(&forward_map_table, &kg, &target_graph, budget)?;
        } else {
            check_forward_locally(&forward_map_table, &matchings, &subsets, p)?;
        }
        check_backward(&backward_map_table, &target_graph, &kg)?;
        sample_coloring(&kg, &coloring, budget)?;
    }
    if colors_used(&coloring) != p.theta() {
        return Err(Error::Internal("pulled-back coloring misses a color".into()));
    }

    let subset_descs: Vec<VertexDesc> = subsets.into_iter().map(VertexDesc::Subset).collect();
    let matching_descs: Vec<VertexDesc> = matchings.into_iter().map(VertexDesc::Matching).collect();
    let vertex_count = matching_descs.len();
    let backward = HomWitness {
        source: subset_descs.clone(),
        target: matching_descs.clone(),
        map: backward_map_table,
    };
    let forward = HomWitness {
        source: matching_descs,
        target: subset_descs,
        map: forward_map_table,
    };
    Ok(CertifiedChi {
        params: *p,
        certificate: ChiCertificate {
            k: target.k,
            coloring,
            lower_bound: LowerBound::Homomorphism {
                source: format!("K({l},{k})"),
                source_chi: target.k,
                witness: backward,
            },
        },
        target,
        forward,
        vertex_count,
        explicit,
        forward_exhaustive,
    })
}

/// Forward check: the source is a matching Kneser graph, so every pair is
/// visited and the budget is ticked once per pair.
fn check_forward<S: Adjacency, T: Adjacency>(
    map: &[usize],
    source: &S,
    target: &T,
    budget: &mut Budget,
) -> Result<()> {
    check_shape(map, source, target).map_err(|v| hom_failure("forward", v))?;
    let n = source.order();
    for u in 0..n {
        for v in u + 1..n {
            budget.tick()?;
            if source.adjacent(u, v) && !target.adjacent(map[u], map[v]) {
                return Err(hom_failure("forward", HomViolation::EdgeNotPreserved { u, v }));
            }
        }
    }
    Ok(())
}

/// Vertex-local forward check. An image made of indices `i` with xᵢyᵢ in
/// the matching can only meet the image of a matching sharing that edge.
fn check_forward_locally(map: &[usize], matchings: &[Matching], subsets: &[Vec<usize>], p: &FamilyParams) -> Result<()> {
    if map.len() != matchings.len() {
        return Err(hom_failure(
            "forward",
            HomViolation::NotTotal {
                mapped: map.len(),
                vertices: matchings.len(),
            },
        ));
    }
    for (vertex, (m, &image)) in matchings.iter().zip(map).enumerate() {
        let Some(subset) = subsets.get(image) else {
            return Err(hom_failure("forward", HomViolation::OutOfRange { vertex, image }));
        };
        let inside = subset.iter().all(|&i| m.contains(&p.xy_edge(i)));
        if subset.len() != p.subset_size() || !inside {
            return Err(Error::Internal(format!(
                "forward image {} of {m} is not a set of its xy-indices",
                format_subset(subset)
            )));
        }
    }
    Ok(())
}

/// Backward check: the source is the small classical Kneser graph.
fn check_backward<S: Adjacency, T: Adjacency>(map: &[usize], source: &S, target: &T) -> Result<()> {
    verify_homomorphism(map, source, target).map_err(|v| hom_failure("backward", v))
}

fn hom_failure(which: &str, v: HomViolation) -> Error {
    Error::Internal(format!("{which} map is not a homomorphism: {v}"))
}

fn improper(u: usize, v: usize) -> Error {
    Error::Internal(format!("pulled-back coloring is improper on ({u},{v})"))
}

fn check_coloring<A: Adjacency>(g: &A, coloring: &[usize], budget: &mut Budget) -> Result<()> {
    let n = g.order();
    for u in 0..n {
        for v in u + 1..n {
            budget.tick()?;
            if coloring[u] == coloring[v] && g.adjacent(u, v) {
                return Err(improper(u, v));
            }
        }
    }
    Ok(())
}

/// Spot check of the pulled-back coloring on a graph too large to build:
/// exhaustive when there are at most [`COLORING_SAMPLES`] pairs, otherwise
/// that many adjacent pairs drawn with a fixed seed. Propriety already
/// follows from the forward check; this guards the colour table itself.
fn sample_coloring<A: Adjacency>(g: &A, coloring: &[usize], budget: &mut Budget) -> Result<()> {
    let n = g.order();
    if n * n.saturating_sub(1) / 2 <= COLORING_SAMPLES {
        return check_coloring(g, coloring, budget);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(COLORING_SEED);
    let mut found = 0;
    while found < COLORING_SAMPLES {
        budget.tick()?;
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if g.adjacent(u, v) {
            found += 1;
            if coloring[u] == coloring[v] {
                return Err(improper(u.min(v), u.max(v)));
            }
        }
    }
    Ok(())
}
