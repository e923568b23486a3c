//! Matching Kneser graphs `(G, rK₂)`: construction, exact chromatic numbers,
//! generalized Turán numbers `ex(G, rK₂)`, and machine-checked certificates
//! for the graph families with `χ(G, rK₂) < |E(G)| − ex(G, rK₂)`.

pub mod budget;
pub mod error;
pub mod families;
pub mod graph;
pub mod homcert;
pub mod kneser;
pub mod report;
pub mod solvers;
pub mod subsets;
pub mod turan;
pub mod verify;

pub use budget::Budget;
pub use error::{Error, Result};
pub use families::{matching_graph, petersen, shaebani_graph, shaebani_tree, FamilyParams};
pub use graph::{make_graph, Edge, LabeledGraph, Matching, Role, VertexId};
pub use homcert::{certified_chi, CertifiedChi, HomWitness};
pub use kneser::{build_matching_kneser, kneser_graph, MatchingKneserGraph};
pub use report::{certify_family, family_report, gap_report, sequence_report, GapReport, SolveOptions, Verdict};
pub use solvers::{chromatic_number, is_k_colorable, lovasz_chi, ChiCertificate, LowerBound};
pub use turan::{generalized_turan, min_deletion_set, DeletionCertificate};
