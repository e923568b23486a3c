//! Gap reports: `|E| − ex` against `χ(G, rK₂)` per instance.

use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::budget::{Budget, DEFAULT_TIMEOUT};
use crate::error::{Error, Result};
use crate::families::{shaebani_graph, shaebani_tree, FamilyParams};
use crate::graph::LabeledGraph;
use crate::homcert::{certified_chi, CertifiedChi};
use crate::kneser::{build_matching_kneser, DEFAULT_KNESER_CAP};
use crate::solvers::{chromatic_number, ChiCertificate};
use crate::turan::{min_deletion_set, DeletionCertificate};

/// Limits applied to every solver call of one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub timeout: Duration,
    pub kneser_cap: usize,
}

impl SolveOptions {
    pub fn budget(&self) -> Budget {
        Budget::new(self.timeout)
    }
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            timeout: DEFAULT_TIMEOUT,
            kneser_cap: DEFAULT_KNESER_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// χ equals `|E| − ex`.
    Holds,
    /// χ is strictly below `|E| − ex`.
    Violated,
    Unknown,
}

/// Closed-form values predicted for a family instance, next to a flag
/// telling whether the computed values agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub chi: usize,
    pub removal_bound: usize,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapReport {
    pub instance: String,
    pub r: usize,
    pub edge_count: usize,
    pub ex: Option<usize>,
    /// `|E| − ex`.
    pub removal_bound: Option<usize>,
    pub chi: Option<usize>,
    /// `removal_bound − chi`.
    pub gap: Option<i64>,
    pub verdict: Verdict,
    pub connected: bool,
    /// Disconnected hosts lie outside the conjecture's hypothesis.
    pub conjecture_applies: bool,
    pub predicted: Option<Prediction>,
    pub chi_certificate: Option<ChiCertificate>,
    pub deletion: DeletionCertificate,
}

impl GapReport {
    fn assemble(
        instance: String,
        g: &LabeledGraph,
        r: usize,
        deletion: DeletionCertificate,
        chi_certificate: Option<ChiCertificate>,
    ) -> Result<Self> {
        let removal_bound = deletion.optimal.then_some(deletion.size);
        let ex = removal_bound.map(|d| g.edge_count() - d);
        let chi = chi_certificate.as_ref().map(|c| c.k);
        let (gap, verdict) = match (removal_bound, chi) {
            (Some(d), Some(c)) if c > d => {
                return Err(Error::Internal(format!(
                    "{instance}: chi = {c} exceeds |E| - ex = {d}"
                )))
            }
            (Some(d), Some(c)) => (
                Some(d as i64 - c as i64),
                if c == d { Verdict::Holds } else { Verdict::Violated },
            ),
            _ => (None, Verdict::Unknown),
        };
        let connected = g.is_connected();
        Ok(GapReport {
            instance,
            r,
            edge_count: g.edge_count(),
            ex,
            removal_bound,
            chi,
            gap,
            verdict,
            connected,
            conjecture_applies: connected,
            predicted: None,
            chi_certificate,
            deletion,
        })
    }

    fn with_prediction(mut self, chi: usize, removal_bound: usize) -> Self {
        let matches = self.chi == Some(chi) && self.removal_bound == Some(removal_bound);
        self.predicted = Some(Prediction {
            chi,
            removal_bound,
            matches,
        });
        self
    }
}

/// Gap report for an arbitrary graph, colouring `(G, rK₂)` directly.
///
/// χ is reported unknown when the Kneser graph exceeds the cap or the
/// colouring search times out.
pub fn gap_report(instance: &str, g: &LabeledGraph, r: usize, opts: &SolveOptions) -> Result<GapReport> {
    let deletion = min_deletion_set(g, r, &mut opts.budget())?;
    let chi = match build_matching_kneser(g, r, opts.kneser_cap) {
        Ok(kg) => match chromatic_number(&kg.to_graph(), &mut opts.budget()) {
            Ok(cert) => Some(cert),
            Err(e) if e.is_timeout() => None,
            Err(e) => return Err(e),
        },
        Err(Error::TooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    GapReport::assemble(instance.to_string(), g, r, deletion, chi)
}

/// Gap report for a family instance, with χ certified through the
/// homomorphism route and the closed forms `χ = Θ`, `|E| − ex = Θ + Γ`
/// alongside.
pub fn family_report(p: &FamilyParams, opts: &SolveOptions) -> Result<GapReport> {
    let g = shaebani_graph(p);
    family_report_on(format!("family({})", p.label()), &g, p, opts)
}

fn family_report_on(instance: String, g: &LabeledGraph, p: &FamilyParams, opts: &SolveOptions) -> Result<GapReport> {
    let deletion = min_deletion_set(g, p.r(), &mut opts.budget())?;
    let chi = match certified_chi(p, opts.kneser_cap, &mut opts.budget()) {
        Ok(c) => Some(c.certificate),
        Err(e) if e.is_timeout() => None,
        Err(e) => return Err(e),
    };
    Ok(GapReport::assemble(instance, g, p.r(), deletion, chi)?
        .with_prediction(p.theta(), p.predicted_removal()))
}

/// [`family_report`] together with the certificate it was built from.
/// Unlike the report alone, a timeout in the certified route is an error.
pub fn certify_family(p: &FamilyParams, opts: &SolveOptions) -> Result<(GapReport, CertifiedChi)> {
    let g = shaebani_graph(p);
    let deletion = min_deletion_set(&g, p.r(), &mut opts.budget())?;
    let cert = certified_chi(p, opts.kneser_cap, &mut opts.budget())?;
    let report = GapReport::assemble(format!("family({})", p.label()), &g, p.r(), deletion, Some(cert.certificate.clone()))?
        .with_prediction(p.theta(), p.predicted_removal());
    Ok((report, cert))
}

/// Reports for the trees with fixed Θ and growing r. The prediction for
/// each is `χ = Θ` and `|E| − ex = Θ + r − 2`.
pub fn sequence_report(theta: usize, rs: &[usize], opts: &SolveOptions) -> Result<Vec<GapReport>> {
    rs.iter()
        .map(|&r| {
            let g = shaebani_tree(r, theta)?;
            let p = FamilyParams::new(r, theta, r - 2)?;
            let report = family_report_on(format!("tree(r={r},theta={theta})"), &g, &p, opts)?;
            Ok(report.with_prediction(theta, theta + r - 2))
        })
        .collect()
}

/// Aligned plain-text table.
pub fn render_table(reports: &[GapReport]) -> String {
    let show = |v: Option<usize>| v.map_or("?".to_string(), |x| x.to_string());
    let rows: Vec<[String; 9]> = reports
        .iter()
        .map(|rep| {
            [
                rep.instance.clone(),
                rep.r.to_string(),
                rep.edge_count.to_string(),
                show(rep.ex),
                show(rep.removal_bound),
                show(rep.chi),
                rep.gap.map_or("?".to_string(), |g| g.to_string()),
                format!("{:?}", rep.verdict).to_uppercase(),
                match &rep.predicted {
                    None => "-".to_string(),
                    Some(p) if p.matches => "match".to_string(),
                    Some(_) => "MISMATCH".to_string(),
                },
            ]
        })
        .collect();
    let header = ["instance", "r", "|E|", "ex", "D", "chi", "gap", "verdict", "predicted"];
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[&str]| {
        let parts: Vec<String> = cells
            .iter()
            .zip(widths)
            .enumerate()
            .map(|(i, (c, w))| if i == 0 { format!("{c:<w$}") } else { format!("{c:>w$}") })
            .collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(&header);
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        line(&cells);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{matching_graph, petersen};
    use crate::graph::make_graph;

    #[test]
    fn petersen_violates() {
        let rep = gap_report("petersen", &petersen(), 5, &SolveOptions::default()).unwrap();
        assert_eq!(rep.removal_bound, Some(3));
        assert_eq!(rep.ex, Some(12));
        assert_eq!(rep.chi, Some(1));
        assert_eq!(rep.gap, Some(2));
        assert_eq!(rep.verdict, Verdict::Violated);
        assert!(rep.connected);
    }

    #[test]
    fn disjoint_edges_flagged_outside() {
        let rep = gap_report("7K2", &matching_graph(7), 3, &SolveOptions::default()).unwrap();
        assert_eq!((rep.removal_bound, rep.chi, rep.gap), (Some(5), Some(3), Some(2)));
        assert_eq!(rep.verdict, Verdict::Violated);
        assert!(!rep.conjecture_applies);
    }

    #[test]
    fn path_holds() {
        let p4 = make_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let rep = gap_report("P4", &p4, 2, &SolveOptions::default()).unwrap();
        assert_eq!((rep.removal_bound, rep.chi, rep.gap), (Some(1), Some(1), Some(0)));
        assert_eq!(rep.verdict, Verdict::Holds);
    }

    #[test]
    fn cap_makes_chi_unknown() {
        let opts = SolveOptions {
            kneser_cap: 2,
            ..SolveOptions::default()
        };
        let rep = gap_report("petersen", &petersen(), 5, &opts).unwrap();
        assert_eq!(rep.chi, None);
        assert_eq!(rep.verdict, Verdict::Unknown);
        assert_eq!(rep.removal_bound, Some(3));
    }

    #[test]
    fn trees_small_sequence() {
        let reps = sequence_report(1, &[3, 4], &SolveOptions::default()).unwrap();
        let gaps: Vec<_> = reps.iter().map(|r| r.gap).collect();
        assert_eq!(gaps, vec![Some(1), Some(2)]);
        assert!(reps.iter().all(|r| r.predicted.as_ref().unwrap().matches));

        let rep = &sequence_report(2, &[3], &SolveOptions::default()).unwrap()[0];
        assert_eq!((rep.removal_bound, rep.chi, rep.gap), (Some(3), Some(2), Some(1)));
        assert_eq!(rep.verdict, Verdict::Violated);
    }

    #[test]
    fn table_renders() {
        let rep = gap_report("P4", &make_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(), 2, &SolveOptions::default()).unwrap();
        let text = render_table(&[rep]);
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("instance"));
        assert!(lines[1].contains("HOLDS"));
    }

    #[test]
    fn verdict_serializes_upper() {
        assert_eq!(serde_json::to_string(&Verdict::Violated).unwrap(), "\"VIOLATED\"");
    }
}
