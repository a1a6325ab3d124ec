//! End-to-end verification: per-graph bound reports, closed-form/direct
//! spectrum consistency checks, and multi-family sweeps.
//!
//! Conventions used throughout (and in every serialized report):
//!
//! * **Slack** is the signed distance from the exact invariant to the bound:
//!   `bound − exact` for upper bounds, `exact − bound` for lower bounds.
//!   A bound is **violated** iff `slack < −tol`.
//! * **Equality** is declared when `|slack| ≤ 1e−8` — looser than the
//!   violation tolerance because equality cases stack several square-root
//!   evaluations on both sides.
//! * The two exact-value routes (direct eigensolve of the derived graph vs
//!   closed-form map of the base spectrum) must agree within `1e−7`, else
//!   the report carries a `ConsistencyFailure` finding.
//!
//! The exact value used for slack is always the direct-eigensolve one; the
//! closed-form route is the cross-check.

use crate::bounds::{
    applicable_bounds, evaluate_bound, BoundId, BoundParams, BoundResult, BoundSide, BoundTarget,
};
use crate::closed_form::{
    line_l_spectrum, line_q_spectrum, qgraph_l_spectrum, qgraph_q_spectrum, rgraph_l_spectrum,
    rgraph_q_spectrum, BaseParams,
};
use crate::energy::{ie, lel, InvariantKind, ValueSource};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::{Graph, RegularityClass, RegularityKind};
use crate::spectral::{
    eigenvalues, laplacian, max_deviation, signless_laplacian, Spectrum, SpectrumKind,
    DEFAULT_EIG_TOL,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

/// Default violation tolerance: slack below `−DEFAULT_TOL` is a violation.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Bounds within this distance of the exact value count as equalities.
pub const EQUALITY_TOL: f64 = 1e-8;

/// Maximum allowed disagreement between the direct and closed-form exact
/// values in a report row.
pub const ROUTE_AGREEMENT_TOL: f64 = 1e-7;

/// Maximum allowed sorted-multiset deviation between a closed-form spectrum
/// and the direct eigensolve of the constructed graph.
pub const MAP_DEVIATION_TOL: f64 = 1e-8;

/// One evaluated bound within a report row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub id: BoundId,
    pub side: BoundSide,
    pub value: Option<f64>,
    /// Signed distance to the exact value; `None` when inapplicable.
    pub slack: Option<f64>,
    pub applicable: bool,
    pub reason: Option<String>,
    pub equality_expected: bool,
    pub equality_achieved: bool,
}

/// Exact invariant values for one (target graph, invariant) pair plus all
/// applicable bounds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub target: BoundTarget,
    pub invariant: InvariantKind,
    pub exact_direct: f64,
    pub exact_closed: f64,
    pub bounds: Vec<BoundEntry>,
}

/// Noteworthy events extracted from a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Finding {
    /// An applicable bound fell on the wrong side of the exact value.
    Violation {
        target: BoundTarget,
        invariant: InvariantKind,
        bound: BoundId,
        slack: f64,
    },
    /// A bound met the exact value within [`EQUALITY_TOL`].
    EqualityAchieved {
        target: BoundTarget,
        invariant: InvariantKind,
        bound: BoundId,
    },
    /// A bound expected to be tight (complete base graph) was not.
    EqualityMissed {
        target: BoundTarget,
        invariant: InvariantKind,
        bound: BoundId,
        slack: f64,
    },
    /// The graph supports no bound rows at all.
    Inapplicable { reason: String },
    /// Direct and closed-form exact values disagree beyond
    /// [`ROUTE_AGREEMENT_TOL`].
    ConsistencyFailure {
        target: BoundTarget,
        invariant: InvariantKind,
        deviation: f64,
    },
}

/// Per-graph verification bundle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub graph: String,
    pub class: RegularityClass,
    pub rows: Vec<ReportRow>,
    pub findings: Vec<Finding>,
}

impl BoundReport {
    pub fn violations(&self) -> usize {
        self.findings
            .iter()
            .filter(|f| matches!(f, Finding::Violation { .. } | Finding::ConsistencyFailure { .. }))
            .count()
    }
}

fn spectrum_of(g: &Graph, kind: SpectrumKind) -> Result<Spectrum> {
    let mtx = match kind {
        SpectrumKind::Laplacian => laplacian(g),
        SpectrumKind::SignlessLaplacian => signless_laplacian(g),
    };
    eigenvalues(&mtx, kind, DEFAULT_EIG_TOL)
}

fn invariant_of(kind: InvariantKind, sp: &Spectrum, source: ValueSource) -> Result<f64> {
    Ok(match kind {
        InvariantKind::Lel => lel(sp, source)?.value,
        InvariantKind::Ie => ie(sp, source)?.value,
    })
}

/// Builds one report row: exact values via both routes plus every
/// applicable bound with slack against the direct exact value.
fn build_row(
    class: &RegularityClass,
    params: &BoundParams,
    target: BoundTarget,
    invariant: InvariantKind,
    direct: &Spectrum,
    closed: &Spectrum,
) -> Result<ReportRow> {
    let exact_direct = invariant_of(invariant, direct, ValueSource::DirectEigen)?;
    let exact_closed = invariant_of(invariant, closed, ValueSource::ClosedForm)?;
    let mut entries = Vec::new();
    for id in applicable_bounds(&class.kind, target, invariant) {
        let result: BoundResult = evaluate_bound(id, params)?;
        let slack = result.value.map(|v| match result.side {
            BoundSide::Upper => v - exact_direct,
            BoundSide::Lower => exact_direct - v,
        });
        let equality_achieved =
            result.value.is_some_and(|v| (v - exact_direct).abs() <= EQUALITY_TOL);
        entries.push(BoundEntry {
            id: result.id,
            side: result.side,
            value: result.value,
            slack,
            applicable: result.applicable,
            reason: result.reason,
            equality_expected: result.equality_expected,
            equality_achieved,
        });
    }
    Ok(ReportRow { target, invariant, exact_direct, exact_closed, bounds: entries })
}

fn collect_findings(rows: &[ReportRow], tol: f64) -> Vec<Finding> {
    let mut findings = Vec::new();
    for row in rows {
        let deviation = (row.exact_closed - row.exact_direct).abs();
        if deviation > ROUTE_AGREEMENT_TOL {
            findings.push(Finding::ConsistencyFailure {
                target: row.target,
                invariant: row.invariant,
                deviation,
            });
        }
        for b in &row.bounds {
            let Some(slack) = b.slack else { continue };
            if slack < -tol {
                findings.push(Finding::Violation {
                    target: row.target,
                    invariant: row.invariant,
                    bound: b.id,
                    slack,
                });
            }
            if b.equality_achieved {
                findings.push(Finding::EqualityAchieved {
                    target: row.target,
                    invariant: row.invariant,
                    bound: b.id,
                });
            } else if b.equality_expected {
                findings.push(Finding::EqualityMissed {
                    target: row.target,
                    invariant: row.invariant,
                    bound: b.id,
                    slack,
                });
            }
        }
    }
    findings
}

/// Full verification of one graph.
///
/// * Regular base with `r ≥ 2`: a base-graph `LEL` row plus `LEL`/`IE` rows
///   for `R(g)` and `Q(g)`, each computed by direct eigensolve and by the
///   closed-form map of the base spectrum.
/// * Connected semiregular base with `r₁ + r₂ ≥ 4` and `m ≥ n`: `LEL`/`IE`
///   rows for the line graph `L(g)`.
/// * Anything else (irregular, sub-threshold degrees, stars, disconnected
///   semiregular): no rows, one `Inapplicable` finding naming the reason.
pub fn bound_report(g: &Graph, label: &str, tol: f64) -> Result<BoundReport> {
    let class = g.classify();
    let inapplicable = |reason: String| BoundReport {
        graph: label.to_string(),
        class: class.clone(),
        rows: Vec::new(),
        findings: vec![Finding::Inapplicable { reason }],
    };

    let rows = match class.kind {
        RegularityKind::Regular { r } => {
            if r < 2 {
                return Ok(inapplicable(format!(
                    "regular of degree {r}: bounds assume r >= 2"
                )));
            }
            let base = BaseParams::from_graph(g)?;
            let mu = spectrum_of(g, SpectrumKind::Laplacian)?;
            let qs = spectrum_of(g, SpectrumKind::SignlessLaplacian)?;
            let lel_base = lel(&mu, ValueSource::DirectEigen)?.value;
            let params = BoundParams { base, lel_base: Some(lel_base) };

            let rg = g.r_graph();
            let qg = g.q_graph();
            let r_mu = spectrum_of(&rg, SpectrumKind::Laplacian)?;
            let r_qs = spectrum_of(&rg, SpectrumKind::SignlessLaplacian)?;
            let q_mu = spectrum_of(&qg, SpectrumKind::Laplacian)?;
            let q_qs = spectrum_of(&qg, SpectrumKind::SignlessLaplacian)?;

            vec![
                // The base row has no closed-form route; both columns carry
                // the directly computed spectrum's value.
                build_row(&class, &params, BoundTarget::Base, InvariantKind::Lel, &mu, &mu)?,
                build_row(
                    &class,
                    &params,
                    BoundTarget::RGraph,
                    InvariantKind::Lel,
                    &r_mu,
                    &rgraph_l_spectrum(&mu, &params.base)?,
                )?,
                build_row(
                    &class,
                    &params,
                    BoundTarget::RGraph,
                    InvariantKind::Ie,
                    &r_qs,
                    &rgraph_q_spectrum(&qs, &params.base)?,
                )?,
                build_row(
                    &class,
                    &params,
                    BoundTarget::QGraph,
                    InvariantKind::Lel,
                    &q_mu,
                    &qgraph_l_spectrum(&mu, &params.base)?,
                )?,
                build_row(
                    &class,
                    &params,
                    BoundTarget::QGraph,
                    InvariantKind::Ie,
                    &q_qs,
                    &qgraph_q_spectrum(&qs, &params.base)?,
                )?,
            ]
        }
        RegularityKind::Semiregular { r1, r2, .. } => {
            if r1 + r2 < 4 {
                return Ok(inapplicable(format!(
                    "semiregular({r1},{r2}): bounds assume r1 + r2 >= 4"
                )));
            }
            if !class.connected {
                return Ok(inapplicable(
                    "disconnected semiregular graph: line-graph bounds assume a connected base"
                        .to_string(),
                ));
            }
            if g.size() < g.order() {
                return Ok(inapplicable(format!(
                    "star-like semiregular base (m = {} < n = {}): line-graph \
                     spectra have no closed form here",
                    g.size(),
                    g.order()
                )));
            }
            let base = BaseParams::from_graph(g)?;
            let params = BoundParams { base, lel_base: None };
            let mu = spectrum_of(g, SpectrumKind::Laplacian)?;
            let qs = spectrum_of(g, SpectrumKind::SignlessLaplacian)?;
            let lg = g.line_graph()?;
            let l_mu = spectrum_of(&lg, SpectrumKind::Laplacian)?;
            let l_qs = spectrum_of(&lg, SpectrumKind::SignlessLaplacian)?;
            vec![
                build_row(
                    &class,
                    &params,
                    BoundTarget::LineGraph,
                    InvariantKind::Lel,
                    &l_mu,
                    &line_l_spectrum(&mu, &params.base)?,
                )?,
                build_row(
                    &class,
                    &params,
                    BoundTarget::LineGraph,
                    InvariantKind::Ie,
                    &l_qs,
                    &line_q_spectrum(&qs, &params.base)?,
                )?,
            ]
        }
        RegularityKind::Irregular => {
            return Ok(inapplicable(
                "irregular graph: no closed-form spectra or bounds apply".to_string(),
            ));
        }
    };
    let findings = collect_findings(&rows, tol);
    Ok(BoundReport { graph: label.to_string(), class, rows, findings })
}

/// Compares every applicable closed-form spectral map against the direct
/// eigensolve of the constructed derived graph.
///
/// Returns `(map name, max sorted-multiset deviation)` pairs:
///
/// * regular base (`r ≥ 2`): `rgraph_l`, `rgraph_q`, `qgraph_l`, `qgraph_q`,
///   plus `line_l`/`line_q` when the graph is also connected bipartite with
///   `m ≥ n` (a regular bipartite graph is the `r₁ = r₂` semiregular case);
/// * connected semiregular non-star base: `line_l`, `line_q`.
pub fn consistency_check(g: &Graph) -> Result<Vec<(String, f64)>> {
    let class = g.classify();
    let mut out = Vec::new();
    let mu = spectrum_of(g, SpectrumKind::Laplacian)?;
    let qs = spectrum_of(g, SpectrumKind::SignlessLaplacian)?;
    let mut push = |name: &str, closed: &Spectrum, direct: &Spectrum| {
        out.push((name.to_string(), max_deviation(closed.values(), direct.values())));
    };
    match class.kind {
        RegularityKind::Regular { .. } => {
            let base = BaseParams::from_graph(g)?;
            let rg = g.r_graph();
            let qg = g.q_graph();
            push(
                "rgraph_l",
                &rgraph_l_spectrum(&mu, &base)?,
                &spectrum_of(&rg, SpectrumKind::Laplacian)?,
            );
            push(
                "rgraph_q",
                &rgraph_q_spectrum(&qs, &base)?,
                &spectrum_of(&rg, SpectrumKind::SignlessLaplacian)?,
            );
            push(
                "qgraph_l",
                &qgraph_l_spectrum(&mu, &base)?,
                &spectrum_of(&qg, SpectrumKind::Laplacian)?,
            );
            push(
                "qgraph_q",
                &qgraph_q_spectrum(&qs, &base)?,
                &spectrum_of(&qg, SpectrumKind::SignlessLaplacian)?,
            );
            if class.connected && g.is_bipartite() && g.size() >= g.order() {
                let semi = BaseParams::semiregular_from_graph(g)?;
                let lg = g.line_graph()?;
                push(
                    "line_l",
                    &line_l_spectrum(&mu, &semi)?,
                    &spectrum_of(&lg, SpectrumKind::Laplacian)?,
                );
                push(
                    "line_q",
                    &line_q_spectrum(&qs, &semi)?,
                    &spectrum_of(&lg, SpectrumKind::SignlessLaplacian)?,
                );
            }
        }
        RegularityKind::Semiregular { .. } => {
            if !class.connected {
                return Err(Error::InapplicableMap(
                    "line-graph spectral maps assume a connected semiregular base".to_string(),
                ));
            }
            let base = BaseParams::semiregular_from_graph(g)?;
            let lg = g.line_graph()?;
            push(
                "line_l",
                &line_l_spectrum(&mu, &base)?,
                &spectrum_of(&lg, SpectrumKind::Laplacian)?,
            );
            push(
                "line_q",
                &line_q_spectrum(&qs, &base)?,
                &spectrum_of(&lg, SpectrumKind::SignlessLaplacian)?,
            );
        }
        RegularityKind::Irregular => {
            return Err(Error::InapplicableMap(
                "no closed-form spectral maps apply to an irregular graph".to_string(),
            ));
        }
    }
    Ok(out)
}

/// Minimum and median slack over every evaluation of one bound in a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SlackStats {
    pub count: usize,
    pub min: f64,
    pub median: f64,
}

/// A family spec whose generation failed, with the error message.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenerationFailure {
    pub spec: String,
    pub message: String,
}

/// Aggregate results of a sweep.
///
/// `runtime` is measured but never serialized, so identical inputs always
/// produce byte-identical serialized summaries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub total_graphs: usize,
    pub violations: usize,
    pub consistency_failures: usize,
    pub equality_hits: usize,
    pub equality_misses: usize,
    pub inapplicable_graphs: usize,
    /// Worst sorted-multiset deviation seen by [`consistency_check`] across
    /// the sweep (0 when no maps were applicable).
    pub max_map_deviation: f64,
    /// Number of map checks whose deviation exceeded [`MAP_DEVIATION_TOL`].
    pub map_failures: usize,
    pub generation_failures: Vec<GenerationFailure>,
    pub slack_stats: BTreeMap<String, SlackStats>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl SweepSummary {
    /// True when nothing in the sweep contradicted a claimed bound or map.
    pub fn clean(&self) -> bool {
        self.violations == 0 && self.consistency_failures == 0 && self.map_failures == 0
    }
}

/// Reports plus summary; reports are sorted by graph label.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepOutcome {
    pub reports: Vec<BoundReport>,
    pub summary: SweepSummary,
}

/// Runs [`bound_report`] and [`consistency_check`] over a list of already
/// constructed graphs and aggregates the results. Eigensolver failures
/// abort; graphs whose maps are simply inapplicable contribute no map
/// deviations.
pub fn sweep_graphs(items: &[(String, Graph)], tol: f64) -> Result<SweepOutcome> {
    let start = Instant::now();
    let mut reports = Vec::new();
    let mut max_map_deviation: f64 = 0.0;
    let mut map_failures = 0usize;
    for (label, g) in items {
        reports.push(bound_report(g, label, tol)?);
        match consistency_check(g) {
            Ok(devs) => {
                for (_, dev) in devs {
                    max_map_deviation = max_map_deviation.max(dev);
                    if dev > MAP_DEVIATION_TOL {
                        map_failures += 1;
                    }
                }
            }
            Err(Error::InapplicableMap(_)) => {}
            Err(e) => return Err(e),
        }
    }
    reports.sort_by(|a, b| a.graph.cmp(&b.graph));

    let mut violations = 0;
    let mut consistency_failures = 0;
    let mut equality_hits = 0;
    let mut equality_misses = 0;
    let mut inapplicable_graphs = 0;
    let mut slacks: BTreeMap<String, Vec<f64>> = BTreeMap::new();
    for report in &reports {
        for finding in &report.findings {
            match finding {
                Finding::Violation { .. } => violations += 1,
                Finding::ConsistencyFailure { .. } => consistency_failures += 1,
                Finding::EqualityAchieved { .. } => equality_hits += 1,
                Finding::EqualityMissed { .. } => equality_misses += 1,
                Finding::Inapplicable { .. } => inapplicable_graphs += 1,
            }
        }
        for row in &report.rows {
            for b in &row.bounds {
                if let Some(slack) = b.slack {
                    slacks.entry(b.id.name().to_string()).or_default().push(slack);
                }
            }
        }
    }
    let slack_stats = slacks
        .into_iter()
        .map(|(name, mut xs)| {
            xs.sort_by(f64::total_cmp);
            let min = xs[0];
            let median = if xs.len() % 2 == 1 {
                xs[xs.len() / 2]
            } else {
                (xs[xs.len() / 2 - 1] + xs[xs.len() / 2]) / 2.0
            };
            (name, SlackStats { count: xs.len(), min, median })
        })
        .collect();
    let summary = SweepSummary {
        total_graphs: reports.len(),
        violations,
        consistency_failures,
        equality_hits,
        equality_misses,
        inapplicable_graphs,
        max_map_deviation,
        map_failures,
        generation_failures: Vec::new(),
        slack_stats,
        runtime: start.elapsed(),
    };
    Ok(SweepOutcome { reports, summary })
}

/// Generates every spec, then runs [`sweep_graphs`]. Generation failures
/// are recorded in the summary rather than aborting the sweep.
pub fn sweep(specs: &[FamilySpec], tol: f64) -> Result<SweepOutcome> {
    let start = Instant::now();
    let mut items = Vec::new();
    let mut generation_failures = Vec::new();
    for spec in specs {
        let label = spec.label();
        match spec.generate() {
            Ok(g) => items.push((label, g)),
            Err(e) => {
                generation_failures.push(GenerationFailure { spec: label, message: e.to_string() })
            }
        }
    }
    let mut outcome = sweep_graphs(&items, tol)?;
    outcome.summary.generation_failures = generation_failures;
    outcome.summary.runtime = start.elapsed();
    Ok(outcome)
}

/// The standard verification suite: complete graphs `K₃..K₇`, cycles
/// `C₃..C₁₀`, the Petersen graph, five random 3-regular graphs on 12
/// vertices, five random 4-regular graphs on 10 vertices, `K₂,₃`, `K₂,₄`,
/// `K₃,₄`, and three random (3,2)-biregular graphs on 4 + 6 vertices.
pub fn standard_suite() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for n in 3..=7 {
        specs.push(FamilySpec::Complete { n });
    }
    for n in 3..=10 {
        specs.push(FamilySpec::Cycle { n });
    }
    specs.push(FamilySpec::Petersen);
    for seed in 1..=5 {
        specs.push(FamilySpec::RandomRegular { n: 12, r: 3, seed });
    }
    for seed in 1..=5 {
        specs.push(FamilySpec::RandomRegular { n: 10, r: 4, seed });
    }
    specs.push(FamilySpec::CompleteBipartite { a: 2, b: 3 });
    specs.push(FamilySpec::CompleteBipartite { a: 2, b: 4 });
    specs.push(FamilySpec::CompleteBipartite { a: 3, b: 4 });
    for seed in 1..=3 {
        specs.push(FamilySpec::RandomBiregular { n1: 4, n2: 6, r1: 3, r2: 2, seed });
    }
    specs
}
