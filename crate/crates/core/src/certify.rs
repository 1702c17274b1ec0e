//! Per-graph certification: evaluates every applicable spectral condition
//! against the measured spectrum and issues a verdict.
//!
//! A `Certified` verdict means at least one sufficient condition fired; a
//! `NotCertified` verdict asserts nothing (the conditions have no
//! converse). Hypotheses are tested with the symmetric slack
//! [`crate::DEFAULT_EPS`]: `lhs ≥ threshold − ε` for the eigenvalue rows
//! and `lhs ≤ threshold + ε` for the ratio and transfer rows. The
//! verification harness re-tests strict rows that sit within `ε` of their
//! threshold and reports them as razor edges, so slack never silently
//! converts a failed strict hypothesis into a certification.

use crate::bounds::{
    self, Applicability, BoundsError, InapplicableReason, ParamSet, SmallOrderVerdict, Target,
    TheoremId, Threshold,
};
use crate::graph::Graph;
use crate::invariants::{self, Girth};
use crate::spectra::{SpectraError, SpectralProfile};
use alloc::vec::Vec;
use core::fmt;

/// Errors from certification.
#[derive(Debug, Clone, PartialEq)]
pub enum CertifyError {
    /// Every certified condition presumes a connected graph.
    Disconnected,
    /// Certification targets start at `k = 2`.
    KTooSmall { k: usize },
    /// The conditions need `δ ≥ k`.
    DegreeTooSmall { min_degree: usize, k: usize },
    /// A clique-bound override below the true clique number would be
    /// unsound.
    CliqueOverrideTooSmall { r: usize, omega: usize },
    /// The eigensolver failed.
    Spectra(SpectraError),
}

impl fmt::Display for CertifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Disconnected => write!(f, "graph is disconnected"),
            Self::KTooSmall { k } => write!(f, "target connectivity {k} must be at least 2"),
            Self::DegreeTooSmall { min_degree, k } => {
                write!(f, "minimum degree {min_degree} is below the target {k}")
            }
            Self::CliqueOverrideTooSmall { r, omega } => {
                write!(
                    f,
                    "clique bound override {r} is below the clique number {omega}"
                )
            }
            Self::Spectra(e) => write!(f, "eigensolver failure: {e}"),
        }
    }
}

impl core::error::Error for CertifyError {}

impl From<SpectraError> for CertifyError {
    fn from(e: SpectraError) -> Self {
        Self::Spectra(e)
    }
}

/// Options shared by the certification entry points.
#[derive(Debug, Clone, Copy)]
pub struct CertifyOptions {
    /// Also compute the exact connectivity and record agreement.
    pub with_oracle: bool,
    /// Clique bound to use instead of the exact clique number (must be at
    /// least ω(G); larger values weaken the clique rows).
    pub r_override: Option<usize>,
    /// Threshold slack; see [`crate::DEFAULT_EPS`].
    pub eps: f64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self {
            with_oracle: false,
            r_override: None,
            eps: crate::DEFAULT_EPS,
        }
    }
}

/// Certification verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Certified,
    NotCertified,
}

/// How one condition fared. `margin` is the signed satisfaction amount:
/// `lhs − threshold` for the eigenvalue rows and `threshold − lhs` for the
/// ratio, transfer, and small-order rows, so positive always means
/// satisfied.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RowOutcome {
    Fired {
        threshold: f64,
        lhs: f64,
        margin: f64,
    },
    NotFired {
        threshold: f64,
        lhs: f64,
        margin: f64,
    },
    Inapplicable(InapplicableReason),
}

impl RowOutcome {
    pub fn fired(&self) -> bool {
        matches!(self, Self::Fired { .. })
    }

    pub fn margin(&self) -> Option<f64> {
        match self {
            Self::Fired { margin, .. } | Self::NotFired { margin, .. } => Some(*margin),
            Self::Inapplicable(_) => None,
        }
    }
}

/// One evaluated condition row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertRow {
    pub theorem: TheoremId,
    pub strict: bool,
    pub outcome: RowOutcome,
}

/// Exact-oracle cross check attached to a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCheck {
    pub connectivity: usize,
    /// False exactly when the verdict was `Certified` but the oracle
    /// connectivity is below `k` — which would witness a broken condition.
    pub agrees: bool,
}

/// The verdict for one `(target, k)` query with the full row trace.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub target: Target,
    pub k: usize,
    pub verdict: Verdict,
    pub rows: Vec<CertRow>,
    pub oracle: Option<OracleCheck>,
}

impl Certificate {
    pub fn fired(&self) -> impl Iterator<Item = &CertRow> {
        self.rows.iter().filter(|r| r.outcome.fired())
    }

    pub fn inapplicable(&self) -> impl Iterator<Item = &CertRow> {
        self.rows
            .iter()
            .filter(|r| matches!(r.outcome, RowOutcome::Inapplicable(_)))
    }
}

/// The row sets evaluated per target.
pub const EDGE_ROWS: [TheoremId; 5] = [
    TheoremId::SmallOrderEdge,
    TheoremId::EdgeGirth,
    TheoremId::EdgeClique,
    TheoremId::TransferQ2Girth,
    TheoremId::TransferLambda2Girth,
];

pub const VERTEX_ROWS: [TheoremId; 6] = [
    TheoremId::SmallOrderVertex,
    TheoremId::VertexGirth,
    TheoremId::VertexClique,
    TheoremId::VertexClique2,
    TheoremId::RatioGirth,
    TheoremId::RatioClique,
];

/// Every condition row, in report order.
pub const ALL_ROWS: [TheoremId; 15] = [
    TheoremId::SmallOrderEdge,
    TheoremId::EdgeGirth,
    TheoremId::EdgeClique,
    TheoremId::TransferQ2Girth,
    TheoremId::TransferLambda2Girth,
    TheoremId::PriorEdgeDelta,
    TheoremId::PriorEdgeMoore49,
    TheoremId::PriorEdgeF,
    TheoremId::SmallOrderVertex,
    TheoremId::VertexGirth,
    TheoremId::VertexClique,
    TheoremId::VertexClique2,
    TheoremId::RatioGirth,
    TheoremId::RatioClique,
    TheoremId::PriorVertexNu,
];

/// Evaluates one condition row against a measured spectrum.
pub fn evaluate_row(theorem: TheoremId, p: &ParamSet, sp: &SpectralProfile, eps: f64) -> CertRow {
    let strict = theorem.strict();
    let outcome = match theorem {
        TheoremId::EdgeGirth => mu_row(bounds::edge_girth_threshold(p), sp, eps),
        TheoremId::EdgeClique => mu_row(bounds::edge_clique_threshold(p), sp, eps),
        TheoremId::VertexGirth => mu_row(bounds::vertex_girth_threshold(p), sp, eps),
        TheoremId::VertexClique => mu_row(bounds::vertex_clique_threshold(p), sp, eps),
        TheoremId::PriorEdgeDelta => mu_row(bounds::prior_edge_delta_threshold(p), sp, eps),
        TheoremId::PriorEdgeMoore49 => mu_row(bounds::prior_edge_moore49_threshold(p), sp, eps),
        TheoremId::PriorEdgeF => mu_row(bounds::prior_edge_f_threshold(p), sp, eps),
        TheoremId::PriorVertexNu => mu_row(bounds::prior_vertex_nu_threshold(p), sp, eps),
        TheoremId::VertexClique2 => match bounds::vertex_clique2_threshold(p) {
            Ok(t) => mu_row(t, sp, eps),
            Err(BoundsError::PreconditionDelta) => {
                RowOutcome::Inapplicable(InapplicableReason::MinDegreeTooSmall)
            }
            Err(_) => RowOutcome::Inapplicable(InapplicableReason::OrderTooSmall),
        },
        TheoremId::RatioGirth | TheoremId::RatioClique => ratio_row(theorem, p, sp, eps),
        TheoremId::SmallOrderEdge | TheoremId::SmallOrderVertex => small_order_row(theorem, p),
        TheoremId::TransferQ2Girth | TheoremId::TransferLambda2Girth => {
            transfer_row(theorem, p, sp, eps)
        }
    };
    CertRow {
        theorem,
        strict,
        outcome,
    }
}

/// A `μ_{n−1} ≥ threshold` row (strictness only affects razor-edge
/// reporting, not the ε-slackened test).
fn mu_row(t: Threshold, sp: &SpectralProfile, eps: f64) -> RowOutcome {
    match t.value {
        Applicability::Inapplicable(reason) => RowOutcome::Inapplicable(reason),
        Applicability::Applicable(threshold) => {
            let lhs = sp.mu_n1;
            let margin = lhs - threshold;
            if margin >= -eps {
                RowOutcome::Fired {
                    threshold,
                    lhs,
                    margin,
                }
            } else {
                RowOutcome::NotFired {
                    threshold,
                    lhs,
                    margin,
                }
            }
        }
    }
}

fn ratio_row(theorem: TheoremId, p: &ParamSet, sp: &SpectralProfile, eps: f64) -> RowOutcome {
    // Surface precise reasons for the preconditions before calling in.
    if let Girth::Acyclic = p.girth {
        if theorem == TheoremId::RatioGirth {
            return RowOutcome::Inapplicable(InapplicableReason::InfiniteGirth);
        }
    }
    if theorem == TheoremId::RatioGirth && p.min_degree < p.k {
        return RowOutcome::Inapplicable(InapplicableReason::DegreeBelowK);
    }
    let condition = match theorem {
        TheoremId::RatioGirth => bounds::ratio_girth_condition(p),
        _ => bounds::ratio_clique_condition(p),
    };
    match condition {
        Err(BoundsError::PreconditionDelta) => {
            RowOutcome::Inapplicable(InapplicableReason::MinDegreeTooSmall)
        }
        Err(_) => RowOutcome::Inapplicable(InapplicableReason::OrderTooSmall),
        Ok(cond) => {
            let threshold = cond.ratio_cap;
            let lhs = sp.mu1 / sp.mu_n1;
            let margin = threshold - lhs;
            if margin >= -eps {
                RowOutcome::Fired {
                    threshold,
                    lhs,
                    margin,
                }
            } else {
                RowOutcome::NotFired {
                    threshold,
                    lhs,
                    margin,
                }
            }
        }
    }
}

/// The small-order rows compare integers exactly; no ε is involved.
fn small_order_row(theorem: TheoremId, p: &ParamSet) -> RowOutcome {
    if p.min_degree < p.k {
        return RowOutcome::Inapplicable(InapplicableReason::DegreeBelowK);
    }
    let rule = match bounds::small_order_rule(p, None) {
        Ok(rule) => rule,
        // δ ≥ k ≥ 2 holds here, so the only domain failure is a forest.
        Err(_) => return RowOutcome::Inapplicable(InapplicableReason::InfiniteGirth),
    };
    let (bound, fired) = match theorem {
        TheoremId::SmallOrderEdge => (
            rule.edge_bound,
            rule.verdict <= SmallOrderVerdict::EdgeForced,
        ),
        _ => (
            rule.vertex_bound,
            rule.verdict == SmallOrderVerdict::VertexForced,
        ),
    };
    let threshold = bound as f64;
    let lhs = p.n as f64;
    let margin = threshold - lhs;
    if fired {
        RowOutcome::Fired {
            threshold,
            lhs,
            margin,
        }
    } else {
        RowOutcome::NotFired {
            threshold,
            lhs,
            margin,
        }
    }
}

/// The transfer rows re-certify the edge girth threshold `p` through
/// `q₂ ≤ 2δ − p` or `λ₂ ≤ δ − p`.
fn transfer_row(theorem: TheoremId, p: &ParamSet, sp: &SpectralProfile, eps: f64) -> RowOutcome {
    let girth_threshold = bounds::edge_girth_threshold(p);
    match girth_threshold.value {
        Applicability::Inapplicable(reason) => RowOutcome::Inapplicable(reason),
        Applicability::Applicable(pval) => {
            let delta = p.min_degree as f64;
            let (lhs, threshold) = match theorem {
                TheoremId::TransferQ2Girth => (sp.q2, 2.0 * delta - pval),
                _ => (sp.lambda2, delta - pval),
            };
            let margin = threshold - lhs;
            if margin >= -eps {
                RowOutcome::Fired {
                    threshold,
                    lhs,
                    margin,
                }
            } else {
                RowOutcome::NotFired {
                    threshold,
                    lhs,
                    margin,
                }
            }
        }
    }
}

/// Certifies `κ'(G) ≥ k` from the spectral conditions.
pub fn certify_edge(
    g: &Graph,
    k: usize,
    opts: &CertifyOptions,
) -> Result<Certificate, CertifyError> {
    certify(g, Target::Edge, k, opts)
}

/// Certifies `κ(G) ≥ k` from the spectral conditions.
pub fn certify_vertex(
    g: &Graph,
    k: usize,
    opts: &CertifyOptions,
) -> Result<Certificate, CertifyError> {
    certify(g, Target::Vertex, k, opts)
}

fn certify(
    g: &Graph,
    target: Target,
    k: usize,
    opts: &CertifyOptions,
) -> Result<Certificate, CertifyError> {
    if k < 2 {
        return Err(CertifyError::KTooSmall { k });
    }
    if !g.is_connected() {
        return Err(CertifyError::Disconnected);
    }
    let min_degree = g.min_degree();
    if min_degree < k {
        return Err(CertifyError::DegreeTooSmall { min_degree, k });
    }
    let omega = invariants::clique_number(g);
    let r = opts.r_override.unwrap_or(omega);
    if r < omega {
        return Err(CertifyError::CliqueOverrideTooSmall { r, omega });
    }
    // δ ≥ k ≥ 2 forces a cycle, an edge, and n ≥ 3, so this cannot fail.
    let params = ParamSet::new(
        g.order(),
        min_degree,
        g.max_degree(),
        invariants::girth(g),
        r,
        k,
    )
    .expect("connected graph with min degree >= 2 yields valid parameters");
    let profile = SpectralProfile::compute(g)?;

    let ids: &[TheoremId] = match target {
        Target::Edge => &EDGE_ROWS,
        Target::Vertex => &VERTEX_ROWS,
    };
    let rows: Vec<CertRow> = ids
        .iter()
        .map(|&id| evaluate_row(id, &params, &profile, opts.eps))
        .collect();
    let verdict = if rows.iter().any(|r| r.outcome.fired()) {
        Verdict::Certified
    } else {
        Verdict::NotCertified
    };
    let oracle = if opts.with_oracle {
        let connectivity = match target {
            Target::Edge => invariants::edge_connectivity(g),
            Target::Vertex => invariants::vertex_connectivity(g),
        };
        let agrees = !(verdict == Verdict::Certified && connectivity < k);
        Some(OracleCheck {
            connectivity,
            agrees,
        })
    } else {
        None
    };
    Ok(Certificate {
        target,
        k,
        verdict,
        rows,
        oracle,
    })
}

/// One row of the full analysis report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisRow {
    pub k: usize,
    pub row: CertRow,
}

/// Everything this crate can say about one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub girth: Girth,
    pub clique_number: usize,
    pub connected: bool,
    pub vertex_connectivity: usize,
    pub edge_connectivity: usize,
    /// Absent for the one-vertex graph.
    pub spectral: Option<SpectralProfile>,
    /// Every condition row for each `k` from 2 through `max(2, δ)`.
    pub rows: Vec<AnalysisRow>,
}

/// Full per-graph report: exact invariants, spectral quantities, and every
/// condition row for `k ∈ 2..=δ` (at least `k = 2`, so inapplicable rows
/// still show their reasons on degenerate inputs).
pub fn analyze(g: &Graph) -> Result<AnalysisReport, SpectraError> {
    analyze_with_eps(g, crate::DEFAULT_EPS)
}

/// [`analyze`] with an explicit threshold slack.
pub fn analyze_with_eps(g: &Graph, eps: f64) -> Result<AnalysisReport, SpectraError> {
    let n = g.order();
    let connected = g.is_connected();
    let girth = invariants::girth(g);
    let clique_number = invariants::clique_number(g);
    let min_degree = g.min_degree();
    let max_degree = g.max_degree();
    let spectral = if n >= 2 {
        Some(SpectralProfile::compute(g)?)
    } else {
        None
    };

    let mut rows = Vec::new();
    if let Some(profile) = &spectral {
        for k in 2..=min_degree.max(2) {
            let Ok(params) = ParamSet::new(n, min_degree, max_degree, girth, clique_number, k)
            else {
                break; // degenerate degrees (edgeless); no rows to report
            };
            for id in ALL_ROWS {
                let row = if connected {
                    evaluate_row(id, &params, profile, eps)
                } else {
                    CertRow {
                        theorem: id,
                        strict: id.strict(),
                        outcome: RowOutcome::Inapplicable(InapplicableReason::Disconnected),
                    }
                };
                rows.push(AnalysisRow { k, row });
            }
        }
    }

    Ok(AnalysisReport {
        n,
        m: g.size(),
        min_degree,
        max_degree,
        girth,
        clique_number,
        connected,
        vertex_connectivity: invariants::vertex_connectivity(g),
        edge_connectivity: invariants::edge_connectivity(g),
        spectral,
        rows,
    })
}

/// Side-by-side threshold table for one parameter set.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub params: ParamSet,
    pub rows: Vec<Threshold>,
    /// Minimal applicable edge threshold (theorem, value).
    pub best_edge: Option<(TheoremId, f64)>,
    /// Minimal applicable vertex threshold (theorem, value).
    pub best_vertex: Option<(TheoremId, f64)>,
    /// Exact-arithmetic improvement comparisons, present whenever their
    /// order preconditions hold; each entry states whether the current
    /// threshold strictly beats the named prior one.
    pub improvements: Vec<(&'static str, bool)>,
}

/// Compares the new thresholds against the prior ones on equal parameters.
/// Lower is stronger: the row-wise minimum per target is reported as the
/// best bound.
pub fn compare_thresholds(params: &ParamSet) -> ComparisonReport {
    let rows: Vec<Threshold> = [
        bounds::edge_girth_threshold(params),
        bounds::edge_clique_threshold(params),
        bounds::prior_edge_delta_threshold(params),
        bounds::prior_edge_moore49_threshold(params),
        bounds::prior_edge_f_threshold(params),
        bounds::vertex_girth_threshold(params),
        bounds::vertex_clique_threshold(params),
        match bounds::vertex_clique2_threshold(params) {
            Ok(t) => t,
            Err(_) => Threshold {
                theorem: TheoremId::VertexClique2,
                strict: TheoremId::VertexClique2.strict(),
                value: Applicability::Inapplicable(InapplicableReason::MinDegreeTooSmall),
            },
        },
        bounds::prior_vertex_nu_threshold(params),
    ]
    .to_vec();

    let best = |target: Target| {
        rows.iter()
            .filter(|t| t.theorem.target() == target)
            .filter_map(|t| t.value.value().map(|v| (t.theorem, v)))
            .min_by(|a, b| a.1.partial_cmp(&b.1).expect("thresholds are finite"))
    };
    let mut improvements = Vec::new();
    if let Girth::Finite(g) = params.girth {
        let (n, delta, k) = (params.n, params.min_degree, params.k);
        if let Ok(holds) = bounds::remark_edge_beats_moore49(delta, g, n) {
            improvements.push(("edge-girth-vs-moore49", holds));
        }
        if let Ok(holds) = bounds::remark_edge_beats_f(delta, g, n) {
            improvements.push(("edge-girth-vs-f", holds));
        }
        if let Ok(holds) = bounds::remark_vertex_beats_nu(delta, g, k, n) {
            improvements.push(("vertex-girth-vs-nu", holds));
        }
    }
    ComparisonReport {
        params: *params,
        best_edge: best(Target::Edge),
        best_vertex: best(Target::Vertex),
        rows,
        improvements,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{self, Family};
    use crate::graph::Graph;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-8
    }

    fn oracle_opts() -> CertifyOptions {
        CertifyOptions {
            with_oracle: true,
            ..CertifyOptions::default()
        }
    }

    fn row(cert: &Certificate, id: TheoremId) -> &CertRow {
        cert.rows.iter().find(|r| r.theorem == id).unwrap()
    }

    #[test]
    fn petersen_edge_k3_certified_by_small_order() {
        let g = corpus::named(Family::Petersen).unwrap();
        let cert = certify_edge(&g, 3, &oracle_opts()).unwrap();
        assert_eq!(cert.verdict, Verdict::Certified);
        assert!(row(&cert, TheoremId::SmallOrderEdge).outcome.fired());
        let oracle = cert.oracle.unwrap();
        assert_eq!(oracle.connectivity, 3);
        assert!(oracle.agrees);
    }

    #[test]
    fn k4_edge_k3_trace() {
        let g = corpus::named(Family::Complete(4)).unwrap();
        let cert = certify_edge(&g, 3, &oracle_opts()).unwrap();
        // N(3,3) = 4 = n, so the girth row is order-limited...
        assert_eq!(
            row(&cert, TheoremId::EdgeGirth).outcome,
            RowOutcome::Inapplicable(InapplicableReason::OrderTooSmall)
        );
        // ...and the small-order rule certifies: 4 < 2·4.
        assert!(row(&cert, TheoremId::SmallOrderEdge).outcome.fired());
        assert_eq!(cert.verdict, Verdict::Certified);
        assert_eq!(cert.oracle.unwrap().connectivity, 3);
    }

    #[test]
    fn c6_edge_k2_trace() {
        let g = corpus::named(Family::Cycle(6)).unwrap();
        let cert = certify_edge(&g, 2, &oracle_opts()).unwrap();
        assert_eq!(
            row(&cert, TheoremId::EdgeGirth).outcome,
            RowOutcome::Inapplicable(InapplicableReason::OrderTooSmall)
        );
        assert!(row(&cert, TheoremId::SmallOrderEdge).outcome.fired());
        assert_eq!(cert.verdict, Verdict::Certified);
        assert_eq!(cert.oracle.unwrap().connectivity, 2);
    }

    #[test]
    fn petersen_vertex_k3_certified() {
        let g = corpus::named(Family::Petersen).unwrap();
        let cert = certify_vertex(&g, 3, &oracle_opts()).unwrap();
        assert!(row(&cert, TheoremId::SmallOrderVertex).outcome.fired()); // 10 < 20−2
        assert_eq!(cert.verdict, Verdict::Certified);
        assert_eq!(cert.oracle.unwrap().connectivity, 3);
    }

    #[test]
    fn k5_vertex_k4_trace() {
        let g = corpus::named(Family::Complete(5)).unwrap();
        let cert = certify_vertex(&g, 4, &oracle_opts()).unwrap();
        assert_eq!(
            row(&cert, TheoremId::VertexGirth).outcome,
            RowOutcome::Inapplicable(InapplicableReason::OrderTooSmall)
        );
        assert_eq!(
            row(&cert, TheoremId::VertexClique2).outcome,
            RowOutcome::Inapplicable(InapplicableReason::MinDegreeTooSmall)
        );
        assert!(row(&cert, TheoremId::SmallOrderVertex).outcome.fired()); // 5 < 10−3
        assert_eq!(cert.verdict, Verdict::Certified);
        assert_eq!(cert.oracle.unwrap().connectivity, 4);
    }

    #[test]
    fn c8_vertex_k2_trace() {
        let g = corpus::named(Family::Cycle(8)).unwrap();
        let cert = certify_vertex(&g, 2, &oracle_opts()).unwrap();
        assert_eq!(
            row(&cert, TheoremId::RatioGirth).outcome,
            RowOutcome::Inapplicable(InapplicableReason::OrderTooSmall)
        );
        assert_eq!(
            row(&cert, TheoremId::VertexGirth).outcome,
            RowOutcome::Inapplicable(InapplicableReason::OrderTooSmall)
        );
        assert!(row(&cert, TheoremId::SmallOrderVertex).outcome.fired()); // 8 < 16−1
        assert_eq!(cert.verdict, Verdict::Certified);
        assert_eq!(cert.oracle.unwrap().connectivity, 2);
    }

    #[test]
    fn certify_preconditions() {
        let p3 = corpus::named(Family::Path(3)).unwrap();
        assert!(matches!(
            certify_edge(&p3, 2, &CertifyOptions::default()),
            Err(CertifyError::DegreeTooSmall {
                min_degree: 1,
                k: 2
            })
        ));
        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            certify_edge(&disconnected, 2, &CertifyOptions::default()),
            Err(CertifyError::Disconnected)
        ));
        let k4 = corpus::named(Family::Complete(4)).unwrap();
        assert!(matches!(
            certify_edge(&k4, 1, &CertifyOptions::default()),
            Err(CertifyError::KTooSmall { k: 1 })
        ));
        assert!(matches!(
            certify_edge(
                &k4,
                2,
                &CertifyOptions {
                    r_override: Some(2),
                    ..CertifyOptions::default()
                }
            ),
            Err(CertifyError::CliqueOverrideTooSmall { r: 2, omega: 4 })
        ));
    }

    #[test]
    fn verdict_iff_some_row_fired() {
        for n in [4usize, 5] {
            let graphs = corpus::enumerate_labeled(
                n,
                corpus::ExhaustiveFilter {
                    connected: true,
                    min_degree: Some(2),
                    min_girth: None,
                },
            )
            .unwrap();
            for g in graphs {
                for k in 2..=g.min_degree() {
                    for cert in [
                        certify_edge(&g, k, &CertifyOptions::default()).unwrap(),
                        certify_vertex(&g, k, &CertifyOptions::default()).unwrap(),
                    ] {
                        let any = cert.fired().count() > 0;
                        assert_eq!(any, cert.verdict == Verdict::Certified);
                    }
                }
            }
        }
    }

    #[test]
    fn edge_certification_monotone_in_k() {
        let graphs = corpus::enumerate_labeled(
            6,
            corpus::ExhaustiveFilter {
                connected: true,
                min_degree: Some(3),
                min_girth: None,
            },
        )
        .unwrap();
        for g in graphs {
            for k in 3..=g.min_degree() {
                let hi = certify_edge(&g, k, &CertifyOptions::default()).unwrap();
                let lo = certify_edge(&g, k - 1, &CertifyOptions::default()).unwrap();
                if hi.verdict == Verdict::Certified {
                    assert_eq!(lo.verdict, Verdict::Certified);
                }
            }
        }
    }

    #[test]
    fn analyze_k2_report() {
        let k2 = corpus::named(Family::Complete(2)).unwrap();
        let report = analyze(&k2).unwrap();
        assert_eq!((report.n, report.min_degree), (2, 1));
        assert_eq!(report.girth, Girth::Acyclic);
        assert!(!report.rows.is_empty());
        // δ = 1 < k = 2: every row is inapplicable
        assert!(report
            .rows
            .iter()
            .all(|r| matches!(r.row.outcome, RowOutcome::Inapplicable(_))));
    }

    #[test]
    fn analyze_c5_report() {
        let c5 = corpus::named(Family::Cycle(5)).unwrap();
        let report = analyze(&c5).unwrap();
        assert_eq!(report.vertex_connectivity, 2);
        assert_eq!(report.edge_connectivity, 2);
        let mu = report.spectral.unwrap().mu_n1;
        assert!(close(
            mu,
            2.0 - 2.0 * (2.0 * core::f64::consts::PI / 5.0).cos()
        ));
    }

    #[test]
    fn analyze_petersen_report() {
        let g = corpus::named(Family::Petersen).unwrap();
        let report = analyze(&g).unwrap();
        let sp = report.spectral.unwrap();
        assert!(close(sp.mu_n1, 2.0));
        assert!(close(sp.mu1, 5.0));
        assert!(close(sp.lambda2, 1.0));
        assert!(close(sp.q2, 4.0));
        assert_eq!(report.clique_number, 2);
        // k ranges over 2..=3
        assert_eq!(report.rows.len(), 2 * ALL_ROWS.len());
    }

    #[test]
    fn analyze_single_vertex() {
        let k1 = corpus::named(Family::Complete(1)).unwrap();
        let report = analyze(&k1).unwrap();
        assert!(report.spectral.is_none());
        assert!(report.rows.is_empty());
        assert_eq!(report.vertex_connectivity, 0);
    }

    #[test]
    fn comparison_report_ordering() {
        let params = ParamSet::new(40, 3, 3, Girth::Finite(5), 2, 2).unwrap();
        let report = compare_thresholds(&params);
        let value = |id: TheoremId| {
            report
                .rows
                .iter()
                .find(|t| t.theorem == id)
                .unwrap()
                .value
                .value()
                .unwrap()
        };
        assert!(value(TheoremId::EdgeGirth) < value(TheoremId::PriorEdgeF));
        assert!(value(TheoremId::PriorEdgeF) < value(TheoremId::PriorEdgeMoore49));
        assert_eq!(report.best_edge.unwrap().0, TheoremId::EdgeGirth);
        // n = 40 >= 2N = 20, so all three improvement comparisons apply
        assert_eq!(report.improvements.len(), 3);
        assert!(report.improvements.iter().all(|&(_, holds)| holds));
    }

    #[test]
    fn comparison_delta2_new_equals_f() {
        let params = ParamSet::new(30, 2, 2, Girth::Finite(6), 2, 2).unwrap();
        let report = compare_thresholds(&params);
        let value = |id: TheoremId| {
            report
                .rows
                .iter()
                .find(|t| t.theorem == id)
                .unwrap()
                .value
                .value()
                .unwrap()
        };
        assert_eq!(value(TheoremId::EdgeGirth), value(TheoremId::PriorEdgeF));
    }
}
