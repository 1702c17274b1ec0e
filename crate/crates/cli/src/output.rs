//! Rendering of reports: stable JSON for machines, aligned tables for
//! humans. Table floats use six decimals; JSON floats follow the rules in
//! [`crate::json`].

use crate::json::{opt_f9, opt_str, opt_uint, Json};
use specon::bounds::{Target, TheoremId};
use specon::certify::{AnalysisReport, CertRow, Certificate, RowOutcome, Verdict};
use specon::graph::Graph;
use specon::invariants::Girth;
use specon::spectra::Spectrum;
use specon::verify::{CampaignConfig, CampaignResult};
use std::fmt::Write;

fn girth_json(girth: Girth) -> Json {
    match girth {
        Girth::Finite(g) => Json::UInt(g as u64),
        Girth::Acyclic => Json::Null,
    }
}

fn girth_text(girth: Girth) -> String {
    match girth {
        Girth::Finite(g) => g.to_string(),
        Girth::Acyclic => "acyclic".to_string(),
    }
}

fn row_fields(row: &CertRow) -> Vec<(&'static str, Json)> {
    let (status, threshold, lhs, margin, reason) = match row.outcome {
        RowOutcome::Fired {
            threshold,
            lhs,
            margin,
        } => ("fired", Some(threshold), Some(lhs), Some(margin), None),
        RowOutcome::NotFired {
            threshold,
            lhs,
            margin,
        } => ("not-fired", Some(threshold), Some(lhs), Some(margin), None),
        RowOutcome::Inapplicable(reason) => {
            ("inapplicable", None, None, None, Some(reason.as_str()))
        }
    };
    vec![
        ("theorem", Json::Str(row.theorem.as_str().to_string())),
        (
            "target",
            Json::Str(row.theorem.target().as_str().to_string()),
        ),
        ("strict", Json::Bool(row.strict)),
        ("status", Json::Str(status.to_string())),
        ("threshold", opt_f9(threshold)),
        ("lhs", opt_f9(lhs)),
        ("margin", opt_f9(margin)),
        ("reason", opt_str(reason)),
    ]
}

fn row_table_line(out: &mut String, row: &CertRow, k: Option<usize>) {
    let k_text = k.map_or(String::new(), |k| format!("{k:>2}  "));
    match row.outcome {
        RowOutcome::Fired {
            threshold,
            lhs,
            margin,
        } => {
            let razor = if row.strict && margin.abs() <= specon::DEFAULT_EPS {
                "  [razor edge]"
            } else {
                ""
            };
            writeln!(
                out,
                "  {k_text}{:<24} fired         thr={threshold:<12.6} lhs={lhs:<12.6} margin={margin:.6}{razor}",
                row.theorem.as_str()
            )
            .unwrap();
        }
        RowOutcome::NotFired {
            threshold,
            lhs,
            margin,
        } => {
            writeln!(
                out,
                "  {k_text}{:<24} not fired     thr={threshold:<12.6} lhs={lhs:<12.6} margin={margin:.6}",
                row.theorem.as_str()
            )
            .unwrap();
        }
        RowOutcome::Inapplicable(reason) => {
            writeln!(
                out,
                "  {k_text}{:<24} inapplicable  ({})",
                row.theorem.as_str(),
                reason.as_str()
            )
            .unwrap();
        }
    }
}

pub fn analysis_json(graph6: &str, report: &AnalysisReport) -> Json {
    let rows = report
        .rows
        .iter()
        .map(|ar| {
            let mut fields = vec![("k", Json::UInt(ar.k as u64))];
            fields.extend(row_fields(&ar.row));
            Json::Object(fields)
        })
        .collect();
    Json::Object(vec![
        ("graph6", Json::Str(graph6.to_string())),
        ("n", Json::UInt(report.n as u64)),
        ("m", Json::UInt(report.m as u64)),
        ("min_degree", Json::UInt(report.min_degree as u64)),
        ("max_degree", Json::UInt(report.max_degree as u64)),
        ("girth", girth_json(report.girth)),
        ("clique_number", Json::UInt(report.clique_number as u64)),
        ("connected", Json::Bool(report.connected)),
        (
            "vertex_connectivity",
            Json::UInt(report.vertex_connectivity as u64),
        ),
        (
            "edge_connectivity",
            Json::UInt(report.edge_connectivity as u64),
        ),
        ("mu1", opt_f9(report.spectral.map(|s| s.mu1))),
        ("mu_n1", opt_f9(report.spectral.map(|s| s.mu_n1))),
        ("lambda2", opt_f9(report.spectral.map(|s| s.lambda2))),
        ("q2", opt_f9(report.spectral.map(|s| s.q2))),
        ("residual", opt_f9(report.spectral.map(|s| s.residual))),
        ("rows", Json::Array(rows)),
    ])
}

pub fn analysis_table(graph6: &str, report: &AnalysisReport) -> String {
    let mut out = String::new();
    writeln!(out, "graph6              : {graph6}").unwrap();
    writeln!(out, "n                   : {}", report.n).unwrap();
    writeln!(out, "m                   : {}", report.m).unwrap();
    writeln!(out, "min degree          : {}", report.min_degree).unwrap();
    writeln!(out, "max degree          : {}", report.max_degree).unwrap();
    writeln!(out, "girth               : {}", girth_text(report.girth)).unwrap();
    writeln!(out, "clique number       : {}", report.clique_number).unwrap();
    writeln!(out, "connected           : {}", report.connected).unwrap();
    writeln!(out, "vertex connectivity : {}", report.vertex_connectivity).unwrap();
    writeln!(out, "edge connectivity   : {}", report.edge_connectivity).unwrap();
    if let Some(s) = report.spectral {
        writeln!(out, "mu_1                : {:.6}", s.mu1).unwrap();
        writeln!(out, "mu_n-1              : {:.6}", s.mu_n1).unwrap();
        writeln!(out, "lambda_2            : {:.6}", s.lambda2).unwrap();
        writeln!(out, "q_2                 : {:.6}", s.q2).unwrap();
    }
    if !report.rows.is_empty() {
        writeln!(out, "rows:").unwrap();
        for ar in &report.rows {
            row_table_line(&mut out, &ar.row, Some(ar.k));
        }
    }
    out
}

/// Parameters block shared by the certificate schema.
pub struct CertifyContext<'a> {
    pub graph: &'a Graph,
    pub girth: Girth,
    pub clique_number: usize,
    pub clique_bound: usize,
    pub eps: f64,
}

pub fn certificate_json(graph6: &str, cert: &Certificate, ctx: &CertifyContext) -> Json {
    let params = Json::Object(vec![
        ("target", Json::Str(cert.target.as_str().to_string())),
        ("k", Json::UInt(cert.k as u64)),
        ("n", Json::UInt(ctx.graph.order() as u64)),
        ("m", Json::UInt(ctx.graph.size() as u64)),
        ("min_degree", Json::UInt(ctx.graph.min_degree() as u64)),
        ("max_degree", Json::UInt(ctx.graph.max_degree() as u64)),
        ("girth", girth_json(ctx.girth)),
        ("clique_number", Json::UInt(ctx.clique_number as u64)),
        ("clique_bound", Json::UInt(ctx.clique_bound as u64)),
        ("eps", Json::F9(ctx.eps)),
    ]);
    let rows = cert
        .rows
        .iter()
        .map(|row| Json::Object(row_fields(row)))
        .collect();
    let verdict = match cert.verdict {
        Verdict::Certified => "certified",
        Verdict::NotCertified => "not-certified",
    };
    let oracle = cert.oracle.map_or(Json::Null, |o| {
        Json::Object(vec![
            ("connectivity", Json::UInt(o.connectivity as u64)),
            ("agrees", Json::Bool(o.agrees)),
        ])
    });
    Json::Object(vec![
        ("graph6", Json::Str(graph6.to_string())),
        ("params", params),
        ("rows", Json::Array(rows)),
        ("verdict", Json::Str(verdict.to_string())),
        ("oracle", oracle),
    ])
}

pub fn certificate_table(graph6: &str, cert: &Certificate, ctx: &CertifyContext) -> String {
    let mut out = String::new();
    let target = match cert.target {
        Target::Edge => "edge-connectivity",
        Target::Vertex => "vertex-connectivity",
    };
    let verdict = match cert.verdict {
        Verdict::Certified => "CERTIFIED",
        Verdict::NotCertified => "not certified",
    };
    writeln!(out, "graph6  : {graph6}").unwrap();
    writeln!(out, "claim   : {target} >= {}", cert.k).unwrap();
    writeln!(out, "verdict : {verdict}").unwrap();
    writeln!(
        out,
        "params  : n={} m={} delta={} Delta={} girth={} omega={} r={}",
        ctx.graph.order(),
        ctx.graph.size(),
        ctx.graph.min_degree(),
        ctx.graph.max_degree(),
        girth_text(ctx.girth),
        ctx.clique_number,
        ctx.clique_bound
    )
    .unwrap();
    writeln!(out, "rows:").unwrap();
    for row in &cert.rows {
        row_table_line(&mut out, row, None);
    }
    if let Some(o) = cert.oracle {
        writeln!(
            out,
            "oracle  : exact {} = {} ({})",
            target,
            o.connectivity,
            if o.agrees { "agrees" } else { "DISAGREES" }
        )
        .unwrap();
    }
    out
}

pub fn spectrum_json(graph6: &str, matrix: &str, spectrum: &Spectrum) -> Json {
    Json::Object(vec![
        ("graph6", Json::Str(graph6.to_string())),
        ("matrix", Json::Str(matrix.to_string())),
        ("n", Json::UInt(spectrum.values.len() as u64)),
        (
            "values",
            Json::Array(spectrum.values.iter().map(|&v| Json::F9(v)).collect()),
        ),
        ("residual", Json::F9(spectrum.residual)),
        ("sweeps", Json::UInt(spectrum.sweeps as u64)),
    ])
}

pub fn spectrum_table(graph6: &str, matrix: &str, spectrum: &Spectrum) -> String {
    let mut out = String::new();
    writeln!(out, "graph6   : {graph6}").unwrap();
    writeln!(out, "matrix   : {matrix}").unwrap();
    let values: Vec<String> = spectrum.values.iter().map(|v| format!("{v:.6}")).collect();
    writeln!(out, "values   : [{}]", values.join(", ")).unwrap();
    writeln!(out, "residual : {:.3e}", spectrum.residual).unwrap();
    writeln!(out, "sweeps   : {}", spectrum.sweeps).unwrap();
    out
}

pub fn campaign_json(corpus: Json, config: &CampaignConfig, result: &CampaignResult) -> Json {
    let properties = config
        .properties
        .iter()
        .map(|p| Json::Str(p.id().to_string()))
        .collect();
    let checks = result
        .checks_run
        .iter()
        .map(|(&k, &v)| (k, Json::UInt(v)))
        .collect();
    let counterexamples = result
        .counterexamples
        .iter()
        .map(|c| {
            Json::Object(vec![
                ("property", Json::Str(c.property.id().to_string())),
                ("graph6", Json::Str(c.graph6.clone())),
                ("theorem", opt_str(c.theorem.map(TheoremId::as_str))),
                ("k", opt_uint(c.k.map(|k| k as u64))),
                ("witness", Json::Str(c.witness.clone())),
                ("lhs", Json::FFull(c.lhs)),
                ("rhs", Json::FFull(c.rhs)),
            ])
        })
        .collect();
    let razors = result
        .razor_edges
        .iter()
        .map(|r| {
            Json::Object(vec![
                ("property", Json::Str(r.property.id().to_string())),
                ("graph6", Json::Str(r.graph6.clone())),
                ("theorem", Json::Str(r.theorem.as_str().to_string())),
                ("k", Json::UInt(r.k as u64)),
                ("lhs", Json::FFull(r.lhs)),
                ("rhs", Json::FFull(r.rhs)),
            ])
        })
        .collect();
    Json::Object(vec![
        ("corpus", corpus),
        ("properties", Json::Array(properties)),
        ("eps", Json::F9(config.eps)),
        ("seed", Json::UInt(config.seed)),
        (
            "caps",
            Json::Object(vec![
                ("cut_cap", Json::UInt(config.caps.cut_cap as u64)),
                ("pair_cap", Json::UInt(config.caps.pair_cap as u64)),
                ("subset_cap", Json::UInt(config.caps.subset_cap as u64)),
                ("samples", Json::UInt(config.caps.samples as u64)),
            ]),
        ),
        ("graphs_checked", Json::UInt(result.graphs_checked)),
        ("checks_run", Json::Object(checks)),
        ("counterexamples", Json::Array(counterexamples)),
        ("razor_edges", Json::Array(razors)),
        (
            "status",
            Json::Str(
                if result.is_clean() {
                    "clean"
                } else {
                    "counterexamples"
                }
                .to_string(),
            ),
        ),
    ])
}

pub fn campaign_table(result: &CampaignResult) -> String {
    let mut out = String::new();
    writeln!(out, "graphs checked : {}", result.graphs_checked).unwrap();
    writeln!(out, "checks run:").unwrap();
    for (property, count) in &result.checks_run {
        writeln!(out, "  {property:<22} {count}").unwrap();
    }
    writeln!(out, "counterexamples: {}", result.counterexamples.len()).unwrap();
    for c in &result.counterexamples {
        writeln!(out, "  [{}] {} {}", c.property.id(), c.graph6, c.witness).unwrap();
    }
    writeln!(out, "razor edges    : {}", result.razor_edges.len()).unwrap();
    for r in &result.razor_edges {
        writeln!(
            out,
            "  [{}] {} {} k={} lhs={:?} rhs={:?}",
            r.property.id(),
            r.graph6,
            r.theorem.as_str(),
            r.k,
            r.lhs,
            r.rhs
        )
        .unwrap();
    }
    writeln!(
        out,
        "status         : {}",
        if result.is_clean() {
            "clean"
        } else {
            "COUNTEREXAMPLES FOUND"
        }
    )
    .unwrap();
    out
}
