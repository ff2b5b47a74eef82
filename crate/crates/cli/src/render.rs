use std::fmt::Write;

use anyhow::Result;
use lly_core::classify::{ClassificationResult, VerificationReport};
use lly_core::curvature::CurvatureReport;
use lly_core::graph::emit_graph6;
use lly_core::lp::{to_decimal_string, to_fraction_string};
use serde::Serialize;

#[derive(Serialize)]
struct JsonReport {
    graph: JsonGraph,
    edges: Vec<JsonEdge>,
    min_kappa: String,
    positively_curved: bool,
}

#[derive(Serialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize)]
struct JsonEdge {
    u: usize,
    v: usize,
    kappa: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    kappa_decimal: Option<String>,
}

#[derive(Serialize)]
struct JsonClassification {
    n_max: usize,
    matched_known_set: bool,
    survivors: Vec<JsonSurvivor>,
}

#[derive(Serialize)]
struct JsonSurvivor {
    graph6: String,
    n: usize,
    edges: usize,
    max_degree: usize,
    min_kappa: String,
}

/// Left-aligned columns separated by two spaces.
fn columns(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..width).map(|c| rows.iter().filter_map(|r| r.get(c)).map(String::len).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c + 1 == row.len() {
                line.push_str(cell);
            } else {
                let _ = write!(line, "{cell:<w$}  ", w = widths[c]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn report_table(report: &CurvatureReport, decimal: Option<usize>) -> String {
    let mut rows = vec![["u", "v", "kappa"].map(String::from).to_vec()];
    if decimal.is_some() {
        rows[0].push("approx".into());
    }
    for row in &report.rows {
        let mut cells = vec![row.u.to_string(), row.v.to_string(), to_fraction_string(&row.kappa)];
        if let Some(digits) = decimal {
            cells.push(to_decimal_string(&row.kappa, digits));
        }
        rows.push(cells);
    }
    let g = &report.graph;
    let mut out = format!("graph {}  n {}  edges {}\n", emit_graph6(g), g.n(), g.edge_count());
    out.push_str(&columns(&rows));
    let _ = writeln!(out, "min_kappa {}", to_fraction_string(&report.min_kappa));
    let _ = writeln!(out, "positively_curved {}", report.positively_curved);
    out
}

pub fn report_json(report: &CurvatureReport, decimal: Option<usize>) -> Result<String> {
    let json = JsonReport {
        graph: JsonGraph { n: report.graph.n(), edges: report.graph.edges().iter().map(|&(u, v)| [u, v]).collect() },
        edges: report
            .rows
            .iter()
            .map(|r| JsonEdge {
                u: r.u,
                v: r.v,
                kappa: to_fraction_string(&r.kappa),
                kappa_decimal: decimal.map(|d| to_decimal_string(&r.kappa, d)),
            })
            .collect(),
        min_kappa: to_fraction_string(&report.min_kappa),
        positively_curved: report.positively_curved,
    };
    Ok(serde_json::to_string_pretty(&json)? + "\n")
}

pub fn report_csv(report: &CurvatureReport, decimal: Option<usize>) -> String {
    let mut out = String::from("u,v,kappa_num,kappa_den");
    if decimal.is_some() {
        out.push_str(",kappa_decimal");
    }
    out.push('\n');
    for r in &report.rows {
        let _ = write!(out, "{},{},{},{}", r.u, r.v, r.kappa.numer(), r.kappa.denom());
        if let Some(digits) = decimal {
            let _ = write!(out, ",{}", to_decimal_string(&r.kappa, digits));
        }
        out.push('\n');
    }
    out
}

pub fn classification_table(result: &ClassificationResult) -> String {
    let mut rows = vec![["graph6", "n", "edges", "max_degree", "min_kappa"].map(String::from).to_vec()];
    for s in &result.survivors {
        rows.push(vec![
            emit_graph6(&s.graph),
            s.graph.n().to_string(),
            s.graph.edge_count().to_string(),
            s.graph.max_degree().to_string(),
            to_fraction_string(&s.report.min_kappa),
        ]);
    }
    let mut out = format!("n_max {}  survivors {}\n", result.n_max, result.survivors.len());
    out.push_str(&columns(&rows));
    let _ = writeln!(out, "matched_known_set {}", result.matched_known_set);
    out
}

pub fn classification_json(result: &ClassificationResult) -> Result<String> {
    let json = JsonClassification {
        n_max: result.n_max,
        matched_known_set: result.matched_known_set,
        survivors: result
            .survivors
            .iter()
            .map(|s| JsonSurvivor {
                graph6: emit_graph6(&s.graph),
                n: s.graph.n(),
                edges: s.graph.edge_count(),
                max_degree: s.graph.max_degree(),
                min_kappa: to_fraction_string(&s.report.min_kappa),
            })
            .collect(),
    };
    Ok(serde_json::to_string_pretty(&json)? + "\n")
}

pub fn verification_table(report: &VerificationReport) -> String {
    let mut out = format!(
        "suite {}\ngraphs_checked {}\ninstances_checked {}\nviolations {}\n",
        report.suite,
        report.graphs_checked,
        report.instances_checked,
        report.violations.len()
    );
    for v in &report.violations {
        let pair = v.pair.map(|(a, b)| format!(" {a}-{b}")).unwrap_or_default();
        let _ = writeln!(out, "  {}{pair}: {}", v.graph6, v.message);
    }
    out
}
