//! Reading and writing graphs and reports.
//!
//! The textual graph format is a header line `n m` followed by m edge
//! lines `u v s` with `0 <= u < v < n` and `s` one of `+1`, `-1`, `+`,
//! `-`. Blank lines and `#` comments are accepted on input; the writer
//! emits the canonical form (edges sorted by (u, v), signs as `+1`/`-1`)
//! so that parse-then-write is byte-stable.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::exterior::WedgePower;
use crate::oracle::{Counterexample, VerificationReport};
use crate::{Error, Result, Sign, SignedGraph};

/// Parse the textual graph format.
pub fn parse_sg(text: &str) -> Result<SignedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parse_field(parts.next(), lineno, "vertex count")?;
    let m: usize = parse_field(parts.next(), lineno, "edge count")?;
    if parts.next().is_some() {
        return Err(Error::Parse(format!(
            "line {lineno}: header has trailing tokens"
        )));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {m} edge lines, found {}", edges.len())))?;
        let mut parts = line.split_whitespace();
        let u: usize = parse_field(parts.next(), lineno, "edge endpoint")?;
        let v: usize = parse_field(parts.next(), lineno, "edge endpoint")?;
        let sign = match parts.next() {
            Some("+1") | Some("+") => Sign::Plus,
            Some("-1") | Some("-") => Sign::Minus,
            Some(other) => {
                return Err(Error::Parse(format!(
                    "line {lineno}: sign must be +1, -1, + or -, got {other:?}"
                )))
            }
            None => return Err(Error::Parse(format!("line {lineno}: missing sign"))),
        };
        if parts.next().is_some() {
            return Err(Error::Parse(format!(
                "line {lineno}: edge line has trailing tokens"
            )));
        }
        if u >= v {
            return Err(Error::Parse(format!(
                "line {lineno}: edges must satisfy u < v, got {u} {v}"
            )));
        }
        edges.push((u, v, sign));
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(Error::Parse(format!(
            "line {lineno}: more than the declared {m} edges"
        )));
    }
    SignedGraph::from_edges(n, edges)
}

fn parse_field(token: Option<&str>, lineno: usize, what: &str) -> Result<usize> {
    token
        .ok_or_else(|| Error::Parse(format!("line {lineno}: missing {what}")))?
        .parse()
        .map_err(|_| Error::Parse(format!("line {lineno}: {what} is not a number")))
}

/// Write the canonical textual form.
pub fn write_sg(g: &SignedGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.num_edges());
    for (u, v, s) in g.edges() {
        out.push_str(&format!("{u} {v} {s}\n"));
    }
    out
}

#[derive(Serialize)]
struct WedgeVertexJson<'a> {
    rank: usize,
    subset: &'a [usize],
}

#[derive(Serialize)]
struct WedgeEdgeJson<'a> {
    u: usize,
    v: usize,
    u_subset: &'a [usize],
    v_subset: &'a [usize],
    base: (usize, usize),
    perm: &'a [usize],
    sign: i64,
}

#[derive(Serialize)]
struct WedgeJson<'a> {
    n: usize,
    k: usize,
    vertex_count: usize,
    edge_count: usize,
    vertices: Vec<WedgeVertexJson<'a>>,
    edges: Vec<WedgeEdgeJson<'a>>,
}

/// JSON export of a power with per-edge provenance: the base edge it
/// came from, the connecting permutation, and the resulting sign.
pub fn wedge_to_json(w: &WedgePower) -> String {
    let doc = WedgeJson {
        n: w.n(),
        k: w.k(),
        vertex_count: w.subsets().len(),
        edge_count: w.edges().len(),
        vertices: w
            .subsets()
            .iter()
            .enumerate()
            .map(|(rank, s)| WedgeVertexJson {
                rank,
                subset: s.elems(),
            })
            .collect(),
        edges: w
            .edges()
            .iter()
            .map(|e| WedgeEdgeJson {
                u: e.u_rank,
                v: e.v_rank,
                u_subset: e.u.elems(),
                v_subset: e.v.elems(),
                base: e.base,
                perm: e.perm.images(),
                sign: e.sign.as_i64(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serialization cannot fail") + "\n"
}

#[derive(Serialize)]
struct WedgeMapJson<'a> {
    n: usize,
    k: usize,
    rank_to_subset: Vec<&'a [usize]>,
}

/// Sidecar mapping vertex ranks of a power back to the subsets they
/// stand for, so textual output stays closed under the operator.
pub fn wedge_map_json(w: &WedgePower) -> String {
    let doc = WedgeMapJson {
        n: w.n(),
        k: w.k(),
        rank_to_subset: w.subsets().iter().map(|s| s.elems()).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serialization cannot fail") + "\n"
}

/// DOT export: vertices labeled by their subsets, negative edges dashed
/// and labeled "-".
pub fn wedge_to_dot(w: &WedgePower) -> String {
    let mut out = String::from("graph wedge {\n");
    for (rank, s) in w.subsets().iter().enumerate() {
        let label = s
            .elems()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join("\u{2227}");
        out.push_str(&format!("  {rank} [label=\"{label}\"];\n"));
    }
    for e in w.edges() {
        if e.sign.is_negative() {
            out.push_str(&format!(
                "  {} -- {} [style=dashed,label=\"-\"];\n",
                e.u_rank, e.v_rank
            ));
        } else {
            out.push_str(&format!("  {} -- {};\n", e.u_rank, e.v_rank));
        }
    }
    out.push_str("}\n");
    out
}

/// Serialization record for a report. Wall-clock timing is deliberately
/// omitted so identical runs produce byte-identical output.
#[derive(Serialize)]
struct ReportExport<'a> {
    claim: &'a str,
    passed: bool,
    instances: usize,
    counterexamples: &'a [Counterexample],
    notes: &'a [String],
    stats: &'a BTreeMap<String, u64>,
}

/// JSON export of verification reports, omitting timing.
pub fn reports_to_json(reports: &[VerificationReport]) -> String {
    let docs: Vec<ReportExport> = reports
        .iter()
        .map(|r| ReportExport {
            claim: &r.claim,
            passed: r.passed(),
            instances: r.instances,
            counterexamples: &r.counterexamples,
            notes: &r.notes,
            stats: &r.stats,
        })
        .collect();
    serde_json::to_string_pretty(&docs).expect("serialization cannot fail") + "\n"
}

/// Human-readable rendering of one report, omitting timing.
pub fn render_report(r: &VerificationReport) -> String {
    let mut out = format!(
        "[{}] {}: {} checks",
        if r.passed() { "PASS" } else { "FAIL" },
        r.claim,
        r.instances
    );
    if !r.counterexamples.is_empty() {
        out.push_str(&format!(", {} counterexamples", r.counterexamples.len()));
    }
    out.push('\n');
    if !r.stats.is_empty() {
        let stats = r
            .stats
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&format!("    stats: {stats}\n"));
    }
    for note in &r.notes {
        out.push_str(&format!("    note: {note}\n"));
    }
    for cx in r.counterexamples.iter().take(5) {
        out.push_str(&format!(
            "    counterexample: {} | k={} | expected {} | got {}\n",
            cx.graph, cx.k, cx.expected, cx.got
        ));
    }
    if r.counterexamples.len() > 5 {
        out.push_str(&format!(
            "    ... and {} more\n",
            r.counterexamples.len() - 5
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::wedge_power;
    use crate::oracle::{check_cycle_power_parity, FactSuiteConfig};

    fn sample() -> SignedGraph {
        SignedGraph::from_edges(4, [(0, 1, Sign::Plus), (1, 2, Sign::Minus), (2, 3, Sign::Plus)])
            .unwrap()
    }

    #[test]
    fn write_then_parse_round_trips() {
        let g = sample();
        let text = write_sg(&g);
        assert_eq!(text, "4 3\n0 1 +1\n1 2 -1\n2 3 +1\n");
        assert_eq!(parse_sg(&text).unwrap(), g);
    }

    #[test]
    fn parser_accepts_shorthand_and_comments() {
        let text = "# a path\n\n4 3\n0 1 +\n1 2 -\n2 3 +1\n";
        let g = parse_sg(text).unwrap();
        assert_eq!(g, sample());
        // Re-writing normalizes to the canonical form.
        assert_eq!(write_sg(&g), "4 3\n0 1 +1\n1 2 -1\n2 3 +1\n");
    }

    #[test]
    fn parser_rejects_malformed_input() {
        let bad = [
            "",
            "2\n",
            "2 1 extra\n0 1 +1\n",
            "2 1\n1 0 +1\n",
            "2 1\n0 0 +1\n",
            "2 1\n0 1 *\n",
            "2 1\n0 1\n",
            "2 2\n0 1 +1\n",
            "2 1\n0 1 +1\n0 1 -1\n",
            "2 1\nx 1 +1\n",
        ];
        for text in bad {
            assert!(
                matches!(parse_sg(text), Err(Error::Parse(_))),
                "accepted {text:?}"
            );
        }
        // Range and duplicate violations surface as their own errors.
        assert!(matches!(
            parse_sg("2 1\n0 5 +1\n"),
            Err(Error::VertexOutOfRange { v: 5, n: 2 })
        ));
    }

    #[test]
    fn first_power_round_trips_byte_stably() {
        let g = sample();
        let w = wedge_power(&g, 1).unwrap();
        assert_eq!(write_sg(w.graph()), write_sg(&g));
    }

    #[test]
    fn json_export_carries_provenance() {
        let g = sample();
        let w = wedge_power(&g, 2).unwrap();
        let text = wedge_to_json(&w);
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["n"], 4);
        assert_eq!(doc["k"], 2);
        assert_eq!(doc["vertices"].as_array().unwrap().len(), 6);
        let edge = &doc["edges"][0];
        assert!(edge["base"].is_array());
        assert!(edge["perm"].is_array());
        assert!(edge["sign"].as_i64().is_some());
        let map: serde_json::Value = serde_json::from_str(&wedge_map_json(&w)).unwrap();
        assert_eq!(map["rank_to_subset"].as_array().unwrap().len(), 6);
        assert_eq!(map["rank_to_subset"][0], serde_json::json!([0, 1]));
    }

    #[test]
    fn dot_export_dashes_negative_edges() {
        let g = sample();
        let w = wedge_power(&g, 2).unwrap();
        let dot = wedge_to_dot(&w);
        assert!(dot.starts_with("graph wedge {"));
        assert!(dot.contains("style=dashed,label=\"-\""));
        assert!(dot.contains("label=\"0\u{2227}1\""));
    }

    #[test]
    fn report_exports_are_timing_free() {
        let report = check_cycle_power_parity(&FactSuiteConfig {
            cycle_n_max: 4,
            ..FactSuiteConfig::quick()
        })
        .unwrap();
        let json = reports_to_json(std::slice::from_ref(&report));
        assert!(!json.contains("elapsed"));
        assert!(json.contains("\"passed\": true"));
        let text = render_report(&report);
        assert!(text.starts_with("[PASS] cycle-powers-balanced-iff-k-odd"));
        assert!(!text.contains("elapsed"));
    }
}
