//! Text and JSON file formats for graphs and related inputs.
//!
//! Edge-list text: first significant line holds `n`, each further line one
//! `u v` edge (1-based); blank lines and `#` comments are ignored. JSON:
//! `{"n": 4, "edges": [[2,1],[2,3]]}`. Both reject `n = 0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{DescentSet, HInversionSet, HessenbergFunction};
use crate::graph::RestrictionGraph;

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(u32, u32)>,
}

#[derive(Serialize, Deserialize)]
struct DescentJson {
    n: usize,
    descents: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct HessenbergJson {
    h: Vec<u32>,
}

fn graph_from_parts(n: usize, edges: Vec<(u32, u32)>) -> Result<RestrictionGraph> {
    if n == 0 {
        return Err(Error::Parse("n must be positive".into()));
    }
    RestrictionGraph::new(n, edges).map_err(|e| Error::Parse(e.to_string()))
}

/// Parse the edge-list text format.
pub fn parse_graph_text(s: &str) -> Result<RestrictionGraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in s.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |m: String| Error::Parse(format!("line {}: {}", lineno + 1, m));
        let toks: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => {
                if toks.len() != 1 {
                    return Err(bad("expected the vertex count alone".into()));
                }
                n = Some(
                    toks[0]
                        .parse()
                        .map_err(|_| bad(format!("bad vertex count {:?}", toks[0])))?,
                );
            }
            Some(_) => {
                if toks.len() != 2 {
                    return Err(bad(format!("expected `u v`, got {line:?}")));
                }
                let u = toks[0]
                    .parse()
                    .map_err(|_| bad(format!("bad vertex {:?}", toks[0])))?;
                let v = toks[1]
                    .parse()
                    .map_err(|_| bad(format!("bad vertex {:?}", toks[1])))?;
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or_else(|| Error::Parse("empty input".into()))?;
    graph_from_parts(n, edges)
}

/// Emit the edge-list text format.
pub fn graph_to_text(g: &RestrictionGraph) -> String {
    let mut out = format!("{}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph_json(s: &str) -> Result<RestrictionGraph> {
    let gj: GraphJson =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad graph JSON: {e}")))?;
    graph_from_parts(gj.n, gj.edges)
}

pub fn graph_to_json(g: &RestrictionGraph) -> String {
    serde_json::to_string(&GraphJson {
        n: g.n(),
        edges: g.edges().to_vec(),
    })
    .expect("graph serializes")
}

/// Parse a graph from either format, keyed on a leading `{`.
pub fn parse_graph_auto(s: &str) -> Result<RestrictionGraph> {
    if s.trim_start().starts_with('{') {
        parse_graph_json(s)
    } else {
        parse_graph_text(s)
    }
}

/// Parse a descent set from `n=5; D={1,3}` or `{"n":5,"descents":[1,3]}`.
pub fn parse_descents_auto(s: &str) -> Result<DescentSet> {
    if s.trim_start().starts_with('{') {
        let dj: DescentJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad descent JSON: {e}")))?;
        DescentSet::new(dj.n, dj.descents)
    } else {
        DescentSet::parse_text(s)
    }
}

pub fn descents_to_json(d: &DescentSet) -> String {
    serde_json::to_string(&DescentJson {
        n: d.n(),
        descents: d.positions().collect(),
    })
    .expect("descent set serializes")
}

/// Parse a window function from `h=2,3,4,5,5` or `{"h":[2,3,4,5,5]}`.
pub fn parse_hessenberg_auto(s: &str) -> Result<HessenbergFunction> {
    if s.trim_start().starts_with('{') {
        let hj: HessenbergJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad h JSON: {e}")))?;
        HessenbergFunction::new(hj.h)
    } else {
        HessenbergFunction::parse_text(s)
    }
}

pub fn hessenberg_to_json(h: &HessenbergFunction) -> String {
    serde_json::to_string(&HessenbergJson {
        h: h.as_slice().to_vec(),
    })
    .expect("h serializes")
}

/// Parse an inversion-set file: one `i j` pair per line, blank lines and `#`
/// comments ignored; `n` comes from the accompanying window function.
pub fn parse_inversion_pairs(s: &str, n: usize) -> Result<HInversionSet> {
    let mut pairs = Vec::new();
    for (lineno, raw) in s.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = || Error::Parse(format!("line {}: expected `i j`, got {line:?}", lineno + 1));
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(bad());
        }
        let i = toks[0].parse().map_err(|_| bad())?;
        let j = toks[1].parse().map_err(|_| bad())?;
        pairs.push((i, j));
    }
    HInversionSet::new(n, pairs)
}
