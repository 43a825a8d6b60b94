//! Text formats: signed edge lists, expansions, key=value configs and trajectory CSV.
//!
//! Signed edge list:
//!
//! ```text
//! # comment
//! n 4
//! # ground_truth: 0 0 1 1
//! 0 1 +1
//! 1 2 -
//! ```
//!
//! Without an `n` header the node count is one more than the largest id.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::expansion::{GrembanGraph, Polarity, UnsignedGraph};
use crate::graph::{Sign, SignedGraph};
use crate::dynamics::{MetastabilityProfile, Trajectory};

/// A parsed signed edge list.
#[derive(Debug, Clone, PartialEq)]
pub struct SignedEdgeList {
    pub graph: SignedGraph,
    pub ground_truth: Option<Vec<usize>>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse().map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

fn parse_sign(tok: &str, line: usize) -> Result<Sign> {
    match tok {
        "+" | "+1" | "1" => Ok(Sign::Pos),
        "-" | "-1" | "−" | "−1" => Ok(Sign::Neg),
        _ => Err(parse_err(line, format!("invalid sign `{tok}`"))),
    }
}

/// Content after `# <key>:` on a comment line.
fn directive<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    let rest = line.strip_prefix('#')?.trim_start();
    rest.strip_prefix(key)?.trim_start().strip_prefix(':').map(str::trim)
}

fn parse_labels(body: &str, line: usize) -> Result<Vec<usize>> {
    body.split_whitespace().map(|t| parse_usize(t, line, "label")).collect()
}

/// Parse a signed edge list.
pub fn parse_signed_edge_list(text: &str) -> Result<SignedEdgeList> {
    let mut declared = None;
    let mut ground_truth = None;
    let mut edges = Vec::new();
    let mut max_id = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let s = raw.trim();
        if s.is_empty() {
            continue;
        }
        if s.starts_with('#') {
            if let Some(body) = directive(s, "ground_truth") {
                ground_truth = Some(parse_labels(body, line)?);
            }
            continue;
        }
        let toks: Vec<&str> = s.split_whitespace().collect();
        match toks.as_slice() {
            ["n", count] => {
                if declared.is_some() || !edges.is_empty() {
                    return Err(parse_err(line, "`n` header must come once, before any edge"));
                }
                declared = Some(parse_usize(count, line, "node count")?);
            }
            [u, v, sign] => {
                let u = parse_usize(u, line, "node id")?;
                let v = parse_usize(v, line, "node id")?;
                let sign = parse_sign(sign, line)?;
                max_id = Some(max_id.unwrap_or(0).max(u).max(v));
                edges.push((u, v, sign, line));
            }
            _ => return Err(parse_err(line, format!("expected `u v sign`, got `{s}`"))),
        }
    }
    let n = match (declared, max_id) {
        (Some(n), Some(m)) if m >= n => {
            let bad = edges.iter().find(|e| e.0.max(e.1) >= n).expect("some edge exceeds n");
            return Err(parse_err(bad.3, format!("node id {} out of range for n = {n}", bad.0.max(bad.1))));
        }
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => ground_truth.as_ref().map_or(0, Vec::len),
    };
    if let Some(gt) = &ground_truth {
        if gt.len() != n {
            return Err(Error::Dimension { expected: n, actual: gt.len() });
        }
    }
    // Re-raise graph construction errors with the offending line.
    let mut seen = std::collections::HashSet::new();
    for &(u, v, _, line) in &edges {
        if u == v {
            return Err(parse_err(line, format!("self-loop at node {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line, format!("duplicate edge ({u}, {v})")));
        }
    }
    let graph = SignedGraph::new(n, edges.into_iter().map(|(u, v, s, _)| (u, v, s)))?;
    Ok(SignedEdgeList { graph, ground_truth })
}

/// Serialize a signed graph, with an `n` header and optional ground truth.
pub fn write_signed_edge_list(g: &SignedGraph, ground_truth: Option<&[usize]>) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.node_count()).unwrap();
    if let Some(gt) = ground_truth {
        let labels: Vec<String> = gt.iter().map(usize::to_string).collect();
        writeln!(out, "# ground_truth: {}", labels.join(" ")).unwrap();
    }
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.u, e.v, if e.sign == Sign::Pos { "+1" } else { "-1" }).unwrap();
    }
    out
}

/// Serialize an expansion as an unsigned edge list with involution and polarity directives.
pub fn write_gremban(gg: &GrembanGraph) -> String {
    let mut out = String::new();
    let pairs: Vec<String> = (0..gg.node_count())
        .filter(|&x| x < gg.eta(x))
        .map(|x| format!("{}↔{}", x, gg.eta(x)))
        .collect();
    writeln!(out, "# involution: {}", pairs.join(" ")).unwrap();
    let pol: Vec<&str> = gg.polarity().iter().map(|p| if *p == Polarity::Plus { "+" } else { "-" }).collect();
    writeln!(out, "# polarity: {}", pol.join(" ")).unwrap();
    writeln!(out, "n {}", gg.node_count()).unwrap();
    for &(u, v) in gg.graph().edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parse the format produced by [`write_gremban`]. Involution pairs may use `↔` or `<->`.
pub fn parse_gremban(text: &str) -> Result<GrembanGraph> {
    let mut n = None;
    let mut pairs = Vec::new();
    let mut polarity = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let s = raw.trim();
        if s.is_empty() {
            continue;
        }
        if s.starts_with('#') {
            if let Some(body) = directive(s, "involution") {
                for tok in body.split_whitespace() {
                    let (a, b) = tok
                        .split_once('↔')
                        .or_else(|| tok.split_once("<->"))
                        .ok_or_else(|| parse_err(line, format!("invalid involution pair `{tok}`")))?;
                    pairs.push((parse_usize(a, line, "node id")?, parse_usize(b, line, "node id")?, line));
                }
            } else if let Some(body) = directive(s, "polarity") {
                let p: Result<Vec<Polarity>> = body
                    .split_whitespace()
                    .map(|t| match t {
                        "+" => Ok(Polarity::Plus),
                        "-" => Ok(Polarity::Minus),
                        _ => Err(parse_err(line, format!("invalid polarity `{t}`"))),
                    })
                    .collect();
                polarity = Some(p?);
            }
            continue;
        }
        let toks: Vec<&str> = s.split_whitespace().collect();
        match toks.as_slice() {
            ["n", count] => n = Some(parse_usize(count, line, "node count")?),
            [u, v] => edges.push((parse_usize(u, line, "node id")?, parse_usize(v, line, "node id")?)),
            _ => return Err(parse_err(line, format!("expected `u v`, got `{s}`"))),
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing `n` header"))?;
    let polarity = polarity.ok_or_else(|| parse_err(0, "missing `# polarity:` line"))?;
    if polarity.len() != n {
        return Err(Error::Dimension { expected: n, actual: polarity.len() });
    }
    let mut involution = vec![usize::MAX; n];
    for (a, b, line) in pairs {
        if a >= n || b >= n {
            return Err(parse_err(line, format!("involution pair {a}↔{b} out of range")));
        }
        if involution[a] != usize::MAX || involution[b] != usize::MAX {
            return Err(parse_err(line, format!("node repeated in involution pair {a}↔{b}")));
        }
        involution[a] = b;
        involution[b] = a;
    }
    if let Some(x) = involution.iter().position(|&y| y == usize::MAX) {
        return Err(parse_err(0, format!("node {x} missing from involution")));
    }
    GrembanGraph::from_polarized(UnsignedGraph::new(n, edges)?, involution, polarity)
}

/// Flat `key = value` configuration; `#` starts a comment line.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct KeyValues {
    entries: BTreeMap<String, (String, usize)>,
}

impl KeyValues {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let s = raw.trim();
            if s.is_empty() || s.starts_with('#') {
                continue;
            }
            let (k, v) = s.split_once('=').ok_or_else(|| parse_err(line, format!("expected `key = value`, got `{s}`")))?;
            let k = k.trim().to_string();
            if k.is_empty() {
                return Err(parse_err(line, "empty key"));
            }
            if entries.insert(k.clone(), (v.trim().to_string(), line)).is_some() {
                return Err(parse_err(line, format!("duplicate key `{k}`")));
            }
        }
        Ok(KeyValues { entries })
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(|(v, _)| v.as_str())
    }

    /// Fail on any key outside `allowed`.
    pub fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        match self.entries.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            Some((k, (_, line))) => Err(parse_err(*line, format!("unknown key `{k}`"))),
            None => Ok(()),
        }
    }

    fn typed<T: std::str::FromStr>(&self, key: &str, what: &str) -> Result<Option<T>> {
        match self.entries.get(key) {
            None => Ok(None),
            Some((v, line)) => v.parse().map(Some).map_err(|_| parse_err(*line, format!("`{key}` expects {what}, got `{v}`"))),
        }
    }

    pub fn get_f64(&self, key: &str) -> Result<Option<f64>> {
        self.typed(key, "a number")
    }

    pub fn get_usize(&self, key: &str) -> Result<Option<usize>> {
        self.typed(key, "a nonnegative integer")
    }

    pub fn get_u64(&self, key: &str) -> Result<Option<u64>> {
        self.typed(key, "a nonnegative integer")
    }

    pub fn get_bool(&self, key: &str) -> Result<Option<bool>> {
        self.typed(key, "true or false")
    }

    /// Comma- or whitespace-separated numbers.
    pub fn get_f64_list(&self, key: &str) -> Result<Option<Vec<f64>>> {
        let Some((v, line)) = self.entries.get(key) else { return Ok(None) };
        v.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| parse_err(*line, format!("`{key}` has invalid number `{t}`"))))
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }

    /// Comma- or whitespace-separated words.
    pub fn get_list(&self, key: &str) -> Option<Vec<String>> {
        self.raw(key).map(|v| v.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).map(str::to_string).collect())
    }

    /// Line of a key, for error reporting.
    pub fn line_of(&self, key: &str) -> usize {
        self.entries.get(key).map_or(0, |(_, l)| *l)
    }
}

fn lifted_label(gg: &GrembanGraph, x: usize) -> (usize, char) {
    let p = gg.polarized(x);
    (p.base, if p.polarity == Polarity::Plus { '+' } else { '-' })
}

/// Long-format trajectory CSV: `t,node,polarity,value`.
pub fn trajectory_csv(traj: &Trajectory, gg: &GrembanGraph) -> String {
    let mut out = String::from("t,node,polarity,value\n");
    let mut order: Vec<usize> = (0..gg.node_count()).collect();
    order.sort_by_key(|&x| lifted_label(gg, x));
    for (t, x) in traj.times.iter().zip(&traj.states) {
        for &i in &order {
            let (node, pol) = lifted_label(gg, i);
            writeln!(out, "{t},{node},{pol},{}", x[i]).unwrap();
        }
    }
    out
}

/// Projected series CSV: `t,node,net,tot`.
pub fn projection_csv(traj: &Trajectory) -> String {
    let mut out = String::from("t,node,net,tot\n");
    for ((t, net), tot) in traj.times.iter().zip(&traj.net).zip(&traj.tot) {
        for (v, (a, b)) in net.iter().zip(tot).enumerate() {
            writeln!(out, "{t},{v},{a},{b}").unwrap();
        }
    }
    out
}

/// Profile CSV: `t,fiber_coherence,cross_coherence,group_contrast`.
pub fn profile_csv(times: &[f64], p: &MetastabilityProfile) -> String {
    let mut out = String::from("t,fiber_coherence,cross_coherence,group_contrast\n");
    for (i, t) in times.iter().enumerate() {
        writeln!(out, "{t},{},{},{}", p.fiber_coherence[i], p.cross_coherence[i], p.group_contrast[i]).unwrap();
    }
    out
}

/// Parse a whitespace- or comma-separated vector of reals.
pub fn parse_vector(text: &str) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let s = raw.trim();
        if s.starts_with('#') {
            continue;
        }
        for tok in s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            out.push(tok.parse().map_err(|_| parse_err(idx + 1, format!("invalid number `{tok}`")))?);
        }
    }
    Ok(out)
}
