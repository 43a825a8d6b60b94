//! Benchmark sweep comparing three spectral bipartition methods on SSBM graphs.
//!
//! Replica `r` of grid point `i` samples with seed `seed + i·runs + r`. Rows
//! are sorted by grid point, method and run so the output never depends on
//! scheduling.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::clustering::detect_two_way;
use crate::error::{Error, Result};
use crate::exec::{map_indexed, Execution};
use crate::generators::{sample_ssbm, SbmConfig};
use crate::graph::SignedGraph;
use crate::io::KeyValues;
use crate::matrix::{build_bundle, normalized_laplacian, SymMatrix};
use crate::metrics::{ari, nmi};
use crate::spectral::{eig_sym, fiedler_plain};

/// Spectral bipartition method.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Fiedler vector of the expanded Laplacian.
    Gremban,
    /// Bottom eigenvector of the signed Laplacian.
    Signed,
    /// Fiedler vector of the unsigned Laplacian.
    Unsigned,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Gremban, Method::Signed, Method::Unsigned];

    pub fn name(self) -> &'static str {
        match self {
            Method::Gremban => "gremban",
            Method::Signed => "signed",
            Method::Unsigned => "unsigned",
        }
    }

    pub fn parse(s: &str) -> Option<Method> {
        Method::ALL.into_iter().find(|m| m.name() == s)
    }
}

/// How `rho_minus_out` follows the grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum RhoMinusOut {
    /// `total − rho_minus_in`.
    Complement { total: f64 },
    /// One value per grid point.
    Grid(Vec<f64>),
}

/// Parameters of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub n: usize,
    pub runs: usize,
    pub rho_plus_in: f64,
    pub rho_plus_out: f64,
    pub rho_minus_in_grid: Vec<f64>,
    pub rho_minus_out: RhoMinusOut,
    pub seed: u64,
    pub normalized: bool,
    pub methods: Vec<Method>,
    pub balanced_groups: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            n: 100,
            runs: 20,
            rho_plus_in: 0.2,
            rho_plus_out: 0.02,
            rho_minus_in_grid: (0..=10).map(|i| i as f64 * 0.02).collect(),
            rho_minus_out: RhoMinusOut::Complement { total: 0.22 },
            seed: 0,
            normalized: true,
            methods: Method::ALL.to_vec(),
            balanced_groups: true,
        }
    }
}

const SWEEP_KEYS: [&str; 10] = [
    "n",
    "runs",
    "rho_plus_in",
    "rho_plus_out",
    "rho_minus_in_grid",
    "rho_minus_out",
    "seed",
    "normalized",
    "methods",
    "balanced_groups",
];

/// Parse `0.22 - rho_minus_in` style rules or an explicit list.
fn parse_rho_minus_out(raw: &str, line: usize) -> Result<RhoMinusOut> {
    let compact: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
    let compact = compact.replace('−', "-");
    if let Some(total) = compact.strip_suffix("-rho_minus_in") {
        let total = total.parse().map_err(|_| Error::Parse { line, msg: format!("invalid rule `{raw}`") })?;
        return Ok(RhoMinusOut::Complement { total });
    }
    raw.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Parse { line, msg: format!("invalid number `{t}` in rho_minus_out") }))
        .collect::<Result<Vec<f64>>>()
        .map(RhoMinusOut::Grid)
}

impl SweepConfig {
    /// Read a `key = value` config; missing keys keep their defaults.
    pub fn from_key_values(kv: &KeyValues) -> Result<Self> {
        kv.check_keys(&SWEEP_KEYS)?;
        let d = SweepConfig::default();
        let methods = match kv.get_list("methods") {
            None => d.methods,
            Some(names) => names
                .iter()
                .map(|s| {
                    Method::parse(s).ok_or_else(|| Error::Parse {
                        line: kv.line_of("methods"),
                        msg: format!("unknown method `{s}`"),
                    })
                })
                .collect::<Result<_>>()?,
        };
        let cfg = SweepConfig {
            n: kv.get_usize("n")?.unwrap_or(d.n),
            runs: kv.get_usize("runs")?.unwrap_or(d.runs),
            rho_plus_in: kv.get_f64("rho_plus_in")?.unwrap_or(d.rho_plus_in),
            rho_plus_out: kv.get_f64("rho_plus_out")?.unwrap_or(d.rho_plus_out),
            rho_minus_in_grid: kv.get_f64_list("rho_minus_in_grid")?.unwrap_or(d.rho_minus_in_grid),
            rho_minus_out: match kv.raw("rho_minus_out") {
                None => d.rho_minus_out,
                Some(raw) => parse_rho_minus_out(raw, kv.line_of("rho_minus_out"))?,
            },
            seed: kv.get_u64("seed")?.unwrap_or(d.seed),
            normalized: kv.get_bool("normalized")?.unwrap_or(d.normalized),
            methods,
            balanced_groups: kv.get_bool("balanced_groups")?.unwrap_or(d.balanced_groups),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidArgument(m.into()));
        if self.rho_minus_in_grid.is_empty() {
            return bad("rho_minus_in_grid must be nonempty");
        }
        if self.runs == 0 {
            return bad("runs must be at least 1");
        }
        if self.n < 2 {
            return bad("n must be at least 2");
        }
        if self.methods.is_empty() {
            return bad("methods must be nonempty");
        }
        let mut seen = self.methods.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != self.methods.len() {
            return bad("methods must not repeat");
        }
        if let RhoMinusOut::Grid(v) = &self.rho_minus_out {
            if v.len() != self.rho_minus_in_grid.len() {
                return Err(Error::Dimension {
                    expected: self.rho_minus_in_grid.len(),
                    actual: v.len(),
                });
            }
        }
        for i in 0..self.rho_minus_in_grid.len() {
            self.sbm(i, 0).validate()?;
        }
        Ok(())
    }

    pub fn rho_minus_out_at(&self, i: usize) -> f64 {
        match &self.rho_minus_out {
            RhoMinusOut::Complement { total } => total - self.rho_minus_in_grid[i],
            RhoMinusOut::Grid(v) => v[i],
        }
    }

    /// Generator config of replica `run` at grid point `i`.
    pub fn sbm(&self, i: usize, run: usize) -> SbmConfig {
        SbmConfig {
            n: self.n,
            groups: 2,
            rho_plus_in: self.rho_plus_in,
            rho_plus_out: self.rho_plus_out,
            rho_minus_in: self.rho_minus_in_grid[i],
            rho_minus_out: self.rho_minus_out_at(i),
            activities: None,
            seed: self.seed,
            balanced_groups: self.balanced_groups,
        }
        .replica((i * self.runs + run) as u64)
    }
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub rho_minus_in: f64,
    pub method: Method,
    pub run: usize,
    pub ari: f64,
    pub nmi: f64,
    /// `λ₂(L̄) − λ₁(L)`; NaN if either spectrum is unavailable.
    pub lambda_gap: f64,
}

fn maybe_normalized(m: SymMatrix, g: &SignedGraph, normalized: bool) -> Result<SymMatrix> {
    if normalized {
        let k: Vec<f64> = g.degrees().into_iter().map(|d| d as f64).collect();
        normalized_laplacian(&m, &k)
    } else {
        Ok(m)
    }
}

fn sign_labels(v: &[f64]) -> Vec<usize> {
    let tol = 1e-8 * v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    v.iter().map(|&x| usize::from(x < -tol)).collect()
}

/// Spectral quantities of the signed and unsigned Laplacians of one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct BaselineSpectra {
    /// Split by the bottom eigenvector of `L`.
    pub signed_labels: Vec<usize>,
    /// Split by the Fiedler vector of `L̄`.
    pub unsigned_labels: Vec<usize>,
    pub lambda1_signed: f64,
    pub lambda2_unsigned: f64,
}

/// Bottom of `L` and Fiedler pair of `L̄`, optionally degree-normalized.
pub fn baseline_spectra(g: &SignedGraph, normalized: bool) -> Result<BaselineSpectra> {
    let b = build_bundle(g);
    let l = eig_sym(&maybe_normalized(b.l, g, normalized)?)?;
    let lbar = eig_sym(&maybe_normalized(b.l_bar, g, normalized)?)?;
    let trivial: Vec<f64> = if normalized {
        g.degrees().into_iter().map(|d| (d as f64).sqrt()).collect()
    } else {
        vec![1.0; g.node_count()]
    };
    let f = fiedler_plain(&lbar, Some(&trivial))?;
    Ok(BaselineSpectra {
        signed_labels: sign_labels(&l.eigenvectors[0]),
        unsigned_labels: sign_labels(&f.psi2),
        lambda1_signed: l.eigenvalues[0],
        lambda2_unsigned: f.lambda2,
    })
}

fn score(truth: &[usize], labels: Result<Vec<usize>>) -> (f64, f64) {
    match labels {
        Ok(l) => (ari(truth, &l).unwrap_or(0.0), nmi(truth, &l).unwrap_or(0.0)),
        Err(_) => (0.0, 0.0),
    }
}

/// Rows of one replica, in method order.
pub fn run_replica(cfg: &SweepConfig, i: usize, run: usize) -> Result<Vec<SweepRow>> {
    let sample = sample_ssbm(&cfg.sbm(i, run))?;
    let g = &sample.graph;
    let base = baseline_spectra(g, cfg.normalized);
    let gap = base.as_ref().map_or(f64::NAN, |b| b.lambda2_unsigned - b.lambda1_signed);
    let mut methods = cfg.methods.clone();
    methods.sort();
    Ok(methods
        .into_iter()
        .map(|method| {
            let labels = match method {
                Method::Gremban => detect_two_way(g, cfg.normalized).map(|d| d.labels),
                Method::Signed => base.clone().map(|b| b.signed_labels),
                Method::Unsigned => base.clone().map(|b| b.unsigned_labels),
            };
            let (ari, nmi) = score(&sample.ground_truth, labels);
            SweepRow {
                rho_minus_in: cfg.rho_minus_in_grid[i],
                method,
                run,
                ari,
                nmi,
                lambda_gap: gap,
            }
        })
        .collect())
}

/// Run every replica and return rows sorted by grid point, method and run.
pub fn run_sweep(cfg: &SweepConfig, exec: Execution) -> Result<Vec<SweepRow>> {
    cfg.validate()?;
    let total = cfg.rho_minus_in_grid.len() * cfg.runs;
    let per: Vec<Result<Vec<SweepRow>>> = map_indexed(exec, total, |idx| run_replica(cfg, idx / cfg.runs, idx % cfg.runs));
    let mut keyed = Vec::with_capacity(total * cfg.methods.len());
    for (idx, rows) in per.into_iter().enumerate() {
        for row in rows? {
            keyed.push((idx / cfg.runs, row));
        }
    }
    keyed.sort_by(|(a, ra), (b, rb)| a.cmp(b).then(ra.method.cmp(&rb.method)).then(ra.run.cmp(&rb.run)));
    Ok(keyed.into_iter().map(|(_, r)| r).collect())
}

/// CSV with header `rho_minus_in,method,run,ari,nmi,lambda_gap`.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("rho_minus_in,method,run,ari,nmi,lambda_gap\n");
    for r in rows {
        writeln!(out, "{},{},{},{},{},{}", r.rho_minus_in, r.method.name(), r.run, r.ari, r.nmi, r.lambda_gap).unwrap();
    }
    out
}

/// Per grid point and method averages.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSummary {
    pub rho_minus_in: f64,
    pub method: Method,
    pub mean_ari: f64,
    pub mean_nmi: f64,
    pub mean_lambda_gap: f64,
}

/// Average the rows of each (grid point, method) group. Rows must be sorted.
pub fn summarize(rows: &[SweepRow]) -> Vec<SweepSummary> {
    let mut out: Vec<SweepSummary> = Vec::new();
    let mut start = 0;
    while start < rows.len() {
        let key = (rows[start].rho_minus_in, rows[start].method);
        let end = start + rows[start..].iter().take_while(|r| (r.rho_minus_in, r.method) == key).count();
        let group = &rows[start..end];
        let mean = |f: fn(&SweepRow) -> f64| group.iter().map(f).sum::<f64>() / group.len() as f64;
        out.push(SweepSummary {
            rho_minus_in: key.0,
            method: key.1,
            mean_ari: mean(|r| r.ari),
            mean_nmi: mean(|r| r.nmi),
            mean_lambda_gap: mean(|r| r.lambda_gap),
        });
        start = end;
    }
    out
}
