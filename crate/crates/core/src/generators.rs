//! Signed degree-corrected stochastic block model and small random graph helpers.
//!
//! Randomness comes from ChaCha8 seeded with `seed_from_u64`. Uniform draws
//! take the top 53 bits of `next_u64`, so the stream is portable. The SSBM
//! consumes draws in a fixed order:
//!
//! 1. one draw per node for its group (or a Fisher-Yates shuffle of an exactly
//!    balanced label list when `balanced_groups` is set, from the last index down),
//! 2. for each pair `u < v` in lexicographic order, one draw deciding the edge,
//! 3. immediately after an accepted edge, one draw deciding its sign.
//!
//! Ensembles use seed `seed + replica`.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

/// Portable uniform stream on `[0, 1)`.
pub struct Uniform(ChaCha8Rng);

impl Uniform {
    pub fn new(seed: u64) -> Self {
        Uniform(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn next_f64(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `0..bound`.
    pub fn below(&mut self, bound: usize) -> usize {
        ((self.next_f64() * bound as f64) as usize).min(bound.saturating_sub(1))
    }
}

/// Parameters of the signed stochastic block model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SbmConfig {
    pub n: usize,
    pub groups: usize,
    pub rho_plus_in: f64,
    pub rho_plus_out: f64,
    pub rho_minus_in: f64,
    pub rho_minus_out: f64,
    /// Per-node activity θ_v; `None` means all ones.
    pub activities: Option<Vec<f64>>,
    pub seed: u64,
    /// Assign group sizes as evenly as possible instead of independently.
    pub balanced_groups: bool,
}

impl Default for SbmConfig {
    fn default() -> Self {
        SbmConfig {
            n: 100,
            groups: 2,
            rho_plus_in: 0.2,
            rho_plus_out: 0.02,
            rho_minus_in: 0.0,
            rho_minus_out: 0.2,
            activities: None,
            seed: 0,
            balanced_groups: false,
        }
    }
}

/// A sampled graph with its planted group labels.
#[derive(Debug, Clone, PartialEq)]
pub struct SbmSample {
    pub graph: SignedGraph,
    pub ground_truth: Vec<usize>,
}

impl SbmConfig {
    pub fn validate(&self) -> Result<()> {
        if self.groups == 0 {
            return Err(Error::InvalidArgument("groups must be at least 1".into()));
        }
        for (name, v) in [
            ("rho_plus_in", self.rho_plus_in),
            ("rho_plus_out", self.rho_plus_out),
            ("rho_minus_in", self.rho_minus_in),
            ("rho_minus_out", self.rho_minus_out),
        ] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Error::InvalidArgument(format!("{name} must be a nonnegative number, got {v}")));
            }
        }
        if let Some(act) = &self.activities {
            if act.len() != self.n {
                return Err(Error::Dimension {
                    expected: self.n,
                    actual: act.len(),
                });
            }
            if act.iter().any(|&t| !(t.is_finite() && t > 0.0)) {
                return Err(Error::InvalidArgument("activities must be positive".into()));
            }
        }
        Ok(())
    }

    /// Copy with seed `seed + replica`.
    pub fn replica(&self, replica: u64) -> SbmConfig {
        SbmConfig {
            seed: self.seed.wrapping_add(replica),
            ..self.clone()
        }
    }
}

/// Draw one signed SBM graph.
pub fn sample_ssbm(config: &SbmConfig) -> Result<SbmSample> {
    config.validate()?;
    let n = config.n;
    let mut rng = Uniform::new(config.seed);
    let groups = if config.balanced_groups {
        let mut labels: Vec<usize> = (0..n).map(|i| i % config.groups).collect();
        for i in (1..n).rev() {
            let j = rng.below(i + 1);
            labels.swap(i, j);
        }
        labels
    } else {
        (0..n).map(|_| rng.below(config.groups)).collect()
    };
    let activity = |v: usize| config.activities.as_ref().map_or(1.0, |a| a[v]);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let (plus, minus) = if groups[u] == groups[v] {
                (config.rho_plus_in, config.rho_minus_in)
            } else {
                (config.rho_plus_out, config.rho_minus_out)
            };
            let lambda = activity(u) * activity(v) * (plus + minus);
            let present = rng.next_f64() < 1.0 - (-lambda).exp();
            if present {
                let sign = if rng.next_f64() < plus / (plus + minus) { Sign::Pos } else { Sign::Neg };
                edges.push((u, v, sign));
            }
        }
    }
    Ok(SbmSample {
        graph: SignedGraph::new(n, edges)?,
        ground_truth: groups,
    })
}

/// Erdős–Rényi graph with each edge present with probability `p`, negative with probability `neg`.
pub fn erdos_renyi_signed(n: usize, p: f64, neg: f64, seed: u64) -> SignedGraph {
    let mut rng = Uniform::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                let sign = if rng.next_f64() < neg { Sign::Neg } else { Sign::Pos };
                edges.push((u, v, sign));
            }
        }
    }
    SignedGraph::new(n, edges).expect("generated edges are simple")
}

/// Connected signed graph: a random spanning tree plus Erdős–Rényi extras.
pub fn random_connected_signed(n: usize, p: f64, neg: f64, seed: u64) -> SignedGraph {
    let mut rng = Uniform::new(seed);
    let mut present = vec![vec![false; n]; n];
    for v in 1..n {
        let u = rng.below(v);
        present[u][v] = true;
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                present[u][v] = true;
            }
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if present[u][v] {
                let sign = if rng.next_f64() < neg { Sign::Neg } else { Sign::Pos };
                edges.push((u, v, sign));
            }
        }
    }
    SignedGraph::new(n, edges).expect("generated edges are simple")
}

/// Two communities of six nodes, each split into two factions of three.
///
/// Nodes `0..3 | 3..6` and `6..9 | 9..12` are the faction pairs. Edges inside
/// a faction are positive and edges between the two factions of a community
/// are negative, except the positive edge `(7, 10)` which frustrates the
/// second community. Two sparse edges join the communities.
pub fn two_level_network() -> SignedGraph {
    let mut edges = Vec::new();
    for f in [0, 3, 6, 9] {
        for u in f..f + 3 {
            for v in u + 1..f + 3 {
                edges.push((u, v, Sign::Pos));
            }
        }
    }
    for (a, b) in [(0, 3), (6, 9)] {
        for u in a..a + 3 {
            for v in b..b + 3 {
                let sign = if (u, v) == (7, 10) { Sign::Pos } else { Sign::Neg };
                edges.push((u, v, sign));
            }
        }
    }
    edges.push((2, 6, Sign::Pos));
    edges.push((5, 9, Sign::Neg));
    SignedGraph::new(12, edges).expect("fixed edge list is simple")
}

/// Connected random edges inside `lo..hi`: a spanning tree plus extras with probability `p`.
fn connected_block(rng: &mut Uniform, lo: usize, hi: usize, p: f64, present: &mut [Vec<bool>]) {
    for v in lo + 1..hi {
        let u = lo + rng.below(v - lo);
        present[u][v] = true;
    }
    for u in lo..hi {
        for v in u + 1..hi {
            if rng.next_f64() < p {
                present[u][v] = true;
            }
        }
    }
}

/// Two groups of `half` nodes joined by exactly two edges; every sign is positive with probability 0.6.
pub fn sparse_community_pair(half: usize, seed: u64) -> SignedGraph {
    let n = 2 * half;
    let mut rng = Uniform::new(seed);
    let mut present = vec![vec![false; n]; n];
    connected_block(&mut rng, 0, half, 0.4, &mut present);
    connected_block(&mut rng, half, n, 0.4, &mut present);
    let mut bridges = 0;
    while bridges < 2 {
        let (u, v) = (rng.below(half), half + rng.below(half));
        if !present[u][v] {
            present[u][v] = true;
            bridges += 1;
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if present[u][v] {
                let sign = if rng.next_f64() < 0.6 { Sign::Pos } else { Sign::Neg };
                edges.push((u, v, sign));
            }
        }
    }
    SignedGraph::new(n, edges).expect("generated edges are simple")
}

/// Two positive groups of `half` nodes with dense negative links between them and one positive cross edge.
pub fn dense_faction_pair(half: usize, seed: u64) -> SignedGraph {
    let n = 2 * half;
    let mut rng = Uniform::new(seed);
    let mut present = vec![vec![false; n]; n];
    connected_block(&mut rng, 0, half, 0.4, &mut present);
    connected_block(&mut rng, half, n, 0.4, &mut present);
    for u in 0..half {
        for v in half..n {
            present[u][v] = rng.next_f64() < 0.5;
        }
    }
    let frustrated = (rng.below(half), half + rng.below(half));
    present[frustrated.0][frustrated.1] = true;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if present[u][v] {
                let cross = (u < half) != (v < half);
                let sign = if cross && (u, v) != frustrated { Sign::Neg } else { Sign::Pos };
                edges.push((u, v, sign));
            }
        }
    }
    SignedGraph::new(n, edges).expect("generated edges are simple")
}
