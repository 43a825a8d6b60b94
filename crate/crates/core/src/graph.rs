//! Signed simple graphs, switching, balance, cut-sets and frustration sets.
//!
//! Edges are stored canonically with `u < v` and sorted, so two graphs are
//! equal exactly when their node counts and signed edge lists agree.
//! Exhaustive oracles (frustration index, edge connectivity) enumerate node
//! subsets as bitmasks and refuse inputs above a configurable cap.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{self, Execution};

/// Default node cap for exhaustive enumeration over switchings or bipartitions.
pub const BRUTE_FORCE_CAP: usize = 20;

/// Edge sign or switching value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn from_i64(s: i64) -> Option<Sign> {
        match s {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn as_f64(self) -> f64 {
        self.value() as f64
    }

    pub fn is_neg(self) -> bool {
        self == Sign::Neg
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Neg
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Pos => "+",
            Sign::Neg => "-",
        })
    }
}

/// A signed edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

/// Simple undirected graph with ±1 edge signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, Sign)>>,
}

/// Node sign assignment θ used to switch a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SwitchingFunction {
    pub theta: Vec<Sign>,
}

/// Two-sided node partition; `side[v]` is 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    pub side: Vec<u8>,
}

/// Outcome of a balance test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Balance {
    pub balanced: bool,
    /// Switching that makes every edge positive; present iff balanced.
    pub witness: Option<SwitchingFunction>,
}

impl SwitchingFunction {
    pub fn identity(n: usize) -> Self {
        SwitchingFunction {
            theta: vec![Sign::Pos; n],
        }
    }

    /// θ with θ(v) = −1 exactly on the given node.
    pub fn elementary(n: usize, v: usize) -> Result<Self> {
        if v >= n {
            return Err(Error::NodeOutOfRange { id: v, n });
        }
        let mut s = Self::identity(n);
        s.theta[v] = Sign::Neg;
        Ok(s)
    }

    /// θ(v) = −1 iff bit v of `mask` is set.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        SwitchingFunction {
            theta: (0..n)
                .map(|v| if (mask >> v) & 1 == 1 { Sign::Neg } else { Sign::Pos })
                .collect(),
        }
    }

    pub fn from_values(values: &[i64]) -> Result<Self> {
        let theta = values
            .iter()
            .map(|&s| Sign::from_i64(s).ok_or_else(|| Error::InvalidArgument(format!("switching value {s} is not ±1"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(SwitchingFunction { theta })
    }

    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }

    pub fn values(&self) -> Vec<i64> {
        self.theta.iter().map(|s| s.value()).collect()
    }

    /// Global sign flip, which leaves every switched graph unchanged.
    pub fn negated(&self) -> Self {
        SwitchingFunction {
            theta: self.theta.iter().map(|&s| -s).collect(),
        }
    }

    /// Representative with θ(0) = +1.
    pub fn normalized(&self) -> Self {
        match self.theta.first() {
            Some(Sign::Neg) => self.negated(),
            _ => self.clone(),
        }
    }
}

impl Bipartition {
    pub fn new(side: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = side.iter().find(|&&s| s > 1) {
            return Err(Error::InvalidPartition(format!("side label {bad} is not 0 or 1")));
        }
        Ok(Bipartition { side })
    }

    /// Node v is on side 1 iff bit v of `mask` is set.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Bipartition {
            side: (0..n).map(|v| ((mask >> v) & 1) as u8).collect(),
        }
    }

    /// Build from the members of side 0.
    pub fn from_set(n: usize, first: &[usize]) -> Result<Self> {
        let mut side = vec![1u8; n];
        for &v in first {
            if v >= n {
                return Err(Error::NodeOutOfRange { id: v, n });
            }
            side[v] = 0;
        }
        Ok(Bipartition { side })
    }

    pub fn len(&self) -> usize {
        self.side.len()
    }

    pub fn is_empty(&self) -> bool {
        self.side.is_empty()
    }

    fn check_proper(&self) -> Result<()> {
        let ones = self.side.iter().filter(|&&s| s == 1).count();
        if ones == 0 || ones == self.side.len() {
            return Err(Error::InvalidPartition("one side is empty".into()));
        }
        Ok(())
    }
}

impl SignedGraph {
    /// Build a graph, canonicalizing each edge to `u < v`.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut list = Vec::new();
        for (a, b, sign) in edges {
            for id in [a, b] {
                if id >= n {
                    return Err(Error::NodeOutOfRange { id, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            list.push(Edge { u, v, sign });
        }
        list.sort();
        for w in list.windows(2) {
            if (w[0].u, w[0].v) == (w[1].u, w[1].v) {
                return Err(Error::DuplicateEdge(w[0].u, w[0].v));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for e in &list {
            adj[e.u].push((e.v, e.sign));
            adj[e.v].push((e.u, e.sign));
        }
        for row in &mut adj {
            row.sort();
        }
        Ok(SignedGraph { n, edges: list, adj })
    }

    /// Build from integer signs (±1).
    pub fn from_signed_edges(n: usize, edges: &[(usize, usize, i64)]) -> Result<Self> {
        let mut list = Vec::with_capacity(edges.len());
        for &(u, v, s) in edges {
            let sign = Sign::from_i64(s).ok_or_else(|| Error::InvalidArgument(format!("edge sign {s} is not ±1")))?;
            list.push((u, v, sign));
        }
        Self::new(n, list)
    }

    pub fn empty(n: usize) -> Self {
        SignedGraph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `v` with the sign of the connecting edge, sorted by id.
    pub fn neighbors(&self, v: usize) -> &[(usize, Sign)] {
        &self.adj[v]
    }

    /// Unsigned degree k(v).
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn sign_of(&self, u: usize, v: usize) -> Option<Sign> {
        let row = self.adj.get(u)?;
        row.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| row[i].1)
    }

    pub fn negative_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.sign.is_neg()).count()
    }

    /// Same graph with every sign flipped.
    pub fn negated(&self) -> SignedGraph {
        let edges = self.edges.iter().map(|e| (e.u, e.v, -e.sign));
        SignedGraph::new(self.n, edges).expect("negation preserves validity")
    }

    /// Same topology with every sign positive.
    pub fn unsigned(&self) -> SignedGraph {
        let edges = self.edges.iter().map(|e| (e.u, e.v, Sign::Pos));
        SignedGraph::new(self.n, edges).expect("unsigning preserves validity")
    }

    /// Component label per node, labels numbered by first appearance.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &self.adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().copied().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Induced subgraph on `nodes` (relabeled in the given order).
    pub fn induced(&self, nodes: &[usize]) -> Result<SignedGraph> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in nodes.iter().enumerate() {
            if v >= self.n {
                return Err(Error::NodeOutOfRange { id: v, n: self.n });
            }
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX)
            .map(|e| (index[e.u], index[e.v], e.sign));
        SignedGraph::new(nodes.len(), edges)
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                actual: len,
            });
        }
        Ok(())
    }

    /// Multiply each edge sign by θ(u)θ(v).
    pub fn switch(&self, theta: &SwitchingFunction) -> Result<SignedGraph> {
        self.check_len(theta.len())?;
        let t = &theta.theta;
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| Edge {
                sign: t[e.u] * t[e.v] * e.sign,
                ..*e
            })
            .collect();
        let mut adj = self.adj.clone();
        for (u, row) in adj.iter_mut().enumerate() {
            for (w, s) in row.iter_mut() {
                *s = t[u] * t[*w] * *s;
            }
        }
        Ok(SignedGraph { n: self.n, edges, adj })
    }

    /// Balance test per component, with a witnessing switching when balanced.
    ///
    /// Each component is rooted at its lowest node with θ = +1, so the witness
    /// is the concatenation of per-component witnesses.
    pub fn is_balanced(&self) -> Balance {
        let mut theta: Vec<Option<Sign>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if theta[s].is_some() {
                continue;
            }
            theta[s] = Some(Sign::Pos);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let tu = theta[u].expect("visited");
                for &(w, sign) in &self.adj[u] {
                    let want = tu * sign;
                    match theta[w] {
                        None => {
                            theta[w] = Some(want);
                            queue.push_back(w);
                        }
                        Some(tw) if tw != want => {
                            return Balance {
                                balanced: false,
                                witness: None,
                            }
                        }
                        _ => {}
                    }
                }
            }
        }
        Balance {
            balanced: true,
            witness: Some(SwitchingFunction {
                theta: theta.into_iter().map(|t| t.expect("all visited")).collect(),
            }),
        }
    }

    /// Edges with endpoints on opposite sides; signs are ignored.
    pub fn cut_set(&self, p: &Bipartition) -> Result<Vec<Edge>> {
        self.check_len(p.len())?;
        p.check_proper()?;
        Ok(self
            .edges
            .iter()
            .filter(|e| p.side[e.u] != p.side[e.v])
            .copied()
            .collect())
    }

    /// Edges that are negative after switching by θ.
    pub fn frustration_set(&self, theta: &SwitchingFunction) -> Result<Vec<Edge>> {
        self.check_len(theta.len())?;
        let t = &theta.theta;
        Ok(self
            .edges
            .iter()
            .filter(|e| (t[e.u] * t[e.v] * e.sign).is_neg())
            .copied()
            .collect())
    }

    fn edge_masks(&self) -> Vec<(u32, u32, bool)> {
        self.edges
            .iter()
            .map(|e| (e.u as u32, e.v as u32, e.sign.is_neg()))
            .collect()
    }

    fn check_cap(&self, cap: usize) -> Result<()> {
        if self.n > cap || self.n > 63 {
            return Err(Error::SizeLimit { n: self.n, cap: cap.min(63) });
        }
        Ok(())
    }

    /// Exact frustration index with the default cap and parallel enumeration.
    pub fn frustration_index(&self) -> Result<(usize, SwitchingFunction)> {
        self.frustration_index_with(BRUTE_FORCE_CAP, Execution::default())
    }

    /// Exact frustration index φ(G) by enumerating the 2^(n−1) switchings with θ(0) = +1.
    ///
    /// Among minimizers the one with the smallest bitmask (bit v set iff θ(v) = −1) wins.
    pub fn frustration_index_with(&self, cap: usize, exec: Execution) -> Result<(usize, SwitchingFunction)> {
        self.check_cap(cap)?;
        if self.n == 0 {
            return Ok((0, SwitchingFunction::identity(0)));
        }
        let edges = self.edge_masks();
        let count = 1u64 << (self.n - 1);
        let (phi, i) = exec::min_by_index(exec, count, |i| frustrated_under(&edges, i << 1))
            .expect("at least one switching");
        Ok((phi, SwitchingFunction::from_mask(self.n, i << 1)))
    }

    /// Exact edge connectivity with the default cap and parallel enumeration.
    pub fn edge_connectivity(&self) -> Result<usize> {
        self.edge_connectivity_with(BRUTE_FORCE_CAP, Execution::default())
            .map(|(k, _)| k)
    }

    /// Exact edge connectivity κ_e(G) with a minimizing bipartition.
    ///
    /// Node 0 is held on side 0; ties go to the smallest side-1 bitmask.
    pub fn edge_connectivity_with(&self, cap: usize, exec: Execution) -> Result<(usize, Bipartition)> {
        self.check_cap(cap)?;
        if self.n < 2 {
            return Err(Error::InvalidArgument("edge connectivity needs at least 2 nodes".into()));
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let edges = self.edge_masks();
        let count = (1u64 << (self.n - 1)) - 1;
        let (kappa, i) = exec::min_by_index(exec, count, |i| crossing_under(&edges, (i + 1) << 1))
            .expect("at least one bipartition");
        Ok((kappa, Bipartition::from_mask(self.n, (i + 1) << 1)))
    }
}

/// Number of edges negative after switching by the node mask.
pub(crate) fn frustrated_under(edges: &[(u32, u32, bool)], mask: u64) -> usize {
    edges
        .iter()
        .filter(|&&(u, v, neg)| ((((mask >> u) ^ (mask >> v)) & 1) == 1) != neg)
        .count()
}

/// Number of edges crossing the node mask.
pub(crate) fn crossing_under(edges: &[(u32, u32, bool)], mask: u64) -> usize {
    edges
        .iter()
        .filter(|&&(u, v, _)| (((mask >> u) ^ (mask >> v)) & 1) == 1)
        .count()
}

/// θ with θ(v) = −1 iff v occurs an odd number of times in `vs`.
pub fn compose_elementary_switchings(vs: &[usize], n: usize) -> Result<SwitchingFunction> {
    let mut theta = SwitchingFunction::identity(n);
    for &v in vs {
        if v >= n {
            return Err(Error::NodeOutOfRange { id: v, n });
        }
        theta.theta[v] = -theta.theta[v];
    }
    Ok(theta)
}
