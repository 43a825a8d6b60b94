//! Gremban expansion of signed graphs.
//!
//! Every node `v` of a signed graph on `n` nodes lifts to two polarized copies.
//! [`expand`] uses the fixed layout `v⁺ = v`, `v⁻ = v + n`, so the involution
//! η is `x ↔ x + n`. Graphs built by [`recognize`] or read from disk may use
//! any layout; the `involution`, `polarity` and `base` arrays carry it.
//!
//! Symmetric bipartitions of `V(𝒢)` come in exactly two families. Either η
//! fixes both blocks (whole fibers on each side, a lifted cut) or η swaps
//! them (every fiber split, a lifted frustration set).

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::graph::{crossing_under, frustrated_under, Bipartition, Edge, Sign, SignedGraph, SwitchingFunction};

/// Default base-node cap for symmetric bipartition enumeration.
pub const SYMMETRIC_CAP: usize = 14;

/// Polarity χ of a lifted node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Polarity {
    Plus,
    Minus,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Plus => Polarity::Minus,
            Polarity::Minus => Polarity::Plus,
        }
    }

    pub fn sign(self) -> Sign {
        match self {
            Polarity::Plus => Sign::Pos,
            Polarity::Minus => Sign::Neg,
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.sign().fmt(f)
    }
}

/// A node of the expansion named by its base node and polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolarizedNode {
    pub base: usize,
    pub polarity: Polarity,
}

/// Simple undirected graph without signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnsignedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl UnsignedGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for id in [a, b] {
                if id >= n {
                    return Err(Error::NodeOutOfRange { id, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        for w in list.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(UnsignedGraph { n, edges: list, adj })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }
}

/// Unsigned double cover with its involution and polarization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrembanGraph {
    graph: UnsignedGraph,
    involution: Vec<usize>,
    polarity: Vec<Polarity>,
    base: Vec<usize>,
}

/// Signed subgraph recovered from a symmetric subgraph of an expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectedSubgraph {
    /// Base ids of the kept fibers, ascending; node `i` of `graph` is `nodes[i]`.
    pub nodes: Vec<usize>,
    pub graph: SignedGraph,
}

/// Which family a symmetric bipartition belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CutKind {
    /// η maps each block to itself.
    Cut,
    /// η exchanges the blocks.
    Frustration,
}

/// Classification of a symmetric bipartition of the expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricCut {
    pub kind: CutKind,
    /// Source edges whose lifts cross the bipartition.
    pub projected_edges: Vec<Edge>,
    /// Source bipartition `π₊` of the blocks, for the cut family.
    pub source_partition: Option<Bipartition>,
    /// Switching with θ(v) = −1 iff `v⁻` lies in block 0, normalized to θ(0) = +1.
    pub witness: Option<SwitchingFunction>,
}

/// Minimum symmetric cut of an expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricConnectivity {
    pub kappa: usize,
    /// The expansion is disconnected, so the minimum is trivially 0.
    pub disconnected: bool,
    /// The projected signed graph is balanced.
    pub source_balanced: bool,
    /// Minimizing bipartition as 0/1 labels over `V(𝒢)`; absent when disconnected.
    pub argmin: Option<Vec<u8>>,
    pub argmin_kind: Option<CutKind>,
}

/// Lift a signed graph: `v⁺ = v`, `v⁻ = v + n`.
pub fn expand(g: &SignedGraph) -> GrembanGraph {
    let n = g.node_count();
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for e in g.edges() {
        match e.sign {
            Sign::Pos => {
                edges.push((e.u, e.v));
                edges.push((e.u + n, e.v + n));
            }
            Sign::Neg => {
                edges.push((e.u, e.v + n));
                edges.push((e.u + n, e.v));
            }
        }
    }
    let graph = UnsignedGraph::new(2 * n, edges).expect("lift of a simple graph is simple");
    GrembanGraph {
        graph,
        involution: (0..2 * n).map(|x| if x < n { x + n } else { x - n }).collect(),
        polarity: (0..2 * n)
            .map(|x| if x < n { Polarity::Plus } else { Polarity::Minus })
            .collect(),
        base: (0..2 * n).map(|x| x % n).collect(),
    }
}

/// Build an expansion from an unsigned graph and a candidate involution.
///
/// Polarities are assigned greedily: the lowest unassigned node becomes `+`
/// and its partner `−`. Base ids number the `+` nodes in increasing order.
pub fn recognize(h: &UnsignedGraph, eta: &[usize]) -> Result<GrembanGraph> {
    let m = h.node_count();
    if eta.len() != m {
        return Err(Error::Dimension { expected: m, actual: eta.len() });
    }
    for (x, &y) in eta.iter().enumerate() {
        if y >= m {
            return Err(Error::NodeOutOfRange { id: y, n: m });
        }
        if y == x {
            return Err(Error::NotGremban(format!("involution has fixed point {x}")));
        }
        if eta[y] != x {
            return Err(Error::NotGremban(format!("involution is not self-inverse at {x}")));
        }
    }
    check_edge_conditions(h, eta)?;
    let mut polarity = vec![None; m];
    let mut base = vec![0; m];
    let mut next = 0;
    for x in 0..m {
        if polarity[x].is_none() {
            polarity[x] = Some(Polarity::Plus);
            polarity[eta[x]] = Some(Polarity::Minus);
            base[x] = next;
            base[eta[x]] = next;
            next += 1;
        }
    }
    Ok(GrembanGraph {
        graph: h.clone(),
        involution: eta.to_vec(),
        polarity: polarity.into_iter().map(|p| p.expect("assigned")).collect(),
        base,
    })
}

fn check_edge_conditions(h: &UnsignedGraph, eta: &[usize]) -> Result<()> {
    for &(u, v) in h.edges() {
        if !h.has_edge(eta[u], eta[v]) {
            return Err(Error::NotGremban(format!(
                "involution is not an automorphism: edge ({u}, {v}) maps to a non-edge"
            )));
        }
    }
    for &(u, v) in h.edges() {
        if v == eta[u] {
            return Err(Error::NotGremban(format!("edge between polarities of one node ({u}, {v})")));
        }
        if h.has_edge(u, eta[v]) {
            return Err(Error::NotGremban(format!(
                "edges ({u}, {v}) and ({u}, {}) are both present",
                eta[v]
            )));
        }
    }
    Ok(())
}

impl GrembanGraph {
    /// Assemble from parts and validate every structural invariant.
    pub fn from_parts(graph: UnsignedGraph, involution: Vec<usize>, polarity: Vec<Polarity>, base: Vec<usize>) -> Result<Self> {
        let gg = GrembanGraph {
            graph,
            involution,
            polarity,
            base,
        };
        gg.validate()?;
        Ok(gg)
    }

    /// Assemble from graph, involution and polarity; base ids number the `+` nodes.
    pub fn from_polarized(graph: UnsignedGraph, involution: Vec<usize>, polarity: Vec<Polarity>) -> Result<Self> {
        let mut base = vec![usize::MAX; polarity.len()];
        let mut next = 0;
        for x in 0..polarity.len() {
            if polarity[x] == Polarity::Plus {
                base[x] = next;
                if let Some(&y) = involution.get(x) {
                    if y < base.len() {
                        base[y] = next;
                    }
                }
                next += 1;
            }
        }
        Self::from_parts(graph, involution, polarity, base)
    }

    pub fn graph(&self) -> &UnsignedGraph {
        &self.graph
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn polarity(&self) -> &[Polarity] {
        &self.polarity
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// Number of nodes of the expansion (2n).
    pub fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    /// Number of base nodes (n).
    pub fn base_count(&self) -> usize {
        self.graph.node_count() / 2
    }

    pub fn eta(&self, x: usize) -> usize {
        self.involution[x]
    }

    /// Expansion node carrying the given base id and polarity.
    pub fn lift(&self, node: PolarizedNode) -> Result<usize> {
        (0..self.node_count())
            .find(|&x| self.base[x] == node.base && self.polarity[x] == node.polarity)
            .ok_or(Error::NodeOutOfRange {
                id: node.base,
                n: self.base_count(),
            })
    }

    pub fn polarized(&self, x: usize) -> PolarizedNode {
        PolarizedNode {
            base: self.base[x],
            polarity: self.polarity[x],
        }
    }

    /// Check every structural invariant of an expansion.
    pub fn validate(&self) -> Result<()> {
        let m = self.graph.node_count();
        for (name, len) in [("involution", self.involution.len()), ("polarity", self.polarity.len()), ("base", self.base.len())] {
            if len != m {
                return Err(Error::NotGremban(format!("{name} has length {len}, expected {m}")));
            }
        }
        if !m.is_multiple_of(2) {
            return Err(Error::NotGremban(format!("odd node count {m}")));
        }
        let eta = &self.involution;
        for x in 0..m {
            let y = eta[x];
            if y >= m {
                return Err(Error::NodeOutOfRange { id: y, n: m });
            }
            if y == x {
                return Err(Error::NotGremban(format!("involution has fixed point {x}")));
            }
            if eta[y] != x {
                return Err(Error::NotGremban(format!("involution is not self-inverse at {x}")));
            }
            if self.polarity[y] == self.polarity[x] {
                return Err(Error::NotGremban(format!("nodes {x} and {y} share a polarity")));
            }
            if self.base[y] != self.base[x] {
                return Err(Error::NotGremban(format!("nodes {x} and {y} have different base ids")));
            }
        }
        let n = m / 2;
        let mut count = vec![0usize; n];
        for &b in &self.base {
            if b >= n {
                return Err(Error::NotGremban(format!("base id {b} out of range")));
            }
            count[b] += 1;
        }
        if count.iter().any(|&c| c != 2) {
            return Err(Error::NotGremban("some base id does not have exactly two lifts".into()));
        }
        check_edge_conditions(&self.graph, eta)
    }

    fn check_nodes(&self, nodes: &[usize]) -> Result<()> {
        let m = self.node_count();
        match nodes.iter().find(|&&x| x >= m) {
            Some(&x) => Err(Error::NodeOutOfRange { id: x, n: m }),
            None => Ok(()),
        }
    }

    /// Image of a node set under η, sorted.
    pub fn involute_nodes(&self, nodes: &[usize]) -> Result<Vec<usize>> {
        self.check_nodes(nodes)?;
        let mut out: Vec<usize> = nodes.iter().map(|&x| self.involution[x]).collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Image of an edge set under η, canonical and sorted.
    pub fn involute_edges(&self, edges: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            self.check_nodes(&[u, v])?;
            let (a, b) = (self.involution[u], self.involution[v]);
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn is_symmetric_nodes(&self, nodes: &[usize]) -> Result<bool> {
        let set: BTreeSet<usize> = nodes.iter().copied().collect();
        let image = self.involute_nodes(nodes)?;
        Ok(image.into_iter().eq(set))
    }

    pub fn is_symmetric_edges(&self, edges: &[(usize, usize)]) -> Result<bool> {
        let set: BTreeSet<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let image = self.involute_edges(edges)?;
        Ok(image.into_iter().eq(set))
    }

    /// True iff η permutes the blocks of a partition of `V(𝒢)`.
    pub fn is_symmetric_partition(&self, blocks: &[Vec<usize>]) -> Result<bool> {
        let labels = self.partition_labels(blocks)?;
        Ok(self.block_permutation(&labels, blocks.len()).is_some())
    }

    /// Labels from blocks, rejecting overlaps and gaps.
    pub fn partition_labels(&self, blocks: &[Vec<usize>]) -> Result<Vec<usize>> {
        let m = self.node_count();
        let mut labels = vec![usize::MAX; m];
        for (b, block) in blocks.iter().enumerate() {
            self.check_nodes(block)?;
            for &x in block {
                if labels[x] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("node {x} appears in two blocks")));
                }
                labels[x] = b;
            }
        }
        if let Some(x) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidPartition(format!("node {x} is not covered")));
        }
        Ok(labels)
    }

    /// Block permutation induced by η, if η maps blocks onto blocks.
    pub fn block_permutation(&self, labels: &[usize], blocks: usize) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; blocks];
        for (x, &l) in labels.iter().enumerate() {
            let target = labels[self.involution[x]];
            if map[l] == usize::MAX {
                map[l] = target;
            } else if map[l] != target {
                return None;
            }
        }
        Some(map)
    }

    /// Project to the signed graph on base ids.
    pub fn project(&self) -> Result<SignedGraph> {
        self.validate()?;
        let edges = self
            .graph
            .edges()
            .iter()
            .filter_map(|&(x, y)| self.project_edge(x, y))
            .collect::<Vec<_>>();
        SignedGraph::new(self.base_count(), edges)
    }

    /// Signed source edge of a lifted edge, reported once per lifted pair.
    fn project_edge(&self, x: usize, y: usize) -> Option<(usize, usize, Sign)> {
        let (lo, hi) = if self.base[x] < self.base[y] { (x, y) } else { (y, x) };
        (self.polarity[lo] == Polarity::Plus)
            .then(|| (self.base[lo], self.base[hi], self.polarity[x].sign() * self.polarity[y].sign()))
    }

    /// Project a symmetric subgraph to the signed subgraph it lifts from.
    pub fn project_subgraph(&self, nodes: &[usize], edges: &[(usize, usize)]) -> Result<ProjectedSubgraph> {
        self.check_nodes(nodes)?;
        let node_set: BTreeSet<usize> = nodes.iter().copied().collect();
        for &(u, v) in edges {
            if !self.graph.has_edge(u, v) {
                return Err(Error::InvalidArgument(format!("({u}, {v}) is not an edge of the expansion")));
            }
            if !node_set.contains(&u) || !node_set.contains(&v) {
                return Err(Error::InvalidArgument(format!("edge ({u}, {v}) leaves the node set")));
            }
        }
        if !self.is_symmetric_nodes(nodes)? {
            return Err(Error::SymmetryViolation("node set is not closed under the involution".into()));
        }
        if !self.is_symmetric_edges(edges)? {
            return Err(Error::SymmetryViolation("edge set is not closed under the involution".into()));
        }
        let bases: BTreeSet<usize> = node_set.iter().map(|&x| self.base[x]).collect();
        let bases: Vec<usize> = bases.into_iter().collect();
        let mut index = vec![usize::MAX; self.base_count()];
        for (i, &b) in bases.iter().enumerate() {
            index[b] = i;
        }
        let signed: Vec<_> = edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .filter_map(|(x, y)| self.project_edge(x, y))
            .map(|(a, b, s)| (index[a], index[b], s))
            .collect();
        Ok(ProjectedSubgraph {
            graph: SignedGraph::new(bases.len(), signed)?,
            nodes: bases,
        })
    }

    /// Base ids of the nodes with polarity `chi`, sorted.
    pub fn one_sided_project_nodes(&self, nodes: &[usize], chi: Polarity) -> Result<Vec<usize>> {
        self.check_nodes(nodes)?;
        let set: BTreeSet<usize> = nodes
            .iter()
            .filter(|&&x| self.polarity[x] == chi)
            .map(|&x| self.base[x])
            .collect();
        Ok(set.into_iter().collect())
    }

    /// One-sided projection of a symmetric partition; empty images are dropped.
    pub fn one_sided_project_partition(&self, blocks: &[Vec<usize>], chi: Polarity) -> Result<Vec<Vec<usize>>> {
        if !self.is_symmetric_partition(blocks)? {
            return Err(Error::SymmetryViolation("partition blocks are not permuted by the involution".into()));
        }
        let mut out = Vec::new();
        for block in blocks {
            let image = self.one_sided_project_nodes(block, chi)?;
            if !image.is_empty() {
                out.push(image);
            }
        }
        Ok(out)
    }

    /// Relabel the expansion by swapping the two lifts of every v with θ(v) = −1.
    pub fn switching_as_permutation(&self, theta: &SwitchingFunction) -> Result<GrembanGraph> {
        if theta.len() != self.base_count() {
            return Err(Error::Dimension {
                expected: self.base_count(),
                actual: theta.len(),
            });
        }
        let perm: Vec<usize> = (0..self.node_count())
            .map(|x| if theta.theta[self.base[x]].is_neg() { self.involution[x] } else { x })
            .collect();
        let graph = UnsignedGraph::new(self.node_count(), self.graph.edges().iter().map(|&(u, v)| (perm[u], perm[v])))?;
        Ok(GrembanGraph { graph, ..self.clone() })
    }

    /// Lifted edges as `(base u, base v, polarities differ)`.
    fn lifted_masks(&self) -> Vec<(u32, u32, bool)> {
        self.graph
            .edges()
            .iter()
            .map(|&(x, y)| (self.base[x] as u32, self.base[y] as u32, self.polarity[x] != self.polarity[y]))
            .collect()
    }

    /// Labels of the symmetric bipartition with enumeration index `i`.
    ///
    /// Indices `0..2^(n−1)` are the block-swapping family, where block 0 holds
    /// `v⁺` iff bit v of `i << 1` is clear. The remaining `2^(n−1) − 1` indices
    /// are the block-fixing family, where fiber v lies in block 1 iff bit v of
    /// `(j + 1) << 1` is set.
    pub fn symmetric_bipartition(&self, i: u64) -> Option<(CutKind, Vec<u8>)> {
        let n = self.base_count();
        if n == 0 || n > 63 {
            return None;
        }
        let half = 1u64 << (n - 1);
        let (kind, mask) = if i < half {
            (CutKind::Frustration, i << 1)
        } else if i < 2 * half - 1 {
            (CutKind::Cut, (i - half + 1) << 1)
        } else {
            return None;
        };
        let labels = (0..self.node_count())
            .map(|x| {
                let bit = ((mask >> self.base[x]) & 1) as u8;
                match kind {
                    CutKind::Cut => bit,
                    CutKind::Frustration => bit ^ u8::from(self.polarity[x] == Polarity::Minus),
                }
            })
            .collect();
        Some((kind, labels))
    }

    /// Number of symmetric bipartitions with both blocks nonempty: `2^n − 1`.
    pub fn symmetric_bipartition_count(&self) -> u64 {
        let n = self.base_count();
        if n == 0 || n > 63 {
            0
        } else {
            (1u64 << n) - 1
        }
    }

    /// Minimum cut over symmetric bipartitions with the default cap.
    pub fn symmetric_edge_connectivity(&self) -> Result<SymmetricConnectivity> {
        self.symmetric_edge_connectivity_with(SYMMETRIC_CAP, Execution::default())
    }

    /// Minimum cut over all symmetric bipartitions of `V(𝒢)`, by enumeration.
    ///
    /// Ties resolve to the lowest enumeration index (see [`Self::symmetric_bipartition`]).
    pub fn symmetric_edge_connectivity_with(&self, cap: usize, exec: Execution) -> Result<SymmetricConnectivity> {
        let n = self.base_count();
        if n > cap || n > 63 {
            return Err(Error::SizeLimit { n, cap: cap.min(63) });
        }
        let source_balanced = self.project()?.is_balanced().balanced;
        if !self.graph.is_connected() || n < 2 {
            return Ok(SymmetricConnectivity {
                kappa: 0,
                disconnected: true,
                source_balanced,
                argmin: None,
                argmin_kind: None,
            });
        }
        let lifted = self.lifted_masks();
        let half = 1u64 << (n - 1);
        let (kappa, i) = exec::min_by_index(exec, self.symmetric_bipartition_count(), |i| {
            if i < half {
                frustrated_under(&lifted, i << 1)
            } else {
                crossing_under(&lifted, (i - half + 1) << 1)
            }
        })
        .expect("nonempty enumeration");
        let (kind, labels) = self.symmetric_bipartition(i).expect("index in range");
        Ok(SymmetricConnectivity {
            kappa,
            disconnected: false,
            source_balanced,
            argmin: Some(labels),
            argmin_kind: Some(kind),
        })
    }

    /// Classify a symmetric bipartition (0/1 labels over `V(𝒢)`) and project its cut.
    pub fn classify_symmetric_cut(&self, labels: &[u8]) -> Result<SymmetricCut> {
        let m = self.node_count();
        if labels.len() != m {
            return Err(Error::Dimension { expected: m, actual: labels.len() });
        }
        if labels.iter().any(|&l| l > 1) {
            return Err(Error::InvalidPartition("labels must be 0 or 1".into()));
        }
        let ones = labels.iter().filter(|&&l| l == 1).count();
        if ones == 0 || ones == m {
            return Err(Error::InvalidPartition("one block is empty".into()));
        }
        let as_usize: Vec<usize> = labels.iter().map(|&l| l as usize).collect();
        let kind = match self.block_permutation(&as_usize, 2) {
            Some(p) if p == [0, 1] => CutKind::Cut,
            Some(p) if p == [1, 0] => CutKind::Frustration,
            _ => return Err(Error::SymmetryViolation("bipartition is not symmetric".into())),
        };
        let crossing: BTreeSet<(usize, usize, Sign)> = self
            .graph
            .edges()
            .iter()
            .filter(|&&(x, y)| labels[x] != labels[y])
            .filter_map(|&(x, y)| self.project_edge(x, y))
            .collect();
        let projected_edges = crossing.into_iter().map(|(u, v, sign)| Edge { u, v, sign }).collect();
        let n = self.base_count();
        let (source_partition, witness) = match kind {
            CutKind::Cut => {
                let mut side = vec![0u8; n];
                for x in 0..m {
                    side[self.base[x]] = labels[x];
                }
                (Some(Bipartition { side }), None)
            }
            CutKind::Frustration => {
                let mut theta = SwitchingFunction::identity(n);
                for x in 0..m {
                    if self.polarity[x] == Polarity::Minus && labels[x] == 0 {
                        theta.theta[self.base[x]] = Sign::Neg;
                    }
                }
                (None, Some(theta.normalized()))
            }
        };
        Ok(SymmetricCut {
            kind,
            projected_edges,
            source_partition,
            witness,
        })
    }
}
