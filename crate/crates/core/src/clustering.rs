//! Community and faction detection on the Gremban Laplacian.
//!
//! Two-way detection reads the symmetry class of the Fiedler vector of the
//! expanded Laplacian: a symmetric vector splits communities, an
//! antisymmetric one splits factions. Multi-way detection embeds the lifted
//! nodes with several eigenvectors, runs k-means, and interprets each cluster
//! by how the involution acts on it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansion::{expand, GrembanGraph, Polarity};
use crate::graph::SignedGraph;
use crate::matrix::{build_bundle, lifted_degrees, normalized_laplacian, SymMatrix};
use crate::spectral::{fiedler_lifted, lifted_eig, nontrivial_pairs, LiftClass, LiftTag, LiftedDecomposition};

/// Relative tolerance deciding that a Fiedler entry is zero.
pub const ZERO_TOL: f64 = 1e-8;
/// Iteration cap for Lloyd's algorithm.
pub const KMEANS_MAX_ITER: usize = 300;

/// Structure found by two-way detection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StructureKind {
    Community,
    Faction,
    /// λ₂ is shared by both symmetry classes; the antisymmetric split is reported.
    Ambiguous,
}

/// Outcome of two-way detection.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DetectionResult {
    pub kind: StructureKind,
    /// 0/1 label per node of the signed graph; 0 marks the side holding `v⁺` in the first block.
    pub labels: Vec<usize>,
    pub lambda2: f64,
    /// Smallest non-trivial eigenvalue of the other symmetry class.
    pub competitor_lambda: Option<f64>,
    /// `lambda2 − competitor_lambda`, NaN without a competitor.
    pub lambda_gap: f64,
    #[serde(rename = "tag")]
    pub fiedler_tag: LiftTag,
    /// 0/1 labels over the expansion.
    pub expanded_labels: Vec<u8>,
}

/// Symmetric bipartition produced by thresholding a lifted vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Threshold {
    /// 0 for the first block, 1 for the second.
    pub labels: Vec<u8>,
    /// One block is empty.
    pub degenerate: bool,
}

/// Spectral coordinates of the lifted nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    /// `coords[x]` is the point of lifted node `x`.
    pub coords: Vec<Vec<f64>>,
    pub eigenvalues: Vec<f64>,
    pub tags: Vec<LiftTag>,
}

/// One top-level structure of a multi-way report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Structure {
    /// A cluster mapped to itself by the involution.
    Community { nodes: Vec<usize> },
    /// Two clusters exchanged by the involution, nested in their union.
    FactionPair { factions: [Vec<usize>; 2], community: Vec<usize> },
}

impl Structure {
    pub fn nodes(&self) -> &[usize] {
        match self {
            Structure::Community { nodes } => nodes,
            Structure::FactionPair { community, .. } => community,
        }
    }
}

/// Outcome of multi-way detection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiwayReport {
    pub expanded_labels: Vec<usize>,
    /// Ordered by smallest member.
    pub structures: Vec<Structure>,
}

/// Split the lifted nodes by the sign of `psi` after projecting it onto its class.
///
/// Symmetric: block 0 is `{ψ ≥ 0}`. Antisymmetric: block 0 is `{ψ > 0}` plus
/// the `+` lift of every fiber where ψ vanishes. Entries within
/// `ZERO_TOL · ‖ψ‖_∞` of zero count as zero.
pub fn threshold_partition(gg: &GrembanGraph, psi: &[f64], tag: LiftClass) -> Result<Threshold> {
    let m = gg.node_count();
    if psi.len() != m {
        return Err(Error::Dimension { expected: m, actual: psi.len() });
    }
    let eta = gg.involution();
    let projected: Vec<f64> = match tag {
        LiftClass::Symmetric => (0..m).map(|x| 0.5 * (psi[x] + psi[eta[x]])).collect(),
        LiftClass::Antisymmetric => (0..m).map(|x| 0.5 * (psi[x] - psi[eta[x]])).collect(),
        LiftClass::Mixed => return Err(Error::Ambiguous),
    };
    let tol = ZERO_TOL * projected.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let labels: Vec<u8> = (0..m)
        .map(|x| {
            let v = projected[x];
            let first = match tag {
                LiftClass::Symmetric => v >= -tol,
                _ => v > tol || (v.abs() <= tol && gg.polarity()[x] == Polarity::Plus),
            };
            u8::from(!first)
        })
        .collect();
    let as_usize: Vec<usize> = labels.iter().map(|&l| l as usize).collect();
    if gg.block_permutation(&as_usize, 2).is_none() {
        return Err(Error::SymmetryViolation("thresholded partition is not symmetric".into()));
    }
    let ones = labels.iter().filter(|&&l| l == 1).count();
    Ok(Threshold {
        degenerate: ones == 0 || ones == m,
        labels,
    })
}

/// Expanded Laplacian (optionally normalized) and the trivial kernel direction.
pub fn gremban_laplacian(g: &SignedGraph, normalized: bool) -> Result<(SymMatrix, Vec<f64>)> {
    let b = build_bundle(g);
    if normalized {
        let k = lifted_degrees(g);
        let m = normalized_laplacian(&b.gremban_l, &k)?;
        Ok((m, k.iter().map(|d| d.sqrt()).collect()))
    } else {
        Ok((b.gremban_l, vec![1.0; 2 * g.node_count()]))
    }
}

/// Two-way detection from the Fiedler vector of the expanded Laplacian.
pub fn detect_two_way(g: &SignedGraph, normalized: bool) -> Result<DetectionResult> {
    if g.node_count() < 2 {
        return Err(Error::InvalidArgument("detection needs at least 2 nodes".into()));
    }
    let (m, trivial) = gremban_laplacian(g, normalized)?;
    let lifted = lifted_eig(&m)?;
    detect_from_lifted(g, &lifted, &trivial)
}

/// Two-way detection reusing a decomposition of the expanded Laplacian.
pub fn detect_from_lifted(g: &SignedGraph, lifted: &LiftedDecomposition, trivial: &[f64]) -> Result<DetectionResult> {
    let f = fiedler_lifted(lifted, Some(trivial))?;
    let tag = f.tag.expect("lifted decomposition carries tags");
    let kind = match (tag.class, f.ambiguous) {
        (LiftClass::Mixed, _) => return Err(Error::Ambiguous),
        (_, true) => StructureKind::Ambiguous,
        (LiftClass::Symmetric, false) => StructureKind::Community,
        (LiftClass::Antisymmetric, false) => StructureKind::Faction,
    };
    let gg = expand(g);
    let split = threshold_partition(&gg, &f.psi2, tag.class)?;
    let n = g.node_count();
    let labels = (0..n).map(|v| split.labels[v] as usize).collect();
    Ok(DetectionResult {
        kind,
        labels,
        lambda2: f.lambda2,
        competitor_lambda: f.competitor_lambda,
        lambda_gap: f.competitor_lambda.map_or(f64::NAN, |c| f.lambda2 - c),
        fiedler_tag: tag,
        expanded_labels: split.labels,
    })
}

/// Rows `ψ₂(x), …, ψ_k(x)` for every lifted node `x`.
pub fn embed(g: &SignedGraph, k: usize, normalized: bool) -> Result<Embedding> {
    let m = 2 * g.node_count();
    if k < 2 || k > m {
        return Err(Error::InvalidArgument(format!("k must lie in 2..={m}, got {k}")));
    }
    let (lap, trivial) = gremban_laplacian(g, normalized)?;
    let lifted = lifted_eig(&lap)?;
    let pairs = nontrivial_pairs(&lifted, Some(&trivial));
    let cols = &pairs[..(k - 1).min(pairs.len())];
    Ok(Embedding {
        coords: (0..m).map(|x| cols.iter().map(|p| p.vector[x]).collect()).collect(),
        eigenvalues: cols.iter().map(|p| p.value).collect(),
        tags: cols.iter().map(|p| p.tag.expect("tagged")).collect(),
    })
}

fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum()
}

fn argmax_first(values: impl Iterator<Item = f64>) -> usize {
    let mut best = 0;
    let mut best_v = f64::NEG_INFINITY;
    for (i, v) in values.enumerate() {
        if v > best_v {
            best = i;
            best_v = v;
        }
    }
    best
}

/// Lloyd's k-means from farthest-point initialization.
///
/// The first center is the point of largest norm, each further center the
/// point farthest from those chosen; ties go to the lowest index. An empty
/// cluster is re-seeded at the point farthest from its current center. The
/// procedure is fully deterministic, so `seed` only exists for interface
/// stability and does not influence the result.
pub fn kmeans(points: &[Vec<f64>], k: usize, seed: u64) -> Result<Vec<usize>> {
    let _ = seed;
    let m = points.len();
    if k == 0 || k > m {
        return Err(Error::InvalidArgument(format!("k = {k} must lie in 1..={m}")));
    }
    let d = points[0].len();
    if let Some(p) = points.iter().find(|p| p.len() != d) {
        return Err(Error::Dimension { expected: d, actual: p.len() });
    }
    let zero = vec![0.0; d];
    let mut centers = vec![points[argmax_first(points.iter().map(|p| dist2(p, &zero)))].clone()];
    while centers.len() < k {
        let far = argmax_first(points.iter().map(|p| centers.iter().map(|c| dist2(p, c)).fold(f64::INFINITY, f64::min)));
        centers.push(points[far].clone());
    }
    let nearest = |p: &[f64], centers: &[Vec<f64>]| -> usize {
        let mut best = 0;
        let mut best_d = f64::INFINITY;
        for (j, c) in centers.iter().enumerate() {
            let dd = dist2(p, c);
            if dd < best_d {
                best = j;
                best_d = dd;
            }
        }
        best
    };
    let mut labels: Vec<usize> = points.iter().map(|p| nearest(p, &centers)).collect();
    for _ in 0..KMEANS_MAX_ITER {
        let mut sums = vec![vec![0.0; d]; k];
        let mut counts = vec![0usize; k];
        for (p, &l) in points.iter().zip(&labels) {
            counts[l] += 1;
            sums[l].iter_mut().zip(p).for_each(|(s, x)| *s += x);
        }
        for j in 0..k {
            if counts[j] > 0 {
                centers[j] = sums[j].iter().map(|s| s / counts[j] as f64).collect();
            }
        }
        for j in 0..k {
            if counts[j] == 0 {
                let far = argmax_first(points.iter().zip(&labels).map(|(p, &l)| dist2(p, &centers[l])));
                centers[j] = points[far].clone();
            }
        }
        let next: Vec<usize> = points.iter().map(|p| nearest(p, &centers)).collect();
        if next == labels {
            break;
        }
        labels = next;
    }
    Ok(labels)
}

/// Repair a clustering of lifted nodes so the involution permutes its clusters.
///
/// Cluster ids are paired by greedy matching on how often a node and its
/// partner fall into them. Each inconsistent fiber then adopts whichever of
/// its two candidate patterns has more support, with total squared distance
/// to the cluster centroids as the tie-break.
pub fn symmetrize_labels(gg: &GrembanGraph, points: &[Vec<f64>], labels: &[usize], k: usize) -> Result<Vec<usize>> {
    let m = gg.node_count();
    if labels.len() != m || points.len() != m {
        return Err(Error::Dimension { expected: m, actual: labels.len() });
    }
    let eta = gg.involution();
    let mut pair_count = vec![vec![0usize; k]; k];
    for x in 0..m {
        pair_count[labels[x]][labels[eta[x]]] += 1;
    }
    let mut candidates: Vec<(usize, usize, usize)> = (0..k)
        .flat_map(|i| (i..k).map(move |j| (i, j)))
        .map(|(i, j)| {
            let c = if i == j { pair_count[i][i] } else { pair_count[i][j] + pair_count[j][i] };
            (c, i, j)
        })
        .collect();
    candidates.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    let mut tau = vec![usize::MAX; k];
    for &(_, i, j) in &candidates {
        if tau[i] == usize::MAX && tau[j] == usize::MAX {
            tau[i] = j;
            tau[j] = i;
        }
    }
    for (i, t) in tau.iter_mut().enumerate() {
        if *t == usize::MAX {
            *t = i;
        }
    }
    let d = points.first().map_or(0, Vec::len);
    let mut centroids = vec![vec![0.0; d]; k];
    let mut sizes = vec![0usize; k];
    for (p, &l) in points.iter().zip(labels) {
        sizes[l] += 1;
        centroids[l].iter_mut().zip(p).for_each(|(s, x)| *s += x);
    }
    for (c, &s) in centroids.iter_mut().zip(&sizes) {
        if s > 0 {
            c.iter_mut().for_each(|v| *v /= s as f64);
        }
    }
    let mut out = labels.to_vec();
    for x in 0..m {
        let y = eta[x];
        if gg.polarity()[x] != Polarity::Plus || tau[labels[x]] == labels[y] {
            continue;
        }
        let keep_x = (labels[x], tau[labels[x]]);
        let keep_y = (tau[labels[y]], labels[y]);
        let support = |(a, b): (usize, usize)| pair_count[a][b];
        let cost = |(a, b): (usize, usize)| dist2(&points[x], &centroids[a]) + dist2(&points[y], &centroids[b]);
        let choice = match support(keep_x).cmp(&support(keep_y)) {
            std::cmp::Ordering::Greater => keep_x,
            std::cmp::Ordering::Less => keep_y,
            std::cmp::Ordering::Equal => {
                if cost(keep_y) < cost(keep_x) {
                    keep_y
                } else {
                    keep_x
                }
            }
        };
        out[x] = choice.0;
        out[y] = choice.1;
    }
    if gg.block_permutation(&out, k).is_none() {
        return Err(Error::SymmetryViolation("k-means clusters could not be made symmetric".into()));
    }
    Ok(out)
}

/// Multi-way detection: embed, cluster, symmetrize, and read off communities and faction pairs.
pub fn detect_multiway(g: &SignedGraph, k: usize, normalized: bool, seed: u64) -> Result<MultiwayReport> {
    let n = g.node_count();
    if k < 2 || k > n {
        return Err(Error::InvalidArgument(format!("k must lie in 2..={n}, got {k}")));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let gg = expand(g);
    let emb = embed(g, k, normalized)?;
    let raw = kmeans(&emb.coords, k, seed)?;
    let labels = symmetrize_labels(&gg, &emb.coords, &raw, k)?;
    let tau = gg
        .block_permutation(&labels, k)
        .ok_or_else(|| Error::SymmetryViolation("clusters are not permuted by the involution".into()))?;
    let members = |c: usize| -> Vec<usize> { (0..2 * n).filter(|&x| labels[x] == c).collect() };
    let plus = |c: usize| gg.one_sided_project_nodes(&members(c), Polarity::Plus).expect("ids in range");
    let mut structures = Vec::new();
    for c in 0..k {
        let nodes = members(c);
        if nodes.is_empty() {
            continue;
        }
        if tau[c] == c {
            structures.push(Structure::Community { nodes: plus(c) });
        } else if c < tau[c] {
            let mut factions = [plus(c), plus(tau[c])];
            factions.sort_by_key(|f| f.first().copied().unwrap_or(usize::MAX));
            let mut community: Vec<usize> = factions.iter().flatten().copied().collect();
            community.sort_unstable();
            structures.push(Structure::FactionPair { factions, community });
        }
    }
    structures.sort_by_key(|s| s.nodes().first().copied().unwrap_or(usize::MAX));
    let mut seen = vec![0usize; n];
    for s in &structures {
        for &v in s.nodes() {
            seen[v] += 1;
        }
    }
    if seen.iter().any(|&c| c != 1) {
        return Err(Error::SymmetryViolation("structures do not partition the node set".into()));
    }
    Ok(MultiwayReport {
        expanded_labels: labels,
        structures,
    })
}
