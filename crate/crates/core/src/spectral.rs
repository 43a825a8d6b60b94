//! Deterministic symmetric eigendecomposition and lift classification.
//!
//! [`eig_sym`] runs cyclic Jacobi rotations in a fixed `(p, q)` order, so
//! identical input gives bit-identical output. Eigenvalues are ascending and
//! each eigenvector is signed so its largest-magnitude entry is positive
//! (ties go to the lowest index).
//!
//! For an expanded matrix every eigenspace splits into vectors fixed by the
//! involution (`ψ⁻ = ψ⁺`) and vectors negated by it (`ψ⁻ = −ψ⁺`).
//! [`classify_lift`] rotates each numerically degenerate cluster into that
//! split before tagging.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::matrix::{build_bundle, dot, SymMatrix, SYMMETRY_TOL};

/// Jacobi stops once the off-diagonal Frobenius norm falls below this fraction of `‖M‖_F`.
pub const JACOBI_TOL: f64 = 1e-12;
/// Maximum number of Jacobi sweeps.
pub const MAX_SWEEPS: usize = 100;
/// Relative gap under which neighbouring eigenvalues form one cluster.
pub const CLUSTER_TOL: f64 = 1e-9;
/// Default tolerance on projection norms when tagging eigenvectors.
pub const TAG_TOL: f64 = 1e-8;
/// Gram-Schmidt residual under which a projected vector is discarded.
const RANK_TOL: f64 = 1e-6;

/// Sorted eigenvalues with orthonormal eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[i]` belongs to `eigenvalues[i]`.
    pub eigenvectors: Vec<Vec<f64>>,
    /// `max_i ‖M v_i − λ_i v_i‖₂`.
    pub residual: f64,
}

/// Symmetry class of an eigenvector of an expanded matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LiftClass {
    Symmetric,
    Antisymmetric,
    Mixed,
}

/// Class plus the projection norms `(‖Π_s ψ‖, ‖Π_a ψ‖)` it was read from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LiftTag {
    pub class: LiftClass,
    pub projection_norms: (f64, f64),
}

/// A decomposition rotated into symmetry classes, with one tag per vector.
#[derive(Debug, Clone, PartialEq)]
pub struct LiftedDecomposition {
    pub decomposition: SpectralDecomposition,
    pub tags: Vec<LiftTag>,
}

/// Second eigenpair after removing the trivial direction.
#[derive(Debug, Clone, PartialEq)]
pub struct Fiedler {
    pub lambda2: f64,
    pub psi2: Vec<f64>,
    /// Present when the matrix was treated as an expansion.
    pub tag: Option<LiftTag>,
    /// The λ₂ eigenspace holds both symmetric and antisymmetric vectors.
    pub ambiguous: bool,
    /// Smallest non-trivial eigenvalue of the other symmetry class.
    pub competitor_lambda: Option<f64>,
}

/// Which pair of operators to compare in [`spectrum_union_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumKind {
    Adjacency,
    Laplacian,
}

/// Full eigendecomposition by cyclic Jacobi rotations.
pub fn eig_sym(m: &SymMatrix) -> Result<SpectralDecomposition> {
    let n = m.order();
    let dev = m.asymmetry();
    if dev > SYMMETRY_TOL * m.max_abs().max(1.0) {
        return Err(Error::Asymmetric(dev));
    }
    let mut a = m.data().to_vec();
    // Row r of `vt` is column r of V.
    let mut vt = vec![0.0; n * n];
    for i in 0..n {
        vt[i * n + i] = 1.0;
    }
    let target = JACOBI_TOL * m.frobenius();
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };
    let mut converged = false;
    for _ in 0..=MAX_SWEEPS {
        if off(&a) <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                rotate(&mut a, &mut vt, n, p, q, apq);
            }
        }
    }
    if !converged {
        return Err(Error::Numerical(format!("Jacobi did not converge in {MAX_SWEEPS} sweeps")));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]).then(i.cmp(&j)));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let eigenvectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&i| {
            let mut v = vt[i * n..(i + 1) * n].to_vec();
            fix_sign(&mut v);
            v
        })
        .collect();
    let residual = residual_of(m, &eigenvalues, &eigenvectors);
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
        residual,
    })
}

fn rotate(a: &mut [f64], vt: &mut [f64], n: usize, p: usize, q: usize, apq: f64) {
    let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
    let sgn = if theta < 0.0 { -1.0 } else { 1.0 };
    let t = sgn / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    a[p * n + p] -= t * apq;
    a[q * n + q] += t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let g = a[r * n + p];
        let h = a[r * n + q];
        let rp = c * g - s * h;
        let rq = s * g + c * h;
        a[r * n + p] = rp;
        a[p * n + r] = rp;
        a[r * n + q] = rq;
        a[q * n + r] = rq;
    }
    let (head, tail) = vt.split_at_mut(q * n);
    let vp = &mut head[p * n..(p + 1) * n];
    let vq = &mut tail[..n];
    for (x, y) in vp.iter_mut().zip(vq.iter_mut()) {
        let g = *x;
        let h = *y;
        *x = c * g - s * h;
        *y = s * g + c * h;
    }
}

/// Make the largest-magnitude entry positive; near-ties go to the lowest index.
pub fn fix_sign(v: &mut [f64]) {
    let max = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if max == 0.0 {
        return;
    }
    let lead = v
        .iter()
        .position(|x| x.abs() >= max * (1.0 - 1e-9))
        .expect("max is attained");
    if v[lead] < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
}

fn residual_of(m: &SymMatrix, values: &[f64], vectors: &[Vec<f64>]) -> f64 {
    values
        .iter()
        .zip(vectors)
        .map(|(&l, v)| {
            let mv = m.mul_vec(v).expect("matching order");
            mv.iter().zip(v).map(|(a, b)| (a - l * b).powi(2)).sum::<f64>().sqrt()
        })
        .fold(0.0, f64::max)
}

/// Index ranges of eigenvalues that agree within [`CLUSTER_TOL`].
pub fn clusters(values: &[f64]) -> Vec<std::ops::Range<usize>> {
    let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let tol = CLUSTER_TOL * scale;
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || values[i] - values[i - 1] > tol {
            if i > start {
                out.push(start..i);
            }
            start = i;
        }
    }
    out
}

/// `(‖Π_s ψ‖, ‖Π_a ψ‖)` for a vector on `2n` lifted nodes.
pub fn projection_norms(psi: &[f64]) -> (f64, f64) {
    let n = psi.len() / 2;
    let mut s = 0.0;
    let mut a = 0.0;
    for i in 0..n {
        s += (psi[i] + psi[i + n]).powi(2);
        a += (psi[i] - psi[i + n]).powi(2);
    }
    ((s / 2.0).sqrt(), (a / 2.0).sqrt())
}

/// Tag a single vector of an expansion.
pub fn tag_vector(psi: &[f64], tol: f64) -> LiftTag {
    let norms = projection_norms(psi);
    let class = if norms.1 <= tol {
        LiftClass::Symmetric
    } else if norms.0 <= tol {
        LiftClass::Antisymmetric
    } else {
        LiftClass::Mixed
    };
    LiftTag {
        class,
        projection_norms: norms,
    }
}

fn gram_schmidt(vectors: Vec<Vec<f64>>, against: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for mut v in vectors {
        for _ in 0..2 {
            for b in against.iter().chain(basis.iter()) {
                let c = dot(&v, b);
                v.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
            }
        }
        let norm = dot(&v, &v).sqrt();
        if norm > RANK_TOL {
            v.iter_mut().for_each(|x| *x /= norm);
            basis.push(v);
        }
    }
    basis
}

/// Rotate each eigenvalue cluster into symmetric then antisymmetric vectors and tag them.
///
/// A cluster whose projected ranks do not add up is left unrotated, so its
/// vectors may be tagged mixed.
pub fn classify_lift(decomp: &SpectralDecomposition, tol: f64) -> Result<LiftedDecomposition> {
    let m = decomp.eigenvectors.first().map_or(0, Vec::len);
    if !m.is_multiple_of(2) {
        return Err(Error::OddOrder(m));
    }
    let n = m / 2;
    let mut vectors = decomp.eigenvectors.clone();
    for range in clusters(&decomp.eigenvalues) {
        let block = &decomp.eigenvectors[range.clone()];
        let sym: Vec<Vec<f64>> = block
            .iter()
            .map(|v| (0..m).map(|i| 0.5 * (v[i] + v[(i + n) % m])).collect())
            .collect();
        let anti: Vec<Vec<f64>> = block
            .iter()
            .map(|v| (0..m).map(|i| 0.5 * (v[i] - v[(i + n) % m])).collect())
            .collect();
        let sym = gram_schmidt(sym, &[]);
        let anti = gram_schmidt(anti, &[]);
        if sym.len() + anti.len() != range.len() {
            continue;
        }
        for (slot, mut v) in range.zip(sym.into_iter().chain(anti)) {
            fix_sign(&mut v);
            vectors[slot] = v;
        }
    }
    let tags = vectors.iter().map(|v| tag_vector(v, tol)).collect();
    Ok(LiftedDecomposition {
        decomposition: SpectralDecomposition {
            eigenvalues: decomp.eigenvalues.clone(),
            eigenvectors: vectors,
            residual: decomp.residual,
        },
        tags,
    })
}

/// Decompose an expanded matrix and rotate it into symmetry classes.
pub fn lifted_eig(m: &SymMatrix) -> Result<LiftedDecomposition> {
    let mut lifted = classify_lift(&eig_sym(m)?, TAG_TOL)?;
    let d = &mut lifted.decomposition;
    d.residual = residual_of(m, &d.eigenvalues, &d.eigenvectors);
    Ok(lifted)
}

/// Largest elementwise gap between the sorted eigenvalues of `𝓜` and the merged eigenvalues of `M̄` and `M`.
pub fn spectrum_union_check(g: &SignedGraph, which: SpectrumKind) -> Result<f64> {
    let b = build_bundle(g);
    let (expanded, unsigned, signed) = match which {
        SpectrumKind::Adjacency => (b.gremban_a, b.a_bar, b.a),
        SpectrumKind::Laplacian => (b.gremban_l, b.l_bar, b.l),
    };
    let big = eig_sym(&expanded)?.eigenvalues;
    let mut merged = eig_sym(&unsigned)?.eigenvalues;
    merged.extend(eig_sym(&signed)?.eigenvalues);
    merged.sort_by(f64::total_cmp);
    Ok(big.iter().zip(&merged).fold(0.0, |m, (a, b)| m.max((a - b).abs())))
}

/// Fiedler pair of a Laplacian-like matrix.
///
/// The trivial direction is `𝟏` when `M𝟏 ≈ 0`, otherwise the first
/// eigenvector. Even-order matrices that commute with the involution are
/// treated as expansions and get lift tags.
pub fn fiedler(m: &SymMatrix) -> Result<Fiedler> {
    let n = m.order();
    if n < 2 {
        return Err(Error::InvalidArgument("Fiedler vector needs order ≥ 2".into()));
    }
    let ones = vec![1.0; n];
    let m1 = m.mul_vec(&ones)?;
    let trivial = (m1.iter().fold(0.0f64, |a, v| a.max(v.abs())) <= 1e-9 * m.max_abs().max(1.0)).then_some(ones);
    let lifted = n.is_multiple_of(2)
        && crate::matrix::is_gremban_symmetric_matrix(m, SYMMETRY_TOL * m.max_abs().max(1.0))?;
    if lifted {
        fiedler_lifted(&lifted_eig(m)?, trivial.as_deref())
    } else {
        fiedler_plain(&eig_sym(m)?, trivial.as_deref())
    }
}

/// Fiedler pair of a plain decomposition, deflating `trivial` if given.
pub fn fiedler_plain(decomp: &SpectralDecomposition, trivial: Option<&[f64]>) -> Result<Fiedler> {
    let rest = deflate(decomp, None, trivial);
    let (lambda2, psi2, _) = rest.into_iter().next().ok_or_else(|| Error::InvalidArgument("order < 2".into()))?;
    Ok(Fiedler {
        lambda2,
        psi2,
        tag: None,
        ambiguous: false,
        competitor_lambda: None,
    })
}

/// Fiedler pair of a lifted decomposition.
///
/// If the λ₂ cluster holds both classes the antisymmetric vector is chosen
/// and the result is flagged ambiguous.
pub fn fiedler_lifted(lifted: &LiftedDecomposition, trivial: Option<&[f64]>) -> Result<Fiedler> {
    let rest = deflate(&lifted.decomposition, Some(&lifted.tags), trivial);
    let (first, _, _) = rest.first().ok_or_else(|| Error::InvalidArgument("order < 2".into()))?;
    let scale = lifted.decomposition.eigenvalues.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let cluster: Vec<usize> = (0..rest.len()).take_while(|&i| rest[i].0 - first <= CLUSTER_TOL * scale).collect();
    let class_of = |i: usize| rest[i].2.map(|t| t.class);
    let has = |c: LiftClass| cluster.iter().any(|&i| class_of(i) == Some(c));
    let ambiguous = has(LiftClass::Symmetric) && has(LiftClass::Antisymmetric);
    let pick = cluster
        .iter()
        .copied()
        .find(|&i| class_of(i) == Some(LiftClass::Antisymmetric))
        .filter(|_| ambiguous)
        .unwrap_or(0);
    let (lambda2, psi2, tag) = rest[pick].clone();
    let tag = tag.expect("lifted entries carry tags");
    let competitor_lambda = match tag.class {
        LiftClass::Mixed => None,
        c => rest
            .iter()
            .enumerate()
            .find(|&(i, e)| i != pick && e.2.map(|t| t.class) == Some(other(c)))
            .map(|(_, e)| e.0),
    };
    Ok(Fiedler {
        lambda2,
        psi2,
        tag: Some(tag),
        ambiguous,
        competitor_lambda,
    })
}

fn other(c: LiftClass) -> LiftClass {
    match c {
        LiftClass::Symmetric => LiftClass::Antisymmetric,
        LiftClass::Antisymmetric => LiftClass::Symmetric,
        LiftClass::Mixed => LiftClass::Mixed,
    }
}

/// One eigenpair, tagged when it comes from an expansion.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vec<f64>,
    pub tag: Option<LiftTag>,
}

type Entry = (f64, Vec<f64>, Option<LiftTag>);

/// Eigenpairs in ascending order with the trivial direction removed.
///
/// `trivial` is projected out of the bottom cluster when that cluster
/// contains it; otherwise the first eigenvector is dropped.
pub fn nontrivial_pairs(lifted: &LiftedDecomposition, trivial: Option<&[f64]>) -> Vec<EigenPair> {
    deflate(&lifted.decomposition, Some(&lifted.tags), trivial)
        .into_iter()
        .map(|(value, vector, tag)| EigenPair { value, vector, tag })
        .collect()
}

/// Untagged counterpart of [`nontrivial_pairs`].
pub fn nontrivial_pairs_plain(decomp: &SpectralDecomposition, trivial: Option<&[f64]>) -> Vec<EigenPair> {
    deflate(decomp, None, trivial)
        .into_iter()
        .map(|(value, vector, tag)| EigenPair { value, vector, tag })
        .collect()
}

fn deflate(decomp: &SpectralDecomposition, tags: Option<&[LiftTag]>, trivial: Option<&[f64]>) -> Vec<Entry> {
    let d = decomp;
    let tag_at = |i: usize| tags.map(|t| t[i]);
    let ranges = clusters(&d.eigenvalues);
    let Some(bottom) = ranges.first().cloned() else {
        return Vec::new();
    };
    let tail = || (bottom.end..d.eigenvalues.len()).map(|i| (d.eigenvalues[i], d.eigenvectors[i].clone(), tag_at(i)));
    let unit = trivial.and_then(|t| {
        let norm = dot(t, t).sqrt();
        (norm > 0.0).then(|| t.iter().map(|x| x / norm).collect::<Vec<f64>>())
    });
    let captured = unit.as_ref().map_or(0.0, |u| {
        bottom.clone().map(|i| dot(u, &d.eigenvectors[i]).powi(2)).sum::<f64>()
    });
    let Some(u) = unit.filter(|_| captured >= 1.0 - RANK_TOL) else {
        // No usable trivial direction: drop the first eigenvector.
        let mut out: Vec<Entry> = (bottom.start + 1..bottom.end)
            .map(|i| (d.eigenvalues[i], d.eigenvectors[i].clone(), tag_at(i)))
            .collect();
        out.extend(tail());
        return out;
    };
    // Remove `u` from the vectors sharing its class (all of them when untagged).
    let u_class = tags.map(|_| tag_vector(&u, TAG_TOL).class);
    let same: Vec<usize> = bottom.clone().filter(|&i| tag_at(i).map(|t| t.class) == u_class).collect();
    let kept = gram_schmidt(same.iter().map(|&i| d.eigenvectors[i].clone()).collect(), &[u]);
    // Eigenvalues inside the cluster are interchangeable, so they are reassigned by position.
    let value_at = |slot: usize| d.eigenvalues[(bottom.start + 1 + slot).min(bottom.end - 1)];
    let mut out: Vec<Entry> = Vec::new();
    for mut v in kept {
        fix_sign(&mut v);
        let tag = tags.map(|_| tag_vector(&v, TAG_TOL));
        out.push((value_at(out.len()), v, tag));
    }
    for i in bottom.clone().filter(|i| !same.contains(i)) {
        out.push((value_at(out.len()), d.eigenvectors[i].clone(), tag_at(i)));
    }
    out.extend(tail());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Neg as M, Pos as P};
    use crate::matrix::normalized_laplacian;

    fn triangle() -> SignedGraph {
        SignedGraph::new(3, [(0, 1, P), (1, 2, M), (0, 2, M)]).unwrap()
    }

    fn assert_close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn triangle_spectra() {
        let b = build_bundle(&triangle());
        assert_close(&eig_sym(&b.a_bar).unwrap().eigenvalues, &[-1.0, -1.0, 2.0], 1e-12);
        assert_close(&eig_sym(&b.gremban_l).unwrap().eigenvalues, &[0.0, 0.0, 3.0, 3.0, 3.0, 3.0], 1e-12);
    }

    #[test]
    fn identity_decomposition() {
        let d = eig_sym(&SymMatrix::identity(4)).unwrap();
        assert_eq!(d.eigenvalues, vec![1.0; 4]);
        for (i, v) in d.eigenvectors.iter().enumerate() {
            let mut e = vec![0.0; 4];
            e[i] = 1.0;
            assert_eq!(v, &e);
        }
    }

    #[test]
    fn triangle_kernel_classes() {
        let b = build_bundle(&triangle());
        let lifted = lifted_eig(&b.gremban_l).unwrap();
        assert_eq!(lifted.tags[0].class, LiftClass::Symmetric);
        assert_eq!(lifted.tags[1].class, LiftClass::Antisymmetric);
        let s = 1.0 / 6f64.sqrt();
        assert_close(&lifted.decomposition.eigenvectors[0], &[s; 6], 1e-12);
        assert_close(&lifted.decomposition.eigenvectors[1], &[s, s, -s, -s, -s, s], 1e-12);
    }

    #[test]
    fn adjacency_top_space_classes() {
        let b = build_bundle(&triangle());
        let lifted = lifted_eig(&b.gremban_a).unwrap();
        assert_eq!(lifted.tags[4].class, LiftClass::Symmetric);
        assert_eq!(lifted.tags[5].class, LiftClass::Antisymmetric);
        let s = 1.0 / 6f64.sqrt();
        assert_close(&lifted.decomposition.eigenvectors[4], &[s; 6], 1e-12);
        assert_close(&lifted.decomposition.eigenvectors[5], &[s, s, -s, -s, -s, s], 1e-12);
        assert!(lifted.tags.iter().all(|t| t.class != LiftClass::Mixed));
    }

    #[test]
    fn union_check_triangle_and_empty() {
        assert!(spectrum_union_check(&triangle(), SpectrumKind::Adjacency).unwrap() <= 1e-9);
        assert_eq!(spectrum_union_check(&SignedGraph::empty(4), SpectrumKind::Laplacian).unwrap(), 0.0);
    }

    #[test]
    fn path_fiedler() {
        let p3 = SignedGraph::new(3, [(0, 1, P), (1, 2, P)]).unwrap();
        let f = fiedler(&build_bundle(&p3).l_bar).unwrap();
        assert!((f.lambda2 - 1.0).abs() < 1e-12);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert_close(&f.psi2, &[h, 0.0, -h], 1e-12);
        assert!(f.tag.is_none());
    }

    #[test]
    fn two_components_fiedler() {
        let g = SignedGraph::new(4, [(0, 1, P), (2, 3, P)]).unwrap();
        let f = fiedler(&build_bundle(&g).l_bar).unwrap();
        assert!(f.lambda2.abs() < 1e-12);
        assert!((f.psi2[0] - f.psi2[1]).abs() < 1e-12 && (f.psi2[2] - f.psi2[3]).abs() < 1e-12);
        assert!((f.psi2[0] + f.psi2[2]).abs() < 1e-12);
    }

    #[test]
    fn triangle_fiedler_is_antisymmetric_kernel() {
        let f = fiedler(&build_bundle(&triangle()).gremban_l).unwrap();
        assert!(f.lambda2.abs() < 1e-12);
        let s = 1.0 / 6f64.sqrt();
        assert_close(&f.psi2, &[s, s, -s, -s, -s, s], 1e-12);
        assert_eq!(f.tag.unwrap().class, LiftClass::Antisymmetric);
        assert!(!f.ambiguous);
        assert!((f.competitor_lambda.unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn normalized_star_spectrum() {
        let star = SignedGraph::new(4, [(0, 1, P), (0, 2, P), (0, 3, P)]).unwrap();
        let b = build_bundle(&star);
        let k: Vec<f64> = star.degrees().into_iter().map(|d| d as f64).collect();
        let ln = normalized_laplacian(&b.l_bar, &k).unwrap();
        assert_close(&eig_sym(&ln).unwrap().eigenvalues, &[0.0, 1.0, 1.0, 2.0], 1e-12);
    }

    #[test]
    fn order_one_has_no_fiedler() {
        assert!(fiedler(&SymMatrix::zeros(1)).is_err());
        assert!(classify_lift(&eig_sym(&SymMatrix::zeros(3)).unwrap(), TAG_TOL).is_err());
    }

    #[test]
    fn sign_convention_tie_goes_low() {
        let mut v = vec![-0.5, 0.5, 0.1];
        fix_sign(&mut v);
        assert_eq!(v, vec![0.5, -0.5, -0.1]);
    }
}
