//! Signed walk counting, generating functions and communicability.
//!
//! Walk counts come from exact integer powers of the expanded adjacency
//! matrix: the `(v⁺, w⁺)` block counts positive walks and the `(v⁺, w⁻)`
//! block counts negative ones. Any intermediate overflow is an error.

use crate::error::{Error, Result};
use crate::expansion::GrembanGraph;
use crate::graph::{Sign, SignedGraph};
use crate::matrix::{build_bundle, DenseMatrix, SymMatrix};
use crate::spectral::eig_sym;

/// Length cap for exhaustive walk enumeration.
pub const BRUTE_WALK_MAX_LEN: usize = 8;
/// Node cap for exhaustive walk enumeration.
pub const BRUTE_WALK_MAX_NODES: usize = 8;
/// Safety margin inside the convergence disk of the resolvents.
pub const RESOLVENT_MARGIN: f64 = 1e-6;

/// Dense square integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMatrix { n, data }
    }

    pub fn from_sym(m: &SymMatrix) -> Self {
        IntMatrix {
            n: m.order(),
            data: m.data().iter().map(|&v| v.round() as i64).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn checked_mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        let n = self.n;
        let mut data = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let prod = a.checked_mul(other.data[k * n + j])?;
                    data[i * n + j] = data[i * n + j].checked_add(prod)?;
                }
            }
        }
        Some(IntMatrix { n, data })
    }

    /// `self^k` by repeated multiplication.
    pub fn power(&self, k: usize) -> Result<IntMatrix> {
        let mut out = IntMatrix::identity(self.n);
        for step in 1..=k {
            out = out.checked_mul(self).ok_or(Error::Overflow(step))?;
        }
        Ok(out)
    }

    pub fn block(&self, r0: usize, c0: usize, size: usize) -> IntMatrix {
        let mut data = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                data.push(self.get(r0 + i, c0 + j));
            }
        }
        IntMatrix { n: size, data }
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec()).collect()
    }
}

/// Positive and negative walk counts of one length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkCounts {
    pub positive: IntMatrix,
    pub negative: IntMatrix,
    pub length: usize,
}

/// Walk counts from `𝒜ᵏ`: the upper-left block is positive, the upper-right negative.
pub fn count_signed_walks(g: &SignedGraph, k: usize) -> Result<WalkCounts> {
    let n = g.node_count();
    let big = IntMatrix::from_sym(&build_bundle(g).gremban_a).power(k)?;
    Ok(WalkCounts {
        positive: big.block(0, 0, n),
        negative: big.block(0, n, n),
        length: k,
    })
}

/// `(Aᵏ, Āᵏ)` in exact integer arithmetic.
pub fn signed_and_unsigned_powers(g: &SignedGraph, k: usize) -> Result<(IntMatrix, IntMatrix)> {
    let b = build_bundle(g);
    Ok((IntMatrix::from_sym(&b.a).power(k)?, IntMatrix::from_sym(&b.a_bar).power(k)?))
}

fn check_brute_limits(g: &SignedGraph, k: usize, v: usize, w: usize) -> Result<()> {
    let n = g.node_count();
    if k > BRUTE_WALK_MAX_LEN {
        return Err(Error::InvalidArgument(format!("walk length {k} exceeds {BRUTE_WALK_MAX_LEN}")));
    }
    if n > BRUTE_WALK_MAX_NODES {
        return Err(Error::SizeLimit { n, cap: BRUTE_WALK_MAX_NODES });
    }
    for id in [v, w] {
        if id >= n {
            return Err(Error::NodeOutOfRange { id, n });
        }
    }
    Ok(())
}

/// Every walk of length `k` from `v` to `w`, as node sequences.
pub fn enumerate_walks(g: &SignedGraph, k: usize, v: usize, w: usize) -> Result<Vec<Vec<usize>>> {
    check_brute_limits(g, k, v, w)?;
    fn go(g: &SignedGraph, k: usize, w: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let here = *path.last().expect("nonempty");
        if path.len() == k + 1 {
            if here == w {
                out.push(path.clone());
            }
            return;
        }
        for &(next, _) in g.neighbors(here) {
            path.push(next);
            go(g, k, w, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    go(g, k, w, &mut vec![v], &mut out);
    Ok(out)
}

/// Product of edge signs along a walk.
pub fn walk_sign(g: &SignedGraph, walk: &[usize]) -> Result<Sign> {
    walk.windows(2).try_fold(Sign::Pos, |acc, e| {
        g.sign_of(e[0], e[1])
            .map(|s| acc * s)
            .ok_or_else(|| Error::InvalidArgument(format!("({}, {}) is not an edge", e[0], e[1])))
    })
}

/// `(positive, negative)` walk counts from `v` to `w` by depth-first enumeration.
pub fn brute_force_walks(g: &SignedGraph, k: usize, v: usize, w: usize) -> Result<(u64, u64)> {
    check_brute_limits(g, k, v, w)?;
    fn go(g: &SignedGraph, left: usize, here: usize, w: usize, sign: Sign, acc: &mut (u64, u64)) {
        if left == 0 {
            if here == w {
                match sign {
                    Sign::Pos => acc.0 += 1,
                    Sign::Neg => acc.1 += 1,
                }
            }
            return;
        }
        for &(next, s) in g.neighbors(here) {
            go(g, left - 1, next, w, sign * s, acc);
        }
    }
    let mut acc = (0, 0);
    go(g, k, v, w, Sign::Pos, &mut acc);
    Ok(acc)
}

/// Lift a walk of `G` to the expansion, starting at the lift of polarity `start` (`Pos` = `+`).
pub fn lift_walk(gg: &GrembanGraph, walk: &[usize], start: Sign) -> Result<Vec<usize>> {
    let g = gg.project()?;
    let n = g.node_count();
    let mut polarity = start;
    let mut out = Vec::with_capacity(walk.len());
    for (i, &v) in walk.iter().enumerate() {
        if v >= n {
            return Err(Error::NodeOutOfRange { id: v, n });
        }
        if i > 0 {
            let s = g
                .sign_of(walk[i - 1], v)
                .ok_or_else(|| Error::InvalidArgument(format!("({}, {v}) is not an edge", walk[i - 1])))?;
            polarity = polarity * s;
        }
        let pol = if polarity == Sign::Pos { crate::expansion::Polarity::Plus } else { crate::expansion::Polarity::Minus };
        out.push(gg.lift(crate::expansion::PolarizedNode { base: v, polarity: pol })?);
    }
    Ok(out)
}

/// Generating functions `(I − tM)⁻¹` for `A`, `Ā` and `𝒜`.
#[derive(Debug, Clone, PartialEq)]
pub struct Resolvents {
    pub signed: DenseMatrix,
    pub unsigned: DenseMatrix,
    pub expanded: DenseMatrix,
    /// Convergence radius `1/max(ρ(A), ρ(Ā))`.
    pub radius: f64,
}

/// Matrix exponentials `exp(tM)` for `A`, `Ā` and `𝒜`.
#[derive(Debug, Clone, PartialEq)]
pub struct Communicability {
    pub signed: DenseMatrix,
    pub unsigned: DenseMatrix,
    pub expanded: DenseMatrix,
}

fn spectral_radius(m: &SymMatrix) -> Result<f64> {
    Ok(eig_sym(m)?.eigenvalues.iter().fold(0.0f64, |r, v| r.max(v.abs())))
}

/// Convergence radius of the walk generating functions.
pub fn convergence_radius(g: &SignedGraph) -> Result<f64> {
    let b = build_bundle(g);
    let rho = spectral_radius(&b.a)?.max(spectral_radius(&b.a_bar)?);
    Ok(if rho == 0.0 { f64::INFINITY } else { 1.0 / rho })
}

fn resolvent(m: &SymMatrix, t: f64) -> Result<DenseMatrix> {
    let n = m.order();
    let mut a = DenseMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            let v = a.get(i, j) - t * m.get(i, j);
            a.set(i, j, v);
        }
    }
    a.solve(&DenseMatrix::identity(n))
}

/// Solve for all three generating functions at `t`.
pub fn resolvent_generating(g: &SignedGraph, t: f64) -> Result<Resolvents> {
    let radius = convergence_radius(g)?;
    if !t.is_finite() || t.abs() >= radius - RESOLVENT_MARGIN {
        return Err(Error::Divergent { value: t, radius });
    }
    let b = build_bundle(g);
    Ok(Resolvents {
        signed: resolvent(&b.a, t)?,
        unsigned: resolvent(&b.a_bar, t)?,
        expanded: resolvent(&b.gremban_a, t)?,
        radius,
    })
}

/// `exp(tM)` through the eigendecomposition of `M`.
pub fn matrix_exponential(m: &SymMatrix, t: f64) -> Result<DenseMatrix> {
    let d = eig_sym(m)?;
    let n = m.order();
    let mut out = DenseMatrix::zeros(n, n);
    for (l, v) in d.eigenvalues.iter().zip(&d.eigenvectors) {
        let w = (t * l).exp();
        for i in 0..n {
            let wi = w * v[i];
            for j in 0..n {
                let x = out.get(i, j) + wi * v[j];
                out.set(i, j, x);
            }
        }
    }
    Ok(out)
}

/// Communicability matrices at `t`.
pub fn communicability(g: &SignedGraph, t: f64) -> Result<Communicability> {
    let b = build_bundle(g);
    Ok(Communicability {
        signed: matrix_exponential(&b.a, t)?,
        unsigned: matrix_exponential(&b.a_bar, t)?,
        expanded: matrix_exponential(&b.gremban_a, t)?,
    })
}

/// Max deviation of `expanded` from `½[[U+S, U−S], [U−S, U+S]]`.
pub fn block_identity_residual(expanded: &DenseMatrix, unsigned: &DenseMatrix, signed: &DenseMatrix) -> f64 {
    let n = signed.rows();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let diag = 0.5 * (unsigned.get(i, j) + signed.get(i, j));
            let off = 0.5 * (unsigned.get(i, j) - signed.get(i, j));
            for (r, c, want) in [(i, j, diag), (i + n, j + n, diag), (i, j + n, off), (i + n, j, off)] {
                worst = worst.max((expanded.get(r, c) - want).abs());
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::expand;
    use crate::graph::Sign::{Neg as M, Pos as P};

    fn triangle() -> SignedGraph {
        SignedGraph::new(3, [(0, 1, P), (1, 2, M), (0, 2, M)]).unwrap()
    }

    #[test]
    fn zero_and_one_step_counts() {
        let g = triangle();
        let c0 = count_signed_walks(&g, 0).unwrap();
        assert_eq!(c0.positive, IntMatrix::identity(3));
        assert_eq!(c0.negative.to_rows(), vec![vec![0; 3]; 3]);
        let c1 = count_signed_walks(&g, 1).unwrap();
        let b = build_bundle(&g);
        assert_eq!(c1.positive, IntMatrix::from_sym(&b.a_plus));
        assert_eq!(c1.negative, IntMatrix::from_sym(&b.a_minus));
    }

    #[test]
    fn triangle_two_step_closed_walks() {
        let g = triangle();
        let c = count_signed_walks(&g, 2).unwrap();
        let (pos, neg) = brute_force_walks(&g, 2, 0, 0).unwrap();
        assert_eq!((c.positive.get(0, 0) as u64, c.negative.get(0, 0) as u64), (pos, neg));
        assert_eq!((pos, neg), (2, 0));
    }

    #[test]
    fn brute_force_small_cases() {
        let g = SignedGraph::new(3, [(0, 1, P), (1, 2, M)]).unwrap();
        assert_eq!(brute_force_walks(&g, 1, 0, 1).unwrap(), (1, 0));
        assert_eq!(brute_force_walks(&g, 2, 0, 2).unwrap(), (0, 1));
        assert!(brute_force_walks(&g, 9, 0, 0).is_err());
        assert!(brute_force_walks(&SignedGraph::empty(9), 1, 0, 0).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let k = SignedGraph::new(8, (0..8).flat_map(|u| (u + 1..8).map(move |v| (u, v, P)))).unwrap();
        assert!(matches!(count_signed_walks(&k, 40), Err(Error::Overflow(_))));
    }

    #[test]
    fn resolvent_of_single_edge() {
        let g = SignedGraph::new(2, [(0, 1, P)]).unwrap();
        let r = resolvent_generating(&g, 0.5).unwrap();
        let want = DenseMatrix::from_rows(&[vec![4.0 / 3.0, 2.0 / 3.0], vec![2.0 / 3.0, 4.0 / 3.0]]).unwrap();
        assert!(r.signed.max_diff(&want) < 1e-14);
        assert!(matches!(resolvent_generating(&g, 1.0), Err(Error::Divergent { .. })));
    }

    #[test]
    fn zero_parameter_gives_identities() {
        let g = triangle();
        let r = resolvent_generating(&g, 0.0).unwrap();
        assert!(r.expanded.max_diff(&DenseMatrix::identity(6)) < 1e-15);
        let c = communicability(&g, 0.0).unwrap();
        assert!(c.signed.max_diff(&DenseMatrix::identity(3)) < 1e-14);
        let single = communicability(&SignedGraph::empty(1), 2.0).unwrap();
        assert!((single.signed.get(0, 0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn block_identities_on_triangle() {
        let g = triangle();
        let r = resolvent_generating(&g, 0.3).unwrap();
        assert!(block_identity_residual(&r.expanded, &r.unsigned, &r.signed) < 1e-10);
        let c = communicability(&g, 1.0).unwrap();
        assert!(block_identity_residual(&c.expanded, &c.unsigned, &c.signed) < 1e-9);
    }

    #[test]
    fn lifted_walk_ends_at_sign_polarity() {
        let g = triangle();
        let gg = expand(&g);
        for walk in enumerate_walks(&g, 3, 0, 2).unwrap() {
            let lifted = lift_walk(&gg, &walk, Sign::Pos).unwrap();
            for e in lifted.windows(2) {
                assert!(gg.graph().has_edge(e[0], e[1]));
            }
            let end = *lifted.last().unwrap();
            let s = walk_sign(&g, &walk).unwrap();
            assert_eq!(end, if s == Sign::Pos { 2 } else { 5 });
        }
    }
}
