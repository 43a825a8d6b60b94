//! Signed random walks and diffusion on the expansion.
//!
//! States live on the `2n` lifted nodes, positive block first. The net
//! observable `x⁺ − x⁻` follows the signed operator and the total `x⁺ + x⁻`
//! follows the unsigned one.

use crate::error::{Error, Result};
use crate::expansion::{GrembanGraph, Polarity};
use crate::graph::SignedGraph;
use crate::matrix::{build_bundle, dot, lifted_degrees, DenseMatrix, SymMatrix};
use crate::spectral::{fix_sign, lifted_eig, LiftTag, LiftedDecomposition};

/// Eigenvalues of the walk operator within this distance of 1 count as stationary.
pub const UNIT_TOL: f64 = 1e-8;

/// Sampled states with their projected observables.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub times: Vec<f64>,
    /// Lifted states, one per time.
    pub states: Vec<Vec<f64>>,
    /// `x⁺ − x⁻` per time.
    pub net: Vec<Vec<f64>>,
    /// `x⁺ + x⁻` per time.
    pub tot: Vec<Vec<f64>>,
}

/// Unit eigenspace of the expanded walk operator.
#[derive(Debug, Clone, PartialEq)]
pub struct Stationary {
    pub unit_multiplicity: usize,
    /// Basis of the unit eigenspace in walk coordinates, scaled to unit max-norm.
    pub vectors: Vec<Vec<f64>>,
    pub tags: Vec<LiftTag>,
}

/// Per-time coherence diagnostics of a lifted trajectory.
#[derive(Debug, Clone, PartialEq)]
pub struct MetastabilityProfile {
    /// `max_v |x(v⁺) − x(v⁻)|`; small when fibers move together.
    pub fiber_coherence: Vec<f64>,
    /// `max_v |x(v⁺) + x(v⁻) − 2·mean(x)|`; small when opposite lifts mirror each other.
    pub cross_coherence: Vec<f64>,
    /// `max(x) − min(x)`.
    pub group_contrast: Vec<f64>,
}

fn inverse_degrees(g: &SignedGraph) -> Result<Vec<f64>> {
    g.degrees()
        .into_iter()
        .enumerate()
        .map(|(v, d)| if d == 0 { Err(Error::DegenerateDegree(v)) } else { Ok(1.0 / d as f64) })
        .collect()
}

fn row_scaled(m: &SymMatrix, scale: &[f64]) -> DenseMatrix {
    let n = m.order();
    let data = (0..n).flat_map(|i| m.row(i).iter().map(move |v| v * scale[i])).collect();
    DenseMatrix::from_vec(n, n, data).expect("square")
}

/// `𝒯 = 𝒦⁻¹𝒜`, row-stochastic on the expansion.
pub fn gremban_transition(g: &SignedGraph) -> Result<DenseMatrix> {
    let inv = inverse_degrees(g)?;
    let lifted: Vec<f64> = inv.iter().chain(inv.iter()).copied().collect();
    Ok(row_scaled(&build_bundle(g).gremban_a, &lifted))
}

/// `T = K⁻¹A`.
pub fn signed_transition(g: &SignedGraph) -> Result<DenseMatrix> {
    Ok(row_scaled(&build_bundle(g).a, &inverse_degrees(g)?))
}

/// `K⁻¹Ā`.
pub fn unsigned_transition(g: &SignedGraph) -> Result<DenseMatrix> {
    Ok(row_scaled(&build_bundle(g).a_bar, &inverse_degrees(g)?))
}

/// `(x⁺ − x⁻, x⁺ + x⁻)` of a lifted state.
pub fn net_and_total(x: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = x.len() / 2;
    let net = (0..n).map(|i| x[i] - x[i + n]).collect();
    let tot = (0..n).map(|i| x[i] + x[i + n]).collect();
    (net, tot)
}

fn record(traj: &mut Trajectory, t: f64, x: Vec<f64>) {
    let (net, tot) = net_and_total(&x);
    traj.times.push(t);
    traj.states.push(x);
    traj.net.push(net);
    traj.tot.push(tot);
}

fn empty_trajectory() -> Trajectory {
    Trajectory {
        times: Vec::new(),
        states: Vec::new(),
        net: Vec::new(),
        tot: Vec::new(),
    }
}

/// Iterate `x(t+1) = 𝒯x(t)` for `steps` steps, recording times `0..=steps`.
pub fn step_walk(t_op: &DenseMatrix, state: &[f64], steps: usize) -> Result<Trajectory> {
    if t_op.rows() != t_op.cols() || state.len() != t_op.cols() || !state.len().is_multiple_of(2) {
        return Err(Error::Dimension {
            expected: t_op.cols(),
            actual: state.len(),
        });
    }
    let mut traj = empty_trajectory();
    let mut x = state.to_vec();
    for s in 0..=steps {
        let next = if s < steps { Some(t_op.mul_vec(&x)?) } else { None };
        record(&mut traj, s as f64, x);
        match next {
            Some(n) => x = n,
            None => break,
        }
    }
    Ok(traj)
}

/// Unit eigenspace of `𝒯` via the similar symmetric matrix `𝒦^{-1/2}𝒜𝒦^{-1/2}`.
pub fn stationary_analysis(g: &SignedGraph) -> Result<Stationary> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.node_count() < 2 {
        return Err(Error::InvalidArgument("stationary analysis needs at least 2 nodes".into()));
    }
    let k = lifted_degrees(g);
    if let Some(v) = k.iter().position(|&d| d == 0.0) {
        return Err(Error::DegenerateDegree(v));
    }
    let half: Vec<f64> = k.iter().map(|d| 1.0 / d.sqrt()).collect();
    let s = build_bundle(g).gremban_a.congruence_diag(&half)?;
    let lifted = lifted_eig(&s)?;
    let d = &lifted.decomposition;
    let mut vectors = Vec::new();
    let mut tags = Vec::new();
    for i in (0..d.eigenvalues.len()).filter(|&i| (d.eigenvalues[i] - 1.0).abs() <= UNIT_TOL) {
        let mut x: Vec<f64> = d.eigenvectors[i].iter().zip(&half).map(|(a, b)| a * b).collect();
        let max = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        x.iter_mut().for_each(|v| *v /= max);
        fix_sign(&mut x);
        vectors.push(x);
        tags.push(lifted.tags[i]);
    }
    Ok(Stationary {
        unit_multiplicity: vectors.len(),
        vectors,
        tags,
    })
}

/// Exact solution of `ẋ = −𝓛x` by spectral propagation.
#[derive(Debug, Clone)]
pub struct Diffusion {
    lifted: LiftedDecomposition,
}

impl Diffusion {
    pub fn new(g: &SignedGraph) -> Result<Self> {
        Ok(Diffusion {
            lifted: lifted_eig(&build_bundle(g).gremban_l)?,
        })
    }

    pub fn decomposition(&self) -> &LiftedDecomposition {
        &self.lifted
    }

    /// Smallest eigenvalue above `tol`, if any.
    pub fn smallest_positive(&self, tol: f64) -> Option<f64> {
        self.lifted.decomposition.eigenvalues.iter().copied().find(|&l| l > tol)
    }

    /// `x(t) = Σ_j e^{−λ_j t}⟨x0, ψ_j⟩ψ_j` at each requested time.
    pub fn trajectory(&self, x0: &[f64], times: &[f64]) -> Result<Trajectory> {
        let d = &self.lifted.decomposition;
        let m = d.eigenvalues.len();
        if x0.len() != m {
            return Err(Error::Dimension { expected: m, actual: x0.len() });
        }
        if times.iter().any(|&t| !(t >= 0.0 && t.is_finite())) {
            return Err(Error::InvalidArgument("times must be finite and nonnegative".into()));
        }
        if times.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidArgument("times must be strictly increasing".into()));
        }
        let coeffs: Vec<f64> = d.eigenvectors.iter().map(|v| dot(v, x0)).collect();
        let mut traj = empty_trajectory();
        for &t in times {
            let mut x = vec![0.0; m];
            for ((&l, &c), v) in d.eigenvalues.iter().zip(&coeffs).zip(&d.eigenvectors) {
                let w = c * (-l.max(0.0) * t).exp();
                if w != 0.0 {
                    x.iter_mut().zip(v).for_each(|(xi, vi)| *xi += w * vi);
                }
            }
            record(&mut traj, t, x);
        }
        Ok(traj)
    }
}

/// One-shot diffusion.
pub fn diffuse(g: &SignedGraph, x0: &[f64], times: &[f64]) -> Result<Trajectory> {
    Diffusion::new(g)?.trajectory(x0, times)
}

/// Coherence diagnostics for each state of a lifted trajectory.
pub fn metastability_profile(traj: &Trajectory, gg: &GrembanGraph) -> Result<MetastabilityProfile> {
    let m = gg.node_count();
    let mut out = MetastabilityProfile {
        fiber_coherence: Vec::new(),
        cross_coherence: Vec::new(),
        group_contrast: Vec::new(),
    };
    let eta = gg.involution();
    for x in &traj.states {
        if x.len() != m {
            return Err(Error::Dimension { expected: m, actual: x.len() });
        }
        let mean = x.iter().sum::<f64>() / m.max(1) as f64;
        let plus = (0..m).filter(|&i| gg.polarity()[i] == Polarity::Plus);
        let (mut fiber, mut cross) = (0.0f64, 0.0f64);
        for i in plus {
            fiber = fiber.max((x[i] - x[eta[i]]).abs());
            cross = cross.max((x[i] + x[eta[i]] - 2.0 * mean).abs());
        }
        let max = x.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let min = x.iter().copied().fold(f64::INFINITY, f64::min);
        out.fiber_coherence.push(fiber);
        out.cross_coherence.push(cross);
        out.group_contrast.push(if m == 0 { 0.0 } else { max - min });
    }
    Ok(out)
}
