//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use gremban::clustering::{detect_multiway, detect_two_way, Structure, StructureKind};
use gremban::dynamics::{gremban_transition, metastability_profile, signed_transition, stationary_analysis, step_walk, unsigned_transition, Diffusion};
use gremban::experiments::{run_sweep, summarize, Method, SweepConfig};
use gremban::generators::{dense_faction_pair, random_connected_signed, sample_ssbm, sparse_community_pair, two_level_network, SbmConfig, Uniform};
use gremban::matrix::{build_bundle, change_of_basis, SymMatrix};
use gremban::metrics::ari;
use gremban::spectral::{eig_sym, spectrum_union_check, LiftClass, SpectrumKind};
use gremban::walks::{block_identity_residual, brute_force_walks, communicability, count_signed_walks, resolvent_generating, signed_and_unsigned_powers};
use gremban::{expand, CutKind, Execution, Sign, SignedGraph};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, ok: impl Into<String>, fail: impl Into<String>) -> Outcome {
    if cond {
        Ok(ok.into())
    } else {
        Err(fail.into())
    }
}

fn triangle() -> SignedGraph {
    SignedGraph::new(3, [(0, 1, Sign::Pos), (1, 2, Sign::Neg), (0, 2, Sign::Neg)]).unwrap()
}

fn max_dev(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

/// Random connected graph whose signs come from a random switching, hence balanced.
fn balanced_connected(n: usize, p: f64, seed: u64) -> (SignedGraph, Vec<i64>) {
    let base = random_connected_signed(n, p, 0.0, seed);
    let mut rng = Uniform::new(seed ^ 0x5eed);
    let theta: Vec<i64> = (0..n).map(|_| if rng.next_f64() < 0.5 { 1 } else { -1 }).collect();
    let edges = base.edges().iter().map(|e| (e.u, e.v, Sign::from_i64(theta[e.u] * theta[e.v]).unwrap()));
    (SignedGraph::new(n, edges).unwrap(), theta)
}

/// Random connected unbalanced graph, by rejection.
fn unbalanced_connected(n: usize, p: f64, seed: u64) -> SignedGraph {
    (0..)
        .map(|k| random_connected_signed(n, p, 0.4, seed.wrapping_mul(7919).wrapping_add(k)))
        .find(|g| !g.is_balanced().balanced)
        .unwrap()
}

fn criterion_1() -> Outcome {
    let tol = 1e-9;
    let g = triangle();
    let b = build_bundle(&g);
    let eigs = |m: &SymMatrix| eig_sym(m).unwrap().eigenvalues;
    let mut worst = 0.0f64;
    worst = worst.max(max_dev(&eigs(&b.a_bar), &[-1.0, -1.0, 2.0]));
    worst = worst.max(max_dev(&eigs(&b.a), &[-1.0, -1.0, 2.0]));
    worst = worst.max(max_dev(&eigs(&b.gremban_a), &[-1.0, -1.0, -1.0, -1.0, 2.0, 2.0]));
    let l_dec = eig_sym(&b.gremban_l).unwrap();
    worst = worst.max(max_dev(&l_dec.eigenvalues, &[0.0, 0.0, 3.0, 3.0, 3.0, 3.0]));

    // Both displayed kernel vectors lie in the span of the two computed kernel vectors.
    let s6 = 6f64.sqrt();
    for target in [[1.0; 6].map(|x: f64| x / s6), [1.0, 1.0, -1.0, -1.0, -1.0, 1.0].map(|x| x / s6)] {
        let mut proj = [0.0; 6];
        for v in &l_dec.eigenvectors[..2] {
            let c: f64 = v.iter().zip(&target).map(|(a, b)| a * b).sum();
            proj.iter_mut().zip(v).for_each(|(p, x)| *p += c * x);
        }
        worst = worst.max(max_dev(&proj, &target));
    }

    let ua = change_of_basis(&b.gremban_a).unwrap();
    let want_a = SymMatrix::from_rows(&[
        vec![0.0, 1.0, 1.0, 0.0, 0.0, 0.0],
        vec![1.0, 0.0, 1.0, 0.0, 0.0, 0.0],
        vec![1.0, 1.0, 0.0, 0.0, 0.0, 0.0],
        vec![0.0, 0.0, 0.0, 0.0, 1.0, -1.0],
        vec![0.0, 0.0, 0.0, 1.0, 0.0, -1.0],
        vec![0.0, 0.0, 0.0, -1.0, -1.0, 0.0],
    ])
    .unwrap();
    let ul = change_of_basis(&b.gremban_l).unwrap();
    let want_l = SymMatrix::from_rows(&[
        vec![2.0, -1.0, -1.0, 0.0, 0.0, 0.0],
        vec![-1.0, 2.0, -1.0, 0.0, 0.0, 0.0],
        vec![-1.0, -1.0, 2.0, 0.0, 0.0, 0.0],
        vec![0.0, 0.0, 0.0, 2.0, -1.0, 1.0],
        vec![0.0, 0.0, 0.0, -1.0, 2.0, 1.0],
        vec![0.0, 0.0, 0.0, 1.0, 1.0, 2.0],
    ])
    .unwrap();
    worst = worst.max(ua.max_diff(&want_a)).max(ul.max_diff(&want_l));
    check(worst <= tol, format!("max deviation {worst:.2e}"), format!("max deviation {worst:.2e} exceeds {tol:e}"))
}

fn criterion_2() -> Outcome {
    let mut worst = 0.0f64;
    for seed in 0..300u64 {
        let n = 1 + (seed % 15) as usize;
        let g = gremban::generators::erdos_renyi_signed(n, 0.1 + 0.6 * ((seed * 37 % 100) as f64 / 100.0), 0.4, seed);
        for kind in [SpectrumKind::Adjacency, SpectrumKind::Laplacian] {
            worst = worst.max(spectrum_union_check(&g, kind).map_err(|e| e.to_string())?);
        }
    }
    check(worst <= 1e-9, format!("300 graphs, max discrepancy {worst:.2e}"), format!("max discrepancy {worst:.2e}"))
}

fn cycle(signs: &[Sign]) -> SignedGraph {
    let n = signs.len();
    SignedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n, signs[i]))).unwrap()
}

fn criterion_3() -> Outcome {
    let mut cases = 0;
    let mut failures = 0;
    let mut test = |g: &SignedGraph| {
        cases += 1;
        if g.is_balanced().balanced == expand(g).graph().is_connected() {
            failures += 1;
        }
    };
    for len in [4usize, 5] {
        for mask in 0..(1u32 << len) {
            let signs: Vec<Sign> = (0..len).map(|i| if mask >> i & 1 == 1 { Sign::Neg } else { Sign::Pos }).collect();
            test(&cycle(&signs));
        }
    }
    for seed in 0..300u64 {
        let n = 2 + (seed % 11) as usize;
        let g = if seed % 2 == 0 { balanced_connected(n, 0.3, seed).0 } else { random_connected_signed(n, 0.3, 0.3, seed) };
        test(&g);
    }
    check(failures == 0, format!("{cases} graphs, zero failures"), format!("{failures} of {cases} graphs disagree"))
}

/// Independent brute-force frustration index: minimum over all 2ⁿ switchings.
fn oracle_frustration(g: &SignedGraph) -> usize {
    let n = g.node_count();
    (0..1u32 << n)
        .map(|m| {
            let th = |v: usize| if m >> v & 1 == 1 { -1 } else { 1 };
            g.edges().iter().filter(|e| e.sign.value() * th(e.u) * th(e.v) < 0).count()
        })
        .min()
        .unwrap()
}

/// Independent brute-force edge connectivity: minimum over all nontrivial bipartitions.
fn oracle_connectivity(g: &SignedGraph) -> usize {
    let n = g.node_count();
    (1..(1u32 << n) - 1)
        .map(|m| g.edges().iter().filter(|e| (m >> e.u & 1) != (m >> e.v & 1)).count())
        .min()
        .unwrap()
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    for seed in 0..100u64 {
        let n = 2 + (seed % 5) as usize;
        let g = random_connected_signed(n, 0.5, 0.4, seed);
        let gg = expand(&g);
        let sym = gg.symmetric_edge_connectivity().map_err(|e| e.to_string())?;
        let (kappa, phi) = (oracle_connectivity(&g), oracle_frustration(&g));
        if sym.kappa != 2 * kappa.min(phi) {
            failures.push(format!("seed {seed}: symmetric {} vs 2·min({kappa},{phi})", sym.kappa));
        }
        // Every symmetric bipartition projects to a cut-set or a frustration set, one to one.
        let mut cut_sources = std::collections::BTreeSet::new();
        let mut switchings = std::collections::BTreeSet::new();
        let total = gg.symmetric_bipartition_count();
        for i in 0..total {
            let (kind, labels) = gg.symmetric_bipartition(i).unwrap();
            let c = gg.classify_symmetric_cut(&labels).map_err(|e| e.to_string())?;
            if c.kind != kind {
                failures.push(format!("seed {seed}: index {i} misclassified"));
            }
            match kind {
                CutKind::Cut => {
                    let p = c.source_partition.unwrap();
                    if g.cut_set(&p).unwrap() != c.projected_edges {
                        failures.push(format!("seed {seed}: cut projection mismatch at {i}"));
                    }
                    cut_sources.insert(p.side.clone());
                }
                CutKind::Frustration => {
                    let th = c.witness.unwrap();
                    if g.frustration_set(&th).unwrap() != c.projected_edges {
                        failures.push(format!("seed {seed}: frustration projection mismatch at {i}"));
                    }
                    switchings.insert(th.values());
                }
            }
        }
        let half = 1usize << (n - 1);
        if cut_sources.len() != half - 1 || switchings.len() != half || total as usize != 2 * half - 1 {
            failures.push(format!("seed {seed}: counts {} cuts, {} switchings", cut_sources.len(), switchings.len()));
        }
    }
    check(failures.is_empty(), "100 graphs, exact agreement and bijective projection", failures.join("; "))
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    for seed in 0..50u64 {
        let n = 2 + (seed % 6) as usize;
        let g = gremban::generators::erdos_renyi_signed(n, 0.5, 0.4, seed);
        for k in 0..=5 {
            let c = count_signed_walks(&g, k).map_err(|e| e.to_string())?;
            let (ak, abark) = signed_and_unsigned_powers(&g, k).map_err(|e| e.to_string())?;
            for v in 0..n {
                for w in 0..n {
                    let (p, q) = brute_force_walks(&g, k, v, w).map_err(|e| e.to_string())?;
                    let (pp, nn) = (c.positive.get(v, w), c.negative.get(v, w));
                    if (pp as u64, nn as u64) != (p, q) || ak.get(v, w) != pp - nn || abark.get(v, w) != pp + nn {
                        failures.push(format!("seed {seed} k {k} ({v},{w})"));
                    }
                }
            }
        }
        let radius = gremban::walks::convergence_radius(&g).unwrap();
        let t = if radius.is_finite() { 0.5 * radius } else { 0.5 };
        let r = resolvent_generating(&g, t).map_err(|e| e.to_string())?;
        let c = communicability(&g, 1.0).map_err(|e| e.to_string())?;
        let res = block_identity_residual(&r.expanded, &r.unsigned, &r.signed).max(block_identity_residual(&c.expanded, &c.unsigned, &c.signed));
        if res > 1e-9 {
            failures.push(format!("seed {seed}: block residual {res:.2e}"));
        }
    }
    check(failures.is_empty(), "50 graphs, exact walk counts, block identities within 1e-9", failures.join("; "))
}

fn criterion_6() -> Outcome {
    let cfg = SweepConfig::default();
    let rows = run_sweep(&cfg, Execution::Parallel).map_err(|e| e.to_string())?;
    let summary = summarize(&rows);
    let at = |rho: f64, m: Method| {
        summary.iter().find(|s| (s.rho_minus_in - rho).abs() < 1e-12 && s.method == m).unwrap()
    };
    let mut problems = Vec::new();
    for rho in [0.0, 0.02, 0.04, 0.18, 0.2] {
        let a = at(rho, Method::Gremban).mean_ari;
        if a < 0.9 {
            problems.push(format!("gremban ARI {a:.3} at {rho}"));
        }
    }
    let (u0, u1) = (at(0.0, Method::Unsigned).mean_ari, at(0.2, Method::Unsigned).mean_ari);
    let (s0, s1) = (at(0.0, Method::Signed).mean_ari, at(0.2, Method::Signed).mean_ari);
    if u0 > 0.3 || u1 < 0.9 {
        problems.push(format!("unsigned ARI {u0:.3} at 0, {u1:.3} at 0.2"));
    }
    if s0 < 0.9 || s1 > 0.3 {
        problems.push(format!("signed ARI {s0:.3} at 0, {s1:.3} at 0.2"));
    }
    let gaps: Vec<(f64, f64)> = summary.iter().filter(|s| s.method == Method::Gremban).map(|s| (s.rho_minus_in, s.mean_lambda_gap)).collect();
    let crossing = gaps.windows(2).find(|w| w[0].1 > 0.0 && w[1].1 <= 0.0).map(|w| {
        let (x0, y0, x1, y1) = (w[0].0, w[0].1, w[1].0, w[1].1);
        x0 + (x1 - x0) * y0 / (y0 - y1)
    });
    match crossing {
        Some(x) if (0.10..=0.18).contains(&x) => {}
        other => problems.push(format!("gap sign change at {other:?}")),
    }
    let detail = format!(
        "gremban ARI {:.3}/{:.3}, unsigned {u0:.3}/{u1:.3}, signed {s0:.3}/{s1:.3} at 0/0.2, gap crosses zero at {:.3}",
        at(0.0, Method::Gremban).mean_ari,
        at(0.2, Method::Gremban).mean_ari,
        crossing.unwrap_or(f64::NAN)
    );
    if problems.is_empty() {
        Ok(detail)
    } else {
        Err(format!("{detail}; {}", problems.join("; ")))
    }
}

fn criterion_7() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for (name, rin, rout, want) in [("community", 0.2, 0.02, LiftClass::Symmetric), ("faction", 0.02, 0.2, LiftClass::Antisymmetric)] {
        let (mut hits, mut tags, mut misplaced, mut no_majority) = (0, 0, 0, 0);
        for seed in 0..20 {
            let cfg = SbmConfig { n: 40, rho_minus_in: rin, rho_minus_out: rout, seed, balanced_groups: true, ..SbmConfig::default() };
            let s = sample_ssbm(&cfg).unwrap();
            if let Ok(d) = detect_two_way(&s.graph, true) {
                tags += usize::from(d.fiedler_tag.class == want);
                if d.fiedler_tag.class == want && ari(&s.ground_truth, &d.labels).unwrap() == 1.0 {
                    hits += 1;
                }
                let truth = &s.ground_truth;
                for v in (0..40).filter(|&v| (d.labels[v] == d.labels[0]) != (truth[v] == truth[0])) {
                    misplaced += 1;
                    // Edges consistent with the planted group versus edges consistent with the other group.
                    let (mut own, mut other) = (0, 0);
                    for &(w, sign) in s.graph.neighbors(v) {
                        let same = truth[w] == truth[v];
                        let supports = if want == LiftClass::Symmetric { same } else { same != sign.is_neg() };
                        if supports { own += 1 } else { other += 1 }
                    }
                    no_majority += usize::from(own <= other);
                }
            }
        }
        ok &= hits >= 18 && tags == 20;
        lines.push(format!(
            "{name}: tag correct {tags}/20, ARI = 1 in {hits}/20; {no_majority} of {misplaced} misplaced nodes have no local majority for their planted group"
        ));
    }
    check(ok, lines.join(", "), lines.join(", "))
}

fn criterion_8() -> Outcome {
    let mut failures = Vec::new();
    for seed in 0..100u64 {
        let n = 2 + (seed % 29) as usize;
        let (g, theta) = balanced_connected(n, 0.2, seed);
        let truth: Vec<usize> = theta.iter().map(|&t| usize::from(t < 0)).collect();
        for normalized in [false, true] {
            match detect_two_way(&g, normalized) {
                Ok(d) if d.kind == StructureKind::Faction && ari(&truth, &d.labels).unwrap() == 1.0 => {}
                other => failures.push(format!("balanced seed {seed} normalized {normalized}: {:?}", other.map(|d| d.kind))),
            }
        }
    }
    for seed in 0..100u64 {
        let n1 = 3 + (seed % 12) as usize;
        let n2 = 3 + (seed * 7 % 13) as usize;
        let a = unbalanced_connected(n1, 0.4, 2 * seed);
        let b = unbalanced_connected(n2, 0.4, 2 * seed + 1);
        let edges = a.edges().iter().map(|e| (e.u, e.v, e.sign)).chain(b.edges().iter().map(|e| (e.u + n1, e.v + n1, e.sign)));
        let g = SignedGraph::new(n1 + n2, edges).unwrap();
        let truth: Vec<usize> = (0..n1 + n2).map(|v| usize::from(v >= n1)).collect();
        for normalized in [false, true] {
            match detect_two_way(&g, normalized) {
                Ok(d) if d.kind == StructureKind::Community && ari(&truth, &d.labels).unwrap() == 1.0 => {}
                other => failures.push(format!("two-component seed {seed} normalized {normalized}: {:?}", other.map(|d| d.kind))),
            }
        }
    }
    check(failures.is_empty(), "200 graphs x 2 normalizations, zero failures", failures.join("; "))
}

fn plateau_times(d: &Diffusion) -> Vec<f64> {
    let lmin = d.smallest_positive(1e-9).unwrap();
    (0..=400).map(|i| 10f64.powf(-2.0 + 5.0 * i as f64 / 400.0) / lmin).collect()
}

fn criterion_9() -> Outcome {
    let mut failures = Vec::new();
    for seed in 0..200u64 {
        let n = 2 + (seed % 14) as usize;
        let g = if seed % 2 == 0 { balanced_connected(n, 0.3, seed).0 } else { random_connected_signed(n, 0.3, 0.4, seed) };
        let s = stationary_analysis(&g).map_err(|e| e.to_string())?;
        if (s.unit_multiplicity == 2) != g.is_balanced().balanced || !(1..=2).contains(&s.unit_multiplicity) {
            failures.push(format!("seed {seed}: multiplicity {}", s.unit_multiplicity));
        }
    }
    let mut worst = 0.0f64;
    for seed in 0..20u64 {
        let g = random_connected_signed(8 + (seed % 8) as usize, 0.3, 0.4, 1000 + seed);
        let n = g.node_count();
        let (big, t, tbar) = (gremban_transition(&g).unwrap(), signed_transition(&g).unwrap(), unsigned_transition(&g).unwrap());
        let mut rng = Uniform::new(seed);
        let x0: Vec<f64> = (0..2 * n).map(|_| rng.next_f64()).collect();
        let traj = step_walk(&big, &x0, 100).unwrap();
        for s in 0..100 {
            worst = worst.max(max_dev(&t.mul_vec(&traj.net[s]).unwrap(), &traj.net[s + 1]));
            worst = worst.max(max_dev(&tbar.mul_vec(&traj.tot[s]).unwrap(), &traj.tot[s + 1]));
        }
    }
    if worst > 1e-10 {
        failures.push(format!("projection residual {worst:.2e}"));
    }

    let half = 10;
    let community = sparse_community_pair(half, 3);
    let d = Diffusion::new(&community).unwrap();
    let gg = expand(&community);
    let mut x0 = vec![0.0; 4 * half];
    x0[0] = 1.0;
    let times = plateau_times(&d);
    let traj = d.trajectory(&x0, &times).unwrap();
    let prof = metastability_profile(&traj, &gg).unwrap();
    let group = |x: usize| gg.base()[x] / half;
    let community_plateau = (0..times.len()).find(|&i| {
        let x = &traj.states[i];
        let a = (0..4 * half).filter(|&y| group(y) == 0).map(|y| x[y]).fold(f64::INFINITY, f64::min);
        let b = (0..4 * half).filter(|&y| group(y) == 1).map(|y| x[y]).fold(f64::NEG_INFINITY, f64::max);
        prof.fiber_coherence[i] < 0.05 * prof.group_contrast[i] && a > b
    });
    if community_plateau.is_none() {
        failures.push("community network: no plateau with coherent fibers and separated groups".into());
    }

    let faction = dense_faction_pair(half, 3);
    let d = Diffusion::new(&faction).unwrap();
    let gg = expand(&faction);
    let times = plateau_times(&d);
    let traj = d.trajectory(&x0, &times).unwrap();
    let prof = metastability_profile(&traj, &gg).unwrap();
    let n = 2 * half;
    // Positive lifts of group 0 travel with negative lifts of group 1, above the other two sets.
    let high = |y: usize| (gg.base()[y] < half) == (y < n);
    let faction_plateau = (0..times.len()).find(|&i| {
        let x = &traj.states[i];
        let c = prof.group_contrast[i];
        let low_max = (0..2 * n).filter(|&y| !high(y)).map(|y| x[y]).fold(f64::NEG_INFINITY, f64::max);
        let high_min = (0..2 * n).filter(|&y| high(y)).map(|y| x[y]).fold(f64::INFINITY, f64::min);
        prof.cross_coherence[i] < 0.05 * c && prof.fiber_coherence[i] > 0.5 * c && high_min > low_max
    });
    let mirror_spread = faction_plateau.map_or(f64::NAN, |i| {
        let x = &traj.states[i];
        let dev = (0..half).flat_map(|v| (half..n).map(move |w| (x[v] - x[w + n]).abs())).fold(0.0, f64::max);
        dev / prof.group_contrast[i]
    });
    if faction_plateau.is_none() {
        failures.push("faction network: no plateau with mirrored opposite polarities".into());
    }
    let detail = format!(
        "200 multiplicity checks, projection residual {worst:.1e}, community plateau at t={:.3}, faction plateau at t={:.3} (max |x(v+) - x(w-)| across groups {:.3} of range)",
        community_plateau.map_or(f64::NAN, |i| plateau_times(&Diffusion::new(&community).unwrap())[i]),
        faction_plateau.map_or(f64::NAN, |i| times[i]),
        mirror_spread,
    );
    check(failures.is_empty(), detail, failures.join("; "))
}

fn criterion_10() -> Outcome {
    let g = two_level_network();
    let report = detect_multiway(&g, 4, false, 0).map_err(|e| e.to_string())?;
    let want = [(vec![0, 1, 2], vec![3, 4, 5]), (vec![6, 7, 8], vec![9, 10, 11])];
    let mut found = Vec::new();
    for s in &report.structures {
        match s {
            Structure::FactionPair { factions, community } => {
                let mut f = factions.clone();
                f.sort();
                found.push((f[0].clone(), f[1].clone()));
                let mut all = community.clone();
                all.sort();
                let mut union = [f[0].clone(), f[1].clone()].concat();
                union.sort();
                if all != union {
                    return Err(format!("community {all:?} is not the union of its factions"));
                }
            }
            Structure::Community { nodes } => return Err(format!("unexpected single community {nodes:?}")),
        }
    }
    found.sort();
    check(
        found == want,
        "faction pairs {1,2,3}|{4,5,6} and {7,8,9}|{10,11,12} (1-based) in two communities",
        format!("found {found:?}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("triangle golden values", criterion_1),
        ("spectrum union", criterion_2),
        ("balance iff disconnected expansion", criterion_3),
        ("symmetric cuts vs cuts and frustration", criterion_4),
        ("walk calculus", criterion_5),
        ("SSBM sweep", criterion_6),
        ("n=40 SSBM lift tags", criterion_7),
        ("exact recovery", criterion_8),
        ("dynamics", criterion_9),
        ("multiway structure", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({secs:.2}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.2}s): {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
