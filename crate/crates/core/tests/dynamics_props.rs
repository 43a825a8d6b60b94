mod common;

use common::connected_graph;
use gremban::dynamics::{
    diffuse, gremban_transition, net_and_total, signed_transition, stationary_analysis, step_walk,
    unsigned_transition,
};
use gremban::walks::matrix_exponential;
use gremban::{build_bundle, LiftClass};
use proptest::prelude::*;

fn state(n: usize) -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(0.0f64..1.0, 2 * n)
}

fn graph_and_state() -> impl Strategy<Value = (gremban::SignedGraph, Vec<f64>)> {
    connected_graph(2, 8).prop_flat_map(|g| {
        let n = g.node_count();
        (Just(g), state(n))
    })
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).abs() < tol)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn walk_operator_is_row_stochastic(g in connected_graph(2, 9)) {
        let t = gremban_transition(&g).unwrap();
        for i in 0..t.rows() {
            prop_assert!((t.row(i).iter().sum::<f64>() - 1.0).abs() < 1e-12);
            prop_assert!(t.row(i).iter().all(|&x| x >= 0.0));
        }
    }

    #[test]
    fn walk_projects_onto_signed_and_unsigned_walks((g, x0) in graph_and_state()) {
        let traj = step_walk(&gremban_transition(&g).unwrap(), &x0, 4).unwrap();
        let ts = signed_transition(&g).unwrap();
        let tu = unsigned_transition(&g).unwrap();
        for s in 0..4 {
            prop_assert!(close(&ts.mul_vec(&traj.net[s]).unwrap(), &traj.net[s + 1], 1e-10));
            prop_assert!(close(&tu.mul_vec(&traj.tot[s]).unwrap(), &traj.tot[s + 1], 1e-10));
        }
    }

    #[test]
    fn diffusion_starts_at_the_initial_state((g, x0) in graph_and_state()) {
        let traj = diffuse(&g, &x0, &[0.0, 0.5]).unwrap();
        prop_assert!(close(&traj.states[0], &x0, 1e-9));
        let (net, tot) = net_and_total(&x0);
        prop_assert!(close(&traj.net[0], &net, 1e-9));
        prop_assert!(close(&traj.tot[0], &tot, 1e-9));
    }

    #[test]
    fn diffusion_projects_onto_laplacian_flows((g, x0) in graph_and_state(), t in 0.01f64..3.0) {
        let b = build_bundle(&g);
        let traj = diffuse(&g, &x0, &[t]).unwrap();
        let (net0, tot0) = net_and_total(&x0);
        let net = matrix_exponential(&b.l, -t).unwrap().mul_vec(&net0).unwrap();
        let tot = matrix_exponential(&b.l_bar, -t).unwrap().mul_vec(&tot0).unwrap();
        prop_assert!(close(&traj.net[0], &net, 1e-8));
        prop_assert!(close(&traj.tot[0], &tot, 1e-8));
        let mass: f64 = x0.iter().sum();
        prop_assert!((traj.states[0].iter().sum::<f64>() - mass).abs() < 1e-8);
    }

    #[test]
    fn long_time_limit((g, x0) in graph_and_state()) {
        let n = g.node_count();
        let traj = diffuse(&g, &x0, &[1e4]).unwrap();
        let mean = x0.iter().sum::<f64>() / (2 * n) as f64;
        if let Some(theta) = g.is_balanced().witness {
            let theta: Vec<f64> = theta.values().into_iter().map(|s| s as f64).collect();
            let (net0, _) = net_and_total(&x0);
            let c = theta.iter().zip(&net0).map(|(s, x)| s * x).sum::<f64>() / n as f64;
            prop_assert!(traj.tot[0].iter().all(|v| (v - 2.0 * mean).abs() < 1e-6));
            prop_assert!(traj.net[0].iter().zip(&theta).all(|(v, s)| (v - c * s).abs() < 1e-6));
        } else {
            prop_assert!(traj.states[0].iter().all(|v| (v - mean).abs() < 1e-6));
        }
    }

    #[test]
    fn unit_eigenspace_matches_balance(g in connected_graph(2, 8)) {
        let st = stationary_analysis(&g).unwrap();
        let balanced = g.is_balanced().balanced;
        prop_assert_eq!(st.unit_multiplicity, if balanced { 2 } else { 1 });
        let anti = st.tags.iter().filter(|t| t.class == LiftClass::Antisymmetric).count();
        prop_assert_eq!(anti, usize::from(balanced));
    }
}
