#![allow(dead_code)]

use gremban::{Sign, SignedGraph};
use proptest::prelude::*;

/// Signed graph on `lo..=hi` nodes; each pair is an edge with probability about `density`.
pub fn signed_graph(lo: usize, hi: usize) -> impl Strategy<Value = SignedGraph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), proptest::collection::vec((0u8..3, any::<bool>()), pairs))
    })
    .prop_map(|(n, choice)| {
        let mut edges = Vec::new();
        let mut it = choice.into_iter();
        for u in 0..n {
            for v in u + 1..n {
                let (c, neg) = it.next().unwrap();
                if c > 0 {
                    edges.push((u, v, if neg { Sign::Neg } else { Sign::Pos }));
                }
            }
        }
        SignedGraph::new(n, edges).unwrap()
    })
}

/// Connected signed graph: a random spanning path plus random extra edges.
pub fn connected_graph(lo: usize, hi: usize) -> impl Strategy<Value = SignedGraph> {
    signed_graph(lo, hi).prop_map(|g| {
        let n = g.node_count();
        let mut edges: Vec<(usize, usize, Sign)> = g.edges().iter().map(|e| (e.u, e.v, e.sign)).collect();
        for v in 1..n {
            if g.sign_of(v - 1, v).is_none() {
                edges.push((v - 1, v, if v % 3 == 0 { Sign::Neg } else { Sign::Pos }));
            }
        }
        SignedGraph::new(n, edges).unwrap()
    })
}

pub fn switching(n: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(prop_oneof![Just(1i64), Just(-1i64)], n)
}
