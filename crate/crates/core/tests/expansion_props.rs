mod common;

use common::{connected_graph, signed_graph};
use gremban::{expand, recognize, CutKind};
use proptest::prelude::*;

proptest! {
    #[test]
    fn expansion_shape_and_involution(g in signed_graph(1, 9)) {
        let gg = expand(&g);
        let n = g.node_count();
        prop_assert_eq!(gg.node_count(), 2 * n);
        prop_assert_eq!(gg.graph().edge_count(), 2 * g.edge_count());
        prop_assert!(gg.validate().is_ok());
        for x in 0..2 * n {
            let y = gg.eta(x);
            prop_assert_ne!(x, y);
            prop_assert_eq!(gg.eta(y), x);
        }
        for &(u, v) in gg.graph().edges() {
            prop_assert!(gg.graph().has_edge(gg.eta(u), gg.eta(v)));
        }
    }

    #[test]
    fn projection_inverts_expansion(g in signed_graph(1, 9)) {
        prop_assert_eq!(expand(&g).project().unwrap(), g);
    }

    #[test]
    fn recognition_recovers_switching_class(g in signed_graph(1, 7)) {
        let gg = expand(&g);
        let back = recognize(gg.graph(), gg.involution()).unwrap().project().unwrap();
        prop_assert_eq!(back.unsigned(), g.unsigned());
        prop_assert_eq!(back.frustration_index().unwrap().0, g.frustration_index().unwrap().0);
    }

    #[test]
    fn connected_expansion_iff_unbalanced(g in connected_graph(1, 9)) {
        prop_assert_eq!(expand(&g).graph().is_connected(), !g.is_balanced().balanced);
    }

    #[test]
    fn symmetric_bipartitions_enumerate_both_families(g in signed_graph(1, 6)) {
        let gg = expand(&g);
        let n = g.node_count() as u32;
        prop_assert_eq!(gg.symmetric_bipartition_count(), (1u64 << n) - 1);
        let mut seen = std::collections::BTreeSet::new();
        for i in 0..gg.symmetric_bipartition_count() {
            let (kind, labels) = gg.symmetric_bipartition(i).unwrap();
            let cut = gg.classify_symmetric_cut(&labels).unwrap();
            prop_assert_eq!(cut.kind, kind);
            let crossing = gg.graph().edges().iter().filter(|&&(u, v)| labels[u] != labels[v]).count();
            prop_assert_eq!(crossing, 2 * cut.projected_edges.len());
            if kind == CutKind::Frustration {
                let theta = cut.witness.unwrap();
                prop_assert_eq!(g.frustration_set(&theta).unwrap(), cut.projected_edges);
            }
            let canonical = if labels[0] == 0 { labels.clone() } else { labels.iter().map(|b| 1 - b).collect() };
            prop_assert!(seen.insert(canonical));
        }
        prop_assert!(gg.symmetric_bipartition(gg.symmetric_bipartition_count()).is_none());
    }

    #[test]
    fn symmetric_connectivity_is_twice_the_source_minimum(g in connected_graph(2, 6)) {
        let gg = expand(&g);
        let sc = gg.symmetric_edge_connectivity().unwrap();
        let fi = g.frustration_index().unwrap().0;
        let ec = g.edge_connectivity().unwrap();
        if sc.disconnected {
            prop_assert_eq!(sc.kappa, 0);
            prop_assert!(g.is_balanced().balanced);
        } else {
            prop_assert_eq!(sc.kappa, 2 * fi.min(ec));
        }
    }
}
