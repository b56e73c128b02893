use std::collections::BTreeSet;

use proptest::prelude::*;

use wpolar::benzenoid::random_benzenoid;
use wpolar::checks::{check_benzenoid, check_tubulene};
use wpolar::hexcore::{
    build_graph, edge_direction, is_bipartite, same_class_edges_disjoint, DirectionClass, HexCoord,
};
use wpolar::io::{graph_from_json, graph_to_json};
use wpolar::tubulene::{build_armchair, build_zigzag};

proptest! {
    #[test]
    fn hexagon_has_two_edges_of_each_class(q in -1000i64..1000, r in -1000i64..1000) {
        let h = HexCoord::new(q, r);
        let a = h.anchor();
        prop_assert_eq!((a.x + a.y).rem_euclid(2), 0);
        let mut per_class = [0; 3];
        for (i, (u, v)) in h.edges().into_iter().enumerate() {
            let class = edge_direction(u, v).unwrap();
            per_class[class.index()] += 1;
            let vertical = u.x == v.x;
            // sides 2 and 5 are the vertical ones at the x-extremes
            prop_assert_eq!(vertical, i == 2 || i == 5);
            prop_assert_eq!(vertical, class == DirectionClass::D1);
        }
        prop_assert_eq!(per_class, [2, 2, 2]);
        let distinct: BTreeSet<_> = h.neighbors().into_iter().collect();
        prop_assert_eq!(distinct.len(), 6);
    }

    #[test]
    fn random_benzenoids_pass_every_check(h in 1usize..40, seed in any::<u64>()) {
        let b = random_benzenoid(h, seed).unwrap();
        prop_assert_eq!(b.hexagon_count(), h);
        for c in check_benzenoid(&b) {
            prop_assert!(c.passed, "h={} seed={} {:?}", h, seed, c);
        }
    }

    #[test]
    fn build_graph_is_deterministic(hs in prop::collection::btree_set((-6i64..6, -6i64..6), 1..25)) {
        let set: BTreeSet<HexCoord> = hs.iter().map(|&(q, r)| HexCoord::new(q, r)).collect();
        let a = build_graph(&set);
        let b = build_graph(&set.iter().rev().copied().collect());
        prop_assert_eq!(&a, &b);
        prop_assert!(same_class_edges_disjoint(&a));
        prop_assert!(is_bipartite(&a));
        prop_assert!((0..a.vertex_count()).all(|v| a.degree(v) <= 3));
        prop_assert_eq!(graph_from_json(&graph_to_json(&a)).unwrap(), a);
    }
}

#[test]
fn tube_grid_passes_every_check() {
    for r in 1..=4 {
        for h in 3..=6 {
            for c in check_tubulene(&build_zigzag(r, h).unwrap()) {
                assert!(c.passed, "ZT({r},{h}) {c:?}");
            }
        }
    }
    for r in [4, 6, 8] {
        for h in 1..=4 {
            for c in check_tubulene(&build_armchair(r, h).unwrap()) {
                assert!(c.passed, "AT({r},{h}) {c:?}");
            }
        }
    }
}

#[test]
fn random_generator_is_reproducible() {
    for seed in [0, 7, 42, u64::MAX] {
        assert_eq!(
            random_benzenoid(25, seed).unwrap(),
            random_benzenoid(25, seed).unwrap()
        );
    }
    assert_ne!(
        random_benzenoid(25, 1).unwrap().hexes(),
        random_benzenoid(25, 2).unwrap().hexes()
    );
}
