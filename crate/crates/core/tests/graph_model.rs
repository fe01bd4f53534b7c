mod common;

use common::{all_trivalent, Mix};
use proptest::prelude::*;
use trivalent_core::graph::vertex_automorphisms;
use trivalent_core::{
    automorphisms, canonical_form, generate_graphs, generate_trivalent, orientation_from_cyclic, GenerationSpec,
    Graph, Orientation,
};

fn mixed_valence_graphs() -> Vec<Graph> {
    let spec = GenerationSpec { vertices: 4, edges: Some(7), min_valence: 3, max_valence: 5, connected: true, tadpoles: true };
    generate_graphs(&spec).into_iter().map(|c| c.into_graph()).collect()
}

#[test]
fn canonical_form_is_idempotent_and_relabeling_invariant() {
    let mut mix = Mix(11);
    let mut graphs = all_trivalent(6);
    graphs.extend(mixed_valence_graphs());
    for g in &graphs {
        let (c, _) = canonical_form(g);
        assert_eq!(canonical_form(c.graph()).0, c);
        for _ in 0..200 {
            let p = mix.permutation(g.num_vertices());
            assert_eq!(canonical_form(&g.relabeled(&p)).0, c, "{g}");
        }
    }
}

#[test]
fn canonical_relabeling_maps_graph_onto_form() {
    for g in all_trivalent(6) {
        let (c, relabel) = canonical_form(&g);
        assert_eq!(g.relabeled(&relabel).sorted_edges(), c.graph().sorted_edges());
    }
}

#[test]
fn connected_counts_through_eight_vertices() {
    // cubic multigraphs: loopless 1, 2, 6, 20; with loops allowed 2, 5, 17, 71
    for (v, loopless, with_loops) in [(2, 1, 2), (4, 2, 5), (6, 6, 17), (8, 20, 71)] {
        assert_eq!(generate_trivalent(v, true, false).unwrap().len(), loopless, "V={v}");
        assert_eq!(generate_trivalent(v, true, true).unwrap().len(), with_loops, "V={v}");
    }
}

#[test]
fn automorphism_groups_satisfy_axioms() {
    for g in all_trivalent(6) {
        let auts = automorphisms(&g);
        let set: std::collections::BTreeSet<_> = auts.iter().cloned().collect();
        assert_eq!(set.len(), auts.len());
        for a in &auts {
            assert!(a.is_automorphism_of(&g));
            assert!(set.contains(&a.inverse()));
            for b in auts.iter().take(24) {
                assert!(set.contains(&a.compose(b)));
            }
        }
        let distinct_vertex_maps: std::collections::BTreeSet<_> = auts.iter().map(|a| a.vertex.clone()).collect();
        assert_eq!(distinct_vertex_maps.len(), vertex_automorphisms(&g).len());
    }
}

#[test]
fn one_reversed_cyclic_order_negates_orientation() {
    let mut mix = Mix(5);
    for g in all_trivalent(6) {
        for _ in 0..50 {
            let cyc = mix.cyclic(&g);
            let o = orientation_from_cyclic(&g, &cyc).unwrap();
            let v = mix.below(g.num_vertices());
            assert_eq!(orientation_from_cyclic(&g, &cyc.reversed_at(v)).unwrap(), o.negated(), "{g}");
            assert_eq!(orientation_from_cyclic(&g, &cyc.rotated_at(v, 1)).unwrap(), o, "{g}");
        }
    }
}

#[test]
fn orientation_from_cyclic_commutes_with_relabeling() {
    let mut mix = Mix(6);
    for g in all_trivalent(6) {
        for _ in 0..10 {
            let cyc = mix.cyclic(&g);
            let p = mix.permutation(g.num_vertices());
            let o = orientation_from_cyclic(&g, &cyc).unwrap();
            let h = g.relabeled(&p);
            let o2 = orientation_from_cyclic(&h, &cyc.relabeled(&p)).unwrap();
            assert_eq!(o.relabeled(&p), o2, "{g}");
        }
    }
}

#[test]
fn swaps_and_reversals_on_theta_and_k4() {
    for g in [Graph::theta(), Graph::k4()] {
        let o = Orientation::standard(&g);
        for i in 0..g.num_vertices() - 1 {
            let s = o.with_positions_swapped(i, i + 1);
            assert_eq!(s, o.negated());
            assert_eq!(s.class_sign(&g), -o.class_sign(&g));
            for e in 0..g.num_edges() {
                let r = o.with_edge_reversed(e);
                assert_eq!(r, o.negated());
                let both = s.with_edge_reversed(e);
                assert_eq!(both, o);
                assert_eq!(both.with_positions_swapped(i, i + 1).with_edge_reversed(e), o);
            }
        }
    }
}

fn hash_of(o: &Orientation) -> u64 {
    use std::hash::{DefaultHasher, Hash, Hasher};
    let mut h = DefaultHasher::new();
    o.hash(&mut h);
    h.finish()
}

#[test]
fn equal_classes_hash_equally() {
    let mut mix = Mix(5);
    for g in [Graph::theta(), Graph::k4(), Graph::doubled_square()] {
        let o = Orientation::standard(&g);
        for _ in 0..30 {
            let p = mix.permutation(g.num_vertices());
            let mut x = o.reordered(&p);
            for _ in 0..2 {
                let e = mix.below(g.num_edges());
                x = x.with_edge_reversed(e);
            }
            assert_eq!(x, o);
            assert_eq!(hash_of(&x), hash_of(&o));
            assert_ne!(hash_of(&x.negated()), hash_of(&o));
        }
    }
}

fn random_trivalent() -> impl Strategy<Value = Graph> {
    (1usize..=4)
        .prop_flat_map(|half| Just((0..6 * half).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|darts| {
            let v = darts.len() / 3;
            let edges: Vec<(usize, usize)> = darts.chunks(2).map(|c| (c[0] / 3, c[1] / 3)).collect();
            Graph::from_edges(v, &edges).unwrap()
        })
}

proptest! {
    #[test]
    fn random_pairings_canonicalize_consistently(g in random_trivalent(), seed in any::<u64>()) {
        let mut mix = Mix(seed);
        let p = mix.permutation(g.num_vertices());
        prop_assert_eq!(canonical_form(&g).0, canonical_form(&g.relabeled(&p)).0);
        prop_assert!(g.is_trivalent());
        prop_assert_eq!(2 * g.num_edges(), 3 * g.num_vertices());
    }

    #[test]
    fn canonical_form_is_a_lexicographic_minimum(g in random_trivalent()) {
        let (c, _) = canonical_form(&g);
        if g.num_vertices() <= 6 {
            let min = trivalent_core::perm::signed_permutations(g.num_vertices())
                .into_iter()
                .map(|(p, _)| g.relabeled(&p).sorted_edges())
                .min()
                .unwrap();
            prop_assert_eq!(c.graph().sorted_edges(), min);
        }
    }
}
