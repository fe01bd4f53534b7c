mod common;

use common::Mix;
use trivalent_core::complex::{
    basis_graphs, check_d_squared, differential_matrix, differential_preserves_loop_order, homology_dims,
    homology_from_basis, weighted_adjoint, GradedBasis,
};
use trivalent_core::diagram::{relation_matrix, space_dimension, Relations};
use trivalent_core::linalg::{exact_rank, rational_rank};

#[test]
fn d_squared_vanishes_through_six_vertices_nine_edges() {
    let mut checked = 0;
    for v in 1..=6 {
        for e in 0..=9 {
            for g in basis_graphs(v, e) {
                assert!(check_d_squared(&g).is_ok(), "d∘d ≠ 0 on {g}");
                assert!(differential_preserves_loop_order(&g), "{g}");
                checked += 1;
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn basis_levels_are_nonzero_classes_of_the_right_loop_order() {
    for l in 2..=4 {
        let b = GradedBasis::new(l);
        for (v, level) in &b.levels {
            for g in level {
                assert_eq!(g.num_vertices(), *v);
                assert_eq!(g.graph().loop_order(), l);
                assert!(g.graph().is_connected());
                assert!(!g.graph().has_tadpole());
                assert!(g.graph().valences().iter().all(|&k| k >= 3));
            }
        }
    }
}

#[test]
fn homology_values() {
    let h2 = homology_dims(2).unwrap();
    assert_eq!(h2.homology.get(&1), Some(&0));
    assert_eq!(h2.homology.get(&2), Some(&1));
    let h3 = homology_dims(3).unwrap();
    assert_eq!(h3.homology[&4], space_dimension(4, Relations::AsIhx, true).unwrap());
    let h4 = homology_dims(4).unwrap();
    assert_eq!(h4.homology[&6], space_dimension(6, Relations::AsIhx, true).unwrap());
    for h in [&h2, &h3, &h4] {
        assert!(h.ranks.values().all(|r| r.consistent()));
    }
}

#[test]
fn homology_independent_of_basis_order() {
    let mut mix = Mix(21);
    for l in 2..=4 {
        let base = GradedBasis::new(l);
        let expected = homology_from_basis(&base).homology;
        for _ in 0..5 {
            let mut shuffled = base.clone();
            for level in shuffled.levels.values_mut() {
                mix.shuffle(level);
            }
            assert_eq!(homology_from_basis(&shuffled).homology, expected);
        }
    }
}

#[test]
fn ihx_rows_span_the_weighted_adjoint_of_contraction() {
    for top in [4, 6] {
        let loops = top / 2 + 1;
        let trivalent = basis_graphs(top, top + loops - 1);
        let four_valent = basis_graphs(top - 1, top + loops - 2);
        let d = differential_matrix(&trivalent, &four_valent);
        let adjoint = weighted_adjoint(&trivalent, &d);
        let ihx = relation_matrix(top, true).unwrap();
        assert_eq!(ihx.columns, trivalent);
        let r = rational_rank(&ihx.matrix);
        let a = rational_rank(&adjoint);
        let s = rational_rank(&ihx.matrix.stacked(&adjoint));
        assert!(r.consistent() && a.consistent() && s.consistent());
        assert_eq!(r.exact, a.exact);
        assert_eq!(r.exact, s.exact);
        // the unweighted transpose has the same rank but a different span
        assert_eq!(exact_rank(&d.transpose()), r.exact);
    }
}
