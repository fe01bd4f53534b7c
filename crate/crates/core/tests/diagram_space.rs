mod common;

use common::{all_trivalent, int, Mix};
use trivalent_core::diagram::{
    canonical_term, ihx_expand, ihx_sources, normalize, relation_matrix, space_dimension, trivalent_basis,
    GraphVector, RelationMatrix, Relations,
};
use trivalent_core::linalg::{exact_rank, rational_rank};
use trivalent_core::{OrientedGraph, Orientation, Rational};

#[test]
fn single_edge_reversal_negates_normal_form() {
    for g in all_trivalent(6) {
        let og = OrientedGraph::standard(g.clone());
        let base = normalize([(int(1), &og)]);
        for e in 0..g.num_edges() {
            let r = OrientedGraph::new(g.clone(), og.orientation.with_edge_reversed(e));
            assert_eq!(normalize([(int(1), &r)]), -base.clone(), "{g}");
        }
    }
}

#[test]
fn normalize_is_idempotent_and_linear() {
    let mut mix = Mix(3);
    let graphs = all_trivalent(6);
    for _ in 0..100 {
        let a = &graphs[mix.below(graphs.len())];
        let b = &graphs[mix.below(graphs.len())];
        let pa = mix.permutation(a.num_vertices());
        let oa = OrientedGraph::standard(a.clone()).relabeled(&pa);
        let ob = OrientedGraph::new(b.clone(), Orientation::standard(b).with_edge_reversed(0));
        let (x, y) = (mix.rational(), mix.rational());
        let combined = normalize([(x.clone(), &oa), (y.clone(), &ob)]);
        let separate = normalize([(x, &oa)]) + normalize([(y, &ob)]);
        assert_eq!(combined, separate);
        let again = combined.map_linear(|g| GraphVector::basis(g, int(1)));
        assert_eq!(again, combined);
    }
}

#[test]
fn relabeling_keeps_the_class() {
    let mut mix = Mix(4);
    for g in all_trivalent(6) {
        let og = OrientedGraph::standard(g.clone());
        let term = canonical_term(&og);
        for _ in 0..20 {
            let p = mix.permutation(g.num_vertices());
            assert_eq!(canonical_term(&og.relabeled(&p)), term);
        }
    }
}

#[test]
fn ihx_dimension_bounded_by_as_dimension() {
    for v in [2, 4, 6] {
        for connected in [true, false] {
            let a = space_dimension(v, Relations::As, connected).unwrap();
            let b = space_dimension(v, Relations::AsIhx, connected).unwrap();
            assert!(b <= a, "V={v} connected={connected}");
        }
    }
    assert_eq!(space_dimension(6, Relations::AsIhx, true).unwrap(), 1);
    assert!(space_dimension(5, Relations::As, true).is_err());
}

#[test]
fn stacked_ihx_rank_at_four_vertices() {
    let rm = relation_matrix(4, true).unwrap();
    let classes = trivalent_basis(4, true).unwrap().len();
    let rank = rational_rank(&rm.matrix);
    assert!(rank.consistent());
    assert_eq!(rank.exact, classes - space_dimension(4, Relations::AsIhx, true).unwrap());
}

#[test]
fn ihx_span_independent_of_source_order() {
    let mut mix = Mix(9);
    for v in [4, 6] {
        let columns = trivalent_basis(v, true).unwrap();
        let mut sources = ihx_sources(v, true).unwrap();
        let a = RelationMatrix::from_sources(columns.clone(), &sources);
        mix.shuffle(&mut sources);
        let b = RelationMatrix::from_sources(columns, &sources);
        let ra = exact_rank(&a.matrix);
        assert_eq!(ra, exact_rank(&b.matrix));
        assert_eq!(ra, exact_rank(&a.matrix.stacked(&b.matrix)));
    }
}

#[test]
fn ihx_rows_have_small_support() {
    for (g, w) in ihx_sources(6, false).unwrap() {
        let row = ihx_expand(&OrientedGraph::standard(g.graph().clone()), w).unwrap();
        assert!(row.len() <= 3);
        for (t, c) in row.iter() {
            assert!(t.graph().is_trivalent());
            assert_ne!(*c, Rational::from_integer(0.into()));
        }
    }
}
