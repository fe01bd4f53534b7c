mod common;

use common::{brute_contract, int, Mix};
use proptest::prelude::*;
use trivalent_core::diagram::normalize;
use trivalent_core::poly::{poisson_bracket, Polynomial};
use trivalent_core::symplectic::{
    ce_differential_eval, cochain_eval, cochain_eval_tensors, contract_graph, contract_vector, sp_invariance_defect,
    taylor3, CubicTensor, HamElement, QuadraticHamiltonian, SymplecticSpace, DEFAULT_TRUNCATION,
};
use trivalent_core::{generate_trivalent, Graph, OrientedGraph, Rational};

fn space(n: usize) -> SymplecticSpace {
    SymplecticSpace::new(n).unwrap()
}

fn small_graphs() -> Vec<Graph> {
    vec![Graph::theta(), Graph::k4(), Graph::doubled_square(), Graph::dumbbell()]
}

#[test]
fn contraction_matches_index_tuple_oracle() {
    let mut mix = Mix(1);
    for (g, n) in [(Graph::theta(), 1), (Graph::theta(), 2), (Graph::k4(), 1), (Graph::doubled_square(), 1), (Graph::dumbbell(), 1)] {
        for _ in 0..10 {
            let tensors: Vec<CubicTensor> = (0..g.num_vertices()).map(|_| mix.cubic_tensor(n)).collect();
            let p = mix.permutation(g.num_vertices());
            let mut og = OrientedGraph::standard(g.clone()).relabeled(&p);
            og.orientation = og.orientation.with_edge_reversed(mix.below(g.num_edges()));
            let fast = contract_graph(&og, &tensors, &space(n)).unwrap();
            assert_eq!(fast, brute_contract(&og, &tensors, n), "{g}");
        }
    }
}

#[test]
fn tadpoles_contract_to_zero() {
    let mut mix = Mix(2);
    for g in generate_trivalent(4, false, true).unwrap() {
        if !g.graph().has_tadpole() {
            continue;
        }
        for n in [1, 2] {
            let tensors: Vec<_> = (0..4).map(|_| mix.cubic_tensor(n)).collect();
            let og = OrientedGraph::standard(g.graph().clone());
            assert_eq!(contract_graph(&og, &tensors, &space(n)).unwrap(), int(0));
        }
    }
}

#[test]
fn edge_reversal_and_odd_reordering_negate() {
    let mut mix = Mix(3);
    for n in [1, 2] {
        for g in [Graph::theta(), Graph::k4()] {
            for _ in 0..20 {
                let tensors: Vec<_> = (0..g.num_vertices()).map(|_| mix.cubic_tensor(n)).collect();
                let og = OrientedGraph::standard(g.clone());
                let w = contract_graph(&og, &tensors, &space(n)).unwrap();
                let e = mix.below(g.num_edges());
                let rev = OrientedGraph::new(g.clone(), og.orientation.with_edge_reversed(e));
                assert_eq!(contract_graph(&rev, &tensors, &space(n)).unwrap(), -w.clone());
                let mut exchanged = tensors.clone();
                exchanged.swap(0, 1);
                // tensors follow vertex positions
                let swapped = OrientedGraph::new(g.clone(), og.orientation.with_positions_swapped(0, 1));
                assert_eq!(
                    contract_graph(&swapped, &tensors, &space(n)).unwrap(),
                    contract_graph(&og, &exchanged, &space(n)).unwrap()
                );
                // same class, odd reordering: the sign flag compensates
                let same_class = OrientedGraph::new(g.clone(), og.orientation.reordered(&[1, 0, 2, 3][..g.num_vertices()]));
                assert_eq!(same_class.orientation, og.orientation);
                assert_eq!(
                    contract_graph(&same_class, &tensors, &space(n)).unwrap(),
                    -contract_graph(&og, &exchanged, &space(n)).unwrap()
                );
                // and the alternating cochain is odd under the same change
                let c = cochain_eval_tensors(&og, &tensors, &space(n)).unwrap();
                assert_eq!(cochain_eval_tensors(&swapped, &tensors, &space(n)).unwrap(), -c);
            }
        }
    }
}

#[test]
fn class_preserving_changes_leave_contraction_fixed() {
    let mut mix = Mix(4);
    for g in [Graph::theta(), Graph::k4()] {
        let tensors: Vec<_> = (0..g.num_vertices()).map(|_| mix.cubic_tensor(2)).collect();
        let og = OrientedGraph::standard(g.clone());
        let w = contract_graph(&og, &tensors, &space(2)).unwrap();
        for _ in 0..10 {
            let p = mix.permutation(g.num_vertices());
            assert_eq!(contract_graph(&og.relabeled(&p), &tensors, &space(2)).unwrap(), w);
        }
    }
}

#[test]
fn cochain_is_well_defined_on_classes() {
    let mut mix = Mix(5);
    for g in [Graph::theta(), Graph::k4(), Graph::doubled_square()] {
        let n = 1;
        let tensors: Vec<_> = (0..g.num_vertices()).map(|_| mix.cubic_tensor(n)).collect();
        for _ in 0..5 {
            let p = mix.permutation(g.num_vertices());
            let mut og = OrientedGraph::standard(g.clone()).relabeled(&p);
            if mix.below(2) == 1 {
                og.orientation = og.orientation.with_edge_reversed(0);
            }
            let direct = cochain_eval_tensors(&og, &tensors, &space(n)).unwrap();
            let v = normalize([(int(1), &og)]);
            let mut via_class = Rational::from_integer(0.into());
            for (c, coef) in v.iter() {
                let std = OrientedGraph::standard(c.graph().clone());
                via_class += coef * cochain_eval_tensors(&std, &tensors, &space(n)).unwrap();
            }
            assert_eq!(direct, via_class, "{g}");
        }
    }
    // the linear extension agrees with the single-graph evaluation on basis vectors
    let theta = OrientedGraph::standard(Graph::theta());
    let t = [mix.cubic_tensor(1), mix.cubic_tensor(1)];
    let v = normalize([(int(3), &theta)]);
    assert_eq!(
        contract_vector(&v, &t, &space(1)).unwrap(),
        int(3) * contract_graph(&OrientedGraph::standard(v.iter().next().unwrap().0.graph().clone()), &t, &space(1)).unwrap()
    );
}

#[test]
fn cochain_is_multilinear_and_alternating() {
    let mut mix = Mix(6);
    for (g, n) in [(Graph::theta(), 1), (Graph::theta(), 2), (Graph::k4(), 1)] {
        let og = OrientedGraph::standard(g.clone());
        let s = space(n);
        let k = g.num_vertices();
        for _ in 0..5 {
            let hs: Vec<Polynomial> = (0..k).map(|_| mix.polynomial(n, 3, 5, 3)).collect();
            let extra = mix.polynomial(n, 3, 5, 3);
            let a = mix.rational();
            let ham = |p: &Polynomial| HamElement::new(p.clone(), s, DEFAULT_TRUNCATION).unwrap();
            let args: Vec<_> = hs.iter().map(ham).collect();
            let base = cochain_eval(&og, &args, &s).unwrap();
            let mut mixed = hs.clone();
            mixed[0] = &hs[0] + &extra.scaled(&a);
            let mut other = hs.clone();
            other[0] = extra.clone();
            let lhs = cochain_eval(&og, &mixed.iter().map(ham).collect::<Vec<_>>(), &s).unwrap();
            let rhs = base.clone() + a * cochain_eval(&og, &other.iter().map(ham).collect::<Vec<_>>(), &s).unwrap();
            assert_eq!(lhs, rhs);
            let mut swapped = args.clone();
            swapped.swap(0, k - 1);
            assert_eq!(cochain_eval(&og, &swapped, &s).unwrap(), -base);
            let mut equal = args.clone();
            equal[1] = equal[0].clone();
            assert_eq!(cochain_eval(&og, &equal, &s).unwrap(), int(0));
        }
    }
}

#[test]
fn cocycle_on_small_samples() {
    let mut mix = Mix(7);
    for (g, n, samples) in [(Graph::theta(), 1, 10), (Graph::theta(), 2, 5), (Graph::k4(), 1, 3), (Graph::doubled_square(), 1, 3)] {
        let og = OrientedGraph::standard(g.clone());
        for _ in 0..samples {
            let hs: Vec<Polynomial> = (0..=g.num_vertices()).map(|_| mix.polynomial(n, 3, 5, 3)).collect();
            assert_eq!(ce_differential_eval(&og, &hs, &space(n), 7).unwrap(), int(0));
        }
    }
}

#[test]
fn cubic_brackets_are_killed_by_taylor3() {
    let mut mix = Mix(8);
    let s = space(2);
    for _ in 0..20 {
        let a = HamElement::new(mix.polynomial(2, 3, 3, 3), s, 7).unwrap();
        let b = HamElement::new(mix.polynomial(2, 3, 5, 3), s, 7).unwrap();
        assert!(taylor3(&a.bracket(&b)).is_zero());
    }
}

#[test]
fn sp_invariance_on_small_samples() {
    let mut mix = Mix(9);
    for n in [1, 2] {
        for g in small_graphs() {
            let og = OrientedGraph::standard(g.clone());
            for _ in 0..5 {
                let tensors: Vec<_> = (0..g.num_vertices()).map(|_| mix.cubic_tensor(n)).collect();
                let x = QuadraticHamiltonian::from_polynomial(&mix.polynomial(n, 2, 2, 4));
                assert_eq!(sp_invariance_defect(&og, &x, &tensors, &space(n)).unwrap(), int(0), "{g}");
            }
        }
    }
}

#[test]
fn sp_action_is_bilinear() {
    let mut mix = Mix(10);
    let s = space(2);
    for _ in 0..10 {
        let x = QuadraticHamiltonian::from_polynomial(&mix.polynomial(2, 2, 2, 3));
        let y = QuadraticHamiltonian::from_polynomial(&mix.polynomial(2, 2, 2, 3));
        let t = mix.cubic_tensor(2);
        let u = mix.cubic_tensor(2);
        let xy = QuadraticHamiltonian::from_polynomial(&(&x.to_polynomial() + &y.to_polynomial()));
        use trivalent_core::symplectic::sp_action;
        assert_eq!(sp_action(&xy, &t, &s), &sp_action(&x, &t, &s) + &sp_action(&y, &t, &s));
        assert_eq!(sp_action(&x, &(&t + &u), &s), &sp_action(&x, &t, &s) + &sp_action(&x, &u, &s));
    }
}

fn polynomial_strategy() -> impl Strategy<Value = (usize, Vec<(Vec<u32>, i64)>)> {
    (1usize..=2).prop_flat_map(|n| {
        let term = (prop::collection::vec(0u32..=3, 2 * n), -4i64..=4);
        (Just(n), prop::collection::vec(term, 1..5))
    })
}

fn build(n: usize, terms: &[(Vec<u32>, i64)]) -> Polynomial {
    Polynomial::from_terms(
        2 * n,
        terms
            .iter()
            .filter(|(e, _)| e.iter().sum::<u32>() <= 5)
            .map(|(e, c)| (e.clone(), int(*c))),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn jacobi_identity(f in polynomial_strategy(), g in prop::collection::vec((prop::collection::vec(0u32..=3, 4), -4i64..=4), 1..5), h in prop::collection::vec((prop::collection::vec(0u32..=3, 4), -4i64..=4), 1..5)) {
        let (n, ft) = f;
        let cut = |t: &[(Vec<u32>, i64)]| -> Vec<(Vec<u32>, i64)> { t.iter().map(|(e, c)| (e[..2 * n].to_vec(), *c)).collect() };
        let (f, g, h) = (build(n, &ft), build(n, &cut(&g)), build(n, &cut(&h)));
        let d = 9;
        let jac = &(&poisson_bracket(&f, &poisson_bracket(&g, &h, d), d) + &poisson_bracket(&g, &poisson_bracket(&h, &f, d), d))
            + &poisson_bracket(&h, &poisson_bracket(&f, &g, d), d);
        prop_assert!(jac.is_zero());
    }

    #[test]
    fn bracket_is_antisymmetric(f in polynomial_strategy()) {
        let (n, ft) = f;
        let p = build(n, &ft);
        let mut rev = ft.clone();
        rev.reverse();
        let q = build(n, &rev.iter().map(|(e, c)| (e.clone(), c + 1)).collect::<Vec<_>>());
        prop_assert!(poisson_bracket(&p, &p, 9).is_zero());
        prop_assert_eq!(poisson_bracket(&p, &q, 9), -poisson_bracket(&q, &p, 9));
    }
}
