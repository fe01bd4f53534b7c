//! Index state sums over graphs: every edge picks a pair of indices for its
//! two darts from a fixed weighted list, every vertex contributes a factor
//! read off the indices of its darts, and the products are summed.
//!
//! Edges are visited in breadth-first order so vertices close early; a zero
//! vertex factor prunes the whole subtree.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::Graph;

const MAX_VALENCE: usize = 8;

/// Index pair for `(first dart, second dart)` of an edge, with its weight.
#[derive(Clone, Debug)]
pub(crate) struct EdgeChoice {
    pub first: usize,
    pub second: usize,
    pub weight: BigInt,
}

pub(crate) struct StateSum<'a, F> {
    /// For each edge, the dart that receives `EdgeChoice::first`.
    pub first_dart: &'a [usize],
    pub choices: &'a [EdgeChoice],
    /// Darts at each vertex, in the order the vertex factor expects them.
    pub vertex_darts: &'a [Vec<usize>],
    pub vertex_factor: F,
}

impl<F: Fn(usize, &[usize]) -> BigInt> StateSum<'_, F> {
    pub fn evaluate(&self, g: &Graph) -> BigInt {
        assert!(self.vertex_darts.iter().all(|d| d.len() <= MAX_VALENCE));
        let order = edge_order(g);
        let mut closes: Vec<Vec<usize>> = alloc::vec![Vec::new(); order.len()];
        let mut position = alloc::vec![0usize; g.num_edges()];
        for (k, &e) in order.iter().enumerate() {
            position[e] = k;
        }
        for v in 0..g.num_vertices() {
            if let Some(last) = g.darts_at(v).iter().map(|&d| position[d / 2]).max() {
                closes[last].push(v);
            }
        }
        let mut index = alloc::vec![0usize; g.num_darts()];
        let mut total = BigInt::zero();
        self.recurse(&order, &closes, 0, &BigInt::one(), &mut index, &mut total);
        total
    }

    fn recurse(
        &self,
        order: &[usize],
        closes: &[Vec<usize>],
        k: usize,
        partial: &BigInt,
        index: &mut [usize],
        total: &mut BigInt,
    ) {
        if k == order.len() {
            *total += partial;
            return;
        }
        let e = order[k];
        let d = self.first_dart[e];
        let mut buf = [0usize; MAX_VALENCE];
        'choice: for c in self.choices {
            index[d] = c.first;
            index[d ^ 1] = c.second;
            let mut value = partial * &c.weight;
            for &v in &closes[k] {
                let darts = &self.vertex_darts[v];
                for (slot, &dd) in buf.iter_mut().zip(darts) {
                    *slot = index[dd];
                }
                let f = (self.vertex_factor)(v, &buf[..darts.len()]);
                if f.is_zero() {
                    continue 'choice;
                }
                value *= f;
            }
            self.recurse(order, closes, k + 1, &value, index, total);
        }
    }
}

/// Edges in breadth-first order from vertex 0, then any leftovers.
fn edge_order(g: &Graph) -> Vec<usize> {
    let mut seen_edge = alloc::vec![false; g.num_edges()];
    let mut seen_vertex = alloc::vec![false; g.num_vertices()];
    let mut order = Vec::with_capacity(g.num_edges());
    for root in 0..g.num_vertices() {
        if seen_vertex[root] {
            continue;
        }
        seen_vertex[root] = true;
        let mut queue = alloc::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for d in g.darts_at(v) {
                let e = d / 2;
                if !seen_edge[e] {
                    seen_edge[e] = true;
                    order.push(e);
                }
                let w = g.dart_vertex(d ^ 1);
                if !seen_vertex[w] {
                    seen_vertex[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}
