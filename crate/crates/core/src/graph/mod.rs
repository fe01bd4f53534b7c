//! Multigraphs given by darts, canonical forms, automorphisms, exhaustive
//! generation and the orientation calculus.
//!
//! A graph with `E` edges has darts `0..2E`; dart `2e` and dart `2e + 1` are
//! the two halves of edge `e`, so the edge-pairing involution is `d ^ 1`.

mod automorphism;
mod canonical;
mod generate;
mod orientation;

pub use automorphism::{
    automorphisms, has_orientation_reversing_automorphism, vertex_automorphisms, Automorphism,
};
pub use canonical::{canonical_form, CanonicalGraph};
pub use generate::{generate_graphs, generate_trivalent, GenerationSpec, MAX_GENERATED_VERTICES};
pub use orientation::{orientation_from_cyclic, OrientedGraph, Orientation, Sign};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};

/// A finite multigraph. Parallel edges and tadpoles (loops) are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    num_vertices: usize,
    /// `ends[e] = [vertex of dart 2e, vertex of dart 2e + 1]`
    ends: Vec<[usize; 2]>,
}

impl Graph {
    /// Builds a graph from an edge list; edge `e` gets darts `2e` (at `u`) and
    /// `2e + 1` (at `v`).
    pub fn from_edges(num_vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = alloc::vec![false; num_vertices];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= num_vertices {
                    return Err(Error::VertexOutOfRange { vertex: x, num_vertices });
                }
                seen[x] = true;
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::IsolatedVertex(v));
        }
        Ok(Graph { num_vertices, ends: edges.iter().map(|&(u, v)| [u, v]).collect() })
    }

    /// Builds a graph from a symmetric multiplicity matrix (`m[u][u]` counts
    /// loops at `u`). Edges come out sorted with `u <= v`.
    pub fn from_multiplicities(m: &[Vec<usize>]) -> Result<Self> {
        let n = m.len();
        let mut edges = Vec::new();
        for (u, row) in m.iter().enumerate() {
            for (v, &k) in row.iter().enumerate().skip(u) {
                edges.extend(core::iter::repeat_n((u, v), k));
            }
        }
        Graph::from_edges(n, &edges)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.ends.len()
    }

    pub fn num_darts(&self) -> usize {
        2 * self.ends.len()
    }

    pub fn dart_vertex(&self, dart: usize) -> usize {
        self.ends[dart / 2][dart % 2]
    }

    /// The other half of the edge containing `dart`.
    pub fn edge_pairing(dart: usize) -> usize {
        dart ^ 1
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        let [u, v] = self.ends[edge];
        (u, v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.ends.iter().map(|&[u, v]| (u, v))
    }

    pub fn is_tadpole(&self, edge: usize) -> bool {
        let [u, v] = self.ends[edge];
        u == v
    }

    pub fn has_tadpole(&self) -> bool {
        self.ends.iter().any(|&[u, v]| u == v)
    }

    pub fn valence(&self, v: usize) -> usize {
        self.ends.iter().map(|e| e.iter().filter(|&&x| x == v).count()).sum()
    }

    pub fn valences(&self) -> Vec<usize> {
        let mut val = alloc::vec![0; self.num_vertices];
        for &[u, v] in &self.ends {
            val[u] += 1;
            val[v] += 1;
        }
        val
    }

    pub fn is_trivalent(&self) -> bool {
        self.valences().iter().all(|&k| k == 3)
    }

    /// Darts incident to `v`, ascending.
    pub fn darts_at(&self, v: usize) -> Vec<usize> {
        (0..self.num_darts()).filter(|&d| self.dart_vertex(d) == v).collect()
    }

    pub fn num_components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.num_vertices).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut comps = self.num_vertices;
        for &[u, v] in &self.ends {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                comps -= 1;
            }
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() <= 1
    }

    /// First Betti number `E - V + #components`.
    pub fn loop_order(&self) -> usize {
        self.num_edges() + self.num_components() - self.num_vertices
    }

    /// `m[u][v]` = number of edges between `u` and `v`; `m[u][u]` counts loops.
    pub fn multiplicities(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices;
        let mut m = alloc::vec![alloc::vec![0usize; n]; n];
        for &[u, v] in &self.ends {
            m[u][v] += 1;
            if u != v {
                m[v][u] += 1;
            }
        }
        m
    }

    /// Renames vertex `v` to `perm[v]`. Edge indices and dart numbering are
    /// kept, so darts of the result correspond one-to-one with darts of `self`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.num_vertices);
        Graph {
            num_vertices: self.num_vertices,
            ends: self.ends.iter().map(|&[u, v]| [perm[u], perm[v]]).collect(),
        }
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn sorted_edges(&self) -> Vec<(usize, usize)> {
        let mut es: Vec<(usize, usize)> =
            self.ends.iter().map(|&[u, v]| (u.min(v), u.max(v))).collect();
        es.sort_unstable();
        es
    }

    /// `V=<n>;E=<u1>-<v1>,...` with directed edges `min -> max`, sorted.
    pub fn serialization(&self) -> String {
        let mut s = format!("V={};E=", self.num_vertices);
        for (i, (u, v)) in self.sorted_edges().into_iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{u}-{v}");
        }
        s
    }

    /// Disjoint union; vertices of `other` are shifted by `self.num_vertices()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.num_vertices;
        let mut ends = self.ends.clone();
        ends.extend(other.ends.iter().map(|&[u, v]| [u + shift, v + shift]));
        Graph { num_vertices: shift + other.num_vertices, ends }
    }

    pub(crate) fn from_raw(num_vertices: usize, ends: Vec<[usize; 2]>) -> Graph {
        Graph { num_vertices, ends }
    }

    pub(crate) fn raw_ends(&self) -> &[[usize; 2]] {
        &self.ends
    }

    /// Two vertices joined by three parallel edges.
    pub fn theta() -> Graph {
        Graph::from_raw(2, alloc::vec![[0, 1], [0, 1], [0, 1]])
    }

    pub fn k4() -> Graph {
        Graph::from_raw(4, alloc::vec![[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]])
    }

    /// The 4-cycle `0-1-2-3-0` with the edges `0-1` and `2-3` doubled.
    pub fn doubled_square() -> Graph {
        Graph::from_raw(4, alloc::vec![[0, 1], [0, 1], [0, 3], [1, 2], [2, 3], [2, 3]])
    }

    /// Two vertices joined by one edge, each carrying a tadpole.
    pub fn dumbbell() -> Graph {
        Graph::from_raw(2, alloc::vec![[0, 0], [0, 1], [1, 1]])
    }
}

impl core::fmt::Display for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.serialization())
    }
}

/// A cyclic order of the darts around each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicData {
    orders: Vec<Vec<usize>>,
}

impl CyclicData {
    /// Validates that `orders[v]` is a permutation of the darts at `v`.
    pub fn new(graph: &Graph, orders: Vec<Vec<usize>>) -> Result<Self> {
        if orders.len() != graph.num_vertices() {
            return Err(Error::LengthMismatch {
                expected: graph.num_vertices(),
                found: orders.len(),
            });
        }
        for (v, order) in orders.iter().enumerate() {
            let mut sorted = order.clone();
            sorted.sort_unstable();
            if sorted != graph.darts_at(v) {
                return Err(Error::CyclicMismatch {
                    vertex: v,
                    reason: format!(
                        "{} darts listed, vertex has valence {}",
                        order.len(),
                        graph.valence(v)
                    ),
                });
            }
        }
        Ok(CyclicData { orders })
    }

    /// Converts per-vertex edge-index lists (each edge listed once per
    /// incidence, a tadpole twice) into dart orders.
    pub fn from_edge_lists(graph: &Graph, lists: &[Vec<usize>]) -> Result<Self> {
        if lists.len() != graph.num_vertices() {
            return Err(Error::LengthMismatch {
                expected: graph.num_vertices(),
                found: lists.len(),
            });
        }
        let mut used = alloc::vec![false; graph.num_darts()];
        let mut orders = Vec::with_capacity(lists.len());
        for (v, list) in lists.iter().enumerate() {
            let mut order = Vec::with_capacity(list.len());
            for &e in list {
                if e >= graph.num_edges() {
                    return Err(Error::EdgeOutOfRange { edge: e, num_edges: graph.num_edges() });
                }
                let dart = [2 * e, 2 * e + 1]
                    .into_iter()
                    .find(|&d| graph.dart_vertex(d) == v && !used[d])
                    .ok_or_else(|| Error::CyclicMismatch {
                        vertex: v,
                        reason: format!("edge {e} is not incident here (or listed too often)"),
                    })?;
                used[dart] = true;
                order.push(dart);
            }
            orders.push(order);
        }
        CyclicData::new(graph, orders)
    }

    /// Darts at each vertex in ascending order.
    pub fn ascending(graph: &Graph) -> Self {
        CyclicData { orders: (0..graph.num_vertices()).map(|v| graph.darts_at(v)).collect() }
    }

    /// At each vertex, darts ordered by the label of the vertex at the other
    /// end (ties by dart id).
    pub fn by_neighbor(graph: &Graph) -> Self {
        let orders = (0..graph.num_vertices())
            .map(|v| {
                let mut ds = graph.darts_at(v);
                ds.sort_by_key(|&d| (graph.dart_vertex(d ^ 1), d));
                ds
            })
            .collect();
        CyclicData { orders }
    }

    pub fn at(&self, v: usize) -> &[usize] {
        &self.orders[v]
    }

    pub fn orders(&self) -> &[Vec<usize>] {
        &self.orders
    }

    pub fn reversed_at(&self, v: usize) -> Self {
        let mut c = self.clone();
        c.orders[v].reverse();
        c
    }

    pub fn rotated_at(&self, v: usize, by: usize) -> Self {
        let mut c = self.clone();
        let len = c.orders[v].len();
        if len > 0 {
            c.orders[v].rotate_left(by % len);
        }
        c
    }

    /// Cyclic data for `graph.relabeled(perm)`: vertex `perm[v]` inherits the
    /// order of `v`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        let mut orders = alloc::vec![Vec::new(); self.orders.len()];
        for (v, o) in self.orders.iter().enumerate() {
            orders[perm[v]] = o.clone();
        }
        CyclicData { orders }
    }
}
