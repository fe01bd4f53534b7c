//! The odd graph complex: connected, tadpole-free graphs with all valences
//! at least 3, oriented by vertex order and edge directions, with the
//! edge-contraction differential. The differential lowers the vertex and edge
//! counts by one and preserves the loop order.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::One;

use crate::diagram::{canonical_term, GraphVector};
use crate::error::{Error, Result};
use crate::graph::{
    automorphisms, generate_graphs, has_orientation_reversing_automorphism, CanonicalGraph,
    GenerationSpec, Graph, OrientedGraph, Orientation,
};
use crate::linalg::{rational_rank, RankCertificate, SparseMatrixQ};
use crate::Rational;

/// Supported loop orders for [`homology_dims`].
pub const MIN_LOOP_ORDER: usize = 2;
pub const MAX_LOOP_ORDER: usize = 4;

/// Contracts edge `e`.
///
/// The orientation is first transported so that the tail of `e` sits in
/// position 0 and its head in position 1 (the vertex-order permutation
/// contributes its parity); then `e` is deleted, its endpoints merge into a
/// vertex at position 0 and the remaining vertices keep their relative order.
/// The result is normalized, so a tadpole or an orientation-reversing
/// symmetry gives zero.
pub fn contract_edge(og: &OrientedGraph, e: usize) -> Result<GraphVector> {
    let g = &og.graph;
    if e >= g.num_edges() {
        return Err(Error::EdgeOutOfRange { edge: e, num_edges: g.num_edges() });
    }
    if g.is_tadpole(e) {
        return Err(Error::TadpoleEdge(e));
    }
    let tail = og.orientation.tail(e);
    let (a, b) = (g.dart_vertex(tail), g.dart_vertex(tail ^ 1));
    let n = g.num_vertices();
    let (pa, pb) = (og.orientation.position(a), og.orientation.position(b));
    let mut positions = alloc::vec![pa, pb];
    positions.extend((0..n).filter(|&p| p != pa && p != pb));
    let moved = og.orientation.reordered(&positions);

    let mut new_label = alloc::vec![0usize; n];
    for (i, &v) in moved.vertex_order().iter().enumerate().skip(2) {
        new_label[v] = i - 1;
    }
    let ends: Vec<[usize; 2]> = g
        .raw_ends()
        .iter()
        .enumerate()
        .filter(|&(f, _)| f != e)
        .map(|(_, &[u, v])| [new_label[u], new_label[v]])
        .collect();
    let tails: Vec<usize> = moved
        .tails()
        .iter()
        .enumerate()
        .filter(|&(f, _)| f != e)
        .map(|(f, &t)| if f > e { t - 2 } else { t })
        .collect();
    let merged = Graph::from_raw(n - 1, ends);
    let orientation = Orientation::new(&merged, (0..n - 1).collect(), tails, moved.sign())
        .expect("contraction keeps a well-formed orientation");
    let mut out = GraphVector::zero();
    out.add_oriented(&OrientedGraph::new(merged, orientation), Rational::one());
    Ok(out)
}

/// Sum of the contractions of all non-tadpole edges.
pub fn differential(og: &OrientedGraph) -> GraphVector {
    let mut out = GraphVector::zero();
    for e in 0..og.graph.num_edges() {
        if !og.graph.is_tadpole(e) {
            out = out + contract_edge(og, e).expect("non-tadpole edge");
        }
    }
    out
}

/// The differential extended linearly to graph vectors.
pub fn differential_of_vector(v: &GraphVector) -> GraphVector {
    v.map_linear(|g| differential(&OrientedGraph::standard(g.graph().clone())))
}

/// Basis of the complex in one bidegree: nonzero classes with `vertices`
/// vertices and `edges` edges.
pub fn basis_graphs(vertices: usize, edges: usize) -> Vec<CanonicalGraph> {
    if vertices == 0 || 2 * edges < 3 * vertices {
        return Vec::new();
    }
    let spec = GenerationSpec {
        vertices,
        edges: Some(edges),
        min_valence: 3,
        max_valence: 2 * edges - 3 * (vertices - 1),
        connected: true,
        tadpoles: false,
    };
    generate_graphs(&spec)
        .into_iter()
        .filter(|g| !has_orientation_reversing_automorphism(g.graph()))
        .collect()
}

/// Per-vertex-count bases at a fixed loop order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    pub loop_order: usize,
    pub levels: BTreeMap<usize, Vec<CanonicalGraph>>,
}

impl GradedBasis {
    /// Vertex counts `1..=2(loop_order - 1)`; the top level is trivalent.
    pub fn new(loop_order: usize) -> Self {
        let top = 2 * loop_order.saturating_sub(1);
        let levels = (1..=top).map(|v| (v, basis_graphs(v, v + loop_order - 1))).collect();
        GradedBasis { loop_order, levels }
    }

    pub fn level(&self, vertices: usize) -> &[CanonicalGraph] {
        self.levels.get(&vertices).map_or(&[], |v| v.as_slice())
    }

    pub fn top_vertices(&self) -> usize {
        self.levels.keys().next_back().copied().unwrap_or(0)
    }
}

/// Matrix of `d` from `source` to `target`: row `i` is `d(source[i])` in
/// the `target` basis.
pub fn differential_matrix(source: &[CanonicalGraph], target: &[CanonicalGraph]) -> SparseMatrixQ {
    let index: BTreeMap<&CanonicalGraph, usize> =
        target.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut m = SparseMatrixQ::new(target.len());
    for g in source {
        let d = differential(&OrientedGraph::standard(g.graph().clone()));
        m.push_row(d.iter().map(|(t, c)| {
            (*index.get(t).expect("differential stays inside the basis"), c.clone())
        }));
    }
    m
}

/// Homology of the complex at one loop order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    pub loop_order: usize,
    pub basis_sizes: BTreeMap<usize, usize>,
    /// Rank of `d` leaving each vertex count.
    pub ranks: BTreeMap<usize, RankCertificate>,
    pub homology: BTreeMap<usize, usize>,
}

/// `dim ker(d at V) - rank(d at V+1)` for every vertex count `V`.
pub fn homology_dims(loop_order: usize) -> Result<HomologyReport> {
    if !(MIN_LOOP_ORDER..=MAX_LOOP_ORDER).contains(&loop_order) {
        return Err(Error::OutOfRange(alloc::format!(
            "loop order must be in {MIN_LOOP_ORDER}..={MAX_LOOP_ORDER}, got {loop_order}"
        )));
    }
    let basis = GradedBasis::new(loop_order);
    Ok(homology_from_basis(&basis))
}

pub fn homology_from_basis(basis: &GradedBasis) -> HomologyReport {
    let mut ranks = BTreeMap::new();
    for (&v, level) in &basis.levels {
        let rank = if v <= 1 {
            RankCertificate { exact: 0, modular: 0 }
        } else {
            rational_rank(&differential_matrix(level, basis.level(v - 1)))
        };
        ranks.insert(v, rank);
    }
    let mut homology = BTreeMap::new();
    let mut basis_sizes = BTreeMap::new();
    for (&v, level) in &basis.levels {
        let kernel = level.len() - ranks[&v].exact;
        let incoming = ranks.get(&(v + 1)).map_or(0, |r| r.exact);
        homology.insert(v, kernel - incoming);
        basis_sizes.insert(v, level.len());
    }
    HomologyReport { loop_order: basis.loop_order, basis_sizes, ranks, homology }
}

/// Adjoint of the contraction matrix under the pairing in which a basis
/// graph has square norm equal to its automorphism count: row `j` lists
/// `d(source[i])[j] / |Aut(source[i])|` over `i`. Vertex splitting in the
/// same basis, up to a positive factor per row.
pub fn weighted_adjoint(source: &[CanonicalGraph], d: &SparseMatrixQ) -> SparseMatrixQ {
    let weights: Vec<Rational> = source
        .iter()
        .map(|g| Rational::from_integer((automorphisms(g.graph()).len() as i64).into()))
        .collect();
    let t = d.transpose();
    let mut out = SparseMatrixQ::new(source.len());
    for row in t.rows() {
        out.push_row(row.iter().map(|(&i, c)| (i, c / &weights[i])));
    }
    out
}

/// Checks `d(d(g)) = 0`; returns the offending vector otherwise.
pub fn check_d_squared(g: &CanonicalGraph) -> core::result::Result<(), GraphVector> {
    let dd = differential_of_vector(&differential(&OrientedGraph::standard(g.graph().clone())));
    if dd.is_zero() {
        Ok(())
    } else {
        Err(dd)
    }
}

/// Every term of `d(g)` has the loop order of `g`.
pub fn differential_preserves_loop_order(g: &CanonicalGraph) -> bool {
    let d = differential(&OrientedGraph::standard(g.graph().clone()));
    let ok = d.iter().all(|(t, _)| t.graph().loop_order() == g.graph().loop_order());
    ok
}

/// Is `og` zero in the complex?
pub fn is_zero_class(og: &OrientedGraph) -> bool {
    canonical_term(og).is_none()
}
