//! Oriented trivalent graphs modulo AS and IHX.
//!
//! A [`GraphVector`] is a finite rational combination of canonical graphs,
//! each standing for its standard orientation (vertices in index order,
//! edges directed from the smaller endpoint). Graphs with an
//! orientation-reversing automorphism are zero and never stored.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{
    canonical_form, generate_graphs, generate_trivalent, has_orientation_reversing_automorphism,
    CanonicalGraph, GenerationSpec, Graph, OrientedGraph, Orientation, Sign,
};
use crate::linalg::{rational_rank, RankCertificate, SparseMatrixQ};
use crate::Rational;

/// Finite rational combination of canonical oriented graphs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphVector {
    terms: BTreeMap<CanonicalGraph, Rational>,
}

impl GraphVector {
    pub fn zero() -> Self {
        GraphVector::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of graphs with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalGraph, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, g: &CanonicalGraph) -> Rational {
        self.terms.get(g).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `coef` times the standard orientation of `g`. The caller must
    /// ensure `g` has no orientation-reversing automorphism.
    fn add_basis_term(&mut self, g: CanonicalGraph, coef: Rational) {
        if coef.is_zero() {
            return;
        }
        let slot = self.terms.entry(g.clone()).or_insert_with(Rational::zero);
        *slot += coef;
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    /// Adds `coef` times an arbitrary oriented graph, normalizing it first.
    pub fn add_oriented(&mut self, og: &OrientedGraph, coef: Rational) {
        if let Some((g, s)) = canonical_term(og) {
            self.add_basis_term(g, s.apply(coef));
        }
    }

    /// `coef * (g, standard orientation)`, zero if `g` is zero in the
    /// oriented space.
    pub fn basis(g: &CanonicalGraph, coef: Rational) -> Self {
        let mut v = GraphVector::zero();
        v.add_oriented(&OrientedGraph::standard(g.graph().clone()), coef);
        v
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return GraphVector::zero();
        }
        GraphVector { terms: self.terms.iter().map(|(g, v)| (g.clone(), v * c)).collect() }
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<F: FnMut(&CanonicalGraph) -> GraphVector>(&self, mut f: F) -> GraphVector {
        let mut out = GraphVector::zero();
        for (g, c) in &self.terms {
            out = out + f(g).scaled(c);
        }
        out
    }
}

impl Add for GraphVector {
    type Output = GraphVector;
    fn add(mut self, rhs: GraphVector) -> GraphVector {
        for (g, c) in rhs.terms {
            self.add_basis_term(g, c);
        }
        self
    }
}

impl Neg for GraphVector {
    type Output = GraphVector;
    fn neg(self) -> GraphVector {
        GraphVector { terms: self.terms.into_iter().map(|(g, c)| (g, -c)).collect() }
    }
}

impl Sub for GraphVector {
    type Output = GraphVector;
    fn sub(self, rhs: GraphVector) -> GraphVector {
        self + (-rhs)
    }
}

/// Canonical graph and the sign relating `og` to its standard orientation,
/// or `None` when `og` is zero (tadpole or orientation-reversing symmetry).
pub fn canonical_term(og: &OrientedGraph) -> Option<(CanonicalGraph, Sign)> {
    if og.graph.has_tadpole() {
        return None;
    }
    let (canon, relabel) = canonical_form(&og.graph);
    if has_orientation_reversing_automorphism(canon.graph()) {
        return None;
    }
    let moved = og.graph.relabeled(&relabel);
    let sign = og.orientation.relabeled(&relabel).class_sign(&moved);
    Some((canon, sign))
}

/// Canonicalizes every term, transports orientations, drops zero graphs and
/// merges like terms.
pub fn normalize<'a, I>(terms: I) -> GraphVector
where
    I: IntoIterator<Item = (Rational, &'a OrientedGraph)>,
{
    let mut v = GraphVector::zero();
    for (c, og) in terms {
        v.add_oriented(og, c);
    }
    v
}

/// Splits the 4-valent vertex `w` in the three possible ways.
///
/// For each pairing of the four darts at `w`, `w` keeps the pair containing
/// its smallest dart and a new vertex takes the other pair; a new edge runs
/// from `w` to the new vertex. Orientation: `w` is moved to the front, the
/// new vertex is placed second. Contracting the new edge of any term gives
/// back the input with the same sign, so the three terms form the image of
/// `og` under the vertex-splitting map adjoint to edge contraction.
pub fn ihx_expand(og: &OrientedGraph, w: usize) -> Result<GraphVector> {
    let g = &og.graph;
    if w >= g.num_vertices() {
        return Err(Error::VertexOutOfRange { vertex: w, num_vertices: g.num_vertices() });
    }
    for v in 0..g.num_vertices() {
        let expected = if v == w { 4 } else { 3 };
        let k = g.valence(v);
        if k != expected {
            return Err(Error::Valence {
                vertex: v,
                expected: alloc::format!("{expected}"),
                found: k,
            });
        }
    }
    if g.edges().any(|(a, b)| a == w && b == w) {
        return Err(Error::Malformed(alloc::format!("tadpole at the 4-valent vertex {w}")));
    }

    let n = g.num_vertices();
    let pos = og.orientation.position(w);
    let mut front: Vec<usize> = alloc::vec![pos];
    front.extend((0..n).filter(|&i| i != pos));
    let moved = og.orientation.reordered(&front);

    let d = g.darts_at(w);
    let pairings = [[d[2], d[3]], [d[1], d[3]], [d[1], d[2]]];
    let new_vertex = n;
    let new_edge = g.num_edges();

    let mut out = GraphVector::zero();
    for moving in pairings {
        let mut ends: Vec<[usize; 2]> = g.raw_ends().to_vec();
        for dart in moving {
            ends[dart / 2][dart % 2] = new_vertex;
        }
        ends.push([w, new_vertex]);
        let split = Graph::from_raw(n + 1, ends);
        let mut order = alloc::vec![w, new_vertex];
        order.extend(moved.vertex_order()[1..].iter().copied());
        let mut tails = moved.tails().to_vec();
        tails.push(2 * new_edge);
        let orientation =
            Orientation::new(&split, order, tails, moved.sign()).expect("well-formed split");
        out.add_oriented(&OrientedGraph::new(split, orientation), Rational::from_integer(1.into()));
    }
    Ok(out)
}

/// Which relations to quotient by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relations {
    /// Orientation relations only (implicit in normalization).
    As,
    /// Orientation and IHX relations.
    AsIhx,
}

/// Trivalent classes that survive AS, sorted canonically.
pub fn trivalent_basis(num_vertices: usize, connected_only: bool) -> Result<Vec<CanonicalGraph>> {
    Ok(generate_trivalent(num_vertices, connected_only, false)?
        .into_iter()
        .filter(|g| !has_orientation_reversing_automorphism(g.graph()))
        .collect())
}

/// Graphs with one 4-valent vertex and all others trivalent, one per
/// isomorphism class, whose splittings have `num_vertices` vertices. Each comes
/// with its 4-valent vertex.
pub fn ihx_sources(num_vertices: usize, connected_only: bool) -> Result<Vec<(CanonicalGraph, usize)>> {
    if num_vertices % 2 == 1 {
        return Err(Error::OddVertexCount(num_vertices));
    }
    if num_vertices < 2 {
        return Ok(Vec::new());
    }
    let v = num_vertices - 1;
    let spec = GenerationSpec {
        vertices: v,
        edges: Some((3 * v).div_ceil(2)),
        min_valence: 3,
        max_valence: 4,
        connected: connected_only,
        tadpoles: true,
    };
    Ok(generate_graphs(&spec)
        .into_iter()
        .filter_map(|g| {
            let w = (0..v).find(|&x| g.graph().valence(x) == 4)?;
            let tadpole_at_w = g.graph().edges().any(|(a, b)| a == w && b == w);
            (!tadpole_at_w).then_some((g, w))
        })
        .collect())
}

/// Relation rows over the canonical trivalent classes of one vertex count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationMatrix {
    pub columns: Vec<CanonicalGraph>,
    pub matrix: SparseMatrixQ,
}

impl RelationMatrix {
    /// One row per source: the IHX expansion at its 4-valent vertex.
    pub fn from_sources(columns: Vec<CanonicalGraph>, sources: &[(CanonicalGraph, usize)]) -> Self {
        let index: BTreeMap<&CanonicalGraph, usize> =
            columns.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let mut matrix = SparseMatrixQ::new(columns.len());
        for (g, w) in sources {
            let v = ihx_expand(&OrientedGraph::standard(g.graph().clone()), *w)
                .expect("sources are admissible");
            matrix.push_row(v.iter().map(|(t, c)| {
                let col = *index.get(t).expect("splitting lands in the column set");
                (col, c.clone())
            }));
        }
        RelationMatrix { columns, matrix }
    }

    pub fn rank(&self) -> RankCertificate {
        rational_rank(&self.matrix)
    }
}

/// The IHX relation matrix for `num_vertices`-vertex trivalent graphs.
pub fn relation_matrix(num_vertices: usize, connected_only: bool) -> Result<RelationMatrix> {
    let columns = trivalent_basis(num_vertices, connected_only)?;
    let sources = ihx_sources(num_vertices, connected_only)?;
    Ok(RelationMatrix::from_sources(columns, &sources))
}

/// Largest vertex count accepted by [`space_dimension`].
pub const MAX_DIAGRAM_VERTICES: usize = 8;

/// Dimension of the span of oriented trivalent classes modulo the selected
/// relations: `#classes - rank(relations)`.
pub fn space_dimension(num_vertices: usize, relations: Relations, connected_only: bool) -> Result<usize> {
    if num_vertices % 2 == 1 {
        return Err(Error::OddVertexCount(num_vertices));
    }
    if num_vertices > MAX_DIAGRAM_VERTICES {
        return Err(Error::OutOfRange(alloc::format!(
            "diagram spaces support up to {MAX_DIAGRAM_VERTICES} vertices, got {num_vertices}"
        )));
    }
    match relations {
        Relations::As => Ok(trivalent_basis(num_vertices, connected_only)?.len()),
        Relations::AsIhx => {
            let rm = relation_matrix(num_vertices, connected_only)?;
            Ok(rm.columns.len() - rm.rank().exact)
        }
    }
}
