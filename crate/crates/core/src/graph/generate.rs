//! Orderly generation of multigraphs up to isomorphism.
//!
//! Multiplicity matrices are filled row by row in the shape every canonical
//! labeling has: each row introduces its not-yet-seen neighbours as the next
//! consecutive labels, in non-increasing multiplicity, and a new component
//! can only start when every earlier row is closed. A completed matrix is
//! kept iff it equals the canonical form of its graph, so each isomorphism
//! class appears exactly once.

use alloc::vec::Vec;

use super::{canonical_form, CanonicalGraph, Graph};
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`generate_trivalent`].
pub const MAX_GENERATED_VERTICES: usize = 10;

/// What to enumerate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationSpec {
    pub vertices: usize,
    /// Exact edge count, or `None` for any.
    pub edges: Option<usize>,
    pub min_valence: usize,
    pub max_valence: usize,
    pub connected: bool,
    pub tadpoles: bool,
}

impl GenerationSpec {
    pub fn trivalent(vertices: usize, connected: bool, tadpoles: bool) -> Self {
        GenerationSpec {
            vertices,
            edges: Some(3 * vertices / 2),
            min_valence: 3,
            max_valence: 3,
            connected,
            tadpoles,
        }
    }
}

struct Gen<'a> {
    spec: &'a GenerationSpec,
    n: usize,
    m: Vec<Vec<usize>>,
    deg: Vec<usize>,
    edges: usize,
    out: Vec<CanonicalGraph>,
}

impl Gen<'_> {
    fn edge_room(&self) -> usize {
        self.spec.edges.map_or(usize::MAX, |e| e - self.edges)
    }

    fn cap(&self, v: usize) -> usize {
        self.spec.max_valence - self.deg[v]
    }

    fn add(&mut self, u: usize, v: usize, k: usize) {
        self.m[u][v] += k;
        if u != v {
            self.m[v][u] += k;
        }
        self.deg[u] += k;
        self.deg[v] += k;
        self.edges += k;
    }

    fn remove(&mut self, u: usize, v: usize, k: usize) {
        self.m[u][v] -= k;
        if u != v {
            self.m[v][u] -= k;
        }
        self.deg[u] -= k;
        self.deg[v] -= k;
        self.edges -= k;
    }

    fn row(&mut self, u: usize, introduced: usize) {
        if u == self.n {
            self.leaf();
            return;
        }
        let mut introduced = introduced;
        if u >= introduced {
            if self.spec.connected && u > 0 {
                return;
            }
            introduced = u + 1;
        }
        let max_loops = if self.spec.tadpoles { self.cap(u) / 2 } else { 0 };
        for l in 0..=max_loops.min(self.edge_room()) {
            self.add(u, u, l);
            self.existing(u, u + 1, introduced);
            self.remove(u, u, l);
        }
    }

    fn existing(&mut self, u: usize, v: usize, introduced: usize) {
        if v >= introduced {
            self.fresh(u, introduced, usize::MAX);
            return;
        }
        let top = self.cap(u).min(self.cap(v)).min(self.edge_room());
        for k in 0..=top {
            self.add(u, v, k);
            self.existing(u, v + 1, introduced);
            self.remove(u, v, k);
        }
    }

    fn fresh(&mut self, u: usize, next: usize, prev: usize) {
        self.finish_row(u, next);
        if next >= self.n {
            return;
        }
        let top = prev.min(self.cap(u)).min(self.cap(next)).min(self.edge_room());
        for k in 1..=top {
            self.add(u, next, k);
            self.fresh(u, next + 1, k);
            self.remove(u, next, k);
        }
    }

    fn finish_row(&mut self, u: usize, introduced: usize) {
        if self.deg[u] < self.spec.min_valence {
            return;
        }
        self.row(u + 1, introduced);
    }

    fn leaf(&mut self) {
        if self.spec.edges.is_some_and(|e| e != self.edges) {
            return;
        }
        let g = Graph::from_multiplicities(&self.m).expect("every vertex has valence >= 1");
        let (canon, _) = canonical_form(&g);
        if canon.graph().raw_ends() == g.raw_ends() {
            self.out.push(CanonicalGraph::from_canonical_unchecked(g));
        }
    }
}

/// One canonical representative per isomorphism class matching `spec`,
/// sorted by canonical serialization.
pub fn generate_graphs(spec: &GenerationSpec) -> Vec<CanonicalGraph> {
    assert!(spec.min_valence >= 1, "isolated vertices are not representable");
    let n = spec.vertices;
    if n == 0 {
        return Vec::new();
    }
    let mut g = Gen {
        spec,
        n,
        m: alloc::vec![alloc::vec![0; n]; n],
        deg: alloc::vec![0; n],
        edges: 0,
        out: Vec::new(),
    };
    g.row(0, 0);
    let mut out = g.out;
    out.sort();
    out
}

/// All trivalent multigraphs on `num_vertices` vertices up to isomorphism.
pub fn generate_trivalent(
    num_vertices: usize,
    connected_only: bool,
    allow_tadpoles: bool,
) -> Result<Vec<CanonicalGraph>> {
    if num_vertices % 2 == 1 {
        return Err(Error::OddVertexCount(num_vertices));
    }
    if num_vertices == 0 || num_vertices > MAX_GENERATED_VERTICES {
        return Err(Error::OutOfRange(alloc::format!(
            "trivalent generation supports 2..={MAX_GENERATED_VERTICES} vertices, got {num_vertices}"
        )));
    }
    Ok(generate_graphs(&GenerationSpec::trivalent(num_vertices, connected_only, allow_tadpoles)))
}
