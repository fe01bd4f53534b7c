//! Orientations: a total order on vertices plus a direction on every edge,
//! modulo even changes. Transposing two vertices or reversing one edge is an
//! odd change.

use alloc::vec::Vec;
use core::hash::{Hash, Hasher};
use core::ops::{Mul, Neg};

use super::{CyclicData, Graph};
use crate::error::{Error, Result};
use crate::perm;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_odd(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn to_rational(self) -> Rational {
        Rational::from_integer(self.to_i64().into())
    }

    /// Applies the sign to a value.
    pub fn apply<T: Neg<Output = T>>(self, x: T) -> T {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_odd(self != rhs)
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

/// The dart of `edge` at its smaller endpoint (`2e` for tadpoles).
pub(crate) fn normal_tail(graph: &Graph, edge: usize) -> usize {
    let (u, v) = graph.endpoints(edge);
    if v < u {
        2 * edge + 1
    } else {
        2 * edge
    }
}

/// `(vertex order, edge directions, sign)`. `vertex_order[i]` is the vertex in
/// position `i`; `tails[e]` is the dart where edge `e` starts.
#[derive(Clone, Debug, Eq)]
pub struct Orientation {
    vertex_order: Vec<usize>,
    tails: Vec<usize>,
    sign: Sign,
}

impl Orientation {
    /// Vertices in index order, every edge directed from its smaller endpoint,
    /// sign `+`.
    pub fn standard(graph: &Graph) -> Self {
        Orientation {
            vertex_order: (0..graph.num_vertices()).collect(),
            tails: (0..graph.num_edges()).map(|e| normal_tail(graph, e)).collect(),
            sign: Sign::Plus,
        }
    }

    pub fn new(graph: &Graph, vertex_order: Vec<usize>, tails: Vec<usize>, sign: Sign) -> Result<Self> {
        let n = graph.num_vertices();
        if vertex_order.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: vertex_order.len() });
        }
        let mut seen = alloc::vec![false; n];
        for &v in &vertex_order {
            if v >= n || seen[v] {
                return Err(Error::Malformed(alloc::format!(
                    "vertex order is not a permutation of 0..{n}"
                )));
            }
            seen[v] = true;
        }
        if tails.len() != graph.num_edges() {
            return Err(Error::LengthMismatch { expected: graph.num_edges(), found: tails.len() });
        }
        for (e, &t) in tails.iter().enumerate() {
            if t / 2 != e {
                return Err(Error::Malformed(alloc::format!(
                    "tail dart {t} does not belong to edge {e}"
                )));
            }
        }
        Ok(Orientation { vertex_order, tails, sign })
    }

    pub fn vertex_order(&self) -> &[usize] {
        &self.vertex_order
    }

    pub fn tails(&self) -> &[usize] {
        &self.tails
    }

    pub fn tail(&self, edge: usize) -> usize {
        self.tails[edge]
    }

    pub fn head(&self, edge: usize) -> usize {
        self.tails[edge] ^ 1
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// Position of vertex `v` in the vertex order.
    pub fn position(&self, v: usize) -> usize {
        self.vertex_order.iter().position(|&x| x == v).expect("vertex in order")
    }

    /// Sign of this orientation relative to [`Orientation::standard`].
    pub fn class_sign(&self, graph: &Graph) -> Sign {
        let mut s = self.sign * Sign::from_odd(perm::is_odd(&self.vertex_order));
        for (e, &t) in self.tails.iter().enumerate() {
            if t != normal_tail(graph, e) {
                s = -s;
            }
        }
        s
    }

    /// The standard representative of the same class.
    pub fn normalized(&self, graph: &Graph) -> Orientation {
        let mut o = Orientation::standard(graph);
        o.sign = self.class_sign(graph);
        o
    }

    pub fn negated(&self) -> Orientation {
        let mut o = self.clone();
        o.sign = -o.sign;
        o
    }

    /// Flips the direction of one edge, keeping the stored sign (an odd change).
    pub fn with_edge_reversed(&self, edge: usize) -> Orientation {
        let mut o = self.clone();
        o.tails[edge] ^= 1;
        o
    }

    /// Exchanges the vertices in positions `i` and `j`, keeping the stored sign
    /// (an odd change when `i != j`).
    pub fn with_positions_swapped(&self, i: usize, j: usize) -> Orientation {
        let mut o = self.clone();
        o.vertex_order.swap(i, j);
        o
    }

    /// Reorders the vertex order by `perm` (new position `i` holds old
    /// position `perm[i]`) and compensates the sign, so the class is unchanged.
    pub fn reordered(&self, perm_positions: &[usize]) -> Orientation {
        let order = perm_positions.iter().map(|&p| self.vertex_order[p]).collect();
        Orientation {
            vertex_order: order,
            tails: self.tails.clone(),
            sign: self.sign * Sign::from_odd(perm::is_odd(perm_positions)),
        }
    }

    /// The orientation of `graph.relabeled(perm)` obtained by transport.
    pub fn relabeled(&self, perm: &[usize]) -> Orientation {
        Orientation {
            vertex_order: self.vertex_order.iter().map(|&v| perm[v]).collect(),
            tails: self.tails.clone(),
            sign: self.sign,
        }
    }
}

/// Equality of orientation classes: the two differ by an even change.
impl PartialEq for Orientation {
    fn eq(&self, other: &Self) -> bool {
        if self.vertex_order.len() != other.vertex_order.len()
            || self.tails.len() != other.tails.len()
        {
            return false;
        }
        let mut s = self.sign * other.sign;
        if perm::relative_parity_odd(&self.vertex_order, &other.vertex_order) {
            s = -s;
        }
        for (a, b) in self.tails.iter().zip(&other.tails) {
            if a != b {
                s = -s;
            }
        }
        s == Sign::Plus
    }
}

impl Orientation {
    /// Sign relative to the sorted vertex order with every tail on its even
    /// dart. Together with the lengths it determines the class.
    fn reference_sign(&self) -> Sign {
        let odd_tails = self.tails.iter().filter(|&&t| t % 2 == 1).count();
        self.sign * Sign::from_odd(perm::is_odd(&self.vertex_order)) * Sign::from_odd(odd_tails % 2 == 1)
    }
}

impl Hash for Orientation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.vertex_order.len().hash(state);
        self.tails.len().hash(state);
        self.reference_sign().hash(state);
    }
}

/// A graph together with an orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedGraph {
    pub graph: Graph,
    pub orientation: Orientation,
}

impl OrientedGraph {
    pub fn new(graph: Graph, orientation: Orientation) -> Self {
        OrientedGraph { graph, orientation }
    }

    pub fn standard(graph: Graph) -> Self {
        let orientation = Orientation::standard(&graph);
        OrientedGraph { graph, orientation }
    }

    /// Same oriented graph under the vertex renaming `v -> perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        OrientedGraph {
            graph: self.graph.relabeled(perm),
            orientation: self.orientation.relabeled(perm),
        }
    }
}

/// Orientation induced by cyclic orders at the vertices of a trivalent graph.
///
/// Two dart sequences are compared: the edge-grouped one (edges in index
/// order, each as head dart then tail dart, tails at the smaller endpoint) and
/// the vertex-grouped one (vertices in index order, each listing its darts in
/// cyclic order starting from the smallest dart). The sign of the result is
/// the parity of the permutation between them. With this rule the theta graph
/// with the same cyclic edge order at both vertices is positively oriented.
pub fn orientation_from_cyclic(graph: &Graph, cyclic: &CyclicData) -> Result<Orientation> {
    for v in 0..graph.num_vertices() {
        let k = graph.valence(v);
        if k != 3 {
            return Err(Error::Valence { vertex: v, expected: "3".into(), found: k });
        }
    }
    let cyclic = CyclicData::new(graph, cyclic.orders().to_vec())?;
    let mut reference = Vec::with_capacity(graph.num_darts());
    for e in 0..graph.num_edges() {
        let t = normal_tail(graph, e);
        reference.push(t ^ 1);
        reference.push(t);
    }
    let mut grouped = Vec::with_capacity(graph.num_darts());
    for v in 0..graph.num_vertices() {
        let order = cyclic.at(v);
        let start = (0..order.len()).min_by_key(|&i| order[i]).unwrap_or(0);
        grouped.extend(order[start..].iter().chain(&order[..start]).copied());
    }
    let mut o = Orientation::standard(graph);
    o.sign = Sign::from_odd(perm::relative_parity_odd(&reference, &grouped));
    Ok(o)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta_aligned() -> CyclicData {
        let g = Graph::theta();
        CyclicData::from_edge_lists(&g, &[alloc::vec![0, 1, 2], alloc::vec![0, 1, 2]]).unwrap()
    }

    #[test]
    fn theta_aligned_is_positive() {
        let g = Graph::theta();
        let o = orientation_from_cyclic(&g, &theta_aligned()).unwrap();
        assert_eq!(o.sign(), Sign::Plus);
        assert_eq!(o, Orientation::standard(&g));
    }

    #[test]
    fn reversing_one_cyclic_order_flips() {
        let g = Graph::theta();
        let c = theta_aligned();
        let a = orientation_from_cyclic(&g, &c).unwrap();
        let b = orientation_from_cyclic(&g, &c.reversed_at(1)).unwrap();
        assert_eq!(a.negated(), b);
        let r = orientation_from_cyclic(&g, &c.rotated_at(0, 1)).unwrap();
        assert_eq!(a, r);
    }

    #[test]
    fn k4_by_neighbor_sign_is_reproducible() {
        let g = Graph::k4();
        let c = CyclicData::by_neighbor(&g);
        let a = orientation_from_cyclic(&g, &c).unwrap();
        let b = orientation_from_cyclic(&g, &c).unwrap();
        assert_eq!(a.sign(), b.sign());
        // Hand evaluation: reference (head,tail) per edge is
        // 1,0,3,2,5,4,7,6,9,8,11,10; vertex-grouped sequence is
        // 0,2,4 | 1,6,8 | 3,7,10 | 5,9,11.
        let reference = [1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10];
        let grouped = [0, 2, 4, 1, 6, 8, 3, 7, 10, 5, 9, 11];
        let odd = perm::relative_parity_odd(&reference, &grouped);
        assert_eq!(a.sign(), Sign::from_odd(odd));
    }

    #[test]
    fn non_trivalent_rejected() {
        let g = Graph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let c = CyclicData::ascending(&g);
        assert!(matches!(orientation_from_cyclic(&g, &c), Err(Error::Valence { .. })));
    }

    #[test]
    fn odd_changes_flip_and_double_changes_restore() {
        for g in [Graph::theta(), Graph::k4()] {
            let o = Orientation::standard(&g);
            let n = g.num_vertices();
            for i in 0..n - 1 {
                let s = o.with_positions_swapped(i, i + 1);
                assert_eq!(s, o.negated());
                assert_eq!(s.with_positions_swapped(i, i + 1), o);
            }
            for e in 0..g.num_edges() {
                let r = o.with_edge_reversed(e);
                assert_eq!(r, o.negated());
                assert_eq!(r.with_edge_reversed(e), o);
                let both = r.with_positions_swapped(0, 1);
                assert_eq!(both, o);
                assert_eq!(both.with_edge_reversed(e).with_positions_swapped(0, 1), o);
            }
        }
    }

    #[test]
    fn reordered_keeps_class() {
        let g = Graph::k4();
        let o = Orientation::standard(&g);
        let r = o.reordered(&[2, 0, 3, 1]);
        assert_eq!(r, o);
        assert_eq!(r.class_sign(&g), Sign::Plus);
    }
}
