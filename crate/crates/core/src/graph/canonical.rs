//! Canonical labeling by pruned search over vertex orderings.
//!
//! The certificate of a labeling is its sorted list of `(min, max)` edge
//! pairs; the canonical form is the labeling whose certificate is
//! lexicographically smallest. Reading the sorted list row by row (all pairs
//! starting at `0`, then at `1`, ...), the next unknown entry always belongs
//! to the first vertex that still has unlabeled neighbours, so the optimum
//! labels one of that vertex's unlabeled neighbours of maximal edge
//! multiplicity next. Only those branches are explored, and each branch is cut
//! as soon as its determined prefix exceeds the best certificate found.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::Graph;

/// A graph in canonical labeling: edges are the minimal certificate, stored
/// in sorted order with `u <= v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalGraph {
    graph: Graph,
}

impl CanonicalGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn serialization(&self) -> String {
        self.graph.serialization()
    }

    pub fn num_vertices(&self) -> usize {
        self.graph.num_vertices()
    }

    pub fn num_edges(&self) -> usize {
        self.graph.num_edges()
    }
}

impl core::fmt::Display for CanonicalGraph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.serialization())
    }
}

const UNSET: usize = usize::MAX;

/// Upper-triangle edge list under a labeling, compared lexicographically.
type Certificate = Vec<(usize, usize)>;

struct Search<'a> {
    n: usize,
    m: &'a [Vec<usize>],
    label: Vec<usize>,
    vertex_at: Vec<usize>,
    best: Option<(Certificate, Vec<usize>)>,
}

impl Search<'_> {
    /// Entries of the certificate fixed by the labels `0..k`, plus a lower
    /// bound for the first entry that is not yet fixed.
    fn prefix(&self, k: usize) -> (Certificate, Option<(usize, usize)>) {
        let mut out = Vec::new();
        for r in 0..k {
            let x = self.vertex_at[r];
            let mut open = false;
            let mut row: Vec<(usize, usize)> = Vec::new();
            for y in 0..self.n {
                let mult = self.m[x][y];
                if mult == 0 {
                    continue;
                }
                let ly = self.label[y];
                if ly == UNSET {
                    open = true;
                } else if ly >= r {
                    row.extend(core::iter::repeat_n((r, ly), mult));
                }
            }
            row.sort_unstable();
            out.extend(row);
            if open {
                return (out, Some((r, k)));
            }
        }
        if k < self.n {
            (out, Some((k, k)))
        } else {
            (out, None)
        }
    }

    /// Is the partial labeling with `k` labels already worse than the best?
    fn dominated(&self, k: usize) -> bool {
        let Some((best, _)) = &self.best else { return false };
        let (prefix, bound) = self.prefix(k);
        for (a, b) in prefix.iter().zip(best) {
            match a.cmp(b) {
                Ordering::Less => return false,
                Ordering::Greater => return true,
                Ordering::Equal => {}
            }
        }
        match (bound, best.get(prefix.len())) {
            (Some(bd), Some(b)) => *b < bd,
            _ => false,
        }
    }

    fn candidates(&self, k: usize) -> Vec<usize> {
        for r in 0..k {
            let x = self.vertex_at[r];
            let open: Vec<usize> =
                (0..self.n).filter(|&y| self.m[x][y] > 0 && self.label[y] == UNSET).collect();
            if let Some(max) = open.iter().map(|&y| self.m[x][y]).max() {
                return open.into_iter().filter(|&y| self.m[x][y] == max).collect();
            }
        }
        (0..self.n).filter(|&y| self.label[y] == UNSET).collect()
    }

    fn run(&mut self, k: usize) {
        if k == self.n {
            let (cert, _) = self.prefix(k);
            let better = match &self.best {
                None => true,
                Some((b, _)) => cert < *b,
            };
            if better {
                self.best = Some((cert, self.label.clone()));
            }
            return;
        }
        for x in self.candidates(k) {
            self.label[x] = k;
            self.vertex_at[k] = x;
            if !self.dominated(k + 1) {
                self.run(k + 1);
            }
            self.label[x] = UNSET;
            self.vertex_at[k] = UNSET;
        }
    }
}

/// Canonical form of `g` and the relabeling (`relabeling[v]` is the canonical
/// label of `g`'s vertex `v`). Deterministic for a given input labeling.
pub fn canonical_form(g: &Graph) -> (CanonicalGraph, Vec<usize>) {
    let n = g.num_vertices();
    let m = g.multiplicities();
    let mut search = Search {
        n,
        m: &m,
        label: alloc::vec![UNSET; n],
        vertex_at: alloc::vec![UNSET; n],
        best: None,
    };
    search.run(0);
    let (cert, relabeling) = search.best.expect("search visits at least one leaf");
    let ends = cert.into_iter().map(|(u, v)| [u, v]).collect();
    (CanonicalGraph { graph: Graph::from_raw(n, ends) }, relabeling)
}

impl CanonicalGraph {
    /// Wraps a graph already known to be in canonical labeling.
    pub(crate) fn from_canonical_unchecked(graph: Graph) -> Self {
        CanonicalGraph { graph }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm;

    /// Brute force over every vertex permutation.
    fn brute_canonical(g: &Graph) -> Vec<(usize, usize)> {
        let n = g.num_vertices();
        perm::signed_permutations(n)
            .into_iter()
            .map(|(p, _)| g.relabeled(&p).sorted_edges())
            .min()
            .unwrap()
    }

    #[test]
    fn theta_has_single_labeling() {
        let (c, _) = canonical_form(&Graph::theta());
        assert_eq!(c.graph().sorted_edges(), alloc::vec![(0, 1), (0, 1), (0, 1)]);
        assert_eq!(c.serialization(), "V=2;E=0-1,0-1,0-1");
    }

    #[test]
    fn k4_relabeled_agrees() {
        let k4 = Graph::k4();
        let renamed = k4.relabeled(&[3, 1, 0, 2]);
        assert_eq!(canonical_form(&k4).0, canonical_form(&renamed).0);
    }

    #[test]
    fn relabeling_maps_input_onto_canonical() {
        for g in [Graph::doubled_square(), Graph::dumbbell(), Graph::k4()] {
            let (c, r) = canonical_form(&g);
            assert_eq!(g.relabeled(&r).sorted_edges(), c.graph().sorted_edges());
        }
    }

    #[test]
    fn agrees_with_brute_force_minimum() {
        let graphs = [
            Graph::theta(),
            Graph::k4(),
            Graph::doubled_square(),
            Graph::dumbbell(),
            Graph::theta().disjoint_union(&Graph::dumbbell()),
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 1), (3, 3)])
                .unwrap(),
            Graph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
                .unwrap(),
        ];
        for g in graphs {
            let (c, _) = canonical_form(&g);
            assert_eq!(c.graph().sorted_edges(), brute_canonical(&g), "{g}");
        }
    }

    #[test]
    fn disjoint_union_swap_invariant() {
        let a = Graph::theta().disjoint_union(&Graph::k4());
        let b = Graph::k4().disjoint_union(&Graph::theta());
        assert_eq!(canonical_form(&a).0, canonical_form(&b).0);
        let tt = Graph::theta().disjoint_union(&Graph::theta());
        let swapped = tt.relabeled(&[2, 3, 0, 1]);
        assert_eq!(canonical_form(&tt).0, canonical_form(&swapped).0);
    }
}
