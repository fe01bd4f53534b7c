//! Automorphism groups by backtracking over vertex images with incidence
//! pruning, expanded to dart level.

use alloc::vec::Vec;

use super::orientation::normal_tail;
use super::{Graph, Sign};
use crate::perm;

/// An automorphism as a vertex permutation together with the dart
/// permutation realizing it. The dart map commutes with the edge pairing and
/// with the dart-to-vertex map.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    pub vertex: Vec<usize>,
    pub dart: Vec<usize>,
}

impl Automorphism {
    pub fn identity(g: &Graph) -> Self {
        Automorphism {
            vertex: (0..g.num_vertices()).collect(),
            dart: (0..g.num_darts()).collect(),
        }
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            vertex: other.vertex.iter().map(|&v| self.vertex[v]).collect(),
            dart: other.dart.iter().map(|&d| self.dart[d]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism { vertex: perm::inverse(&self.vertex), dart: perm::inverse(&self.dart) }
    }

    /// Checks the defining commutation relations against `g`.
    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        self.dart.len() == g.num_darts()
            && (0..g.num_darts()).all(|d| {
                self.dart[d ^ 1] == self.dart[d] ^ 1
                    && g.dart_vertex(self.dart[d]) == self.vertex[g.dart_vertex(d)]
            })
    }

    /// Sign by which the automorphism acts on the orientation class.
    pub fn orientation_sign(&self, g: &Graph) -> Sign {
        let mut s = Sign::from_odd(perm::is_odd(&self.vertex));
        for e in 0..g.num_edges() {
            let image = self.dart[normal_tail(g, e)];
            if image != normal_tail(g, image / 2) {
                s = -s;
            }
        }
        s
    }
}

/// All vertex permutations preserving the edge multiplicity matrix.
pub fn vertex_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.num_vertices();
    let m = g.multiplicities();
    let val = g.valences();
    let mut out = Vec::new();
    let mut image = alloc::vec![usize::MAX; n];
    let mut used = alloc::vec![false; n];

    fn rec(
        v: usize,
        n: usize,
        m: &[Vec<usize>],
        val: &[usize],
        image: &mut [usize],
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if v == n {
            out.push(image.to_vec());
            return;
        }
        for w in 0..n {
            if used[w] || val[w] != val[v] || m[w][w] != m[v][v] {
                continue;
            }
            if (0..v).any(|u| m[v][u] != m[w][image[u]]) {
                continue;
            }
            image[v] = w;
            used[w] = true;
            rec(v + 1, n, m, val, image, used, out);
            used[w] = false;
            image[v] = usize::MAX;
        }
    }

    rec(0, n, &m, &val, &mut image, &mut used, &mut out);
    out
}

/// The full automorphism group as dart permutations, in deterministic order.
pub fn automorphisms(g: &Graph) -> Vec<Automorphism> {
    let mut out = Vec::new();
    for sigma in vertex_automorphisms(g) {
        // Group edges by unordered endpoint pair.
        let mut classes: Vec<((usize, usize), Vec<usize>)> = Vec::new();
        for e in 0..g.num_edges() {
            let (u, v) = g.endpoints(e);
            let key = (u.min(v), u.max(v));
            match classes.iter_mut().find(|(k, _)| *k == key) {
                Some((_, es)) => es.push(e),
                None => classes.push((key, alloc::vec![e])),
            }
        }
        // For each class: the target edges, and all bijections (with loop flips).
        let mut per_class: Vec<Vec<Vec<(usize, usize)>>> = Vec::new();
        for ((u, v), es) in &classes {
            let (a, b) = (sigma[*u], sigma[*v]);
            let target: Vec<usize> = (0..g.num_edges())
                .filter(|&f| {
                    let (x, y) = g.endpoints(f);
                    (x.min(y), x.max(y)) == (a.min(b), a.max(b))
                })
                .collect();
            let mut options = Vec::new();
            for (p, _) in perm::signed_permutations(es.len()) {
                let loop_flip_count = if u == v { 1usize << es.len() } else { 1 };
                for flips in 0..loop_flip_count {
                    let mut mapping = Vec::with_capacity(2 * es.len());
                    for (i, &e) in es.iter().enumerate() {
                        let f = target[p[i]];
                        for d in [2 * e, 2 * e + 1] {
                            let image = if u == v {
                                let flip = (flips >> i) & 1;
                                2 * f + ((d & 1) ^ flip)
                            } else {
                                let want = sigma[g.dart_vertex(d)];
                                if g.dart_vertex(2 * f) == want {
                                    2 * f
                                } else {
                                    2 * f + 1
                                }
                            };
                            mapping.push((d, image));
                        }
                    }
                    options.push(mapping);
                }
            }
            per_class.push(options);
        }
        // Cartesian product over classes.
        let mut idx = alloc::vec![0usize; per_class.len()];
        loop {
            let mut dart = alloc::vec![0usize; g.num_darts()];
            for (c, &i) in idx.iter().enumerate() {
                for &(d, img) in &per_class[c][i] {
                    dart[d] = img;
                }
            }
            out.push(Automorphism { vertex: sigma.clone(), dart });
            let mut c = 0;
            loop {
                if c == idx.len() {
                    break;
                }
                idx[c] += 1;
                if idx[c] < per_class[c].len() {
                    break;
                }
                idx[c] = 0;
                c += 1;
            }
            if c == idx.len() {
                break;
            }
        }
    }
    out
}

/// Does some automorphism reverse the orientation class? Such graphs are zero
/// in every oriented space. Any tadpole qualifies (swap its two darts); for
/// loopless graphs the sign depends only on the vertex permutation.
pub fn has_orientation_reversing_automorphism(g: &Graph) -> bool {
    if g.has_tadpole() {
        return true;
    }
    let m = g.multiplicities();
    vertex_automorphisms(g).into_iter().any(|sigma| {
        let mut odd = perm::is_odd(&sigma);
        for u in 0..g.num_vertices() {
            for v in u + 1..g.num_vertices() {
                if m[u][v] % 2 == 1 && sigma[u] > sigma[v] {
                    odd = !odd;
                }
            }
        }
        odd
    })
}
