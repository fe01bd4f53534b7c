#![allow(dead_code)]

use trivalent_core::poly::Polynomial;
use trivalent_core::symplectic::CubicTensor;
use trivalent_core::{generate_trivalent, CyclicData, Graph, OrientedGraph, Rational};

/// splitmix64; enough for reproducible test inputs.
pub struct Mix(pub u64);

impl Mix {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }

    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            xs.swap(i, self.below(i + 1));
        }
    }

    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        self.shuffle(&mut p);
        p
    }

    /// Small nonzero-denominator rational in [-3, 3].
    pub fn rational(&mut self) -> Rational {
        let num = self.below(7) as i64 - 3;
        let den = self.below(3) as i64 + 1;
        Rational::new(num.into(), den.into())
    }

    pub fn cyclic(&mut self, g: &Graph) -> CyclicData {
        let orders = (0..g.num_vertices())
            .map(|v| {
                let mut ds = g.darts_at(v);
                self.shuffle(&mut ds);
                ds
            })
            .collect();
        CyclicData::new(g, orders).unwrap()
    }

    /// Random polynomial in `2n` variables with terms of degree in `lo..=hi`.
    pub fn polynomial(&mut self, n: usize, lo: u32, hi: u32, terms: usize) -> Polynomial {
        let vars = 2 * n;
        let mut out = Polynomial::zero(vars);
        for _ in 0..terms {
            let deg = lo + self.below((hi - lo + 1) as usize) as u32;
            let mut e = vec![0u32; vars];
            for _ in 0..deg {
                e[self.below(vars)] += 1;
            }
            out = &out + &Polynomial::monomial(vars, e, self.rational());
        }
        out
    }

    pub fn cubic_tensor(&mut self, n: usize) -> CubicTensor {
        CubicTensor::from_polynomial(&self.polynomial(n, 3, 3, 4))
    }
}

/// Every trivalent graph with at most `max_v` vertices, tadpoles and
/// disconnected ones included.
pub fn all_trivalent(max_v: usize) -> Vec<Graph> {
    (2..=max_v)
        .step_by(2)
        .flat_map(|v| generate_trivalent(v, false, true).unwrap())
        .map(|c| c.into_graph())
        .collect()
}

/// Calls `f` on every assignment of a value in `0..dim` to each of `slots`.
pub fn for_each_assignment(slots: usize, dim: usize, mut f: impl FnMut(&[usize])) {
    let mut idx = vec![0usize; slots];
    loop {
        f(&idx);
        let mut k = 0;
        while k < slots {
            idx[k] += 1;
            if idx[k] < dim {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == slots {
            return;
        }
    }
}

/// Symplectic contraction by enumerating every index tuple on darts.
pub fn brute_contract(og: &OrientedGraph, tensors: &[CubicTensor], n: usize) -> Rational {
    let g = &og.graph;
    let dim = 2 * n;
    let omega = |a: usize, b: usize| -> i64 {
        if a < n && b == a + n {
            1
        } else if a >= n && b + n == a {
            -1
        } else {
            0
        }
    };
    let mut slot_of_vertex = vec![0; g.num_vertices()];
    for (i, &v) in og.orientation.vertex_order().iter().enumerate() {
        slot_of_vertex[v] = i;
    }
    let mut total = Rational::from_integer(0.into());
    for_each_assignment(g.num_darts(), dim, |idx| {
        let mut w: i64 = 1;
        for e in 0..g.num_edges() {
            let t = og.orientation.tail(e);
            w *= omega(idx[t], idx[t ^ 1]);
        }
        if w == 0 {
            return;
        }
        let mut term = Rational::from_integer(w.into());
        for v in 0..g.num_vertices() {
            let ds = g.darts_at(v);
            term *= tensors[slot_of_vertex[v]].get(idx[ds[0]], idx[ds[1]], idx[ds[2]]);
        }
        total += term;
    });
    og.orientation.sign().apply(total)
}

/// Lie weight by enumerating every index tuple on darts, with the algebra
/// given as a lowered structure function and an inverse metric.
pub fn brute_lie(
    g: &Graph,
    cyc: &CyclicData,
    dim: usize,
    lowered: impl Fn(usize, usize, usize) -> Rational,
    inverse_metric: impl Fn(usize, usize) -> Rational,
) -> Rational {
    let mut total = Rational::from_integer(0.into());
    for_each_assignment(g.num_darts(), dim, |idx| {
        let mut term = Rational::from_integer(1.into());
        for e in 0..g.num_edges() {
            term *= inverse_metric(idx[2 * e], idx[2 * e + 1]);
            if term == Rational::from_integer(0.into()) {
                return;
            }
        }
        for v in 0..g.num_vertices() {
            let o = cyc.at(v);
            term *= lowered(idx[o[0]], idx[o[1]], idx[o[2]]);
        }
        total += term;
    });
    total
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
