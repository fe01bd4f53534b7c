//! Weight systems of metrized Lie algebras.
//!
//! Put the lowered structure tensor `c_abc` at every vertex, reading the
//! darts in their cyclic order, and contract along edges with the inverse
//! metric. Cyclic invariance of `c_abc` makes the starting dart irrelevant;
//! its antisymmetry makes reversal of one order a sign change, and the
//! Jacobi identity kills IHX.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::diagram::GraphVector;
use crate::error::{Error, Result};
use crate::graph::{orientation_from_cyclic, CyclicData, Graph, OrientedGraph, Orientation};
use crate::linalg::inverse_dense;
use crate::statesum::{EdgeChoice, StateSum};
use crate::Rational;

/// Structure constants `c_ab^c` and a symmetric bilinear form `g_ab`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetrizedLieAlgebra {
    dim: usize,
    /// `structure[(a*dim + b)*dim + c] = c_ab^c`.
    structure: Vec<Rational>,
    /// `metric[a*dim + b] = g_ab`.
    metric: Vec<Rational>,
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

impl MetrizedLieAlgebra {
    pub fn new(dim: usize, structure: Vec<Rational>, metric: Vec<Rational>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        if structure.len() != dim * dim * dim {
            return Err(Error::LengthMismatch { expected: dim * dim * dim, found: structure.len() });
        }
        if metric.len() != dim * dim {
            return Err(Error::LengthMismatch { expected: dim * dim, found: metric.len() });
        }
        Ok(MetrizedLieAlgebra { dim, structure, metric })
    }

    /// From nonzero entries; omitted entries are zero and repeats add up.
    pub fn from_entries(
        dim: usize,
        structure: &[(usize, usize, usize, Rational)],
        metric: &[(usize, usize, Rational)],
    ) -> Result<Self> {
        let mut s = alloc::vec![Rational::zero(); dim * dim * dim];
        let mut m = alloc::vec![Rational::zero(); dim * dim];
        for (a, b, c, v) in structure {
            if let Some(&bad) = [a, b, c].into_iter().find(|&&i| i >= dim) {
                return Err(Error::OutOfRange(alloc::format!("structure index {bad} not below dimension {dim}")));
            }
            s[(a * dim + b) * dim + c] += v;
        }
        for (a, b, v) in metric {
            if let Some(&bad) = [a, b].into_iter().find(|&&i| i >= dim) {
                return Err(Error::OutOfRange(alloc::format!("metric index {bad} not below dimension {dim}")));
            }
            m[a * dim + b] += v;
        }
        Self::new(dim, s, m)
    }

    /// `so(3)`: `[e_a, e_b] = ε_abc e_c`, identity metric.
    pub fn so3() -> Self {
        let mut s = Vec::new();
        for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            s.push((a, b, c, q(1)));
            s.push((b, a, c, q(-1)));
        }
        let m: Vec<_> = (0..3).map(|i| (i, i, q(1))).collect();
        Self::from_entries(3, &s, &m).expect("preset is well formed")
    }

    /// `sl(2)` in the basis `h, e, f` with the trace form of the defining
    /// representation.
    pub fn sl2() -> Self {
        let (h, e, f) = (0, 1, 2);
        let s = [
            (h, e, e, q(2)),
            (e, h, e, q(-2)),
            (h, f, f, q(-2)),
            (f, h, f, q(2)),
            (e, f, h, q(1)),
            (f, e, h, q(-1)),
        ];
        let m = [(h, h, q(2)), (e, f, q(1)), (f, e, q(1))];
        Self::from_entries(3, &s, &m).expect("preset is well formed")
    }

    /// Zero bracket with the identity metric.
    pub fn abelian(dim: usize) -> Self {
        let m: Vec<_> = (0..dim).map(|i| (i, i, q(1))).collect();
        Self::from_entries(dim, &[], &m).expect("preset is well formed")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constant(&self, a: usize, b: usize, c: usize) -> &Rational {
        &self.structure[(a * self.dim + b) * self.dim + c]
    }

    pub fn metric(&self, a: usize, b: usize) -> &Rational {
        &self.metric[a * self.dim + b]
    }

    /// `c_abc = Σ_d c_ab^d g_dc`.
    pub fn lowered(&self, a: usize, b: usize, c: usize) -> Rational {
        (0..self.dim).map(|d| self.structure_constant(a, b, d) * self.metric(d, c)).sum()
    }

    fn metric_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.dim).map(|a| (0..self.dim).map(|b| self.metric(a, b).clone()).collect()).collect()
    }
}

/// Outcome of one structural check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// First failing index tuple.
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraReport {
    pub checks: Vec<CheckResult>,
}

impl AlgebraReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn first<I: IntoIterator<Item = Vec<usize>>, F: Fn(&[usize]) -> bool>(tuples: I, fails: F) -> Option<Vec<usize>> {
    tuples.into_iter().find(|t| fails(t))
}

fn tuples(dim: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = dim.pow(len as u32);
    (0..total).map(move |mut x| {
        let mut t = alloc::vec![0; len];
        for slot in t.iter_mut().rev() {
            *slot = x % dim;
            x /= dim;
        }
        t
    })
}

/// Runs every structural check and reports each with a witness on failure.
pub fn validate_algebra(alg: &MetrizedLieAlgebra) -> AlgebraReport {
    let d = alg.dim;
    let c = |a, b, e| alg.structure_constant(a, b, e);
    let mut checks = Vec::new();

    let anti = first(tuples(d, 2), |t| (0..d).any(|e| c(t[0], t[1], e) != &-c(t[1], t[0], e)));
    checks.push(CheckResult { name: "antisymmetry", passed: anti.is_none(), witness: anti });

    let jacobi = first(tuples(d, 4), |t| {
        let (a, b, x, out) = (t[0], t[1], t[2], t[3]);
        let s: Rational = (0..d)
            .map(|e| c(a, b, e) * c(e, x, out) + c(b, x, e) * c(e, a, out) + c(x, a, e) * c(e, b, out))
            .sum();
        !s.is_zero()
    });
    checks.push(CheckResult { name: "jacobi", passed: jacobi.is_none(), witness: jacobi });

    let sym = first(tuples(d, 2), |t| alg.metric(t[0], t[1]) != alg.metric(t[1], t[0]));
    checks.push(CheckResult { name: "metric_symmetric", passed: sym.is_none(), witness: sym });

    let nondegenerate = inverse_dense(&alg.metric_rows()).is_some();
    checks.push(CheckResult {
        name: "metric_nondegenerate",
        passed: nondegenerate,
        witness: if nondegenerate { None } else { Some(Vec::new()) },
    });

    let invariant = first(tuples(d, 3), |t| {
        let x = alg.lowered(t[0], t[1], t[2]);
        x != -alg.lowered(t[1], t[0], t[2]) || x != alg.lowered(t[1], t[2], t[0])
    });
    checks.push(CheckResult { name: "invariance", passed: invariant.is_none(), witness: invariant });

    AlgebraReport { checks }
}

/// A metrized Lie algebra that passed [`validate_algebra`], with the data
/// the weight computation needs already scaled to integers.
#[derive(Clone, Debug)]
pub struct ValidatedAlgebra {
    algebra: MetrizedLieAlgebra,
    lowered: Vec<BigInt>,
    lowered_den: BigInt,
    inverse_metric: Vec<EdgeChoice>,
    inverse_den: BigInt,
}

impl ValidatedAlgebra {
    pub fn new(algebra: MetrizedLieAlgebra) -> Result<Self> {
        let report = validate_algebra(&algebra);
        if !report.all_passed() {
            let mut msg = String::new();
            for f in report.failures() {
                if !msg.is_empty() {
                    msg.push_str("; ");
                }
                msg.push_str(&alloc::format!("{} failed at {:?}", f.name, f.witness.as_deref().unwrap_or(&[])));
            }
            return Err(Error::InvalidAlgebra(msg));
        }
        let d = algebra.dim;
        let lowered: Vec<Rational> = tuples(d, 3).map(|t| algebra.lowered(t[0], t[1], t[2])).collect();
        let lowered_den = lowered.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let lowered_int = lowered.iter().map(|x| x.numer() * (&lowered_den / x.denom())).collect();
        let inv = inverse_dense(&algebra.metric_rows()).expect("validated metric is invertible");
        let inverse_den = inv.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let mut choices = Vec::new();
        for (a, row) in inv.iter().enumerate() {
            for (b, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    choices.push(EdgeChoice { first: a, second: b, weight: x.numer() * (&inverse_den / x.denom()) });
                }
            }
        }
        Ok(ValidatedAlgebra { algebra, lowered: lowered_int, lowered_den, inverse_metric: choices, inverse_den })
    }

    pub fn so3() -> Self {
        Self::new(MetrizedLieAlgebra::so3()).expect("so3 preset validates")
    }

    pub fn sl2() -> Self {
        Self::new(MetrizedLieAlgebra::sl2()).expect("sl2 preset validates")
    }

    pub fn algebra(&self) -> &MetrizedLieAlgebra {
        &self.algebra
    }
}

fn check_cyclic(g: &Graph, cyc: &CyclicData) -> Result<()> {
    if cyc.orders().len() != g.num_vertices() {
        return Err(Error::LengthMismatch { expected: g.num_vertices(), found: cyc.orders().len() });
    }
    for v in 0..g.num_vertices() {
        let mut listed = cyc.at(v).to_vec();
        listed.sort_unstable();
        if listed != g.darts_at(v) {
            return Err(Error::CyclicMismatch { vertex: v, reason: "cyclic order belongs to another graph".into() });
        }
    }
    Ok(())
}

/// The weight of a trivalent graph with cyclic orders.
pub fn lie_weight(g: &Graph, cyc: &CyclicData, alg: &ValidatedAlgebra) -> Result<Rational> {
    if let Some(v) = (0..g.num_vertices()).find(|&v| g.valence(v) != 3) {
        return Err(Error::Valence { vertex: v, expected: "3".into(), found: g.valence(v) });
    }
    check_cyclic(g, cyc)?;
    let d = alg.algebra.dim;
    let first_dart: Vec<usize> = (0..g.num_edges()).map(|e| 2 * e).collect();
    let sum = StateSum {
        first_dart: &first_dart,
        choices: &alg.inverse_metric,
        vertex_darts: cyc.orders(),
        vertex_factor: |_: usize, idx: &[usize]| alg.lowered[(idx[0] * d + idx[1]) * d + idx[2]].clone(),
    }
    .evaluate(g);
    let den = num_traits::pow(alg.lowered_den.clone(), g.num_vertices())
        * num_traits::pow(alg.inverse_den.clone(), g.num_edges());
    Ok(Rational::new(sum, den))
}

/// Linear extension of [`lie_weight`] to terms carrying both an orientation
/// and cyclic data. Every term's cyclic data must induce its orientation.
pub fn lie_weight_vector(terms: &[(Rational, OrientedGraph, CyclicData)], alg: &ValidatedAlgebra) -> Result<Rational> {
    let mut total = Rational::zero();
    for (c, og, cyc) in terms {
        check_cyclic(&og.graph, cyc)?;
        if orientation_from_cyclic(&og.graph, cyc)? != og.orientation {
            return Err(Error::InconsistentOrientation);
        }
        total += c * lie_weight(&og.graph, cyc, alg)?;
    }
    Ok(total)
}

/// Cyclic data inducing the standard orientation of `g`: ascending dart
/// orders, with the order at one vertex reversed when they induce the
/// opposite class.
pub fn standard_cyclic(g: &Graph) -> Result<CyclicData> {
    let asc = CyclicData::ascending(g);
    if orientation_from_cyclic(g, &asc)? == Orientation::standard(g) {
        Ok(asc)
    } else {
        Ok(asc.reversed_at(0))
    }
}

/// [`lie_weight`] extended to graph vectors, each basis graph carrying its
/// standard orientation.
pub fn lie_weight_of_vector(v: &GraphVector, alg: &ValidatedAlgebra) -> Result<Rational> {
    let mut terms = Vec::with_capacity(v.len());
    for (g, c) in v.iter() {
        let graph = g.graph().clone();
        let cyc = standard_cyclic(&graph)?;
        terms.push((c.clone(), OrientedGraph::standard(graph), cyc));
    }
    lie_weight_vector(&terms, alg)
}
