//! Graph cochains on formal Hamiltonian vector fields.
//!
//! A trivalent oriented graph with `2N` vertices turns `2N` Hamiltonians into
//! a number: take the cubic Taylor coefficient of each, put one at every
//! vertex (following the vertex order) and contract indices along the edges
//! with the Poisson tensor, tail index first. Antisymmetrizing over the
//! arguments gives a Chevalley–Eilenberg cochain on Hamiltonians starting in
//! degree 3.
//!
//! Conventions: coordinates `p_1..p_n, q_1..q_n`; `ω⁻¹(p_i, q_i) = +1`,
//! `ω⁻¹(q_i, p_i) = −1`; a cubic form is `Σ_{ijk} T_ijk x_i x_j x_k` over
//! all ordered triples.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::diagram::GraphVector;
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::perm;
use crate::poly::{exponents_of, multinomial, poisson_bracket, Polynomial};
use crate::statesum::{EdgeChoice, StateSum};
use crate::Rational;

/// Default truncation degree for formal Hamiltonians.
pub const DEFAULT_TRUNCATION: u32 = 7;

/// `R^{2n}` with its standard Poisson tensor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymplecticSpace {
    n: usize,
}

impl SymplecticSpace {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("symplectic half-dimension must be at least 1".into()));
        }
        Ok(SymplecticSpace { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// `ω⁻¹(dx_i, dx_j)`.
    pub fn omega_inverse(&self, i: usize, j: usize) -> i64 {
        let n = self.n;
        if i < n && j == i + n {
            1
        } else if i >= n && i < 2 * n && j + n == i {
            -1
        } else {
            0
        }
    }

    /// The unique index paired with `i` by `ω⁻¹`.
    pub fn partner(&self, i: usize) -> usize {
        if i < self.n {
            i + self.n
        } else {
            i - self.n
        }
    }

    pub fn omega_inverse_matrix(&self) -> Vec<Vec<i64>> {
        let d = self.dim();
        (0..d).map(|i| (0..d).map(|j| self.omega_inverse(i, j)).collect()).collect()
    }
}

/// A formal Hamiltonian in `Ham¹`: every monomial has degree in `3..=max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamElement {
    space: SymplecticSpace,
    max_degree: u32,
    poly: Polynomial,
}

impl HamElement {
    pub fn new(poly: Polynomial, space: SymplecticSpace, max_degree: u32) -> Result<Self> {
        if poly.num_vars() != space.dim() {
            return Err(Error::LengthMismatch { expected: space.dim(), found: poly.num_vars() });
        }
        if max_degree < 3 {
            return Err(Error::Degree(alloc::format!("truncation degree {max_degree} is below 3")));
        }
        if let Some(d) = poly.min_degree().filter(|&d| d < 3) {
            return Err(Error::Degree(alloc::format!(
                "Hamiltonian has a term of degree {d}; terms must have degree at least 3"
            )));
        }
        if let Some(d) = poly.degree().filter(|&d| d > max_degree) {
            return Err(Error::Degree(alloc::format!(
                "Hamiltonian has a term of degree {d} above the truncation {max_degree}"
            )));
        }
        Ok(HamElement { space, max_degree, poly })
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.poly
    }

    pub fn space(&self) -> SymplecticSpace {
        self.space
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// `{self, other}` truncated at the truncation degree of `self`.
    pub fn bracket(&self, other: &HamElement) -> HamElement {
        let poly = poisson_bracket(&self.poly, &other.poly, self.max_degree);
        HamElement { space: self.space, max_degree: self.max_degree, poly }
    }
}

/// A fully symmetric 3-tensor on `R^{dim}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicTensor {
    dim: usize,
    entries: Vec<Rational>,
}

impl CubicTensor {
    pub fn zero(dim: usize) -> Self {
        CubicTensor { dim, entries: alloc::vec![Rational::zero(); dim * dim * dim] }
    }

    /// Row-major entries `T[(i*dim + j)*dim + k]`; must be symmetric.
    pub fn from_entries(dim: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != dim * dim * dim {
            return Err(Error::LengthMismatch { expected: dim * dim * dim, found: entries.len() });
        }
        let t = CubicTensor { dim, entries };
        if let Some(w) = t.asymmetry_witness() {
            return Err(Error::Malformed(alloc::format!("tensor not symmetric at {w:?}")));
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.entries[(i * self.dim + j) * self.dim + k]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// First index triple where some transposition changes the entry.
    pub fn asymmetry_witness(&self) -> Option<[usize; 3]> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let t = self.get(i, j, k);
                    if t != self.get(j, i, k) || t != self.get(i, k, j) {
                        return Some([i, j, k]);
                    }
                }
            }
        }
        None
    }

    /// The cubic part of `poly` in the full-sum convention.
    pub fn from_polynomial(poly: &Polynomial) -> Self {
        let d = poly.num_vars();
        let mut t = Self::zero(d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let e = exponents_of(d, &[i, j, k]);
                    let c = poly.coefficient(&e);
                    if !c.is_zero() {
                        t.entries[(i * d + j) * d + k] = c / Rational::from_integer(multinomial(&e).into());
                    }
                }
            }
        }
        t
    }

    /// `Σ_{ijk} T_ijk x_i x_j x_k`.
    pub fn to_polynomial(&self) -> Polynomial {
        let d = self.dim;
        let mut terms = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    terms.push((exponents_of(d, &[i, j, k]), self.get(i, j, k).clone()));
                }
            }
        }
        Polynomial::from_terms(d, terms)
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        CubicTensor { dim: self.dim, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    /// Common denominator and the integer entries it produces.
    fn integer_scaled(&self) -> (BigInt, Vec<BigInt>) {
        let l = self.entries.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints = self.entries.iter().map(|x| x.numer() * (&l / x.denom())).collect();
        (l, ints)
    }
}

impl core::ops::Add for &CubicTensor {
    type Output = CubicTensor;
    fn add(self, rhs: &CubicTensor) -> CubicTensor {
        assert_eq!(self.dim, rhs.dim);
        CubicTensor {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

/// Cubic Taylor coefficient of a Hamiltonian; higher degrees are ignored.
pub fn taylor3(h: &HamElement) -> CubicTensor {
    CubicTensor::from_polynomial(&h.poly)
}

/// A quadratic Hamiltonian `Σ_ij X_ij x_i x_j`, generating a linear
/// symplectic vector field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticHamiltonian {
    dim: usize,
    entries: Vec<Rational>,
}

impl QuadraticHamiltonian {
    pub fn zero(dim: usize) -> Self {
        QuadraticHamiltonian { dim, entries: alloc::vec![Rational::zero(); dim * dim] }
    }

    /// Row-major symmetric entries.
    pub fn from_entries(dim: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::LengthMismatch { expected: dim * dim, found: entries.len() });
        }
        for i in 0..dim {
            for j in 0..i {
                if entries[i * dim + j] != entries[j * dim + i] {
                    return Err(Error::Malformed(alloc::format!("quadratic form not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(QuadraticHamiltonian { dim, entries })
    }

    /// The quadratic part of `poly`.
    pub fn from_polynomial(poly: &Polynomial) -> Self {
        let d = poly.num_vars();
        let mut x = Self::zero(d);
        for i in 0..d {
            for j in 0..d {
                let e = exponents_of(d, &[i, j]);
                x.entries[i * d + j] = poly.coefficient(&e) / Rational::from_integer(multinomial(&e).into());
            }
        }
        x
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim + j]
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let d = self.dim;
        let mut terms = Vec::new();
        for i in 0..d {
            for j in 0..d {
                terms.push((exponents_of(d, &[i, j]), self.get(i, j).clone()));
            }
        }
        Polynomial::from_terms(d, terms)
    }
}

fn check_trivalent(og: &OrientedGraph) -> Result<()> {
    let g = &og.graph;
    match (0..g.num_vertices()).find(|&v| g.valence(v) != 3) {
        Some(v) => Err(Error::Valence { vertex: v, expected: "3".into(), found: g.valence(v) }),
        None => Ok(()),
    }
}

/// Index contraction of cubic tensors along an oriented trivalent graph.
///
/// `tensors[i]` sits at vertex `vertex_order[i]`. Each edge contributes
/// `ω⁻¹(index at its tail, index at its head)`; the sum is multiplied by the
/// orientation sign.
pub fn contract_graph(og: &OrientedGraph, tensors: &[CubicTensor], space: &SymplecticSpace) -> Result<Rational> {
    check_trivalent(og)?;
    let g = &og.graph;
    if tensors.len() != g.num_vertices() {
        return Err(Error::LengthMismatch { expected: g.num_vertices(), found: tensors.len() });
    }
    let dim = space.dim();
    if let Some(t) = tensors.iter().find(|t| t.dim != dim) {
        return Err(Error::LengthMismatch { expected: dim, found: t.dim });
    }
    if tensors.iter().any(CubicTensor::is_zero) {
        return Ok(Rational::zero());
    }
    let mut denominator = BigInt::one();
    let mut at_vertex: Vec<Vec<BigInt>> = alloc::vec![Vec::new(); g.num_vertices()];
    for (i, t) in tensors.iter().enumerate() {
        let (l, ints) = t.integer_scaled();
        denominator *= l;
        at_vertex[og.orientation.vertex_order()[i]] = ints;
    }
    let choices: Vec<EdgeChoice> = (0..dim)
        .map(|a| {
            let b = space.partner(a);
            EdgeChoice { first: a, second: b, weight: space.omega_inverse(a, b).into() }
        })
        .collect();
    let first_dart: Vec<usize> = (0..g.num_edges()).map(|e| og.orientation.tail(e)).collect();
    let vertex_darts: Vec<Vec<usize>> = (0..g.num_vertices()).map(|v| g.darts_at(v)).collect();
    let sum = StateSum {
        first_dart: &first_dart,
        choices: &choices,
        vertex_darts: &vertex_darts,
        vertex_factor: |v: usize, idx: &[usize]| at_vertex[v][(idx[0] * dim + idx[1]) * dim + idx[2]].clone(),
    }
    .evaluate(g);
    let value = Rational::new(sum, denominator);
    Ok(og.orientation.sign().apply(value))
}

/// `Σ_{σ ∈ S_2N} sign(σ) · contract_graph(Γ, [T_σ(1), .., T_σ(2N)])` for
/// precomputed tensors.
pub fn cochain_eval_tensors(og: &OrientedGraph, tensors: &[CubicTensor], space: &SymplecticSpace) -> Result<Rational> {
    check_trivalent(og)?;
    if tensors.len() != og.graph.num_vertices() {
        return Err(Error::LengthMismatch { expected: og.graph.num_vertices(), found: tensors.len() });
    }
    let mut total = Rational::zero();
    for (sigma, odd) in perm::signed_permutations(tensors.len()) {
        let permuted: Vec<CubicTensor> = sigma.iter().map(|&i| tensors[i].clone()).collect();
        let w = contract_graph(og, &permuted, space)?;
        if odd {
            total -= w;
        } else {
            total += w;
        }
    }
    Ok(total)
}

/// The graph cochain `c_Γ(H_1, .., H_2N)`: the plain signed sum over all
/// argument permutations, without a `1/(2N)!`.
pub fn cochain_eval(og: &OrientedGraph, hams: &[HamElement], space: &SymplecticSpace) -> Result<Rational> {
    check_spaces(hams, space)?;
    let tensors: Vec<CubicTensor> = hams.iter().map(taylor3).collect();
    cochain_eval_tensors(og, &tensors, space)
}

fn check_spaces(hams: &[HamElement], space: &SymplecticSpace) -> Result<()> {
    match hams.iter().find(|h| h.space != *space) {
        Some(h) => Err(Error::LengthMismatch { expected: space.dim(), found: h.space.dim() }),
        None => Ok(()),
    }
}

/// `(dc_Γ)(H_0, .., H_2N) = Σ_{i<j} (−1)^{i+j} c_Γ({H_i, H_j}, H_0, .., Ĥ_i, .., Ĥ_j, .., H_2N)`
/// with brackets truncated at `max_degree`. Arguments are validated as
/// elements of `Ham¹` first.
pub fn ce_differential_eval(
    og: &OrientedGraph,
    hams: &[Polynomial],
    space: &SymplecticSpace,
    max_degree: u32,
) -> Result<Rational> {
    check_trivalent(og)?;
    let want = og.graph.num_vertices() + 1;
    if hams.len() != want {
        return Err(Error::LengthMismatch { expected: want, found: hams.len() });
    }
    let hams: Vec<HamElement> =
        hams.iter().map(|p| HamElement::new(p.clone(), *space, max_degree)).collect::<Result<_>>()?;
    let mut total = Rational::zero();
    for i in 0..hams.len() {
        for j in i + 1..hams.len() {
            let mut args = Vec::with_capacity(hams.len() - 1);
            args.push(hams[i].bracket(&hams[j]));
            args.extend(hams.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, h)| h.clone()));
            let c = cochain_eval(og, &args, space)?;
            if (i + j) % 2 == 1 {
                total -= c;
            } else {
                total += c;
            }
        }
    }
    Ok(total)
}

/// Infinitesimal action of `sp(2n)` on cubic tensors: `taylor3({x, T})`.
pub fn sp_action(x: &QuadraticHamiltonian, t: &CubicTensor, space: &SymplecticSpace) -> CubicTensor {
    assert_eq!(x.dim, space.dim());
    assert_eq!(t.dim, space.dim());
    CubicTensor::from_polynomial(&poisson_bracket(&x.to_polynomial(), &t.to_polynomial(), 3))
}

/// `Σ_k contract_graph(Γ, C with slot k replaced by sp_action(x, C_k))`,
/// which vanishes when the contraction is `sp`-invariant.
pub fn sp_invariance_defect(
    og: &OrientedGraph,
    x: &QuadraticHamiltonian,
    tensors: &[CubicTensor],
    space: &SymplecticSpace,
) -> Result<Rational> {
    let mut total = Rational::zero();
    for k in 0..tensors.len() {
        let mut c = tensors.to_vec();
        c[k] = sp_action(x, &tensors[k], space);
        total += contract_graph(og, &c, space)?;
    }
    Ok(total)
}

/// Linear extension of [`contract_graph`] to graph vectors; each basis
/// graph carries its standard orientation.
pub fn contract_vector(v: &GraphVector, tensors: &[CubicTensor], space: &SymplecticSpace) -> Result<Rational> {
    let mut total = Rational::zero();
    for (g, c) in v.iter() {
        total += c * contract_graph(&OrientedGraph::standard(g.graph().clone()), tensors, space)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn mono(e: &[u32]) -> Polynomial {
        Polynomial::monomial(e.len(), e.to_vec(), q(1, 1))
    }

    fn ham(p: Polynomial, n: usize) -> HamElement {
        HamElement::new(p, SymplecticSpace::new(n).unwrap(), DEFAULT_TRUNCATION).unwrap()
    }

    #[test]
    fn omega_is_antisymmetric_and_unimodular() {
        let s = SymplecticSpace::new(2).unwrap();
        let m = s.omega_inverse_matrix();
        for (i, row) in m.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(*x, -m[j][i]);
            }
        }
        assert_eq!(m[0][2], 1);
        assert_eq!(m[3][1], -1);
    }

    #[test]
    fn taylor3_examples() {
        let t = taylor3(&ham(mono(&[3, 0]), 1));
        assert_eq!(t.get(0, 0, 0), &q(1, 1));
        assert_eq!(t.entries().iter().filter(|x| !x.is_zero()).count(), 1);
        let t = taylor3(&ham(mono(&[2, 1]), 1));
        for (i, j, k) in [(0, 0, 1), (0, 1, 0), (1, 0, 0)] {
            assert_eq!(t.get(i, j, k), &q(1, 3));
        }
        assert!(taylor3(&ham(mono(&[2, 2]), 1)).is_zero());
        assert_eq!(t.to_polynomial(), mono(&[2, 1]));
    }

    #[test]
    fn theta_benchmarks() {
        let s = SymplecticSpace::new(1).unwrap();
        let theta = OrientedGraph::standard(Graph::theta());
        let p3 = taylor3(&ham(mono(&[3, 0]), 1));
        let q3 = taylor3(&ham(mono(&[0, 3]), 1));
        assert_eq!(contract_graph(&theta, &[p3.clone(), q3.clone()], &s).unwrap(), q(1, 1));
        assert_eq!(contract_graph(&theta, &[q3.clone(), p3.clone()], &s).unwrap(), q(-1, 1));
        assert!(contract_graph(&theta, &[p3.clone(), p3.clone()], &s).unwrap().is_zero());
        let hs = [ham(mono(&[3, 0]), 1), ham(mono(&[0, 3]), 1)];
        assert_eq!(cochain_eval(&theta, &hs, &s).unwrap(), q(2, 1));
        let mixed = [ham(&mono(&[3, 0]) + &mono(&[0, 4]), 1), ham(mono(&[0, 3]), 1)];
        assert_eq!(cochain_eval(&theta, &mixed, &s).unwrap(), q(2, 1));
    }

    #[test]
    fn degree_two_argument_rejected() {
        let s = SymplecticSpace::new(1).unwrap();
        let theta = OrientedGraph::standard(Graph::theta());
        let args = [mono(&[3, 0]), mono(&[0, 3]), mono(&[1, 1])];
        assert!(matches!(ce_differential_eval(&theta, &args, &s, 7), Err(Error::Degree(_))));
    }

    #[test]
    fn non_trivalent_and_length_errors() {
        let s = SymplecticSpace::new(1).unwrap();
        let t = taylor3(&ham(mono(&[3, 0]), 1));
        let theta = OrientedGraph::standard(Graph::theta());
        assert!(matches!(contract_graph(&theta, core::slice::from_ref(&t), &s), Err(Error::LengthMismatch { .. })));
        let g = OrientedGraph::standard(Graph::from_edges(2, &[(0, 1), (0, 1)]).unwrap());
        assert!(matches!(contract_graph(&g, &[t.clone(), t], &s), Err(Error::Valence { .. })));
    }

    #[test]
    fn sp_action_matches_bracket() {
        let s = SymplecticSpace::new(1).unwrap();
        let x = QuadraticHamiltonian::from_polynomial(&mono(&[1, 1]));
        let t = CubicTensor::from_polynomial(&mono(&[3, 0]));
        let got = sp_action(&x, &t, &s);
        // {p q, p^3} = ∂_p(pq) ∂_q(p^3) − ∂_q(pq) ∂_p(p^3) = −3 p^3
        assert_eq!(got, t.scaled(&q(-3, 1)));
        assert!(sp_action(&QuadraticHamiltonian::zero(2), &t, &s).is_zero());
    }
}
