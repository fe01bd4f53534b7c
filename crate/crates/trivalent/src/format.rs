//! JSON document formats and the `num/den` rendering of rationals.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use trivalent_core::diagram::RelationMatrix;
use trivalent_core::lie::MetrizedLieAlgebra;
use trivalent_core::linalg::SparseMatrixQ;
use trivalent_core::poly::Polynomial;
use trivalent_core::{CanonicalGraph, CyclicData, Graph, Rational};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad rational {0:?}: expected \"num/den\"")]
    Rational(String),
    #[error("{0}")]
    Core(#[from] trivalent_core::Error),
    #[error("{0}")]
    Invalid(String),
}

/// Renders `r` as `num/den` in lowest terms, `den > 0`; integers keep `/1`.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational, FormatError> {
    let bad = || FormatError::Rational(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

pub fn nat(n: usize) -> Value {
    Value::String(format!("{n}/1"))
}

pub fn rat(r: &Rational) -> Value {
    Value::String(rational_string(r))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclic_orders: Option<BTreeMap<String, Vec<usize>>>,
}

/// A parsed graph document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub cyclic: Option<CyclicData>,
}

/// Graph and optional cyclic data from a graph document.
pub fn parse_graph(text: &str) -> Result<ParsedGraph, FormatError> {
    let doc: GraphDocument = serde_json::from_str(text)?;
    graph_from_document(&doc)
}

pub fn graph_from_document(doc: &GraphDocument) -> Result<ParsedGraph, FormatError> {
    let edges: Vec<(usize, usize)> = doc.edges.iter().map(|&[u, v]| (u, v)).collect();
    let graph = Graph::from_edges(doc.vertices, &edges)?;
    let cyclic = match &doc.cyclic_orders {
        None => None,
        Some(map) => {
            let mut lists = vec![None; doc.vertices];
            for (key, list) in map {
                let v: usize = key
                    .parse()
                    .map_err(|_| FormatError::Invalid(format!("cyclic order key {key:?} is not a vertex index")))?;
                if v >= doc.vertices {
                    return Err(trivalent_core::Error::VertexOutOfRange { vertex: v, num_vertices: doc.vertices }.into());
                }
                lists[v] = Some(list.clone());
            }
            let lists: Vec<Vec<usize>> = lists
                .into_iter()
                .enumerate()
                .map(|(v, l)| l.ok_or_else(|| FormatError::Invalid(format!("vertex {v} has no cyclic order"))))
                .collect::<Result<_, _>>()?;
            Some(CyclicData::from_edge_lists(&graph, &lists)?)
        }
    };
    Ok(ParsedGraph { graph, cyclic })
}

/// Document for `graph`, with cyclic orders as edge-index lists.
pub fn graph_document(graph: &Graph, cyclic: Option<&CyclicData>) -> GraphDocument {
    GraphDocument {
        vertices: graph.num_vertices(),
        edges: graph.edges().map(|(u, v)| [u, v]).collect(),
        cyclic_orders: cyclic.map(|c| {
            (0..graph.num_vertices()).map(|v| (v.to_string(), c.at(v).iter().map(|d| d / 2).collect())).collect()
        }),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HamiltonianDocument {
    pub n: usize,
    pub terms: Vec<HamiltonianTerm>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HamiltonianTerm {
    pub monomial: Vec<u32>,
    pub coeff: String,
}

/// The polynomial of a Hamiltonian document and its `n`.
pub fn parse_hamiltonian(text: &str) -> Result<(usize, Polynomial), FormatError> {
    let doc: HamiltonianDocument = serde_json::from_str(text)?;
    if doc.n == 0 {
        return Err(FormatError::Invalid("Hamiltonian document needs n >= 1".into()));
    }
    let mut terms = Vec::with_capacity(doc.terms.len());
    for t in &doc.terms {
        if t.monomial.len() != 2 * doc.n {
            return Err(trivalent_core::Error::LengthMismatch { expected: 2 * doc.n, found: t.monomial.len() }.into());
        }
        terms.push((t.monomial.clone(), parse_rational(&t.coeff)?));
    }
    Ok((doc.n, Polynomial::from_terms(2 * doc.n, terms)))
}

pub fn hamiltonian_document(n: usize, p: &Polynomial) -> HamiltonianDocument {
    HamiltonianDocument {
        n,
        terms: p.terms().map(|(e, c)| HamiltonianTerm { monomial: e.clone(), coeff: rational_string(c) }).collect(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub dim: usize,
    #[serde(default)]
    pub structure: Vec<(usize, usize, usize, String)>,
    #[serde(default)]
    pub metric: Vec<(usize, usize, String)>,
}

/// An algebra from its document; validation is left to the caller.
pub fn parse_algebra(text: &str) -> Result<MetrizedLieAlgebra, FormatError> {
    let doc: AlgebraDocument = serde_json::from_str(text)?;
    let structure = doc
        .structure
        .iter()
        .map(|(a, b, c, v)| Ok((*a, *b, *c, parse_rational(v)?)))
        .collect::<Result<Vec<_>, FormatError>>()?;
    let metric =
        doc.metric.iter().map(|(a, b, v)| Ok((*a, *b, parse_rational(v)?))).collect::<Result<Vec<_>, FormatError>>()?;
    Ok(MetrizedLieAlgebra::from_entries(doc.dim, &structure, &metric)?)
}

fn integer_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => Value::String(x.to_string()),
    }
}

/// `{cols: [...], rows: [[[col, num, den], ...], ...]}`. Numerators and
/// denominators are JSON integers, or decimal strings beyond 64 bits.
pub fn matrix_export(cols: &[CanonicalGraph], m: &SparseMatrixQ) -> Value {
    let rows: Vec<Value> = m
        .rows()
        .map(|row| {
            Value::Array(
                row.iter().map(|(&c, v)| json!([c, integer_json(v.numer()), integer_json(v.denom())])).collect(),
            )
        })
        .collect();
    json!({ "cols": cols.iter().map(|g| g.serialization()).collect::<Vec<_>>(), "rows": rows })
}

pub fn relation_matrix_export(rm: &RelationMatrix) -> Value {
    matrix_export(&rm.columns, &rm.matrix)
}
