//! Combinatorial and algebraic core for graph-valued invariants.
//!
//! Finite graphs carrying orientation data are mapped to
//!
//! * elements of the space of trivalent diagrams modulo AS and IHX
//!   ([`diagram`]),
//! * chains of the odd graph complex with its edge-contraction differential
//!   ([`complex`]),
//! * Gelfand–Fuks cochains on formal Hamiltonian vector fields built by
//!   contracting cubic Taylor coefficients against the Poisson tensor
//!   ([`symplectic`]),
//! * numbers, through weight systems of metrized Lie algebras ([`lie`]).
//!
//! Every value is an exact rational; nothing in this crate touches floating
//! point or performs IO. The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod complex;
pub mod diagram;
pub mod error;
pub mod graph;
pub mod lie;
pub mod linalg;
pub mod perm;
pub mod poly;
mod statesum;
pub mod symplectic;

pub use error::{Error, Result};
pub use graph::{
    automorphisms, canonical_form, generate_graphs, generate_trivalent, orientation_from_cyclic,
    Automorphism, CanonicalGraph, CyclicData, GenerationSpec, Graph, OrientedGraph, Orientation,
    Sign,
};

/// Exact rational scalar used throughout.
pub type Rational = num_rational::BigRational;
