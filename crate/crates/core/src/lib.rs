//! Exact verification, construction and exhaustive cataloguing of Lehman
//! matrices and their bipartite graphs.
//!
//! A Lehman pair is a pair (A,B) of square 0/1 matrices with
//! `A B^T = J + kI` for some k in {-1, 1, 2, ...}; the matrices are the
//! bipartite adjacency matrices of regular bipartite graphs. This crate
//! provides:
//!
//! * [`exactmat`] - dense exact-rational linear algebra (Bareiss
//!   determinants, solves, inverses) and the `.lmx` matrix format;
//! * [`lehman`] - pair verification, partner computation, mates and the
//!   auxiliary-graph / rung decomposition;
//! * [`constructions`] - 3-rung ladder reduction/insertion and biclique
//!   compression/expansion with full precondition checking;
//! * [`search`] - isomorph-free generation of connected cubic bipartite
//!   graphs, canonical forms under colour-preserving and colour-blind
//!   isomorphism, catalogue extraction and construction closure;
//! * [`polyhedra`] - exact vertex enumeration of covering polyhedra
//!   Q(A) = {x : Ax >= 1, x >= 0} and the minimally-nonideal tests;
//! * [`clutters`] - clutter algebra (deletion, contraction, blockers,
//!   minors), degenerate projective planes and the small finite geometries;
//! * [`atlas`] - named graphs used by the tests and the CLI;
//! * [`reference`] - independent brute-force implementations used to
//!   cross-check the production ones.

pub mod atlas;
pub mod clutters;
pub mod constructions;
pub mod exactmat;
pub mod lehman;
pub mod polyhedra;
pub mod reference;
pub mod search;

pub use exactmat::{Rational, RationalMatrix};
pub use lehman::{BipartiteGraph, LehmanCertificate, LehmanType};
