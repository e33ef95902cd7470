//! A workbench for finite skew lattices: algebras with two associative,
//! idempotent operations ∧ and ∨ tied together by the absorption laws
//! x∧(x∨y) = x = (y∨x)∧x and x∨(x∧y) = x = (y∧x)∨x.
//!
//! The crate represents a finite skew lattice as a pair of n×n operation
//! tables, validates the axioms exhaustively, computes Green's relations and
//! the coset geometry between comparable 𝒟-classes, decides a catalog of
//! distributivity-related properties with concrete witnesses on failure, and
//! enumerates small models up to isomorphism for counterexample hunting.
//!
//! Quantifier scans run in parallel via rayon when the `parallel` feature
//! (default) is enabled; witness selection is deterministic either way — the
//! lexicographically first failing assignment is always reported.

pub mod algebra;
pub mod canon;
pub mod corpus;
pub mod coset;
pub mod dot;
pub mod exec;
pub mod green;
pub mod harness;
pub mod props;
pub mod search;
pub mod subalg;
pub mod term;

pub use algebra::{ElementId, FiniteSkewLattice, OpTable, RawAlgebra, ValidationReport};
pub use term::{Identity, QuasiIdentity, Term, Witness};
