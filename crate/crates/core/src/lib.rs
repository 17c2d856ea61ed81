//! Repeated-root constacyclic codes over prime fields and their symbol-pair distances.
//!
//! The crate builds cyclic and constacyclic codes from factored generator polynomials,
//! computes the exact minimum Hamming distance (from a per-level table for repeated-root
//! cyclic codes, or exhaustively), and computes the exact minimum
//! symbol-pair distance by enumerating run-structured supports and solving a small linear
//! system per support. [`families`] holds the three `4p`/`5p` MDS symbol-pair constructions.

pub mod algebra;
pub mod code;
pub mod distance;
pub mod families;
pub mod metric;
pub mod pairsearch;

pub use algebra::{FactoredPolynomial, FieldElement, Polynomial, PrimeField};
pub use code::{Codeword, ConstacyclicCode};
