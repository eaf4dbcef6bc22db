//! Exact-arithmetic engine for cyclic and Hochschild (co)homology of
//! finite-dimensional algebras and coalgebras.
//!
//! The crate is organized around a rewriting presentation of the cyclic
//! index category:
//!
//! * [`qmat`] — sparse exact rational linear algebra (the only arithmetic
//!   backend; every homological question becomes a rank/kernel/solve here).
//! * [`lambda`] — the index category: normal forms for its morphisms, a
//!   rewriting-based composition, the face/cyclic and degeneracy/cyclic
//!   transposition operators, basis enumeration, and a text grammar.
//! * [`complex`] — chain complexes, bicomplexes, totalization, chain maps,
//!   mapping cones, and homology dimensions.
//! * [`module`] — algebra/coalgebra presentations and their associated
//!   cyclic/cocyclic modules as relation-checked functor representations.
//! * [`theories`] — the three homology pipelines (quotient-by-cyclic-action
//!   model, cyclic bicomplex, normalized mixed complex), the degree-shift
//!   operator on cocycles, and cross-checking reports.
//! * [`pairing`] — Hopf-algebra presentations, equivariant action data, the
//!   cup-product style characteristic map with its runtime certificates.
//! * [`input`] — TOML descriptions of algebras and action data.
//! * [`report`] — table/CSV/JSON rendering with exact fraction strings.

pub mod complex;
pub mod input;
pub mod lambda;
pub mod module;
pub mod pairing;
pub mod qmat;
pub mod report;
pub mod theories;

pub use qmat::{QMat, Q};
