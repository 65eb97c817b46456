//! Exact-arithmetic kernel for Yokonuma-Hecke algebras and p-adic framed
//! braids.
//!
//! The crate builds up in layers:
//!
//! - [`coeff`]: rationals, Laurent polynomials in the deformation
//!   parameter `u`, and the trace value ring `C[z, x_1, ..., x_{d-1}]`;
//! - [`padic`]: truncated p-adic integers as base-`p` digit vectors;
//! - [`symmetric`]: permutations, Coxeter length, canonical reduced words
//!   and the top-strand coset decomposition;
//! - [`braid`]: framed braid words, the framing/braiding split, modular
//!   reductions and p-adic framed braids;
//! - [`algebra`]: the algebras `Y_{d,n}(u)` with normal-form
//!   multiplication driven by the quadratic relation, plus the
//!   relation-check suite;
//! - [`trace`]: the inductive Markov trace, the connecting maps between
//!   levels, coherent tower elements and the p-adic trace;
//! - [`sample`]: seeded random generators for the property suites.
//!
//! All values are immutable and all operations are pure, so everything can
//! be shared freely across threads.

pub mod algebra;
pub mod braid;
pub mod coeff;
mod error;
pub mod padic;
pub mod sample;
pub mod symmetric;
pub mod trace;

pub use algebra::{
    mul_basis_g, mul_basis_t, relation_suite, RelationCheck, RelationReport, YBasisElt, YElement,
    YParams,
};
pub use braid::{
    elementary_framing_word, BraidGen, FramedBraidWord, FramingExp, Letter, PadicFramedBraid,
    SplitFramedBraid,
};
pub use coeff::{LaurentU, Rational, TraceMono, TracePoly};
pub use error::{Error, Result};
pub use padic::PadicApprox;
pub use symmetric::{CosetDecomposition, Perm};
pub use trace::{delta_map, markov_trace, padic_trace, z_approx, PadicTraceValue, TowerElement};
