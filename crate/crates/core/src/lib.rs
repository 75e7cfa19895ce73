//! Symbolic ordinal notation toolkit for terms below ε_{I+1}.
//!
//! The crate covers the term algebra with collapsing functions for the
//! cardinals ω₁ < K < K⁺ < … < I, a total order on normal forms, ordinal
//! arithmetic (sums, natural and ω-multiples, ω-towers, binary Veblen),
//! term-level Skolem hulls, Mahlo-sequence bookkeeping, a small formula
//! language with ranks and classes, and the ordinal-bound transformers of a
//! cut-elimination pipeline.

pub mod arith;
pub mod bounds;
pub mod check;
pub mod error;
pub mod formula;
pub mod hull;
pub mod limits;
pub mod mahlo;
pub mod order;
pub mod syntax;
pub mod term;

pub use error::{Error, Result};
pub use term::{OrdSeq, Term, ThetaSet};
