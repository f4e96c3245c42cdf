//! Cohomology of Lie-algebra-valued forms through finite cochain models.
//!
//! The twisted differential `d + [θ, ·]` is realized by exact rational
//! complexes: the Chevalley–Eilenberg complex with adjoint coefficients,
//! polynomial forms on `R^n`, simplicial cochains with flat edge holonomy
//! and their products. On top of these sit Hodge theory in floating point,
//! exact sequences, and calculators for closed-form Betti predictions.

#![allow(clippy::needless_range_loop, clippy::type_complexity, clippy::while_let_loop)]

pub mod cochain;
pub mod error;
pub mod exec;
pub mod hodge;
pub mod invariants;
pub mod liealg;
pub mod linalg;
pub mod models;

pub use cochain::{ChainMap, CohomologyReport, FiniteComplex, LongExactSequence};
pub use error::{Error, Result};
pub use exec::Execution;
pub use liealg::LieAlgebra;
pub use models::SimplicialComplex;
