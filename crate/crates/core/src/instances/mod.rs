//! Shipped realizations: Span(FinSet), matrices over a finite quantale,
//! the squares double category of a finite category, a one-object
//! commutative-monoid instance, designed lax fixtures, and the monoid /
//! bimodule construction with its profunctor oracle.

pub mod alg;
pub mod functors;
pub mod lax;
pub mod mat;
pub mod monoid;
pub mod span;
pub mod squares;

pub use functors::{span_to_mat, span_to_mat_monoidal};
pub use lax::{lax_codomain, lax_functor, TableMon};
pub use mat::{mat_universe, MatDbl, QCell, QMat, Quantale};
pub use monoid::CommMonoidDbl;
pub use span::{span_objects, span_universe, Span, SpanCell, SpanDbl};
pub use squares::{square_double, squares_universe, SquaresDbl};
