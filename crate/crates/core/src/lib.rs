//! dblcheck: an axiom checker and coherence-lifting engine for monoidal
//! double categories.
//!
//! The crate represents finite or rule-presented double categories, checks
//! their axioms exhaustively over bounded universes, implements the
//! companion calculus with its canonical comparison isomorphisms, and lifts
//! monoidal (braided, symmetric) structure from a double category to its
//! loose bicategory, together with functors and transformations.

pub mod error;
pub mod report;
pub mod suites;

pub mod bicat;
pub mod cli;
pub mod companion;
pub mod dbl;
pub mod instances;
pub mod lift;
pub mod mondbl;
pub mod mutate;
pub mod finbase;

pub use error::{Error, Result};
pub use report::{Report, Status};
