//! Exact graph invariants built around the connective eccentricity index
//! (CEI), the extremal families that maximize it over classes with fixed
//! connectivity and diameter / independence number / minimum degree, and
//! exhaustive isomorphism-free verification of those extremal claims at
//! small orders.
//!
//! All arithmetic on CEI values is exact rational arithmetic; no floating
//! point is used anywhere on a comparison path.

pub mod canon;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod search;

pub use canon::{canonical_form, CanonicalLabel};
pub use error::Error;
pub use graph::{Graph, VertexSet};
pub use invariants::{ClassKind, ClassSpec, InvariantSummary, Rational};
pub use search::{SearchConfig, SearchReport, Verdict, VerificationReport};

pub type Result<T> = std::result::Result<T, Error>;
