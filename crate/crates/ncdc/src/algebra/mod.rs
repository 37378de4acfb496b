//! Exact scalar arithmetic, free-algebra words, normal-form rewriting,
//! and presentation validation.

mod element;
mod presentation;
mod random;

pub use element::{int, ratio, AlgElement, GenId, Scalar, Word};
pub use presentation::{AlgebraPresentation, RewriteRule};
pub use random::coefficient_pool;

pub(crate) use presentation::valid_identifier;
