//! Exact symbolic machinery for first-order differential calculi and
//! Cartan pairs on finitely presented noncommutative algebras.
//!
//! Everything is computed over the rationals with no rounding: algebras
//! are presented by quadratic rewrite rules with a normal-form basis,
//! bimodules are free on a right basis with the left action given by a
//! structure homomorphism, and the calculus/vector-field duality is
//! realized by finite data that the twisted Leibniz axioms extend to
//! the whole algebra.
//!
//! Start with the runnable examples (`cargo run --example normal_forms`
//! and friends) or the `nc` binary, which exposes every construction on
//! plain-text model files.
//!
//! ```
//! use ncdc::algebra::{AlgElement, GenId};
//! use ncdc::fixtures;
//!
//! let calculus = fixtures::qplane2();
//! let x = AlgElement::from_gen(GenId(0));
//! let xx = calculus.algebra().mul(&x, &x);
//! // d(x²) = dx . 5x on the quantum plane at q = 2.
//! let d = calculus.diff(&xx);
//! assert_eq!(
//!     ncdc::model::emit::emit_bim(calculus.bimodule(), &d),
//!     "dx.( 5 x )"
//! );
//! ```

pub mod algebra;
pub mod bimodule;
pub mod calculus;
pub mod cartan;
pub mod cli;
pub mod dual;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod model;
pub mod report;

pub use algebra::{AlgElement, AlgebraPresentation, GenId, Scalar, Word};
pub use bimodule::{BasisId, BimElement, BimodulePresentation};
pub use calculus::{CalculusModel, Differential};
pub use cartan::{LeftCartanPair, RightCartanPair};
pub use dual::DualElement;
pub use error::Error;
pub use report::{Report, Status};
