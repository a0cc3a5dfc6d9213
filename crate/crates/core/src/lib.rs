//! Anick resolutions of augmented algebras presented by Gröbner–Shirshov
//! bases, with a Leavitt path algebra front end and exact Tor computation.

pub mod chains;
pub mod cli;
pub mod error;
pub mod field;
pub mod graph_doc;
pub mod homology;
pub mod leavitt;
pub mod matrix;
pub mod poly;
pub mod report;
pub mod resolution;
pub mod rewriting;
pub mod tensor;
pub mod word;

pub use error::{AnickError, Result};
pub use field::{Field, PrimeField, Rational, Rationals, Scalar};
pub use poly::FreePolynomial;
pub use resolution::{Augmentation, Resolution};
pub use rewriting::RewriteSystem;
pub use tensor::{BasisTerm, TensorElement};
pub use word::{Alphabet, Word};
