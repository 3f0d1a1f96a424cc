//! Cellular resolutions of the face ring of the n-cycle supported on the
//! simplicial associahedron.
//!
//! * [`polygon`]: diagonals, dissections and their support classes.
//! * [`complex`]: the monomial-labeled associahedron `A_n`.
//! * [`homology`]: exact reduced homology over GF(2) or the rationals.
//! * [`resolution`]: exhaustive check that `A_n` supports a resolution.
//! * [`betti`]: graded Betti numbers of `R/J_n`, three ways.
//! * [`tableaux`]: hook lengths, SYT enumeration and the tableau involution.
//! * [`morse`]: the rank-two Morse matching and its checks.
//!
//! Linear algebra is generic over [`field::Field`]; the aliases below fix
//! the two coefficient fields used in practice.

pub mod betti;
pub mod binomial;
pub mod complex;
pub mod error;
pub mod field;
pub mod homology;
pub mod morse;
pub mod polygon;
pub mod resolution;
pub mod tableaux;

pub use error::{Error, Result};
pub use field::{FieldKind, Gf2};

/// Arbitrary-precision rationals.
pub type Rational = field::BigRational;
pub type Gf2Matrix = homology::SparseMatrix<Gf2>;
pub type RationalMatrix = homology::SparseMatrix<Rational>;
pub use homology::{Gf2ChainComplex, RationalChainComplex};
