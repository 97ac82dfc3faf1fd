//! Free Yetter-Drinfeld resolutions of the counit over the Hopf algebras
//! `B(E)` of nondegenerate bilinear forms, with exact arithmetic.

pub mod cogroupoid;
pub mod comod;
pub mod error;
pub mod freealg;
pub mod homology;
pub mod hopf;
pub mod linalg;
pub mod resolution;
pub mod scalar;

pub use error::{Error, Result};
pub use freealg::{Alphabet, NCPoly, PresentedAlgebra, Word};
pub use hopf::{BilinearFormHopf, Character};
pub use scalar::{Field, FieldKind, FieldMatrix, RatFunc, Rational};

/// `B(E)` over the rationals.
pub type RationalHopf = BilinearFormHopf<Rational>;
/// `B(E)` over `Q(q)`.
pub type RatFuncHopf = BilinearFormHopf<RatFunc>;
/// Matrices over the rationals.
pub type RationalMatrix = FieldMatrix<Rational>;
/// Matrices over `Q(q)`.
pub type RatFuncMatrix = FieldMatrix<RatFunc>;
/// The resolution over the rationals.
pub type RationalComplex = resolution::FreeYDComplex<Rational>;
/// The resolution over `Q(q)`.
pub type RatFuncComplex = resolution::FreeYDComplex<RatFunc>;
