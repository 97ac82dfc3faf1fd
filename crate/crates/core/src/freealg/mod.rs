//! Free associative algebras and truncated noncommutative Gröbner bases.

mod gb;
mod ncpoly;
mod word;

pub use gb::{PresentedAlgebra, Rule};
pub use ncpoly::NCPoly;
pub use word::{deglex_compare, Alphabet, Word};
