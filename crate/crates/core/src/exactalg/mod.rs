//! Exact arithmetic over fields, structure-constant algebras and their modules.

pub mod algebra;
pub mod ext;
pub mod field;
pub mod intlin;
pub mod krull_schmidt;
pub mod matrix;
pub mod module;
pub mod poly;
pub mod wedderburn;

pub use algebra::{Peirce, SCAlgebra};
pub use field::{Field, Fp, Gf4, Rational, F2, F3, F31, F5, F61, P31, P61};
pub use matrix::{Matrix, RowEchelon};
pub use module::SCModule;
