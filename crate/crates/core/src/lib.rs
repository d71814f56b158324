//! Algorithms for fat-subset signatures of linear groups attached to
//! Dynkinian and Euclidean algebras.

pub mod bimod;
pub mod degen;
pub mod error;
pub mod exactalg;
pub mod fatsig;
pub mod forms;
pub mod generic;
pub mod quiver;
pub mod rep;
pub mod roots;

pub use bimod::{BimoduleElement, TriangularAlgebra, WMorphism};
pub use degen::{census, hom_order_leq, search_witness, verify_witness, ConflationWitness, HomOrder, OrbitCensus};
pub use error::{Error, Result};
pub use exactalg::{Field, Fp, Gf4, Matrix, Rational, SCAlgebra, SCModule, F2, F3, F31};
pub use fatsig::{fat_signature, fat_signature_quiver, FatSignature};
pub use forms::{delta, quiver_form, DimVector, FormMatrix};
pub use generic::{generic_element, tube_parameters, GenericDecomposition, P1Point};
pub use quiver::{classify, GraphClass, PathAlgebra, Quiver};
pub use roots::{positive_roots, Root, RootClass, RootKind};
