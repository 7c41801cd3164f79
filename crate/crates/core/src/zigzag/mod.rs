//! Zigzag algebras and their relatives.

mod algebra;
mod build;
pub mod cartan;

pub use algebra::{AlgebraError, AlgebraMap, BasisElem, QuiverAlgebra, SparseVec};
pub use build::{
    build_skew, build_zigzag, path_algebra, skew_tree_isomorphism, trivial_extension,
    trivial_extension_to_zigzag, SkewCoefficients, ZigzagLayout,
};
pub use cartan::{
    cartan_inverse, compare_add_minus, quadratic_dual_dims, quantum_cartan, AddMinusReport,
    CartanInverse,
};
