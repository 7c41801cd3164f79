//! Exact computations with zigzag algebras, their graded modules and the
//! quantum group actions they categorify.

#![allow(clippy::needless_range_loop)]

pub mod adjoint;
pub mod braid;
pub mod laurent;
pub mod linalg;
pub mod mckay;
pub mod modrep;
pub mod report;
pub mod roots;
pub mod scalar;
pub mod selftest;
pub mod zigzag;

pub use laurent::{LaurentPoly, TruncatedSeries};
pub use scalar::{Field, Rat};

/// Laurent polynomials over the rationals.
pub type Laurent = LaurentPoly<Rat>;
/// Truncated power series over the rationals.
pub type Series = TruncatedSeries<Rat>;
/// Dense rational matrices.
pub type RatMatrix = linalg::Matrix<Rat>;
