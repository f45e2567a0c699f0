//! Multilinear algebra on `R^n` with exact arithmetic.
//!
//! * [`combinadics`]: lexicographic k-subsets, ranks and complements.
//! * [`matrix`] and [`scalar`]: dense matrices over exact rationals or
//!   floats, minors, column deletion, determinants.
//! * [`wedge`]: the generalized vector product and the exterior map with
//!   its reversed, sign-alternating component convention.
//! * [`cramer`]: Cramer's rule along the cross-product and determinant routes.
//! * [`reversing`]: column reversal, the exchange matrix and palindromic
//!   vectors.
//! * [`verify`], [`report`], [`cli`]: seeded verification suites and the
//!   command-line surface.

pub mod cli;
pub mod combinadics;
pub mod cramer;
pub mod error;
pub mod matrix;
pub mod report;
pub mod reversing;
pub mod scalar;
pub mod verify;
pub mod wedge;

pub use combinadics::{binomial, complement, enumerate_subsets, rank, unrank, IndexSet};
pub use cramer::{solve, solve_by_cross, solve_component, LinearSystem};
pub use error::{Error, Result};
pub use matrix::{delete_column, det, dot, minor, parse_matrix, Matrix, Vector};
pub use reversing::{
    classify, exchange_det, palindromic_cross_check, prop3_sign, reverse_matrix,
    reversed_deleted_column, Palindromy, SignParity,
};
pub use scalar::{Mode, Rational, Scalar};
pub use wedge::{cross, det_via_wedge, wedge, wedge_k1, wedge_matrix, WedgeVector};
