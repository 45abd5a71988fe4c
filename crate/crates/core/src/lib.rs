//! twistkit: exact computational homological algebra.
//!
//! The crate provides dense exact linear algebra over the rationals and
//! integers ([`exactlin`]), graded modules and chain complexes with Smith
//! normal form homology ([`complexes`]), ordered simplicial complexes and
//! finite categories ([`simplicial`]), A-infinity functors with
//! Eilenberg-MacLane homotopy transfer ([`ainfty`]), twisting cochains and
//! Brown's twisted tensor product ([`twisting`]), Volodin and Whitehead
//! category validators ([`volodin`]), and flat superconnections with
//! Chen-type numeric transport ([`superconn`]).
//!
//! Everything outside `superconn`'s numeric layer is computed in exact
//! arbitrary-precision rational arithmetic. The core types are generic over
//! the scalar via the traits in [`scalar`]; the aliases below fix the
//! concrete instantiations used throughout.

pub mod ainfty;
pub mod complexes;
pub mod exactlin;
pub mod json;
pub mod parallel;
pub mod scalar;
pub mod simplicial;
pub mod superconn;
pub mod twisting;
pub mod volodin;

pub use scalar::{FieldScalar, IntegerScalar, Scalar};

/// Exact rational scalar used by every exact-arithmetic module.
pub type Q = num_rational::BigRational;
/// Arbitrary-precision integer scalar (Smith normal form, torsion).
pub type Z = num_bigint::BigInt;

/// Dense rational matrix.
pub type QMat = exactlin::Mat<Q>;
/// Dense integer matrix.
pub type ZMat = exactlin::Mat<Z>;
/// Dense double-precision matrix (numeric transport layer only).
pub type FMat = exactlin::Mat<f64>;
