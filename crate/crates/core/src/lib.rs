//! Octonions, the exceptional group G2(C) and symmetric Fricke cubic
//! surfaces.
//!
//! Triples in the six-dimensional semisimple class of G2 are recorded by
//! four invariants `p1..p4`; the product's conjugacy class `(alpha, beta)`
//! is a polynomial in them, and after an affine change of variables each
//! level set becomes a symmetric Fricke cubic surface. The crate also
//! covers the braid group actions on every level, the SL2 / D4 parameter
//! side, and the order-6048 group generated from Fano-plane data.

pub mod braid;
pub mod error;
pub mod fano;
pub mod fricke;
pub mod g2;
pub mod matrix;
pub mod octonion;
pub mod realize;
pub mod scalar;
pub mod sl2;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{Complex, Rational, Scalar};
