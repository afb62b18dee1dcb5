//! Exact construction and analysis of repeated-root constacyclic codes of
//! length `2^a m p^r` over `F_(p^s)`.
//!
//! The crate is organized bottom-up:
//!
//! - [`field`]: `F_(p^s)` with a deterministic modulus and canonical generator.
//! - [`poly`]: dense polynomials, reciprocals and twists `f(x) -> f(cx)`.
//! - [`factor`]: the factorization engine.
//! - [`cyclo`]: cosets, orders, binomial factorizations and twisted grids.
//! - [`code`]: constacyclic codes, enumeration, duals and equivalence to cyclic codes.
//! - [`selfdual`]: self-dual negacyclic codes and the two existence criteria.
//! - [`oracle`]: brute-force ground truth used to certify the algebra.

pub mod arith;
pub mod code;
pub mod cyclo;
pub mod error;
pub mod factor;
pub mod field;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod selfdual;
pub mod text;

pub use code::{CodeShape, ConstaCode, ExponentVector, MonomialMap};
pub use cyclo::{Coset, FactorGrid, FactorList, TwistVariant};
pub use error::{Error, Result};
pub use field::{make_field, Elem, FieldSpec, Felt};
pub use poly::Poly;
