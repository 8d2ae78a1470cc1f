//! Exact tensor-space representations of the type-B Hecke algebra `H(n,2)`
//! and of its blob-algebra quotient `b_n(q, m)`.
//!
//! All arithmetic is exact. Every algorithm is generic in a [`Scalar`]
//! field; the aliases below name the concrete backends.

pub mod backend;
pub mod blob;
pub mod config;
pub mod error;
pub mod linalg;
pub mod relations;
pub mod report;
pub mod scalar;
pub mod specht;
pub mod tensor;
pub mod towers;
pub mod weightmod;

pub use error::{BlobError, Result};
pub use scalar::{BlobParams, Params, Scalar};

/// `Q(q)` with `q` transcendental.
pub type Generic = scalar::RationalFunction;
pub type Cyclo3 = scalar::Cyclotomic<3>;
pub type Cyclo5 = scalar::Cyclotomic<5>;
pub type Cyclo7 = scalar::Cyclotomic<7>;
