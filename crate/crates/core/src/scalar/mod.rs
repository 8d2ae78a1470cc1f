//! Exact coefficient fields and the algebra parameters built on them.
//!
//! Two backends implement [`Scalar`]:
//!
//! * [`RationalFunction`]: the field `Q(q)` of rational functions with `q`
//!   transcendental (root order `l = 0`).
//! * [`Cyclotomic<L>`]: the cyclotomic field `Q(q)` with `q` a primitive
//!   `L`-th root of unity, reduced modulo the `L`-th cyclotomic polynomial.
//!
//! Values from different backends have different Rust types, so mixing them
//! is a compile error rather than a silent coercion.

mod cyclotomic;
mod intpoly;
mod params;
mod ratfunc;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

pub use num_traits::{One, Zero};

pub use crate::error::ScalarError;
pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic};
pub use params::{gauss_integer, lambda_params, validate_params, BlobParams, ParamError, Params};
pub use ratfunc::RationalFunction;

/// An exact field element in which the deformation parameter `q` lives.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + FromStr<Err = ScalarError>
    + PartialEq
    + Eq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Multiplicative order of `q`; `0` means `q` is transcendental.
    const ROOT_ORDER: u32;

    /// The distinguished generator `q`.
    fn q() -> Self;

    fn from_integer(c: i64) -> Self;

    fn try_inv(&self) -> Result<Self, ScalarError>;

    /// Rough storage size, used to pick cheap pivots during elimination.
    fn complexity(&self) -> usize;

    fn try_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.clone() * &other.try_inv()?)
    }

    /// Integer power, negative exponents allowed for nonzero bases.
    fn powi(&self, k: i64) -> Result<Self, ScalarError> {
        let base = if k < 0 { self.try_inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.clone() * &sq;
            }
        }
        Ok(acc)
    }
}
