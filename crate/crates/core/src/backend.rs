//! Runtime selection of a scalar backend from a root order `l`.

use crate::error::{BlobError, Result};
use crate::scalar::{Cyclotomic, RationalFunction, Scalar};

/// Cyclotomic orders compiled into this build.
pub const SUPPORTED_ORDERS: &[u32] = &[3, 5, 7, 9, 11, 13];

/// A computation that is generic in the scalar field.
pub trait WithScalar {
    type Output;
    fn run<S: Scalar>(self) -> Self::Output;
}

/// Run `job` over `Q(q)` for `l = 0`, else over the `l`-th cyclotomic field.
pub fn dispatch<J: WithScalar>(l: u32, job: J) -> Result<J::Output> {
    Ok(match l {
        0 => job.run::<RationalFunction>(),
        3 => job.run::<Cyclotomic<3>>(),
        5 => job.run::<Cyclotomic<5>>(),
        7 => job.run::<Cyclotomic<7>>(),
        9 => job.run::<Cyclotomic<9>>(),
        11 => job.run::<Cyclotomic<11>>(),
        13 => job.run::<Cyclotomic<13>>(),
        _ => return Err(BlobError::UnsupportedOrder(l)),
    })
}
