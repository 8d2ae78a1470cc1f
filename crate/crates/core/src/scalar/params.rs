use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Scalar;
use crate::error::BlobError;

/// Raw parameter triple: tensor length `n`, root order `l` (0 = generic)
/// and blob parameter `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BlobParams {
    pub n: usize,
    pub l: u32,
    pub m: i64,
}

/// Why a parameter triple was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("tensor length must be positive")]
    EmptyTensor,
    #[error("root order l = {l} is excluded: {}", root_order_reason(*l))]
    RootOrder { l: u32 },
    #[error("m = {m} is 0 mod {l}: lambda1 = lambda2")]
    LambdasCoincide { l: u32, m: i64 },
    #[error("m = {m} is 1 mod {l}: lambda1 = q^2 lambda2")]
    LambdaQuadraticShift { l: u32, m: i64 },
}

fn root_order_reason(l: u32) -> &'static str {
    if 4 % l == 0 {
        "q^4 = 1"
    } else {
        "l must be odd"
    }
}

impl ParamError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            ParamError::EmptyTensor => "empty-tensor",
            ParamError::RootOrder { .. } => "root-order",
            ParamError::LambdasCoincide { .. } => "lambda-equal",
            ParamError::LambdaQuadraticShift { .. } => "lambda-q2-shift",
        }
    }
}

/// Residue of `m` modulo `l`, or `m` itself when `l = 0`.
pub(crate) fn residue(m: i64, l: u32) -> i64 {
    if l == 0 {
        m
    } else {
        m.rem_euclid(l as i64)
    }
}

/// Accept exactly the triples satisfying `q^4 != 1`, `lambda1 != lambda2`
/// and `lambda1 != q^2 lambda2`.
pub fn validate_params(p: &BlobParams) -> Result<(), ParamError> {
    if p.n == 0 {
        return Err(ParamError::EmptyTensor);
    }
    validate_root(p.l, p.m)
}

pub(crate) fn validate_root(l: u32, m: i64) -> Result<(), ParamError> {
    if l != 0 && (l.is_multiple_of(2) || l == 1) {
        return Err(ParamError::RootOrder { l });
    }
    match residue(m, l) {
        0 => Err(ParamError::LambdasCoincide { l, m }),
        1 => Err(ParamError::LambdaQuadraticShift { l, m }),
        _ => Ok(()),
    }
}

/// The coefficient data every operator needs: `q`, `lambda1`, `lambda2`.
///
/// Built from `(l, m)` with `lambda1 = q^m / (q - q^-1)` and
/// `lambda2 = q^-m / (q - q^-1)`. [`Params::swapped`] produces the twisted
/// data `(-q^-1, lambda2, lambda1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params<S> {
    l: u32,
    m: i64,
    swapped: bool,
    q: S,
    q_inv: S,
    lambda1: S,
    lambda2: S,
}

impl<S: Scalar> Params<S> {
    pub fn new(l: u32, m: i64) -> Result<Self, BlobError> {
        if S::ROOT_ORDER != l {
            return Err(BlobError::BackendMismatch {
                params: l,
                scalar: S::ROOT_ORDER,
            });
        }
        validate_root(l, m)?;
        let q = S::q();
        let q_inv = q.try_inv()?;
        let d_inv = (q.clone() - &q_inv).try_inv()?;
        let lambda1 = q.powi(m)? * &d_inv;
        let lambda2 = q.powi(-m)? * &d_inv;
        Ok(Params {
            l,
            m,
            swapped: false,
            q,
            q_inv,
            lambda1,
            lambda2,
        })
    }

    /// `(q, lambda1, lambda2) -> (-q^-1, lambda2, lambda1)`.
    pub fn swapped(&self) -> Self {
        Params {
            l: self.l,
            m: self.m,
            swapped: !self.swapped,
            q: -self.q_inv.clone(),
            q_inv: -self.q.clone(),
            lambda1: self.lambda2.clone(),
            lambda2: self.lambda1.clone(),
        }
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn is_swapped(&self) -> bool {
        self.swapped
    }

    pub fn q(&self) -> &S {
        &self.q
    }

    pub fn q_inv(&self) -> &S {
        &self.q_inv
    }

    pub fn lambda1(&self) -> &S {
        &self.lambda1
    }

    pub fn lambda2(&self) -> &S {
        &self.lambda2
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(&self, k: i64) -> S {
        let base = if k < 0 { &self.q_inv } else { &self.q };
        base.powi(k.abs()).expect("nonnegative power")
    }

    /// `q - q^-1`.
    pub fn q_minus_q_inv(&self) -> S {
        self.q.clone() - &self.q_inv
    }

    /// The Gaussian integer `[k] = (q^k - q^-k) / (q - q^-1)`, computed as the
    /// finite sum `q^(k-1) + q^(k-3) + ... + q^(1-k)`.
    pub fn gauss(&self, k: i64) -> S {
        let mut acc = S::zero();
        for j in 0..k.unsigned_abs() as i64 {
            acc = acc + self.q_pow(k.abs() - 1 - 2 * j);
        }
        if k < 0 {
            -acc
        } else {
            acc
        }
    }

    /// Residue of `m` modulo `l` (or `m` when generic).
    pub fn m_residue(&self) -> i64 {
        residue(self.m, self.l)
    }

    /// Whether `a = b mod l` (plain equality when `l = 0`).
    pub fn congruent(&self, a: i64, b: i64) -> bool {
        residue(a - b, self.l) == 0
    }
}

/// `[k]` for the given parameters.
pub fn gauss_integer<S: Scalar>(k: i64, params: &Params<S>) -> S {
    params.gauss(k)
}

/// `(lambda1, lambda2)`.
pub fn lambda_params<S: Scalar>(params: &Params<S>) -> (S, S) {
    (params.lambda1.clone(), params.lambda2.clone())
}
