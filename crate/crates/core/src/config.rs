//! Runtime limits.

use crate::error::{BlobError, Result};

/// Environment variable that overrides the tensor-length cap.
pub const MAX_N_ENV: &str = "BLOBTENSOR_MAX_N";

pub const DEFAULT_MAX_N_GENERIC: usize = 12;
pub const DEFAULT_MAX_N_CYCLOTOMIC: usize = 16;

/// Largest tensor length accepted for root order `l` (`0` = generic).
pub fn max_n(l: u32) -> usize {
    if let Some(n) = std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
    {
        return n;
    }
    if l == 0 {
        DEFAULT_MAX_N_GENERIC
    } else {
        DEFAULT_MAX_N_CYCLOTOMIC
    }
}

pub fn check_n(n: usize, l: u32) -> Result<()> {
    let cap = max_n(l).min(crate::tensor::MAX_WORD_LEN);
    if n > cap {
        return Err(BlobError::DimensionCap { n, cap });
    }
    Ok(())
}
