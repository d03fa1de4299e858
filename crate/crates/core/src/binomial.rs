//! Checked binomial coefficients.

use crate::error::{Error, Result};

/// Combinatorial binomial: `C(a, b) = 0` when `b < 0` or `a < b`.
///
/// This is the convention every Betti and Hilbert-function sum here relies
/// on; in particular `C(a, b) = 0` for negative `a`.
pub fn binomial(a: i64, b: i64) -> Result<i128> {
    if b < 0 || a < b {
        return Ok(0);
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for k in 0..b {
        // acc * (a - k) / (k + 1) is exact at every step
        acc = acc
            .checked_mul((a - k) as i128)
            .ok_or(Error::Overflow("binomial coefficient"))?
            / (k as i128 + 1);
    }
    Ok(acc)
}

/// Generalized binomial `t (t-1) ... (t-k+1) / k!`, defined for every
/// integer `t`; this is the polynomial in `t` used to evaluate Hilbert
/// polynomials outside the stable range.
pub fn binomial_poly(t: i64, k: u32) -> Result<i128> {
    let mut acc: i128 = 1;
    for j in 0..k as i64 {
        acc = acc
            .checked_mul((t - j) as i128)
            .ok_or(Error::Overflow("binomial polynomial"))?
            / (j as i128 + 1);
    }
    Ok(acc)
}
