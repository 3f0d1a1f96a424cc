//! Exact integer helpers shared by the counting formulas.

use crate::error::{Error, Result};

/// `C(n, k)` with overflow detection.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) is exact at every step
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(Error::Overflow("binomial coefficient"))?
            / (i as u128 + 1);
    }
    Ok(acc)
}

pub(crate) fn exact_div(num: u128, den: u128, what: &'static str) -> Result<u128> {
    debug_assert!(den != 0);
    if !num.is_multiple_of(den) {
        // every caller divides by a known divisor; a remainder means a bug
        return Err(Error::Overflow(what));
    }
    Ok(num / den)
}
