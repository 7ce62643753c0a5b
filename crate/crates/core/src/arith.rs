//! Checked 128-bit arithmetic with an optional width guard.
//!
//! All semigroup arithmetic goes through these helpers. Overflow is a hard
//! error, never a wrap. The environment variable `SEMITRACE_MAX_INT_BITS`
//! (default 127) lowers the admissible magnitude further, which is useful
//! when stress-testing the overflow policy.

use crate::error::{Error, Result};
use std::sync::OnceLock;

fn max_bits() -> u32 {
    static BITS: OnceLock<u32> = OnceLock::new();
    *BITS.get_or_init(|| {
        std::env::var("SEMITRACE_MAX_INT_BITS")
            .ok()
            .and_then(|s| s.parse::<u32>().ok())
            .map(|b| b.clamp(8, 127))
            .unwrap_or(127)
    })
}

/// Rejects values whose magnitude does not fit in `SEMITRACE_MAX_INT_BITS` bits.
pub fn guard(x: i128) -> Result<i128> {
    let bits = max_bits();
    if bits >= 127 {
        return Ok(x);
    }
    let limit = 1i128 << (bits - 1);
    if x <= -limit || x >= limit {
        Err(Error::MagnitudeGuard(x))
    } else {
        Ok(x)
    }
}

pub fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b)
        .ok_or(Error::Overflow("addition"))
        .and_then(guard)
}

pub fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b)
        .ok_or(Error::Overflow("subtraction"))
        .and_then(guard)
}

pub fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b)
        .ok_or(Error::Overflow("multiplication"))
        .and_then(guard)
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn gcd_all(xs: &[i128]) -> i128 {
    xs.iter().fold(0, |acc, &x| gcd(acc, x))
}

/// p-adic valuation of n (n != 0).
pub fn valuation(p: i128, mut n: i128) -> u32 {
    debug_assert!(n != 0 && p > 1);
    n = n.abs();
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}
