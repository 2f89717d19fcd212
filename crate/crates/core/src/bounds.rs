//! Exact comparisons against `√(n+1)·2^(n/2)`.
//!
//! All checks compare squares in integers: `c ≤ √(n+1)·2^(n/2)` iff
//! `c² ≤ (n+1)·2ⁿ`, and `c ≥ ½·√(n+1)·2^(n/2)` iff `4c² ≥ (n+1)·2ⁿ`.

use num_bigint::BigUint;

/// `(n+1)·2ⁿ`.
pub fn bound_sq(n: usize) -> BigUint {
    BigUint::from(n + 1) << n
}

/// `√(n+1)·2^(n/2)` as a float, for display.
pub fn bound(n: usize) -> f64 {
    ((n + 1) as f64).sqrt() * 2f64.powf(n as f64 / 2.0)
}

/// `½·√(n+1)·2^(n/2)` as a float, for display.
pub fn lower_bound(n: usize) -> f64 {
    bound(n) / 2.0
}

/// `count ≤ √(n+1)·2^(n/2)`, exactly.
pub fn square_at_most(count: impl Into<BigUint>, n: usize) -> bool {
    let c = count.into();
    &c * &c <= bound_sq(n)
}

/// `count ≥ ½·√(n+1)·2^(n/2)`, exactly.
pub fn at_least_half_bound(count: impl Into<BigUint>, n: usize) -> bool {
    let c = count.into();
    (&c * &c) << 2 >= bound_sq(n)
}
