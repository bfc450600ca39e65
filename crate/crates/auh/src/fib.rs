//! Exact Fibonacci numbers: `f_1 = f_2 = 1`, `f_k = f_{k-1} + f_{k-2}`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// The `k`-th Fibonacci number; `fib(0) = 0` for convenience.
pub fn fib(k: u64) -> BigUint {
    let mut a = BigUint::zero();
    let mut b = BigUint::one();
    for _ in 0..k {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}
