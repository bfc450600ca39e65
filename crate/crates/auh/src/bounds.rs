//! Closed-form extremal bounds for anti-uniform sources and their
//! infinite-alphabet limits.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::fib::fib;
use crate::metrics::compensated_sum;
use crate::real::ratio_to_f64;

/// Largest average length of an `n`-symbol anti-uniform code,
/// `(f_{n+3} - 3) / f_{n+1}`, exact.
pub fn l_max(n: usize) -> BigRational {
    assert!(n >= 2, "alphabet size must be at least 2");
    let k = n as u64;
    let numer = BigInt::from(fib(k + 3)) - BigInt::from(3);
    BigRational::new(numer, BigInt::from(fib(k + 1)))
}

pub fn l_max_f64(n: usize) -> f64 {
    ratio_to_f64(&l_max(n))
}

/// `log2` of a big integer, exact for values up to 53 bits and within a few
/// ulps beyond.
fn big_log2(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 53 {
        x.to_f64().expect("fits f64").log2()
    } else {
        let shift = bits - 53;
        (x >> shift).to_f64().expect("53 bits").log2() + shift as f64
    }
}

/// Entropy of the `n`-symbol Fibonacci source in closed form:
/// `log2 f_{n+1} - (1/f_{n+1}) * sum_{i=1}^{n-1} f_i log2 f_i`.
pub fn h_max(n: usize) -> f64 {
    assert!(n >= 2, "alphabet size must be at least 2");
    let k = n as u64;
    let denom = fib(k + 1);
    let denom_f = BigRational::from_integer(BigInt::from(denom.clone()));
    let weighted = compensated_sum((1..k).map(|i| {
        let f = fib(i);
        let ratio = ratio_to_f64(&(BigRational::from_integer(BigInt::from(f.clone())) / &denom_f));
        ratio * big_log2(&f)
    }));
    big_log2(&denom) - weighted
}

/// Entropy ceiling for an infinite-alphabet anti-uniform code of average
/// length `L`: `L log2 L - (L-1) log2 (L-1)`, defined for `L > 1`.
pub fn h_max_infinite(avg_len: f64) -> Result<f64> {
    if !(avg_len > 1.0) {
        return Err(Error::DomainError(format!(
            "average length must exceed 1, got {avg_len}"
        )));
    }
    let l1 = avg_len - 1.0;
    Ok(avg_len * avg_len.log2() - l1 * l1.log2())
}

/// The golden-section constants the bounds converge to.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Asymptotics {
    /// Positive root of `x^2 + x - 1 = 0`.
    pub t: f64,
    /// Limit of the average-length bound: `1/t^2 = (3 + sqrt 5) / 2`.
    pub l_max_inf: f64,
    /// Limit of the entropy bound: `(1 + 1/t^2) log2 (1/t)`.
    pub h_max_inf: f64,
}

pub fn asymptotics() -> Asymptotics {
    let t = (5f64.sqrt() - 1.0) / 2.0;
    let l_max_inf = (3.0 + 5f64.sqrt()) / 2.0;
    let h_max_inf = (1.0 + 1.0 / (t * t)) * (1.0 / t).log2();
    Asymptotics {
        t,
        l_max_inf,
        h_max_inf,
    }
}
