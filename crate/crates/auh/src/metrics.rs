//! Average length, entropy, and redundancy of a coded source.

use crate::dist::Distribution;
use crate::error::{Error, Result};
use crate::huffman::{build_huffman, length_profile};
use crate::profile::LengthProfile;
use crate::real::Real;

/// Tolerance for float equality of two average-length routes.
const FLOAT_LEN_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct Metrics {
    /// Average codeword length in bits per symbol; exact when the source is.
    pub avg_len: Real,
    /// Shannon entropy in bits per symbol.
    pub entropy: f64,
    /// `avg_len - entropy`, in bits per symbol.
    pub redundancy: f64,
}

/// Neumaier-compensated summation; the extremal entropy formula sums terms
/// spanning many magnitudes once Fibonacci numbers grow.
pub(crate) fn compensated_sum(terms: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for t in terms {
        let next = sum + t;
        if sum.abs() >= t.abs() {
            comp += (sum - next) + t;
        } else {
            comp += (t - next) + sum;
        }
        sum = next;
    }
    sum + comp
}

/// `L = sum p_i l_i`, exact when the distribution is rational.
pub fn avg_length(dist: &Distribution, profile: &LengthProfile) -> Result<Real> {
    if dist.n() != profile.n() {
        return Err(Error::DimensionMismatch {
            dist: dist.n(),
            profile: profile.n(),
        });
    }
    let mut sum = Real::zero();
    for (p, &l) in dist.probs().iter().zip(profile.lengths()) {
        sum = &sum + &p.mul_u32(l);
    }
    Ok(sum)
}

/// Evaluates a distribution against a length profile.
pub fn compute(dist: &Distribution, profile: &LengthProfile) -> Result<Metrics> {
    let avg_len = avg_length(dist, profile)?;
    let entropy = dist.entropy();
    let redundancy = avg_len.to_f64() - entropy;
    Ok(Metrics {
        avg_len,
        entropy,
        redundancy,
    })
}

/// Metrics under the source's own Huffman code, plus the profile used.
pub fn huffman_metrics(dist: &Distribution) -> (Metrics, LengthProfile) {
    let profile = length_profile(&build_huffman(dist));
    let m = compute(dist, &profile).expect("profile built from dist");
    (m, profile)
}

/// Definitional anti-uniform test: the profile `1,...,n-1,n-1` achieves the
/// Huffman-optimal average length (ties count). The structural fast path
/// [`Distribution::is_auh`] must agree with this; the test suite checks that
/// on randomized instances.
pub fn auh_profile_is_optimal(dist: &Distribution) -> bool {
    let auh = avg_length(dist, &LengthProfile::auh(dist.n())).expect("same n");
    let (opt, _) = huffman_metrics(dist);
    match (&auh, &opt.avg_len) {
        (Real::Exact(a), Real::Exact(b)) => a == b,
        _ => (auh.to_f64() - opt.avg_len.to_f64()).abs() <= FLOAT_LEN_TOL,
    }
}

/// Binary entropy `h(x) = -x log2 x - (1-x) log2 (1-x)` for `x` in `[0, 1]`.
pub fn binary_entropy(x: f64) -> f64 {
    assert!((0.0..=1.0).contains(&x), "binary entropy needs x in [0,1]");
    let term = |v: f64| if v == 0.0 { 0.0 } else { -v * v.log2() };
    term(x) + term(1.0 - x)
}
