//! Codeword-length profiles and Kraft accounting.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

/// A sequence of codeword lengths `l_1, ..., l_n`, aligned with symbol order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthProfile {
    lengths: Vec<u32>,
}

impl LengthProfile {
    pub fn new(lengths: Vec<u32>) -> Result<Self> {
        if lengths.len() < 2 {
            return Err(Error::InvalidDistribution(format!(
                "need at least 2 codewords, got {}",
                lengths.len()
            )));
        }
        if lengths.iter().any(|&l| l == 0) {
            return Err(Error::InvalidDistribution(
                "zero-length codeword in profile".into(),
            ));
        }
        Ok(LengthProfile { lengths })
    }

    /// The anti-uniform profile `1, 2, ..., n-2, n-1, n-1`.
    pub fn auh(n: usize) -> Self {
        assert!(n >= 2, "alphabet size must be at least 2");
        let mut lengths: Vec<u32> = (1..n as u32).collect();
        lengths.push(n as u32 - 1);
        LengthProfile { lengths }
    }

    pub fn n(&self) -> usize {
        self.lengths.len()
    }

    pub fn lengths(&self) -> &[u32] {
        &self.lengths
    }

    pub fn sorted(&self) -> Vec<u32> {
        let mut v = self.lengths.clone();
        v.sort_unstable();
        v
    }

    /// Exact Kraft sum `sum 2^{-l_i}`.
    pub fn kraft_sum(&self) -> BigRational {
        let max = *self.lengths.iter().max().expect("nonempty");
        let mut numer = BigInt::from(0u8);
        for &l in &self.lengths {
            numer += BigInt::from(1u8) << (max - l);
        }
        BigRational::new(numer, BigInt::from(1u8) << max)
    }

    /// True when the Kraft sum is exactly one (complete code tree).
    pub fn is_complete(&self) -> bool {
        self.kraft_sum().is_one()
    }
}
