//! Ordered probability distributions.
//!
//! A `Distribution` is a non-increasing probability vector `p_1 >= ... >= p_n`
//! with positive entries summing to one. Entries are either all exact
//! rationals or all floats; mixed input is promoted to floats. The tail sums
//! `q_i = sum_{j>i} p_j` are the weights of the intermediate nodes on the
//! anti-uniform spine, and the structural test `p_i >= q_{i+1}` decides
//! whether the anti-uniform profile is optimal for the source.

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::real::Real;

/// Absolute slack used for float-represented structural comparisons.
const FLOAT_SLACK: f64 = 1e-12;

/// Inputs whose mass differs from one by more than this are rejected.
const NORMALIZE_GATE: f64 = 1e-9;

/// Float sums closer to one than this are left untouched.
const FLOAT_RENORM_SKIP: f64 = 1e-14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distribution {
    probs: Vec<Real>,
}

impl Distribution {
    /// Validates, sorts (descending, stable), and normalizes a probability
    /// vector. Mass within `1e-9` of one is renormalized; worse is an error.
    pub fn new(probs: Vec<Real>) -> Result<Self> {
        Ok(Self::with_permutation(probs)?.0)
    }

    /// Like [`Distribution::new`] but also returns the permutation mapping
    /// sorted positions back to input positions: `perm[k]` is the index in
    /// the input of the `k`-th sorted probability.
    pub fn with_permutation(probs: Vec<Real>) -> Result<(Self, Vec<usize>)> {
        if probs.len() < 2 {
            return Err(Error::InvalidDistribution(format!(
                "need at least 2 symbols, got {}",
                probs.len()
            )));
        }
        let mixed = probs.iter().any(Real::is_exact) && !probs.iter().all(Real::is_exact);
        let probs: Vec<Real> = if mixed {
            probs.iter().map(Real::to_float).collect()
        } else {
            probs
        };
        if let Some(bad) = probs.iter().find(|p| !p.is_positive()) {
            return Err(Error::InvalidDistribution(format!(
                "probability {bad} is not positive"
            )));
        }
        if probs.iter().any(|p| !p.to_f64().is_finite()) {
            return Err(Error::InvalidDistribution("non-finite probability".into()));
        }

        let mut sum = Real::zero();
        for p in &probs {
            sum = &sum + p;
        }
        if (sum.to_f64() - 1.0).abs() > NORMALIZE_GATE {
            return Err(Error::InvalidDistribution(format!(
                "mass {} is not within {NORMALIZE_GATE} of 1",
                sum.to_f64()
            )));
        }
        let needs_renorm = match &sum {
            Real::Exact(r) => !r.is_one(),
            Real::Approx(v) => (v - 1.0).abs() > FLOAT_RENORM_SKIP,
        };
        let probs: Vec<Real> = if needs_renorm {
            probs.iter().map(|p| p / &sum).collect()
        } else {
            probs
        };

        let mut order: Vec<usize> = (0..probs.len()).collect();
        order.sort_by(|&a, &b| probs[b].cmp(&probs[a]));
        let sorted = order.iter().map(|&i| probs[i].clone()).collect();
        Ok((Distribution { probs: sorted }, order))
    }

    /// Builds a float distribution from raw values.
    pub fn from_f64s(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| Real::approx(v)).collect())
    }

    /// Builds an exact distribution from `(numerator, denominator)` pairs.
    pub fn from_ratios(fracs: &[(i64, i64)]) -> Result<Self> {
        Self::new(fracs.iter().map(|&(n, d)| Real::ratio(n, d)).collect())
    }

    pub fn n(&self) -> usize {
        self.probs.len()
    }

    pub fn probs(&self) -> &[Real] {
        &self.probs
    }

    /// `p_i` with a 1-based index, matching the ordered-source convention.
    pub fn prob(&self, i: usize) -> &Real {
        &self.probs[i - 1]
    }

    pub fn is_exact(&self) -> bool {
        self.probs.iter().all(Real::is_exact)
    }

    pub fn to_float(&self) -> Distribution {
        Distribution {
            probs: self.probs.iter().map(Real::to_float).collect(),
        }
    }

    pub fn to_f64s(&self) -> Vec<f64> {
        self.probs.iter().map(Real::to_f64).collect()
    }

    /// Tail mass `q_i = sum_{j>i} p_j` for `i` in `1..=n-1`.
    pub fn tail_mass(&self, i: usize) -> Real {
        assert!(
            (1..self.n()).contains(&i),
            "tail mass index {i} out of 1..{}",
            self.n()
        );
        let mut sum = Real::zero();
        for p in &self.probs[i..] {
            sum = &sum + p;
        }
        sum
    }

    /// The intermediate-node weights `q_1, ..., q_{n-2}` of the anti-uniform
    /// spine; strictly decreasing, with `q_1 = 1 - p_1`.
    pub fn intermediate_probs(&self) -> Vec<Real> {
        let n = self.n();
        let mut out = Vec::with_capacity(n.saturating_sub(2));
        let mut sum = Real::zero();
        for p in self.probs[1..].iter().rev() {
            sum = &sum + p;
            out.push(sum.clone());
        }
        out.reverse(); // now q_1, ..., q_{n-1}
        out.pop(); // q_{n-1} = p_n is a leaf, not an intermediate node
        out
    }

    /// Structural anti-uniform test: `p_i >= q_{i+1}` for `i = 1..=n-2`.
    ///
    /// Equivalent to "the profile `1, 2, ..., n-1, n-1` is optimal" (ties
    /// included); the equivalence is exercised against the profile-comparison
    /// definition in the test suite. Exact distributions compare exactly,
    /// float ones get `1e-12` of absolute slack.
    pub fn is_auh(&self) -> bool {
        let n = self.n();
        if n == 2 {
            return true;
        }
        let mut tail = Real::zero(); // q_{i+1} built from the right
        for i in (1..=n - 2).rev() {
            // After this addition tail = q_{i+1} = sum_{j > i+1} p_j;
            // 0-based, the element joining the tail is p_{i+2} = probs[i+1].
            tail = &tail + &self.probs[i + 1];
            let p_i = &self.probs[i - 1];
            let ok = match (p_i, &tail) {
                (Real::Exact(p), Real::Exact(q)) => p >= q,
                _ => p_i.to_f64() - tail.to_f64() >= -FLOAT_SLACK,
            };
            if !ok {
                return false;
            }
        }
        true
    }

    /// Splits the source at spine node `i` (1-based, `1..=n-2`): returns the
    /// merged source (symbols `1..=i` plus a super-symbol of weight `q_i`),
    /// the normalized subtree source `(p_{i+1}, ..., p_n) / q_i`, and `q_i`.
    pub fn decompose(&self, node_index: usize) -> Result<(Distribution, Distribution, Real)> {
        let n = self.n();
        if node_index == 0 || node_index > n.saturating_sub(2) {
            return Err(Error::InvalidNode {
                index: node_index,
                n,
            });
        }
        let u = self.tail_mass(node_index);
        let mut merged: Vec<Real> = self.probs[..node_index].to_vec();
        merged.push(u.clone());
        let subtree: Vec<Real> = self.probs[node_index..].iter().map(|p| p / &u).collect();
        Ok((Distribution::new(merged)?, Distribution::new(subtree)?, u))
    }

    /// Shannon entropy in bits, always computed in floats.
    pub fn entropy(&self) -> f64 {
        crate::metrics::compensated_sum(self.probs.iter().map(|p| {
            let v = p.to_f64();
            -v * v.log2()
        }))
    }

    /// Exact total mass; one by construction, exposed for tests.
    pub fn mass(&self) -> Real {
        let mut sum = Real::zero();
        for p in &self.probs {
            sum = &sum + p;
        }
        sum
    }
}

/// Exact Kraft-style rational one, used by callers comparing masses.
pub fn one() -> BigRational {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts_descending_with_permutation() {
        let (d, perm) = Distribution::with_permutation(vec![
            Real::ratio(1, 5),
            Real::ratio(2, 5),
            Real::ratio(2, 5),
        ])
        .unwrap();
        assert_eq!(d.to_f64s(), vec![0.4, 0.4, 0.2]);
        // Stable: the two 2/5 entries keep their input order.
        assert_eq!(perm, vec![1, 2, 0]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Distribution::from_f64s(&[1.0]).is_err());
        assert!(Distribution::from_f64s(&[0.5, 0.0, 0.5]).is_err());
        assert!(Distribution::from_f64s(&[0.7, 0.7]).is_err());
        assert!(Distribution::from_f64s(&[0.5, -0.5, 1.0]).is_err());
    }

    #[test]
    fn renormalizes_near_one() {
        let d = Distribution::from_f64s(&[0.5, 0.3, 0.2 + 5e-10]).unwrap();
        assert!((d.to_f64s().iter().sum::<f64>() - 1.0).abs() < 1e-15);
        let d = Distribution::from_ratios(&[(1, 2), (1, 2)]).unwrap();
        assert_eq!(d.mass(), Real::one());
    }

    #[test]
    fn mixed_input_promotes_to_float() {
        let d = Distribution::new(vec![Real::ratio(1, 2), Real::approx(0.5)]).unwrap();
        assert!(!d.is_exact());
    }

    #[test]
    fn intermediate_probs_examples() {
        // q_i = sum_{j>i} p_j, for i = 1..=n-2.
        let d = Distribution::from_f64s(&[0.4, 0.2, 0.2, 0.2]).unwrap();
        let q: Vec<f64> = d.intermediate_probs().iter().map(Real::to_f64).collect();
        assert!((q[0] - 0.6).abs() < 1e-15 && (q[1] - 0.4).abs() < 1e-15);

        let d = Distribution::from_f64s(&[0.5, 0.25, 0.25]).unwrap();
        let q = d.intermediate_probs();
        assert_eq!(q.len(), 1);
        assert!((q[0].to_f64() - 0.5).abs() < 1e-15);

        let d = Distribution::from_ratios(&[(3, 8), (2, 8), (1, 8), (1, 8), (1, 8)]).unwrap();
        let q = d.intermediate_probs();
        assert_eq!(q, vec![Real::ratio(5, 8), Real::ratio(3, 8), Real::ratio(2, 8)]);
        // q_1 = 1 - p_1 and strict decrease.
        assert_eq!(q[0], &Real::one() - d.prob(1));
        assert!(q.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn structural_auh_examples() {
        let auh = Distribution::from_ratios(&[(8, 16), (4, 16), (2, 16), (1, 16), (1, 16)]).unwrap();
        assert!(auh.is_auh());
        let uniform4 = Distribution::from_ratios(&[(1, 4), (1, 4), (1, 4), (1, 4)]).unwrap();
        assert!(!uniform4.is_auh());
        // Boundary tie counts as anti-uniform.
        let tied = Distribution::from_ratios(&[(35, 100), (30, 100), (20, 100), (15, 100)]).unwrap();
        assert!(tied.is_auh());
        // Every 2-symbol source is vacuously anti-uniform.
        let two = Distribution::from_f64s(&[0.9, 0.1]).unwrap();
        assert!(two.is_auh());
        // Every 3-symbol source is anti-uniform (profile 1,2,2 is the only one).
        let three = Distribution::from_f64s(&[0.34, 0.33, 0.33]).unwrap();
        assert!(three.is_auh());
    }

    #[test]
    fn decompose_examples() {
        let d = Distribution::from_ratios(&[(2, 5), (1, 5), (1, 5), (1, 5)]).unwrap();
        let (merged, subtree, u) = d.decompose(1).unwrap();
        assert_eq!(u, Real::ratio(3, 5));
        assert_eq!(merged.probs(), &[Real::ratio(3, 5), Real::ratio(2, 5)]);
        assert_eq!(
            subtree.probs(),
            &[Real::ratio(1, 3), Real::ratio(1, 3), Real::ratio(1, 3)]
        );

        let d = Distribution::from_ratios(&[(1, 2), (1, 4), (1, 4)]).unwrap();
        let (merged, subtree, u) = d.decompose(1).unwrap();
        assert_eq!(u, Real::ratio(1, 2));
        assert_eq!(merged.probs(), &[Real::ratio(1, 2), Real::ratio(1, 2)]);
        assert_eq!(subtree.probs(), &[Real::ratio(1, 2), Real::ratio(1, 2)]);

        let d = Distribution::from_ratios(&[(3, 8), (2, 8), (1, 8), (1, 8), (1, 8)]).unwrap();
        let (merged, subtree, u) = d.decompose(2).unwrap();
        assert_eq!(u, Real::ratio(3, 8));
        assert_eq!(
            merged.probs(),
            &[Real::ratio(3, 8), Real::ratio(3, 8), Real::ratio(2, 8)]
        );
        assert_eq!(
            subtree.probs(),
            &[Real::ratio(1, 3), Real::ratio(1, 3), Real::ratio(1, 3)]
        );

        assert!(matches!(
            d.decompose(0),
            Err(Error::InvalidNode { index: 0, .. })
        ));
        assert!(d.decompose(4).is_err());
    }

    #[test]
    fn entropy_spot_values() {
        let d = Distribution::from_f64s(&[0.5, 0.25, 0.25]).unwrap();
        assert!((d.entropy() - 1.5).abs() < 1e-14);
        let u = Distribution::from_ratios(&[(1, 3), (1, 3), (1, 3)]).unwrap();
        assert!((u.entropy() - 3f64.log2()).abs() < 1e-14);
    }
}
