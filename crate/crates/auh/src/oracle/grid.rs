//! Exhaustive enumeration of the sorted rational simplex and brute-force
//! maximization over its anti-uniform points.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{GridSpec, Objective, SearchReport};
use crate::bounds::{h_max, l_max};
use crate::dist::Distribution;
use crate::error::{Error, Result};
use crate::metrics::compensated_sum;
use crate::real::Real;

/// Iterates every composition `c_1 >= c_2 >= ... >= c_n >= 1` with
/// `sum c_i = m`, in ascending lexicographic order, each exactly once.
pub struct SortedSimplexIter {
    counts: Vec<u64>,
    m: u64,
    started: bool,
    done: bool,
}

/// Streams the sorted grid points of `spec` as integer count vectors;
/// divide by `m` for the probabilities.
pub fn enumerate_sorted_simplex(spec: &GridSpec) -> SortedSimplexIter {
    let n = spec.n as u64;
    let m = spec.m;
    // Lexicographically smallest sorted composition: as balanced as possible.
    let base = m / n;
    let extra = (m % n) as usize;
    let counts: Vec<u64> = (0..spec.n)
        .map(|i| if i < extra { base + 1 } else { base })
        .collect();
    SortedSimplexIter {
        counts,
        m,
        started: false,
        done: false,
    }
}

impl SortedSimplexIter {
    /// Advances to the lexicographic successor; false when exhausted.
    fn advance(&mut self) -> bool {
        let n = self.counts.len();
        // Suffix sums: suffix[i] = sum of counts[i..].
        for i in (0..n - 1).rev() {
            let suffix: u64 = self.counts[i..].iter().sum();
            let candidate = self.counts[i] + 1;
            if i > 0 && candidate > self.counts[i - 1] {
                continue;
            }
            let rest = n - 1 - i; // positions i+1..n
            if suffix < candidate + rest as u64 {
                continue; // not enough mass to keep everything positive
            }
            self.counts[i] = candidate;
            // Refill the suffix with its lexicographically smallest
            // arrangement: as balanced as possible under cap `candidate`.
            let mut remaining = suffix - candidate;
            let base = remaining / rest as u64;
            let extra = (remaining % rest as u64) as usize;
            for (j, slot) in (i + 1..n).enumerate() {
                let v = if j < extra { base + 1 } else { base };
                self.counts[slot] = v;
                remaining -= v;
            }
            debug_assert_eq!(remaining, 0);
            debug_assert!(self.counts[i] >= self.counts[i + 1]);
            return true;
        }
        false
    }
}

impl Iterator for SortedSimplexIter {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            debug_assert_eq!(self.counts.iter().sum::<u64>(), self.m);
            return Some(self.counts.clone());
        }
        if self.advance() {
            Some(self.counts.clone())
        } else {
            self.done = true;
            None
        }
    }
}

/// Exact distribution `c_i / m` for a grid point.
pub fn composition_to_dist(counts: &[u64], m: u64) -> Distribution {
    let probs: Vec<Real> = counts
        .iter()
        .map(|&c| Real::exact(BigRational::new(BigInt::from(c), BigInt::from(m))))
        .collect();
    Distribution::new(probs).expect("grid points are valid by construction")
}

/// Integer form of the structural anti-uniform test on counts:
/// `c_i >= sum_{j > i+1} c_j` for `i = 1..=n-2`. Agrees with
/// `Distribution::is_auh` on the corresponding exact distribution.
fn counts_are_auh(counts: &[u64]) -> bool {
    let n = counts.len();
    let mut tail = 0u64; // q_{i+1} = sum_{j > i+1} c_j, built from the right
    for i in (1..=n - 2).rev() {
        tail += counts[i + 1]; // 0-based: the count of p_{i+2}
        if counts[i - 1] < tail {
            return false;
        }
    }
    true
}

/// Average length numerator under the anti-uniform profile: `sum l_i c_i`
/// with lengths `1, ..., n-1, n-1`; the value is this over `m`.
fn auh_len_numer(counts: &[u64]) -> u64 {
    let n = counts.len();
    let mut total = 0u64;
    for (i, &c) in counts.iter().enumerate() {
        let l = if i == n - 1 { n - 1 } else { i + 1 } as u64;
        total += l * c;
    }
    total
}

fn counts_entropy(counts: &[u64], m: u64) -> f64 {
    let m_f = m as f64;
    compensated_sum(counts.iter().map(|&c| {
        let p = c as f64 / m_f;
        -p * p.log2()
    }))
}

/// Exhaustively maximizes the objective over the anti-uniform points of the
/// grid, evaluating under the fixed anti-uniform profile. Ties keep the
/// lexicographically smallest maximizer; the result does not depend on any
/// enumeration partitioning.
pub fn brute_force_max(spec: &GridSpec, objective: Objective) -> Result<SearchReport> {
    let mut evaluated = 0u64;
    let mut best_counts: Option<Vec<u64>> = None;
    let mut best_len_numer = 0u64;
    let mut best_entropy = f64::NEG_INFINITY;
    for counts in enumerate_sorted_simplex(spec) {
        if !counts_are_auh(&counts) {
            continue;
        }
        evaluated += 1;
        match objective {
            Objective::AvgLength => {
                let numer = auh_len_numer(&counts);
                if best_counts.is_none() || numer > best_len_numer {
                    best_len_numer = numer;
                    best_counts = Some(counts);
                }
            }
            Objective::Entropy => {
                let h = counts_entropy(&counts, spec.m);
                if best_counts.is_none() || h > best_entropy {
                    best_entropy = h;
                    best_counts = Some(counts);
                }
            }
        }
    }
    let best_counts = best_counts.ok_or(Error::EmptyFeasibleSet {
        n: spec.n,
        m: spec.m,
    })?;
    let best_dist = composition_to_dist(&best_counts, spec.m);
    let (best_value, bound) = match objective {
        Objective::AvgLength => (
            Real::exact(BigRational::new(
                BigInt::from(best_len_numer),
                BigInt::from(spec.m),
            )),
            Real::exact(l_max(spec.n)),
        ),
        Objective::Entropy => (Real::approx(best_entropy), Real::approx(h_max(spec.n))),
    };
    let gap = &bound - &best_value;
    Ok(SearchReport {
        objective,
        n: spec.n,
        grid_m: Some(spec.m),
        seed: 0,
        best_dist,
        best_value,
        bound,
        gap,
        evaluated,
    })
}
