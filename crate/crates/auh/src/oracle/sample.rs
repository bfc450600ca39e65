//! Seeded sampling of exact anti-uniform sources.
//!
//! Walks the spine top-down, drawing each leaf mass uniformly (on a fine
//! rational grid) from the interval that keeps the structural condition
//! satisfiable: `p_i >= q_{i-1} - p_{i-1}` looking back, `p_i >= Q/3`
//! looking ahead (`Q/2` at the last split), and `p_i <= min(p_{i-1}, Q)`.
//! Every output is anti-uniform by construction and exact.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dist::Distribution;
use crate::real::Real;

/// Grid for each uniform draw; denominators compound per level.
const STEPS: i64 = 1 << 20;

pub fn random_auh(n: usize, seed: u64) -> Distribution {
    assert!(n >= 2, "alphabet size must be at least 2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut probs: Vec<Real> = Vec::with_capacity(n);
    let mut remaining = Real::one();
    let mut prev: Option<Real> = None;
    for step in 1..n {
        let last_split = step == n - 1;
        let ahead = if last_split {
            &remaining * &Real::ratio(1, 2)
        } else {
            &remaining * &Real::ratio(1, 3)
        };
        let mut lo = ahead;
        if let Some(p) = &prev {
            let back = &remaining - p;
            if back > lo {
                lo = back;
            }
        }
        let hi = match &prev {
            Some(p) if p < &remaining => p.clone(),
            _ => remaining.clone(),
        };
        let p = if lo >= hi {
            lo
        } else {
            let u = rng.gen_range(0..STEPS);
            &lo + &(&(&hi - &lo) * &Real::ratio(u, STEPS))
        };
        remaining = &remaining - &p;
        prev = Some(p.clone());
        probs.push(p);
    }
    probs.push(remaining);
    Distribution::new(probs).expect("sampler output is valid by construction")
}
