//! Mass-shift perturbations of anti-uniform sources.
//!
//! Both moves take mass off one symbol and spread it pro-rata over the
//! symbols below, exactly in rational arithmetic. `spread_from_leaf(i)`
//! fires when `p_i > q_i` and pushes mass into the subtree under leaf `i`;
//! `spread_from_head` fires when `p_1 > q_2` and spreads mass from the top
//! symbol over all the others. With step fraction 1 the shift is half the
//! violation.
//!
//! For `i <= n-2` the leaf move strictly increases both the average length
//! under the anti-uniform profile and the entropy, and it keeps the vector
//! ordered. At `i = n-1` the two affected symbols share a depth, so the
//! average length is unchanged while the entropy still strictly increases.
//! The head move is improving while the shifted vector stays ordered; a
//! large fraction can overshoot past `p_2`, after which re-sorting may lower
//! either objective. The ascent loop compensates by shrinking its fraction.

use crate::dist::Distribution;
use crate::error::{Error, Result};
use crate::real::Real;

fn check_fraction(fraction: &Real) -> Result<()> {
    if !fraction.is_positive() || fraction > &Real::one() {
        return Err(Error::BadParam(format!(
            "step fraction must lie in (0, 1], got {fraction}"
        )));
    }
    Ok(())
}

fn half() -> Real {
    Real::ratio(1, 2)
}

/// Moves `eps = fraction * (p_i - q_i) / 2` of mass from leaf `i` (1-based,
/// `1..=n-1`) pro-rata onto `p_{i+1}, ..., p_n`. Total mass is preserved
/// exactly; requires `p_i > q_i`.
pub fn spread_from_leaf(dist: &Distribution, i: usize, fraction: &Real) -> Result<Distribution> {
    check_fraction(fraction)?;
    let n = dist.n();
    if i == 0 || i >= n {
        return Err(Error::InvalidNode { index: i, n });
    }
    let p_i = dist.prob(i);
    let q_i = dist.tail_mass(i);
    if p_i <= &q_i {
        return Err(Error::MoveNotApplicable(format!(
            "p_{i} = {} does not exceed q_{i} = {}",
            p_i.to_f64(),
            q_i.to_f64()
        )));
    }
    let eps = &(&(p_i - &q_i) * &half()) * fraction;
    let scale = &Real::one() + &(&eps / &q_i);
    let probs: Vec<Real> = dist
        .probs()
        .iter()
        .enumerate()
        .map(|(k, p)| {
            use std::cmp::Ordering::*;
            match (k + 1).cmp(&i) {
                Less => p.clone(),
                Equal => p - &eps,
                Greater => p * &scale,
            }
        })
        .collect();
    Distribution::new(probs)
}

/// Moves `eps = fraction * (p_1 - q_2) / 2` of mass from the top symbol
/// pro-rata onto `p_2, ..., p_n` (each scaled by `1 + eps/q_1`). Total mass
/// is preserved exactly; requires `p_1 > q_2` and `n >= 3`.
pub fn spread_from_head(dist: &Distribution, fraction: &Real) -> Result<Distribution> {
    check_fraction(fraction)?;
    let n = dist.n();
    if n < 3 {
        return Err(Error::MoveNotApplicable(
            "head move needs at least 3 symbols".into(),
        ));
    }
    let p_1 = dist.prob(1);
    let q_2 = dist.tail_mass(2);
    if p_1 <= &q_2 {
        return Err(Error::MoveNotApplicable(format!(
            "p_1 = {} does not exceed q_2 = {}",
            p_1.to_f64(),
            q_2.to_f64()
        )));
    }
    let q_1 = dist.tail_mass(1);
    let eps = &(&(p_1 - &q_2) * &half()) * fraction;
    let scale = &Real::one() + &(&eps / &q_1);
    let mut probs = Vec::with_capacity(n);
    probs.push(p_1 - &eps);
    for p in &dist.probs()[1..] {
        probs.push(p * &scale);
    }
    Distribution::new(probs)
}
