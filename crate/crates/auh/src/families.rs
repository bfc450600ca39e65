//! Named source families: the Fibonacci extremal family, the
//! vanishing-entropy epsilon family, dyadic chains, the near-unit-redundancy
//! construction, and exploratory geometric/Poisson tails.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::dist::Distribution;
use crate::error::{Error, Result};
use crate::fib::fib;
use crate::real::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Fibonacci,
    Epsilon,
    Dyadic,
    HighRedundancy,
    GeometricTail,
    PoissonTail,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyKind::Fibonacci => "fibonacci",
            FamilyKind::Epsilon => "epsilon",
            FamilyKind::Dyadic => "dyadic",
            FamilyKind::HighRedundancy => "high_redundancy",
            FamilyKind::GeometricTail => "geometric_tail",
            FamilyKind::PoissonTail => "poisson_tail",
        };
        f.write_str(s)
    }
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fibonacci" => Ok(FamilyKind::Fibonacci),
            "epsilon" => Ok(FamilyKind::Epsilon),
            "dyadic" => Ok(FamilyKind::Dyadic),
            "high_redundancy" => Ok(FamilyKind::HighRedundancy),
            "geometric_tail" => Ok(FamilyKind::GeometricTail),
            "poisson_tail" => Ok(FamilyKind::PoissonTail),
            other => Err(Error::BadParam(format!("unknown family kind {other:?}"))),
        }
    }
}

/// A family selector with its named parameters.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: usize,
    /// Head mass parameter for `epsilon` and `high_redundancy`.
    pub eps: Option<Real>,
    /// Ratio for `geometric_tail`, in `(0, 1)`.
    pub q: Option<f64>,
    /// Rate for `poisson_tail`, positive.
    pub lambda: Option<f64>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, n: usize) -> Self {
        FamilySpec {
            kind,
            n,
            eps: None,
            q: None,
            lambda: None,
        }
    }
}

/// Builds the distribution a spec describes. `high_redundancy` uses the
/// dyadic source over `n-1` symbols as the inner code, which pins its
/// redundancy to `1 - h(eps)` exactly; use [`high_redundancy_dist`] directly
/// for other inner sources.
pub fn make_family(spec: &FamilySpec) -> Result<Distribution> {
    if spec.n < 2 {
        return Err(Error::BadParam(format!(
            "family needs n >= 2, got {}",
            spec.n
        )));
    }
    match spec.kind {
        FamilyKind::Fibonacci => Ok(fibonacci_dist(spec.n)),
        FamilyKind::Dyadic => Ok(dyadic_dist(spec.n)),
        FamilyKind::Epsilon => {
            let eps = spec
                .eps
                .as_ref()
                .ok_or_else(|| Error::BadParam("epsilon family needs eps".into()))?;
            epsilon_dist(spec.n, eps)
        }
        FamilyKind::HighRedundancy => {
            let eps = spec
                .eps
                .as_ref()
                .ok_or_else(|| Error::BadParam("high_redundancy family needs eps".into()))?;
            if spec.n < 3 {
                return Err(Error::BadParam(
                    "high_redundancy family needs n >= 3".into(),
                ));
            }
            high_redundancy_dist(&dyadic_dist(spec.n - 1), eps)
        }
        FamilyKind::GeometricTail => {
            let q = spec
                .q
                .ok_or_else(|| Error::BadParam("geometric_tail family needs q".into()))?;
            geometric_tail_dist(spec.n, q)
        }
        FamilyKind::PoissonTail => {
            let lambda = spec
                .lambda
                .ok_or_else(|| Error::BadParam("poisson_tail family needs lambda".into()))?;
            poisson_tail_dist(spec.n, lambda)
        }
    }
}

/// The Fibonacci source `(f_{n-1}, f_{n-2}, ..., f_2, f_1, f_2) / f_{n+1}`,
/// exact; attains both extremal bounds.
pub fn fibonacci_dist(n: usize) -> Distribution {
    assert!(n >= 2, "alphabet size must be at least 2");
    let k = n as u64;
    let denom = BigInt::from(fib(k + 1));
    let mut probs: Vec<Real> = (1..k)
        .rev()
        .map(|i| Real::exact(BigRational::new(BigInt::from(fib(i)), denom.clone())))
        .collect();
    probs.push(Real::exact(BigRational::new(
        BigInt::from(fib(2)),
        denom.clone(),
    )));
    Distribution::new(probs).expect("fibonacci family is valid by construction")
}

/// The dyadic chain `(1/2, 1/4, ..., 1/2^{n-1}, 1/2^{n-1})`, exact;
/// zero redundancy.
pub fn dyadic_dist(n: usize) -> Distribution {
    assert!(n >= 2, "alphabet size must be at least 2");
    let mut probs: Vec<Real> = (1..n)
        .map(|i| Real::exact(BigRational::new(BigInt::from(1), BigInt::from(1u8) << i)))
        .collect();
    probs.push(probs[n - 2].clone());
    Distribution::new(probs).expect("dyadic family is valid by construction")
}

/// The vanishing family `(1-eps, eps/2, eps/4, ..., eps/2^{n-2}, eps/2^{n-2})`
/// whose average length tends to 1 and entropy to 0 as `eps -> 0`.
/// Requires `eps` in `(0, 2/3]` (`(0, 1/2]` for `n = 2`, where the family
/// degenerates to `(1-eps, eps)`).
pub fn epsilon_dist(n: usize, eps: &Real) -> Result<Distribution> {
    let hi = if n == 2 {
        Real::ratio(1, 2)
    } else {
        Real::ratio(2, 3)
    };
    if !eps.is_positive() || eps > &hi {
        return Err(Error::BadParam(format!(
            "epsilon family needs eps in (0, {hi}], got {eps}"
        )));
    }
    let one = Real::one();
    let mut probs = vec![&one - eps];
    if n == 2 {
        probs.push(eps.clone());
    } else {
        for i in 1..=n - 2 {
            probs.push(eps / &Real::exact(BigRational::from_integer(BigInt::from(1u8) << i)));
        }
        probs.push(probs[n - 2].clone());
    }
    Distribution::new(probs)
}

/// Scales an inner source onto the tail of a near-deterministic head:
/// `(1-eps, eps*q_1, ..., eps*q_{n-1})`. Valid when
/// `1-eps >= eps * max(q_1, 1-q_1)`; the redundancy then decomposes as
/// `1 - h(eps) + eps * R(inner)`.
pub fn high_redundancy_dist(inner: &Distribution, eps: &Real) -> Result<Distribution> {
    if !eps.is_positive() || eps >= &Real::one() {
        return Err(Error::BadParam(format!(
            "high_redundancy family needs eps in (0, 1), got {eps}"
        )));
    }
    let one = Real::one();
    let head = &one - eps;
    let q1 = &inner.probs()[0];
    let q1c = &one - q1;
    let limit = if q1 >= &q1c { q1 } else { &q1c };
    let tail_cap = eps * limit;
    if head < tail_cap {
        return Err(Error::BadParam(format!(
            "high_redundancy condition violated: 1-eps = {} < eps*max(q1, 1-q1) = {}",
            head.to_f64(),
            tail_cap.to_f64()
        )));
    }
    let mut probs = vec![head];
    for q in inner.probs() {
        probs.push(eps * q);
    }
    Distribution::new(probs)
}

/// Truncated geometric source with ratio `q`: `p_i = (1-q) q^{i-1}` for
/// `i < n`, with `p_n = q^{n-1}` absorbing the whole remaining tail, so the
/// mass is one with no renormalization. Whether a given `(n, q)` is
/// anti-uniform is left to the classifier.
pub fn geometric_tail_dist(n: usize, q: f64) -> Result<Distribution> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::BadParam(format!(
            "geometric_tail family needs q in (0, 1), got {q}"
        )));
    }
    if n < 2 {
        return Err(Error::BadParam("geometric_tail family needs n >= 2".into()));
    }
    let mut probs = Vec::with_capacity(n);
    let mut power = 1.0f64;
    for _ in 0..n - 1 {
        probs.push((1.0 - q) * power);
        power *= q;
    }
    probs.push(power);
    Distribution::from_f64s(&probs)
}

/// Tail-slice source built from upper tails of a Poisson variable:
/// `p_i` proportional to `P(X >= i-1)` for `i = 1..=n`, renormalized.
/// Exploratory: no extremal property is claimed for it.
pub fn poisson_tail_dist(n: usize, lambda: f64) -> Result<Distribution> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::BadParam(format!(
            "poisson_tail family needs lambda > 0, got {lambda}"
        )));
    }
    if n < 2 {
        return Err(Error::BadParam("poisson_tail family needs n >= 2".into()));
    }
    // pmf(k) iteratively; tail(k) = P(X >= k) = 1 - cdf(k-1).
    let mut tails = Vec::with_capacity(n);
    let mut pmf = (-lambda).exp();
    let mut cdf = 0.0f64;
    for k in 0..n {
        tails.push((1.0 - cdf).max(0.0));
        cdf += pmf;
        pmf *= lambda / (k + 1) as f64;
    }
    let total: f64 = tails.iter().sum();
    if tails.iter().any(|&t| t <= 0.0) || total <= 0.0 {
        return Err(Error::BadParam(format!(
            "poisson tail underflows for n={n}, lambda={lambda}"
        )));
    }
    Distribution::from_f64s(&tails.iter().map(|t| t / total).collect::<Vec<_>>())
}
