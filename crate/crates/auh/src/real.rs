//! Exact-or-approximate scalar used for probabilities, lengths, and bounds.
//!
//! Average lengths and Kraft sums must be comparable exactly when the inputs
//! are rational (the extremal bounds are ratios of integers), while entropy
//! is inherently a float. `Real` keeps both representations behind one type;
//! arithmetic between mixed representations degrades to `f64`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Sub};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub enum Real {
    /// Arbitrary-precision rational, kept in lowest terms by `BigRational`.
    Exact(BigRational),
    /// IEEE 754 double.
    Approx(f64),
}

impl Real {
    pub fn zero() -> Self {
        Real::Exact(BigRational::zero())
    }

    pub fn one() -> Self {
        Real::Exact(BigRational::one())
    }

    pub fn from_int(v: i64) -> Self {
        Real::Exact(BigRational::from_integer(BigInt::from(v)))
    }

    /// Exact ratio `num/den`. Panics when `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Real::Exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn exact(r: BigRational) -> Self {
        Real::Exact(r)
    }

    pub fn approx(v: f64) -> Self {
        Real::Approx(v)
    }

    /// Parses an exact literal: `"3/8"`, `"0.375"`, `"2"`, or `"1e-6"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty numeric literal".into()));
        }
        if let Some((num, den)) = s.split_once('/') {
            let n: BigInt = num
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
            let d: BigInt = den
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            return Ok(Real::Exact(BigRational::new(n, d)));
        }
        parse_decimal(s)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Real::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Real::Exact(r) => Some(r),
            Real::Approx(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Real::Exact(r) => ratio_to_f64(r),
            Real::Approx(v) => *v,
        }
    }

    /// The same value demoted to the float representation.
    pub fn to_float(&self) -> Real {
        Real::Approx(self.to_f64())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Real::Exact(r) => r.is_zero(),
            Real::Approx(v) => *v == 0.0,
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Real::Exact(r) => r.is_positive(),
            Real::Approx(v) => *v > 0.0,
        }
    }

    /// Multiplies by a small non-negative integer (codeword length).
    pub fn mul_u32(&self, k: u32) -> Real {
        match self {
            Real::Exact(r) => Real::Exact(r * BigRational::from_integer(BigInt::from(k))),
            Real::Approx(v) => Real::Approx(v * f64::from(k)),
        }
    }
}

fn pow10(exp: u32) -> BigInt {
    BigInt::from(10u32).pow(exp)
}

fn parse_decimal(s: &str) -> Result<Real> {
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => {
            let exp: i32 = e
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
            (m, exp)
        }
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let digits: String = format!("{int_part}{frac_part}");
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(Error::Parse(format!("bad numeric literal {s:?}")));
    }
    let numer: BigInt = digits
        .parse()
        .map_err(|_| Error::Parse(format!("bad numeric literal {s:?}")))?;
    let scale = exp - frac_part.len() as i32;
    let r = if scale >= 0 {
        BigRational::from_integer(numer * pow10(scale as u32))
    } else {
        BigRational::new(numer, pow10((-scale) as u32))
    };
    Ok(Real::Exact(r))
}

/// `x` as `mantissa * 2^shift` with a mantissa that fits in 53 bits.
fn bigint_f64_parts(x: &BigInt) -> (f64, i64) {
    let bits = x.bits();
    if bits <= 53 {
        (x.to_f64().unwrap_or(0.0), 0)
    } else {
        let shift = bits - 53;
        ((x >> shift).to_f64().unwrap_or(0.0), shift as i64)
    }
}

/// Rational-to-double conversion that survives denominators far beyond
/// the `f64` range (random exact distributions accumulate huge ones).
pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let negative = r.numer().sign() == Sign::Minus;
    let numer = r.numer().abs();
    let (nf, ne) = bigint_f64_parts(&numer);
    let (df, de) = bigint_f64_parts(r.denom());
    let mag = (nf / df) * 2f64.powi((ne - de) as i32);
    if negative {
        -mag
    } else {
        mag
    }
}

fn binary_op(
    a: &Real,
    b: &Real,
    exact: impl Fn(&BigRational, &BigRational) -> BigRational,
    approx: impl Fn(f64, f64) -> f64,
) -> Real {
    match (a, b) {
        (Real::Exact(x), Real::Exact(y)) => Real::Exact(exact(x, y)),
        _ => Real::Approx(approx(a.to_f64(), b.to_f64())),
    }
}

impl Add for &Real {
    type Output = Real;
    fn add(self, rhs: &Real) -> Real {
        binary_op(self, rhs, |x, y| x + y, |x, y| x + y)
    }
}

impl Sub for &Real {
    type Output = Real;
    fn sub(self, rhs: &Real) -> Real {
        binary_op(self, rhs, |x, y| x - y, |x, y| x - y)
    }
}

impl Mul for &Real {
    type Output = Real;
    fn mul(self, rhs: &Real) -> Real {
        binary_op(self, rhs, |x, y| x * y, |x, y| x * y)
    }
}

impl Div for &Real {
    type Output = Real;
    fn div(self, rhs: &Real) -> Real {
        binary_op(self, rhs, |x, y| x / y, |x, y| x / y)
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Real::Exact(x), Real::Exact(y)) => x == y,
            _ => self.to_f64() == other.to_f64(),
        }
    }
}

impl Eq for Real {}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Real {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Real::Exact(x), Real::Exact(y)) => x.cmp(y),
            _ => self.to_f64().total_cmp(&other.to_f64()),
        }
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Exact(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Real::Approx(v) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(Real::parse("3/8").unwrap(), Real::ratio(3, 8));
        assert_eq!(Real::parse("0.375").unwrap(), Real::ratio(3, 8));
        assert_eq!(Real::parse("2").unwrap(), Real::from_int(2));
        assert_eq!(Real::parse("1e-6").unwrap(), Real::ratio(1, 1_000_000));
        assert_eq!(Real::parse("2.5e-3").unwrap(), Real::ratio(1, 400));
        assert_eq!(Real::parse("25e2").unwrap(), Real::from_int(2500));
        assert!(Real::parse("").is_err());
        assert!(Real::parse("1/0").is_err());
        assert!(Real::parse("x").is_err());
    }

    #[test]
    fn display_reduced() {
        assert_eq!(Real::ratio(2, 8).to_string(), "1/4");
        assert_eq!(Real::ratio(10, 5).to_string(), "2/1");
        assert_eq!(Real::approx(0.25).to_string(), "0.25");
    }

    #[test]
    fn arithmetic_stays_exact() {
        let a = Real::ratio(1, 3);
        let b = Real::ratio(1, 6);
        assert_eq!(&a + &b, Real::ratio(1, 2));
        assert_eq!(&a - &b, Real::ratio(1, 6));
        assert_eq!(&a * &b, Real::ratio(1, 18));
        assert_eq!(&a / &b, Real::from_int(2));
        assert!((&a + &b).is_exact());
        assert!(!(&a + &Real::approx(0.5)).is_exact());
    }

    #[test]
    fn huge_ratio_to_f64() {
        let big: BigInt = BigInt::from(1u8) << 400;
        let r = BigRational::new(big.clone() * 3, big * 4);
        let v = Real::exact(r).to_f64();
        assert!((v - 0.75).abs() < 1e-12);
    }

    #[test]
    fn ordering_mixed() {
        assert!(Real::ratio(1, 3) < Real::ratio(1, 2));
        assert!(Real::approx(0.4) > Real::ratio(1, 3));
        assert_eq!(Real::ratio(1, 4), Real::approx(0.25));
    }
}
