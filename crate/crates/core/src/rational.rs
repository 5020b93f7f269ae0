//! Exact rational scalars.
//!
//! Backed by `num_rational::BigRational`, which keeps values in lowest terms
//! with a positive denominator.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::str::FromStr;

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` as a rational. Panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or an integer literal. Surrounding whitespace is ignored.
pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    let valid = text.split('/').all(|part| {
        let digits = part
            .strip_prefix('-')
            .or_else(|| part.strip_prefix('+'))
            .unwrap_or(part);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    });
    if !valid || text.matches('/').count() > 1 {
        return None;
    }
    if let Some((_, den)) = text.split_once('/') {
        if BigInt::from_str(den).ok()?.is_zero() {
            return None;
        }
    }
    Rational::from_str(text).ok()
}

/// `n!` as a rational.
pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient `C(n, k)` for integer `n` (possibly negative) and `k >= 0`.
pub fn binomial(n: i64, k: u64) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k as i64 {
        acc *= int(n - j);
    }
    acc / factorial(k)
}

/// True when the rational is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}
