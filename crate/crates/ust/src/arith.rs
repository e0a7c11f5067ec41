//! Exact integer helpers and the quarter-integer rational type.
//!
//! Everything here is plain 64-bit arithmetic. The invariants computed by
//! this crate are identities between exact quantities, so no floating point
//! appears anywhere in the call graph.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Extended Euclidean algorithm.
///
/// Returns `(g, x, y)` with `g = gcd(a, b) > 0` and `a*x + b*y = g`.
/// Errors when both inputs are zero.
pub fn ext_gcd(a: i64, b: i64) -> Result<(i64, i64, i64)> {
    if a == 0 && b == 0 {
        return Err(Error::BothZero);
    }
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let quotient = old_r / r;
        (old_r, r) = (r, old_r - quotient * r);
        (old_s, s) = (s, old_s - quotient * s);
        (old_t, t) = (t, old_t - quotient * t);
    }
    if old_r < 0 {
        (old_r, old_s, old_t) = (-old_r, -old_s, -old_t);
    }
    debug_assert_eq!(a * old_s + b * old_t, old_r);
    Ok((old_r, old_s, old_t))
}

/// Greatest common divisor, always non-negative.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The unique `r` in `[1, m-1]` with `a * r = 1 (mod m)`.
///
/// Requires `m >= 2` and `gcd(a, m) = 1`.
pub fn mod_inverse(a: i64, m: i64) -> Result<i64> {
    if m < 2 {
        return Err(Error::ModulusTooSmall(m));
    }
    let reduced = a.rem_euclid(m);
    let (g, x, _) = ext_gcd(reduced, m)?;
    if g != 1 {
        return Err(Error::NotInvertible { a, m });
    }
    let r = x.rem_euclid(m);
    debug_assert_eq!((reduced * r).rem_euclid(m), 1);
    Ok(r)
}

/// An exact rational whose denominator divides 4, stored in lowest terms.
///
/// This is the value type for the upsilon invariant and its per-cobordism
/// deltas: the recursion only ever subtracts quarters, and the band-move
/// sums only ever add halves, so {1, 2, 4} covers every denominator that
/// can occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuarterRational {
    num: i64,
    den: i64,
}

impl QuarterRational {
    pub const ZERO: QuarterRational = QuarterRational { num: 0, den: 1 };

    /// Builds `num / den`, reducing to lowest terms.
    /// The denominator must be one of 1, 2, 4.
    pub fn new(num: i64, den: i64) -> Result<QuarterRational> {
        if !matches!(den, 1 | 2 | 4) {
            return Err(Error::BadDenominator(den));
        }
        Ok(Self::reduced(num, den))
    }

    /// `n` as a quarter-rational.
    pub fn from_integer(n: i64) -> QuarterRational {
        QuarterRational { num: n, den: 1 }
    }

    /// `n / 2` in lowest terms.
    pub fn half(n: i64) -> QuarterRational {
        Self::reduced(n, 2)
    }

    /// `n / 4` in lowest terms.
    pub fn quarter(n: i64) -> QuarterRational {
        Self::reduced(n, 4)
    }

    fn reduced(num: i64, den: i64) -> QuarterRational {
        debug_assert!(matches!(den, 1 | 2 | 4));
        let mut num = num;
        let mut den = den;
        while den > 1 && num % 2 == 0 {
            num /= 2;
            den /= 2;
        }
        QuarterRational { num, den }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// True when the value is an integer (denominator 1).
    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// The integer value, if the denominator is 1.
    pub fn as_integer(&self) -> Option<i64> {
        (self.den == 1).then_some(self.num)
    }

    /// Uniform `num/den` rendering used by the machine-readable formats,
    /// e.g. `-5/2` or `-6/1`.
    pub fn fraction_string(&self) -> String {
        format!("{}/{}", self.num, self.den)
    }
}

impl Default for QuarterRational {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<i64> for QuarterRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl Add for QuarterRational {
    type Output = QuarterRational;
    fn add(self, rhs: QuarterRational) -> QuarterRational {
        Self::reduced(self.num * (4 / self.den) + rhs.num * (4 / rhs.den), 4)
    }
}

impl Sub for QuarterRational {
    type Output = QuarterRational;
    fn sub(self, rhs: QuarterRational) -> QuarterRational {
        self + (-rhs)
    }
}

impl Neg for QuarterRational {
    type Output = QuarterRational;
    fn neg(self) -> QuarterRational {
        QuarterRational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul<i64> for QuarterRational {
    type Output = QuarterRational;
    fn mul(self, rhs: i64) -> QuarterRational {
        Self::reduced(self.num * rhs, self.den)
    }
}

impl Sum for QuarterRational {
    fn sum<I: Iterator<Item = QuarterRational>>(iter: I) -> QuarterRational {
        iter.fold(Self::ZERO, Add::add)
    }
}

impl PartialOrd for QuarterRational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuarterRational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl fmt::Display for QuarterRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Serialize for QuarterRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.fraction_string())
    }
}
