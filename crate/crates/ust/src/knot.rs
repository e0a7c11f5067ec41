//! The normalized torus-knot type consumed by every other module.

use std::fmt;

use serde::Serialize;

use crate::arith::gcd;
use crate::error::{Error, Result};

/// A positive torus knot `T(p, q)` stored in normalized form:
/// `p > q >= 1`, `gcd(p, q) = 1`, with every unknotted pair `(n, 1)`
/// canonicalized to `(1, 1)` so equality is structural.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TorusKnot {
    p: i64,
    q: i64,
}

impl TorusKnot {
    /// The trivial knot, canonically `(1, 1)`.
    pub const UNKNOT: TorusKnot = TorusKnot { p: 1, q: 1 };

    /// Normalizes an arbitrary coprime pair: signs are dropped, the entries
    /// are sorted, and any pair containing 0 or 1 becomes the unknot.
    ///
    /// Errors when `gcd(|a|, |b|) != 1` (which also covers `(0, 0)`).
    pub fn new(a: i64, b: i64) -> Result<TorusKnot> {
        for v in [a, b] {
            if v == i64::MIN {
                return Err(Error::TooLarge {
                    got: v,
                    max: i64::MAX,
                });
            }
        }
        let (a, b) = (a.abs(), b.abs());
        let g = gcd(a, b);
        if g != 1 {
            return Err(Error::NotCoprime { a, b, g });
        }
        let (p, q) = (a.max(b), a.min(b));
        if q <= 1 {
            Ok(Self::UNKNOT)
        } else {
            Ok(TorusKnot { p, q })
        }
    }

    /// Strand count of the standard braid presentation.
    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_unknot(&self) -> bool {
        self.q == 1
    }

    /// 4-genus `(p - 1)(q - 1) / 2`; zero exactly for the unknot.
    pub fn four_genus(&self) -> i64 {
        (self.p - 1) * (self.q - 1) / 2
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.p, self.q)
    }
}
