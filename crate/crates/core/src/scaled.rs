//! Exact fixed-point arithmetic for the potential and charge ledgers.
//!
//! Every constant in play is a multiple of 0.2, so values are stored as
//! integer counts of fifths (scale ×5): 4.8 ↦ 24, 3 ↦ 15, 0.6 ↦ 3, 0.4 ↦ 2,
//! 0.2 ↦ 1. Arithmetic never rounds.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// A rational with denominator 5, stored as the numerator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Scaled(pub i64);

impl Scaled {
    pub const ZERO: Scaled = Scaled(0);

    /// `v × 0.2`.
    pub const fn fifths(v: i64) -> Scaled {
        Scaled(v)
    }

    /// Whole number `v`.
    pub const fn int(v: i64) -> Scaled {
        Scaled(v * 5)
    }

    pub const fn raw(self) -> i64 {
        self.0
    }
}

impl Add for Scaled {
    type Output = Scaled;
    fn add(self, rhs: Scaled) -> Scaled {
        Scaled(self.0 + rhs.0)
    }
}

impl AddAssign for Scaled {
    fn add_assign(&mut self, rhs: Scaled) {
        self.0 += rhs.0;
    }
}

impl Sub for Scaled {
    type Output = Scaled;
    fn sub(self, rhs: Scaled) -> Scaled {
        Scaled(self.0 - rhs.0)
    }
}

impl SubAssign for Scaled {
    fn sub_assign(&mut self, rhs: Scaled) {
        self.0 -= rhs.0;
    }
}

impl Neg for Scaled {
    type Output = Scaled;
    fn neg(self) -> Scaled {
        Scaled(-self.0)
    }
}

impl Mul<i64> for Scaled {
    type Output = Scaled;
    fn mul(self, rhs: i64) -> Scaled {
        Scaled(self.0 * rhs)
    }
}

impl Sum for Scaled {
    fn sum<I: Iterator<Item = Scaled>>(iter: I) -> Scaled {
        Scaled(iter.map(|s| s.0).sum())
    }
}

impl fmt::Display for Scaled {
    /// Exact decimal: one fifth = 0.2, so one digit always suffices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.0 < 0 { "-" } else { "" };
        let a = self.0.unsigned_abs();
        let (whole, rem) = (a / 5, a % 5);
        if rem == 0 {
            write!(f, "{sign}{whole}")
        } else {
            write!(f, "{sign}{whole}.{}", rem * 2)
        }
    }
}

impl fmt::Debug for Scaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
