//! One trait for the two kinds of arithmetic the toolkit runs on.
//!
//! Extrapolation and prediction algorithms here are written once and run
//! either on [`ExactRational`] (exact mode — results are equalities, not
//! approximations) or on [`BigReal`] (float mode — fixed decimal
//! precision, used where exact intermediates would grow beyond reason).
//! [`Scalar`] is the small surface those algorithms need.
//!
//! The one semantic difference between the modes lives in
//! [`Scalar::is_negligible`]: a rational is negligible only when it is
//! exactly zero, while a float is negligible when it is zero *or* smaller
//! in magnitude than `10^(10 − precision)` — ten digits above the noise
//! floor of its own precision. Denominator guards in the recursive
//! schemes use this test, so exact runs flag only true degeneracies and
//! float runs also flag differences that have dissolved into rounding
//! noise.

use crate::rational::ExactRational;
use crate::real::BigReal;

/// Field-like operations plus the negligibility probe.
///
/// `div` panics on an exactly-zero divisor (both modes); callers that can
/// meet one guard with [`Scalar::is_negligible`] first.
pub trait Scalar: Clone + PartialEq + core::fmt::Display {
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Multiplicative inverse; panics on an exactly-zero argument.
    fn recip(&self) -> Self;

    /// Magnitude.
    fn abs(&self) -> Self;

    /// Strictly below zero.
    fn is_negative_value(&self) -> bool;

    /// Numeric order of the two values (exact even across float
    /// precisions).
    fn cmp_value(&self, rhs: &Self) -> core::cmp::Ordering;

    /// Exactly zero.
    fn is_zero(&self) -> bool;

    /// Zero, or (float mode) too small to trust as a divisor.
    fn is_negligible(&self) -> bool;

    /// Whether `self`, seen as the margin of an inequality comparison,
    /// is large enough to decide the comparison at this arithmetic's
    /// trust level. Exact values always decide; a float margin decides
    /// only when its magnitude exceeds `10^(−precision/2)`, so
    /// borderline float comparisons can be escalated to exact
    /// recomputation instead of being trusted.
    fn is_decisive_margin(&self) -> bool;

    /// Additive identity shaped like `self` (same precision in float mode).
    fn zero_like(&self) -> Self;

    /// Multiplicative identity shaped like `self`.
    fn one_like(&self) -> Self;
}

impl Scalar for ExactRational {
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn recip(&self) -> Self {
        self.checked_recip().expect("reciprocal of zero")
    }

    fn abs(&self) -> Self {
        ExactRational::abs(self)
    }

    fn is_negative_value(&self) -> bool {
        self.is_negative()
    }

    fn cmp_value(&self, rhs: &Self) -> core::cmp::Ordering {
        self.cmp(rhs)
    }

    fn is_zero(&self) -> bool {
        ExactRational::is_zero(self)
    }

    fn is_negligible(&self) -> bool {
        ExactRational::is_zero(self)
    }

    fn is_decisive_margin(&self) -> bool {
        true
    }

    fn zero_like(&self) -> Self {
        ExactRational::zero()
    }

    fn one_like(&self) -> Self {
        ExactRational::one()
    }
}

impl Scalar for BigReal {
    fn add(&self, rhs: &Self) -> Self {
        BigReal::add(self, rhs)
    }

    fn sub(&self, rhs: &Self) -> Self {
        BigReal::sub(self, rhs)
    }

    fn mul(&self, rhs: &Self) -> Self {
        BigReal::mul(self, rhs)
    }

    fn div(&self, rhs: &Self) -> Self {
        BigReal::div(self, rhs)
    }

    fn neg(&self) -> Self {
        BigReal::neg(self)
    }

    fn recip(&self) -> Self {
        BigReal::recip(self)
    }

    fn abs(&self) -> Self {
        BigReal::abs(self)
    }

    fn is_negative_value(&self) -> bool {
        self.is_negative()
    }

    fn cmp_value(&self, rhs: &Self) -> core::cmp::Ordering {
        BigReal::cmp_value(self, rhs)
    }

    fn is_zero(&self) -> bool {
        BigReal::is_zero(self)
    }

    fn is_negligible(&self) -> bool {
        BigReal::is_zero(self)
            || self.magnitude_exponent() <= 10 - self.precision() as i64
    }

    fn is_decisive_margin(&self) -> bool {
        !BigReal::is_zero(self)
            && self.magnitude_exponent() > -(self.precision() as i64) / 2
    }

    fn zero_like(&self) -> Self {
        BigReal::zero(self.precision())
    }

    fn one_like(&self) -> Self {
        BigReal::from_u64(1, self.precision())
    }
}
