//! Arbitrary-precision rational numbers in canonical reduced form.
//!
//! [`ExactRational`] stores a signed numerator and a positive denominator
//! that are always coprime, so equality is structural and every operation
//! returns a canonical value. Reduction happens *inside* the arithmetic
//! (gcd of the denominators before an addition, cross-gcds before a
//! multiplication) rather than as an after-the-fact cleanup, which keeps
//! the intermediate integers no larger than they have to be — the
//! difference between minutes and hours once numerators reach hundreds of
//! digits.
//!
//! Invariants:
//! * `den >= 1` always; zero is represented as `0/1`.
//! * `gcd(|num|, den) == 1` after every public operation.
//! * Division by an exact zero panics; use [`ExactRational::checked_div`]
//!   or [`ExactRational::checked_recip`] where a zero divisor is a data
//!   condition rather than a bug.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use malachite_base::num::arithmetic::traits::{DivExact, Gcd, Mod, Parity, Pow, UnsignedAbs};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;

/// A rational number `num/den` with `den >= 1` and `gcd(|num|, den) == 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactRational {
    num: Integer,
    den: Natural,
}

impl ExactRational {
    /// The rational zero, `0/1`.
    pub fn zero() -> Self {
        ExactRational { num: Integer::ZERO, den: Natural::ONE }
    }

    /// The rational one, `1/1`.
    pub fn one() -> Self {
        ExactRational { num: Integer::ONE, den: Natural::ONE }
    }

    /// Builds `num/den` in canonical form.
    ///
    /// Panics if `den` is zero.
    pub fn new(num: Integer, den: Integer) -> Self {
        assert!(den != 0, "rational with zero denominator");
        let mut num = num;
        if den < 0 {
            num = -num;
        }
        Self::from_raw(num, den.unsigned_abs())
    }

    /// Builds an integer-valued rational `n/1`.
    pub fn from_integer(num: Integer) -> Self {
        ExactRational { num, den: Natural::ONE }
    }

    /// Reduces a signed numerator over a positive denominator.
    fn from_raw(num: Integer, den: Natural) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Self::zero();
        }
        let g = (&num).unsigned_abs().gcd(&den);
        if g == 1 {
            ExactRational { num, den }
        } else {
            ExactRational {
                num: num.div_exact(Integer::from(&g)),
                den: (&den).div_exact(&g),
            }
        }
    }

    /// Borrowed numerator (sign-carrying).
    pub fn numerator(&self) -> &Integer {
        &self.num
    }

    /// Borrowed denominator (always positive).
    pub fn denominator(&self) -> &Natural {
        &self.den
    }

    /// True exactly for the canonical zero.
    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// True when the value is strictly negative.
    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    /// True when the value is strictly positive.
    pub fn is_positive(&self) -> bool {
        self.num > 0
    }

    /// True when the denominator is 1.
    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// Sign as -1, 0, or +1.
    pub fn signum(&self) -> i32 {
        if self.num < 0 {
            -1
        } else if self.num == 0 {
            0
        } else {
            1
        }
    }

    /// Absolute value.
    pub fn abs(&self) -> Self {
        ExactRational { num: (&self.num).unsigned_abs().into(), den: self.den.clone() }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn recip(&self) -> Self {
        self.checked_recip().expect("reciprocal of zero")
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn checked_recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut num = Integer::from(&self.den);
        if self.num < 0 {
            num = -num;
        }
        Some(ExactRational { num, den: (&self.num).unsigned_abs() })
    }

    /// Division that reports a zero divisor instead of panicking.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.checked_recip().map(|r| self * &r)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i64) -> Self {
        if exp == 0 {
            return Self::one();
        }
        let base = if exp < 0 { self.recip() } else { self.clone() };
        let e = exp.unsigned_abs();
        ExactRational {
            num: (&base.num).pow(e),
            den: (&base.den).pow(e),
        }
    }

    /// Rounds to the nearest integer, ties to even.
    pub fn round_ties_even(&self) -> Integer {
        let den = Integer::from(&self.den);
        let r = (&self.num).mod_op(&den); // in [0, den) since den > 0
        let mut q = (&self.num - &r).div_exact(&den);
        let go_up = match (&r << 1u32).cmp(&den) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => (&q).odd(),
        };
        if go_up {
            q += Integer::ONE;
        }
        q
    }

    /// Knuth-style reduced addition: gcd of the denominators first, one
    /// more gcd to strip the factor the numerator sum may reintroduce.
    fn add_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let g = (&self.den).gcd(&rhs.den);
        if g == 1 {
            // Coprime denominators: the sum is already in lowest terms.
            let num = &self.num * Integer::from(&rhs.den) + &rhs.num * Integer::from(&self.den);
            if num == 0 {
                return Self::zero();
            }
            let den = &self.den * &rhs.den;
            debug_assert!((&num).unsigned_abs().gcd(&den) == 1);
            return ExactRational { num, den };
        }
        let db = (&self.den).div_exact(&g);
        let dd = (&rhs.den).div_exact(&g);
        let t = &self.num * Integer::from(&dd) + &rhs.num * Integer::from(&db);
        if t == 0 {
            return Self::zero();
        }
        // Any factor shared between t and the combined denominator divides g.
        let h = (&t).unsigned_abs().gcd(&g);
        let num = t.div_exact(Integer::from(&h));
        let den = db * (&rhs.den).div_exact(&h);
        ExactRational { num, den }
    }

    /// Cross-reduced multiplication: shrink each numerator against the
    /// opposite denominator before multiplying.
    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let g1 = (&self.num).unsigned_abs().gcd(&rhs.den);
        let g2 = (&rhs.num).unsigned_abs().gcd(&self.den);
        let n1 = (&self.num).div_exact(Integer::from(&g1));
        let n2 = (&rhs.num).div_exact(Integer::from(&g2));
        let d1 = (&self.den).div_exact(&g2);
        let d2 = (&rhs.den).div_exact(&g1);
        ExactRational { num: n1 * n2, den: d1 * d2 }
    }
}

impl Default for ExactRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for ExactRational {
    fn from(v: i64) -> Self {
        Self::from_integer(Integer::from(v))
    }
}

impl From<Integer> for ExactRational {
    fn from(v: Integer) -> Self {
        Self::from_integer(v)
    }
}

impl Add for &ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: Self) -> ExactRational {
        self.add_impl(rhs)
    }
}

impl Sub for &ExactRational {
    type Output = ExactRational;
    fn sub(self, rhs: Self) -> ExactRational {
        self.add_impl(&-rhs)
    }
}

impl Mul for &ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: Self) -> ExactRational {
        self.mul_impl(rhs)
    }
}

impl Div for &ExactRational {
    type Output = ExactRational;
    fn div(self, rhs: Self) -> ExactRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: Self) -> ExactRational {
        &self + &rhs
    }
}

impl Sub for ExactRational {
    type Output = ExactRational;
    fn sub(self, rhs: Self) -> ExactRational {
        &self - &rhs
    }
}

impl Mul for ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: Self) -> ExactRational {
        &self * &rhs
    }
}

impl Div for ExactRational {
    type Output = ExactRational;
    fn div(self, rhs: Self) -> ExactRational {
        &self / &rhs
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational { num: -self.num, den: self.den }
    }
}

impl PartialOrd for ExactRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Cross-multiply; denominators are positive so order is preserved.
        let lhs = &self.num * Integer::from(&other.den);
        let rhs = &other.num * Integer::from(&self.den);
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for ExactRational {
    /// Canonical form: `"p"` for integers, `"p/q"` otherwise. Round-trips
    /// through `FromStr`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Why a string failed to parse as a rational.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseRationalError {
    /// Empty input or empty numerator/denominator part.
    Empty,
    /// A character other than digits, a leading sign, or one `/`.
    InvalidDigit,
    /// Denominator parsed as zero.
    ZeroDenominator,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseRationalError::Empty => write!(f, "empty rational literal"),
            ParseRationalError::InvalidDigit => write!(f, "invalid character in rational literal"),
            ParseRationalError::ZeroDenominator => write!(f, "rational literal with denominator 0"),
        }
    }
}

impl FromStr for ExactRational {
    type Err = ParseRationalError;

    /// Parses `"p"`, `"-p"`, or `"p/q"` with an optional sign on either part.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        fn parse_int(s: &str) -> Result<Integer, ParseRationalError> {
            if s.is_empty() {
                return Err(ParseRationalError::Empty);
            }
            let body = s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s);
            if body.is_empty() {
                return Err(ParseRationalError::Empty);
            }
            if !body.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ParseRationalError::InvalidDigit);
            }
            Integer::from_str(s).map_err(|_| ParseRationalError::InvalidDigit)
        }
        match s.split_once('/') {
            None => parse_int(s).map(ExactRational::from_integer),
            Some((p, q)) => {
                let num = parse_int(p)?;
                let den = parse_int(q)?;
                if den == 0 {
                    return Err(ParseRationalError::ZeroDenominator);
                }
                Ok(ExactRational::new(num, den))
            }
        }
    }
}
