//! Decimal floating point with an arbitrary, caller-chosen precision.
//!
//! [`BigReal`] represents `mantissa × 10^exp` where the mantissa carries
//! exactly `prec` significant decimal digits. Working in base 10 rather
//! than base 2 makes "print N significant digits" an exact operation, so
//! a value computed at 600 digits renders the same digits no matter which
//! formatter touches it.
//!
//! Rounding: every operation computes the exact result (or the result
//! plus at least two exact guard digits) and then rounds to the target
//! precision with round-half-even, using a sticky flag where trailing
//! nonzero information was discarded. The target precision of a binary
//! operation is the *smaller* of the operand precisions — precision never
//! silently inflates.
//!
//! Invariants:
//! * `prec >= 1`.
//! * Nonzero values keep `10^(prec-1) <= |mantissa| < 10^prec`; zero is
//!   stored as mantissa 0, exponent 0.
//! * Conversion from a rational whose denominator divides a power of ten
//!   is exact whenever the digits fit in the precision.
//! * Comparisons are exact value comparisons, never rounded.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use malachite_base::num::arithmetic::traits::{
    DivMod, FloorRoot, FloorSqrt, Parity, Pow, UnsignedAbs,
};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_base::num::logic::traits::SignificantBits;
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;

use crate::rational::ExactRational;

/// `10^k` as a `Natural`.
pub(crate) fn pow10(k: u64) -> Natural {
    Natural::from(10u32).pow(k)
}

/// Number of decimal digits of `n`; 0 for 0.
pub(crate) fn dec_digits(n: &Natural) -> u64 {
    if *n == 0 {
        return 0;
    }
    let bits = n.significant_bits();
    // floor((bits-1) * log10(2)) underestimates floor(log10 n), so start
    // one digit below the answer and correct upward by comparison.
    let mut est = (bits - 1) * 30103 / 100000 + 1;
    while *n >= pow10(est) {
        est += 1;
    }
    est
}

/// Rounds `m / 10^drop` to an integer, half to even; `sticky` records
/// discarded nonzero information below the dropped digits.
fn round_drop(m: &Natural, drop: u64, sticky: bool) -> Natural {
    if drop == 0 {
        debug_assert!(!sticky, "cannot round with sticky information and no dropped digits");
        return m.clone();
    }
    let scale = pow10(drop);
    let (q, r) = m.div_mod(&scale);
    let twice_r = r << 1u32;
    let up = match twice_r.cmp(&scale) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => sticky || (&q).odd(),
    };
    if up {
        q + Natural::ONE
    } else {
        q
    }
}

/// A sign-magnitude decimal float: `sign * mag * 10^exp` at `prec` digits.
#[derive(Clone)]
pub struct BigReal {
    neg: bool,
    mag: Natural,
    exp: i64,
    prec: u32,
}

impl BigReal {
    /// Zero at the given precision.
    pub fn zero(prec: u32) -> Self {
        assert!(prec >= 1, "precision must be at least 1 digit");
        BigReal { neg: false, mag: Natural::ZERO, exp: 0, prec }
    }

    /// Builds from an integer, rounding if it exceeds `prec` digits.
    pub fn from_integer(n: &Integer, prec: u32) -> Self {
        assert!(prec >= 1, "precision must be at least 1 digit");
        let neg = *n < 0;
        Self::from_parts(neg, n.unsigned_abs_ref().clone(), 0, false, prec)
    }

    /// Builds from `n`, exactly.
    pub fn from_u64(n: u64, prec: u32) -> Self {
        Self::from_integer(&Integer::from(n), prec)
    }

    /// Nearest `prec`-digit value to `num/den`; exact when the digits fit.
    pub fn from_rational(r: &ExactRational, prec: u32) -> Self {
        assert!(prec >= 1, "precision must be at least 1 digit");
        if r.is_zero() {
            return Self::zero(prec);
        }
        let num = r.numerator().unsigned_abs_ref();
        let den = r.denominator();
        // Scale the numerator so the quotient carries prec + 2 digits.
        let nd = dec_digits(num) as i64;
        let dd = dec_digits(den) as i64;
        let shift = (prec as i64 + 2 - (nd - dd)).max(0) as u64;
        let (q, rem) = (num * pow10(shift)).div_mod(den);
        Self::from_parts(r.is_negative(), q, -(shift as i64), rem != 0, prec)
    }

    /// Normalizes a raw magnitude to exactly `prec` digits.
    ///
    /// `sticky` reports nonzero value information already discarded below
    /// `mag`'s last digit (it biases half-way rounding upward).
    fn from_parts(neg: bool, mag: Natural, exp: i64, sticky: bool, prec: u32) -> Self {
        if mag == 0 {
            // Sticky-only values round to zero at any precision.
            return Self::zero(prec);
        }
        let digits = dec_digits(&mag);
        let target = prec as u64;
        if digits > target {
            let drop = digits - target;
            let rounded = round_drop(&mag, drop, sticky);
            // Rounding 99…9 up gains a digit; shave it back off.
            if dec_digits(&rounded) > target {
                debug_assert!(&rounded == &pow10(target));
                BigReal { neg, mag: pow10(target - 1), exp: exp + drop as i64 + 1, prec }
            } else {
                BigReal { neg, mag: rounded, exp: exp + drop as i64, prec }
            }
        } else {
            let pad = target - digits;
            BigReal { neg, mag: mag * pow10(pad), exp: exp - pad as i64, prec }
        }
    }

    /// Significant decimal digits carried.
    pub fn precision(&self) -> u32 {
        self.prec
    }

    /// Re-rounds to a different precision.
    pub fn to_precision(&self, prec: u32) -> Self {
        assert!(prec >= 1, "precision must be at least 1 digit");
        if self.is_zero() {
            return Self::zero(prec);
        }
        Self::from_parts(self.neg, self.mag.clone(), self.exp, false, prec)
    }

    /// True for exact zero.
    pub fn is_zero(&self) -> bool {
        self.mag == 0
    }

    /// True when strictly negative.
    pub fn is_negative(&self) -> bool {
        self.neg && self.mag != 0
    }

    /// Sign as -1, 0, or +1.
    pub fn signum(&self) -> i32 {
        if self.mag == 0 {
            0
        } else if self.neg {
            -1
        } else {
            1
        }
    }

    /// Absolute value.
    pub fn abs(&self) -> Self {
        let mut r = self.clone();
        r.neg = false;
        r
    }

    /// Negation (exact).
    pub fn neg(&self) -> Self {
        let mut r = self.clone();
        if r.mag != 0 {
            r.neg = !r.neg;
        }
        r
    }

    /// Decimal exponent `E` of the leading digit: `|value| ∈ [10^(E-1), 10^E)`.
    /// Zero reports 0.
    pub fn magnitude_exponent(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.exp + self.prec as i64
        }
    }

    /// Exact value as a rational.
    pub fn to_rational(&self) -> ExactRational {
        let mut num = Integer::from(&self.mag);
        if self.neg {
            num = -num;
        }
        if self.exp >= 0 {
            ExactRational::from_integer(num * Integer::from(pow10(self.exp as u64)))
        } else {
            ExactRational::new(num, Integer::from(pow10(self.exp.unsigned_abs())))
        }
    }

    /// Closest `f64`; overflows to infinity, underflows to zero.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        // 17 significant digits pin an f64 value.
        let lead = self.to_precision(17.min(self.prec));
        let mut s = String::new();
        if lead.neg {
            s.push('-');
        }
        s.push_str("0.");
        push_digits(&mut s, &lead.mag);
        s.push('e');
        push_i64(&mut s, lead.magnitude_exponent());
        s.parse::<f64>().unwrap_or(if self.neg { f64::NEG_INFINITY } else { f64::INFINITY })
    }

    /// Sum at the smaller operand precision.
    ///
    /// Exact-then-round, except that an operand lying entirely below the
    /// other's kept digits (by a 4-digit safety margin) is absorbed; the
    /// result is then correct to just over half an ulp instead of half.
    pub fn add(&self, rhs: &Self) -> Self {
        let prec = self.prec.min(rhs.prec);
        if self.is_zero() {
            return rhs.to_precision(prec);
        }
        if rhs.is_zero() {
            return self.to_precision(prec);
        }
        let (hi, lo) = if self.magnitude_exponent() >= rhs.magnitude_exponent() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        if hi.magnitude_exponent() - lo.magnitude_exponent() > prec as i64 + 4 {
            return Self::from_parts(hi.neg, hi.mag.clone(), hi.exp, false, prec);
        }
        // Exact aligned sum of signed mantissas.
        let e_min = hi.exp.min(lo.exp);
        let signed = |x: &BigReal| {
            let m = Integer::from(&x.mag) * Integer::from(pow10((x.exp - e_min) as u64));
            if x.neg {
                -m
            } else {
                m
            }
        };
        let sum = signed(hi) + signed(lo);
        Self::from_parts(sum < 0, sum.unsigned_abs(), e_min, false, prec)
    }

    /// Difference at the smaller operand precision.
    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// Product at the smaller operand precision.
    pub fn mul(&self, rhs: &Self) -> Self {
        let prec = self.prec.min(rhs.prec);
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(prec);
        }
        Self::from_parts(
            self.neg != rhs.neg,
            &self.mag * &rhs.mag,
            self.exp + rhs.exp,
            false,
            prec,
        )
    }

    /// Quotient at the smaller operand precision; panics on a zero divisor.
    pub fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero");
        let prec = self.prec.min(rhs.prec);
        if self.is_zero() {
            return Self::zero(prec);
        }
        // Scale so the quotient carries prec + 2 digits before rounding.
        let shift = prec as u64 + 2 + rhs.prec as u64;
        let (q, rem) = (&self.mag * pow10(shift)).div_mod(&rhs.mag);
        Self::from_parts(
            self.neg != rhs.neg,
            q,
            self.exp - rhs.exp - shift as i64,
            rem != 0,
            prec,
        )
    }

    /// Reciprocal at this value's precision.
    pub fn recip(&self) -> Self {
        Self::from_u64(1, self.prec).div(self)
    }

    /// Integer power by repeated squaring (exponent may be negative).
    pub fn powi(&self, exp: i64) -> Self {
        if exp == 0 {
            return Self::from_u64(1, self.prec);
        }
        let mut base = if exp < 0 { self.recip() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc: Option<Self> = None;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc.expect("nonzero exponent accumulates at least one factor")
    }

    /// Square root; panics on negative input.
    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "square root of a negative value");
        if self.is_zero() {
            return self.clone();
        }
        let prec = self.prec;
        // Scale to ~2(prec+2) digits with an even exponent adjustment.
        let mut shift = 2 * (prec as u64 + 2);
        if (self.exp - shift as i64).odd() {
            shift += 1;
        }
        let radicand = &self.mag * pow10(shift);
        let root = (&radicand).floor_sqrt();
        let sticky = &root * &root != radicand;
        Self::from_parts(false, root, (self.exp - shift as i64) / 2, sticky, prec)
    }

    /// `n`-th root for `n >= 1`; panics on negative input.
    pub fn nth_root(&self, n: u64) -> Self {
        assert!(n >= 1, "root order must be at least 1");
        assert!(!self.is_negative(), "root of a negative value");
        if self.is_zero() || n == 1 {
            return self.clone();
        }
        let prec = self.prec;
        // Scale so the root carries prec + 2 digits, with exp divisible by n.
        let want = n * (prec as u64 + 2);
        let mut shift = want.saturating_sub(self.prec as u64);
        let rem = (self.exp - shift as i64).rem_euclid(n as i64);
        shift += rem as u64;
        let radicand = &self.mag * pow10(shift);
        let root = (&radicand).floor_root(n);
        let sticky = (&root).pow(n) != radicand;
        Self::from_parts(false, root, (self.exp - shift as i64) / n as i64, sticky, prec)
    }

    /// π to `prec` digits (Machin's two-arctangent formula).
    pub fn pi(prec: u32) -> Self {
        assert!(prec >= 1, "precision must be at least 1 digit");
        let work = prec as u64 + 12;
        let scale = pow10(work);
        // π = 16·arctan(1/5) − 4·arctan(1/239), in fixed-point 10^work.
        let a = machin_arctan_recip(5, &scale);
        let b = machin_arctan_recip(239, &scale);
        let pi_scaled = Integer::from(a << 4u32) - Integer::from(b << 2u32);
        Self::from_parts(false, pi_scaled.unsigned_abs(), -(work as i64), true, prec)
    }

    /// Exact value comparison, independent of precision.
    pub fn cmp_value(&self, rhs: &Self) -> Ordering {
        match (self.signum(), rhs.signum()) {
            (a, b) if a != b => a.cmp(&b),
            (0, _) => Ordering::Equal,
            (sign, _) => {
                let mag_order = {
                    let ea = self.magnitude_exponent();
                    let eb = rhs.magnitude_exponent();
                    if ea != eb {
                        ea.cmp(&eb)
                    } else {
                        let d = self.exp - rhs.exp;
                        if d >= 0 {
                            (&self.mag * pow10(d as u64)).cmp(&rhs.mag)
                        } else {
                            self.mag.cmp(&(&rhs.mag * pow10((-d) as u64)))
                        }
                    }
                };
                if sign > 0 {
                    mag_order
                } else {
                    mag_order.reverse()
                }
            }
        }
    }

    /// Mantissa-first scientific parts at `sig` digits: sign, digit string
    /// `d₁…d_sig`, and exponent `E` with value = ±0.d₁…d_sig × 10^E.
    pub fn to_sci_parts(&self, sig: u32) -> (i32, String, i64) {
        assert!(sig >= 1, "formatting needs at least 1 digit");
        if self.is_zero() {
            let mut zeros = String::new();
            for _ in 0..sig {
                zeros.push('0');
            }
            return (0, zeros, 0);
        }
        let r = self.to_precision(sig);
        let mut digits = String::new();
        push_digits(&mut digits, &r.mag);
        debug_assert_eq!(digits.len(), sig as usize);
        (if r.neg { -1 } else { 1 }, digits, r.magnitude_exponent())
    }

    /// `-0.123e+045` style: mantissa-first scientific form at `sig`
    /// digits with a sign-carrying, zero-padded 3-digit exponent.
    pub fn to_sci_string(&self, sig: u32) -> String {
        let (sign, digits, e) = self.to_sci_parts(sig);
        let mut s = String::new();
        if sign < 0 {
            s.push('-');
        }
        s.push_str("0.");
        s.push_str(&digits);
        s.push('e');
        if e < 0 {
            s.push('-');
        } else {
            s.push('+');
        }
        let mag = e.unsigned_abs();
        if mag < 100 {
            s.push('0');
        }
        if mag < 10 {
            s.push('0');
        }
        push_u64(&mut s, mag);
        s
    }

    /// Plain decimal at `sig` significant digits: `11.0000000000000`,
    /// `0.750000000000000`, `-7.97959183673469`.
    pub fn to_fixed_string(&self, sig: u32) -> String {
        let (sign, digits, e) = self.to_sci_parts(sig);
        let mut s = String::new();
        if sign < 0 {
            s.push('-');
        }
        if sign == 0 {
            s.push_str("0.");
            s.push_str(&digits);
            return s;
        }
        if e <= 0 {
            // Value below 1: leading zeros after the point.
            s.push_str("0.");
            for _ in 0..(-e) {
                s.push('0');
            }
            s.push_str(&digits);
        } else if (e as usize) < digits.len() {
            s.push_str(&digits[..e as usize]);
            s.push('.');
            s.push_str(&digits[e as usize..]);
        } else {
            // All digits integral; pad with zeros, no point.
            s.push_str(&digits);
            for _ in 0..(e as usize - digits.len()) {
                s.push('0');
            }
        }
        s
    }
}

/// `arctan(1/x) * scale`, truncated (error below one unit of `scale`).
fn machin_arctan_recip(x: u64, scale: &Natural) -> Natural {
    let x2 = Natural::from(x) * Natural::from(x);
    let mut term = scale / Natural::from(x);
    let mut total = Integer::ZERO;
    let mut k = 0u64;
    let mut positive = true;
    while term != 0 {
        let contrib = &term / Natural::from(2 * k + 1);
        if positive {
            total += Integer::from(contrib);
        } else {
            total -= Integer::from(contrib);
        }
        term /= &x2;
        positive = !positive;
        k += 1;
    }
    total.unsigned_abs()
}

fn push_digits(s: &mut String, n: &Natural) {
    use alloc::string::ToString;
    s.push_str(&n.to_string());
}

fn push_u64(s: &mut String, n: u64) {
    use alloc::string::ToString;
    s.push_str(&n.to_string());
}

fn push_i64(s: &mut String, n: i64) {
    use alloc::string::ToString;
    s.push_str(&n.to_string());
}

impl fmt::Display for BigReal {
    /// Scientific form at full precision.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sci_string(self.prec))
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.to_sci_string(self.prec.min(12)), self.prec)
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl Eq for BigReal {}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl Ord for BigReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_value(other)
    }
}
