//! Exact perturbation coefficients for two anharmonic oscillators.
//!
//! Both generators work the same way: write the ground-state wavefunction
//! as a Gaussian times a power series in the coupling whose coefficients
//! are polynomials in `x`, substitute into the Schrödinger equation, and
//! match powers of the coupling. Each order `k` yields a first-order
//! recurrence for the polynomial's coefficients (solved top-down from the
//! highest power of `x`) plus one solvability condition at `x^0` that
//! pins an energy coefficient. Every step is exact rational arithmetic —
//! the output coefficients are the mathematical values, not
//! approximations.
//!
//! * [`Hamiltonian::PtCubic`]: `p² + x²/4 + iλx³`. Ground-state energy
//!   `½ + Σ b_n (λ²)^n`; the `b_n` come out integral, with alternating
//!   signs from `b_2` on.
//! * [`Hamiltonian::Quartic`]: `p² + x² + βx⁴`. Ground-state energy
//!   `1 + Σ 𝐵_n β^n`; dyadic rationals, alternating signs from `𝐵_2` on.
//!
//! The two series are linked by the coupling map β = 40λ² (see
//! [`map_coupling`]): under it the quartic series is a natural yardstick
//! for the cubic one, term by term.
//!
//! Both coefficient families grow factorially. [`asymptotic_reference`]
//! provides the leading-order growth magnitude the late coefficients
//! approach from below, useful as a sanity gauge for any freshly
//! generated run.
//!
//! Invariants:
//! * Regenerating with a larger order leaves earlier coefficients
//!   bit-identical (the recursion at order `k` never looks forward).
//! * Wavefunction polynomials have the parity of `k` (cubic) or are even
//!   (quartic); degrees are `3k` and `4k` and are attained.
//! * The alternating-sign moment view `μ_ν = (−1)^ν c_{ν+1}` is strictly
//!   positive for every order generated so far; `moments` checks rather
//!   than assumes this.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use malachite_base::num::arithmetic::traits::{DivExact, Factorial, Lcm, Pow};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;

use crate::poly::Polynomial;
use crate::rational::ExactRational;
use crate::real::BigReal;

/// Which oscillator a series belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hamiltonian {
    /// `p² + x²/4 + iλx³`, series variable λ².
    PtCubic,
    /// `p² + x² + βx⁴`, series variable β.
    Quartic,
}

impl Hamiltonian {
    /// Stable label used by file formats and command-line flags.
    pub fn label(self) -> &'static str {
        match self {
            Hamiltonian::PtCubic => "pt-cubic",
            Hamiltonian::Quartic => "quartic",
        }
    }

    /// The series variable's display name.
    pub fn variable(self) -> &'static str {
        match self {
            Hamiltonian::PtCubic => "lambda^2",
            Hamiltonian::Quartic => "beta",
        }
    }

    /// Ground-state energy at zero coupling.
    pub fn unperturbed_energy(self) -> ExactRational {
        match self {
            Hamiltonian::PtCubic => ExactRational::new(Integer::ONE, Integer::from(2)),
            Hamiltonian::Quartic => ExactRational::one(),
        }
    }
}

impl fmt::Display for Hamiltonian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The β = 40λ² map tying the two series' couplings together.
pub fn map_coupling(lambda: &ExactRational) -> ExactRational {
    &ExactRational::from(40) * &lambda.pow(2)
}

/// Index of the first moment whose sign breaks the alternating pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MomentSignViolation {
    /// Zero-based moment index ν where `(−1)^ν c_{ν+1} <= 0`.
    pub index: usize,
}

impl fmt::Display for MomentSignViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "moment {} is not positive", self.index)
    }
}

/// A generated (or cached) run of perturbation coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerturbationSeries {
    hamiltonian: Hamiltonian,
    coefficients: Vec<ExactRational>,
}

impl PerturbationSeries {
    /// Generates the first `max_order` coefficients exactly.
    ///
    /// Cost grows steeply with order — the thousandth of a second at
    /// order 10 becomes minutes near order 200, with numerators hundreds
    /// of digits long.
    pub fn generate(hamiltonian: Hamiltonian, max_order: usize) -> Self {
        let coefficients = match hamiltonian {
            Hamiltonian::PtCubic => generate_pt_cubic(max_order),
            Hamiltonian::Quartic => generate_quartic(max_order),
        };
        PerturbationSeries { hamiltonian, coefficients }
    }

    /// Rewraps already-known coefficients (say, read back from a file).
    /// `coefficients[i]` must be the order-`i+1` coefficient.
    pub fn from_coefficients(hamiltonian: Hamiltonian, coefficients: Vec<ExactRational>) -> Self {
        PerturbationSeries { hamiltonian, coefficients }
    }

    pub fn hamiltonian(&self) -> Hamiltonian {
        self.hamiltonian
    }

    /// Number of coefficients held.
    pub fn max_order(&self) -> usize {
        self.coefficients.len()
    }

    /// Order-`n` coefficient (1-based, matching the energy expansion).
    pub fn coefficient(&self, n: usize) -> &ExactRational {
        assert!(n >= 1 && n <= self.coefficients.len(), "coefficient order out of range");
        &self.coefficients[n - 1]
    }

    /// Coefficients of the energy-shift series `ΔE = Σ_ν c_{ν+1} z^ν`:
    /// index ν holds the order-`ν+1` energy coefficient.
    pub fn shift_coefficients(&self) -> &[ExactRational] {
        &self.coefficients
    }

    /// Moment view `μ_ν = (−1)^ν c_{ν+1}`, checking strict positivity.
    pub fn moments(&self) -> Result<Vec<ExactRational>, MomentSignViolation> {
        let mut out = Vec::with_capacity(self.coefficients.len());
        for (nu, c) in self.coefficients.iter().enumerate() {
            let mu = if nu % 2 == 0 { c.clone() } else { -c };
            if !mu.is_positive() {
                return Err(MomentSignViolation { index: nu });
            }
            out.push(mu);
        }
        Ok(out)
    }
}

/// Leading-order growth magnitude for the order-`n` coefficient.
///
/// The reference overshoots the true magnitude; the ratio
/// `|c_n| / reference` lies in (0, 1) and climbs toward 1 as `n` grows.
/// Sign convention of the true coefficients is `(−1)^(n+1)` — positive
/// first coefficient, alternating after.
pub fn asymptotic_reference(hamiltonian: Hamiltonian, n: u64, digits: u32) -> BigReal {
    assert!(n >= 1, "coefficient orders start at 1");
    let work = digits + 8;
    // Γ(n + 1/2) = (2n)! √π / (4^n n!), folded into an exact rational
    // prefactor times a closed-form surd constant.
    let fact_ratio = ExactRational::new(
        Integer::from(Natural::factorial(2 * n)),
        Integer::from(Natural::from(4u32).pow(n) * Natural::factorial(n)),
    );
    let two_pi = BigReal::pi(work).mul(&BigReal::from_u64(2, work));
    match hamiltonian {
        Hamiltonian::PtCubic => {
            // 60^(n+1/2) (2π)^(-3/2) Γ(n+1/2) = 60^n·(2n)!/(4^n n!)·√30/(2π)
            let scale = &ExactRational::from_integer(Integer::from(
                Natural::from(60u32).pow(n),
            )) * &fact_ratio;
            let surd = BigReal::from_u64(30, work).sqrt().div(&two_pi);
            BigReal::from_rational(&scale, work).mul(&surd).to_precision(digits)
        }
        Hamiltonian::Quartic => {
            // 4 π^(-3/2) (3/2)^(n+1/2) Γ(n+1/2) = (3/2)^n·(2n)!/(4^n n!)·2√6/π
            let scale = &ExactRational::new(
                Integer::from(Natural::from(3u32).pow(n)),
                Integer::from(Natural::from(2u32).pow(n)),
            ) * &fact_ratio;
            let pi = BigReal::pi(work);
            let surd = BigReal::from_u64(6, work).sqrt().mul(&BigReal::from_u64(2, work)).div(&pi);
            BigReal::from_rational(&scale, work).mul(&surd).to_precision(digits)
        }
    }
}

/// The order-`k` wavefunction polynomial (real-valued normalization),
/// recomputed from scratch — meant for inspection and tests at small `k`,
/// not for bulk generation.
pub fn wavefunction_polynomial(hamiltonian: Hamiltonian, k: usize) -> Polynomial {
    let packs = match hamiltonian {
        Hamiltonian::PtCubic => pt_cubic_packs(k),
        Hamiltonian::Quartic => quartic_packs(k),
    };
    let pack = &packs[k];
    let par = match hamiltonian {
        Hamiltonian::PtCubic => k % 2,
        Hamiltonian::Quartic => 0,
    };
    let den = ExactRational::from_integer(Integer::from(&pack.den));
    let mut coeffs = vec![ExactRational::zero(); pack.nums.len() * 2 - 1 + par];
    for (i, num) in pack.nums.iter().enumerate() {
        if *num != 0 {
            coeffs[2 * i + par] = &ExactRational::from_integer(num.clone()) / &den;
        }
    }
    Polynomial::new(coeffs)
}

/// A parity-packed polynomial over one common denominator: entry `i`
/// holds the numerator of the `x^(2i+par)` coefficient.
struct Packed {
    nums: Vec<Integer>,
    den: Natural,
}

/// Reduces `num / den` without assuming anything about common factors.
fn reduce(num: &Integer, den: &Natural) -> ExactRational {
    ExactRational::new(num.clone(), Integer::from(den))
}

/// Repacks per-coefficient rationals onto their least common denominator.
fn repack(q: &[ExactRational]) -> Packed {
    let mut den = Natural::ONE;
    for v in q {
        if !v.is_zero() {
            den = den.lcm(v.denominator());
        }
    }
    let nums = q
        .iter()
        .map(|v| v.numerator() * Integer::from(&(&den).div_exact(v.denominator())))
        .collect();
    Packed { nums, den }
}

/// Multiplies a rational by a small integer.
fn scale_i64(r: &ExactRational, s: i64) -> ExactRational {
    r * &ExactRational::from(s)
}

/// Energy coefficients `b_1 … b_n` for the cubic oscillator.
fn generate_pt_cubic(n: usize) -> Vec<ExactRational> {
    let mut out = Vec::with_capacity(n);
    pt_cubic_run(2 * n, &mut out);
    out
}

/// Wavefunction polynomial table up to order `k_max` (cubic).
fn pt_cubic_packs(k_max: usize) -> Vec<Packed> {
    let mut out = Vec::new();
    pt_cubic_run_packs(k_max, &mut out)
}

fn pt_cubic_run(k_max: usize, out: &mut Vec<ExactRational>) {
    let _ = pt_cubic_run_packs(k_max, out);
}

/// Order-by-order cubic recursion. The wavefunction expands in powers of
/// λ with polynomial coefficients `Q_k` (real normalization, parity of
/// `k`, degree `3k`); energy coefficients appear at even `k` as the
/// `x^0` solvability condition.
fn pt_cubic_run_packs(k_max: usize, out: &mut Vec<ExactRational>) -> Vec<Packed> {
    let mut packs = Vec::with_capacity(k_max + 1);
    packs.push(Packed { nums: vec![Integer::ONE], den: Natural::ONE });
    for k in 1..=k_max {
        let par = k % 2;
        let len = (3 * k - par) / 2 + 1;

        // Common denominator of every fixed right-hand-side term: the
        // shifted previous polynomial and each known-coefficient term
        // (whose unreduced denominator is the product shown).
        let mut den = packs[k - 1].den.clone();
        {
            let mut j = 1;
            while 2 * j < k {
                let term_den = &packs[k - 2 * j].den * out[j - 1].denominator();
                den = den.lcm(term_den);
                j += 1;
            }
        }

        // Packed numerators of the right-hand side over `den`:
        // −x³·Q_{k−1} + Σ_j (−1)^j b_j Q_{k−2j}.
        let mut w = vec![Integer::ZERO; len];
        let shift_scale = Integer::from(&(&den).div_exact(&packs[k - 1].den));
        for (i, c) in packs[k - 1].nums.iter().enumerate() {
            if *c != 0 {
                w[i + 2 - par] -= c * &shift_scale;
            }
        }
        {
            let mut j = 1;
            while 2 * j < k {
                let src = &packs[k - 2 * j];
                let b = &out[j - 1];
                let term_den = &src.den * b.denominator();
                let mut factor = b.numerator() * Integer::from(&(&den).div_exact(&term_den));
                if j % 2 == 1 {
                    factor = -factor;
                }
                if factor != 0 {
                    for (i, c) in src.nums.iter().enumerate() {
                        if *c != 0 {
                            w[i] += c * &factor;
                        }
                    }
                }
                j += 1;
            }
        }

        // Top-down solve of m·q_m − (m+2)(m+1)·q_{m+2} = r_m. The x^0 slot
        // (even k) is the solvability condition, not an equation for q_0;
        // normalization keeps q_0 = 0.
        let lowest = 1 - par;
        let mut q = vec![ExactRational::zero(); len];
        let mut above = ExactRational::zero();
        for i in (lowest..len).rev() {
            let m = (2 * i + par) as i64;
            let r = reduce(&w[i], &den);
            let num = &r + &scale_i64(&above, (m + 2) * (m + 1));
            above = &num / &ExactRational::from(m);
            q[i] = above.clone();
        }

        if par == 0 {
            let r0 = reduce(&w[0], &den);
            let raw = &-&scale_i64(&q[1], 2) - &r0;
            out.push(if (k / 2) % 2 == 0 { raw } else { -raw });
        }

        packs.push(repack(&q));
    }
    packs
}

/// Energy coefficients `𝐵_1 … 𝐵_n` for the quartic oscillator.
fn generate_quartic(n: usize) -> Vec<ExactRational> {
    let mut out = Vec::with_capacity(n);
    let _ = quartic_run_packs(n, &mut out);
    out
}

/// Wavefunction polynomial table up to order `k_max` (quartic).
fn quartic_packs(k_max: usize) -> Vec<Packed> {
    let mut out = Vec::new();
    quartic_run_packs(k_max, &mut out)
}

/// Order-by-order quartic recursion; every order yields one energy
/// coefficient. Polynomials `R_k` are even with degree `4k`.
fn quartic_run_packs(k_max: usize, out: &mut Vec<ExactRational>) -> Vec<Packed> {
    let mut packs = Vec::with_capacity(k_max + 1);
    packs.push(Packed { nums: vec![Integer::ONE], den: Natural::ONE });
    for k in 1..=k_max {
        let len = 2 * k + 1;

        let mut den = packs[k - 1].den.clone();
        for j in 1..k {
            let term_den = &packs[k - j].den * out[j - 1].denominator();
            den = den.lcm(term_den);
        }

        // −x⁴·R_{k−1} + Σ_j 𝐵_j R_{k−j} over `den`.
        let mut w = vec![Integer::ZERO; len];
        let shift_scale = Integer::from(&(&den).div_exact(&packs[k - 1].den));
        for (i, c) in packs[k - 1].nums.iter().enumerate() {
            if *c != 0 {
                w[i + 2] -= c * &shift_scale;
            }
        }
        for j in 1..k {
            let src = &packs[k - j];
            let b = &out[j - 1];
            let term_den = &src.den * b.denominator();
            let factor = b.numerator() * Integer::from(&(&den).div_exact(&term_den));
            if factor != 0 {
                for (i, c) in src.nums.iter().enumerate() {
                    if *c != 0 {
                        w[i] += c * &factor;
                    }
                }
            }
        }

        // Top-down solve of 2m·q_m − (m+2)(m+1)·q_{m+2} = r_m down to x².
        let mut q = vec![ExactRational::zero(); len];
        let mut above = ExactRational::zero();
        for i in (1..len).rev() {
            let m = (2 * i) as i64;
            let r = reduce(&w[i], &den);
            let num = &r + &scale_i64(&above, (m + 2) * (m + 1));
            above = &num / &ExactRational::from(2 * m);
            q[i] = above.clone();
        }

        let r0 = reduce(&w[0], &den);
        out.push(&-&scale_i64(&q[1], 2) - &r0);

        packs.push(repack(&q));
    }
    packs
}
