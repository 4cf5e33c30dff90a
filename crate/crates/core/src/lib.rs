//! Exact and high-precision machinery for resumming divergent perturbation
//! series of one-dimensional quantum oscillators.
//!
//! The library generates ground-state energy coefficients for two
//! anharmonic oscillators — a cubic one with a purely imaginary coupling
//! (energy series in λ²) and the real quartic oscillator (energy series in
//! β) — as exact rationals, then sums, probes, and extrapolates the wildly
//! divergent series those coefficients form:
//!
//! * [`oscillator`] — coefficient generators, the β = 40λ² coupling map,
//!   moment views, and factorial-growth reference values.
//! * [`pade`] — partial sums, the epsilon extrapolation table (exact or
//!   fixed-precision), and Padé approximants obtained independently from
//!   linear systems.
//! * [`stieltjes`] — Hankel determinants, approximant nesting and
//!   monotonicity checks, and moment-decay partial sums; together these
//!   probe whether the series behaves like a Stieltjes series.
//! * [`predict`] — remainder expansions of epsilon-table entries, used to
//!   predict series coefficients beyond the last one generated.
//!
//! All arithmetic bottoms out in two scalar types: [`ExactRational`]
//! (arbitrary-precision rationals, always reduced) and [`BigReal`]
//! (decimal floating point with a caller-chosen number of significant
//! digits). Every algorithm that works on both is generic over the
//! [`scalar::Scalar`] trait, so an exact run and a float run share one code
//! path.
//!
//! The crate is `no_std` (with `alloc`); file formats, command-line
//! plumbing, and report emission live in the companion `padesum-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod oscillator;
pub mod pade;
pub mod poly;
pub mod predict;
pub mod rational;
pub mod real;
pub mod scalar;
pub mod series;
pub mod stieltjes;

pub use malachite_nz::integer::Integer;
pub use malachite_nz::natural::Natural;

pub use oscillator::{Hamiltonian, PerturbationSeries};
pub use poly::Polynomial;
pub use rational::ExactRational;
pub use real::BigReal;
pub use series::TruncatedSeries;
