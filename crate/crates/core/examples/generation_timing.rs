//! Rough wall-clock measurement of exact coefficient generation.

use padesum_core::oscillator::{Hamiltonian, PerturbationSeries};
use std::time::Instant;

fn main() {
    for order in [50usize, 100, 193] {
        for h in [Hamiltonian::PtCubic, Hamiltonian::Quartic] {
            let t = Instant::now();
            let series = PerturbationSeries::generate(h, order);
            let dt = t.elapsed();
            let last = series.coefficient(order);
            let digits = last.numerator().to_string().len();
            println!("{h} order {order}: {dt:?} (last numerator has {digits} digits)");
        }
    }
}
