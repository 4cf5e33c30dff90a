//! Prints the first remainder coefficients of the column-66 diagonal
//! entry for both oscillators, for eyeballing against known values.

use padesum_core::oscillator::{Hamiltonian, PerturbationSeries};
use padesum_core::predict::{phi_series, predict_coefficients};
use padesum_core::real::BigReal;

fn main() {
    for h in [Hamiltonian::PtCubic, Hamiltonian::Quartic] {
        let start = std::time::Instant::now();
        let series = PerturbationSeries::generate(h, 85);
        let gammas: Vec<BigReal> = series
            .shift_coefficients()
            .iter()
            .map(|g| BigReal::from_rational(g, 600))
            .collect();
        let phi = phi_series(&gammas, 0, 33, 15).unwrap();
        let records = predict_coefficients(&phi, &gammas, 16);
        println!("{h}  ({:?})", start.elapsed());
        for r in records.iter().take(3) {
            println!(
                "  target {:3}  predicted {}  truth {}",
                r.target_index,
                r.predicted.to_sci_string(21),
                r.truth.as_ref().unwrap().to_sci_string(21),
            );
        }
        let last = records.last().unwrap();
        println!(
            "  target {:3}  predicted {}  truth {}",
            last.target_index,
            last.predicted.to_sci_string(21),
            last.truth.as_ref().unwrap().to_sci_string(21),
        );
    }
}
