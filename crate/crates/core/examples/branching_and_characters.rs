//! Characters, restriction to Y_{d,n-1} and irreducibility.

use yokonuma_hecke::algebra::{BasisWord, Permutation};
use yokonuma_hecke::combinatorics::enumerate_dpartitions;
use yokonuma_hecke::representations::{branching_check, commutant_dimension, Representation};
use yokonuma_hecke::roots::XiOrder;

fn main() {
    let xi = XiOrder::standard(3);
    let cycle = BasisWord::new(vec![0, 0, 0], Permutation::from_one_line(&[2, 3, 1]).unwrap());
    for shape in enumerate_dpartitions(3, 3).iter().take(6) {
        let rep = Representation::build(shape).unwrap();
        let report = branching_check(shape, &xi).unwrap();
        println!(
            "{:<20} dim {}  chi(g_(123)) = {:<12} commutant {}  branching {}",
            shape.to_string(),
            rep.dim(),
            rep.character(&cycle).to_string(),
            commutant_dimension(&rep),
            report.tally()
        );
    }
}
