//! E_T from Jucys–Murphy elements and the full idempotent system check.

use yokonuma_hecke::combinatorics::{all_standard_dtableaux, DPartition};
use yokonuma_hecke::idempotents::{block_idempotent, primitive_idempotent, verify_idempotent_system};
use yokonuma_hecke::roots::XiOrder;

fn main() {
    let xi = XiOrder::standard(2);
    for t in all_standard_dtableaux(2, 2).iter().take(2) {
        let r = primitive_idempotent(t, &xi).unwrap();
        println!("E_{} = {}", t, r.element);
        println!("  tau(E^p) = {}", r.p_part.tau());
    }
    let block = block_idempotent(&DPartition::from_parts(&[&[1], &[1]]).unwrap(), &xi).unwrap();
    println!("E_((1),(1)) = {}", block);

    let report = verify_idempotent_system(2, 3).unwrap();
    println!("{}: {} checks passed", report.suite, report.tally());
}
