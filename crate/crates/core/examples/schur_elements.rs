//! Schur elements by both closed forms and by 1/τ(E_T).

use yokonuma_hecke::combinatorics::enumerate_dpartitions;
use yokonuma_hecke::schur::{schur_element, schur_via_trace, tau_decomposition_check, SchurForm};

fn main() {
    for shape in enumerate_dpartitions(2, 2) {
        let s = schur_element(&shape, SchurForm::Hook);
        assert_eq!(s, schur_element(&shape, SchurForm::Content));
        let oracle = schur_via_trace(&shape).unwrap();
        println!("{:<14} {:<20} trace agrees: {}", shape.to_string(), s.value.to_string(), oracle == s);
    }
    println!("{}", serde_json::to_string(&schur_element(&enumerate_dpartitions(1, 3)[0], SchurForm::Hook)).unwrap());
    println!("tau = sum chi/s: {}", tau_decomposition_check(2, 2).unwrap().tally());
}
