//! Where Y_{d,n}(q̄) stops being semisimple as q̄ runs over roots of unity.

use yokonuma_hecke::scalars::CyclotomicNumber;
use yokonuma_hecke::schur::{semisimple_at, semisimplicity_poly};

fn main() {
    let (d, n) = (2, 3);
    println!("P(q) = {}", semisimplicity_poly(n));
    for l in 1..=8u32 {
        for k in 0..l as i64 {
            let s = semisimple_at(d, n, &CyclotomicNumber::root(l, k)).unwrap();
            if !s.semisimple {
                let shapes: Vec<String> = s.vanishing.iter().map(|x| x.to_string()).collect();
                println!("q = E({})^{}: {} Schur elements vanish: {}", l, k, shapes.len(), shapes.join("; "));
            }
        }
    }
}
