//! The three families of representations of the affine algebra Ŷ_{d,2}.

use yokonuma_hecke::representations::{AffineFamily, AffineY2Rep};
use yokonuma_hecke::scalars::{CyclotomicNumber, RationalFunction};

fn main() {
    let d = 3;
    let a = CyclotomicNumber::root(3, 1);
    let b = CyclotomicNumber::root(3, 2);
    let c = RationalFunction::q_pow(1);
    let families = [
        AffineFamily::OneDimensional { a: a.clone(), c: c.clone(), epsilon: -1 },
        AffineFamily::IdempotentOne { a: a.clone(), c: c.clone(), d_eig: RationalFunction::q_pow(7) },
        AffineFamily::IdempotentZero { a, b, c: c.clone(), d_eig: c.clone() },
    ];
    for f in &families {
        let rep = AffineY2Rep::new(d, f).unwrap();
        print!("family {} g =\n{}", rep.family, rep.g);
        println!("{}", rep.verify().tally());
    }
    let rejected = AffineY2Rep::new(d, &AffineFamily::IdempotentOne { a: CyclotomicNumber::one(1), c: c.clone(), d_eig: c.mul(&RationalFunction::q_pow(2)) });
    println!("d = c q^2: {}", rejected.unwrap_err());
}
