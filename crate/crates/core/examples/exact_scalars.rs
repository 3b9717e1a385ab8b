//! Exact arithmetic in ℚ(ζ_L)(q) and specialization of q.

use yokonuma_hecke::scalars::{CyclotomicNumber, LaurentPolynomial, RationalFunction};

fn main() {
    let z3 = CyclotomicNumber::root(3, 1);
    println!("1 + E(3) + E(3)^2 = {}", CyclotomicNumber::one(3).add(&z3).add(&z3.pow(2)));
    println!("1/(1 - E(3)) = {}", CyclotomicNumber::one(3).sub(&z3).inv().unwrap());

    let qq = RationalFunction::q_minus_q_inv();
    let c = RationalFunction::q_pow(2);
    // the diagonal seminormal entry c(q - q^-1)/(c - 1) for adjacent contents
    let entry = c.mul(&qq).div(&c.sub(&RationalFunction::one())).unwrap();
    println!("q^2 (q - q^-1)/(q^2 - 1) = {}", entry);

    let f = RationalFunction::new(LaurentPolynomial::from_int_terms(&[(0, 1)]), LaurentPolynomial::from_int_terms(&[(2, 1), (0, 1)])).unwrap();
    println!("f = {}", f);
    println!("f(E(8)) = {}", f.evaluate(&CyclotomicNumber::root(8, 1)).unwrap());
    match f.evaluate(&CyclotomicNumber::root(4, 1)) {
        Ok(v) => println!("f(E(4)) = {}", v),
        Err(e) => println!("f(E(4)): {}", e),
    }
}
