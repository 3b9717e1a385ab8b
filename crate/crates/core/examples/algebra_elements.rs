//! Multiplication in Y_{d,n}(q), Jucys–Murphy elements and the trace τ.

use yokonuma_hecke::algebra::{generator, jm_element, AlgebraElement, BasisWord, Generator, JmMode};

fn main() {
    let (d, n) = (2, 3);
    let g1 = generator(Generator::G(1), d, n).unwrap();
    let e1 = generator(Generator::E(1), d, n).unwrap();
    println!("g1^2 = {}", &g1 * &g1);
    println!("e1 = {}", e1);
    println!("g1^-1 = {}", generator(Generator::GInverse(1), d, n).unwrap());

    let j2 = jm_element(2, d, n, JmMode::Recursive).unwrap();
    assert_eq!(j2, jm_element(2, d, n, JmMode::Explicit).unwrap());
    println!("J2 = {}", j2);
    let j3 = jm_element(3, d, n, JmMode::Explicit).unwrap();
    println!("J2 J3 = J3 J2: {}", &j2 * &j3 == &j3 * &j2);

    let w = BasisWord::new(vec![1, 0, 1], yokonuma_hecke::algebra::Permutation::from_one_line(&[2, 3, 1]).unwrap());
    let b = AlgebraElement::basis(d, w.clone());
    let dual = AlgebraElement::basis(d, w.dual(d));
    println!("b = {}, dual = {}, tau(dual b) = {}", w, w.dual(d), (&dual * &b).tau());
    println!("{}", serde_json::to_string(&e1).unwrap());
}
