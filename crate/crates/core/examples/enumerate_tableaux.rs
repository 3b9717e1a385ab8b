//! d-partitions, standard d-tableaux and content arrays.

use yokonuma_hecke::combinatorics::{all_standard_dtableaux, enumerate_dpartitions, enumerate_standard_dtableaux, ContentArray};

fn main() {
    let (d, n) = (2, 3);
    let mut squares = 0;
    for shape in enumerate_dpartitions(d, n) {
        let count = enumerate_standard_dtableaux(&shape).len();
        squares += count * count;
        println!("{:<16} {} tableaux", shape.to_string(), count);
    }
    println!("sum of squares = {} = 2^3 * 3!", squares);

    for t in all_standard_dtableaux(d, 2) {
        let a = ContentArray::from_tableau(&t).unwrap();
        println!("{}  positions {:?}  contents {:?}", t, a.positions, a.content_exps);
        assert_eq!(a.to_tableau(d).unwrap(), t);
    }
}
