//! The irreducible representation of a d-partition on standard tableaux.

use yokonuma_hecke::combinatorics::DPartition;
use yokonuma_hecke::representations::Representation;

fn main() {
    let shape = DPartition::from_parts(&[&[2, 1], &[1]]).unwrap();
    let rep = Representation::build(&shape).unwrap();
    println!("V{} has dimension {}", shape, rep.dim());
    for (i, t) in rep.tableaux().iter().enumerate() {
        println!("  v{} = {}", i + 1, t);
    }
    for i in 1..rep.n() {
        print!("g{}:\n{}", i, rep.g_matrix(i));
    }
    for (i, j) in rep.jm_matrices().iter().enumerate() {
        let diag: Vec<String> = j.diagonal_entries().iter().map(|x| x.to_string()).collect();
        println!("J{} = diag({})", i + 1, diag.join(", "));
    }
    print!("{}", rep.verify_relations());
}
