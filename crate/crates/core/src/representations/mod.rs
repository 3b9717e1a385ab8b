//! Irreducible representations of Y_{d,n}(q) on standard tableaux, their
//! characters and branching, and the Ŷ_{d,2} fixtures.

mod affine;
mod analysis;
mod seminormal;

pub use affine::{AffineFamily, AffineY2Rep};
pub use analysis::{branching_check, character_table_row, commutant_dimension, jm_separation_check};
pub use seminormal::{all_representations, Representation};

#[cfg(test)]
mod tests;
