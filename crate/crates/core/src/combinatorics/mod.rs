//! d-partitions, standard d-tableaux and content arrays.

mod content;
mod partition;
mod tableau;

pub use content::ContentArray;
pub use partition::{enumerate_dpartitions, partitions_of, DNode, DPartition, Partition};
pub use tableau::{all_standard_dtableaux, enumerate_standard_dtableaux, DTableau};

/// Every content array of size n, in canonical tableau order.
pub fn enumerate_content_arrays(d: usize, n: usize) -> Vec<ContentArray> {
    all_standard_dtableaux(d, n)
        .iter()
        .map(|t| ContentArray::from_tableau(t).expect("standard tableau"))
        .collect()
}
