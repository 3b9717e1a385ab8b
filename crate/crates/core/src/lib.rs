pub mod algebra;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod idempotents;
pub mod linalg;
pub mod report;
pub mod representations;
pub mod roots;
pub mod schur;
pub mod scalars;

pub use error::{Error, Result};
