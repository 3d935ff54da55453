pub mod algebra;
pub mod auslander;
pub mod cli;
pub mod error;
pub mod exactstruct;
pub mod functorcat;
pub mod linalg;
pub mod report;

pub use error::{Error, Result};
pub mod repmod;
