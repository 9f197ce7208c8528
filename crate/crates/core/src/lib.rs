pub mod cli;
pub mod complex;
pub mod error;
pub mod hochster;
pub mod homology;
pub mod spaces;

pub use error::{Error, Result};
