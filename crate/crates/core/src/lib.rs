pub mod closedform;
pub mod error;
pub mod exactnum;
pub mod hurwitz;
pub mod quad;
pub mod rstirling;
pub mod series;
mod sum;

pub use error::{Error, Result};
