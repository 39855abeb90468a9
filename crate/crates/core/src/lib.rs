pub mod cli;
pub mod error;
pub mod exact;
pub mod interval;
pub mod lang;
pub mod prove;
pub mod series;

pub use error::{Error, Result};
