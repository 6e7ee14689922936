pub mod error;
pub mod field;
pub mod heights;
pub mod interval;
pub mod poly;
pub mod roots;
pub mod theorem;
pub mod units;

pub use error::{Error, Result};
