pub mod error;
pub mod exactnum;
pub mod liealg;
pub mod catalog;
pub mod homogeneous;
pub mod invariants;
pub mod spaces;
pub mod flowcheck;

pub use error::{Error, Result};
