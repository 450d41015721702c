//! Exact construction and verification of controlled chain homotopies in the
//! Moore complex of the bar construction.

pub mod bounds;
pub mod cli;
pub mod cylinder;
pub mod error;
pub mod group_alg;
pub mod homotopy;
pub mod json;
pub mod moore;
pub mod shuffle_ez;

pub use error::{Error, Result};
