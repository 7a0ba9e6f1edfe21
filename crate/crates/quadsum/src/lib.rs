//! Std companion to `quadsum-core`: sharded range verification, OEIS b-file
//! handling, JSON witness records and the `quadsum` command line.

pub mod cli;
pub mod error;
pub mod json;
pub mod oeis;
pub mod verify;

pub use error::{Error, Result};
