//! Sums of four squares (and relatives) with polynomial side constraints:
//! exact arithmetic, a brute-force witness engine, constructive decomposers
//! and a registry of the statements checked by the `quadsum` tool.
#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod arith;
pub mod constructive;
pub mod error;
pub mod forms;
pub mod poly;
pub mod prime;
pub mod statements;
pub mod ternary;

pub use error::{Error, Result};
pub use forms::{
    count_witnesses, enumerate_witnesses, find_witness, validate_witness, Statement, TargetSet,
    Witness,
};
pub use statements::{lookup, registry, StatementRecord};
