//! JSON interchange, a theorem-checking harness and the command-line
//! front end for `hyperprod-core`.

pub mod cli;
pub mod harness;
pub mod json;

pub use hyperprod_core as core;
