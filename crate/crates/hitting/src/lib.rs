//! Std companion to `hitting-core`: JSON instance and solution files, the
//! sentence-corpus front end, and the `hitting` command line tool.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod format;

pub use error::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;
