//! Command-line front end for the hallk workbench. The binary is a thin
//! wrapper around [`run`], which is also the entry point the test suites
//! drive directly.

mod commands;
pub mod parse;
pub mod render;

pub use commands::{run, EXIT_NOT_PROVED, EXIT_OK, EXIT_USAGE};
