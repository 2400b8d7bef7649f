//! Command-line front end for `symkron`: an expression language for
//! symmetric functions, one subcommand per library operation, and the
//! verification suites.

pub mod app;
pub mod expr;
pub mod text;
pub mod verify;

pub use app::{run, Cli, CliError};
pub use expr::{evaluate, parse, Expression, ParseError};
pub use verify::{run_verify, Report, RunConfig, Suite};
