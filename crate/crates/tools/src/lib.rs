//! File formats, Graphviz export, lattice catalogs, parallel verification
//! suites and the `sps` command line, on top of `sps-core`.

pub mod catalog;
pub mod cli;
pub mod dot;
pub mod error;
pub mod io;
pub mod suite;

pub use error::{CliError, IoError};
pub use io::{from_json, load, save, to_json};
