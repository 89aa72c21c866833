//! Library side of the `hepta` command-line tool: band-file parsing and the
//! subcommand implementations.

pub mod band_file;
pub mod commands;
pub mod error;
pub mod io;

pub use band_file::{parse_band_file, parse_band_str, parse_vector_str, BandFile, InputMatrix};
pub use commands::{Family, ModeArg};
pub use error::CliError;
